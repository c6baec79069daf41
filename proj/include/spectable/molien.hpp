#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectable/catalog.hpp"
#include "spectable/parallel.hpp"
#include "spectable/series.hpp"

namespace spectable {

constexpr int kDefaultMaxDegree = 24;
/// Largest factor degree tried when searching positive closed forms.
constexpr int kPositiveFormSearch = 60;

/// det(I - A_c lambda) and its expansion for every class c.
struct ClassTerms {
    std::vector<Polynomial> denominators;
    std::vector<PowerSeries> expansions;  // 1/denominator through n_max
};

ClassTerms molien_class_terms(const FiniteGroup& group, const Representation& rep, int n_max,
                              Execution ex = Execution::parallel);

struct MolienSeries {
    std::string irrep;
    PowerSeries series;
    std::vector<long> counts;
    std::optional<RationalFunction> closed_form;  // reduced
    std::optional<PositiveForm> positive;
    /// Positive form when found, else the reduced rational function.
    std::string closed_form_text(const std::string& var = "x") const;
};

/// Class-weighted Molien sum (1/|G|) sum_c |c| conj(chi_y(c)) / det(I - A_c lambda).
MolienSeries molien_series(const FiniteGroup& group, const CharacterTable& table, const Representation& rep,
                           const std::string& irrep, int n_max, bool closed_form = true,
                           Execution ex = Execution::parallel);

struct CorrelationColumn {
    std::string irrep;
    size_t dim = 0;
    bool spinor = false;
    std::vector<long> counts;
    std::string closed_form;  // empty if not requested
};

struct CorrelationTable {
    std::string group;
    std::string rep;
    size_t rep_dim = 0;
    bool rep_spinor = false;  // rep sends -I to -1
    int n_max = 0;
    std::vector<CorrelationColumn> columns;
};

CorrelationTable correlation_table(const FiniteGroup& group, const CharacterTable& table, const Representation& rep,
                                   int n_max, bool closed_forms = true, Execution ex = Execution::parallel);

/// True if the group contains -I and the representation sends it to -1.
bool sends_minus_identity_to_minus_one(const FiniteGroup& group, const Representation& rep);

/// sum_y dim(y) f_n(y) = C(n+m-1, m-1) at every degree.
std::vector<std::string> check_row_sums(const CorrelationTable& table);
/// For spinor reps: odd rows vanish on vector irreps, even rows on spinor irreps.
std::vector<std::string> check_parity(const CorrelationTable& table);

Integer binomial(long n, long k);

// ---------------------------------------------------------------------------

struct Block {
    std::string name;
    const Representation* rep;
};

/// Direct sum of block representations, element by element.
Representation direct_sum(const std::vector<Block>& blocks);

/// Per-class terms weight / prod_b det(I - A_c^(b) lambda_b) for one irrep.
MultigradedFunction multigraded_function(const FiniteGroup& group, const CharacterTable& table,
                                         const std::vector<Block>& blocks, const std::string& irrep);

struct MultigradedTable {
    std::string group;
    std::vector<std::string> blocks;
    int n_max = 0;
    std::vector<MultiIndex> indices;
    std::vector<std::string> irreps;
    std::vector<std::vector<long>> counts;  // [irrep][index]
    std::vector<std::string> closed_forms;
};

MultigradedTable combine_multigraded(const FiniteGroup& group, const CharacterTable& table,
                                     const std::vector<Block>& blocks, int n_max,
                                     Execution ex = Execution::parallel);

// ---------------------------------------------------------------------------

struct DInfTable {
    std::vector<Rational> j;  // rows 0, 1/2, ..., j_max
    std::vector<Rational> m;  // columns |m| = 0, 1/2, ..., j_max
    std::vector<std::vector<int>> f;
};

/// f(j, m) = 1 when j - |m| is a non-negative integer.
DInfTable so3_dinf_table(const Rational& j_max);

/// Parses `3`, `5/2` or `2.5` as a non-negative half-integer.
Rational parse_half_integer(const std::string& text);
std::string half_integer_string(const Rational& r);

}  // namespace spectable
