#pragma once

#include <map>
#include <string>
#include <vector>

#include "spectable/catalog.hpp"
#include "spectable/parallel.hpp"
#include "spectable/series.hpp"

namespace spectable {

/// Exponent tuples of m variables summing to n, lexicographically descending
/// (x_1^n first).
struct MonomialBasis {
    int vars = 0;
    int degree = 0;
    std::vector<MultiIndex> monomials;
    std::map<MultiIndex, size_t> index;

    MonomialBasis(int vars, int degree);
    size_t size() const { return monomials.size(); }
};

/// Matrix of the substitution x_j -> sum_i A_ij x_i on degree-n monomials.
/// Column v holds the image of monomial v, so (AB)^n = A^n B^n.
Matrix symmetric_power_rep(const Matrix& a, int n);

/// trace(A^n) for n = 0..n_max, built degree by degree.
std::vector<Cyclotomic> symmetric_power_traces(const Matrix& a, int n_max);

/// f_n = (1/|G|) sum_i conj(chi_y(g_i)) trace(A_i^n), summed over elements.
std::vector<long> projector_trace_table(const FiniteGroup& group, const CharacterTable& table,
                                        const Representation& rep, const std::string& irrep, int n_max,
                                        Execution ex = Execution::parallel);

/// Projector traces for every irrep: result[y][n].
std::vector<std::vector<long>> projector_trace_columns(const FiniteGroup& group, const CharacterTable& table,
                                                       const Representation& rep, int n_max,
                                                       Execution ex = Execution::parallel);

struct ProjectorMatrix {
    int degree = 0;
    std::string irrep;
    size_t irrep_dim = 0;
    Matrix matrix;  // (1/|G|) sum_i conj(chi) A_i^n

    /// trace(P), the multiplicity of the irrep.
    Cyclotomic trace() const { return matrix.trace(); }
    /// dim * P
    Matrix idempotent() const;
    bool is_scaled_idempotent() const;
};

ProjectorMatrix projector_matrix(const FiniteGroup& group, const CharacterTable& table, const Representation& rep,
                                 const std::string& irrep, int n, Execution ex = Execution::parallel);

struct IdentityReport {
    std::vector<Cyclotomic> expansion;  // of 1/det(I - A lambda)
    std::vector<Cyclotomic> traces;     // trace(A^n)
    std::vector<int> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Termwise check of 1/det(I - A lambda) = sum_n trace(A^n) lambda^n.
IdentityReport molien_identity_check(const Matrix& a, int n_max);

/// chi^j(theta) = sum_{m=-j..j} exp(i m theta) with theta = angle * pi.
/// Requires 4q | order where angle = p/q.
Cyclotomic rotation_character(const Rational& j, const Rational& angle, int order);

struct CharacterFormulaTable {
    std::string group;
    std::vector<Rational> j;  // rows
    std::vector<std::string> irreps;
    std::vector<std::vector<long>> counts;  // [irrep][row]
};

/// f_j(y) = (1/|G|) sum_c |c| chi^j(theta_c) conj(chi_y(c)). Rows step by 1/2
/// when the group contains -I, else by 1.
CharacterFormulaTable character_formula_table(const FiniteGroup& group, const CharacterTable& table,
                                              const Rational& j_max, Execution ex = Execution::parallel);

/// Molien columns vs projector traces for every irrep through n_max, and,
/// when the representation is a faithful two-dimensional spinor one with
/// class angles, vs the character formula at n = 2j. One line per mismatch.
std::vector<std::string> three_way_agreement(const FiniteGroup& group, const CharacterTable& table,
                                             const Representation& rep, int n_max,
                                             Execution ex = Execution::parallel);

}  // namespace spectable
