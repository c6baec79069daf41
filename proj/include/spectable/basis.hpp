#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spectable/catalog.hpp"
#include "spectable/cyclotomic.hpp"
#include "spectable/parallel.hpp"

namespace spectable {

/// (j, m) = ((n1 + n2) / 2, (n1 - n2) / 2).
std::pair<Rational, Rational> jordan_schwinger(long n1, long n2);
/// Inverse map: (n1, n2) = (j + m, j - m).
std::pair<long, long> occupations(const Rational& j, const Rational& m);

/// Relative phase between the two monomials of a state.
enum class Phase { plus_one, minus_one, plus_i, minus_i, zero };

std::string phase_string(Phase p);
Cyclotomic phase_value(Phase p);  // in Q(i)

/// (a1 a2)^(j-m) (a1^(2m) + chi a2^(2m)), unnormalized, with its label.
struct LabeledState {
    Rational j;
    Rational m;
    Phase chi = Phase::zero;
    std::string label;
    /// Coefficients over monomials a1^(2j-k) a2^k, k = 0..2j.
    std::vector<Cyclotomic> coefficients;
};

/// Irrep of the binary dihedral group of order 12 carried by |j, m, chi>.
std::string state_label(const Rational& j, const Rational& m, Phase chi);

LabeledState make_state(const Rational& j, const Rational& m, Phase chi);

/// All states with j <= j_max: m from j down to 0, chi = +-1 (or +-i when
/// 2m = 3 mod 6), chi = 0 at m = 0.
std::vector<LabeledState> enumerate_basis(const Rational& j_max);

/// Fock inner product: a1^p a2^q has squared norm p! q!.
Cyclotomic fock_inner(const LabeledState& a, const LabeledState& b);

/// True when dim * P fixes the state, P the degree-2j projector of its label.
bool verify_covariance(const LabeledState& state, const GroupData& group);

struct BasisReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Per j: 2j+1 states, full rank, pairwise Fock-orthogonal, monomials of a
/// state share |n1 - n2|, and every state is covariant.
BasisReport verify_basis(const Rational& j_max, const GroupData& group, Execution ex = Execution::parallel);

/// Multiplets per (j, irrep), doublets counted once, against f_(2j).
BasisReport count_check(const Rational& j_max, const GroupData& group, Execution ex = Execution::parallel);

}  // namespace spectable
