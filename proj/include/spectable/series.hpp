#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectable/polynomial.hpp"

namespace spectable {

/// Truncated power series; coefficients[n] is the coefficient of lambda^n.
struct PowerSeries {
    std::vector<Cyclotomic> coefficients;

    int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
    bool is_rational() const;
    std::vector<Rational> rationals() const;
    /// Throws unless every coefficient is a non-negative integer.
    std::vector<long> counts() const;

    PowerSeries& operator+=(const PowerSeries& rhs);
};

struct RationalFunction {
    Polynomial numerator;
    Polynomial denominator;

    /// Cancels the monic gcd and scales so the denominator's constant term is 1.
    RationalFunction reduced() const;
    std::string to_string(const std::string& var = "x") const;
};

/// Expands N/D through degree n_max; D(0) must be non-zero.
PowerSeries series_expand(const RationalFunction& f, int n_max);

/// Closed form numerator / prod_i (1 - x^{d_i}) with non-negative numerator.
struct PositiveForm {
    std::vector<Rational> numerator;
    std::vector<int> degrees;  // ascending

    std::string to_string(const std::string& var = "x") const;
};

/// Factors of a rational polynomial into cyclotomic polynomials Phi_k;
/// returns nullopt if anything other than a constant remains.
std::optional<std::map<int, int>> cyclotomic_factorization(const Polynomial& p, int max_index);

/// Searches for a positive form of a reduced rational function with rational
/// coefficients and D(0) = 1. Factor degrees are drawn from 1..max_degree,
/// smallest total degree first.
std::optional<PositiveForm> find_positive_form(const RationalFunction& reduced, int max_degree);

// ---------------------------------------------------------------------------
// Multigraded series in formal variables lambda_1..lambda_k.

using MultiIndex = std::vector<int>;

/// All exponent tuples of `vars` non-negative entries with total degree <= n_max,
/// ordered by total degree, then lexicographically descending (lambda_1 first).
std::vector<MultiIndex> multi_indices(int vars, int n_max);

struct MultiSeries {
    int vars = 0;
    int n_max = 0;
    std::map<MultiIndex, Rational> coefficients;

    Rational at(const MultiIndex& index) const;
    /// Sets every variable equal, collecting total degrees 0..n_max.
    std::vector<Rational> specialize() const;
};

/// Sum of terms weight / prod_b D_b(lambda_b), kept factored per block.
struct MultigradedFunction {
    struct Term {
        Cyclotomic weight;
        std::vector<Polynomial> block_denominators;
    };
    int vars = 0;
    std::vector<Term> terms;

    MultiSeries expand(int n_max) const;
    std::string to_string() const;
};

}  // namespace spectable
