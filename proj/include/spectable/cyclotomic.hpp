#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace spectable {

using Rational = mpq_class;
using Integer = mpz_class;

int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int n);

/// Shared reduction data for Q(zeta_N). Instances are created once per order and
/// never mutated afterwards, so references stay valid for the program lifetime.
class CyclotomicField {
public:
    static const CyclotomicField& get(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }

    /// zeta^k in the power basis 1, zeta, ..., zeta^(degree-1); k is taken mod N.
    struct Term {
        int index;
        long coeff;
    };
    std::span<const Term> power(long k) const;

private:
    explicit CyclotomicField(int order);

    int order_;
    int degree_;
    std::vector<std::vector<Term>> powers_;
};

/// Exact element of Q(zeta_N) in canonical reduced form.
///
/// Two values of the same order are equal iff their coefficient vectors are
/// equal. Binary operations require equal orders; the only implicit promotion
/// is from order 1 (plain rationals).
class Cyclotomic {
public:
    Cyclotomic();
    explicit Cyclotomic(int order);
    Cyclotomic(int order, const Rational& value);
    Cyclotomic(int order, long value) : Cyclotomic(order, Rational(value)) {}

    static Cyclotomic root(int order, long k);

    /// Parses the literal syntax `c*zK^k + ...` where K divides `order`.
    static Cyclotomic parse(std::string_view text, int order);

    int order() const { return order_; }
    std::span<const Rational> coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational to_rational() const;

    Cyclotomic conj() const;
    Cyclotomic galois(long k) const;
    Cyclotomic inverse() const;
    Cyclotomic embed(int order) const;
    std::optional<Cyclotomic> restrict_to(int order) const;

    std::complex<double> to_complex() const;
    std::string to_string() const;

    /// Lowest common multiple of the coefficient denominators.
    Integer denominator() const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Rational& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
    friend Cyclotomic operator*(const Rational& a, Cyclotomic b) { return b *= a; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Deterministic total order: by order, then coefficients lexicographically.
    friend int compare(const Cyclotomic& a, const Cyclotomic& b);

private:
    int order_;
    std::vector<Rational> coeffs_;
};

/// Common order of two values (their lcm when they differ).
int common_order(int a, int b);

}  // namespace spectable
