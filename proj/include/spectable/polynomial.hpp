#pragma once

#include <string>
#include <vector>

#include "spectable/cyclotomic.hpp"

namespace spectable {

/// Dense univariate polynomial in lambda with coefficients in Q(zeta_N).
class Polynomial {
public:
    explicit Polynomial(int order = 1) : order_(order) {}
    Polynomial(int order, std::vector<Cyclotomic> coeffs);
    static Polynomial constant(const Cyclotomic& c);
    static Polynomial from_rationals(const std::vector<Rational>& coeffs);
    /// 1 - lambda^d over Q.
    static Polynomial one_minus_power(int d);

    int order() const { return order_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Cyclotomic>& coefficients() const { return coeffs_; }
    Cyclotomic coeff(int i) const;
    Cyclotomic leading() const { return coeff(degree()); }

    bool is_rational() const;
    std::vector<Rational> rational_coefficients() const;

    Polynomial embed(int order) const;
    Polynomial scaled(const Cyclotomic& c) const;
    Polynomial monic() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    struct DivMod;
    DivMod divmod(const Polynomial& divisor) const;

    /// Renders with rational coefficients, e.g. `1+x+x^2`; non-rational
    /// coefficients are wrapped in parentheses.
    std::string to_string(const std::string& var = "x") const;

private:
    int order_;
    std::vector<Cyclotomic> coeffs_;
    void trim();
};

struct Polynomial::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Monic greatest common divisor over Q(zeta_N).
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace spectable
