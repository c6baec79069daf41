#include "spectable/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace spectable {

Polynomial::Polynomial(int order, std::vector<Cyclotomic> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_)
        if (c.order() != order_) c = c.order() == 1 ? Cyclotomic(order_, c.to_rational()) : c.embed(order_);
    trim();
}

Polynomial Polynomial::constant(const Cyclotomic& c) { return Polynomial(c.order(), {c}); }

Polynomial Polynomial::from_rationals(const std::vector<Rational>& coeffs) {
    std::vector<Cyclotomic> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.emplace_back(1, r);
    return Polynomial(1, std::move(c));
}

Polynomial Polynomial::one_minus_power(int d) {
    std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
    c[0] = 1;
    c[static_cast<size_t>(d)] -= 1;
    return from_rationals(c);
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Cyclotomic Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return Cyclotomic(order_);
    return coeffs_[static_cast<size_t>(i)];
}

bool Polynomial::is_rational() const {
    for (const auto& c : coeffs_)
        if (!c.is_rational()) return false;
    return true;
}

std::vector<Rational> Polynomial::rational_coefficients() const {
    std::vector<Rational> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(c.to_rational());
    return r;
}

Polynomial Polynomial::embed(int order) const {
    std::vector<Cyclotomic> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.embed(order));
    return Polynomial(order, std::move(c));
}

Polynomial Polynomial::scaled(const Cyclotomic& s) const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    r.trim();
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.order_ != order_ && order_ == 1 && is_zero()) order_ = rhs.order_;
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Cyclotomic(order_));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.order_ != order_ && order_ == 1 && is_zero()) order_ = rhs.order_;
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Cyclotomic(order_));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const int order = a.order_ == 1 ? b.order_ : a.order_;
    if (a.is_zero() || b.is_zero()) return Polynomial(order);
    std::vector<Cyclotomic> c(a.coeffs_.size() + b.coeffs_.size() - 1, Cyclotomic(order));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(order, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const int order = order_ == 1 ? divisor.order_ : order_;
    Polynomial remainder = *this;
    remainder.order_ = order;
    for (auto& c : remainder.coeffs_)
        if (c.order() != order) c = c.embed(order);
    const int dd = divisor.degree();
    if (remainder.degree() < dd) return {Polynomial(order), remainder};
    std::vector<Cyclotomic> q(static_cast<size_t>(remainder.degree() - dd + 1), Cyclotomic(order));
    const Cyclotomic lead_inv = divisor.leading().inverse();
    while (!remainder.is_zero() && remainder.degree() >= dd) {
        const int shift = remainder.degree() - dd;
        const Cyclotomic factor = remainder.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = factor;
        for (int i = 0; i <= dd; ++i) {
            const auto& dc = divisor.coeffs_[static_cast<size_t>(i)];
            if (dc.is_zero()) continue;
            remainder.coeffs_[static_cast<size_t>(i + shift)] -= factor * dc;
        }
        // the leading term cancels exactly
        remainder.coeffs_.back() = Cyclotomic(order);
        remainder.trim();
    }
    return {Polynomial(order, std::move(q)), remainder};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const auto& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string mono;
        if (i == 1)
            mono = var;
        else if (i > 1)
            mono = var + "^" + std::to_string(i);
        if (c.is_rational()) {
            const Rational v = c.to_rational();
            const bool neg = v < 0;
            const Rational mag = abs(v);
            if (!first || neg) out << (neg ? "-" : "+");
            if (mono.empty())
                out << mag.get_str();
            else if (mag == 1)
                out << mono;
            else
                out << mag.get_str() << "*" << mono;
        } else {
            if (!first) out << "+";
            out << "(" << c.to_string() << ")";
            if (!mono.empty()) out << "*" << mono;
        }
        first = false;
    }
    return out.str();
}

}  // namespace spectable
