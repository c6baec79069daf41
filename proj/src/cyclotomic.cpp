#include "spectable/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spectable {

int euler_phi(int n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: order must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> cyclotomic_polynomial(int n) {
    if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> poly(static_cast<size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto divisor = cyclotomic_polynomial(d);
        const size_t dd = divisor.size() - 1;
        std::vector<long> quotient(poly.size() - dd, 0);
        for (size_t i = poly.size() - 1; i + 1 > dd; --i) {
            const long q = poly[i];  // divisor is monic
            quotient[i - dd] = q;
            if (q != 0)
                for (size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= q * divisor[j];
            if (i == dd) break;
        }
        poly = std::move(quotient);
    }
    return poly;
}

int common_order(int a, int b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------

const CyclotomicField& CyclotomicField::get(int order) {
    // per-thread front cache avoids the lock on the hot path
    thread_local int last_order = 0;
    thread_local const CyclotomicField* last = nullptr;
    if (order == last_order) return *last;
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> registry;
    std::lock_guard lock(mutex);
    auto it = registry.find(order);
    if (it == registry.end())
        it = registry.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
    last_order = order;
    last = it->second.get();
    return *last;
}

CyclotomicField::CyclotomicField(int order) : order_(order), degree_(euler_phi(order)) {
    const auto phi = cyclotomic_polynomial(order);
    powers_.resize(static_cast<size_t>(order));
    std::vector<long> current(static_cast<size_t>(degree_), 0);
    current[0] = 1;
    for (int k = 0; k < order; ++k) {
        auto& terms = powers_[static_cast<size_t>(k)];
        for (int i = 0; i < degree_; ++i)
            if (current[static_cast<size_t>(i)] != 0) terms.push_back({i, current[static_cast<size_t>(i)]});
        // multiply by zeta, folding zeta^degree = -sum phi_i zeta^i
        const long top = current[static_cast<size_t>(degree_ - 1)];
        for (int i = degree_ - 1; i > 0; --i) current[static_cast<size_t>(i)] = current[static_cast<size_t>(i - 1)];
        current[0] = 0;
        if (top != 0)
            for (int i = 0; i < degree_; ++i) current[static_cast<size_t>(i)] -= top * phi[static_cast<size_t>(i)];
    }
}

std::span<const CyclotomicField::Term> CyclotomicField::power(long k) const {
    long r = k % order_;
    if (r < 0) r += order_;
    return powers_[static_cast<size_t>(r)];
}

// ---------------------------------------------------------------------------

namespace {

void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("cyclotomic orders differ (" + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + "); embed into a common order first");
}

// Solves M x = rhs over Q; returns nullopt when inconsistent. M is rows x cols, row-major.
std::optional<std::vector<Rational>> solve_rational(std::vector<Rational> m, std::vector<Rational> rhs, size_t rows,
                                                    size_t cols) {
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (size_t j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[r * cols + j]);
            std::swap(rhs[p], rhs[r]);
        }
        const Rational inv = 1 / m[r * cols + c];
        for (size_t j = c; j < cols; ++j) m[r * cols + j] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i * cols + c] == 0) continue;
            const Rational f = m[i * cols + c];
            for (size_t j = c; j < cols; ++j) m[i * cols + j] -= f * m[r * cols + j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols, 0);
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

}  // namespace

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(int order) : order_(order) {
    if (order <= 0) throw std::invalid_argument("cyclotomic order must be positive");
    coeffs_.assign(static_cast<size_t>(CyclotomicField::get(order).degree()), Rational(0));
}

Cyclotomic::Cyclotomic(int order, const Rational& value) : Cyclotomic(order) { coeffs_[0] = value; }

Cyclotomic Cyclotomic::root(int order, long k) {
    Cyclotomic r(order);
    for (const auto& t : CyclotomicField::get(order).power(k)) r.coeffs_[static_cast<size_t>(t.index)] = t.coeff;
    return r;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value " + to_string() + " is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(long k) const {
    if (std::gcd(k, static_cast<long>(order_)) != 1)
        throw std::invalid_argument("galois exponent must be coprime to the order");
    const auto& field = CyclotomicField::get(order_);
    Cyclotomic r(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (const auto& t : field.power(static_cast<long>(i) * k)) r.coeffs_[static_cast<size_t>(t.index)] += coeffs_[i] * t.coeff;
    }
    return r;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::embed(int order) const {
    if (order == order_) return *this;
    if (order % order_ != 0)
        throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                    std::to_string(order) + ")");
    const auto& field = CyclotomicField::get(order);
    const long step = order / order_;
    Cyclotomic r(order);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (const auto& t : field.power(static_cast<long>(i) * step)) r.coeffs_[static_cast<size_t>(t.index)] += coeffs_[i] * t.coeff;
    }
    return r;
}

std::optional<Cyclotomic> Cyclotomic::restrict_to(int order) const {
    if (order == order_) return *this;
    if (is_rational()) return Cyclotomic(order, coeffs_[0]);
    if (order_ % order != 0) {
        const int common = common_order(order_, order);
        return embed(common).restrict_to(order);
    }
    const size_t rows = coeffs_.size();
    const size_t cols = static_cast<size_t>(CyclotomicField::get(order).degree());
    std::vector<Rational> m(rows * cols, Rational(0));
    for (size_t j = 0; j < cols; ++j) {
        const auto basis = Cyclotomic::root(order, static_cast<long>(j)).embed(order_);
        for (size_t i = 0; i < rows; ++i) m[i * cols + j] = basis.coeffs_[i];
    }
    auto x = solve_rational(std::move(m), coeffs_, rows, cols);
    if (!x) return std::nullopt;
    Cyclotomic r(order);
    r.coeffs_ = std::move(*x);
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inversion of zero in Q(zeta_" + std::to_string(order_) + ")");
    if (is_rational()) return Cyclotomic(order_, 1 / coeffs_[0]);
    // columns of the multiplication-by-this matrix are this * zeta^j
    const size_t n = coeffs_.size();
    std::vector<Rational> m(n * n, Rational(0));
    const auto zeta = Cyclotomic::root(order_, 1);
    Cyclotomic column = *this;
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) m[i * n + j] = column.coeffs_[i];
        column = column * zeta;
    }
    std::vector<Rational> rhs(n, Rational(0));
    rhs[0] = 1;
    auto x = solve_rational(std::move(m), std::move(rhs), n, n);
    Cyclotomic r(order_);
    r.coeffs_ = std::move(*x);
    return r;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> sum = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        sum += coeffs_[i].get_d() * std::polar(1.0, angle);
    }
    return sum;
}

Integer Cyclotomic::denominator() const {
    Integer d = 1;
    for (const auto& c : coeffs_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    return d;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        if (i == 0)
            out << mag.get_str();
        else if (mag == 1)
            out << 'z' << order_ << '^' << i;
        else
            out << mag.get_str() << "*z" << order_ << '^' << i;
        first = false;
    }
    return first ? std::string("0") : out.str();
}

Cyclotomic Cyclotomic::parse(std::string_view text, int order) {
    std::string s;
    for (size_t i = 0; i < text.size(); ++i) {
        const unsigned char ch = static_cast<unsigned char>(text[i]);
        if (std::isspace(ch)) continue;
        // U+2212 MINUS SIGN
        if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s.push_back('-');
            i += 2;
            continue;
        }
        s.push_back(static_cast<char>(ch));
    }
    auto fail = [&](const std::string& why) -> std::invalid_argument {
        return std::invalid_argument("bad cyclotomic literal '" + std::string(text) + "': " + why);
    };
    if (s.empty()) throw fail("empty");

    Cyclotomic result(order);
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw fail("expected + or -");
        }
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            if (s[end] == '^' && end + 1 < s.size() && s[end + 1] == '-') ++end;  // negative exponent
            ++end;
        }
        const std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw fail("empty term");
        pos = end;

        Rational coeff = 1;
        std::string root_part;
        const auto star = term.find('*');
        if (star != std::string::npos) {
            root_part = term.substr(star + 1);
            if (root_part.empty()) throw fail("missing root after '*'");
            try {
                coeff = Rational(term.substr(0, star));
            } catch (const std::exception&) {
                throw fail("bad coefficient");
            }
        } else if (term[0] == 'z') {
            root_part = term;
        } else {
            try {
                coeff = Rational(term);
            } catch (const std::exception&) {
                throw fail("bad rational");
            }
        }
        coeff.canonicalize();
        coeff *= sign;
        if (root_part.empty()) {
            result.coeffs_[0] += coeff;
            continue;
        }
        if (root_part[0] != 'z') throw fail("expected zN^k");
        const auto caret = root_part.find('^');
        int root_order = 0;
        long exponent = 1;
        try {
            root_order = std::stoi(root_part.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
            if (caret != std::string::npos) exponent = std::stol(root_part.substr(caret + 1));
        } catch (const std::exception&) {
            throw fail("bad root");
        }
        if (root_order <= 0 || order % root_order != 0)
            throw fail("root order " + std::to_string(root_order) + " does not divide " + std::to_string(order));
        const long scaled = exponent * (order / root_order);
        for (const auto& t : CyclotomicField::get(order).power(scaled))
            result.coeffs_[static_cast<size_t>(t.index)] += coeff * t.coeff;
    }
    return result;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (rhs.order_ == 1 && order_ != 1) {
        coeffs_[0] += rhs.coeffs_[0];
        return *this;
    }
    if (order_ == 1 && rhs.order_ != 1) {
        const Rational v = coeffs_[0];
        *this = rhs;
        coeffs_[0] += v;
        return *this;
    }
    require_same_order(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (rhs.coeffs_[i] != 0) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_)
        if (c != 0) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
    if (rhs == 0) {
        for (auto& c : coeffs_) c = 0;
        return *this;
    }
    for (auto& c : coeffs_)
        if (c != 0) c *= rhs;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    *this = *this * rhs;
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (b.is_rational() && (b.order_ == a.order_ || b.order_ == 1)) {
        Cyclotomic r = a;
        return r *= b.coeffs_[0];
    }
    if (a.is_rational() && (a.order_ == b.order_ || a.order_ == 1)) {
        Cyclotomic r = b;
        return r *= a.coeffs_[0];
    }
    require_same_order(a, b);
    const auto& field = CyclotomicField::get(a.order_);
    const size_t n = a.coeffs_.size();
    const size_t order = static_cast<size_t>(a.order_);
    // Work over integers with one common denominator per operand so the
    // inner loop needs no gcd.
    const auto scale = [n](const std::vector<Rational>& c, Integer& den, std::vector<Integer>& num) {
        den = 1;
        for (const auto& x : c)
            if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        num.resize(n);
        for (size_t i = 0; i < n; ++i) {
            if (c[i] == 0) {
                num[i] = 0;
                continue;
            }
            mpz_divexact(num[i].get_mpz_t(), den.get_mpz_t(), c[i].get_den_mpz_t());
            num[i] *= c[i].get_num();
        }
    };
    Integer da, db;
    std::vector<Integer> na, nb;
    scale(a.coeffs_, da, na);
    scale(b.coeffs_, db, nb);
    std::vector<Integer> acc(std::min(2 * n - 1, order));
    for (size_t i = 0; i < n; ++i) {
        if (na[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (nb[j] == 0) continue;
            size_t k = i + j;
            if (k >= order) k -= order;
            mpz_addmul(acc[k].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
        }
    }
    std::vector<Integer> out(n);
    for (size_t k = 0; k < acc.size(); ++k) {
        if (acc[k] == 0) continue;
        if (k < n) {
            out[k] += acc[k];
            continue;
        }
        for (const auto& t : field.power(static_cast<long>(k))) {
            mpz_ptr dst = out[static_cast<size_t>(t.index)].get_mpz_t();
            if (t.coeff >= 0)
                mpz_addmul_ui(dst, acc[k].get_mpz_t(), static_cast<unsigned long>(t.coeff));
            else
                mpz_submul_ui(dst, acc[k].get_mpz_t(), static_cast<unsigned long>(-t.coeff));
        }
    }
    const Integer den = da * db;
    Cyclotomic r(a.order_);
    for (size_t k = 0; k < n; ++k) {
        if (out[k] == 0) continue;
        mpq_set_num(r.coeffs_[k].get_mpq_t(), out[k].get_mpz_t());
        mpq_set_den(r.coeffs_[k].get_mpq_t(), den.get_mpz_t());
        r.coeffs_[k].canonicalize();
    }
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) {
        if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
        const int common = common_order(a.order_, b.order_);
        return a.embed(common).coeffs_ == b.embed(common).coeffs_;
    }
    return a.coeffs_ == b.coeffs_;
}

int compare(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

}  // namespace spectable
