#include "spectable/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spectable {

bool PowerSeries::is_rational() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Cyclotomic& c) { return c.is_rational(); });
}

std::vector<Rational> PowerSeries::rationals() const {
    std::vector<Rational> r;
    r.reserve(coefficients.size());
    for (const auto& c : coefficients) r.push_back(c.to_rational());
    return r;
}

std::vector<long> PowerSeries::counts() const {
    std::vector<long> r;
    r.reserve(coefficients.size());
    for (size_t n = 0; n < coefficients.size(); ++n) {
        const auto& c = coefficients[n];
        if (!c.is_rational()) throw std::domain_error("series coefficient " + std::to_string(n) + " is not rational: " + c.to_string());
        const Rational v = c.to_rational();
        if (v.get_den() != 1 || v < 0 || !v.get_num().fits_slong_p())
            throw std::domain_error("series coefficient " + std::to_string(n) + " is not a non-negative integer: " +
                                    v.get_str());
        r.push_back(v.get_num().get_si());
    }
    return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    if (coefficients.size() < rhs.coefficients.size())
        coefficients.resize(rhs.coefficients.size(),
                            Cyclotomic(rhs.coefficients.empty() ? 1 : rhs.coefficients.front().order()));
    for (size_t i = 0; i < rhs.coefficients.size(); ++i) coefficients[i] += rhs.coefficients[i];
    return *this;
}

// ---------------------------------------------------------------------------

RationalFunction RationalFunction::reduced() const {
    if (denominator.is_zero()) throw std::domain_error("rational function with zero denominator");
    const Polynomial g = gcd(numerator, denominator);
    Polynomial num = numerator.divmod(g).quotient;
    Polynomial den = denominator.divmod(g).quotient;
    const Cyclotomic d0 = den.coeff(0);
    if (d0.is_zero()) return {num, den};
    const Cyclotomic s = d0.inverse();
    return {num.scaled(s), den.scaled(s)};
}

namespace {

std::string grouped(const Polynomial& p, const std::string& var) {
    size_t terms = 0;
    for (const auto& c : p.coefficients()) terms += c.is_zero() ? 0 : 1;
    const std::string s = p.to_string(var);
    return terms > 1 || (terms == 1 && s.find_first_of("+-", 1) != std::string::npos) ? "(" + s + ")" : s;
}

}  // namespace

std::string RationalFunction::to_string(const std::string& var) const {
    if (denominator.degree() == 0 && denominator.coeff(0).is_one()) return numerator.to_string(var);
    return grouped(numerator, var) + "/" + grouped(denominator, var);
}

PowerSeries series_expand(const RationalFunction& f, int n_max) {
    if (n_max < 0) throw std::invalid_argument("series_expand: negative truncation");
    const Cyclotomic d0 = f.denominator.coeff(0);
    if (d0.is_zero()) throw std::domain_error("series_expand: denominator vanishes at the origin");
    const int order = f.numerator.order() == 1 ? f.denominator.order() : f.numerator.order();
    const Cyclotomic d0_inv = d0.inverse();
    const int dd = f.denominator.degree();
    PowerSeries s;
    s.coefficients.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        Cyclotomic acc = f.numerator.coeff(n);
        if (acc.order() != order) acc = acc.embed(order);
        for (int k = 1; k <= std::min(n, dd); ++k) {
            const Cyclotomic dk = f.denominator.coeff(k);
            if (dk.is_zero()) continue;
            acc -= dk * s.coefficients[static_cast<size_t>(n - k)];
        }
        s.coefficients.push_back(acc * d0_inv);
    }
    return s;
}

// ---------------------------------------------------------------------------

std::optional<std::map<int, int>> cyclotomic_factorization(const Polynomial& p, int max_index) {
    if (p.is_zero() || !p.is_rational()) return std::nullopt;
    Polynomial rest = p;
    std::map<int, int> factors;
    for (int k = 1; k <= max_index && rest.degree() > 0; ++k) {
        const auto phi = cyclotomic_polynomial(k);
        if (static_cast<int>(phi.size()) - 1 > rest.degree()) continue;
        std::vector<Rational> c(phi.begin(), phi.end());
        const Polynomial factor = Polynomial::from_rationals(c);
        while (rest.degree() >= factor.degree()) {
            auto dm = rest.divmod(factor);
            if (!dm.remainder.is_zero()) break;
            rest = std::move(dm.quotient);
            ++factors[k];
        }
    }
    if (rest.degree() != 0) return std::nullopt;
    return factors;
}

namespace {

void multisets(int size, int lo, int hi, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    for (int d = lo; d <= hi; ++d) {
        current.push_back(d);
        multisets(size, d, hi, current, out);
        current.pop_back();
    }
}

}  // namespace

std::optional<PositiveForm> find_positive_form(const RationalFunction& f, int max_degree) {
    if (!f.numerator.is_rational() || !f.denominator.is_rational()) return std::nullopt;
    if (f.denominator.coeff(0) != Cyclotomic(1, 1)) return std::nullopt;
    const auto factors = cyclotomic_factorization(f.denominator, max_degree);
    if (!factors) return std::nullopt;
    const int poles = factors->count(1) ? factors->at(1) : 0;

    std::vector<std::vector<int>> candidates;
    std::vector<int> scratch;
    multisets(poles, 1, max_degree, scratch, candidates);
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });

    for (const auto& degrees : candidates) {
        bool covers = true;
        for (const auto& [k, mult] : *factors) {
            const auto hits = std::count_if(degrees.begin(), degrees.end(), [k = k](int d) { return d % k == 0; });
            if (hits < mult) {
                covers = false;
                break;
            }
        }
        if (!covers) continue;
        Polynomial product = Polynomial::from_rationals({Rational(1)});
        for (int d : degrees) product = product * Polynomial::one_minus_power(d);
        const auto dm = product.divmod(f.denominator);
        if (!dm.remainder.is_zero()) continue;
        const auto numerator = (f.numerator * dm.quotient).rational_coefficients();
        if (std::any_of(numerator.begin(), numerator.end(), [](const Rational& r) { return r < 0; })) continue;
        return PositiveForm{numerator, degrees};
    }
    return std::nullopt;
}

std::string PositiveForm::to_string(const std::string& var) const {
    std::ostringstream num;
    int terms = 0;
    for (size_t i = 0; i < numerator.size(); ++i) {
        const Rational& c = numerator[i];
        if (c == 0) continue;
        if (terms++) num << '+';
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (mono.empty())
            num << c.get_str();
        else if (c == 1)
            num << mono;
        else
            num << c.get_str() << '*' << mono;
    }
    std::string numerator_text = terms == 0 ? "0" : num.str();
    if (terms > 1) numerator_text = "(" + numerator_text + ")";
    if (degrees.empty()) return numerator_text;

    std::vector<std::string> factors;
    for (size_t i = 0; i < degrees.size();) {
        size_t j = i;
        while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
        const int d = degrees[i];
        std::string f = "(1-" + (d == 1 ? var : var + "^" + std::to_string(d)) + ")";
        if (j - i > 1) f += "^" + std::to_string(j - i);
        factors.push_back(f);
        i = j;
    }
    std::string den;
    for (size_t i = 0; i < factors.size(); ++i) den += (i ? "*" : "") + factors[i];
    if (factors.size() > 1) den = "(" + den + ")";
    return numerator_text + "/" + den;
}

// ---------------------------------------------------------------------------

std::vector<MultiIndex> multi_indices(int vars, int n_max) {
    std::vector<MultiIndex> out;
    MultiIndex current(static_cast<size_t>(vars), 0);
    for (int total = 0; total <= n_max; ++total) {
        // compositions of `total` into `vars` parts, lambda_1 exponent descending
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == vars - 1) {
                current[static_cast<size_t>(pos)] = left;
                out.push_back(current);
                return;
            }
            for (int v = left; v >= 0; --v) {
                current[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, left - v);
            }
        };
        if (vars > 0) rec(rec, 0, total);
    }
    return out;
}

Rational MultiSeries::at(const MultiIndex& index) const {
    auto it = coefficients.find(index);
    return it == coefficients.end() ? Rational(0) : it->second;
}

std::vector<Rational> MultiSeries::specialize() const {
    std::vector<Rational> r(static_cast<size_t>(n_max) + 1, Rational(0));
    for (const auto& [index, c] : coefficients) {
        const int total = std::accumulate(index.begin(), index.end(), 0);
        if (total <= n_max) r[static_cast<size_t>(total)] += c;
    }
    return r;
}

MultiSeries MultigradedFunction::expand(int n_max) const {
    const auto indices = multi_indices(vars, n_max);
    const int order = terms.empty() ? 1 : terms.front().weight.order();
    std::vector<Cyclotomic> acc(indices.size(), Cyclotomic(order));
    const Polynomial one = Polynomial::from_rationals({Rational(1)});
    for (const auto& term : terms) {
        std::vector<PowerSeries> blocks;
        for (const auto& d : term.block_denominators) blocks.push_back(series_expand({one, d}, n_max));
        for (size_t i = 0; i < indices.size(); ++i) {
            Cyclotomic v = term.weight;
            for (size_t b = 0; b < blocks.size() && !v.is_zero(); ++b)
                v = v * blocks[b].coefficients[static_cast<size_t>(indices[i][b])];
            acc[i] += v;
        }
    }
    MultiSeries s;
    s.vars = vars;
    s.n_max = n_max;
    for (size_t i = 0; i < indices.size(); ++i) s.coefficients[indices[i]] = acc[i].to_rational();
    return s;
}

std::string MultigradedFunction::to_string() const {
    std::ostringstream out;
    for (size_t t = 0; t < terms.size(); ++t) {
        if (t) out << " + ";
        out << "(" << terms[t].weight.to_string() << ")/(";
        for (size_t b = 0; b < terms[t].block_denominators.size(); ++b) {
            if (b) out << "*";
            out << "(" << terms[t].block_denominators[b].to_string("x" + std::to_string(b + 1)) << ")";
        }
        out << ")";
    }
    return out.str();
}

}  // namespace spectable
