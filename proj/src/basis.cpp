#include "spectable/basis.hpp"

#include <map>

#include "spectable/molien.hpp"
#include "spectable/oracle.hpp"

namespace spectable {

namespace {

long as_long(const Rational& r) {
    if (r.get_den() != 1) throw std::invalid_argument(r.get_str() + " is not an integer");
    return r.get_num().get_si();
}

long twice(const Rational& r) { return as_long(Rational(r * 2)); }

Rational half(long k) {
    Rational r(k, 2);
    r.canonicalize();
    return r;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::vector<Rational> j_values(const Rational& j_max) {
    const long steps = twice(j_max);
    if (steps < 0) throw std::invalid_argument("j_max must be non-negative");
    std::vector<Rational> out;
    for (long k = 0; k <= steps; ++k) out.push_back(half(k));
    return out;
}

std::vector<Phase> phases_for(const Rational& m) {
    if (m == 0) return {Phase::zero};
    if (twice(m) % 6 == 3) return {Phase::plus_i, Phase::minus_i};
    return {Phase::plus_one, Phase::minus_one};
}

}  // namespace

std::pair<Rational, Rational> jordan_schwinger(long n1, long n2) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("occupation numbers must be non-negative");
    return {half(n1 + n2), half(n1 - n2)};
}

std::pair<long, long> occupations(const Rational& j, const Rational& m) {
    const long n1 = as_long(Rational(j + m)), n2 = as_long(Rational(j - m));
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("|m| exceeds j");
    return {n1, n2};
}

std::string phase_string(Phase p) {
    switch (p) {
        case Phase::plus_one: return "+1";
        case Phase::minus_one: return "-1";
        case Phase::plus_i: return "+i";
        case Phase::minus_i: return "-i";
        case Phase::zero: return "0";
    }
    return "?";
}

Cyclotomic phase_value(Phase p) {
    switch (p) {
        case Phase::plus_one: return Cyclotomic(4, 1);
        case Phase::minus_one: return Cyclotomic(4, -1);
        case Phase::plus_i: return Cyclotomic::root(4, 1);
        case Phase::minus_i: return Cyclotomic::root(4, 3);
        case Phase::zero: return Cyclotomic(4);
    }
    return Cyclotomic(4);
}

std::string state_label(const Rational& j, const Rational& m, Phase chi) {
    const bool even = as_long(Rational(j - m)) % 2 == 0;
    if (m == 0) return even ? "A_0" : "A_1";
    switch (twice(m) % 6) {
        case 0:
            if (chi == Phase::plus_one) return even ? "A_0" : "A_1";
            if (chi == Phase::minus_one) return even ? "A_1" : "A_0";
            break;
        case 2:
        case 4:
            if (chi == Phase::plus_one || chi == Phase::minus_one) return "E_1";
            break;
        case 3:
            if (chi == Phase::plus_i) return even ? "E_3/2^L" : "E_3/2^R";
            if (chi == Phase::minus_i) return even ? "E_3/2^R" : "E_3/2^L";
            break;
        default:
            if (chi == Phase::plus_one || chi == Phase::minus_one) return "E_1/2";
            break;
    }
    throw std::invalid_argument("phase " + phase_string(chi) + " not allowed at m = " + m.get_str());
}

LabeledState make_state(const Rational& j, const Rational& m, Phase chi) {
    if (m < 0 || m > j) throw std::invalid_argument("need j >= m >= 0");
    if ((m == 0) != (chi == Phase::zero)) throw std::invalid_argument("chi = 0 exactly when m = 0");
    LabeledState s{j, m, chi, state_label(j, m, chi), {}};
    const long n = twice(j), k = as_long(Rational(j - m)), two_m = twice(m);
    s.coefficients.assign(static_cast<size_t>(n) + 1, Cyclotomic(4));
    // a1^(k+2m) a2^k and a1^k a2^(k+2m); index = power of a2
    if (m == 0) {
        s.coefficients[static_cast<size_t>(k)] = Cyclotomic(4, 1);
    } else {
        s.coefficients[static_cast<size_t>(k)] = Cyclotomic(4, 1);
        s.coefficients[static_cast<size_t>(k + two_m)] = phase_value(chi);
    }
    return s;
}

std::vector<LabeledState> enumerate_basis(const Rational& j_max) {
    std::vector<LabeledState> out;
    for (const auto& j : j_values(j_max))
        for (Rational m = j; m >= 0; m -= 1)
            for (Phase p : phases_for(m)) out.push_back(make_state(j, m, p));
    return out;
}

Cyclotomic fock_inner(const LabeledState& a, const LabeledState& b) {
    if (a.j != b.j) return Cyclotomic(4);
    const long n = twice(a.j);
    Cyclotomic sum(4);
    for (long k = 0; k <= n; ++k) {
        const auto& x = a.coefficients[static_cast<size_t>(k)];
        const auto& y = b.coefficients[static_cast<size_t>(k)];
        if (x.is_zero() || y.is_zero()) continue;
        sum += x.conj() * y * Rational(factorial(n - k) * factorial(k));
    }
    return sum;
}

namespace {

// Scaled idempotent projectors at one degree, keyed by irrep name.
std::map<std::string, Matrix> projectors(const GroupData& g, long degree, Execution ex) {
    std::map<std::string, Matrix> out;
    for (const auto& y : g.verified_table().names())
        out[y] = projector_matrix(g.group, g.verified_table(), g.rep(g.defining_rep), y, static_cast<int>(degree), ex)
                     .idempotent();
    return out;
}

bool fixed_by(const Matrix& p, const LabeledState& s) {
    std::vector<Cyclotomic> v;
    for (const auto& c : s.coefficients) v.push_back(c.embed(common_order(p.order(), 4)));
    const Matrix q = p.embed(common_order(p.order(), 4));
    return q * v == v;
}

void require_spinor_defining(const GroupData& g) {
    if (g.rep(g.defining_rep).dim != 2 || !sends_minus_identity_to_minus_one(g.group, g.rep(g.defining_rep)))
        throw std::invalid_argument(g.group.name + " has no two-dimensional spinor defining representation");
}

std::string where(const LabeledState& s) {
    return "j=" + s.j.get_str() + " m=" + s.m.get_str() + " chi=" + phase_string(s.chi);
}

}  // namespace

bool verify_covariance(const LabeledState& state, const GroupData& group) {
    require_spinor_defining(group);
    const auto p = projector_matrix(group.group, group.verified_table(), group.rep(group.defining_rep), state.label,
                                    static_cast<int>(twice(state.j)), Execution::serial);
    return fixed_by(p.idempotent(), state);
}

BasisReport verify_basis(const Rational& j_max, const GroupData& group, Execution ex) {
    require_spinor_defining(group);
    const auto js = j_values(j_max);
    std::vector<std::vector<std::string>> problems(js.size());
    for_each_index(js.size(), ex, [&](size_t r) {
        const Rational& j = js[r];
        auto& out = problems[r];
        std::vector<LabeledState> states;
        for (Rational m = j; m >= 0; m -= 1)
            for (Phase p : phases_for(m)) states.push_back(make_state(j, m, p));
        const long n = twice(j);
        if (static_cast<long>(states.size()) != n + 1)
            out.push_back("j=" + j.get_str() + ": " + std::to_string(states.size()) + " states, expected " +
                          std::to_string(n + 1));
        Matrix coeffs(states.size(), static_cast<size_t>(n) + 1, 4);
        for (size_t i = 0; i < states.size(); ++i)
            for (long k = 0; k <= n; ++k) coeffs(i, static_cast<size_t>(k)) = states[i].coefficients[static_cast<size_t>(k)];
        if (rank(coeffs) != static_cast<size_t>(n) + 1) out.push_back("j=" + j.get_str() + ": states do not span");
        for (size_t a = 0; a < states.size(); ++a)
            for (size_t b = a + 1; b < states.size(); ++b)
                if (!fock_inner(states[a], states[b]).is_zero())
                    out.push_back(where(states[a]) + " and " + where(states[b]) + " are not orthogonal");
        for (const auto& s : states) {
            for (long k = 0; k <= n; ++k)
                if (!s.coefficients[static_cast<size_t>(k)].is_zero() && std::abs(n - 2 * k) != twice(s.m))
                    out.push_back(where(s) + ": monomial with n1 - n2 = " + std::to_string(n - 2 * k));
        }
        const auto ps = projectors(group, n, Execution::serial);
        for (const auto& s : states)
            if (!fixed_by(ps.at(s.label), s)) out.push_back(where(s) + ": not fixed by the " + s.label + " projector");
    });
    BasisReport report;
    for (auto& p : problems) report.problems.insert(report.problems.end(), p.begin(), p.end());
    return report;
}

BasisReport count_check(const Rational& j_max, const GroupData& group, Execution ex) {
    require_spinor_defining(group);
    const auto js = j_values(j_max);
    const auto& table = group.verified_table();
    const auto ct = correlation_table(group.group, table, group.rep(group.defining_rep),
                                      static_cast<int>(twice(j_max)), false, ex);
    std::map<std::pair<long, std::string>, long> states;
    for (const auto& s : enumerate_basis(j_max)) ++states[{twice(s.j), s.label}];
    BasisReport report;
    for (const auto& j : js) {
        const long n = twice(j);
        for (const auto& col : ct.columns) {
            const long have = states[{n, col.irrep}];
            const long expect = col.counts[static_cast<size_t>(n)];
            if (have % static_cast<long>(col.dim) != 0 || have / static_cast<long>(col.dim) != expect)
                report.problems.push_back("j=" + j.get_str() + " " + col.irrep + ": expected " +
                                          std::to_string(expect) + " multiplets, got " +
                                          std::to_string(have) + " states");
        }
    }
    return report;
}

}  // namespace spectable
