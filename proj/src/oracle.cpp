#include "spectable/oracle.hpp"

#include <numeric>

#include "spectable/molien.hpp"

namespace spectable {

namespace {

void enumerate(int vars, int remaining, MultiIndex& current, std::vector<MultiIndex>& out) {
    const size_t k = current.size();
    if (static_cast<int>(k) == vars - 1) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current.push_back(e);
        enumerate(vars, remaining - e, current, out);
        current.pop_back();
    }
}

// shift[u][i] = index of u + e_i in the next basis.
std::vector<std::vector<size_t>> shift_table(const MonomialBasis& prev, const MonomialBasis& cur) {
    std::vector<std::vector<size_t>> shift(prev.size(), std::vector<size_t>(static_cast<size_t>(prev.vars)));
    for (size_t u = 0; u < prev.size(); ++u)
        for (int i = 0; i < prev.vars; ++i) {
            MultiIndex e = prev.monomials[u];
            ++e[static_cast<size_t>(i)];
            shift[u][static_cast<size_t>(i)] = cur.index.at(e);
        }
    return shift;
}

// Sym^d from Sym^{d-1}: image(v) = image(v - e_j) * (sum_i A_ij x_i).
Matrix next_power(const Matrix& a, const MonomialBasis& prev, const Matrix& m_prev, const MonomialBasis& cur) {
    const auto shift = shift_table(prev, cur);
    Matrix out(cur.size(), cur.size(), a.order());
    for (size_t v = 0; v < cur.size(); ++v) {
        const MultiIndex& mono = cur.monomials[v];
        size_t j = 0;
        while (mono[j] == 0) ++j;
        MultiIndex w = mono;
        --w[j];
        const size_t wi = prev.index.at(w);
        for (size_t u = 0; u < prev.size(); ++u) {
            const Cyclotomic& val = m_prev(u, wi);
            if (val.is_zero()) continue;
            for (size_t i = 0; i < a.rows(); ++i) {
                const Cyclotomic& aij = a(i, j);
                if (aij.is_zero()) continue;
                out(shift[u][i], v) += val * aij;
            }
        }
    }
    return out;
}

template <class Visit>
void walk_powers(const Matrix& a, int n_max, Visit&& visit) {
    if (!a.is_square()) throw std::invalid_argument("symmetric power of a non-square matrix");
    const int m = static_cast<int>(a.rows());
    MonomialBasis prev(m, 0);
    Matrix current = Matrix::identity(1, a.order());
    visit(0, current);
    for (int d = 1; d <= n_max; ++d) {
        MonomialBasis cur(m, d);
        current = next_power(a, prev, current, cur);
        visit(d, current);
        prev = std::move(cur);
    }
}

int working_order(const FiniteGroup& group, const Representation& rep) {
    int order = group.cyclotomic_order;
    for (const auto& m : rep.elements) order = common_order(order, m.order());
    return order;
}

void require_verified(const FiniteGroup& group, const CharacterTable& table, const Representation& rep) {
    if (!table.verified) throw UnverifiedTableError("character table of " + group.name + " is not verified");
    if (rep.elements.size() != group.order())
        throw std::invalid_argument("representation " + rep.name + " does not match group " + group.name);
}

long to_count(const Cyclotomic& c, const std::string& what) {
    if (!c.is_rational()) throw std::domain_error(what + " is not rational: " + c.to_string());
    const Rational v = c.to_rational();
    if (v.get_den() != 1 || v < 0 || !v.get_num().fits_slong_p())
        throw std::domain_error(what + " is not a non-negative integer: " + v.get_str());
    return v.get_num().get_si();
}

// traces[i][n] for every group element.
std::vector<std::vector<Cyclotomic>> element_traces(const FiniteGroup& group, const Representation& rep, int n_max,
                                                    int order, Execution ex) {
    std::vector<std::vector<Cyclotomic>> traces(group.order());
    for_each_index(group.order(), ex,
                   [&](size_t i) { traces[i] = symmetric_power_traces(rep.elements[i].embed(order), n_max); });
    return traces;
}

std::vector<long> column_from_traces(const FiniteGroup& group, const Irrep& irrep,
                                     const std::vector<std::vector<Cyclotomic>>& traces, int n_max, int order) {
    std::vector<Cyclotomic> chi;
    chi.reserve(group.classes.size());
    for (const auto& v : irrep.values) chi.push_back(v.conj().embed(order));
    const Rational inv(1, static_cast<long>(group.order()));
    std::vector<long> out;
    for (int n = 0; n <= n_max; ++n) {
        Cyclotomic sum(order);
        for (size_t i = 0; i < group.order(); ++i) {
            const Cyclotomic& w = chi[group.class_of[i]];
            if (!w.is_zero()) sum += w * traces[i][static_cast<size_t>(n)];
        }
        out.push_back(to_count(sum * inv, "projector trace of " + irrep.name + " at degree " + std::to_string(n)));
    }
    return out;
}

}  // namespace

MonomialBasis::MonomialBasis(int v, int d) : vars(v), degree(d) {
    if (v < 1 || d < 0) throw std::invalid_argument("monomial basis needs vars >= 1 and degree >= 0");
    MultiIndex current;
    enumerate(v, d, current, monomials);
    for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
}

Matrix symmetric_power_rep(const Matrix& a, int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    Matrix result;
    walk_powers(a, n, [&](int d, const Matrix& m) {
        if (d == n) result = m;
    });
    return result;
}

namespace {

// Diagonal entry (v, v) of the degree-|v| symmetric power: the coefficient of
// x^v in prod_j L_j^{v_j}, L_j = sum_i A_ij x_i, where coeffs[j][k] holds the
// expansion of L_j^k over MonomialBasis(m, k).
class DiagonalEntries {
public:
    DiagonalEntries(const Matrix& a, int n_max) : a_(a), m_(static_cast<int>(a.rows())) {
        for (int k = 0; k <= n_max; ++k) bases_.emplace_back(m_, k);
        coeffs_.resize(static_cast<size_t>(m_));
        for (int j = 0; j < m_; ++j) {
            auto& cj = coeffs_[static_cast<size_t>(j)];
            cj.push_back({Cyclotomic(a.order(), 1)});
            for (int k = 1; k <= n_max; ++k) {
                const auto& prev = bases_[static_cast<size_t>(k) - 1];
                const auto& cur = bases_[static_cast<size_t>(k)];
                std::vector<Cyclotomic> next(cur.size(), Cyclotomic(a.order()));
                for (size_t u = 0; u < prev.size(); ++u) {
                    const Cyclotomic& c = cj.back()[u];
                    if (c.is_zero()) continue;
                    for (int i = 0; i < m_; ++i) {
                        const Cyclotomic& aij = a(static_cast<size_t>(i), static_cast<size_t>(j));
                        if (aij.is_zero()) continue;
                        MultiIndex e = prev.monomials[u];
                        ++e[static_cast<size_t>(i)];
                        next[cur.index.at(e)] += c * aij;
                    }
                }
                cj.push_back(std::move(next));
            }
        }
    }

    Cyclotomic trace(int n) const {
        Cyclotomic sum(a_.order());
        for (const auto& v : bases_[static_cast<size_t>(n)].monomials) {
            MultiIndex rest = v;
            sum += entry(0, v, rest);
        }
        return sum;
    }

private:
    Cyclotomic entry(int j, const MultiIndex& v, MultiIndex& rest) const {
        const int k = v[static_cast<size_t>(j)];
        const auto& basis = bases_[static_cast<size_t>(k)];
        const auto& c = coeffs_[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (j == m_ - 1) return c[basis.index.at(rest)];
        Cyclotomic sum(a_.order());
        for (size_t t = 0; t < basis.size(); ++t) {
            if (c[t].is_zero()) continue;
            const MultiIndex& part = basis.monomials[t];
            bool fits = true;
            for (int i = 0; i < m_ && fits; ++i) fits = part[static_cast<size_t>(i)] <= rest[static_cast<size_t>(i)];
            if (!fits) continue;
            for (int i = 0; i < m_; ++i) rest[static_cast<size_t>(i)] -= part[static_cast<size_t>(i)];
            const Cyclotomic tail = entry(j + 1, v, rest);
            for (int i = 0; i < m_; ++i) rest[static_cast<size_t>(i)] += part[static_cast<size_t>(i)];
            if (!tail.is_zero()) sum += c[t] * tail;
        }
        return sum;
    }

    const Matrix& a_;
    int m_;
    std::vector<MonomialBasis> bases_;
    std::vector<std::vector<std::vector<Cyclotomic>>> coeffs_;  // [j][k][monomial]
};

}  // namespace

std::vector<Cyclotomic> symmetric_power_traces(const Matrix& a, int n_max) {
    if (!a.is_square()) throw std::invalid_argument("symmetric power of a non-square matrix");
    if (n_max < 0) throw std::invalid_argument("negative degree");
    const DiagonalEntries d(a, n_max);
    std::vector<Cyclotomic> t;
    for (int n = 0; n <= n_max; ++n) t.push_back(d.trace(n));
    return t;
}

std::vector<long> projector_trace_table(const FiniteGroup& group, const CharacterTable& table,
                                        const Representation& rep, const std::string& irrep, int n_max,
                                        Execution ex) {
    require_verified(group, table, rep);
    const Irrep& y = table[irrep];
    const int order = working_order(group, rep);
    return column_from_traces(group, y, element_traces(group, rep, n_max, order, ex), n_max, order);
}

std::vector<std::vector<long>> projector_trace_columns(const FiniteGroup& group, const CharacterTable& table,
                                                       const Representation& rep, int n_max, Execution ex) {
    require_verified(group, table, rep);
    const int order = working_order(group, rep);
    const auto traces = element_traces(group, rep, n_max, order, ex);
    std::vector<std::vector<long>> out(table.irreps.size());
    for_each_index(out.size(), ex,
                   [&](size_t y) { out[y] = column_from_traces(group, table.irreps[y], traces, n_max, order); });
    return out;
}

Matrix ProjectorMatrix::idempotent() const {
    return Cyclotomic(matrix.order(), static_cast<long>(irrep_dim)) * matrix;
}

bool ProjectorMatrix::is_scaled_idempotent() const {
    const Matrix e = idempotent();
    return e * e == e;
}

ProjectorMatrix projector_matrix(const FiniteGroup& group, const CharacterTable& table, const Representation& rep,
                                 const std::string& irrep, int n, Execution ex) {
    require_verified(group, table, rep);
    const Irrep& y = table[irrep];
    const int order = working_order(group, rep);
    std::vector<Matrix> powers(group.order());
    for_each_index(group.order(), ex,
                   [&](size_t i) { powers[i] = symmetric_power_rep(rep.elements[i].embed(order), n); });
    Matrix sum(powers.front().rows(), powers.front().cols(), order);
    for (size_t i = 0; i < group.order(); ++i) {
        const Cyclotomic w = y.values[group.class_of[i]].conj().embed(order);
        if (!w.is_zero()) sum += w * powers[i];
    }
    ProjectorMatrix p;
    p.degree = n;
    p.irrep = y.name;
    p.irrep_dim = y.dim;
    p.matrix = Cyclotomic(order, Rational(1, static_cast<long>(group.order()))) * sum;
    return p;
}

IdentityReport molien_identity_check(const Matrix& a, int n_max) {
    IdentityReport r;
    const Polynomial one = Polynomial::constant(Cyclotomic(a.order(), 1));
    r.expansion = series_expand({one, det_one_minus_lambda(a)}, n_max).coefficients;
    r.traces = symmetric_power_traces(a, n_max);
    for (int n = 0; n <= n_max; ++n)
        if (r.expansion[static_cast<size_t>(n)] != r.traces[static_cast<size_t>(n)]) r.mismatches.push_back(n);
    return r;
}

Cyclotomic rotation_character(const Rational& j, const Rational& angle, int order) {
    const Rational two_j_q = j * 2;
    if (two_j_q.get_den() != 1 || j < 0) throw std::invalid_argument("j must be a non-negative half-integer");
    const long two_j = two_j_q.get_num().get_si();
    const long p = angle.get_num().get_si();
    const long q = angle.get_den().get_si();
    if (order % (4 * q) != 0)
        throw std::invalid_argument("angle " + angle.get_str() + " pi needs Q(zeta_" + std::to_string(4 * q) + ")");
    const long step = order / (4 * q);
    Cyclotomic sum(order);
    // exp(i m theta) = zeta_{4q}^{2m p}
    for (long k = -two_j; k <= two_j; k += 2) {
        long e = (k * p * step) % order;
        if (e < 0) e += order;
        sum += Cyclotomic::root(order, e);
    }
    return sum;
}

CharacterFormulaTable character_formula_table(const FiniteGroup& group, const CharacterTable& table,
                                              const Rational& j_max, Execution ex) {
    if (!table.verified) throw UnverifiedTableError("character table of " + group.name + " is not verified");
    int order = group.cyclotomic_order;
    for (const auto& c : group.classes) {
        if (!c.angle) throw CatalogError("class " + c.name + " of " + group.name + " has no rotation angle");
        order = std::lcm(order, 4 * static_cast<int>(c.angle->get_den().get_si()));
    }
    CharacterFormulaTable t;
    t.group = group.name;
    t.irreps = table.names();
    const Rational step = group.minus_identity ? Rational(1, 2) : Rational(1);
    for (Rational j = 0; j <= j_max; j += step) t.j.push_back(j);
    // chi[row][class]
    std::vector<std::vector<Cyclotomic>> chi(t.j.size());
    for_each_index(t.j.size(), ex, [&](size_t r) {
        for (const auto& c : group.classes) chi[r].push_back(rotation_character(t.j[r], *c.angle, order));
    });
    t.counts.resize(table.irreps.size());
    const Rational inv(1, static_cast<long>(group.order()));
    for_each_index(table.irreps.size(), ex, [&](size_t y) {
        const Irrep& ir = table.irreps[y];
        for (size_t r = 0; r < t.j.size(); ++r) {
            Cyclotomic sum(order);
            for (size_t c = 0; c < group.classes.size(); ++c)
                sum += ir.values[c].conj().embed(order) * chi[r][c] *
                       Rational(static_cast<long>(group.classes[c].size));
            t.counts[y].push_back(
                to_count(sum * inv, "character formula for " + ir.name + " at j = " + t.j[r].get_str()));
        }
    });
    return t;
}

std::vector<std::string> three_way_agreement(const FiniteGroup& group, const CharacterTable& table,
                                             const Representation& rep, int n_max, Execution ex) {
    std::vector<std::string> problems;
    const auto molien = correlation_table(group, table, rep, n_max, false, ex);
    const auto traces = projector_trace_columns(group, table, rep, n_max, ex);
    for (size_t y = 0; y < table.irreps.size(); ++y)
        for (int n = 0; n <= n_max; ++n) {
            const long a = molien.columns[y].counts[static_cast<size_t>(n)];
            const long b = traces[y][static_cast<size_t>(n)];
            if (a != b)
                problems.push_back(group.name + " " + table.irreps[y].name + " degree " + std::to_string(n) +
                                   ": molien " + std::to_string(a) + ", projector trace " + std::to_string(b));
        }

    bool spinor_frame = rep.dim == 2 && sends_minus_identity_to_minus_one(group, rep);
    for (const auto& c : group.classes) spinor_frame = spinor_frame && c.angle.has_value();
    if (spinor_frame) {
        for (const auto& c : group.classes) {
            const int need = 4 * static_cast<int>(c.angle->get_den().get_si());
            const int o = std::lcm(working_order(group, rep), need);
            if (rep.elements[c.representative].trace().embed(o) != rotation_character(Rational(1, 2), *c.angle, o))
                spinor_frame = false;
        }
    }
    if (!spinor_frame) return problems;
    const auto cf = character_formula_table(group, table, Rational(n_max, 2), ex);
    for (size_t y = 0; y < table.irreps.size(); ++y)
        for (size_t r = 0; r < cf.j.size(); ++r) {
            const long a = molien.columns[y].counts[r];
            const long b = cf.counts[y][r];
            if (a != b)
                problems.push_back(group.name + " " + table.irreps[y].name + " j = " + cf.j[r].get_str() +
                                   ": molien " + std::to_string(a) + ", character formula " + std::to_string(b));
        }
    return problems;
}

}  // namespace spectable
