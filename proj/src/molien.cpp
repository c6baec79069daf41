#include "spectable/molien.hpp"

#include <map>
#include <sstream>

namespace spectable {

namespace {

std::string poly_key(const Polynomial& p) {
    std::string k;
    for (const auto& c : p.coefficients()) k += c.to_string() + ";";
    return k;
}

std::vector<Cyclotomic> class_weights(const FiniteGroup& group, const Irrep& irrep) {
    const Rational inv_order(1, static_cast<long>(group.order()));
    std::vector<Cyclotomic> w;
    w.reserve(group.classes.size());
    for (size_t c = 0; c < group.classes.size(); ++c)
        w.push_back(irrep.values[c].conj() * Rational(static_cast<long>(group.classes[c].size)) * inv_order);
    return w;
}

// sum_c w_c / D_c over a common denominator, then reduced.
RationalFunction combine_fractions(const std::vector<Cyclotomic>& weights, const std::vector<Polynomial>& dens,
                                   int order) {
    std::vector<Polynomial> distinct;
    std::vector<Cyclotomic> summed;
    std::map<std::string, size_t> slot;
    for (size_t c = 0; c < dens.size(); ++c) {
        if (weights[c].is_zero()) continue;
        auto [it, fresh] = slot.emplace(poly_key(dens[c]), distinct.size());
        if (fresh) {
            distinct.push_back(dens[c]);
            summed.push_back(weights[c]);
        } else {
            summed[it->second] += weights[c];
        }
    }
    Polynomial numerator(order), denominator = Polynomial::constant(Cyclotomic(order, 1));
    for (const auto& d : distinct) denominator = denominator * d;
    for (size_t i = 0; i < distinct.size(); ++i) {
        if (summed[i].is_zero()) continue;
        Polynomial term = Polynomial::constant(summed[i]);
        for (size_t j = 0; j < distinct.size(); ++j)
            if (j != i) term = term * distinct[j];
        numerator += term;
    }
    return RationalFunction{numerator, denominator}.reduced();
}

std::vector<long> to_counts(const PowerSeries& s, const std::string& what) {
    try {
        return s.counts();
    } catch (const std::domain_error& e) {
        throw std::domain_error(what + ": " + e.what());
    }
}

}  // namespace

ClassTerms molien_class_terms(const FiniteGroup& group, const Representation& rep, int n_max, Execution ex) {
    if (rep.elements.size() != group.order())
        throw std::invalid_argument("representation " + rep.name + " does not match group " + group.name);
    ClassTerms t;
    const size_t nc = group.classes.size();
    t.denominators.resize(nc);
    t.expansions.resize(nc);
    for_each_index(nc, ex, [&](size_t c) {
        const Matrix& r = rep.elements[group.classes[c].representative];
        const Matrix a = r.embed(common_order(group.cyclotomic_order, r.order()));
        t.denominators[c] = det_one_minus_lambda(a);
        const Polynomial one = Polynomial::constant(Cyclotomic(a.order(), 1));
        t.expansions[c] = series_expand({one, t.denominators[c]}, n_max);
    });
    return t;
}

std::string MolienSeries::closed_form_text(const std::string& var) const {
    if (positive) return positive->to_string(var);
    if (closed_form) return closed_form->to_string(var);
    return "";
}

namespace {

MolienSeries assemble(const FiniteGroup& group, const Irrep& irrep, const ClassTerms& terms, int n_max,
                      bool closed_form) {
    MolienSeries out;
    out.irrep = irrep.name;
    const int order = terms.denominators.empty() ? group.cyclotomic_order : terms.denominators.front().order();
    auto w = class_weights(group, irrep);
    for (auto& x : w) x = x.embed(order);
    out.series.coefficients.assign(static_cast<size_t>(n_max) + 1, Cyclotomic(order));
    for (size_t c = 0; c < w.size(); ++c) {
        if (w[c].is_zero()) continue;
        for (int n = 0; n <= n_max; ++n) {
            const auto& s = terms.expansions[c].coefficients[static_cast<size_t>(n)];
            if (!s.is_zero()) out.series.coefficients[static_cast<size_t>(n)] += w[c] * s;
        }
    }
    out.counts = to_counts(out.series, "Molien series of " + group.name + " column " + irrep.name);
    if (closed_form) {
        out.closed_form = combine_fractions(w, terms.denominators, order);
        out.positive = find_positive_form(*out.closed_form, kPositiveFormSearch);
    }
    return out;
}

}  // namespace

MolienSeries molien_series(const FiniteGroup& group, const CharacterTable& table, const Representation& rep,
                           const std::string& irrep, int n_max, bool closed_form, Execution ex) {
    if (!table.verified) throw UnverifiedTableError("character table of " + group.name + " is not verified");
    const Irrep& y = table[irrep];
    return assemble(group, y, molien_class_terms(group, rep, n_max, ex), n_max, closed_form);
}

bool sends_minus_identity_to_minus_one(const FiniteGroup& group, const Representation& rep) {
    if (!group.minus_identity) return false;
    const Matrix& m = rep.elements[*group.minus_identity];
    return m == Cyclotomic(m.order(), -1) * Matrix::identity(m.rows(), m.order());
}

CorrelationTable correlation_table(const FiniteGroup& group, const CharacterTable& table, const Representation& rep,
                                   int n_max, bool closed_forms, Execution ex) {
    if (!table.verified) throw UnverifiedTableError("character table of " + group.name + " is not verified");
    if (n_max < 0) throw std::invalid_argument("negative maximum degree");
    const ClassTerms terms = molien_class_terms(group, rep, n_max, ex);
    CorrelationTable out;
    out.group = group.name;
    out.rep = rep.name;
    out.rep_dim = rep.dim;
    out.rep_spinor = sends_minus_identity_to_minus_one(group, rep);
    out.n_max = n_max;
    out.columns.resize(table.irreps.size());
    for_each_index(table.irreps.size(), ex, [&](size_t y) {
        const Irrep& ir = table.irreps[y];
        const MolienSeries s = assemble(group, ir, terms, n_max, closed_forms);
        out.columns[y] = CorrelationColumn{ir.name, ir.dim, ir.spinor, s.counts, s.closed_form_text()};
    });
    return out;
}

Integer binomial(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::vector<std::string> check_row_sums(const CorrelationTable& t) {
    std::vector<std::string> problems;
    const long m = static_cast<long>(t.rep_dim);
    for (int n = 0; n <= t.n_max; ++n) {
        Integer sum = 0;
        for (const auto& c : t.columns) sum += Integer(static_cast<long>(c.dim)) * c.counts[static_cast<size_t>(n)];
        const Integer expect = binomial(n + m - 1, m - 1);
        if (sum != expect)
            problems.push_back(t.group + " " + t.rep + " degree " + std::to_string(n) + ": row sum " + sum.get_str() +
                               ", expected " + expect.get_str());
    }
    return problems;
}

std::vector<std::string> check_parity(const CorrelationTable& t) {
    std::vector<std::string> problems;
    if (!t.rep_spinor) return problems;
    for (int n = 0; n <= t.n_max; ++n)
        for (const auto& c : t.columns) {
            const bool must_vanish = (n % 2 == 1) ? !c.spinor : c.spinor;
            if (must_vanish && c.counts[static_cast<size_t>(n)] != 0)
                problems.push_back(t.group + " " + t.rep + " degree " + std::to_string(n) + ": " +
                                   (c.spinor ? "spinor" : "vector") + " irrep " + c.irrep + " has entry " +
                                   std::to_string(c.counts[static_cast<size_t>(n)]));
        }
    return problems;
}

// ---------------------------------------------------------------------------

Representation direct_sum(const std::vector<Block>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("direct sum of no blocks");
    Representation out;
    const size_t n = blocks.front().rep->elements.size();
    for (const auto& b : blocks) {
        if (b.rep->elements.size() != n) throw std::invalid_argument("blocks belong to different groups");
        out.name += (out.name.empty() ? "" : "+") + b.name;
        out.dim += b.rep->dim;
    }
    out.elements.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Matrix> parts;
        for (const auto& b : blocks) parts.push_back(b.rep->elements[i]);
        out.elements.push_back(Matrix::direct_sum(parts));
    }
    return out;
}

MultigradedFunction multigraded_function(const FiniteGroup& group, const CharacterTable& table,
                                         const std::vector<Block>& blocks, const std::string& irrep) {
    if (!table.verified) throw UnverifiedTableError("character table of " + group.name + " is not verified");
    for (const auto& b : blocks)
        if (b.rep->elements.size() != group.order())
            throw std::invalid_argument("block " + b.name + " is not a representation of " + group.name);
    const auto w = class_weights(group, table[irrep]);
    MultigradedFunction f;
    f.vars = static_cast<int>(blocks.size());
    int order = group.cyclotomic_order;
    for (const auto& b : blocks)
        for (const auto& m : b.rep->elements) order = common_order(order, m.order());
    for (size_t c = 0; c < group.classes.size(); ++c) {
        if (w[c].is_zero()) continue;
        MultigradedFunction::Term term{w[c].embed(order), {}};
        for (const auto& b : blocks)
            term.block_denominators.push_back(
                det_one_minus_lambda(b.rep->elements[group.classes[c].representative].embed(order)));
        f.terms.push_back(std::move(term));
    }
    return f;
}

MultigradedTable combine_multigraded(const FiniteGroup& group, const CharacterTable& table,
                                     const std::vector<Block>& blocks, int n_max, Execution ex) {
    if (blocks.empty()) throw std::invalid_argument("combine needs at least one block");
    MultigradedTable out;
    out.group = group.name;
    for (const auto& b : blocks) out.blocks.push_back(b.name);
    out.n_max = n_max;
    out.indices = multi_indices(static_cast<int>(blocks.size()), n_max);
    out.irreps = table.names();
    out.counts.resize(out.irreps.size());
    out.closed_forms.resize(out.irreps.size());
    for_each_index(out.irreps.size(), ex, [&](size_t y) {
        const MultigradedFunction f = multigraded_function(group, table, blocks, out.irreps[y]);
        const MultiSeries s = f.expand(n_max);
        out.closed_forms[y] = f.to_string();
        auto& col = out.counts[y];
        for (const auto& idx : out.indices) {
            const Rational v = s.at(idx);
            if (v.get_den() != 1 || v < 0 || !v.get_num().fits_slong_p())
                throw std::domain_error("multigraded coefficient of " + out.irreps[y] + " is not a non-negative integer");
            col.push_back(v.get_num().get_si());
        }
    });
    return out;
}

// ---------------------------------------------------------------------------

Rational parse_half_integer(const std::string& text) {
    Rational r;
    try {
        const auto dot = text.find('.');
        if (dot != std::string::npos) {
            const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
            if (frac != "0" && frac != "5" && frac != "50" && frac != "00") throw std::invalid_argument(text);
            r = Rational(whole.empty() ? "0" : whole) + (frac[0] == '5' ? Rational(1, 2) : Rational(0));
        } else {
            r = Rational(text);
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + text + "' is not a half-integer");
    }
    r.canonicalize();
    if (r < 0 || (r.get_den() != 1 && r.get_den() != 2))
        throw std::invalid_argument("'" + text + "' is not a non-negative half-integer");
    return r;
}

std::string half_integer_string(const Rational& r) { return r.get_str(); }

DInfTable so3_dinf_table(const Rational& j_max) {
    if (j_max < 0 || (j_max.get_den() != 1 && j_max.get_den() != 2))
        throw std::invalid_argument("j_max must be a non-negative half-integer");
    DInfTable t;
    const long steps = Rational(j_max * 2).get_num().get_si();
    for (long k = 0; k <= steps; ++k) {
        Rational v(k, 2);
        v.canonicalize();
        t.j.push_back(v);
        t.m.push_back(v);
    }
    for (const auto& j : t.j) {
        std::vector<int> row;
        for (const auto& m : t.m) {
            const Rational d = j - m;
            row.push_back(d >= 0 && d.get_den() == 1 ? 1 : 0);
        }
        t.f.push_back(std::move(row));
    }
    return t;
}

}  // namespace spectable
