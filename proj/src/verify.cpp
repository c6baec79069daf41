#include "spectable/verify.hpp"

#include "spectable/cover.hpp"
#include "spectable/molien.hpp"
#include "spectable/oracle.hpp"

namespace spectable {

bool VerificationReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok()) return false;
    return true;
}

std::vector<std::string> VerificationReport::lines() const {
    std::vector<std::string> out;
    for (const auto& c : checks) {
        if (c.ok()) out.push_back("PASS " + c.name);
        for (const auto& p : c.problems) out.push_back("FAIL " + c.name + ": " + p);
    }
    return out;
}

namespace {

template <class F>
CheckResult run_check(const std::string& name, F&& f) {
    CheckResult r{name, {}};
    try {
        r.problems = f();
    } catch (const std::exception& e) {
        r.problems.push_back(e.what());
    }
    return r;
}

}  // namespace

VerificationReport verify_group(const Catalog& catalog, const std::string& name, int max_degree, int oracle_degree,
                                Execution ex) {
    if (max_degree < 0 || oracle_degree < 0) throw std::invalid_argument("degrees must be non-negative");
    const GroupData& g = catalog.get(name);
    const std::string deg = " n<=" + std::to_string(max_degree);
    VerificationReport report;
    report.checks.push_back(CheckResult{name + " character table", g.report.problems});
    if (!g.table.verified) return report;
    const auto& table = g.table;
    const Representation& def = g.rep(g.defining_rep);

    for (const auto& rep_name : g.rep_names()) {
        const Representation& rep = g.rep(rep_name);
        report.checks.push_back(run_check(name + " " + rep_name + " row sums and parity" + deg, [&] {
            const auto t = correlation_table(g.group, table, rep, max_degree, false, ex);
            auto p = check_row_sums(t);
            const auto q = check_parity(t);
            p.insert(p.end(), q.begin(), q.end());
            return p;
        }));
    }

    report.checks.push_back(run_check(name + " " + g.defining_rep + " closed forms" + deg, [&] {
        std::vector<std::string> p;
        for (const auto& y : table.names()) {
            const auto s = molien_series(g.group, table, def, y, max_degree, true, ex);
            if (series_expand(*s.closed_form, max_degree).counts() != s.counts)
                p.push_back(y + ": closed form does not reproduce the series");
            if (!s.positive) p.push_back(y + ": denominator is not a product of 1-x^d factors");
        }
        return p;
    }));

    const std::string odeg = " n<=" + std::to_string(oracle_degree);
    report.checks.push_back(run_check(name + " " + g.defining_rep + " Molien vs oracle" + odeg,
                                      [&] { return three_way_agreement(g.group, table, def, oracle_degree, ex); }));

    // conjugate matrices share both sides, so class representatives suffice
    report.checks.push_back(run_check(name + " " + g.defining_rep + " determinant identity" + odeg, [&] {
        const auto& classes = g.group.classes;
        std::vector<std::vector<int>> bad(classes.size());
        for_each_index(classes.size(), ex, [&](size_t c) {
            bad[c] = molien_identity_check(def.elements[classes[c].representative], oracle_degree).mismatches;
        });
        std::vector<std::string> p;
        for (size_t c = 0; c < bad.size(); ++c)
            for (int n : bad[c]) p.push_back("class " + classes[c].name + " degree " + std::to_string(n));
        return p;
    }));

    if (g.spec.cover) {
        report.checks.push_back(run_check(name + " double cover of " + *g.spec.cover, [&] {
            auto r = verify_double_cover(g.group, catalog.get(*g.spec.cover).group);
            if (r.ok() && r.kernel_size != 2) r.problems.push_back("kernel has " + std::to_string(r.kernel_size) + " elements");
            return r.problems;
        }));
    }
    return report;
}

}  // namespace spectable
