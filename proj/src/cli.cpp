#include "spectable/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "spectable/basis.hpp"
#include "spectable/catalog.hpp"
#include "spectable/molien.hpp"
#include "spectable/oeis.hpp"
#include "spectable/verify.hpp"

namespace spectable {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, csv, json };

struct RunConfig {
    std::string catalog;
    std::string format = "text";
    int cyclotomic_order = 0;
    bool serial = false;

    Format fmt() const { return format == "csv" ? Format::csv : format == "json" ? Format::json : Format::text; }
    Execution execution() const { return serial ? Execution::serial : Execution::parallel; }
};

/// Raised for verification mismatches found while producing output.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

/// Right-aligned text grid.
void print_grid(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& r : rows)
        for (size_t c = 0; c < r.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], r[c].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (size_t c = 0; c < r.size(); ++c)
            line += (c ? "  " : "") + std::string(width[c] - r[c].size(), ' ') + r[c];
        out << line << '\n';
    }
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    for (const auto& r : rows) {
        std::vector<std::string> f;
        for (const auto& x : r) f.push_back(csv_field(x));
        out << join(f, ",") << '\n';
    }
}

std::string j_of_degree(int n) {
    Rational j(n, 2);
    j.canonicalize();
    return j.get_str();
}

class Session {
public:
    explicit Session(const RunConfig& cfg) : cfg_(cfg) {}

    const Catalog& catalog() {
        if (!catalog_) {
            const std::filesystem::path dir = cfg_.catalog.empty() ? Catalog::default_directory() : std::filesystem::path(cfg_.catalog);
            std::optional<int> override;
            if (cfg_.cyclotomic_order > 0) override = cfg_.cyclotomic_order;
            catalog_ = std::make_unique<Catalog>(dir, override);
        }
        return *catalog_;
    }
    const GroupData& group(const std::string& name) { return catalog().get(name); }
    const RunConfig& cfg() const { return cfg_; }

private:
    RunConfig cfg_;
    std::unique_ptr<Catalog> catalog_;
};

const Representation& pick_rep(const GroupData& g, const std::string& name) {
    return g.rep(name.empty() ? g.defining_rep : name);
}

void require_terms(int n) {
    if (n < 0) throw std::invalid_argument("--terms must be non-negative");
}

// ---------------------------------------------------------------------------

void cmd_list_groups(Session& s, std::ostream& out) {
    std::vector<std::vector<std::string>> rows{{"group", "order", "classes", "defining", "cover", "representations"}};
    Json arr = Json::array();
    for (const auto& name : s.catalog().names()) {
        const auto& g = s.group(name);
        const std::string cover = g.spec.cover.value_or("");
        rows.push_back({name, std::to_string(g.group.order()), std::to_string(g.group.classes.size()), g.defining_rep,
                        cover.empty() ? "-" : cover, join(g.rep_names(), " ")});
        arr.push_back(Json{{"group", name},
                           {"order", g.group.order()},
                           {"classes", g.group.classes.size()},
                           {"irreps", g.table.names()},
                           {"defining", g.defining_rep},
                           {"cover", cover},
                           {"representations", g.rep_names()},
                           {"verified", g.table.verified}});
    }
    switch (s.cfg().fmt()) {
        case Format::text: print_grid(out, rows); break;
        case Format::csv: print_csv(out, rows); break;
        case Format::json: out << arr.dump(2) << '\n'; break;
    }
}

struct TableArgs {
    std::string group, rep;
    int terms = kDefaultMaxDegree;
    bool no_closed = false;
    bool check = false;
};

void cmd_table(Session& s, const TableArgs& a, std::ostream& out) {
    require_terms(a.terms);
    const auto& g = s.group(a.group);
    const auto& rep = pick_rep(g, a.rep);
    const auto t = correlation_table(g.group, g.verified_table(), rep, a.terms, !a.no_closed, s.cfg().execution());
    const bool show_j = t.rep_dim == 2;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"n"};
    if (show_j) header.push_back("j");
    for (const auto& c : t.columns) header.push_back(c.irrep);
    rows.push_back(header);
    for (int n = 0; n <= t.n_max; ++n) {
        std::vector<std::string> r{std::to_string(n)};
        if (show_j) r.push_back(j_of_degree(n));
        for (const auto& c : t.columns) r.push_back(std::to_string(c.counts[static_cast<size_t>(n)]));
        rows.push_back(r);
    }
    switch (s.cfg().fmt()) {
        case Format::text:
            out << "# " << t.group << " in U(" << t.rep_dim << ") via " << t.rep << ", degrees 0.." << t.n_max << '\n';
            print_grid(out, rows);
            if (!a.no_closed) {
                out << "# closed forms\n";
                for (const auto& c : t.columns) out << c.irrep << ": " << c.closed_form << '\n';
            }
            break;
        case Format::csv: print_csv(out, rows); break;
        case Format::json: {
            Json j{{"group", t.group}, {"rep", t.rep}, {"rep_dim", t.rep_dim}, {"rep_spinor", t.rep_spinor}};
            std::vector<int> degrees;
            std::vector<std::string> js;
            for (int n = 0; n <= t.n_max; ++n) {
                degrees.push_back(n);
                js.push_back(j_of_degree(n));
            }
            j["degrees"] = degrees;
            if (show_j) j["j"] = js;
            Json cols = Json::array();
            for (const auto& c : t.columns) {
                Json col{{"irrep", c.irrep}, {"dim", c.dim}, {"spinor", c.spinor}, {"counts", c.counts}};
                if (!a.no_closed) col["closed_form"] = c.closed_form;
                cols.push_back(col);
            }
            j["columns"] = cols;
            out << j.dump(2) << '\n';
            break;
        }
    }
    if (a.check) {
        auto p = check_row_sums(t);
        const auto q = check_parity(t);
        p.insert(p.end(), q.begin(), q.end());
        if (!p.empty()) throw MismatchError(join(p, "\n"));
    }
}

struct MolienArgs {
    std::string group, rep, irrep;
    int terms = kDefaultMaxDegree;
    bool closed_form = false;
    bool no_closed = false;
};

void cmd_molien(Session& s, const MolienArgs& a, std::ostream& out) {
    require_terms(a.terms);
    if (a.closed_form && a.no_closed) throw std::invalid_argument("--closed-form and --no-closed-form conflict");
    const auto& g = s.group(a.group);
    const auto& rep = pick_rep(g, a.rep);
    const auto& table = g.verified_table();
    const auto m = molien_series(g.group, table, rep, a.irrep, a.terms, !a.no_closed, s.cfg().execution());
    const std::string irrep = table[a.irrep].name;
    std::vector<std::string> counts;
    for (long c : m.counts) counts.push_back(std::to_string(c));
    switch (s.cfg().fmt()) {
        case Format::text:
            out << "group " << g.group.name << " rep " << rep.name << " irrep " << irrep << '\n';
            out << "coefficients: " << join(counts, ", ") << '\n';
            if (!a.no_closed) {
                out << "closed form: " << m.closed_form_text() << '\n';
                if (m.positive) out << "reduced: " << m.closed_form->to_string() << '\n';
            }
            break;
        case Format::csv: {
            std::vector<std::vector<std::string>> rows{{"n", irrep}};
            for (size_t n = 0; n < counts.size(); ++n) rows.push_back({std::to_string(n), counts[n]});
            print_csv(out, rows);
            break;
        }
        case Format::json: {
            Json j{{"group", g.group.name}, {"rep", rep.name}, {"irrep", irrep}, {"coefficients", m.counts}};
            if (!a.no_closed) {
                j["closed_form"] = m.closed_form_text();
                j["reduced"] = m.closed_form->to_string();
            }
            out << j.dump(2) << '\n';
            break;
        }
    }
}

struct CombineArgs {
    std::string group;
    std::vector<std::string> blocks;
    int terms = 6;
};

std::string index_string(const MultiIndex& idx) {
    std::vector<std::string> p;
    for (int e : idx) p.push_back(std::to_string(e));
    return "(" + join(p, ",") + ")";
}

void cmd_combine(Session& s, const CombineArgs& a, std::ostream& out) {
    require_terms(a.terms);
    if (a.blocks.empty()) throw std::invalid_argument("--blocks needs at least one representation");
    const auto& g = s.group(a.group);
    const auto& table = g.verified_table();
    std::vector<Block> blocks;
    for (const auto& b : a.blocks) blocks.push_back({b, &g.rep(b)});
    const auto m = combine_multigraded(g.group, table, blocks, a.terms, s.cfg().execution());

    // specialization against the single-variable direct-sum table
    const Representation sum = direct_sum(blocks);
    const auto single = correlation_table(g.group, table, sum, a.terms, false, s.cfg().execution());
    std::vector<std::string> mismatch;
    for (size_t y = 0; y < m.irreps.size(); ++y) {
        std::vector<long> spec(static_cast<size_t>(a.terms) + 1, 0);
        for (size_t i = 0; i < m.indices.size(); ++i) {
            int total = 0;
            for (int e : m.indices[i]) total += e;
            spec[static_cast<size_t>(total)] += m.counts[y][i];
        }
        if (spec != single.columns[y].counts) mismatch.push_back(m.irreps[y]);
    }

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"index"};
    header.insert(header.end(), m.irreps.begin(), m.irreps.end());
    rows.push_back(header);
    for (size_t i = 0; i < m.indices.size(); ++i) {
        std::vector<std::string> r{index_string(m.indices[i])};
        for (size_t y = 0; y < m.irreps.size(); ++y) r.push_back(std::to_string(m.counts[y][i]));
        rows.push_back(r);
    }
    switch (s.cfg().fmt()) {
        case Format::text:
            out << "# " << m.group << " blocks " << join(m.blocks, ", ") << ", total degree <= " << m.n_max << '\n';
            print_grid(out, rows);
            out << "# closed forms\n";
            for (size_t y = 0; y < m.irreps.size(); ++y) out << m.irreps[y] << ": " << m.closed_forms[y] << '\n';
            out << "# specialization to " << sum.name << ": " << (mismatch.empty() ? "matches" : "MISMATCH") << '\n';
            break;
        case Format::csv: print_csv(out, rows); break;
        case Format::json: {
            Json j{{"group", m.group}, {"blocks", m.blocks}, {"n_max", m.n_max}};
            Json idx = Json::array();
            for (const auto& i : m.indices) idx.push_back(i);
            j["indices"] = idx;
            Json cols = Json::array();
            for (size_t y = 0; y < m.irreps.size(); ++y)
                cols.push_back(Json{{"irrep", m.irreps[y]}, {"counts", m.counts[y]}, {"closed_form", m.closed_forms[y]}});
            j["columns"] = cols;
            j["specialization_matches"] = mismatch.empty();
            out << j.dump(2) << '\n';
            break;
        }
    }
    if (!mismatch.empty()) throw MismatchError("specialization differs from the direct sum for " + join(mismatch, ", "));
}

void cmd_dinf(Session& s, const std::string& jmax, std::ostream& out) {
    const auto t = so3_dinf_table(parse_half_integer(jmax));
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{s.cfg().fmt() == Format::text ? "j\\m" : "j"};
    for (const auto& m : t.m) header.push_back(m == 0 ? "0" : (s.cfg().fmt() == Format::text ? "+-" : "") + m.get_str());
    rows.push_back(header);
    for (size_t r = 0; r < t.j.size(); ++r) {
        std::vector<std::string> row{t.j[r].get_str()};
        for (int v : t.f[r]) row.push_back(std::to_string(v));
        rows.push_back(row);
    }
    switch (s.cfg().fmt()) {
        case Format::text: print_grid(out, rows); break;
        case Format::csv: print_csv(out, rows); break;
        case Format::json: {
            std::vector<std::string> js, ms;
            for (const auto& j : t.j) js.push_back(j.get_str());
            for (const auto& m : t.m) ms.push_back(m.get_str());
            out << Json{{"j", js}, {"abs_m", ms}, {"f", t.f}}.dump(2) << '\n';
            break;
        }
    }
}

void cmd_basis(Session& s, const std::string& jtext, bool upto, std::ostream& out) {
    const Rational j = parse_half_integer(jtext);
    const auto& g = s.group("2D3");
    std::vector<LabeledState> states;
    for (auto& st : enumerate_basis(j))
        if (upto || st.j == j) states.push_back(std::move(st));
    auto problems = verify_basis(j, g, s.cfg().execution()).problems;
    const auto counts = count_check(j, g, s.cfg().execution()).problems;
    problems.insert(problems.end(), counts.begin(), counts.end());

    std::vector<std::vector<std::string>> rows{{"j", "m", "chi", "label"}};
    for (const auto& st : states) rows.push_back({st.j.get_str(), st.m.get_str(), phase_string(st.chi), st.label});
    switch (s.cfg().fmt()) {
        case Format::text:
            for (size_t r = 1; r < rows.size(); ++r) out << join(rows[r], " ") << '\n';
            break;
        case Format::csv: print_csv(out, rows); break;
        case Format::json: {
            Json arr = Json::array();
            for (const auto& st : states) {
                const auto [n1, n2] = occupations(st.j, st.m);
                arr.push_back(Json{{"j", st.j.get_str()},
                                   {"m", st.m.get_str()},
                                   {"chi", phase_string(st.chi)},
                                   {"label", st.label},
                                   {"n1", n1},
                                   {"n2", n2}});
            }
            out << Json{{"group", "2D3"}, {"states", arr}, {"verified", problems.empty()}}.dump(2) << '\n';
            break;
        }
    }
    if (!problems.empty()) throw MismatchError(join(problems, "\n"));
}

void cmd_verify(Session& s, const std::string& group, int max_degree, int oracle_degree, std::ostream& out) {
    require_terms(max_degree);
    if (oracle_degree < 0) oracle_degree = std::min(max_degree, kDefaultOracleDegree);
    std::vector<std::string> names;
    if (group == "all") names = s.catalog().names();
    else names.push_back(group);
    std::vector<std::pair<std::string, VerificationReport>> reports;
    for (const auto& n : names) reports.emplace_back(n, verify_group(s.catalog(), n, max_degree, oracle_degree, s.cfg().execution()));
    bool ok = true;
    for (const auto& [n, r] : reports) ok = ok && r.ok();
    switch (s.cfg().fmt()) {
        case Format::text:
            for (const auto& [n, r] : reports)
                for (const auto& l : r.lines()) out << l << '\n';
            out << (ok ? "verification passed" : "verification FAILED") << '\n';
            break;
        case Format::csv: {
            std::vector<std::vector<std::string>> rows{{"group", "check", "status", "detail"}};
            for (const auto& [n, r] : reports)
                for (const auto& c : r.checks) {
                    if (c.ok()) rows.push_back({n, c.name, "pass", ""});
                    for (const auto& p : c.problems) rows.push_back({n, c.name, "fail", p});
                }
            print_csv(out, rows);
            break;
        }
        case Format::json: {
            Json arr = Json::array();
            for (const auto& [n, r] : reports)
                for (const auto& c : r.checks) arr.push_back(Json{{"group", n}, {"check", c.name}, {"ok", c.ok()}, {"problems", c.problems}});
            out << Json{{"max_degree", max_degree}, {"ok", ok}, {"checks", arr}}.dump(2) << '\n';
            break;
        }
    }
    if (!ok) throw MismatchError("verification failed");
}

struct OeisArgs {
    std::string stripped, group, rep, irrep;
    int terms = kDefaultMaxDegree;
    size_t min_overlap = kDefaultMinOverlap;
    bool online = false;
};

void cmd_oeis_match(Session& s, const OeisArgs& a, std::ostream& out, std::ostream& err) {
    require_terms(a.terms);
    const auto& g = s.group(a.group);
    const auto& table = g.verified_table();
    const auto m = molien_series(g.group, table, pick_rep(g, a.rep), a.irrep, a.terms, false, s.cfg().execution());
    std::vector<Integer> terms(m.counts.begin(), m.counts.end());
    std::vector<SequenceMatch> matches;
    if (!a.stripped.empty()) {
        const auto index = load_stripped(a.stripped);
        for (const auto& w : index.warnings) err << "warning: " << w << '\n';
        matches = match_sequence(index, terms, a.min_overlap);
    } else if (!a.online) {
        throw std::invalid_argument("oeis match needs --stripped <path> or --online");
    }
    std::optional<long> online;
    if (a.online) {
        try {
            online = online_search_count(terms);
        } catch (const OeisError& e) {
            // the local result still stands when a snapshot was given
            if (a.stripped.empty()) throw;
            err << "warning: " << e.what() << '\n';
        }
    }

    std::vector<std::vector<std::string>> rows{{"id", "offset", "overlap"}};
    for (const auto& x : matches) rows.push_back({x.id, std::to_string(x.offset), std::to_string(x.overlap)});
    switch (s.cfg().fmt()) {
        case Format::text: {
            std::vector<std::string> t;
            for (const auto& v : terms) t.push_back(v.get_str());
            out << "column " << g.group.name << " " << table[a.irrep].name << ": " << join(t, ",") << '\n';
            if (!a.stripped.empty()) {
                if (matches.empty()) out << "no matches in " << a.stripped << '\n';
                else print_grid(out, rows);
            }
            if (online) out << "oeis.org results: " << *online << '\n';
            break;
        }
        case Format::csv: print_csv(out, rows); break;
        case Format::json: {
            Json arr = Json::array();
            for (const auto& x : matches) arr.push_back(Json{{"id", x.id}, {"offset", x.offset}, {"overlap", x.overlap}});
            Json j{{"group", g.group.name}, {"irrep", table[a.irrep].name}, {"terms", m.counts}, {"matches", arr}};
            if (online) j["online_count"] = *online;
            out << j.dump(2) << '\n';
            break;
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Correlation tables of finite unitary groups from Molien series"};
    app.name("spectable");
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a plain-text key = value file");
    RunConfig cfg;
    app.add_option("--catalog", cfg.catalog, "Catalog directory (default: $SPECTABLE_CATALOG or the bundled one)");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--cyclotomic-order", cfg.cyclotomic_order, "Work in a larger cyclotomic field")
        ->check(CLI::PositiveNumber);
    app.add_flag("--serial", cfg.serial, "Use the serial reference kernels");

    app.add_subcommand("list-groups", "List catalog groups");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Correlation table for every irrep");
    table->add_option("--group", ta.group)->required();
    table->add_option("--terms", ta.terms, "Largest degree");
    table->add_option("--rep", ta.rep, "Representation (default: the defining one)");
    table->add_flag("--no-closed-forms", ta.no_closed);
    table->add_flag("--check", ta.check, "Also check row sums and parity");

    MolienArgs ma;
    auto* molien = app.add_subcommand("molien", "Series and closed form for one irrep");
    molien->add_option("--group", ma.group)->required();
    molien->add_option("--rep", ma.rep);
    molien->add_option("--irrep", ma.irrep)->required();
    molien->add_option("--terms", ma.terms, "Largest degree");
    molien->add_flag("--closed-form", ma.closed_form, "Print the closed form (default)");
    molien->add_flag("--no-closed-form", ma.no_closed);

    CombineArgs ca;
    auto* combine = app.add_subcommand("combine", "Multigraded table over several blocks");
    combine->add_option("--group", ca.group)->required();
    combine->add_option("--blocks", ca.blocks)->required()->delimiter(',');
    combine->add_option("--terms", ca.terms, "Largest total degree");

    std::string jmax;
    auto* dinf = app.add_subcommand("dinf", "SO(3) > D_inf correlation");
    dinf->add_option("--jmax", jmax)->required();

    std::string jtext;
    bool upto = false;
    auto* basis = app.add_subcommand("basis", "Labeled Jordan-Schwinger basis for 2D3");
    basis->add_option("--j", jtext)->required();
    basis->add_flag("--upto", upto, "Include every j' <= j");

    std::string vgroup;
    int max_degree = 12;
    auto* verify = app.add_subcommand("verify", "Cross-check a group (or 'all')");
    verify->add_option("--group", vgroup)->required();
    verify->add_option("--max-degree", max_degree);
    int oracle_degree = -1;
    verify->add_option("--oracle-degree", oracle_degree,
                       "Largest degree for explicit symmetric powers (default: min(max-degree, 12))");

    OeisArgs oa;
    auto* oeis = app.add_subcommand("oeis", "OEIS cross-reference");
    oeis->require_subcommand(1);
    auto* match = oeis->add_subcommand("match", "Find a column in a stripped snapshot");
    match->add_option("--stripped", oa.stripped, "OEIS stripped file");
    match->add_option("--group", oa.group)->required();
    match->add_option("--irrep", oa.irrep)->required();
    match->add_option("--rep", oa.rep);
    match->add_option("--terms", oa.terms, "Largest degree");
    match->add_option("--min-overlap", oa.min_overlap)->check(CLI::PositiveNumber);
    match->add_flag("--online", oa.online, "Also query oeis.org");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return static_cast<int>(ExitCode::usage);
    }

    try {
        Session s(cfg);
        if (app.got_subcommand("list-groups")) cmd_list_groups(s, out);
        else if (app.got_subcommand(table)) cmd_table(s, ta, out);
        else if (app.got_subcommand(molien)) cmd_molien(s, ma, out);
        else if (app.got_subcommand(combine)) cmd_combine(s, ca, out);
        else if (app.got_subcommand(dinf)) cmd_dinf(s, jmax, out);
        else if (app.got_subcommand(basis)) cmd_basis(s, jtext, upto, out);
        else if (app.got_subcommand(verify)) cmd_verify(s, vgroup, max_degree, oracle_degree, out);
        else if (oeis->got_subcommand(match)) cmd_oeis_match(s, oa, out, err);
    } catch (const UnknownNameError& e) {
        err << "error: " << e.what() << "\navailable: " << join(e.available, ", ") << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const MismatchError& e) {
        err << "mismatch: " << e.what() << '\n';
        return static_cast<int>(ExitCode::mismatch);
    } catch (const UnverifiedTableError& e) {
        err << "mismatch: " << e.what() << '\n';
        return static_cast<int>(ExitCode::mismatch);
    } catch (const std::domain_error& e) {
        err << "mismatch: " << e.what() << '\n';
        return static_cast<int>(ExitCode::mismatch);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    return static_cast<int>(ExitCode::success);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace spectable
