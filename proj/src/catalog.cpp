#include "spectable/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace spectable {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

Rational parse_angle(const std::string& text) {
    Rational r;
    try {
        r = Rational(text);
    } catch (const std::exception&) {
        throw CatalogError("bad angle '" + text + "'");
    }
    r.canonicalize();
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------

size_t CharacterTable::index(const std::string& name) const {
    std::string target = name;
    if (auto a = aliases.find(name); a != aliases.end()) target = a->second;
    for (size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].name == target) return i;
    throw UnknownNameError("unknown irrep '" + name + "'", names());
}

std::vector<std::string> CharacterTable::names() const {
    std::vector<std::string> out;
    for (const auto& ir : irreps) out.push_back(ir.name);
    return out;
}

// ---------------------------------------------------------------------------

Matrix parse_matrix(std::string_view text, int order) {
    const std::string s = trim(text);
    if (s.size() < 4 || s.front() != '[' || s.back() != ']') throw CatalogError("bad matrix literal '" + s + "'");
    const auto rows_text = split_top_level(std::string_view(s).substr(1, s.size() - 2), ',');
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& r : rows_text) {
        if (r.size() < 2 || r.front() != '[' || r.back() != ']') throw CatalogError("bad matrix row '" + r + "'");
        std::vector<Cyclotomic> row;
        for (const auto& e : split_top_level(std::string_view(r).substr(1, r.size() - 2), ','))
            row.push_back(Cyclotomic::parse(e, order));
        if (!rows.empty() && row.size() != rows.front().size()) throw CatalogError("ragged matrix '" + s + "'");
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(rows, order);
}

GroupSpec parse_group_spec(std::string_view text, const std::string& source) {
    GroupSpec spec;
    spec.source = source;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    RepSpec* current_rep = nullptr;
    auto fail = [&](const std::string& why) { return CatalogError(source + ":" + std::to_string(line_no) + ": " + why); };
    auto to_size = [&](const std::string& t) -> size_t {
        try {
            size_t used = 0;
            const long v = std::stol(t, &used);
            if (used != t.size() || v < 0) throw std::invalid_argument(t);
            return static_cast<size_t>(v);
        } catch (const std::exception&) {
            throw fail("expected a non-negative integer, got '" + t + "'");
        }
    };

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto sp = line.find_first_of(" \t");
        const std::string key = line.substr(0, sp);
        const std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
        const auto tok = tokens(rest);

        if (key == "group") {
            if (tok.size() != 1) throw fail("group takes one name");
            spec.name = tok[0];
        } else if (key == "order") {
            if (tok.size() != 1) throw fail("order takes one integer");
            spec.order = to_size(tok[0]);
        } else if (key == "cyclotomic") {
            if (tok.size() != 1) throw fail("cyclotomic takes one integer");
            spec.cyclotomic_order = static_cast<int>(to_size(tok[0]));
            if (spec.cyclotomic_order < 1) throw fail("cyclotomic order must be positive");
        } else if (key == "defining") {
            if (tok.size() != 1) throw fail("defining takes one name");
            spec.defining = tok[0];
        } else if (key == "cover") {
            if (tok.size() != 1) throw fail("cover takes one group name");
            spec.cover = tok[0];
        } else if (key == "gen") {
            const auto eq = rest.find('=');
            if (eq == std::string::npos) throw fail("gen needs '<label> = <matrix>'");
            GeneratorSpec g{trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)), line_no};
            if (g.label.empty() || g.label == "e" || g.label.find('.') != std::string::npos)
                throw fail("invalid generator label '" + g.label + "'");
            (current_rep ? current_rep->generators : spec.generators).push_back(std::move(g));
        } else if (key == "rep") {
            if (tok.size() != 1) throw fail("rep takes one name");
            spec.reps.push_back(RepSpec{tok[0], {}});
            current_rep = &spec.reps.back();
        } else if (key == "class") {
            if (tok.empty()) throw fail("class needs a name");
            ClassSpec c;
            c.name = tok[0];
            c.line = line_no;
            bool have_size = false;
            static const std::set<std::string> keywords{"rep", "order", "trace", "size", "angle"};
            for (size_t i = 1; i < tok.size();) {
                const std::string& k = tok[i];
                if (!keywords.count(k)) throw fail("unexpected token '" + k + "' in class line");
                if (i + 1 >= tok.size()) throw fail("missing value after '" + k + "'");
                if (k == "rep") {
                    c.word = tok[i + 1];
                    i += 2;
                } else if (k == "order") {
                    c.element_order = static_cast<int>(to_size(tok[i + 1]));
                    i += 2;
                } else if (k == "size") {
                    c.size = to_size(tok[i + 1]);
                    have_size = true;
                    i += 2;
                } else if (k == "angle") {
                    try {
                        c.angle = parse_angle(tok[i + 1]);
                    } catch (const CatalogError& e) {
                        throw fail(e.what());
                    }
                    i += 2;
                    if (i < tok.size() && tok[i] == "pi") ++i;
                } else {  // trace: literal runs to the next keyword
                    std::string lit;
                    size_t j = i + 1;
                    while (j < tok.size() && !keywords.count(tok[j])) lit += tok[j++];
                    c.trace = lit;
                    i = j;
                }
            }
            if (!have_size) throw fail("class " + c.name + " has no size");
            spec.classes.push_back(std::move(c));
        } else if (key == "irrep") {
            const auto colon = rest.find(':');
            if (colon == std::string::npos) throw fail("irrep needs ':' before its values");
            const auto head = tokens(rest.substr(0, colon));
            if (head.empty() || head.size() > 2) throw fail("irrep header is '<name> [spinor|vector]'");
            IrrepSpec ir;
            ir.name = head[0];
            ir.line = line_no;
            if (head.size() == 2) {
                if (head[1] == "spinor")
                    ir.spinor = true;
                else if (head[1] == "vector")
                    ir.spinor = false;
                else
                    throw fail("irrep kind must be spinor or vector");
            }
            ir.values = split_top_level(rest.substr(colon + 1), ',');
            spec.irreps.push_back(std::move(ir));
        } else if (key == "alias") {
            const auto eq = rest.find('=');
            if (eq == std::string::npos) throw fail("alias needs '<name> = <target>'");
            spec.aliases.emplace_back(trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)));
        } else {
            throw fail("unknown keyword '" + key + "'");
        }
    }
    if (spec.name.empty()) throw CatalogError(source + ": missing 'group' line");
    if (spec.generators.empty()) throw CatalogError(source + ": no generators");
    return spec;
}

// ---------------------------------------------------------------------------

Cyclotomic rotation_trace(const Rational& angle, size_t dim) {
    Rational a = angle;
    a.canonicalize();
    const long p = a.get_num().get_si();
    const long q = a.get_den().get_si();
    if (dim == 2) {
        const int n = static_cast<int>(4 * q);
        return Cyclotomic::root(n, p) + Cyclotomic::root(n, -p);
    }
    if (dim == 3) {
        const int n = static_cast<int>(2 * q);
        return Cyclotomic(n, 1) + Cyclotomic::root(n, p) + Cyclotomic::root(n, -p);
    }
    throw std::invalid_argument("rotation_trace: dimension must be 2 or 3");
}

CharacterTable load_character_table(const GroupSpec& spec, FiniteGroup& group) {
    const int order = group.cyclotomic_order;
    const std::string where = spec.source.empty() ? spec.name : spec.source;
    if (spec.classes.size() != group.classes.size())
        throw CatalogError(where + ": table lists " + std::to_string(spec.classes.size()) + " classes but the group has " +
                           std::to_string(group.classes.size()));

    std::vector<std::optional<size_t>> column_of(spec.classes.size());
    std::vector<bool> taken(group.classes.size(), false);
    auto line = [&](const ClassSpec& c) { return where + ":" + std::to_string(c.line) + ": class " + c.name; };
    auto fits = [&](const ClassSpec& c, const ConjugacyClass& k) {
        if (c.size != k.size) return false;
        if (c.element_order && *c.element_order != k.element_order) return false;
        if (c.trace && !(Cyclotomic::parse(*c.trace, order) == k.trace)) return false;
        return true;
    };

    // Pinned classes first, then signature matching among the rest.
    for (size_t i = 0; i < spec.classes.size(); ++i) {
        const auto& c = spec.classes[i];
        if (!c.word) continue;
        size_t k;
        try {
            k = group.class_of[group.evaluate_word(*c.word)];
        } catch (const GroupError& e) {
            throw CatalogError(line(c) + ": " + e.what());
        }
        if (taken[k]) throw CatalogError(line(c) + ": word " + *c.word + " lands in an already matched class");
        if (!fits(c, group.classes[k]))
            throw CatalogError(line(c) + ": word " + *c.word + " gives a class of size " +
                               std::to_string(group.classes[k].size) + ", order " +
                               std::to_string(group.classes[k].element_order) + ", trace " +
                               group.classes[k].trace.to_string());
        taken[k] = true;
        column_of[i] = k;
    }
    for (size_t i = 0; i < spec.classes.size(); ++i) {
        const auto& c = spec.classes[i];
        if (c.word) continue;
        std::vector<size_t> hits;
        for (size_t k = 0; k < group.classes.size(); ++k)
            if (!taken[k] && fits(c, group.classes[k])) hits.push_back(k);
        if (hits.empty()) throw CatalogError(line(c) + ": no computed class has this signature");
        if (hits.size() > 1)
            throw CatalogError(line(c) + ": signature (order, size, trace) is ambiguous across " +
                               std::to_string(hits.size()) + " classes; pin it with 'rep <word>'");
        taken[hits[0]] = true;
        column_of[i] = hits[0];
    }

    for (size_t i = 0; i < spec.classes.size(); ++i) {
        auto& k = group.classes[*column_of[i]];
        k.name = spec.classes[i].name;
        k.angle = spec.classes[i].angle;
    }

    CharacterTable table;
    std::set<std::string> seen;
    for (const auto& ir : spec.irreps) {
        const std::string at = where + ":" + std::to_string(ir.line) + ": irrep " + ir.name;
        if (!seen.insert(ir.name).second) throw CatalogError(at + ": duplicate name");
        if (ir.values.size() != spec.classes.size())
            throw CatalogError(at + ": has " + std::to_string(ir.values.size()) + " values for " +
                               std::to_string(spec.classes.size()) + " classes");
        Irrep out;
        out.name = ir.name;
        out.values.assign(group.classes.size(), Cyclotomic(order));
        for (size_t i = 0; i < ir.values.size(); ++i) {
            try {
                out.values[*column_of[i]] = Cyclotomic::parse(ir.values[i], order);
            } catch (const std::invalid_argument& e) {
                throw CatalogError(at + ": " + e.what());
            }
        }
        const Cyclotomic& d = out.values[group.class_of[0]];
        if (!d.is_rational() || d.to_rational() <= 0 || d.to_rational().get_den() != 1)
            throw CatalogError(at + ": value at the identity must be a positive integer");
        out.dim = d.to_rational().get_num().get_ui();
        if (group.minus_identity) {
            const Cyclotomic& m = out.values[group.class_of[*group.minus_identity]];
            out.spinor = m == Cyclotomic(order, -static_cast<long>(out.dim));
        } else {
            out.spinor = ir.spinor.value_or(false);
        }
        table.irreps.push_back(std::move(out));
    }
    for (const auto& [alias, target] : spec.aliases) {
        if (!seen.count(target))
            throw CatalogError(where + ": alias " + alias + " points to unknown irrep " + target);
        table.aliases[alias] = target;
    }
    return table;
}

CharacterTable load_character_table(std::string_view text, FiniteGroup& group) {
    return load_character_table(parse_group_spec(text), group);
}

OrthogonalityReport verify_orthogonality(const CharacterTable& table, const FiniteGroup& group) {
    OrthogonalityReport report;
    const int order = group.cyclotomic_order;
    const size_t nc = group.classes.size();
    const Rational g(static_cast<long>(group.order()));
    if (table.irreps.size() != nc)
        report.problems.push_back("irrep count " + std::to_string(table.irreps.size()) + " differs from class count " +
                                  std::to_string(nc));

    Rational dim_squares = 0;
    for (const auto& ir : table.irreps) dim_squares += Rational(static_cast<long>(ir.dim * ir.dim));
    if (dim_squares != g)
        report.problems.push_back("sum of squared dimensions is " + dim_squares.get_str() + ", expected " + g.get_str());

    for (size_t a = 0; a < table.irreps.size(); ++a)
        for (size_t b = a; b < table.irreps.size(); ++b) {
            Cyclotomic s(order);
            for (size_t c = 0; c < nc; ++c)
                s += Cyclotomic(order, static_cast<long>(group.classes[c].size)) * table.irreps[a].values[c] *
                     table.irreps[b].values[c].conj();
            const Cyclotomic expect(order, a == b ? g : Rational(0));
            if (!(s == expect))
                report.problems.push_back("row orthogonality fails for " + table.irreps[a].name + " x " +
                                          table.irreps[b].name + ": sum is " + s.to_string() + ", expected " +
                                          expect.to_string());
        }
    if (table.irreps.size() == nc)
        for (size_t c = 0; c < nc; ++c)
            for (size_t d = c; d < nc; ++d) {
                Cyclotomic s(order);
                for (const auto& ir : table.irreps) s += ir.values[c] * ir.values[d].conj();
                const Rational e = c == d ? g / Rational(static_cast<long>(group.classes[c].size)) : Rational(0);
                if (!(s == Cyclotomic(order, e)))
                    report.problems.push_back("column orthogonality fails for classes " + group.classes[c].name +
                                              " x " + group.classes[d].name + ": sum is " + s.to_string());
            }

    for (const auto& k : group.classes) {
        if (!k.angle || (group.dim() != 2 && group.dim() != 3)) continue;
        if (!(rotation_trace(*k.angle, group.dim()) == k.trace))
            report.problems.push_back("class " + k.name + " angle " + k.angle->get_str() + " pi does not match trace " +
                                      k.trace.to_string());
    }
    return report;
}

// ---------------------------------------------------------------------------

const Representation& GroupData::rep(const std::string& name) const {
    if (auto it = reps.find(name); it != reps.end()) return it->second;
    if (auto a = table.aliases.find(name); a != table.aliases.end())
        if (auto it = reps.find(a->second); it != reps.end()) return it->second;
    throw UnknownNameError("unknown representation '" + name + "' for group " + group.name, rep_names());
}

std::vector<std::string> GroupData::rep_names() const {
    std::vector<std::string> out;
    for (const auto& [n, r] : reps) out.push_back(n);
    return out;
}

const CharacterTable& GroupData::verified_table() const {
    if (!table.verified) {
        std::string msg = "character table of " + group.name + " is not verified";
        if (!report.problems.empty()) msg += ": " + report.problems.front();
        throw UnverifiedTableError(msg);
    }
    return table;
}

GroupData build_group(const GroupSpec& spec, std::optional<int> cyclotomic_override) {
    int order = spec.cyclotomic_order;
    if (cyclotomic_override) {
        if (*cyclotomic_override % spec.cyclotomic_order != 0)
            throw CatalogError("cyclotomic order " + std::to_string(*cyclotomic_override) + " does not contain Q(z" +
                               std::to_string(spec.cyclotomic_order) + ") required by " + spec.name);
        order = *cyclotomic_override;
    }
    auto gens = [&](const std::vector<GeneratorSpec>& list) {
        std::vector<Generator> out;
        for (const auto& g : list) {
            try {
                out.push_back({g.label, parse_matrix(g.matrix, order)});
            } catch (const std::invalid_argument& e) {
                throw CatalogError(spec.source + ":" + std::to_string(g.line) + ": " + e.what());
            }
        }
        return out;
    };

    GroupData data;
    data.spec = spec;
    try {
        data.group = close_group(gens(spec.generators), spec.order.value_or(100000), spec.name);
    } catch (const GroupError& e) {
        throw CatalogError(spec.source + ": " + e.what());
    }
    if (spec.order && data.group.order() != *spec.order)
        throw CatalogError(spec.source + ": closure has order " + std::to_string(data.group.order()) + ", file says " +
                           std::to_string(*spec.order));
    data.table = load_character_table(spec, data.group);
    data.report = verify_orthogonality(data.table, data.group);
    data.table.verified = data.report.ok();

    data.defining_rep = spec.defining;
    data.group.defining.name = spec.defining;
    data.reps[spec.defining] = data.group.defining;
    for (const auto& r : spec.reps) {
        try {
            data.reps[r.name] = data.group.representation(r.name, gens(r.generators));
        } catch (const GroupError& e) {
            throw CatalogError(spec.source + ": " + e.what());
        }
    }
    return data;
}

// ---------------------------------------------------------------------------

Catalog::Catalog(std::filesystem::path directory, std::optional<int> cyclotomic_override)
    : directory_(std::move(directory)), override_(cyclotomic_override) {
    if (!std::filesystem::is_directory(directory_))
        throw CatalogError("catalog directory " + directory_.string() + " does not exist");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(directory_))
        if (entry.is_regular_file() && entry.path().extension() == ".grp") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw CatalogError("cannot read " + f.string());
        std::stringstream buf;
        buf << in.rdbuf();
        GroupSpec s = parse_group_spec(buf.str(), f.string());
        if (specs_.count(s.name)) throw CatalogError("group " + s.name + " defined twice in " + directory_.string());
        specs_.emplace(s.name, std::move(s));
    }
}

std::filesystem::path Catalog::default_directory() {
    if (const char* env = std::getenv("SPECTABLE_CATALOG"); env && *env) return env;
    return SPECTABLE_DEFAULT_CATALOG;
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const auto& [n, s] : specs_) out.push_back(n);
    return out;
}

const GroupSpec& Catalog::spec(const std::string& name) const {
    auto it = specs_.find(name);
    if (it == specs_.end()) throw UnknownNameError("unknown group '" + name + "'", names());
    return it->second;
}

const GroupData& Catalog::get(const std::string& name) const {
    const GroupSpec& s = spec(name);
    std::lock_guard lock(mutex_);
    auto& slot = built_[name];
    if (!slot) slot = std::make_unique<GroupData>(build_group(s, override_));
    return *slot;
}

}  // namespace spectable
