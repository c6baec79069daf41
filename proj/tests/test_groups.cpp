#include <doctest.h>

#include <fstream>
#include <numeric>
#include <sstream>
#include <regex>

#include "spectable/catalog.hpp"

using namespace spectable;

namespace {

Matrix lit(const std::string& text, int order) { return parse_matrix(text, order); }

const Catalog& catalog() {
    static const Catalog c(SPECTABLE_DEFAULT_CATALOG);
    return c;
}

std::string read_spec_text(const std::string& name) {
    std::ifstream in(catalog().spec(name).source);
    std::stringstream b;
    b << in.rdbuf();
    return b.str();
}

}  // namespace

TEST_CASE("close_group small examples") {
    auto g = close_group({{"m", lit("[[-1,0],[0,-1]]", 1)}}, 10);
    CHECK(g.order() == 2);
    CHECK(g.minus_identity.has_value());
    CHECK(g.defining.elements[0].is_identity());

    CHECK_THROWS_AS(close_group({{"x", lit("[[2,0],[0,1]]", 1)}}, 10), GroupError);
    // rotation by 2pi/12 about z needs order 12 but the limit is 6
    CHECK_THROWS_AS(close_group({{"a", lit("[[z24^-1,0],[0,z24^1]]", 24)}}, 6), GroupError);
}

TEST_CASE("conjugacy classes") {
    SUBCASE("abelian group has singleton classes") {
        auto g = close_group({{"a", lit("[[z12^-1,0],[0,z12^1]]", 12)}}, 100);
        CHECK(g.order() == 12);
        CHECK(g.classes.size() == 12);
        for (const auto& c : g.classes) CHECK(c.size == 1);
    }
    SUBCASE("dicyclic group of order 12") {
        auto g = close_group({{"a", lit("[[z6^-1,0],[0,z6^1]]", 12)}, {"b", lit("[[0,-1],[1,0]]", 12)}}, 100);
        CHECK(g.order() == 12);
        CHECK(g.classes.size() == 6);
        size_t total = 0;
        for (const auto& c : g.classes) {
            total += c.size;
            for (size_t m : c.members) {
                CHECK(g.defining.elements[m].trace() == c.trace);
                CHECK(g.element_order[m] == c.element_order);
            }
            // closed under conjugation by every element
            for (size_t x = 0; x < g.order(); ++x)
                CHECK(g.class_of[g.multiply(g.multiply(x, c.representative), g.inverse[x])] == g.class_of[c.representative]);
        }
        CHECK(total == 12);
        for (size_t i = 1; i < g.classes.size(); ++i)
            CHECK(g.classes[i - 1].element_order <= g.classes[i].element_order);
    }
}

TEST_CASE("words and representations") {
    auto g = close_group({{"a", lit("[[z6^-1,0],[0,z6^1]]", 12)}, {"b", lit("[[0,-1],[1,0]]", 12)}}, 100);
    for (size_t i = 0; i < g.order(); ++i) CHECK(g.evaluate_word(g.word_string(i)) == i);
    CHECK_THROWS_AS(g.evaluate_word("a.q"), GroupError);
    auto sign = g.representation("sign", {{"a", lit("[[1]]", 12)}, {"b", lit("[[-1]]", 12)}});
    CHECK(sign.elements.size() == 12);
    // b -> 1 with a -> -1 breaks b^2 = a^3
    CHECK_THROWS_AS(g.representation("bad", {{"a", lit("[[-1]]", 12)}, {"b", lit("[[1]]", 12)}}), GroupError);
}

TEST_CASE("catalog groups build and verify") {
    const std::map<std::string, size_t> orders{
        {"trivial1", 1}, {"trivial2", 1}, {"C2", 2}, {"C3", 3},  {"C4", 4},  {"C6", 6},   {"D2", 4},
        {"D3", 6},       {"D4", 8},       {"D6", 12}, {"T", 12}, {"O", 24},  {"I", 60},   {"2C2", 4},
        {"2C3", 6},      {"2C4", 8},      {"2C6", 12}, {"2D2", 8}, {"2D3", 12}, {"2D4", 16}, {"2D6", 24},
        {"2T", 24},      {"2O", 48},      {"2I", 120}};
    for (const auto& [name, order] : orders) {
        CAPTURE(name);
        const auto& d = catalog().get(name);
        CHECK(d.group.order() == order);
        CHECK(d.report.ok());
        CHECK(d.table.verified);
        CHECK(d.table.irreps.size() == d.group.classes.size());
        size_t sum = 0;
        for (const auto& ir : d.table.irreps) sum += ir.dim * ir.dim;
        CHECK(sum == order);
        for (const auto& m : d.group.defining.elements) CHECK(m.is_unitary());
        for (const auto& c : d.group.classes) CHECK(!c.name.empty());
        // every extra representation has characters that are class functions
        for (const auto& [rn, rep] : d.reps)
            for (const auto& c : d.group.classes)
                for (size_t m : c.members) CHECK(rep.elements[m].trace() == rep.elements[c.representative].trace());
        if (d.spec.cover) CHECK(catalog().get(*d.spec.cover).group.order() * 2 == order);
    }
}

TEST_CASE("extra representations decompose as their named irreps") {
    for (const std::string name : {"D3", "2D3", "O"}) {
        const auto& d = catalog().get(name);
        for (const auto& [rn, rep] : d.reps) {
            if (rn == "rot") continue;  // reducible defining rep
            CAPTURE(name);
            CAPTURE(rn);
            const auto& ir = d.table[rn];
            for (size_t c = 0; c < d.group.classes.size(); ++c)
                CHECK(rep.elements[d.group.classes[c].representative].trace() == ir.values[c]);
        }
    }
}

TEST_CASE("2D3 table details") {
    const auto& d = catalog().get("2D3");
    CHECK(d.group.classes.size() == 6);
    std::vector<size_t> dims;
    for (const auto& ir : d.table.irreps) dims.push_back(ir.dim);
    CHECK(dims == std::vector<size_t>{1, 1, 2, 2, 1, 1});
    CHECK(d.table["E_1/2"].spinor);
    CHECK(!d.table["E_1"].spinor);
    CHECK(d.table["E_3/2^L"].spinor);
    CHECK(d.table.index("E") == d.table.index("E_1"));
    CHECK_THROWS_AS(d.table.index("NOPE"), UnknownNameError);
}

TEST_CASE("trivial table") {
    auto g = close_group({{"g", lit("[[1]]", 1)}}, 1);
    auto t = load_character_table("group X\ngen g = [[1]]\nclass E size 1\nirrep A : 1\n", g);
    CHECK(verify_orthogonality(t, g).ok());
}

TEST_CASE("perturbed character value fails orthogonality") {
    std::string text = read_spec_text("2D3");
    text = std::regex_replace(text, std::regex("irrep E_1 vector : 2, 2, -1, -1, 0, 0"),
                              "irrep E_1 vector : 2, 2, -1, -1, 1, 0");
    auto spec = parse_group_spec(text, "perturbed");
    auto data = build_group(spec);
    CHECK(!data.report.ok());
    CHECK(!data.table.verified);
    CHECK_THROWS_AS(data.verified_table(), CatalogError);
}

TEST_CASE("ambiguous class signature demands a word") {
    std::string text = read_spec_text("2D3");
    text = std::regex_replace(text, std::regex(" rep b\\.a size"), " size");
    text = std::regex_replace(text, std::regex(" rep b size"), " size");
    auto spec = parse_group_spec(text, "unpinned");
    CHECK_THROWS_WITH_AS(build_group(spec), doctest::Contains("ambiguous"), CatalogError);
}

TEST_CASE("catalog parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_group_spec("group X\nfrobnicate 3\n", "f.grp"), doctest::Contains("f.grp:2"), CatalogError);
    CHECK_THROWS_AS(parse_group_spec("gen a = [[1]]\n"), CatalogError);
    CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]", 1), CatalogError);
}

TEST_CASE("cyclotomic override") {
    auto d = build_group(catalog().spec("2O"), 120);
    CHECK(d.group.cyclotomic_order == 120);
    CHECK(d.report.ok());
    CHECK_THROWS_AS(build_group(catalog().spec("2O"), 12), CatalogError);
}

TEST_CASE("rotation traces") {
    CHECK(rotation_trace(Rational(0), 2) == Cyclotomic(1, 2));
    CHECK(rotation_trace(Rational(2), 2) == Cyclotomic(1, -2));
    CHECK(rotation_trace(Rational(1), 3) == Cyclotomic(1, -1));
    CHECK(rotation_trace(Rational(2, 3), 3) == Cyclotomic(1, 0));
}
