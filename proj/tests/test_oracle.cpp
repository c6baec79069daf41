#include <doctest.h>

#include <random>

#include "spectable/molien.hpp"
#include "spectable/oracle.hpp"

using namespace spectable;

namespace {

const Catalog& catalog() {
    static const Catalog c(SPECTABLE_DEFAULT_CATALOG);
    return c;
}

const Representation& defining(const GroupData& d) { return d.rep(d.defining_rep); }

}  // namespace

TEST_CASE("monomial basis order and size") {
    const MonomialBasis b(3, 2);
    REQUIRE(b.size() == 6);
    CHECK(b.monomials.front() == MultiIndex{2, 0, 0});
    CHECK(b.monomials[1] == MultiIndex{1, 1, 0});
    CHECK(b.monomials.back() == MultiIndex{0, 0, 2});
    for (int n = 0; n <= 12; ++n) CHECK(MonomialBasis(3, n).size() == static_cast<size_t>((n + 1) * (n + 2) / 2));
    CHECK_THROWS(MonomialBasis(0, 1));
}

TEST_CASE("symmetric power examples") {
    const Matrix a = parse_matrix("[[1, z12^1],[2, z12^5]]", 12);
    CHECK(symmetric_power_rep(a, 1) == a);
    CHECK(symmetric_power_rep(Matrix::identity(3, 1), 4).is_identity());
    CHECK(symmetric_power_rep(Matrix::identity(3, 1), 4).rows() == 15);
    const Matrix d = parse_matrix("[[z8^1, 0],[0, z8^-1]]", 8);
    CHECK(symmetric_power_rep(d, 2) == parse_matrix("[[z8^2,0,0],[0,1,0],[0,0,z8^-2]]", 8));
    // x1 -> x1 + x2, x2 -> x2 sends x1^2 to x1^2 + 2 x1 x2 + x2^2
    const Matrix shear = parse_matrix("[[1,0],[1,1]]", 1);
    CHECK(symmetric_power_rep(shear, 2) == parse_matrix("[[1,0,0],[2,1,0],[1,1,1]]", 1));
}

TEST_CASE("symmetric powers are homomorphic") {
    const auto& g = catalog().get("2O").group;
    const auto& o = catalog().get("O");
    std::mt19937 rng(11);
    for (int t = 0; t < 8; ++t) {
        const auto& a = g.defining.elements[rng() % g.order()];
        const auto& b = g.defining.elements[rng() % g.order()];
        CHECK(symmetric_power_rep(a * b, 5) == symmetric_power_rep(a, 5) * symmetric_power_rep(b, 5));
        const auto& r = defining(o);
        const auto& x = r.elements[rng() % o.group.order()];
        const auto& y = r.elements[rng() % o.group.order()];
        CHECK(symmetric_power_rep(x * y, 4) == symmetric_power_rep(x, 4) * symmetric_power_rep(y, 4));
    }
}

TEST_CASE("projector traces") {
    const auto& triv = catalog().get("trivial2");
    CHECK(projector_trace_table(triv.group, triv.verified_table(), defining(triv), "A", 3)[3] == 4);
    const auto& d = catalog().get("2D3");
    const auto a0 = projector_trace_table(d.group, d.verified_table(), defining(d), "A_0", 8);
    CHECK(a0 == std::vector<long>{1, 0, 0, 0, 1, 0, 1, 0, 2});
    for (const auto& name : catalog().names()) {
        CAPTURE(name);
        const auto& g = catalog().get(name);
        const auto cols = projector_trace_columns(g.group, g.verified_table(), defining(g), 1);
        long sum = 0;
        for (size_t y = 0; y < cols.size(); ++y)
            sum += static_cast<long>(g.verified_table().irreps[y].dim) * cols[y][1];
        CHECK(sum == static_cast<long>(defining(g).dim));
    }
}

TEST_CASE("projector matrices") {
    SUBCASE("trivial group gives the identity") {
        const auto& d = catalog().get("trivial3");
        CHECK(projector_matrix(d.group, d.verified_table(), defining(d), "A", 3).matrix.is_identity());
    }
    SUBCASE("2D3 degree 2 doublet") {
        const auto& d = catalog().get("2D3");
        const auto p = projector_matrix(d.group, d.verified_table(), defining(d), "E_1", 2);
        CHECK(p.trace() == Cyclotomic(1, 1));
        CHECK(p.idempotent().trace() == Cyclotomic(1, 2));
        CHECK(p.is_scaled_idempotent());
        CHECK(!(p.matrix * p.matrix == p.matrix));
        for (const auto& a : defining(d).elements) {
            const Matrix s = symmetric_power_rep(a.embed(p.matrix.order()), 2);
            CHECK(s * p.matrix == p.matrix * s);
        }
    }
    SUBCASE("completeness and orthogonality") {
        for (const std::string name : {"2D3", "2O", "O", "D4", "2T", "I"}) {
            CAPTURE(name);
            const auto& d = catalog().get(name);
            const auto& t = d.verified_table();
            const int n = name == "I" ? 4 : 6;
            std::vector<Matrix> e;
            for (const auto& y : t.names()) {
                const auto p = projector_matrix(d.group, t, defining(d), y, n);
                CHECK(p.is_scaled_idempotent());
                e.push_back(p.idempotent());
            }
            Matrix sum = e.front();
            for (size_t i = 1; i < e.size(); ++i) sum += e[i];
            CHECK(sum.is_identity());
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = 0; b < e.size(); ++b)
                    if (a != b) CHECK((e[a] * e[b]).is_zero());
        }
    }
}

TEST_CASE("determinant series identity") {
    const auto id = molien_identity_check(Matrix::identity(2, 1), 8);
    CHECK(id.ok());
    CHECK(id.traces[5] == Cyclotomic(1, 6));
    const auto neg = molien_identity_check(Cyclotomic(1, -1) * Matrix::identity(2, 1), 8);
    CHECK(neg.ok());
    CHECK(neg.traces[3] == Cyclotomic(1, -4));
    const auto& g = catalog().get("2O").group;
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) CHECK(molien_identity_check(g.defining.elements[rng() % g.order()], 12).ok());
}

TEST_CASE("rotation characters") {
    for (int tj = 0; tj <= 8; ++tj) {
        const Rational j(tj, 2);
        CHECK(rotation_character(j, Rational(0), 4) == Cyclotomic(4, tj + 1));
        CHECK(rotation_character(j, Rational(2), 4) == Cyclotomic(4, (tj % 2 ? -1 : 1) * (tj + 1)));
    }
    CHECK(rotation_character(Rational(1, 2), Rational(2), 4) == Cyclotomic(4, -2));
    // j = 1 at theta = 2pi/3: 1 + 2 cos(2pi/3) = 0
    CHECK(rotation_character(Rational(1), Rational(2, 3), 12).is_zero());
    CHECK_THROWS(rotation_character(Rational(1), Rational(2, 5), 12));
}

TEST_CASE("three-way agreement for double groups") {
    for (const std::string name : {"2C3", "2C4", "2D2", "2D3", "2D4", "2D6", "2T", "2O", "2I"}) {
        CAPTURE(name);
        const auto& d = catalog().get(name);
        const auto problems = three_way_agreement(d.group, d.verified_table(), defining(d), 12);
        for (const auto& p : problems) FAIL_CHECK(p);
        const auto cf = character_formula_table(d.group, d.verified_table(), Rational(6));
        const auto mt = correlation_table(d.group, d.verified_table(), defining(d), 12, false);
        for (size_t y = 0; y < cf.irreps.size(); ++y)
            for (size_t r = 0; r < cf.j.size(); ++r) CHECK(cf.counts[y][r] == mt.columns[y].counts[r]);
    }
}

TEST_CASE("character formula needs angles") {
    auto g = catalog().get("2D3").group;
    g.classes[2].angle.reset();
    CHECK_THROWS_AS(character_formula_table(g, catalog().get("2D3").verified_table(), Rational(2)), CatalogError);
}

TEST_CASE("diagonal trace kernel matches full symmetric powers") {
    const auto& o = catalog().get("I");
    const auto& r = defining(o);
    std::mt19937 rng(19);
    for (int t = 0; t < 4; ++t) {
        const auto& a = r.elements[rng() % o.group.order()];
        const auto traces = symmetric_power_traces(a, 6);
        for (int n = 0; n <= 6; ++n) CHECK(traces[static_cast<size_t>(n)] == symmetric_power_rep(a, n).trace());
    }
    const Matrix shear = parse_matrix("[[1,2,0],[0,1,3],[1,0,1]]", 1);
    const auto traces = symmetric_power_traces(shear, 5);
    for (int n = 0; n <= 5; ++n) CHECK(traces[static_cast<size_t>(n)] == symmetric_power_rep(shear, n).trace());
}
