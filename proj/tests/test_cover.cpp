#include <doctest.h>

#include <numeric>
#include <random>

#include "spectable/catalog.hpp"
#include "spectable/cover.hpp"

using namespace spectable;

namespace {

const Catalog& catalog() {
    static const Catalog c(SPECTABLE_DEFAULT_CATALOG);
    return c;
}

const std::vector<std::pair<std::string, std::string>> kPairs{
    {"2C2", "C2"}, {"2C3", "C3"}, {"2C4", "C4"}, {"2C6", "C6"}, {"2D2", "D2"}, {"2D3", "D3"},
    {"2D4", "D4"}, {"2D6", "D6"}, {"2T", "T"},   {"2O", "O"},   {"2I", "I"}};

}  // namespace

TEST_CASE("spinor frame constants") {
    const auto f = SpinorFrame::make(8);
    for (const auto& s : f.sigma) CHECK((s * s).is_identity());
    CHECK((f.g[0] + f.g[2]).is_identity());
    const Cyclotomic sqrt2 = Cyclotomic::parse("z8^1 + z8^7", 8);
    CHECK(sqrt2 * f.g[1] == f.sigma[0]);
    CHECK(f.g[0] - f.g[2] == f.sigma[2]);
    CHECK_THROWS(SpinorFrame::make(12));
}

TEST_CASE("spin to rotation examples") {
    const Matrix minus = Cyclotomic(8, -1) * Matrix::identity(2, 8);
    CHECK(spin_to_rotation(minus).is_identity());
    const Matrix u = parse_matrix("[[z4^-1, 0],[0, z4^1]]", 4);
    CHECK(spin_to_rotation(u) == parse_matrix("[[-1,0,0],[0,-1,0],[0,0,1]]", 8));
    // Euler angles (pi,0,0) give the same matrix
    CHECK(spin_half(EulerAngles(1, 0, 0), 4) == u);
}

TEST_CASE("Euler angle spin and rotation agree") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-12, 12);
    const std::vector<int> dens{1, 2, 3, 4, 6};
    std::uniform_int_distribution<size_t> pick(0, dens.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
        Rational a(num(rng), dens[pick(rng)]), b(num(rng), dens[pick(rng)]), c(num(rng), dens[pick(rng)]);
        a.canonicalize();
        b.canonicalize();
        c.canonicalize();
        const EulerAngles e(a, b, c);
        CHECK(e.alpha >= 0);
        CHECK(e.alpha < 4);
        const int order = std::lcm(e.cyclotomic_order(), 8);
        const Matrix u = spin_half(e, order);
        CHECK(u.is_unitary());
        CHECK(spin_to_rotation(u) == rotation(e, order));
    }
    // 2pi about any axis is -I in SU(2)
    CHECK(spin_half(EulerAngles(2, 0, 0), 4) == Cyclotomic(4, -1) * Matrix::identity(2, 4));
}

TEST_CASE("rotation map is a homomorphism") {
    const auto& g = catalog().get("2O").group;
    std::mt19937 rng(3);
    std::uniform_int_distribution<size_t> pick(0, g.order() - 1);
    for (int t = 0; t < 30; ++t) {
        const auto& a = g.defining.elements[pick(rng)];
        const auto& b = g.defining.elements[pick(rng)];
        CHECK(spin_to_rotation(a * b) == spin_to_rotation(a) * spin_to_rotation(b));
    }
}

TEST_CASE("double cover verification for catalog pairs") {
    for (const auto& [spin, vec] : kPairs) {
        CAPTURE(spin);
        const auto& s = catalog().get(spin);
        CHECK(s.spec.cover == vec);
        const auto report = verify_double_cover(s.group, catalog().get(vec).group);
        for (const auto& p : report.problems) MESSAGE(p);
        CHECK(report.ok());
        CHECK(report.kernel_size == 2);
    }
}

TEST_CASE("double cover without -I fails") {
    // cyclic group of order 3 inside SU(2)
    auto spin = close_group({{"a", parse_matrix("[[z3^2, 0],[0, z3^1]]", 3)}}, 10);
    auto vec = catalog().get("C3").group;
    const auto report = verify_double_cover(spin, vec);
    CHECK(!report.ok());
}

TEST_CASE("exact square roots") {
    CHECK(*real_sqrt(Cyclotomic(1, Rational(9, 4)), 1) == Cyclotomic(1, Rational(3, 2)));
    const Cyclotomic half(8, Rational(1, 2));
    const auto r = real_sqrt(half, 8);
    REQUIRE(r);
    CHECK(*r * *r == half);
    CHECK(r->to_complex().real() > 0);
    CHECK(!real_sqrt(Cyclotomic(4, 2), 4));   // sqrt 2 not in Q(i)
    CHECK(!real_sqrt(Cyclotomic(8, -1), 8));  // negative
    // cos^2(pi/5) lives in Q(z5); its root cos(pi/5) = phi/2 too
    const Cyclotomic phi = Cyclotomic::parse("-z5^2 - z5^3", 5);
    const auto c = real_sqrt(phi * phi * Rational(1, 4), 20);
    REQUIRE(c);
    CHECK(*c == (phi * Rational(1, 2)).embed(20));
}

TEST_CASE("lift_numeric") {
    SUBCASE("identity rotation lifts to +-I") {
        auto vec = close_group({{"e1", Matrix::identity(3, 1)}}, 1, "E");
        auto spin = lift_numeric(vec, 4);
        CHECK(spin.order() == 2);
        CHECK(spin.minus_identity.has_value());
    }
    SUBCASE("pi about z") {
        auto vec = close_group({{"a", parse_matrix("[[-1,0,0],[0,-1,0],[0,0,1]]", 1)}}, 2, "C2");
        auto spin = lift_numeric(vec, 4);
        CHECK(spin.order() == 4);
        CHECK(spin.find(parse_matrix("[[z4^-1,0],[0,z4^1]]", 4)));
        CHECK(spin.find(parse_matrix("[[z4^1,0],[0,z4^-1]]", 4)));
    }
    SUBCASE("catalog rotation groups") {
        for (const auto& [spin_name, vec_name] : kPairs) {
            CAPTURE(vec_name);
            const auto& vec = catalog().get(vec_name).group;
            const int order = catalog().get(spin_name).group.cyclotomic_order;
            auto lifted = lift_numeric(vec, order);
            CHECK(lifted.order() == 2 * vec.order());
            CHECK(verify_double_cover(lifted, vec).ok());
        }
    }
    SUBCASE("icosahedral rotation needs the fifth roots") {
        const auto& vec = catalog().get("I").group;
        CHECK_THROWS_AS(lift_numeric(vec, 8), ExactificationError);
    }
}
