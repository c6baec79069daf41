#include <doctest.h>

#include <chrono>

#include "spectable/basis.hpp"

using namespace spectable;

namespace {

const GroupData& d3() {
    static const Catalog c(SPECTABLE_DEFAULT_CATALOG);
    return c.get("2D3");
}

}  // namespace

TEST_CASE("Jordan-Schwinger map") {
    CHECK(jordan_schwinger(1, 0) == std::pair<Rational, Rational>(Rational(1, 2), Rational(1, 2)));
    CHECK(jordan_schwinger(3, 1) == std::pair<Rational, Rational>(Rational(2), Rational(1)));
    CHECK(jordan_schwinger(0, 0) == std::pair<Rational, Rational>(Rational(0), Rational(0)));
    CHECK(occupations(Rational(2), Rational(1)) == std::pair<long, long>(3, 1));
    CHECK_THROWS(jordan_schwinger(-1, 0));
    CHECK_THROWS(occupations(Rational(1), Rational(2)));
}

TEST_CASE("labels") {
    const auto zero = enumerate_basis(Rational(0));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].label == "A_0");
    CHECK(zero[0].chi == Phase::zero);
    CHECK(state_label(Rational(3), Rational(3), Phase::plus_one) == "A_0");
    CHECK(state_label(Rational(4), Rational(3), Phase::plus_one) == "A_1");
    CHECK(state_label(Rational(1), Rational(0), Phase::zero) == "A_1");
    CHECK(state_label(Rational(1, 2), Rational(1, 2), Phase::minus_one) == "E_1/2");
    CHECK(state_label(Rational(3, 2), Rational(3, 2), Phase::plus_i) == "E_3/2^L");
    CHECK(state_label(Rational(5, 2), Rational(3, 2), Phase::plus_i) == "E_3/2^R");
    CHECK_THROWS(state_label(Rational(3, 2), Rational(3, 2), Phase::plus_one));
    for (const auto& s : enumerate_basis(Rational(1, 2))) CHECK(s.label == (s.j == 0 ? "A_0" : "E_1/2"));
}

TEST_CASE("state polynomial") {
    const auto s = make_state(Rational(2), Rational(1), Phase::minus_one);
    // a1^3 a2 - a1 a2^3
    REQUIRE(s.coefficients.size() == 5);
    CHECK(s.coefficients[1] == Cyclotomic(4, 1));
    CHECK(s.coefficients[3] == Cyclotomic(4, -1));
    CHECK(s.coefficients[0].is_zero());
}

TEST_CASE("covariance") {
    CHECK(verify_covariance(make_state(Rational(0), Rational(0), Phase::zero), d3()));
    CHECK(verify_covariance(make_state(Rational(1), Rational(1), Phase::plus_one), d3()));
    CHECK(verify_covariance(make_state(Rational(1), Rational(1), Phase::minus_one), d3()));
    auto wrong = make_state(Rational(1), Rational(1), Phase::plus_one);
    wrong.label = "A_0";
    CHECK(!verify_covariance(wrong, d3()));
}

TEST_CASE("counts per j") {
    const auto all = enumerate_basis(Rational(6));
    std::map<std::pair<std::string, std::string>, int> n;
    for (const auto& s : all) ++n[{s.j.get_str(), s.label}];
    CHECK(n[{"2", "A_0"}] == 1);
    CHECK(n[{"2", "E_1"}] == 4);
    CHECK(n[{"2", "A_1"}] == 0);
    CHECK(n[{"3/2", "E_1/2"}] == 2);
    CHECK(n[{"3/2", "E_3/2^L"}] == 1);
    CHECK(n[{"3/2", "E_3/2^R"}] == 1);
    const auto r = count_check(Rational(6), d3());
    for (const auto& p : r.problems) FAIL_CHECK(p);
}

TEST_CASE("basis is complete, orthogonal and covariant through 2j = 12") {
    const auto start = std::chrono::steady_clock::now();
    const auto r = verify_basis(Rational(6), d3());
    for (const auto& p : r.problems) FAIL_CHECK(p);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
}
