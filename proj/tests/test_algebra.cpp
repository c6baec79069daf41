#include <doctest.h>

#include <random>

#include "spectable/matrix.hpp"
#include "spectable/series.hpp"

using namespace spectable;

namespace {

Cyclotomic random_cyclotomic(std::mt19937& rng, int order, int terms = 3) {
    std::uniform_int_distribution<int> exp(0, order - 1);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Cyclotomic x(order);
    for (int t = 0; t < terms; ++t) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        x += c * Cyclotomic::root(order, exp(rng));
    }
    return x;
}

Matrix random_matrix(std::mt19937& rng, size_t n, int order) {
    Matrix m(n, n, order);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = random_cyclotomic(rng, order, 2);
    return m;
}

// Adjugate-free inverse by Gauss-Jordan, used only to build similarity transforms.
Matrix invert(Matrix a) {
    const size_t n = a.rows();
    Matrix inv = Matrix::identity(n, a.order());
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (a(p, c).is_zero()) ++p;
        for (size_t j = 0; j < n; ++j) {
            std::swap(a(p, j), a(c, j));
            std::swap(inv(p, j), inv(c, j));
        }
        const Cyclotomic s = a(c, c).inverse();
        for (size_t j = 0; j < n; ++j) {
            a(c, j) = a(c, j) * s;
            inv(c, j) = inv(c, j) * s;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Cyclotomic f = a(i, c);
            for (size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// Independent oracle: integer convolution of truncated geometric series.
std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b, size_t n) {
    std::vector<long> c(n + 1, 0);
    for (size_t i = 0; i <= n && i < a.size(); ++i)
        for (size_t j = 0; i + j <= n && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<long> geometric(int step, size_t n) {
    std::vector<long> g(n + 1, 0);
    for (size_t k = 0; k <= n; k += static_cast<size_t>(step)) g[k] = 1;
    return g;
}

}  // namespace

TEST_CASE("cyclotomic polynomials and field degrees") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(120).size() == 33);
    CHECK(euler_phi(120) == 32);
    CHECK(euler_phi(20) == 8);
}

TEST_CASE("cyclo_arith examples") {
    CHECK(Cyclotomic::root(4, 1) * Cyclotomic::root(4, 1) == Cyclotomic(4, -1));

    Cyclotomic sum(5);
    for (int k = 1; k <= 4; ++k) sum += Cyclotomic::root(5, k);
    CHECK(sum == Cyclotomic(5, -1));

    CHECK(Cyclotomic::root(8, 1).conj() == Cyclotomic::root(8, 7));
}

TEST_CASE("cyclo_arith errors") {
    CHECK_THROWS_AS(Cyclotomic(12).inverse(), std::domain_error);
    CHECK_THROWS_AS(Cyclotomic::root(8, 1) + Cyclotomic::root(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(Cyclotomic::root(8, 1) * Cyclotomic::root(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(Cyclotomic::root(8, 1).embed(12), std::invalid_argument);
}

TEST_CASE("literal syntax") {
    const auto x = Cyclotomic::parse("1/2*z8^1 + 1/2*z8^7", 8);
    CHECK(x == Rational(1, 2) * (Cyclotomic::root(8, 1) + Cyclotomic::root(8, 7)));
    CHECK(std::abs(x.to_complex() - std::complex<double>(std::sqrt(0.5), 0)) < 1e-12);
    // sub-order roots embed, negative exponents and bare rationals are accepted
    CHECK(Cyclotomic::parse("-z5^2 - z5^3", 20).to_complex().real() == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    CHECK(Cyclotomic::parse("z4^-1", 4) == Cyclotomic::root(4, 3));
    CHECK(Cyclotomic::parse("3/2", 12) == Cyclotomic(12, Rational(3, 2)));
    CHECK(Cyclotomic::parse("1 \xe2\x88\x92 z4^1", 4) == Cyclotomic(4, 1) - Cyclotomic::root(4, 1));
    CHECK_THROWS(Cyclotomic::parse("z7^1", 12));
    CHECK_THROWS(Cyclotomic::parse("1/2*", 12));
    CHECK_THROWS(Cyclotomic::parse("", 12));

    std::mt19937 rng(7);
    for (int order : {1, 4, 8, 12, 20, 120}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto v = random_cyclotomic(rng, order, 4);
            CHECK(Cyclotomic::parse(v.to_string(), order) == v);
        }
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(11);
    for (int order : {3, 8, 12, 20, 24, 120}) {
        for (int trial = 0; trial < 15; ++trial) {
            const auto a = random_cyclotomic(rng, order);
            const auto b = random_cyclotomic(rng, order);
            const auto c = random_cyclotomic(rng, order);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            const double exact_norm = (a * a.conj()).to_complex().real();
            CHECK(std::abs(std::abs(a.to_complex()) - std::sqrt(std::max(0.0, exact_norm))) < 1e-12);
            // float shadow of the exact product
            CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
        }
    }
}

TEST_CASE("embedding and restriction") {
    const auto i4 = Cyclotomic::root(4, 1);
    const auto i24 = i4.embed(24);
    CHECK(i24 == Cyclotomic::root(24, 6));
    CHECK(i24.restrict_to(4).value() == i4);
    CHECK(i24.restrict_to(12).value() == Cyclotomic::root(12, 3));
    CHECK_FALSE(Cyclotomic::root(24, 1).restrict_to(12).has_value());
    // sqrt(2) lives in Q(zeta_8) but not in Q(zeta_12)
    const auto sqrt2 = Cyclotomic::parse("z8^1 + z8^7", 8);
    CHECK_FALSE(sqrt2.restrict_to(12).has_value());
    CHECK(sqrt2.embed(24).restrict_to(8).value() == sqrt2);
}

TEST_CASE("det_one_minus_lambda examples") {
    const auto one = Polynomial::from_rationals({1});
    const auto lam = Polynomial::from_rationals({0, 1});
    CHECK(det_one_minus_lambda(Matrix::identity(2, 1)) == (one - lam) * (one - lam));
    CHECK(det_one_minus_lambda(Cyclotomic(1, -1) * Matrix::identity(2, 1)) == (one + lam) * (one + lam));

    Matrix d(2, 2, 3);
    d(0, 0) = Cyclotomic::root(3, 1);
    d(1, 1) = Cyclotomic::root(3, -1);
    CHECK(det_one_minus_lambda(d) == Polynomial::from_rationals({1, 1, 1}));

    CHECK_THROWS_AS(det_one_minus_lambda(Matrix(2, 3, 1)), std::invalid_argument);
}

TEST_CASE("det_one_minus_lambda is similarity invariant") {
    std::mt19937 rng(5);
    for (int order : {4, 12}) {
        for (int trial = 0; trial < 6; ++trial) {
            const auto a = random_matrix(rng, 3, order);
            auto b = random_matrix(rng, 3, order);
            while (rank(b) < 3) b = random_matrix(rng, 3, order);
            CHECK(det_one_minus_lambda(b * a * invert(b)) == det_one_minus_lambda(a));
        }
    }
}

TEST_CASE("det_one_minus_lambda agrees with the cofactor expansion") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_matrix(rng, 2, 8);
        // 1 - tr(A) lambda + det(A) lambda^2
        const auto det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        const Polynomial expected(8, {Cyclotomic(8, 1), -a.trace(), det});
        CHECK(det_one_minus_lambda(a) == expected);
    }
}

TEST_CASE("series_expand examples") {
    const auto one = Polynomial::from_rationals({1});
    const auto sq = Polynomial::from_rationals({1, -2, 1});
    CHECK(series_expand({one, sq}, 4).counts() == std::vector<long>{1, 2, 3, 4, 5});

    const auto alt = series_expand({one, Polynomial::from_rationals({1, 1})}, 3).rationals();
    CHECK(alt == std::vector<Rational>{1, -1, 1, -1});

    // (1+x^8)/((1-x^4)(1-x^6)) against an integer convolution
    const size_t n = 30;
    auto oracle = convolve(geometric(4, n), geometric(6, n), n);
    auto shifted = oracle;
    for (size_t k = 8; k <= n; ++k) shifted[k] += oracle[k - 8];
    const RationalFunction f{Polynomial::from_rationals({1, 0, 0, 0, 0, 0, 0, 0, 1}),
                             Polynomial::one_minus_power(4) * Polynomial::one_minus_power(6)};
    const auto series = series_expand(f, static_cast<int>(n)).counts();
    CHECK(series == shifted);
    CHECK(series[0] == 1);
    CHECK(series[4] == 1);
    CHECK(series[6] == 1);
    CHECK(series[8] == 2);

    CHECK_THROWS_AS(series_expand({one, Polynomial::from_rationals({0, 1})}, 3), std::domain_error);
}

TEST_CASE("series_expand recomposes and is linear") {
    std::mt19937 rng(3);
    const int order = 12;
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Cyclotomic> nc, dc, gc;
        for (int i = 0; i < 3; ++i) nc.push_back(random_cyclotomic(rng, order));
        for (int i = 0; i < 3; ++i) gc.push_back(random_cyclotomic(rng, order));
        dc.push_back(Cyclotomic(order, 1));
        for (int i = 0; i < 2; ++i) dc.push_back(random_cyclotomic(rng, order));
        const Polynomial num(order, nc), other(order, gc), den(order, dc);
        const int n_max = 10;
        const auto s = series_expand({num, den}, n_max);
        const Polynomial sp(order, s.coefficients);
        const auto check = sp * den - num;
        for (int k = 0; k <= n_max; ++k) CHECK(check.coeff(k).is_zero());

        auto sum = series_expand({num, den}, n_max);
        sum += series_expand({other, den}, n_max);
        const auto direct = series_expand({num + other, den}, n_max);
        for (int k = 0; k <= n_max; ++k) CHECK(sum.coefficients[static_cast<size_t>(k)] == direct.coefficients[static_cast<size_t>(k)]);
    }
}

TEST_CASE("rational function reduction and positive form") {
    // (1-x^2)/((1-x)^2 (1+x^2)) reduces to (1+x)/((1-x)(1+x^2))
    const auto one_minus = Polynomial::from_rationals({1, -1});
    const RationalFunction f{Polynomial::one_minus_power(2),
                             one_minus * one_minus * Polynomial::from_rationals({1, 0, 1})};
    const auto r = f.reduced();
    CHECK(r.denominator.degree() == 3);
    CHECK(r.denominator.coeff(0).is_one());

    const auto pf = find_positive_form(r, 12);
    REQUIRE(pf);
    // (1+x)/((1-x)(1+x^2)) = (1+x)^2/(1-x^4)
    CHECK(pf->degrees == std::vector<int>{4});
    CHECK(pf->to_string() == "(1+2*x+x^2)/(1-x^4)");

    const RationalFunction g{Polynomial::from_rationals({1, 0, 0, 0, 0, 0, 0, 0, 1}),
                             Polynomial::one_minus_power(4) * Polynomial::one_minus_power(6)};
    const auto pg = find_positive_form(g.reduced(), 12);
    REQUIRE(pg);
    CHECK(pg->to_string() == "(1+x^8)/((1-x^4)*(1-x^6))");

    const RationalFunction h{Polynomial::from_rationals({1}), one_minus * one_minus};
    CHECK(find_positive_form(h.reduced(), 4)->to_string() == "1/(1-x)^2");

    const auto factors = cyclotomic_factorization(Polynomial::one_minus_power(6), 12);
    REQUIRE(factors);
    CHECK(factors->size() == 4);
}

TEST_CASE("gcd over a cyclotomic field") {
    const int order = 12;
    const Polynomial a(order, {Cyclotomic::root(order, 1), Cyclotomic(order, 1)});   // x + z
    const Polynomial b(order, {Cyclotomic::root(order, 5), Cyclotomic(order, 1)});   // x + z^5
    const Polynomial c(order, {Cyclotomic(order, 3), Cyclotomic(order, 0), Cyclotomic(order, 1)});
    const auto g = gcd(a * b, a * c);
    CHECK(g == a);
}

TEST_CASE("multigraded expansion") {
    MultigradedFunction f;
    f.vars = 2;
    f.terms.push_back({Cyclotomic(1, 1), {Polynomial::one_minus_power(1), Polynomial::one_minus_power(1)}});
    const auto s = f.expand(4);
    for (const auto& idx : multi_indices(2, 4)) CHECK(s.at(idx) == 1);
    CHECK(s.specialize() == std::vector<Rational>{1, 2, 3, 4, 5});
    CHECK(multi_indices(3, 2).size() == 10);
    CHECK(multi_indices(3, 1)[1] == MultiIndex{1, 0, 0});
}
