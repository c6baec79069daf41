#include "spectable/cover.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>

namespace spectable {

namespace {

Cyclotomic root(int n, long k, int order) { return Cyclotomic::root(n, k).embed(order); }

Rational reduce_mod4(Rational r) {
    r.canonicalize();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), mpz_class(4 * r.get_den()).get_mpz_t());
    Rational out = r - Rational(q * 4);
    out.canonicalize();
    return out;
}

// cos(pi*r) and sin(pi*r) in Q(zeta_order).
Cyclotomic cos_pi(const Rational& r, int order) {
    const long p = r.get_num().get_si();
    const int q2 = static_cast<int>(2 * r.get_den().get_si());
    return (root(q2, p, order) + root(q2, -p, order)) * Rational(1, 2);
}

Cyclotomic sin_pi(const Rational& r, int order) {
    const long p = r.get_num().get_si();
    const int q2 = static_cast<int>(2 * r.get_den().get_si());
    return (root(q2, p, order) - root(q2, -p, order)) * root(4, -1, order) * Rational(1, 2);
}

Matrix pauli(int which, int order) {
    const Cyclotomic z(order), one(order, 1), i = root(4, 1, order);
    if (which == 0) return Matrix::from_rows({{z, one}, {one, z}}, order);
    if (which == 1) return Matrix::from_rows({{z, -i}, {i, z}}, order);
    return Matrix::from_rows({{one, z}, {z, -one}}, order);
}

// B maps the frame coordinates to Cartesian components; R = B S B^-1.
const std::pair<Matrix, Matrix>& frame_basis(int order) {
    static std::mutex mutex;
    static std::map<int, std::pair<Matrix, Matrix>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    const Cyclotomic z(order), one(order, 1), i = root(4, 1, order);
    const Cyclotomic sqrt2 = root(8, 1, order) + root(8, -1, order);
    Matrix b = Matrix::from_rows({{one, z, -one}, {i, z, i}, {z, -sqrt2, z}}, order);
    Matrix binv = *inverse(b);
    return cache.emplace(order, std::make_pair(std::move(b), std::move(binv))).first->second;
}

using Complex = std::complex<long double>;

// Inverse of the numeric Vandermonde matrix V[k][j] = zeta^(u_k j) over the
// units u_k of Z/order.
struct SqrtData {
    std::vector<long> units;
    std::vector<std::vector<Complex>> vinv;
};

const SqrtData& sqrt_data(int order) {
    static std::mutex mutex;
    static std::map<int, SqrtData> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    SqrtData d;
    for (long k = 1; k <= order; ++k)
        if (std::gcd(k, static_cast<long>(order)) == 1) d.units.push_back(k % order);
    const size_t n = d.units.size();
    const long double tau = 2 * std::acos(-1.0L) / order;
    std::vector<std::vector<Complex>> a(n, std::vector<Complex>(2 * n, 0));
    for (size_t r = 0; r < n; ++r) {
        for (size_t j = 0; j < n; ++j) a[r][j] = std::polar(1.0L, tau * static_cast<long double>((d.units[r] * j) % order));
        a[r][n + r] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        for (size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        std::swap(a[p], a[c]);
        const Complex s = 1.0L / a[c][c];
        for (auto& v : a[c]) v *= s;
        for (size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const Complex f = a[r][c];
            if (f == Complex(0)) continue;
            for (size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    d.vinv.assign(n, std::vector<Complex>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t j = 0; j < n; ++j) d.vinv[r][j] = a[r][n + j];
    return cache.emplace(order, std::move(d)).first->second;
}

std::complex<double> numeric(const Cyclotomic& c) { return c.to_complex(); }

// Numeric SU(2) element for a rotation, from its axis and angle.
std::array<std::complex<double>, 4> numeric_lift(const Matrix& r) {
    double m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = numeric(r(i, j)).real();
    const double c = std::clamp((m[0][0] + m[1][1] + m[2][2] - 1) / 2, -1.0, 1.0);
    const double theta = std::acos(c);
    double n[3] = {0, 0, 1};
    if (std::sin(theta) > 1e-6) {
        const double s = 2 * std::sin(theta);
        n[0] = (m[2][1] - m[1][2]) / s;
        n[1] = (m[0][2] - m[2][0]) / s;
        n[2] = (m[1][0] - m[0][1]) / s;
    } else if (c < 0) {
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (m[i][i] > m[k][k]) k = i;
        n[k] = std::sqrt(std::max(0.0, (m[k][k] + 1) / 2));
        for (int i = 0; i < 3; ++i)
            if (i != k) n[i] = m[i][k] / (2 * n[k]);
    }
    const double w = std::cos(theta / 2), s = std::sin(theta / 2);
    const double x = s * n[0], y = s * n[1], z = s * n[2];
    using C = std::complex<double>;
    return {C(w, -z), C(-y, -x), C(y, -x), C(w, z)};
}

}  // namespace

// ---------------------------------------------------------------------------

SpinorFrame SpinorFrame::make(int order) {
    if (order % 8 != 0) throw std::invalid_argument("spinor frame needs a cyclotomic order divisible by 8");
    SpinorFrame f;
    const Cyclotomic z(order), one(order, 1);
    const Cyclotomic half_sqrt2 = (root(8, 1, order) + root(8, -1, order)) * Rational(1, 2);
    f.g[0] = Matrix::from_rows({{one, z}, {z, z}}, order);
    f.g[1] = Matrix::from_rows({{z, half_sqrt2}, {half_sqrt2, z}}, order);
    f.g[2] = Matrix::from_rows({{z, z}, {z, one}}, order);
    for (int k = 0; k < 3; ++k) f.sigma[k] = pauli(k, order);
    return f;
}

EulerAngles::EulerAngles(Rational a, Rational b, Rational c)
    : alpha(reduce_mod4(std::move(a))), beta(reduce_mod4(std::move(b))), gamma(reduce_mod4(std::move(c))) {}

int EulerAngles::cyclotomic_order() const {
    long n = 4;
    for (const Rational* r : {&alpha, &beta, &gamma}) n = std::lcm(n, 4 * r->get_den().get_si());
    return static_cast<int>(n);
}

Matrix spin_half(const EulerAngles& e, int order) {
    if (order % e.cyclotomic_order() != 0) throw std::invalid_argument("spin_half: cyclotomic order too small");
    const Cyclotomic z(order);
    auto rz = [&](const Rational& a) {
        const long p = a.get_num().get_si();
        const int q4 = static_cast<int>(4 * a.get_den().get_si());
        return Matrix::from_rows({{root(q4, -p, order), z}, {z, root(q4, p, order)}}, order);
    };
    const Rational hb = e.beta / 2;
    const Cyclotomic c = cos_pi(hb, order), s = sin_pi(hb, order);
    const Matrix ry = Matrix::from_rows({{c, -s}, {s, c}}, order);
    return rz(e.alpha) * ry * rz(e.gamma);
}

Matrix rotation(const EulerAngles& e, int order) {
    if (order % e.cyclotomic_order() != 0) throw std::invalid_argument("rotation: cyclotomic order too small");
    const Cyclotomic z(order), one(order, 1);
    auto rz = [&](const Rational& a) {
        const Cyclotomic c = cos_pi(a, order), s = sin_pi(a, order);
        return Matrix::from_rows({{c, -s, z}, {s, c, z}, {z, z, one}}, order);
    };
    const Cyclotomic c = cos_pi(e.beta, order), s = sin_pi(e.beta, order);
    const Matrix ry = Matrix::from_rows({{c, z, s}, {z, one, z}, {-s, z, c}}, order);
    return rz(e.alpha) * ry * rz(e.gamma);
}

Matrix spin_to_rotation(const Matrix& u) {
    if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("spin_to_rotation expects a 2x2 matrix");
    const int order = std::lcm(u.order(), 8);
    const Matrix v = u.embed(order);
    const SpinorFrame f = SpinorFrame::make(order);
    const Cyclotomic sqrt2 = root(8, 1, order) + root(8, -1, order);
    Matrix s(3, 3, order);
    const Matrix vt = v.transpose();
    for (size_t i = 0; i < 3; ++i) {
        const Matrix m = vt * f.g[i] * v;
        s(i, 0) = m(0, 0);
        s(i, 1) = sqrt2 * m(0, 1);
        s(i, 2) = m(1, 1);
    }
    const auto& [b, binv] = frame_basis(order);
    return b * s * binv;
}

// ---------------------------------------------------------------------------

DoubleCoverReport verify_double_cover(const FiniteGroup& spin, const FiniteGroup& vec) {
    DoubleCoverReport rep;
    if (spin.dim() != 2 || vec.dim() != 3) {
        rep.problems.push_back("expected a 2-dimensional spin group and a 3-dimensional rotation group");
        return rep;
    }
    if (!spin.minus_identity) rep.problems.push_back("spin group " + spin.name + " does not contain -I");

    rep.image.assign(spin.order(), SIZE_MAX);
    std::vector<size_t> fibre(vec.order(), 0);
    for (size_t i = 0; i < spin.order(); ++i) {
        const Matrix r = spin_to_rotation(spin.defining.elements[i]);
        if (r.is_identity()) ++rep.kernel_size;
        const auto restricted = restrict_to(r, vec.cyclotomic_order);
        const auto idx = restricted ? vec.find(*restricted) : std::nullopt;
        if (!idx) {
            rep.problems.push_back("image of spin element " + spin.word_string(i) + " is not in " + vec.name);
            continue;
        }
        rep.image[i] = *idx;
        ++fibre[*idx];
    }
    if (!rep.ok()) return rep;

    if (rep.kernel_size != 2 || rep.image[*spin.minus_identity] != 0)
        rep.problems.push_back("kernel has " + std::to_string(rep.kernel_size) + " elements, expected {I, -I}");
    for (size_t k = 0; k < vec.order(); ++k)
        if (fibre[k] != 2)
            rep.problems.push_back("rotation " + vec.word_string(k) + " has " + std::to_string(fibre[k]) +
                                   " preimages, expected 2");
    const size_t minus = *spin.minus_identity;
    for (size_t i = 0; i < spin.order(); ++i) {
        if (rep.image[spin.multiply(minus, i)] != rep.image[i])
            rep.problems.push_back("U and -U map differently for " + spin.word_string(i));
        for (const auto& g : spin.generators) {
            const size_t gi = *spin.find(g.matrix);
            if (rep.image[spin.multiply(i, gi)] != vec.multiply(rep.image[i], rep.image[gi]))
                rep.problems.push_back("map is not multiplicative at " + spin.word_string(i) + " times " + g.label);
        }
    }
    return rep;
}

std::optional<Cyclotomic> real_sqrt(const Cyclotomic& s_in, int order) {
    if (order % s_in.order() != 0) throw std::invalid_argument("real_sqrt: order must be a multiple of the input's");
    const Cyclotomic s = s_in.embed(order);
    if (s.is_zero()) return s;
    if (s.is_rational()) {
        const Rational q = s.to_rational();
        if (q > 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
            mpz_class n, d;
            mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
            mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
            return Cyclotomic(order, Rational(n, d));
        }
    }
    const SqrtData& data = sqrt_data(order);
    const size_t n = data.units.size();
    const long double tau = 2 * std::acos(-1.0L) / order;
    const auto coeffs = s.coefficients();

    // Galois conjugates of s; a real square root needs all of them >= 0.
    std::vector<long double> conj(n);
    for (size_t r = 0; r < n; ++r) {
        Complex v = 0;
        for (size_t j = 0; j < coeffs.size(); ++j)
            if (coeffs[j] != 0)
                v += static_cast<long double>(coeffs[j].get_d()) * std::polar(1.0L, tau * static_cast<long double>((data.units[r] * j) % order));
        if (std::abs(v.imag()) > 1e-9L || v.real() < -1e-9L) return std::nullopt;
        conj[r] = std::sqrt(std::max(0.0L, v.real()));
    }
    // Units come in pairs k, order-k that agree on real elements; one sign per pair.
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t r = 0; r < n; ++r) {
        const long k = data.units[r];
        if (2 * k > order && order > 2) continue;
        size_t partner = r;
        for (size_t t = 0; t < n; ++t)
            if ((data.units[t] + k) % order == 0) partner = t;
        pairs.emplace_back(r, partner);
    }
    const mpz_class den = s.denominator();
    const long double scale = den.get_d();

    std::vector<Complex> c(n, 0);
    std::vector<int> sign(pairs.size(), 1);
    auto add_pair = [&](size_t p, long double factor) {
        const auto [a, b] = pairs[p];
        for (size_t j = 0; j < n; ++j) {
            c[j] += factor * data.vinv[j][a] * conj[a];
            if (b != a) c[j] += factor * data.vinv[j][b] * conj[b];
        }
    };
    for (size_t p = 0; p < pairs.size(); ++p) add_pair(p, 1);

    const size_t free_signs = pairs.empty() ? 0 : pairs.size() - 1;
    if (free_signs > 24) throw std::invalid_argument("real_sqrt: field too large for sign enumeration");
    for (unsigned long step = 0;; ++step) {
        bool integral = true;
        std::vector<Rational> guess(n);
        for (size_t j = 0; j < n && integral; ++j) {
            const long double v = c[j].real() * scale;
            const long double rounded = std::round(v);
            if (std::abs(v - rounded) > 1e-6L || std::abs(c[j].imag() * scale) > 1e-6L) integral = false;
            guess[j] = Rational(mpz_class(static_cast<long>(rounded)), den);
            guess[j].canonicalize();
        }
        if (integral) {
            Cyclotomic r(order);
            for (size_t j = 0; j < n; ++j)
                if (guess[j] != 0) r += Cyclotomic::root(order, static_cast<long>(j)) * guess[j];
            if (r * r == s) return r;
        }
        if (step + 1 >= (1UL << free_signs)) break;
        // Gray code: flip one sign per step, never the first pair's.
        const size_t flip = static_cast<size_t>(__builtin_ctzl(step + 1)) + 1;
        add_pair(flip, -2 * sign[flip]);
        sign[flip] = -sign[flip];
    }
    return std::nullopt;
}

FiniteGroup lift_numeric(const FiniteGroup& vec, int order) {
    if (vec.dim() != 3) throw GroupError("lift_numeric expects 3x3 rotations");
    const int big = std::lcm(std::lcm(vec.cyclotomic_order, order), 4);
    const Cyclotomic i = root(4, 1, big);
    const Cyclotomic quarter(big, Rational(1, 4));

    auto lift_one = [&](const Matrix& rot) -> Matrix {
        for (size_t a = 0; a < 3; ++a)
            for (size_t b = 0; b < 3; ++b)
                if (std::abs(numeric(rot(a, b)).imag()) > 1e-12) throw GroupError("lift_numeric: complex rotation entry");
        const Matrix m = rot.embed(big);
        auto e = [&](int a, int b) -> const Cyclotomic& { return m(static_cast<size_t>(a - 1), static_cast<size_t>(b - 1)); };
        const Cyclotomic one(big, 1);
        const std::array<Cyclotomic, 4> pivots{one + e(1, 1) + e(2, 2) + e(3, 3), one + e(1, 1) - e(2, 2) - e(3, 3),
                                               one - e(1, 1) + e(2, 2) - e(3, 3), one - e(1, 1) - e(2, 2) + e(3, 3)};
        size_t p = 0;
        for (size_t k = 1; k < 4; ++k)
            if (numeric(pivots[k]).real() > numeric(pivots[p]).real()) p = k;
        const auto r = real_sqrt(pivots[p] * quarter, big);
        if (!r) throw ExactificationError("rotation half-angle component has no square root in Q(z" + std::to_string(big) + ")");
        const Cyclotomic inv4r = (Cyclotomic(big, 4) * *r).inverse();
        Cyclotomic w(big), x(big), y(big), z(big);
        switch (p) {
            case 0:
                w = *r;
                x = (e(3, 2) - e(2, 3)) * inv4r;
                y = (e(1, 3) - e(3, 1)) * inv4r;
                z = (e(2, 1) - e(1, 2)) * inv4r;
                break;
            case 1:
                x = *r;
                w = (e(3, 2) - e(2, 3)) * inv4r;
                y = (e(1, 2) + e(2, 1)) * inv4r;
                z = (e(1, 3) + e(3, 1)) * inv4r;
                break;
            case 2:
                y = *r;
                w = (e(1, 3) - e(3, 1)) * inv4r;
                x = (e(1, 2) + e(2, 1)) * inv4r;
                z = (e(2, 3) + e(3, 2)) * inv4r;
                break;
            default:
                z = *r;
                w = (e(2, 1) - e(1, 2)) * inv4r;
                x = (e(1, 3) + e(3, 1)) * inv4r;
                y = (e(2, 3) + e(3, 2)) * inv4r;
        }
        const Matrix u = Matrix::from_rows({{w - i * z, -(i * x) - y}, {y - i * x, w + i * z}}, big);
        auto exact = restrict_to(u, order);
        if (!exact)
            throw ExactificationError("lift of rotation has entries outside Q(z" + std::to_string(order) + ")");
        const auto approx = numeric_lift(rot);
        double plus = 0, minus = 0;
        for (size_t k = 0; k < 4; ++k) {
            const auto v = numeric((*exact)(k / 2, k % 2));
            plus = std::max(plus, std::abs(v - approx[k]));
            minus = std::max(minus, std::abs(v + approx[k]));
        }
        if (std::min(plus, minus) > 1e-9) throw ExactificationError("exact lift disagrees with the numeric half-angle matrix");
        return *exact;
    };

    std::vector<Generator> gens;
    for (const auto& g : vec.generators) gens.push_back({g.label, lift_one(g.matrix)});
    gens.push_back({"m", Cyclotomic(order, -1) * Matrix::identity(2, order)});
    FiniteGroup spin = close_group(gens, 2 * vec.order(), vec.name.empty() ? "" : "2" + vec.name);
    if (spin.order() != 2 * vec.order())
        throw GroupError("lifted group has order " + std::to_string(spin.order()) + ", expected " +
                         std::to_string(2 * vec.order()));
    for (const auto& rot : vec.defining.elements) {
        const Matrix u = lift_one(rot);
        if (!spin.find(u) || !spin.find(Cyclotomic(order, -1) * u))
            throw GroupError("lift of a rotation is missing from the closure of the lifted generators");
    }
    return spin;
}

}  // namespace spectable
