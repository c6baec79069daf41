#pragma once

#include <array>
#include <string>
#include <vector>

#include "spectable/group.hpp"

namespace spectable {

/// Entry not recognised in the requested cyclotomic field.
class ExactificationError : public GroupError {
public:
    using GroupError::GroupError;
};

/// Constant matrices g = 1/2 (I + s3, sqrt2 s1, I - s3) and the Pauli matrices.
struct SpinorFrame {
    std::array<Matrix, 3> g;
    std::array<Matrix, 3> sigma;
    /// `order` must be a multiple of 8.
    static SpinorFrame make(int order);
};

/// Euler angles as rational multiples of pi, reduced to [0, 4).
struct EulerAngles {
    Rational alpha, beta, gamma;
    EulerAngles(Rational a, Rational b, Rational c);
    /// Smallest cyclotomic order holding both D^{1/2} and D^1 entries.
    int cyclotomic_order() const;
};

/// D^{1/2}(alpha, beta, gamma) = Rz(alpha) Ry(beta) Rz(gamma) in SU(2).
Matrix spin_half(const EulerAngles& e, int order);
/// The matching rotation D^1 in the Cartesian basis (x, y, z).
Matrix rotation(const EulerAngles& e, int order);

/// Rotation R(U) read off from U^T g_i U in the spinor frame; the result has
/// order lcm(U.order(), 8).
Matrix spin_to_rotation(const Matrix& u);

struct DoubleCoverReport {
    std::vector<std::string> problems;
    std::vector<size_t> image;  // vec element index for every spin element
    size_t kernel_size = 0;
    bool ok() const { return problems.empty(); }
};

/// Checks that U -> R(U) maps `spin` exactly 2-to-1 onto `vec` with kernel {+-I}.
DoubleCoverReport verify_double_cover(const FiniteGroup& spin, const FiniteGroup& vec);

/// Lifts a group of proper rotations to SU(2) over Q(zeta_order). Throws
/// ExactificationError when an entry of a lift is not in the field.
FiniteGroup lift_numeric(const FiniteGroup& vec, int order);

/// Exact square root in Q(zeta_order) of a real element; nullopt if none.
std::optional<Cyclotomic> real_sqrt(const Cyclotomic& s, int order);

}  // namespace spectable
