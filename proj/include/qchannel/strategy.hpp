#pragma once

#include <array>

#include "qchannel/states.hpp"

namespace qchannel {

// A proper rotation: orthogonal with determinant +1, both within tol::eig.
class Rotation {
 public:
  static Rotation from_matrix(const Mat3& o);  // throws NotRotation
  const Mat3& matrix() const noexcept { return o_; }

 private:
  explicit Rotation(const Mat3& o) : o_(o) {}
  Mat3 o_;
};

// Bob's correction quadruple. Outcome k applies corrections[k] =
// pauli(k) * base_unitary, so the singlet-channel optimum (base = I)
// reduces to the textbook corrections (I, sigma_x, sigma_y, sigma_z).
struct Strategy {
  Mat2c base_unitary;
  std::array<Mat2c, 4> corrections;
};

// The unique proper rotation O with U (n.sigma) U~ = (O~ n).sigma for all
// unit n. Insensitive to the phase of U; composition reverses order:
// so3_from_su2(U*V) = so3_from_su2(V) * so3_from_su2(U).
Rotation so3_from_su2(const Mat2c& u);

// A unitary U with so3_from_su2(U) = o. Determined up to global phase; the
// phase is fixed so the first entry of U (row-major) with nonnegligible
// magnitude is real positive.
Mat2c su2_from_so3(const Rotation& o);

struct SignedDiagonalization {
  Rotation o1;
  Rotation o2;
  Vec3 d;  // ascending; o1 * t * o2 = diag(d)
};

// Two proper rotations making o1 * t * o2 diagonal with d1 <= d2 <= d3:
// all entries <= 0 with {|d_i|} the singular values when det t < 0, else
// d1, d2 <= 0 and d3 = +s3.
SignedDiagonalization signed_diagonalize(const Mat3& t);

// Quadruple (pauli(k) * u) from a base unitary.
Strategy strategy_from_base(const Mat2c& u);

// The correction strategy achieving the closed-form fidelity maximum f_max:
// base unitary lifted from the composed diagonalizing rotation.
Strategy optimal_strategy(const HSDecomposition& d);

struct BellConstants {
  Mat3 T;
  Vec3 r;
  Vec3 s;
};

// Correlation matrices of the Bell projectors: T_0 = diag(-1,-1,-1),
// T_1 = diag(-1,1,1), T_2 = diag(1,-1,1), T_3 = diag(1,1,-1); r = s = 0.
BellConstants bell_projector_decomposition(int k);

}  // namespace qchannel
