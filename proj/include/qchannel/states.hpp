#pragma once

#include <cstdint>

#include "qchannel/linalg.hpp"

namespace qchannel {

// Pauli matrices; index 0 is the identity, 1..3 are sigma_x, sigma_y, sigma_z.
const Mat2c& pauli(int k);

// Bloch vectors of the two reduced states plus the 3x3 correlation matrix
//   r_n = Tr(rho sigma_n x I),  s_n = Tr(rho I x sigma_n),
//   T(n,m) = Tr(rho sigma_n x sigma_m).
struct HSDecomposition {
  Vec3 r;
  Vec3 s;
  Mat3 T;
};

// A validated two-qubit density matrix: Hermitian, unit trace, positive
// semidefinite. Construction goes through validate(); no repair (in
// particular no trace renormalization) is ever performed.
class DensityMatrix {
 public:
  static DensityMatrix validate(const Mat4c& mat);
  const Mat4c& mat() const noexcept { return mat_; }

 private:
  explicit DensityMatrix(const Mat4c& mat) : mat_(mat) {}
  Mat4c mat_;
};

// Pure single-qubit state as a unit Bloch vector a; projector (I + a.sigma)/2.
class QubitState {
 public:
  explicit QubitState(const Vec3& bloch);  // throws NotUnitVector
  const Vec3& bloch() const noexcept { return a_; }
  Mat2c projector() const;

 private:
  Vec3 a_;
};

HSDecomposition hs_decompose(const DensityMatrix& rho);

// Reconstruction (I x I + r.sigma x I + I x s.sigma + sum t_nm sigma_n x
// sigma_m)/4. Hermitian with unit trace by construction, but not necessarily
// positive; callers must validate.
Mat4c hs_compose(const HSDecomposition& d);

// Bell-basis kets in the computational ordering |00>,|01>,|10>,|11>:
//   psi_1 = (|00> - |11>)/sqrt2,  psi_2 = (|00> + |11>)/sqrt2,
//   psi_3 = (|01> + |10>)/sqrt2,  psi_0 = (|01> - |10>)/sqrt2 (the singlet).
Eigen::Vector4cd bell_ket(int k);
DensityMatrix bell_state(int k);

// Projector onto a|01> - b|10>, b = sqrt(1-a^2); requires 0 < a < 1.
DensityMatrix tilted_singlet(double a);

enum class ConstraintPolicy { enforce, bypass };

// True iff 0 < (p1-p2)^2 <= (a^2-b^2)^2 with p2 = 1-p1, b = sqrt(1-a^2).
bool mixture_constraint_holds(double p1, double a);

// p1 P[a|00> + b|11>] + p2 P[a|01> + b|10>] with p2 = 1-p1, b = sqrt(1-a^2).
// Under `enforce`, requires a,b > 0 and 0 < (p1-p2)^2 <= (a^2-b^2)^2; under
// `bypass` only 0 <= p1 <= 1 and 0 <= a <= 1 (the state is always a valid
// density matrix there).
DensityMatrix tilted_bell_mixture(double p1, double a,
                                  ConstraintPolicy policy = ConstraintPolicy::enforce);

// p |psi_0><psi_0| + (1-p) I/4; positive for -1/3 <= p <= 1.
DensityMatrix werner(double p);

// G G~ / Tr(G G~) with G a 4x4 matrix of standard complex Gaussians
// (Hilbert-Schmidt measure). Deterministic in the seed.
DensityMatrix random_density(std::uint64_t seed);

// Convex combination of `terms` random product states: weights are normalized
// exponentials, each factor is a pure qubit state uniform on the Bloch sphere.
DensityMatrix random_separable(std::uint64_t seed, int terms);

}  // namespace qchannel
