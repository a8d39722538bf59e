#pragma once

#include "qchannel/states.hpp"

namespace qchannel {

struct ChannelReport {
  double n_value;
  double m_value;
  double f_max;
  double b_max;
  double ppt_min_eigenvalue;
  bool separable;
  bool bell_violating;  // m_value > 1
  bool useful;          // n_value > 1
  bool marginal;        // some classification sits within tolerance of its threshold
  bool extended_formula;  // f_max reported via the rotation maximum with N <= 1
};

// Sum of the singular values of T, in [0, 3]. The channel is useful for
// standard teleportation iff this exceeds 1.
double n_value(const HSDecomposition& d);

// Sum of the two largest eigenvalues of T~T, in [0, 2]. The Bell-CHSH
// inequality is violated iff this exceeds 1.
double m_value(const HSDecomposition& d);

// Exact maximum over proper rotations O of (1 - Tr(T O)/3)/2:
//   (1 + (s1+s2+s3)/3)/2 when det T < 0,
//   (1 + (s1+s2-s3)/3)/2 when det T >= 0,
// with s1 >= s2 >= s3 the singular values of T. For N > 1 (which implies
// det T < 0) this is (1 + N/3)/2.
double f_max(const HSDecomposition& d);

// Maximal mean value of the Bell-CHSH observable, 2 sqrt(M).
double b_max(const HSDecomposition& d);

// Spin correlation E(a,b) = Tr(rho a.sigma x b.sigma) = (a, T b) for unit a, b.
double correlation(const HSDecomposition& d, const Vec3& a, const Vec3& b);

// Transposition of the second subsystem's indices: out_{m mu, n nu} =
// in_{m nu, n mu}. Hermitian and unit trace, but not necessarily positive.
Mat4c partial_transpose(const DensityMatrix& rho);

struct SeparabilityResult {
  bool separable;
  double ppt_min_eigenvalue;
};

// Peres-Horodecki test, exact for two qubits: separable iff the partial
// transpose has no eigenvalue below -tol::psd.
SeparabilityResult is_separable(const DensityMatrix& rho);

// All diagnostics for a channel at once, with classification flags.
ChannelReport analyze(const DensityMatrix& rho);

}  // namespace qchannel
