#include "qchannel/states.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qchannel/errors.hpp"
#include "qchannel/rng.hpp"

namespace qchannel {

namespace {

constexpr cplx kI{0.0, 1.0};

Mat2c make_pauli(int k) {
  Mat2c m;
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// kron(sigma_n, sigma_m) for n,m in 0..3, cached.
const Mat4c& pauli_kron(int n, int m) {
  static const std::array<Mat4c, 16> table = [] {
    std::array<Mat4c, 16> t;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[4 * a + b] = kron(make_pauli(a), make_pauli(b));
    return t;
  }();
  return table[4 * n + m];
}

DensityMatrix projector_state(const Eigen::Vector4cd& ket) {
  return DensityMatrix::validate(ket * ket.adjoint());
}

Mat2c bloch_projector(const Vec3& a) {
  Mat2c m = 0.5 * pauli(0);
  for (int i = 0; i < 3; ++i) m += 0.5 * a[i] * pauli(i + 1);
  return m;
}

Vec3 uniform_bloch(RandomStream& rs) {
  const double z = rs.uniform(-1.0, 1.0);
  const double az = rs.uniform(0.0, 2.0 * M_PI);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vec3(rho * std::cos(az), rho * std::sin(az), z);
}

}  // namespace

const Mat2c& pauli(int k) {
  static const std::array<Mat2c, 4> table = {make_pauli(0), make_pauli(1),
                                             make_pauli(2), make_pauli(3)};
  if (k < 0 || k > 3) throw IndexOutOfRange("pauli index must be in 0..3");
  return table[static_cast<std::size_t>(k)];
}

DensityMatrix DensityMatrix::validate(const Mat4c& mat) {
  const double herm_dev = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::herm) {
    std::ostringstream msg;
    msg << "deviation from adjoint is " << herm_dev;
    throw NotHermitian(msg.str());
  }
  const double trace_dev = std::abs(mat.trace() - cplx(1.0, 0.0));
  if (trace_dev > tol::trace) {
    std::ostringstream msg;
    msg << "trace deviates from 1 by " << trace_dev;
    throw TraceNotOne(msg.str());
  }
  const HermitianEigen4 eig = hermitian_eigen(mat);
  if (eig.values[0] < -tol::psd) {
    std::ostringstream msg;
    msg << "minimum eigenvalue is " << eig.values[0];
    throw NotPositive(msg.str());
  }
  return DensityMatrix(mat);
}

QubitState::QubitState(const Vec3& bloch) : a_(bloch) {
  if (std::abs(bloch.norm() - 1.0) > tol::eig) {
    std::ostringstream msg;
    msg << "Bloch vector norm is " << bloch.norm();
    throw NotUnitVector(msg.str());
  }
}

Mat2c QubitState::projector() const { return bloch_projector(a_); }

HSDecomposition hs_decompose(const DensityMatrix& rho) {
  // The imaginary parts of these traces vanish for Hermitian input (up to
  // rounding) and are discarded.
  HSDecomposition d;
  for (int n = 1; n <= 3; ++n) {
    d.r[n - 1] = (rho.mat() * pauli_kron(n, 0)).trace().real();
    d.s[n - 1] = (rho.mat() * pauli_kron(0, n)).trace().real();
    for (int m = 1; m <= 3; ++m)
      d.T(n - 1, m - 1) = (rho.mat() * pauli_kron(n, m)).trace().real();
  }
  return d;
}

Mat4c hs_compose(const HSDecomposition& d) {
  Mat4c out = pauli_kron(0, 0);
  for (int n = 1; n <= 3; ++n) {
    out += d.r[n - 1] * pauli_kron(n, 0);
    out += d.s[n - 1] * pauli_kron(0, n);
    for (int m = 1; m <= 3; ++m) out += d.T(n - 1, m - 1) * pauli_kron(n, m);
  }
  return 0.25 * out;
}

Eigen::Vector4cd bell_ket(int k) {
  if (k < 0 || k > 3) throw IndexOutOfRange("Bell index must be in 0..3");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (k) {
    case 0: v[1] = inv_sqrt2; v[2] = -inv_sqrt2; break;
    case 1: v[0] = inv_sqrt2; v[3] = -inv_sqrt2; break;
    case 2: v[0] = inv_sqrt2; v[3] = inv_sqrt2; break;
    default: v[1] = inv_sqrt2; v[2] = inv_sqrt2; break;
  }
  return v;
}

DensityMatrix bell_state(int k) { return projector_state(bell_ket(k)); }

DensityMatrix tilted_singlet(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    std::ostringstream msg;
    msg << "amplitude a = " << a << " must satisfy 0 < a < 1";
    throw AmplitudeOutOfRange(msg.str());
  }
  const double b = std::sqrt(1.0 - a * a);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v[1] = a;
  v[2] = -b;
  return projector_state(v);
}

bool mixture_constraint_holds(double p1, double a) {
  const double p2 = 1.0 - p1;
  const double b2 = 1.0 - a * a;
  const double dp2 = (p1 - p2) * (p1 - p2);
  const double da2 = (a * a - b2) * (a * a - b2);
  return dp2 > 0.0 && dp2 <= da2;
}

DensityMatrix tilted_bell_mixture(double p1, double a, ConstraintPolicy policy) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    std::ostringstream msg;
    msg << "p1 = " << p1 << " is not a probability";
    throw ConstraintViolated(msg.str());
  }
  if (!(a >= 0.0 && a <= 1.0)) {
    std::ostringstream msg;
    msg << "amplitude a = " << a << " must lie in [0, 1]";
    throw ConstraintViolated(msg.str());
  }
  const double p2 = 1.0 - p1;
  const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
  if (policy == ConstraintPolicy::enforce) {
    if (!(a > 0.0 && b > 0.0)) {
      throw ConstraintViolated("amplitudes must satisfy a, b > 0");
    }
    const double dp2 = (p1 - p2) * (p1 - p2);
    const double da2 = (a * a - b * b) * (a * a - b * b);
    if (!(dp2 > 0.0)) {
      std::ostringstream msg;
      msg << "(p1-p2)^2 = " << dp2 << " must be strictly positive";
      throw ConstraintViolated(msg.str());
    }
    if (!(dp2 <= da2)) {
      std::ostringstream msg;
      msg << "(p1-p2)^2 = " << dp2 << " exceeds (a^2-b^2)^2 = " << da2;
      throw ConstraintViolated(msg.str());
    }
  }
  Eigen::Vector4cd psi1 = Eigen::Vector4cd::Zero();  // a|00> + b|11>
  psi1[0] = a;
  psi1[3] = b;
  Eigen::Vector4cd psi2 = Eigen::Vector4cd::Zero();  // a|01> + b|10>
  psi2[1] = a;
  psi2[2] = b;
  const Mat4c mat = p1 * (psi1 * psi1.adjoint()) + p2 * (psi2 * psi2.adjoint());
  return DensityMatrix::validate(mat);
}

DensityMatrix werner(double p) {
  if (!(p >= -1.0 / 3.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "singlet fraction p = " << p << " must lie in [-1/3, 1]";
    throw ParameterOutOfRange(msg.str());
  }
  const Eigen::Vector4cd v = bell_ket(0);
  const Mat4c mat = p * (v * v.adjoint()) + (1.0 - p) * 0.25 * Mat4c::Identity();
  return DensityMatrix::validate(mat);
}

DensityMatrix random_density(std::uint64_t seed) {
  RandomStream rs(seed);
  Mat4c g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cplx(rs.normal(), rs.normal());
  Mat4c mat = g * g.adjoint();
  mat /= mat.trace().real();
  return DensityMatrix::validate(mat);
}

DensityMatrix random_separable(std::uint64_t seed, int terms) {
  if (terms < 1) throw ParameterOutOfRange("terms must be >= 1");
  RandomStream rs(seed);
  std::vector<double> weights(static_cast<std::size_t>(terms));
  Mat4c mat = Mat4c::Zero();
  double total = 0.0;
  std::vector<Mat4c> products(static_cast<std::size_t>(terms));
  for (int i = 0; i < terms; ++i) {
    weights[static_cast<std::size_t>(i)] = -std::log1p(-rs.uniform());
    total += weights[static_cast<std::size_t>(i)];
    const Mat2c rho_a = bloch_projector(uniform_bloch(rs));
    const Mat2c rho_b = bloch_projector(uniform_bloch(rs));
    products[static_cast<std::size_t>(i)] = kron(rho_a, rho_b);
  }
  for (int i = 0; i < terms; ++i)
    mat += (weights[static_cast<std::size_t>(i)] / total) * products[static_cast<std::size_t>(i)];
  return DensityMatrix::validate(mat);
}

}  // namespace qchannel
