#include "qchannel/strategy.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Geometry>

#include "qchannel/errors.hpp"

namespace qchannel {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_unitary(const Mat2c& u) {
  const double dev = (u.adjoint() * u - Mat2c::Identity()).cwiseAbs().maxCoeff();
  if (dev > tol::eig) {
    std::ostringstream msg;
    msg << "U~U deviates from identity by " << dev;
    throw NotUnitary(msg.str());
  }
}

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

Rotation Rotation::from_matrix(const Mat3& o) {
  const double ortho_dev = (o.transpose() * o - Mat3::Identity()).cwiseAbs().maxCoeff();
  const double det = det3(o);
  if (ortho_dev > tol::eig || std::abs(det - 1.0) > tol::eig) {
    std::ostringstream msg;
    msg << "orthogonality deviation " << ortho_dev << ", determinant " << det;
    throw NotRotation(msg.str());
  }
  return Rotation(o);
}

Rotation so3_from_su2(const Mat2c& u) {
  check_unitary(u);
  // U sigma_i U~ expanded in the Pauli basis gives column i of the adjoint
  // rotation; the defining equation uses its transpose.
  Mat3 o;
  for (int i = 0; i < 3; ++i) {
    const Mat2c conj = u * pauli(i + 1) * u.adjoint();
    for (int j = 0; j < 3; ++j)
      o(i, j) = 0.5 * (pauli(j + 1) * conj).trace().real();
  }
  return Rotation::from_matrix(o);
}

Mat2c su2_from_so3(const Rotation& o) {
  // so3_from_su2 returns the transpose of the standard adjoint rotation, so
  // lift the transpose. Quaternion extraction handles every angle stably.
  const Eigen::Quaterniond q(Mat3(o.matrix().transpose()));
  Mat2c u;
  u(0, 0) = cplx(q.w(), -q.z());
  u(0, 1) = cplx(-q.y(), -q.x());
  u(1, 0) = cplx(q.y(), -q.x());
  u(1, 1) = cplx(q.w(), q.z());
  // Fix the global phase: first entry (row-major) of nonnegligible magnitude
  // becomes real positive.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const cplx e = u(i, j);
      if (std::abs(e) > 1e-9) {
        u *= std::conj(e) / std::abs(e);
        return u;
      }
    }
  }
  return u;  // unreachable for unitary input
}

SignedDiagonalization signed_diagonalize(const Mat3& t) {
  const Svd3 svd = svd3(t);
  const double du = sign_of(det3(svd.u));
  const double dv = sign_of(det3(svd.v));
  // Proper sign carriers: det(s1) = du and det(s2) = dv cancel the possible
  // improperness of the SVD factors.
  const Vec3 s1(-1.0, -1.0, du);
  const Vec3 s2(1.0, 1.0, dv);
  const Mat3 o1 = s1.asDiagonal() * svd.u.transpose();
  const Mat3 o2 = svd.v * s2.asDiagonal();
  Vec3 d(-svd.sigma[0], -svd.sigma[1], du * dv * svd.sigma[2]);
  if (d[2] == 0.0) d[2] = 0.0;  // normalize -0
  return SignedDiagonalization{Rotation::from_matrix(o1), Rotation::from_matrix(o2), d};
}

Strategy strategy_from_base(const Mat2c& u) {
  check_unitary(u);
  Strategy strat;
  strat.base_unitary = u;
  for (int k = 0; k < 4; ++k) strat.corrections[static_cast<std::size_t>(k)] = pauli(k) * u;
  return strat;
}

Strategy optimal_strategy(const HSDecomposition& d) {
  const SignedDiagonalization sd = signed_diagonalize(d.T);
  // Composition order matches so3_from_su2's reversal: the lifted base
  // unitary must map onto o2 * o1 for outcome k's rotation to diagonalize
  // T against T_k.
  const Rotation composed = Rotation::from_matrix(sd.o2.matrix() * sd.o1.matrix());
  return strategy_from_base(su2_from_so3(composed));
}

BellConstants bell_projector_decomposition(int k) {
  if (k < 0 || k > 3) throw IndexOutOfRange("Bell index must be in 0..3");
  BellConstants c;
  c.r = Vec3::Zero();
  c.s = Vec3::Zero();
  Vec3 diag(1.0, 1.0, 1.0);
  if (k == 0)
    diag = Vec3(-1.0, -1.0, -1.0);
  else
    diag[k - 1] = -1.0;
  c.T = diag.asDiagonal();
  return c;
}

}  // namespace qchannel
