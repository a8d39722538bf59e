#include "qchannel/linalg.hpp"

#include <sstream>

#include "qchannel/errors.hpp"

namespace qchannel {

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

HermitianEigen4 hermitian_eigen(const Mat4c& h) {
  const double dev = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol::herm) {
    std::ostringstream msg;
    msg << "matrix deviates from its adjoint by " << dev;
    throw NotHermitian(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(h);
  return HermitianEigen4{solver.eigenvalues(), solver.eigenvectors()};
}

Svd3 svd3(const Mat3& t) {
  Eigen::JacobiSVD<Mat3> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return Svd3{svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

double det3(const Mat3& t) { return t.determinant(); }

}  // namespace qchannel
