#include "qchannel/criteria.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qchannel/errors.hpp"

namespace qchannel {

double n_value(const HSDecomposition& d) { return svd3(d.T).sigma.sum(); }

double m_value(const HSDecomposition& d) {
  const Vec3 sigma = svd3(d.T).sigma;
  return sigma[0] * sigma[0] + sigma[1] * sigma[1];
}

double f_max(const HSDecomposition& d) {
  const Vec3 sigma = svd3(d.T).sigma;
  const double third = det3(d.T) < 0.0 ? sigma[2] : -sigma[2];
  return 0.5 * (1.0 + (sigma[0] + sigma[1] + third) / 3.0);
}

double b_max(const HSDecomposition& d) { return 2.0 * std::sqrt(m_value(d)); }

double correlation(const HSDecomposition& d, const Vec3& a, const Vec3& b) {
  if (std::abs(a.norm() - 1.0) > tol::eig || std::abs(b.norm() - 1.0) > tol::eig) {
    std::ostringstream msg;
    msg << "|a| = " << a.norm() << ", |b| = " << b.norm();
    throw NotUnitVector(msg.str());
  }
  return a.dot(d.T * b);
}

Mat4c partial_transpose(const DensityMatrix& rho) {
  Mat4c out;
  for (int m = 0; m < 2; ++m)
    for (int mu = 0; mu < 2; ++mu)
      for (int n = 0; n < 2; ++n)
        for (int nu = 0; nu < 2; ++nu)
          out(2 * m + mu, 2 * n + nu) = rho.mat()(2 * m + nu, 2 * n + mu);
  return out;
}

SeparabilityResult is_separable(const DensityMatrix& rho) {
  const HermitianEigen4 eig = hermitian_eigen(partial_transpose(rho));
  const double min_eig = eig.values[0];
  return SeparabilityResult{min_eig >= -tol::psd, min_eig};
}

ChannelReport analyze(const DensityMatrix& rho) {
  const HSDecomposition d = hs_decompose(rho);
  ChannelReport rep;
  rep.n_value = n_value(d);
  rep.m_value = m_value(d);
  rep.f_max = f_max(d);
  rep.b_max = b_max(d);
  const SeparabilityResult sep = is_separable(rho);
  rep.separable = sep.separable;
  rep.ppt_min_eigenvalue = sep.ppt_min_eigenvalue;
  rep.useful = rep.n_value > 1.0;
  rep.bell_violating = rep.m_value > 1.0;
  rep.marginal = std::abs(rep.n_value - 1.0) <= tol::cls ||
                 std::abs(rep.m_value - 1.0) <= tol::cls ||
                 std::abs(rep.ppt_min_eigenvalue) <= tol::psd;
  rep.extended_formula = !(rep.n_value > 1.0);

  // Internal consistency; violations outside the marginal band indicate a bug.
  if (rep.bell_violating && !rep.useful && rep.n_value < 1.0 - tol::cls)
    throw std::logic_error("Bell-violating channel classified as not useful");
  if (rep.useful && rep.separable && rep.n_value > 1.0 + tol::cls &&
      rep.ppt_min_eigenvalue > tol::psd)
    throw std::logic_error("separable channel classified as useful");
  return rep;
}

}  // namespace qchannel
