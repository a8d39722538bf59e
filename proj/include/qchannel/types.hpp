#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qchannel {

using cplx = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

// Absolute tolerances. Density-matrix entries, Bloch vectors and correlation
// coefficients are all O(1) in this domain, so no relative scaling is needed.
namespace tol {
inline constexpr double herm = 1e-9;    // Hermiticity deviation
inline constexpr double eig = 1e-10;    // eigen/SVD residuals, unitarity, unit vectors
inline constexpr double trace = 1e-9;   // unit-trace deviation
inline constexpr double psd = 1e-9;     // allowed negative-eigenvalue slack
inline constexpr double cls = 1e-9;     // classification thresholds
}  // namespace tol

}  // namespace qchannel
