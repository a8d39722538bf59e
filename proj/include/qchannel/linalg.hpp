#pragma once

#include "qchannel/types.hpp"

namespace qchannel {

struct HermitianEigen4 {
  Vec4 values;    // ascending
  Mat4c vectors;  // orthonormal columns; vectors.col(i) pairs with values[i]
};

struct Svd3 {
  Mat3 u;
  Vec3 sigma;  // descending, nonnegative
  Mat3 v;      // t = u * sigma.asDiagonal() * v.transpose()
};

// Kronecker product of two 2x2 operators; block (i,j) equals a(i,j)*b.
Mat4c kron(const Mat2c& a, const Mat2c& b);

// Eigendecomposition of a Hermitian 4x4 matrix. Throws NotHermitian when the
// input deviates from its adjoint by more than tol::herm in any entry.
HermitianEigen4 hermitian_eigen(const Mat4c& h);

// Full SVD of a real 3x3 matrix. u and v are orthogonal but not necessarily
// proper rotations.
Svd3 svd3(const Mat3& t);

double det3(const Mat3& t);

}  // namespace qchannel
