#pragma once

#include <cmath>

#include "qchannel/rng.hpp"
#include "qchannel/states.hpp"

namespace qchannel::testing {

// Haar-random U(2) element: quaternion point on S^3 gives SU(2), then a
// random global phase.
inline Mat2c random_unitary2(RandomStream& rs) {
  Vec4 q(rs.normal(), rs.normal(), rs.normal(), rs.normal());
  q.normalize();
  Mat2c u;
  u(0, 0) = cplx(q[0], -q[3]);
  u(0, 1) = cplx(-q[2], -q[1]);
  u(1, 0) = cplx(q[2], -q[1]);
  u(1, 1) = cplx(q[0], q[3]);
  const double phase = rs.uniform(0.0, 2.0 * M_PI);
  return cplx(std::cos(phase), std::sin(phase)) * u;
}

// Uniform random rotation from a normalized quaternion.
inline Mat3 random_rotation(RandomStream& rs) {
  Vec4 q(rs.normal(), rs.normal(), rs.normal(), rs.normal());
  q.normalize();
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Mat3 o;
  o << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return o;
}

inline Mat4c random_hermitian4(RandomStream& rs) {
  Mat4c g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cplx(rs.normal(), rs.normal());
  return 0.5 * (g + g.adjoint());
}

inline Mat3 random_mat3(RandomStream& rs) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rs.normal();
  return m;
}

inline Vec3 random_unit_vec3(RandomStream& rs) {
  const double z = rs.uniform(-1.0, 1.0);
  const double az = rs.uniform(0.0, 2.0 * M_PI);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vec3(rho * std::cos(az), rho * std::sin(az), z);
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qchannel::testing
