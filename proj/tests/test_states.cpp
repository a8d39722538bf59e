#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchannel/criteria.hpp"
#include "qchannel/errors.hpp"
#include "qchannel/states.hpp"
#include "support.hpp"

using namespace qchannel;
using qchannel::testing::max_abs_diff;

namespace {

// Direct 2x2 partial traces, independent of hs_decompose.
Mat2c trace_out_second(const Mat4c& m) {
  Mat2c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return out;
}

Mat2c trace_out_first(const Mat4c& m) {
  Mat2c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = m(i, j) + m(i + 2, j + 2);
  return out;
}

Vec3 bloch_of(const Mat2c& rho) {
  Vec3 v;
  for (int n = 1; n <= 3; ++n) v[n - 1] = (rho * pauli(n)).trace().real();
  return v;
}

}  // namespace

TEST_CASE("validate accepts the maximally mixed state") {
  const DensityMatrix rho = DensityMatrix::validate(0.25 * Mat4c::Identity());
  CHECK(max_abs_diff(rho.mat(), Mat4c(0.25 * Mat4c::Identity())) == 0.0);
}

TEST_CASE("validate rejects an indefinite matrix as NotPositive") {
  Mat4c m = Mat4c::Zero();
  m(0, 0) = m(1, 1) = 0.5;
  m(0, 3) = m(3, 0) = 0.9;  // pushes one eigenvalue below zero
  CHECK_THROWS_AS(DensityMatrix::validate(m), NotPositive);
}

TEST_CASE("validate rejects traceless input as TraceNotOne") {
  CHECK_THROWS_AS(DensityMatrix::validate(kron(pauli(1), pauli(1))), TraceNotOne);
}

TEST_CASE("validate rejects non-Hermitian input") {
  Mat4c m = 0.25 * Mat4c::Identity();
  m(0, 1) = cplx(0.0, 0.1);
  CHECK_THROWS_AS(DensityMatrix::validate(m), NotHermitian);
}

TEST_CASE("hs_decompose of the maximally mixed state vanishes") {
  const HSDecomposition d = hs_decompose(DensityMatrix::validate(0.25 * Mat4c::Identity()));
  CHECK(d.r.norm() == 0.0);
  CHECK(d.s.norm() == 0.0);
  CHECK(d.T.norm() == 0.0);
}

TEST_CASE("hs_decompose of the singlet gives T = diag(-1,-1,-1)") {
  const HSDecomposition d = hs_decompose(bell_state(0));
  CHECK(d.r.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(d.s.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(max_abs_diff(d.T, Mat3(-Mat3::Identity())) < 1e-12);
}

TEST_CASE("hs_decompose of |00><00|") {
  Mat4c m = Mat4c::Zero();
  m(0, 0) = 1.0;
  const HSDecomposition d = hs_decompose(DensityMatrix::validate(m));
  CHECK(max_abs_diff(d.r, Vec3(0, 0, 1)) < 1e-12);
  CHECK(max_abs_diff(d.s, Vec3(0, 0, 1)) < 1e-12);
  CHECK(max_abs_diff(d.T, Mat3(Vec3(0, 0, 1).asDiagonal())) < 1e-12);
}

TEST_CASE("hs_compose of zero parameters is I/4") {
  const HSDecomposition d{Vec3::Zero(), Vec3::Zero(), Mat3::Zero()};
  CHECK(max_abs_diff(hs_compose(d), Mat4c(0.25 * Mat4c::Identity())) < 1e-15);
}

TEST_CASE("hs_compose rebuilds the singlet from its constants") {
  const HSDecomposition d{Vec3::Zero(), Vec3::Zero(), Mat3(-Mat3::Identity())};
  CHECK(max_abs_diff(hs_compose(d), bell_state(0).mat()) < 1e-15);
}

TEST_CASE("hs_compose inverts hs_decompose on random states") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const DensityMatrix rho = random_density(seed);
    CHECK(max_abs_diff(hs_compose(hs_decompose(rho)), rho.mat()) < 10 * tol::eig);
  }
}

TEST_CASE("partial traces agree with the decomposition's Bloch vectors") {
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
    const DensityMatrix rho = random_density(seed);
    const HSDecomposition d = hs_decompose(rho);
    CHECK(max_abs_diff(bloch_of(trace_out_second(rho.mat())), d.r) < 10 * tol::eig);
    CHECK(max_abs_diff(bloch_of(trace_out_first(rho.mat())), d.s) < 10 * tol::eig);
  }
}

TEST_CASE("bell_state correlation matrices match the four constants") {
  const Mat3 expected[4] = {
      Mat3(Vec3(-1, -1, -1).asDiagonal()), Mat3(Vec3(-1, 1, 1).asDiagonal()),
      Mat3(Vec3(1, -1, 1).asDiagonal()), Mat3(Vec3(1, 1, -1).asDiagonal())};
  for (int k = 0; k < 4; ++k) {
    const HSDecomposition d = hs_decompose(bell_state(k));
    CHECK(max_abs_diff(d.T, expected[k]) < 1e-12);
    CHECK(d.r.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(d.s.cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK_THROWS_AS(bell_state(4), IndexOutOfRange);
  CHECK_THROWS_AS(bell_state(-1), IndexOutOfRange);
}

TEST_CASE("tilted_singlet at a = 1/sqrt2 is the singlet") {
  CHECK(max_abs_diff(tilted_singlet(1.0 / std::sqrt(2.0)).mat(), bell_state(0).mat()) <
        1e-14);
}

TEST_CASE("tilted_singlet at a = 0.8 has T = diag(-0.96,-0.96,-1)") {
  const HSDecomposition d = hs_decompose(tilted_singlet(0.8));
  CHECK(max_abs_diff(d.T, Mat3(Vec3(-0.96, -0.96, -1.0).asDiagonal())) < 1e-12);
}

TEST_CASE("tilted_singlet near the product limit") {
  const double a = 0.999;
  const double b = std::sqrt(1.0 - a * a);
  const HSDecomposition d = hs_decompose(tilted_singlet(a));
  // N = 1 + 4ab in this family; barely above the usefulness threshold.
  CHECK(svd3(d.T).sigma.sum() == doctest::Approx(1.0 + 4 * a * b).epsilon(1e-10));
}

TEST_CASE("tilted_singlet rejects amplitudes outside (0,1)") {
  CHECK_THROWS_AS(tilted_singlet(0.0), AmplitudeOutOfRange);
  CHECK_THROWS_AS(tilted_singlet(1.0), AmplitudeOutOfRange);
  CHECK_THROWS_AS(tilted_singlet(-0.5), AmplitudeOutOfRange);
}

TEST_CASE("tilted_bell_mixture matches the diagonal correlation formula") {
  const double p1 = 0.6;
  const double a = std::sqrt(0.9);
  const HSDecomposition d = hs_decompose(tilted_bell_mixture(p1, a));
  CHECK(max_abs_diff(d.T, Mat3(Vec3(0.6, -0.12, 0.2).asDiagonal())) < 1e-12);

  // Across a grid: T = diag(2ab, -2ab(p1-p2), p1-p2).
  for (double p = 0.55; p < 1.0; p += 0.1) {
    for (double a2 = 0.75; a2 < 1.0; a2 += 0.05) {
      if (!mixture_constraint_holds(p, std::sqrt(a2))) continue;
      const double amp = std::sqrt(a2);
      const double b = std::sqrt(1.0 - a2);
      const HSDecomposition g = hs_decompose(tilted_bell_mixture(p, amp));
      const Vec3 expect(2 * amp * b, -2 * amp * b * (2 * p - 1), 2 * p - 1);
      CHECK(max_abs_diff(g.T, Mat3(expect.asDiagonal())) < 10 * tol::eig);
    }
  }
}

TEST_CASE("tilted_bell_mixture enforces the defining constraint") {
  CHECK_THROWS_AS(tilted_bell_mixture(0.6, std::sqrt(0.55)), ConstraintViolated);
  CHECK_THROWS_AS(tilted_bell_mixture(0.5, std::sqrt(0.9)), ConstraintViolated);
  // The bypass policy admits both as density matrices.
  CHECK_NOTHROW(tilted_bell_mixture(0.6, std::sqrt(0.55), ConstraintPolicy::bypass));
  CHECK_NOTHROW(tilted_bell_mixture(0.5, std::sqrt(0.9), ConstraintPolicy::bypass));
}

TEST_CASE("werner family endpoints and spectrum") {
  CHECK(max_abs_diff(werner(1.0).mat(), bell_state(0).mat()) < 1e-15);
  CHECK(max_abs_diff(werner(0.0).mat(), Mat4c(0.25 * Mat4c::Identity())) < 1e-15);
  const HermitianEigen4 eig = hermitian_eigen(werner(0.5).mat());
  CHECK(eig.values[0] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(eig.values[3] == doctest::Approx(0.625).epsilon(1e-12));
  const HSDecomposition d = hs_decompose(werner(0.5));
  CHECK(max_abs_diff(d.T, Mat3(Vec3(-0.5, -0.5, -0.5).asDiagonal())) < 1e-12);
  CHECK_THROWS_AS(werner(1.01), ParameterOutOfRange);
  CHECK_THROWS_AS(werner(-0.34), ParameterOutOfRange);
}

TEST_CASE("random_density is deterministic in the seed") {
  CHECK(max_abs_diff(random_density(42).mat(), random_density(42).mat()) == 0.0);
  CHECK(max_abs_diff(random_density(42).mat(), random_density(43).mat()) > 1e-3);
}

TEST_CASE("random_density singular values stay within the physical bound") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const HSDecomposition d = hs_decompose(random_density(seed));
    CHECK(svd3(d.T).sigma[0] <= 1.0 + tol::psd);
  }
}

TEST_CASE("random_separable single product term has N <= 1") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const HSDecomposition d = hs_decompose(random_separable(seed, 1));
    const Vec3 sigma = svd3(d.T).sigma;
    CHECK(sigma.sum() <= 1.0 + tol::psd);
    // Product T = r s~ has rank <= 1.
    CHECK(sigma[1] < 10 * tol::eig);
  }
}

TEST_CASE("random_separable stays PPT") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const DensityMatrix rho = random_separable(seed, 1 + static_cast<int>(seed % 6));
    CHECK(is_separable(rho).separable);
  }
}

TEST_CASE("random_separable rejects nonpositive term counts") {
  CHECK_THROWS_AS(random_separable(1, 0), ParameterOutOfRange);
}

TEST_CASE("QubitState rejects non-unit Bloch vectors") {
  CHECK_THROWS_AS(QubitState(Vec3(0.0, 0.0, 0.5)), NotUnitVector);
  CHECK_NOTHROW(QubitState(Vec3(0.0, 0.0, 1.0)));
}
