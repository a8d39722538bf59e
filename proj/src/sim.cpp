#include "qchannel/sim.hpp"

#include <array>
#include <cmath>

#include "qchannel/errors.hpp"
#include "qchannel/rng.hpp"

namespace qchannel {

namespace {

using Mat8c = Eigen::Matrix<cplx, 8, 8>;

// kron(a, b) with a acting on particles (1,2) and b on particle 3.
Mat8c kron42(const Mat4c& a, const Mat2c& b) {
  Mat8c out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

// kron(a, b) with a on particle 1 and b on particles (2,3).
Mat8c kron24(const Mat2c& a, const Mat4c& b) {
  Mat8c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

const Mat4c& bell_projector(int k) {
  static const std::array<Mat4c, 4> table = [] {
    std::array<Mat4c, 4> t;
    for (int k = 0; k < 4; ++k) {
      const Eigen::Vector4cd v = bell_ket(k);
      t[static_cast<std::size_t>(k)] = v * v.adjoint();
    }
    return t;
  }();
  if (k < 0 || k > 3) throw IndexOutOfRange("outcome index must be in 0..3");
  return table[static_cast<std::size_t>(k)];
}

Vec3 sample_bloch(RandomStream& rs) {
  const double z = rs.uniform(-1.0, 1.0);
  const double az = rs.uniform(0.0, 2.0 * M_PI);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Vec3(rho * std::cos(az), rho * std::sin(az), z);
}

// Unnormalized branch matrix (P_k x U)(P_phi x rho)(P_k x U)~; its trace is
// p_k, its (2,3)->3 partial trace is p_k * rho_k.
Mat8c branch_matrix(const Mat8c& input, const Mat4c& projector, const Mat2c& correction) {
  const Mat8c op = kron42(projector, correction);
  return op * input * op.adjoint();
}

Mat2c trace_out_first_two(const Mat8c& w) {
  Mat2c out = Mat2c::Zero();
  for (int m = 0; m < 4; ++m) out += w.block<2, 2>(2 * m, 2 * m);
  return out;
}

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace

double outcome_probability(const DensityMatrix& rho, const QubitState& phi, int k) {
  const Mat8c input = kron24(phi.projector(), rho.mat());
  const Mat8c proj = kron42(bell_projector(k), Mat2c::Identity());
  return clamp01((proj * input).trace().real());
}

TeleportOutcome conditional_output(const DensityMatrix& rho, const QubitState& phi,
                                   int k, const Mat2c& correction) {
  const double unitary_dev =
      (correction.adjoint() * correction - Mat2c::Identity()).cwiseAbs().maxCoeff();
  if (unitary_dev > tol::eig) throw NotUnitary("correction is not unitary");
  const Mat8c input = kron24(phi.projector(), rho.mat());
  const Mat8c w = branch_matrix(input, bell_projector(k), correction);
  const double p = clamp01(w.trace().real());
  TeleportOutcome outcome;
  outcome.k = k;
  outcome.probability = p;
  if (p <= tol::psd) {
    outcome.output_state = Mat2c::Zero();
    outcome.output_defined = false;
  } else {
    outcome.output_state = trace_out_first_two(w) / p;
    outcome.output_defined = true;
  }
  return outcome;
}

double closed_form_fidelity(const HSDecomposition& d, const Strategy& strat) {
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    const Mat3 t_k = bell_projector_decomposition(k).T;
    const Mat3 o_k = so3_from_su2(strat.corrections[static_cast<std::size_t>(k)]).matrix();
    sum += 1.0 + (t_k.transpose() * d.T * o_k).trace() / 3.0;
  }
  return 0.125 * sum;
}

FidelityEstimate average_fidelity_mc(const DensityMatrix& rho, const Strategy& strat,
                                     std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw ParameterOutOfRange("samples must be >= 1");
  std::array<Mat8c, 4> branch_ops;
  for (int k = 0; k < 4; ++k)
    branch_ops[static_cast<std::size_t>(k)] =
        kron42(bell_projector(k), strat.corrections[static_cast<std::size_t>(k)]);

  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    RandomStream rs(RandomStream::substream(seed, static_cast<std::uint64_t>(i)));
    const Mat2c p_phi = QubitState(sample_bloch(rs)).projector();
    const Mat8c input = kron24(p_phi, rho.mat());
    const Mat8c overlap_op = kron42(Mat4c::Identity(), p_phi);
    // sum_k p_k Tr(rho_k P_phi) evaluated without dividing by p_k.
    double f = 0.0;
    for (const Mat8c& op : branch_ops)
      f += (op * input * op.adjoint() * overlap_op).trace().real();
    const double delta = f - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (f - mean);
  }
  FidelityEstimate est;
  est.mean = mean;
  est.samples = samples;
  est.standard_error =
      samples > 1 ? std::sqrt(m2 / (static_cast<double>(samples) *
                                    static_cast<double>(samples - 1)))
                  : 0.0;
  return est;
}

TeleportOutcome teleport_once(const DensityMatrix& rho, const QubitState& phi,
                              const Strategy& strat, std::uint64_t seed) {
  std::array<TeleportOutcome, 4> outcomes;
  for (int k = 0; k < 4; ++k)
    outcomes[static_cast<std::size_t>(k)] =
        conditional_output(rho, phi, k, strat.corrections[static_cast<std::size_t>(k)]);
  RandomStream rs(seed);
  const double u = rs.uniform();
  double cumulative = 0.0;
  for (int k = 0; k < 3; ++k) {
    cumulative += outcomes[static_cast<std::size_t>(k)].probability;
    if (u < cumulative) return outcomes[static_cast<std::size_t>(k)];
  }
  return outcomes[3];
}

}  // namespace qchannel
