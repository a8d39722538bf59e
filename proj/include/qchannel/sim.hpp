#pragma once

#include <cstdint>

#include "qchannel/strategy.hpp"

namespace qchannel {

struct TeleportOutcome {
  int k;
  double probability;
  Mat2c output_state;   // Bob's corrected qubit
  bool output_defined;  // false when probability <= tol::psd
};

struct FidelityEstimate {
  double mean;
  double standard_error;
  std::int64_t samples;
};

// Probability of Bell outcome k: Tr[(P_k x I)(P_phi x rho)] on the
// three-qubit space (particle 1 = unknown input, 2 = Alice's half,
// 3 = Bob's half; indices particle-major).
double outcome_probability(const DensityMatrix& rho, const QubitState& phi, int k);

// Bob's state after outcome k and correction U:
// rho_k = Tr_{1,2}[(P_k x U)(P_phi x rho)(P_k x U)~] / p_k.
// When p_k <= tol::psd the output is flagged undefined.
TeleportOutcome conditional_output(const DensityMatrix& rho, const QubitState& phi,
                                   int k, const Mat2c& correction);

// Bloch-sphere average fidelity of a strategy in closed form:
// (1/8) sum_k (1 + Tr(T_k~ T O_k)/3), O_k = so3_from_su2(corrections[k]).
double closed_form_fidelity(const HSDecomposition& d, const Strategy& strat);

// Monte Carlo estimate of the same average: inputs phi drawn uniformly on
// the Bloch sphere, the inner outcome sum computed exactly per draw. Sample
// i consumes substream (seed, i), so results do not depend on evaluation
// order.
FidelityEstimate average_fidelity_mc(const DensityMatrix& rho, const Strategy& strat,
                                     std::int64_t samples, std::uint64_t seed);

// One protocol shot: samples the outcome index from the p_k and applies the
// strategy's correction for it.
TeleportOutcome teleport_once(const DensityMatrix& rho, const QubitState& phi,
                              const Strategy& strat, std::uint64_t seed);

}  // namespace qchannel
