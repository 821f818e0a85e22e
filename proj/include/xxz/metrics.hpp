// SPDX-License-Identifier: MIT
#pragma once

#include "xxz/channel.hpp"

namespace xxz {

struct ConcurrenceResult {
  double value;                   // clamped to [0, 1]
  std::array<double, 4> gammas;   // descending square-rooted eigenvalues of R
};

struct FidelityResult {
  double value;  // clamped to [0, 1]
};

// Wootters concurrence. The spectrum of R = rho rho~ is taken from the
// Hermitian similarity sqrt(rho) rho~ sqrt(rho).
ConcurrenceResult concurrence_general(const Matrix4& rho);

// Fast path for X-shaped density matrices:
//   C = 2 max(0, |rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44)).
// Rejects matrices with off-X entries above 1e-12.
ConcurrenceResult concurrence_x_state(const Matrix4& rho);

// sin(2 theta), independent of phi.
double input_concurrence(const InputState& in);

// max((a4 C_in - 2 a1)/Z^2, 0), overflow-safe.
double output_concurrence_closed(const ModelParams& p, const InputState& in);

// Jozsa fidelity [tr sqrt(sqrt(rho_in) rho_out sqrt(rho_in))]^2.
FidelityResult fidelity_general(const Matrix4& rho_in, const Matrix4& rho_out);

// [a3 + (a2 - a3 + a4) sin^2(2 theta)/2] / Z^2, overflow-safe.
FidelityResult fidelity_closed(const ModelParams& p, const InputState& in);

}  // namespace xxz
