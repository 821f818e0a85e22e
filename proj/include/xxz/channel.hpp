// SPDX-License-Identifier: MIT
#pragma once

#include "xxz/spin_model.hpp"

namespace xxz {

// Teleported input family cos(theta)|11> + e^{i phi} sin(theta)|00>.
struct InputState {
  double theta = 0.0;  // [0, pi/2]
  double phi = 0.0;    // [0, 2 pi)
};

void validate_input(const InputState& in);

Vec4 input_vector(const InputState& in);
Matrix4 input_density(const InputState& in);

// Projectors onto the Bell basis
//   psi_0 = (|01> - |10>)/sqrt2,  psi_1 = (|00> - |11>)/sqrt2,
//   psi_2 = (|00> + |11>)/sqrt2,  psi_3 = (|01> + |10>)/sqrt2.
struct BellProjectors {
  std::array<Matrix4, 4> E;
  static const BellProjectors& instance();
};

// Throws std::invalid_argument naming the violated property (trace,
// Hermiticity or positivity) when rho fails the density-matrix check.
void validate_density(const Matrix4& rho, const char* who, double tol = 1e-10);

// Two independent Bell measurements on the resource state followed by the
// matching Pauli corrections, averaged over outcomes:
//   rho_out = sum_ij p_i p_j (s_i x s_j) rho_in (s_i x s_j),
// with p_i = tr[E_i rho_channel]. The Pauli pairing (psi_0 <-> I,
// psi_1 <-> x, psi_2 <-> y, psi_3 <-> z) is the unique one making the pure
// singlet channel act as the identity.
Matrix4 apply_channel_general(const Matrix4& rho_channel, const Matrix4& rho_in);

struct ChannelCoefficients {
  double a1, a2, a3, a4;  // raw values (overflow to inf at tiny T)
  double Z;
  double r1, r2, r3, r4;  // a_i / Z^2, always finite for T >= 1e-6
};

// a1 = 4 cosh(eta/T) cosh(B/T),  a2 = 4 e^{-lJ/T} cosh^2(B/T),
// a3 = 4 e^{lJ/T} cosh^2(eta/T), a4 = 4 e^{lJ/T} J^2 sinh^2(eta/T) / eta^2.
ChannelCoefficients channel_coefficients(const ModelParams& p);

struct OutputState {
  Matrix4 rho;
  ChannelCoefficients coeffs;
  InputState input;
};

// Closed-form output of the thermal channel: X-shaped with flat middle
// block a1/Z^2 and corners (a4/2Z^2) sin(2 theta) e^{-+ i phi}.
OutputState output_state_closed(const ModelParams& p, const InputState& in);

// Channel through a pure resource vector (the zero-temperature path).
Matrix4 pure_channel_output(const Vec4& channel_state, const InputState& in);

}  // namespace xxz
