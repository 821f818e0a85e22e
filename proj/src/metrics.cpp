// SPDX-License-Identifier: MIT
#include "xxz/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xxz {

namespace {

double clamp01(double x) {
  return std::clamp(x, 0.0, 1.0);
}

std::array<double, 4> sqrt_spectrum_desc(const Matrix4& hermitian_psd, double rel_floor = 0.0) {
  const HermitianEigen eig = hermitian_eigendecompose(0.5 * (hermitian_psd + hermitian_psd.adjoint()));
  // Optionally zero eigenvalues below a relative noise floor: when the caller
  // knows the matrix is low rank, sub-floor values are rounding noise that
  // sqrt would amplify from ~1e-16 to ~1e-8.
  const double floor = rel_floor * std::max(eig.values[3], 0.0);
  std::array<double, 4> g{};
  for (std::size_t k = 0; k < 4; ++k)
    g[k] = eig.values[k] > floor ? std::sqrt(eig.values[k]) : 0.0;
  std::sort(g.begin(), g.end(), std::greater<>());
  return g;
}

}  // namespace

ConcurrenceResult concurrence_general(const Matrix4& rho) {
  validate_density(rho, "concurrence_general");
  const Matrix4 yy = kron2(pauli(2), pauli(2));
  const Matrix4 rho_tilde = yy * rho.conjugate() * yy;
  const Matrix4 s = matrix_sqrt_psd(0.5 * (rho + rho.adjoint()));
  const Matrix4 sim = s * rho_tilde * s;  // Hermitian, same spectrum as rho rho~

  ConcurrenceResult res;
  res.gammas = sqrt_spectrum_desc(sim);
  const double sum = res.gammas[0] + res.gammas[1] + res.gammas[2] + res.gammas[3];
  res.value = clamp01(2.0 * res.gammas[0] - sum);
  return res;
}

ConcurrenceResult concurrence_x_state(const Matrix4& rho) {
  validate_density(rho, "concurrence_x_state");
  static const int off_x[][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}};
  for (const auto& ij : off_x)
    if (std::abs(rho(ij[0], ij[1])) > 1e-12)
      throw std::invalid_argument("concurrence_x_state: matrix is not X-shaped");

  const double d11 = rho(0, 0).real(), d22 = rho(1, 1).real();
  const double d33 = rho(2, 2).real(), d44 = rho(3, 3).real();
  const double corner = std::abs(rho(0, 3));
  const double mid = std::abs(rho(1, 2));

  // For an X state the gammas come in the two pairs
  // sqrt(rho11 rho44) +- |rho14| and sqrt(rho22 rho33) +- |rho23|.
  const double p = std::sqrt(std::max(d22 * d33, 0.0));
  const double q = std::sqrt(std::max(d11 * d44, 0.0));
  std::array<double, 4> g{q + corner, std::abs(q - corner),
                          p + mid, std::abs(p - mid)};
  std::sort(g.begin(), g.end(), std::greater<>());

  ConcurrenceResult res;
  res.gammas = g;
  res.value = clamp01(2.0 * std::max({0.0, corner - p, mid - q}));
  return res;
}

double input_concurrence(const InputState& in) {
  validate_input(in);
  return std::sin(2.0 * in.theta);
}

double output_concurrence_closed(const ModelParams& p, const InputState& in) {
  validate_input(in);
  const ChannelCoefficients c = channel_coefficients(p);
  return clamp01(c.r4 * std::sin(2.0 * in.theta) - 2.0 * c.r1);
}

FidelityResult fidelity_general(const Matrix4& rho_in, const Matrix4& rho_out) {
  validate_density(rho_in, "fidelity_general: rho_in");
  validate_density(rho_out, "fidelity_general: rho_out");
  const Matrix4 s = matrix_sqrt_psd(0.5 * (rho_in + rho_in.adjoint()));
  // rho_in is often pure or near-singular, so sqrt(rho_in) rho_out sqrt(rho_in)
  // has true zero eigenvalues that come back as rounding noise; filter them.
  const std::array<double, 4> g = sqrt_spectrum_desc(s * rho_out * s, 1e-13);
  const double tr = g[0] + g[1] + g[2] + g[3];
  return FidelityResult{clamp01(tr * tr)};
}

FidelityResult fidelity_closed(const ModelParams& p, const InputState& in) {
  validate_input(in);
  const ChannelCoefficients c = channel_coefficients(p);
  const double s2t = std::sin(2.0 * in.theta);
  return FidelityResult{clamp01(c.r3 + 0.5 * (c.r2 - c.r3 + c.r4) * s2t * s2t)};
}

}  // namespace xxz
