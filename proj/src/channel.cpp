// SPDX-License-Identifier: MIT
#include "xxz/channel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace xxz {

void validate_input(const InputState& in) {
  if (!std::isfinite(in.theta) || !std::isfinite(in.phi))
    throw std::invalid_argument("InputState: non-finite angle");
  if (in.theta < 0.0 || in.theta > std::numbers::pi / 2.0 + 1e-12)
    throw std::invalid_argument("InputState: theta must lie in [0, pi/2]");
  if (in.phi < 0.0 || in.phi >= 2.0 * std::numbers::pi)
    throw std::invalid_argument("InputState: phi must lie in [0, 2 pi)");
}

Vec4 input_vector(const InputState& in) {
  validate_input(in);
  const cplx phase = std::polar(1.0, in.phi);
  return Vec4{std::cos(in.theta), 0.0, 0.0, phase * std::sin(in.theta)};
}

Matrix4 input_density(const InputState& in) {
  return projector(input_vector(in));
}

const BellProjectors& BellProjectors::instance() {
  static const BellProjectors bp = [] {
    const double r = 1.0 / std::sqrt(2.0);
    // Basis order {|11>, |10>, |01>, |00>}.
    const std::array<Vec4, 4> psi{
        Vec4{0.0, -r, r, 0.0},  // (|01> - |10>)/sqrt2
        Vec4{-r, 0.0, 0.0, r},  // (|00> - |11>)/sqrt2
        Vec4{r, 0.0, 0.0, r},   // (|00> + |11>)/sqrt2
        Vec4{0.0, r, r, 0.0},   // (|01> + |10>)/sqrt2
    };
    BellProjectors out;
    for (std::size_t i = 0; i < 4; ++i) out.E[i] = projector(psi[i]);
    return out;
  }();
  return bp;
}

void validate_density(const Matrix4& rho, const char* who, double tol) {
  std::ostringstream os;
  if (!rho.is_finite()) {
    os << who << ": non-finite entries";
    throw std::invalid_argument(os.str());
  }
  const double hd = hermiticity_defect(rho);
  if (hd > tol) {
    os << who << ": not Hermitian (defect " << hd << ")";
    throw std::invalid_argument(os.str());
  }
  const double tr_err = std::abs(rho.trace() - cplx{1.0, 0.0});
  if (tr_err > tol) {
    os << who << ": trace differs from 1 by " << tr_err;
    throw std::invalid_argument(os.str());
  }
  const HermitianEigen eig = hermitian_eigendecompose(0.5 * (rho + rho.adjoint()));
  if (eig.values[0] < -tol) {
    os << who << ": not PSD (min eigenvalue " << eig.values[0] << ")";
    throw std::invalid_argument(os.str());
  }
}

Matrix4 apply_channel_general(const Matrix4& rho_channel, const Matrix4& rho_in) {
  validate_density(rho_channel, "apply_channel_general: rho_channel");
  validate_density(rho_in, "apply_channel_general: rho_in");

  const BellProjectors& bell = BellProjectors::instance();
  std::array<double, 4> prob{};
  for (std::size_t i = 0; i < 4; ++i)
    prob[i] = (bell.E[i] * rho_channel).trace().real();

  Matrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double pij = prob[static_cast<std::size_t>(i)] * prob[static_cast<std::size_t>(j)];
      if (pij == 0.0) continue;
      const Matrix4 corr = kron2(pauli(i), pauli(j));
      out = out + cplx{pij, 0.0} * (corr * rho_in * corr);
    }
  return out;
}

ChannelCoefficients channel_coefficients(const ModelParams& p) {
  validate_params(p);
  const double beta = 1.0 / p.T;
  const double eta = std::hypot(p.b, p.J);
  const double x = p.lambda * p.J * beta / 2.0;
  const double h = eta * beta;
  const double g = p.B * beta;

  // Half-weights of Z: Z = e^{s1} + e^{s2} + e^{s3} + e^{s4}.
  const double s1 = -x + g, s2 = -x - g, s3 = x + h, s4 = x - h;
  const double M = std::max(std::max(s1, s2), std::max(s3, s4));
  const double u = std::exp(s1 - M) + std::exp(s2 - M);   // 2 e^{-x-M} cosh g
  const double v = std::exp(s3 - M) + std::exp(s4 - M);   // 2 e^{x-M} cosh h
  const double w = std::exp(s3 - M) - std::exp(s4 - M);   // 2 e^{x-M} sinh h
  const double Zs = u + v;
  const double jr = (p.J / eta) * (p.J / eta);

  ChannelCoefficients c{};
  c.r1 = u * v / (Zs * Zs);
  c.r2 = u * u / (Zs * Zs);
  c.r3 = v * v / (Zs * Zs);
  c.r4 = jr * w * w / (Zs * Zs);
  const double scale = std::exp(2.0 * M);  // inf in the deep-frozen regime; ratios stay exact
  c.a1 = u * v * scale;
  c.a2 = u * u * scale;
  c.a3 = v * v * scale;
  c.a4 = jr * w * w * scale;
  c.Z = Zs * std::exp(M);
  return c;
}

OutputState output_state_closed(const ModelParams& p, const InputState& in) {
  validate_input(in);
  OutputState out;
  out.coeffs = channel_coefficients(p);
  out.input = in;
  const double c2 = std::cos(in.theta) * std::cos(in.theta);
  const double s2 = std::sin(in.theta) * std::sin(in.theta);
  const double s2t = std::sin(2.0 * in.theta);
  const ChannelCoefficients& cc = out.coeffs;

  out.rho(0, 0) = cc.r2 * s2 + cc.r3 * c2;
  out.rho(1, 1) = cc.r1;
  out.rho(2, 2) = cc.r1;
  out.rho(3, 3) = cc.r2 * c2 + cc.r3 * s2;
  out.rho(0, 3) = 0.5 * cc.r4 * s2t * std::polar(1.0, -in.phi);
  out.rho(3, 0) = std::conj(out.rho(0, 3));
  return out;
}

Matrix4 pure_channel_output(const Vec4& channel_state, const InputState& in) {
  const double nrm = norm(channel_state);
  if (std::abs(nrm - 1.0) > 1e-10)
    throw std::invalid_argument("pure_channel_output: channel state is not normalized");
  return apply_channel_general(projector(channel_state), input_density(in));
}

}  // namespace xxz
