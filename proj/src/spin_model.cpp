// SPDX-License-Identifier: MIT
#include "xxz/spin_model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xxz {

void validate_params(const ModelParams& p, bool thermal) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("ModelParams: " + msg); };
  if (!std::isfinite(p.J) || !std::isfinite(p.lambda) || !std::isfinite(p.B) ||
      !std::isfinite(p.b) || !std::isfinite(p.T))
    fail("non-finite parameter");
  if (p.J == 0.0) fail("J = 0 is not admitted (eigenstate normalization degenerates)");
  if (p.lambda <= 0.0) fail("lambda must be > 0 (model anisotropy constraint)");
  if (thermal && p.T <= 0.0) fail("T must be > 0 for thermal operations");
}

DerivedQuantities derived_quantities(const ModelParams& p) {
  validate_params(p);
  DerivedQuantities d{};
  d.eta = std::hypot(p.b, p.J);
  d.epsilon = p.b - d.eta;
  d.zeta = p.b + d.eta;
  const double beta = 1.0 / p.T;
  const double x = p.lambda * p.J * beta / 2.0;
  d.Z = 2.0 * std::exp(-x) * std::cosh(p.B * beta) + 2.0 * std::exp(x) * std::cosh(d.eta * beta);
  d.m = std::cosh(d.eta * beta);
  d.n = p.b * std::sinh(d.eta * beta) / d.eta;
  d.c = std::exp(x) * p.J * std::sinh(d.eta * beta) / d.eta;
  return d;
}

Matrix4 build_hamiltonian(const ModelParams& p) {
  validate_params(p, false);
  Matrix4 h;
  auto add = [&](double w, int i, int j) {
    const Matrix4 t = kron2(pauli(i), pauli(j));
    h = h + cplx{w, 0.0} * t;
  };
  add(0.5 * p.J, 1, 1);
  add(0.5 * p.J, 2, 2);
  add(0.5 * p.J * p.lambda, 3, 3);
  add(0.5 * (p.B + p.b), 3, 0);
  add(0.5 * (p.B - p.b), 0, 3);
  return h;
}

AnalyticEigensystem analytic_eigensystem(const ModelParams& p) {
  validate_params(p, false);
  const double eta = std::hypot(p.b, p.J);
  const double eps = p.b - eta;
  const double zet = p.b + eta;
  AnalyticEigensystem sys;

  sys[0].energy = 0.5 * (p.lambda * p.J - 2.0 * p.B);
  sys[0].state = Vec4{0.0, 0.0, 0.0, 1.0};  // |00>
  sys[1].energy = 0.5 * (p.lambda * p.J + 2.0 * p.B);
  sys[1].state = Vec4{1.0, 0.0, 0.0, 0.0};  // |11>

  const double n3 = std::sqrt(p.J * p.J + eps * eps);
  sys[2].energy = -0.5 * p.lambda * p.J - eta;
  sys[2].state = Vec4{0.0, eps / n3, p.J / n3, 0.0};

  const double n4 = std::sqrt(p.J * p.J + zet * zet);
  sys[3].energy = -0.5 * p.lambda * p.J + eta;
  sys[3].state = Vec4{0.0, zet / n4, p.J / n4, 0.0};
  return sys;
}

ThermalState thermal_state_closed(const ModelParams& p) {
  validate_params(p);
  DerivedQuantities d = derived_quantities(p);
  const double beta = 1.0 / p.T;
  const double x = p.lambda * p.J * beta / 2.0;

  // Boltzmann exponents: e1 <-> |00>, e2 <-> |11>, e3/e4 <-> phi_3/phi_4.
  const double e1 = -x + p.B * beta;
  const double e2 = -x - p.B * beta;
  const double e3 = x + d.eta * beta;
  const double e4 = x - d.eta * beta;
  const double M = std::max(std::max(e1, e2), std::max(e3, e4));
  const double w1 = std::exp(e1 - M);
  const double w2 = std::exp(e2 - M);
  const double w3 = std::exp(e3 - M);
  const double w4 = std::exp(e4 - M);
  const double Zs = w1 + w2 + w3 + w4;

  const double sum = 0.5 * (w3 + w4);   // e^{x} m, scaled
  const double dif = 0.5 * (w3 - w4);   // e^{x} sinh(eta/T), scaled

  ThermalState st;
  st.derived = d;
  st.Z = std::exp(M) * Zs;
  st.rho(0, 0) = w2 / Zs;
  st.rho(1, 1) = (sum - (p.b / d.eta) * dif) / Zs;
  st.rho(2, 2) = (sum + (p.b / d.eta) * dif) / Zs;
  st.rho(3, 3) = w1 / Zs;
  st.rho(1, 2) = -(p.J / d.eta) * dif / Zs;
  st.rho(2, 1) = st.rho(1, 2);
  return st;
}

ThermalState thermal_state_oracle(const ModelParams& p) {
  validate_params(p);
  const Matrix4 h = build_hamiltonian(p);
  const HermitianEigen eig = hermitian_eigendecompose(h);
  const double emin = eig.values[0];
  const double beta = 1.0 / p.T;

  Matrix4 w = matrix_function(h, [&](double e) { return std::exp(-beta * (e - emin)); });
  const double tr = w.trace().real();
  ThermalState st;
  st.derived = derived_quantities(p);
  st.Z = std::exp(-beta * emin) * tr;
  st.rho = cplx{1.0 / tr, 0.0} * w;
  return st;
}

GroundState ground_state(const ModelParams& p) {
  const AnalyticEigensystem sys = analytic_eigensystem(p);
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return sys[static_cast<std::size_t>(i)].energy < sys[static_cast<std::size_t>(j)].energy;
  });
  GroundState g;
  g.state = sys[static_cast<std::size_t>(order[0])].state;
  g.energy = sys[static_cast<std::size_t>(order[0])].energy;
  g.degenerate = sys[static_cast<std::size_t>(order[1])].energy - g.energy <= 1e-12;
  return g;
}

}  // namespace xxz
