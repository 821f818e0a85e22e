// SPDX-License-Identifier: MIT
#pragma once

#include "xxz/numkit.hpp"

namespace xxz {

// The five physical knobs of the two-qubit XXZ chain in a uniform (B) plus
// inhomogeneous (b) z field. Units have k = 1; J, lambda, B, b, T are all
// dimensionless. J > 0 is antiferromagnetic, J < 0 ferromagnetic.
struct ModelParams {
  double J = 1.0;
  double lambda = 1.0;
  double B = 0.0;
  double b = 0.0;
  double T = 1.0;
};

// Throws std::invalid_argument on J = 0, lambda <= 0, non-finite values, or
// (when thermal) T <= 0.
void validate_params(const ModelParams& p, bool thermal = true);

struct DerivedQuantities {
  double eta;      // sqrt(b^2 + J^2)
  double epsilon;  // b - eta
  double zeta;     // b + eta
  double Z;        // partition function (may overflow to inf at tiny T)
  double m;        // cosh(eta/T)
  double n;        // b sinh(eta/T) / eta
  double c;        // e^{lambda J / 2T} J sinh(eta/T) / eta
};

DerivedQuantities derived_quantities(const ModelParams& p);

struct EigenPair {
  double energy;
  Vec4 state;
};

// phi_1 = |00>, phi_2 = |11>, phi_3/phi_4 the singlet-like superpositions.
using AnalyticEigensystem = std::array<EigenPair, 4>;

struct ThermalState {
  Matrix4 rho;
  double Z;
  DerivedQuantities derived;
};

struct GroundState {
  Vec4 state;
  double energy;
  bool degenerate;  // two lowest energies within 1e-12
};

// H = (1/2)[J(XX + YY + lambda ZZ) + (B+b) Z1 + (B-b) Z2]
Matrix4 build_hamiltonian(const ModelParams& p);

AnalyticEigensystem analytic_eigensystem(const ModelParams& p);

// X-shaped Gibbs state from the closed form; every entry is a ratio of
// Boltzmann weights with the largest exponent factored out, so T down to
// 1e-6 stays finite.
ThermalState thermal_state_closed(const ModelParams& p);

// e^{-H/T} / tr e^{-H/T} via the spectral exponential, with the minimum
// eigenvalue shifted out before exponentiating.
ThermalState thermal_state_oracle(const ModelParams& p);

GroundState ground_state(const ModelParams& p);

}  // namespace xxz
