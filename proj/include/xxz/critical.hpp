// SPDX-License-Identifier: MIT
#pragma once

#include <optional>

#include "xxz/spin_model.hpp"

namespace xxz {

struct FeasibilityReport {
  bool feasible_at_zero_T;
  double margin;                // lambda J + sqrt(J^2 + b^2) - |B|
  std::optional<double> B_c;    // present iff lambda J + sqrt(J^2 + b^2) > 0
  std::optional<double> b_c;    // absent when no threshold is needed at b = 0
};

struct MaxTemperature {
  std::optional<double> value;  // absent: infeasible at any temperature
  double residual;              // |a4 C_in - 2 a1| / Z^2 at the returned root
  bool multimodal;              // more than one sign change was seen
};

// Zero-temperature feasibility of entanglement teleportation,
// margin > 0 <=> a4 C_in - 2 a1 > 0 survives the T -> 0 limit.
FeasibilityReport feasibility_zero_T(double J, double lambda, double B, double b);

// B_c = lambda J + sqrt(J^2 + b^2) when positive, otherwise absent.
std::optional<double> critical_uniform_field(double J, double lambda, double b);

// b_c = sqrt((|B| - lambda J)^2 - J^2); absent when b = 0 is already feasible.
std::optional<double> critical_inhomogeneous_field(double J, double lambda, double B);

// Low-temperature approximation of the critical uniform field,
// lambda J + sqrt(J^2 + b^2) + T ln(C_in / 2). Valid for T well below eta.
double low_T_critical_field(const ModelParams& p, double C_in);

// Largest root of a4(T) C_in - 2 a1(T) = 0 in [1e-4, 1e4], located by a
// 512-point log-spaced sign scan plus bisection to relative 1e-10.
MaxTemperature max_teleportation_temperature(double J, double lambda, double B, double b,
                                             double C_in = 1.0);

// Strict comparison against the classical-protocol ceiling 2/3.
bool classical_threshold_check(double F);

}  // namespace xxz
