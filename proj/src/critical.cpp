// SPDX-License-Identifier: MIT
#include "xxz/critical.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "xxz/channel.hpp"

namespace xxz {

namespace {

void check_static_params(double J, double lambda) {
  if (!(J != 0.0) || !std::isfinite(J)) throw std::invalid_argument("J must be finite and nonzero");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be > 0");
}

double teleport_sign(double J, double lambda, double B, double b, double C_in, double T) {
  const ChannelCoefficients c = channel_coefficients(ModelParams{J, lambda, B, b, T});
  return c.r4 * C_in - 2.0 * c.r1;
}

}  // namespace

FeasibilityReport feasibility_zero_T(double J, double lambda, double B, double b) {
  check_static_params(J, lambda);
  FeasibilityReport r{};
  const double eta = std::hypot(J, b);
  r.margin = lambda * J + eta - std::abs(B);
  r.feasible_at_zero_T = r.margin > 0.0;
  r.B_c = critical_uniform_field(J, lambda, b);
  r.b_c = critical_inhomogeneous_field(J, lambda, B);
  return r;
}

std::optional<double> critical_uniform_field(double J, double lambda, double b) {
  check_static_params(J, lambda);
  const double bc = lambda * J + std::hypot(J, b);
  if (bc > 0.0) return bc;
  return std::nullopt;
}

std::optional<double> critical_inhomogeneous_field(double J, double lambda, double B) {
  check_static_params(J, lambda);
  // Feasible already at b = 0?
  if (lambda * J + std::abs(J) - std::abs(B) > 0.0) return std::nullopt;
  const double d = std::abs(B) - lambda * J;
  const double disc = d * d - J * J;
  if (disc < 0.0)
    throw std::logic_error("critical_inhomogeneous_field: negative discriminant with b=0 infeasible");
  return std::sqrt(disc);
}

double low_T_critical_field(const ModelParams& p, double C_in) {
  check_static_params(p.J, p.lambda);
  if (!(p.T > 0.0)) throw std::invalid_argument("low_T_critical_field: T must be > 0");
  if (!(C_in > 0.0 && C_in <= 1.0))
    throw std::invalid_argument("low_T_critical_field: C_in must lie in (0, 1]");
  return p.lambda * p.J + std::hypot(p.J, p.b) + p.T * std::log(C_in / 2.0);
}

MaxTemperature max_teleportation_temperature(double J, double lambda, double B, double b,
                                             double C_in) {
  check_static_params(J, lambda);
  if (!(C_in > 0.0 && C_in <= 1.0))
    throw std::invalid_argument("max_teleportation_temperature: C_in must lie in (0, 1]");

  constexpr double t_lo = 1e-4, t_hi = 1e4;
  constexpr int n_scan = 512;
  const double log_lo = std::log(t_lo), log_hi = std::log(t_hi);

  std::vector<double> temps(n_scan), signs(n_scan);
  for (int i = 0; i < n_scan; ++i) {
    temps[static_cast<std::size_t>(i)] =
        std::exp(log_lo + (log_hi - log_lo) * i / (n_scan - 1));
    signs[static_cast<std::size_t>(i)] =
        teleport_sign(J, lambda, B, b, C_in, temps[static_cast<std::size_t>(i)]);
  }

  std::vector<int> brackets;  // indices i with a sign change on (t_i, t_{i+1})
  bool any_positive = false;
  for (int i = 0; i < n_scan; ++i) any_positive = any_positive || signs[static_cast<std::size_t>(i)] > 0.0;
  for (int i = 0; i + 1 < n_scan; ++i) {
    const bool pos_l = signs[static_cast<std::size_t>(i)] > 0.0;
    const bool pos_r = signs[static_cast<std::size_t>(i + 1)] > 0.0;
    if (pos_l != pos_r) brackets.push_back(i);
  }

  MaxTemperature out{};
  out.multimodal = brackets.size() > 1;
  if (!any_positive || brackets.empty()) {
    out.residual = 0.0;
    return out;  // infeasible at any temperature in the bracket
  }

  const int i = brackets.back();
  double lo = temps[static_cast<std::size_t>(i)], hi = temps[static_cast<std::size_t>(i + 1)];
  double f_lo = signs[static_cast<std::size_t>(i)];
  while ((hi - lo) / hi > 1e-10) {
    const double mid = std::sqrt(lo * hi);
    const double f_mid = teleport_sign(J, lambda, B, b, C_in, mid);
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  out.value = root;
  out.residual = std::abs(teleport_sign(J, lambda, B, b, C_in, root));
  return out;
}

bool classical_threshold_check(double F) {
  if (!(F >= 0.0 && F <= 1.0)) throw std::invalid_argument("classical_threshold_check: F outside [0, 1]");
  return F > 2.0 / 3.0;
}

}  // namespace xxz
