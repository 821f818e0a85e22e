// SPDX-License-Identifier: MIT
#include "xxz/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <thread>

namespace xxz {

namespace {

const char* kParamNames[] = {"B", "b", "T", "theta", "lambda", "J"};

bool known_param(const std::string& name) {
  for (const char* p : kParamNames)
    if (name == p) return true;
  return false;
}

void set_param(ModelParams& p, InputState& in, const std::string& name, double value) {
  if (name == "B") p.B = value;
  else if (name == "b") p.b = value;
  else if (name == "T") p.T = value;
  else if (name == "lambda") p.lambda = value;
  else if (name == "J") p.J = value;
  else if (name == "theta") in.theta = value;
  else throw std::invalid_argument("unknown sweep parameter: " + name);
}

double grid_value(double start, double stop, int steps, int i) {
  if (steps == 1) return start;
  return start + (stop - start) * i / (steps - 1);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

}  // namespace

void validate_spec(const SweepSpec& spec) {
  if (!known_param(spec.x_param) || !known_param(spec.y_param))
    throw std::invalid_argument("sweep parameters must come from {B, b, T, theta, lambda, J}");
  if (spec.x_param == spec.y_param)
    throw std::invalid_argument("x and y sweep parameters must differ");
  if (spec.x_steps < 2 || spec.y_steps < 2)
    throw std::invalid_argument("sweep needs at least 2 steps per axis");
  validate_input(spec.input);
  // Every grid point must satisfy the model invariants; the extreme corners
  // cover sign/zero violations for linearly spaced grids of T, lambda, J.
  for (int ix : {0, spec.x_steps - 1})
    for (int iy : {0, spec.y_steps - 1}) {
      ModelParams p = spec.fixed;
      InputState in = spec.input;
      set_param(p, in, spec.x_param, grid_value(spec.x_start, spec.x_stop, spec.x_steps, ix));
      set_param(p, in, spec.y_param, grid_value(spec.y_start, spec.y_stop, spec.y_steps, iy));
      validate_params(p);
      validate_input(in);
    }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs) {
  validate_spec(spec);
  const std::size_t total = static_cast<std::size_t>(spec.x_steps) * static_cast<std::size_t>(spec.y_steps);
  std::vector<SweepRow> rows(total);

  auto eval_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const int ix = static_cast<int>(k) / spec.y_steps;
      const int iy = static_cast<int>(k) % spec.y_steps;
      ModelParams p = spec.fixed;
      InputState in = spec.input;
      const double xv = grid_value(spec.x_start, spec.x_stop, spec.x_steps, ix);
      const double yv = grid_value(spec.y_start, spec.y_stop, spec.y_steps, iy);
      set_param(p, in, spec.x_param, xv);
      set_param(p, in, spec.y_param, yv);
      validate_params(p);
      validate_input(in);

      SweepRow& r = rows[k];
      r.x = xv;
      r.y = yv;
      r.C_in = input_concurrence(in);
      r.C_out = output_concurrence_closed(p, in);
      r.F = fidelity_closed(p, in).value;
      r.Z = channel_coefficients(p).Z;
      r.feasible = feasibility_zero_T(p.J, p.lambda, p.B, p.b).feasible_at_zero_T ? 1 : 0;
    }
  };

  jobs = std::max(jobs, 1);
  if (jobs == 1 || total < 2) {
    eval_range(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
    for (int t = 0; t < jobs; ++t) {
      const std::size_t begin = static_cast<std::size_t>(t) * chunk;
      if (begin >= total) break;
      pool.emplace_back(eval_range, begin, std::min(begin + chunk, total));
    }
    for (auto& th : pool) th.join();
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "x,y,C_in,C_out,F,Z,feasible\n";
  for (const SweepRow& r : rows)
    os << fmt(r.x) << ',' << fmt(r.y) << ',' << fmt(r.C_in) << ',' << fmt(r.C_out) << ','
       << fmt(r.F) << ',' << fmt(r.Z) << ',' << r.feasible << '\n';
}

std::vector<CriticalRow> run_critical(double J, double lambda, double B_fixed, double b_fixed,
                                      const std::vector<double>& grid, bool grid_is_b) {
  std::vector<CriticalRow> rows;
  rows.reserve(grid.size());
  for (double v : grid) {
    const double B = grid_is_b ? B_fixed : v;
    const double b = grid_is_b ? v : b_fixed;
    CriticalRow r;
    r.param = v;
    r.B_c = critical_uniform_field(J, lambda, b);
    r.b_c = critical_inhomogeneous_field(J, lambda, B);
    r.T_max = max_teleportation_temperature(J, lambda, B, b).value;
    rows.push_back(r);
  }
  return rows;
}

void write_critical_csv(std::ostream& os, const std::vector<CriticalRow>& rows) {
  auto cell = [](const std::optional<double>& v) { return v ? fmt(*v) : std::string("NA"); };
  os << "param,B_c,b_c,T_max\n";
  for (const CriticalRow& r : rows)
    os << fmt(r.param) << ',' << cell(r.B_c) << ',' << cell(r.b_c) << ',' << cell(r.T_max) << '\n';
}

VerifyReport run_verify(int points, std::uint64_t seed, double corruption) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uJ(-3.0, 3.0), ulam(0.05, 3.0), uB(-5.0, 5.0),
      ub(-5.0, 5.0), uT(0.05, 10.0), uth(0.0, std::acos(-1.0) / 2.0),
      uph(0.0, 2.0 * std::acos(-1.0) * (1.0 - 1e-12));

  VerifyReport rep{};
  double worst_ratio = 0.0;
  for (int k = 0; k < points; ++k) {
    ModelParams p;
    do { p.J = uJ(rng); } while (std::abs(p.J) < 0.05);
    p.lambda = ulam(rng);
    p.B = uB(rng);
    p.b = ub(rng);
    p.T = uT(rng);
    InputState in{uth(rng), uph(rng)};

    const ThermalState closed = thermal_state_closed(p);
    const ThermalState oracle = thermal_state_oracle(p);
    rep.max_thermal_dev = std::max(rep.max_thermal_dev, max_abs_diff(closed.rho, oracle.rho));

    const Matrix4 rho_in = input_density(in);
    const Matrix4 out_general = apply_channel_general(oracle.rho, rho_in);
    const OutputState out_closed = output_state_closed(p, in);
    rep.max_channel_dev = std::max(rep.max_channel_dev, max_abs_diff(out_closed.rho, out_general));

    const double c_closed = output_concurrence_closed(p, in) + corruption;
    const double c_general = concurrence_general(out_general).value;
    rep.max_concurrence_dev = std::max(rep.max_concurrence_dev, std::abs(c_closed - c_general));

    const double f_closed = fidelity_closed(p, in).value;
    const double f_general = fidelity_general(rho_in, out_general).value;
    rep.max_fidelity_dev = std::max(rep.max_fidelity_dev, std::abs(f_closed - f_general));

    const ChannelCoefficients c = channel_coefficients(p);
    const double lhs = c.r2 + c.r3 + 2.0 * c.r1;  // (a2 + a3 + 2 a1) / Z^2
    rep.max_trace_identity_rel = std::max(rep.max_trace_identity_rel, std::abs(lhs - 1.0));

    const double ratio = std::max({max_abs_diff(closed.rho, oracle.rho) / 1e-8,
                                   max_abs_diff(out_closed.rho, out_general) / 1e-8,
                                   std::abs(c_closed - c_general) / 1e-8,
                                   std::abs(f_closed - f_general) / 1e-8,
                                   std::abs(lhs - 1.0) / 1e-12});
    if (k == 0 || ratio > worst_ratio) {
      worst_ratio = ratio;
      char buf[160];
      std::snprintf(buf, sizeof buf, "J=%g lambda=%g B=%g b=%g T=%g theta=%g phi=%g",
                    p.J, p.lambda, p.B, p.b, p.T, in.theta, in.phi);
      rep.worst_point = buf;
    }
  }

  rep.pass = rep.max_thermal_dev <= 1e-8 && rep.max_channel_dev <= 1e-8 &&
             rep.max_concurrence_dev <= 1e-8 && rep.max_fidelity_dev <= 1e-8 &&
             rep.max_trace_identity_rel <= 1e-12;
  return rep;
}

void print_verify_report(std::ostream& os, const VerifyReport& r) {
  os << "thermal_closed_vs_oracle_max_dev=" << fmt(r.max_thermal_dev) << '\n'
     << "channel_closed_vs_general_max_dev=" << fmt(r.max_channel_dev) << '\n'
     << "concurrence_closed_vs_wootters_max_dev=" << fmt(r.max_concurrence_dev) << '\n'
     << "fidelity_closed_vs_uhlmann_max_dev=" << fmt(r.max_fidelity_dev) << '\n'
     << "trace_identity_max_rel=" << fmt(r.max_trace_identity_rel) << '\n'
     << "verdict=" << (r.pass ? "PASS" : "FAIL") << '\n';
  if (!r.pass) os << "worst_point: " << r.worst_point << '\n';
}

}  // namespace xxz
