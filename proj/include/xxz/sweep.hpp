// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "xxz/channel.hpp"
#include "xxz/critical.hpp"
#include "xxz/metrics.hpp"

namespace xxz {

// 2-D grid over two distinct parameters from {B, b, T, theta, lambda, J};
// everything else is held at the fixed values.
struct SweepSpec {
  std::string x_param;
  std::string y_param;
  double x_start, x_stop;
  int x_steps;
  double y_start, y_stop;
  int y_steps;
  ModelParams fixed;
  InputState input;
};

struct SweepRow {
  double x, y;
  double C_in, C_out, F, Z;
  int feasible;  // zero-T feasibility at this point's (J, lambda, B, b)
};

void validate_spec(const SweepSpec& spec);

// Rows in row-major x-then-y order (x outer). Point evaluation may fan out
// over `jobs` threads; the result is independent of the thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int jobs = 1);

// Header `x,y,C_in,C_out,F,Z,feasible`, values in %.12e, '\n' line endings.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct CriticalRow {
  double param;
  std::optional<double> B_c, b_c, T_max;
};

// One row per grid value. When the grid runs over b, each row uses that b
// (and the fixed B); when over B, the row's B is the grid value.
std::vector<CriticalRow> run_critical(double J, double lambda, double B_fixed, double b_fixed,
                                      const std::vector<double>& grid, bool grid_is_b);

// Header `param,B_c,b_c,T_max`; absent values spelled NA.
void write_critical_csv(std::ostream& os, const std::vector<CriticalRow>& rows);

struct VerifyReport {
  double max_thermal_dev;      // closed Gibbs state vs spectral oracle
  double max_channel_dev;      // closed output state vs general channel
  double max_concurrence_dev;  // closed C_out vs Wootters on the oracle path
  double max_fidelity_dev;     // closed F vs Uhlmann on the oracle path
  double max_trace_identity_rel;
  std::string worst_point;  // parameter point with the largest tolerance ratio
  bool pass;
};

// Seeded random cross-validation of every closed form against its
// matrix-level oracle. `corruption` is a self-test hook added to a1/Z^2
// in the closed concurrence; leave at 0 for a real run.
VerifyReport run_verify(int points, std::uint64_t seed, double corruption = 0.0);

void print_verify_report(std::ostream& os, const VerifyReport& r);

}  // namespace xxz
