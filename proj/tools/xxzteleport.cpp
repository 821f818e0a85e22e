// SPDX-License-Identifier: MIT
//
// xxzteleport: teleportation through the thermal state of a two-qubit XXZ
// chain. Subcommands: point, sweep, critical, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xxz/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string opt_fmt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string("NA");
}

struct Options {
  xxz::ModelParams params;
  xxz::InputState input{0.0, 0.0};
  std::string out;
  std::uint64_t seed = 42;
  int jobs = 1;
};

int do_point(const Options& o) {
  using namespace xxz;
  validate_params(o.params);
  validate_input(o.input);
  const AnalyticEigensystem sys = analytic_eigensystem(o.params);
  const ChannelCoefficients c = channel_coefficients(o.params);
  const FeasibilityReport fr = feasibility_zero_T(o.params.J, o.params.lambda, o.params.B, o.params.b);
  const MaxTemperature mt = max_teleportation_temperature(o.params.J, o.params.lambda, o.params.B, o.params.b);

  std::ostringstream os;
  for (std::size_t i = 0; i < 4; ++i) os << "E" << i + 1 << "=" << fmt(sys[i].energy) << '\n';
  os << "Z=" << fmt(c.Z) << '\n'
     << "a1=" << fmt(c.a1) << '\n' << "a2=" << fmt(c.a2) << '\n'
     << "a3=" << fmt(c.a3) << '\n' << "a4=" << fmt(c.a4) << '\n'
     << "C_in=" << fmt(input_concurrence(o.input)) << '\n'
     << "C_out=" << fmt(output_concurrence_closed(o.params, o.input)) << '\n'
     << "F=" << fmt(fidelity_closed(o.params, o.input).value) << '\n'
     << "margin=" << fmt(fr.margin) << '\n'
     << "feasible_zero_T=" << (fr.feasible_at_zero_T ? 1 : 0) << '\n'
     << "B_c=" << opt_fmt(fr.B_c) << '\n'
     << "b_c=" << opt_fmt(fr.b_c) << '\n'
     << "T_max=" << opt_fmt(mt.value) << '\n';
  std::cout << os.str();
  return kExitOk;
}

int write_to(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << path << '\n';
    return kExitIo;
  }
  f << content;
  if (!f) {
    std::cerr << "error: write failed: " << path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> g;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) g.push_back(std::stod(tok));
  if (g.empty()) throw std::invalid_argument("empty grid");
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum teleportation through a two-qubit XXZ thermal channel"};
  app.fallthrough(true);
  app.set_config("--config")->configurable(false);

  Options o;
  app.add_option("--J", o.params.J, "Exchange coupling (nonzero; J>0 antiferromagnetic)");
  app.add_option("--lambda", o.params.lambda, "Anisotropy (> 0)");
  app.add_option("--B", o.params.B, "Uniform z field");
  app.add_option("--b", o.params.b, "Inhomogeneous z field");
  app.add_option("--T", o.params.T, "Temperature (> 0, k = 1)");
  app.add_option("--theta", o.input.theta, "Input amplitude angle in [0, pi/2], radians");
  app.add_option("--phi", o.input.phi, "Input phase in [0, 2 pi), radians");
  app.add_option("--out", o.out, "Output path ('-' for stdout)");
  app.add_option("--seed", o.seed, "RNG seed for verify");
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  CLI::App* point = app.add_subcommand("point", "Evaluate all quantities at one parameter point");

  CLI::App* sweep = app.add_subcommand("sweep", "2-D parameter sweep to CSV");
  xxz::SweepSpec spec;
  sweep->add_option("--x", spec.x_param, "x parameter {B,b,T,theta,lambda,J}")->required();
  sweep->add_option("--y", spec.y_param, "y parameter")->required();
  std::vector<double> xr, yr;
  sweep->add_option("--x-range", xr, "x start stop steps")->expected(3)->required();
  sweep->add_option("--y-range", yr, "y start stop steps")->expected(3)->required();

  CLI::App* critical = app.add_subcommand("critical", "Critical curves to CSV");
  std::string b_grid, B_grid;
  critical->add_option("--b-grid", b_grid, "comma-separated b values");
  critical->add_option("--B-grid", B_grid, "comma-separated B values");

  CLI::App* verify = app.add_subcommand("verify", "Closed forms vs oracles on a random grid");
  int points = 200;
  double corruption = 0.0;
  verify->add_option("--points", points, "grid size")->check(CLI::PositiveNumber);
  verify->add_option("--corrupt", corruption, "self-test hook: offset added to closed C_out")
      ->group("");  // hidden

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (point->parsed()) return do_point(o);

    if (sweep->parsed()) {
      spec.x_start = xr[0]; spec.x_stop = xr[1]; spec.x_steps = static_cast<int>(xr[2]);
      spec.y_start = yr[0]; spec.y_stop = yr[1]; spec.y_steps = static_cast<int>(yr[2]);
      spec.fixed = o.params;
      spec.input = o.input;
      const std::vector<xxz::SweepRow> rows = xxz::run_sweep(spec, o.jobs);
      std::ostringstream os;
      xxz::write_sweep_csv(os, rows);
      return write_to(o.out, os.str());
    }

    if (critical->parsed()) {
      if (b_grid.empty() == B_grid.empty()) {
        std::cerr << "error: critical needs exactly one of --b-grid / --B-grid\n";
        return kExitUsage;
      }
      const bool grid_is_b = !b_grid.empty();
      const std::vector<double> grid = parse_grid(grid_is_b ? b_grid : B_grid);
      const auto rows = xxz::run_critical(o.params.J, o.params.lambda, o.params.B, o.params.b,
                                          grid, grid_is_b);
      std::ostringstream os;
      xxz::write_critical_csv(os, rows);
      return write_to(o.out, os.str());
    }

    if (verify->parsed()) {
      const xxz::VerifyReport rep = xxz::run_verify(points, o.seed, corruption);
      xxz::print_verify_report(std::cout, rep);
      return rep.pass ? kExitOk : kExitVerifyFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
