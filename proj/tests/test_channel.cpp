// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "xxz/channel.hpp"

using namespace xxz;

namespace {

constexpr double kPi = std::numbers::pi;

ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uJ(-3.0, 3.0), ulam(0.05, 3.0), uB(-5.0, 5.0),
      ub(-5.0, 5.0), uT(0.05, 10.0);
  ModelParams p;
  do { p.J = uJ(rng); } while (std::abs(p.J) < 0.05);
  p.lambda = ulam(rng);
  p.B = uB(rng);
  p.b = ub(rng);
  p.T = uT(rng);
  return p;
}

}  // namespace

TEST_CASE("input state validation and density") {
  CHECK_THROWS_AS(validate_input(InputState{-0.1, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_input(InputState{2.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_input(InputState{0.5, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_input(InputState{0.5, 7.0}), std::invalid_argument);

  const Matrix4 r0 = input_density(InputState{0.0, 0.0});
  CHECK(r0(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(r0(3, 3)) < 1e-15);
  const Matrix4 rb = input_density(InputState{kPi / 4.0, 0.0});
  CHECK(rb(0, 0).real() == doctest::Approx(0.5));
  CHECK(rb(3, 3).real() == doctest::Approx(0.5));
  CHECK(rb(0, 3).real() == doctest::Approx(0.5));
  CHECK(rb(3, 0).real() == doctest::Approx(0.5));
  const Matrix4 r6 = input_density(InputState{kPi / 6.0, 0.0});
  CHECK(r6(0, 0).real() == doctest::Approx(0.75));
  CHECK(r6(3, 3).real() == doctest::Approx(0.25));
  // corner carries e^{-i phi}
  const double phi = 1.3;
  const Matrix4 rp = input_density(InputState{kPi / 6.0, phi});
  CHECK(std::arg(rp(0, 3)) == doctest::Approx(-phi));
}

TEST_CASE("Bell projectors form a complete orthogonal family") {
  const BellProjectors& bell = BellProjectors::instance();
  Matrix4 sum;
  for (int i = 0; i < 4; ++i) {
    const Matrix4& e = bell.E[static_cast<std::size_t>(i)];
    CHECK(hermiticity_defect(e) < 1e-14);
    CHECK(max_abs_diff(e * e, e) < 1e-12);
    for (int j = 0; j < 4; ++j)
      if (i != j)
        CHECK(std::abs((bell.E[static_cast<std::size_t>(i)] *
                        bell.E[static_cast<std::size_t>(j)]).trace().real()) <= 1e-12);
    sum = sum + e;
  }
  CHECK(max_abs_diff(sum, Matrix4::identity()) < 1e-12);
}

TEST_CASE("pure singlet channel is the identity channel") {
  const BellProjectors& bell = BellProjectors::instance();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uth(0.0, kPi / 2.0), uph(0.0, 6.28);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix4 rin = input_density(InputState{uth(rng), uph(rng)});
    const Matrix4 rout = apply_channel_general(bell.E[0], rin);
    CHECK(max_abs_diff(rout, rin) < 1e-12);
  }
}

TEST_CASE("maximally mixed channel twirls to the maximally mixed state") {
  const Matrix4 rin = input_density(InputState{kPi / 3.0, 0.4});
  const Matrix4 rout = apply_channel_general(cplx{0.25, 0.0} * Matrix4::identity(), rin);
  CHECK(max_abs_diff(rout, cplx{0.25, 0.0} * Matrix4::identity()) < 1e-12);
}

TEST_CASE("channel rejects invalid density inputs") {
  Matrix4 bad_trace = cplx{0.5, 0.0} * Matrix4::identity();
  const Matrix4 ok = cplx{0.25, 0.0} * Matrix4::identity();
  CHECK_THROWS_WITH_AS(apply_channel_general(bad_trace, ok),
                       doctest::Contains("trace"), std::invalid_argument);
  Matrix4 neg;
  neg(0, 0) = -0.5;
  neg(1, 1) = 0.5;
  neg(2, 2) = 0.5;
  neg(3, 3) = 0.5;  // trace 1, but indefinite
  CHECK_THROWS_WITH_AS(apply_channel_general(ok, neg),
                       doctest::Contains("PSD"), std::invalid_argument);
}

TEST_CASE("channel coefficients at the reference point") {
  const ChannelCoefficients c = channel_coefficients(ModelParams{1.0, 1.0, 0.0, 0.0, 1.0});
  CHECK(c.a1 == doctest::Approx(6.172322539260975).epsilon(1e-12));
  CHECK(c.a2 == doctest::Approx(1.471517764685769).epsilon(1e-12));
  CHECK(c.a3 == doctest::Approx(25.889980021277200).epsilon(1e-12));
  CHECK(c.a4 == doctest::Approx(15.016852707441020).epsilon(1e-12));
  CHECK(c.Z == doctest::Approx(6.301281049475965).epsilon(1e-12));
  CHECK(c.Z * c.Z == doctest::Approx(39.706142864484920).epsilon(1e-12));
  CHECK(c.r1 == doctest::Approx(c.a1 / (c.Z * c.Z)).epsilon(1e-13));
  CHECK(c.r4 == doctest::Approx(c.a4 / (c.Z * c.Z)).epsilon(1e-13));
}

TEST_CASE("coefficient identities on a random grid") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const ModelParams p = random_params(rng);
    const ChannelCoefficients c = channel_coefficients(p);
    CHECK(c.r1 >= 0.0);
    CHECK(c.r2 >= 0.0);
    CHECK(c.r3 >= 0.0);
    CHECK(c.r4 >= 0.0);
    CHECK(c.r4 <= c.r3 * (1.0 + 1e-12));
    // a2 + a3 + 2 a1 = Z^2, checked on the normalized ratios
    CHECK(c.r2 + c.r3 + 2.0 * c.r1 == doctest::Approx(1.0).epsilon(1e-12));
    // even in b
    ModelParams pb = p;
    pb.b = -p.b;
    const ChannelCoefficients cb = channel_coefficients(pb);
    CHECK(cb.r1 == doctest::Approx(c.r1).epsilon(1e-14));
    CHECK(cb.r4 == doctest::Approx(c.r4).epsilon(1e-14));
  }
}

TEST_CASE("coefficient ratios stay finite in the frozen regime") {
  const ChannelCoefficients c = channel_coefficients(ModelParams{1.0, 1.0, 0.5, 0.3, 1e-6});
  CHECK(std::isfinite(c.r1));
  CHECK(std::isfinite(c.r2));
  CHECK(std::isfinite(c.r3));
  CHECK(std::isfinite(c.r4));
  CHECK(c.r3 == doctest::Approx(1.0).epsilon(1e-9));  // ground state is phi_3 here
}

TEST_CASE("closed output equals the general channel on the thermal state") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uth(0.0, kPi / 2.0), uph(0.0, 6.28);
  for (int trial = 0; trial < 100; ++trial) {
    const ModelParams p = random_params(rng);
    const InputState in{uth(rng), uph(rng)};
    const OutputState closed = output_state_closed(p, in);
    const Matrix4 general = apply_channel_general(thermal_state_closed(p).rho, input_density(in));
    CHECK(max_abs_diff(closed.rho, general) < 1e-10);
    CHECK(closed.rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(closed.rho(1, 1).real() == doctest::Approx(closed.rho(2, 2).real()).epsilon(1e-14));
    CHECK(std::abs(closed.rho(1, 2)) < 1e-15);  // channel kills the middle off-diagonal
    const HermitianEigen eig = hermitian_eigendecompose(general);
    CHECK(eig.values[0] >= -1e-12);
  }
}

TEST_CASE("phase only rotates the corner") {
  const ModelParams p{1.0, 1.0, 0.3, 0.2, 0.8};
  const InputState base{kPi / 5.0, 0.0};
  const OutputState ref = output_state_closed(p, base);
  for (double phi : {kPi / 3.0, 1.7, kPi}) {
    const OutputState o = output_state_closed(p, InputState{base.theta, phi});
    for (int i = 0; i < 4; ++i)
      CHECK(o.rho(i, i).real() == doctest::Approx(ref.rho(i, i).real()).epsilon(1e-14));
    CHECK(std::abs(o.rho(0, 3)) == doctest::Approx(std::abs(ref.rho(0, 3))).epsilon(1e-14));
    CHECK(std::arg(o.rho(0, 3)) == doctest::Approx(-phi));
  }
}

TEST_CASE("theta = 0 kills the corners") {
  const OutputState o = output_state_closed(ModelParams{1.0, 1.0, 0.0, 0.0, 1.0}, InputState{0.0, 0.0});
  CHECK(std::abs(o.rho(0, 3)) < 1e-15);
  CHECK(o.rho(0, 0).real() == doctest::Approx(o.coeffs.r3).epsilon(1e-13));
  CHECK(o.rho(3, 3).real() == doctest::Approx(o.coeffs.r2).epsilon(1e-13));
}

TEST_CASE("near-perfect channel below the critical field") {
  const ModelParams p{1.0, 1.0, 0.0, 0.0, 1e-3};
  const InputState in{kPi / 4.0, 0.0};
  const OutputState o = output_state_closed(p, in);
  CHECK(max_abs_diff(o.rho, input_density(in)) < 1e-6);
}

TEST_CASE("product ground state swaps the corner populations") {
  // channel |00> : amplitudes of |11> and |00> exchange, corners vanish
  const InputState in{kPi / 6.0, 0.0};
  const Matrix4 o = pure_channel_output(Vec4{0.0, 0.0, 0.0, 1.0}, in);
  CHECK(o(0, 0).real() == doctest::Approx(0.25).epsilon(1e-12));   // was cos^2 = 0.75
  CHECK(o(3, 3).real() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(std::abs(o(0, 3)) < 1e-14);
}

TEST_CASE("pure channel output requires a normalized state") {
  CHECK_THROWS_AS(pure_channel_output(Vec4{0.5, 0.0, 0.0, 0.0}, InputState{0.3, 0.0}),
                  std::invalid_argument);
}
