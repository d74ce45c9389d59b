#include "scott/errors.hpp"
#include "scott/scott_shift.hpp"
#include "scott/zeta.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace scott;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kSchwinger = -0.85411068040069; // ζ(3) - 5π²/24
constexpr double kSmallGammaK = 0.3;             // fitted on γ ≤ 0.3

// Box sum over l, n <= L extrapolated in 1/L from L, L/2, L/4.
double extrapolated_box(double g, int L) {
  const double s1 = direct_partial_sum(Coupling(g), L, L);
  const double s2 = direct_partial_sum(Coupling(g), L / 2, L / 2);
  const double s4 = direct_partial_sum(Coupling(g), L / 4, L / 4);
  return (8.0 * s1 - 6.0 * s2 + s4) / 3.0;
}

} // namespace

TEST_CASE("shift vanishes at gamma = 0") {
  const auto r = shift(Coupling(0.0), 1e-8);
  CHECK(r.value == 0.0);
  CHECK(scott_coefficient(Coupling(0.0), 1e-8).q == 0.5);
}

TEST_CASE("small gamma reproduces the Schwinger coefficient") {
  const auto r = shift(Coupling(0.01), 1e-8);
  CHECK_THAT(r.value / 1e-4, WithinAbs(-0.854, 2e-3));
  const auto q = scott_coefficient(Coupling(0.01), 1e-8);
  CHECK_THAT(q.q, WithinAbs(0.5 - 0.854 * 1e-4, 3e-7));
}

TEST_CASE("small gamma consistency with frozen K") {
  for (int i = 1; i <= 30; ++i) {
    const double g = i / 100.0;
    const auto r = shift(Coupling(g), 1e-10);
    CHECK(std::fabs(r.value / (g * g) - kSchwinger) <= kSmallGammaK * g * g);
  }
}

TEST_CASE("shift agrees with an extrapolated direct sum") {
  for (double g : {0.3, 0.7}) {
    const double oracle = extrapolated_box(g, 1024);
    const auto r = shift(Coupling(g), 1e-10);
    CHECK_THAT(r.value, WithinAbs(oracle, 2e-7));
  }
}

TEST_CASE("truncated direct sums lie above the shift and decrease") {
  const Coupling g(0.5);
  const auto r = shift(g, 1e-10);
  double prev = 0.0;
  for (int L : {4, 16, 64, 256}) {
    const double partial = direct_partial_sum(g, L, L);
    CHECK(partial < prev);
    CHECK(partial > r.value);
    prev = partial;
  }
}

TEST_CASE("shift is negative, decreasing, and within tolerance") {
  double prev = 0.0;
  for (int i = 1; i < 100; ++i) {
    const Coupling g(i / 100.0);
    const double tol = default_shift_tolerance(g);
    const auto r = shift(g, tol);
    CHECK(r.value < 0.0);
    CHECK(r.value < prev);
    CHECK(r.tail_estimate <= tol);
    CHECK(r.tail_estimate >= 0.0);
    prev = r.value;
  }
}

TEST_CASE("refinement moves the value by less than the previous estimate") {
  for (double g : {0.2, 0.8, 0.95, 0.999}) {
    const auto coarse = shift(Coupling(g), 1e-6);
    ShiftOptions fine_opts;
    fine_opts.n_direct = 256;
    fine_opts.l_direct = 128;
    fine_opts.l_channels = 1 << 15;
    const auto fine = shift(Coupling(g), 1e-10, fine_opts);
    CHECK(std::fabs(fine.value - coarse.value) <= coarse.tail_estimate);
    CHECK(fine.n_max >= coarse.n_max);
  }
}

TEST_CASE("shift is bit-identical across thread counts") {
  for (double g : {0.05, 0.6, 0.9999}) {
    ShiftOptions one;
    one.threads = 1;
    ShiftOptions four;
    four.threads = 4;
    ShiftOptions odd;
    odd.threads = 3;
    const double a = shift(Coupling(g), 1e-8, one).value;
    CHECK(shift(Coupling(g), 1e-8, four).value == a);
    CHECK(shift(Coupling(g), 1e-8, odd).value == a);
    CHECK(shift(Coupling(g), 1e-8, one).value == a);
  }
}

TEST_CASE("shift domain and tolerance errors") {
  CHECK_THROWS_AS(shift(Coupling(0.5), 1e-11), DomainError);
  CHECK_THROWS_AS(shift(Coupling(0.5), 0.1), DomainError);
  ShiftOptions tight;
  tight.n_direct = 4;
  tight.l_direct = 2;
  tight.l_channels = 8;
  tight.n_direct_cap = 4;
  tight.l_channels_cap = 8;
  CHECK_THROWS_AS(shift(Coupling(0.9), 1e-10, tight), ToleranceUnreachable);
  CHECK_THROWS_AS(shift(Coupling(0.9), 1e-10, tight), ConvergenceError);
}

TEST_CASE("scott coefficient near gamma = 1") {
  const auto q = scott_coefficient(Coupling(0.9999), 1e-6);
  CHECK(q.q < -1.8);
  CHECK(q.q > -1.92);
  CHECK(q.tail_estimate <= 1e-6);
}

TEST_CASE("schwinger closed form") {
  CHECK_THAT(schwinger_constant(), WithinAbs(kSchwinger, 1e-14));
  CHECK_THAT(schwinger_shift(1.0), WithinAbs(kSchwinger, 1e-14));
  CHECK(schwinger_shift(0.0) == 0.0);
  CHECK_THAT(schwinger_shift(0.5), WithinAbs(-0.21352767010017, 1e-13));
  CHECK_THROWS_AS(schwinger_shift(1.1), DomainError);
}

TEST_CASE("schwinger brute force") {
  const auto l0 = schwinger_shift_bruteforce(1.0, 0, 4000);
  CHECK_THAT(l0.partial, WithinAbs(-(riemann_zeta(3) - 0.75 * riemann_zeta(4)),
                                   1e-7));
  const auto zero = schwinger_shift_bruteforce(0.0, 100, 100);
  CHECK(zero.partial == 0.0);
  CHECK(zero.extrapolated == 0.0);
  for (int L : {50, 100, 400, 1000}) {
    const auto r = schwinger_shift_bruteforce(1.0, L, L);
    CHECK(std::fabs(r.partial - kSchwinger) <= 10.0 / L);
    CHECK(std::fabs(r.extrapolated - kSchwinger) <
          std::fabs(r.partial - kSchwinger));
  }
}

TEST_CASE("zeta double sum identity") {
  const auto s3 = zeta_double_sum_identity_check(3.0);
  CHECK_THAT(s3.closed_form, WithinAbs(0.442877, 1e-6));
  CHECK(std::fabs(s3.estimate() - s3.closed_form) <= s3.tail_error);
  const auto s4 = zeta_double_sum_identity_check(4.0);
  CHECK_THAT(s4.closed_form, WithinAbs(0.119734, 1e-6));
  CHECK(std::fabs(s4.estimate() - s4.closed_form) <= s4.tail_error);
  const auto s40 = zeta_double_sum_identity_check(40.0, 200);
  CHECK_THAT(s40.estimate(), WithinRel(std::pow(2.0, -40.0), 1e-6));
  CHECK_THROWS_AS(zeta_double_sum_identity_check(2.0), DomainError);
}
