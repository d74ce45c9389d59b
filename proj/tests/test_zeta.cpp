#include "scott/errors.hpp"
#include "scott/zeta.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace scott;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using big = boost::multiprecision::cpp_bin_float_50;

TEST_CASE("riemann zeta at integers") {
  const double pi = std::numbers::pi;
  CHECK_THAT(riemann_zeta(2.0), WithinRel(pi * pi / 6.0, 1e-15));
  CHECK_THAT(riemann_zeta(3.0), WithinRel(1.2020569031595942854, 1e-15));
  CHECK_THAT(riemann_zeta(4.0), WithinRel(pi * pi * pi * pi / 90.0, 1e-15));
  CHECK_THAT(riemann_zeta(11.0), WithinRel(1.0004941886041194646, 1e-15));
}

TEST_CASE("riemann zeta against boost on a grid") {
  for (double s = 1.1; s < 30.0; s += 0.7) {
    CHECK_THAT(riemann_zeta(s), WithinRel(boost::math::zeta(s), 1e-14));
  }
}

TEST_CASE("hurwitz zeta at integer and half-integer shifts") {
  for (double s : {2.0, 3.0, 4.0, 7.5}) {
    double partial = 0.0;
    for (int n = 1; n <= 4; ++n) {
      partial += std::pow(n, -s);
    }
    CHECK_THAT(hurwitz_zeta(s, 5.0),
               WithinAbs(riemann_zeta(s) - partial, 1e-15));
    CHECK_THAT(hurwitz_zeta(s, 0.5),
               WithinRel((std::pow(2.0, s) - 1.0) * riemann_zeta(s), 1e-14));
  }
}

TEST_CASE("hurwitz zeta against a 50-digit reference") {
  // ζ(s, a) = Σ_{k<M} (a+k)^{-s} + Euler-Maclaurin remainder at a+M, all in
  // extended precision with a large shift so that three corrections suffice.
  auto oracle = [](double s_, double a_) {
    const big s = s_;
    const big a = a_;
    const int M = 4000;
    big sum = 0;
    for (int k = 0; k < M; ++k) {
      sum += pow(a + k, -s);
    }
    const big x = a + M;
    sum += pow(x, 1 - s) / (s - 1) + pow(x, -s) / 2 + s * pow(x, -s - 1) / 12 -
           s * (s + 1) * (s + 2) * pow(x, -s - 3) / 720;
    return static_cast<double>(sum);
  };
  for (double s : {2.0, 3.0, 5.0, 10.0}) {
    for (double a : {0.3, 1.0, 2.75, 33.0, 1e4, 4.2e6}) {
      CHECK_THAT(hurwitz_zeta(s, a), WithinRel(oracle(s, a), 1e-14));
    }
  }
}

TEST_CASE("zeta domain") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(riemann_zeta(0.5), DomainError);
}
