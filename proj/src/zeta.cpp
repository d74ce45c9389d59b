#include "scott/zeta.hpp"

#include "scott/errors.hpp"

#include <array>
#include <cmath>

namespace scott {

namespace {

// B_{2j} / (2j)! for j = 1..10.
constexpr std::array<double, 10> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
};

constexpr double kShiftThreshold = 16.0;

} // namespace

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) {
    throw DomainError("hurwitz_zeta: s must exceed 1");
  }
  if (!(a > 0.0)) {
    throw DomainError("hurwitz_zeta: a must be positive");
  }

  int shift = 0;
  if (a < kShiftThreshold) {
    shift = static_cast<int>(std::ceil(kShiftThreshold - a));
  }
  const double A = a + shift;

  // Euler-Maclaurin remainder at A.
  const double a_pow = std::pow(A, -s);
  double tail = A * a_pow / (s - 1.0) + 0.5 * a_pow;
  double rising = s;           // s (s+1) ... (s+2j-2)
  double power = a_pow / A;    // A^{-s-2j+1}
  const double inv_a2 = 1.0 / (A * A);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const double term = kBernoulliOverFactorial[j] * rising * power;
    tail += term;
    if (std::fabs(term) <= 1e-18 * std::fabs(tail)) {
      break;
    }
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power *= inv_a2;
  }

  // Smallest terms first: the remainder, then the direct terms backwards.
  double sum = tail;
  for (int k = shift - 1; k >= 0; --k) {
    sum += std::pow(a + k, -s);
  }
  return sum;
}

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

} // namespace scott
