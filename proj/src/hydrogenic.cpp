#include "scott/hydrogenic.hpp"

#include "scott/errors.hpp"

#include <cmath>
#include <string>

namespace scott {

Coupling::Coupling(double gamma) : gamma_(gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw DomainError("coupling gamma must lie in [0, 1), got " +
                      std::to_string(gamma));
  }
}

namespace {

// sqrt(k² - γ²) without forming k² - γ² when γ is close to k = 1.
double reduced_k(double gamma, int k) noexcept {
  return std::sqrt((k - gamma) * (k + gamma));
}

// Denominator Δ = (n+l)² - 2 n_r δ of the Sommerfeld formula. Always lies in
// [(n+l)²/2, (n+l)²].
double sommerfeld_denominator(Coupling g, const LevelIndex &idx) noexcept {
  const double N = idx.principal();
  return N * N - 2.0 * idx.radial() * sommerfeld_defect(g, idx.k());
}

} // namespace

double sommerfeld_defect(Coupling g, int k) noexcept {
  return g.squared() / (k + reduced_k(g.value(), k));
}

double dirac_level(Coupling g, const LevelIndex &idx) noexcept {
  const double x = g.squared() / sommerfeld_denominator(g, idx);
  // sqrt(1 - x) - 1 = -x / (1 + sqrt(1 - x))
  return -x / (1.0 + std::sqrt(1.0 - x));
}

double schroedinger_level(Coupling g, int n, int l) {
  if (n < 1 || l < 0) {
    throw DomainError("schroedinger_level: need n >= 1 and l >= 0");
  }
  const double N = n + l;
  return -g.squared() / (2.0 * N * N);
}

double level_difference(Coupling g, const LevelIndex &idx) noexcept {
  const double g2 = g.squared();
  const double N = idx.principal();
  const double delta = sommerfeld_defect(g, idx.k());
  const double denom = N * N - 2.0 * idx.radial() * delta;
  const double root = 1.0 + std::sqrt(1.0 - g2 / denom);
  // Common denominator of -γ²/(Δ(1+r)) and γ²/(2N²):
  //   Δ(1+r) - 2N² = -4 n_r δ - γ²/(1+r)
  const double numer = 4.0 * idx.radial() * delta + g2 / root;
  return -g2 * numer / (2.0 * N * N * denom * root);
}

double fine_structure_term(double gamma, const LevelIndex &idx) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("fine_structure_term: gamma must lie in [0, 1]");
  }
  const double N = idx.principal();
  const double g4 = gamma * gamma * gamma * gamma;
  return -g4 / (2.0 * N * N * N) * (1.0 / idx.k() - 0.75 / N);
}

double coulomb_expectation(Coupling g, const LevelIndex &idx) noexcept {
  const double g2 = g.squared();
  const double k = idx.k();
  const double s = reduced_k(g.value(), idx.k());
  const double nr = idx.radial();
  const double a = s + nr;
  return g2 * (k * k + nr * s) / (s * std::pow(a * a + g2, 1.5));
}

} // namespace scott
