#pragma once

#include "scott/quantum_numbers.hpp"

namespace scott {

// Coupling constant γ = Z/c. Valid range is [0, 1); construction enforces it.
class Coupling {
public:
  // Throws DomainError for γ outside [0, 1) or NaN.
  explicit Coupling(double gamma);

  double value() const noexcept { return gamma_; }
  double squared() const noexcept { return gamma_ * gamma_; }

  friend bool operator==(const Coupling &, const Coupling &) = default;

private:
  double gamma_;
};

// Energy in Hartree.
struct EnergyHa {
  double value = 0.0;
};

// Hydrogenic spectra in units of mc². All functions are pure.

// (j + 1/2) - sqrt((j + 1/2)² - γ²), evaluated as γ²/(k + sqrt(k² - γ²)).
double sommerfeld_defect(Coupling g, int k) noexcept;

// Sommerfeld fine-structure eigenvalue λ^D of D_γ - 1 in channel (l, j).
double dirac_level(Coupling g, const LevelIndex &idx) noexcept;

// Balmer eigenvalue λ^S = -γ²/(2(n+l)²). Throws DomainError for n < 1, l < 0.
double schroedinger_level(Coupling g, int n, int l);

// λ^D - λ^S from one combined expression in which every term has the same
// sign, so nothing cancels even for n + l ~ 10^4. Strictly negative for
// γ > 0; exactly 0 at γ = 0.
double level_difference(Coupling g, const LevelIndex &idx) noexcept;

// Leading γ⁴ fine-structure shift -γ⁴/(2(n+l)³) (1/(j+1/2) - 3/(4(n+l))).
// A polynomial in γ, so the closed range [0, 1] is accepted; throws
// DomainError outside it.
double fine_structure_term(double gamma, const LevelIndex &idx);

// Burke-Grant value of <γ/|x|> in the Dirac-Coulomb eigenstate.
double coulomb_expectation(Coupling g, const LevelIndex &idx) noexcept;

} // namespace scott
