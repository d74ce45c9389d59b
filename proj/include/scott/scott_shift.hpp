#pragma once

#include "scott/hydrogenic.hpp"

namespace scott {

// Truncation parameters for shift(). The defaults are starting points; the
// cutoffs are doubled until the tail bound meets the tolerance or a cap is
// hit.
struct ShiftOptions {
  int n_direct = 32;        // levels per channel summed term by term
  int l_direct = 32;        // channels l <= l_direct get the direct sum
  int l_channels = 4096;    // channels l <= l_channels are summed one by one
  int n_direct_cap = 1 << 16;
  int l_channels_cap = 1 << 22;
  unsigned threads = 1;     // 0 = hardware concurrency
};

// s^D(γ) together with its truncation record.
struct ShiftResult {
  Coupling gamma{0.0};
  double value = 0.0;
  double tail_estimate = 0.0; // bound on |exact - value|
  int l_max = 0;              // last channel summed individually
  int n_max = 0;              // direct levels per low-l channel
  int l_direct = 0;
  double target_tol = 0.0;
};

struct ScottCoefficient {
  Coupling gamma{0.0};
  double q = 0.5; // 1/2 + s^D(γ)
  double tail_estimate = 0.0;
};

// Default tolerance: 1e-8 up to γ = 0.9, 1e-6 above.
double default_shift_tolerance(Coupling g) noexcept;

// Spectral shift function
//
//   s^D(γ) = γ⁻² Σ_{l≥0} Σ_{j=l±1/2} (2j+1) Σ_{n≥1} (λ^D_{n,l,j} - λ^S_{n,l}).
//
// Low channels are summed level by level up to n_max; the rest of each
// channel comes from the large-(n+l) expansion of the Sommerfeld formula,
// whose coefficients are exact in γ, summed with Hurwitz zeta values. Channels
// past l_max are added through the closed-form l-tail of the γ⁴ term, with the
// remaining O(γ⁶) mass bounded analytically.
//
// tol must lie in [1e-10, 1e-2]. Throws ToleranceUnreachable when the caps
// in `options` are hit first. The result does not depend on options.threads.
ShiftResult shift(Coupling g, double tol, const ShiftOptions &options = {});

// 1/2 + s^D(γ), the coefficient of Z² in the ground state energy.
ScottCoefficient scott_coefficient(Coupling g, double tol,
                                   const ShiftOptions &options = {});

// Plain truncated double sum γ⁻² Σ_{l≤l_max} Σ_j (2j+1) Σ_{n≤n_max}
// (λ^D - λ^S), no tails. Every added term is negative.
double direct_partial_sum(Coupling g, int l_max, int n_max);

// ζ(3) - 5π²/24 ≈ -0.854111.
double schwinger_constant() noexcept;

// Schwinger's approximation (ζ(3) - 5π²/24) γ². Accepts γ ∈ [0, 1].
double schwinger_shift(double gamma);

struct SchwingerSum {
  double partial = 0.0;      // raw sum over l <= l_max, n <= n_max
  double extrapolated = 0.0; // Richardson limit from cutoffs /1, /2, /4
};

// Term-by-term γ⁻² Σ (2j+1) δλ_{n,l,j} over l <= l_max, n <= n_max.
// `extrapolated` eliminates the 1/L and 1/L² truncation terms by rerunning
// with both cutoffs halved and quartered (meaningful when they are >= 8).
SchwingerSum schwinger_shift_bruteforce(double gamma, int l_max, int n_max);

struct ZetaIdentityCheck {
  double truncated_sum = 0.0;  // Σ_{m,n≥1, m+n≤cutoff} (m+n)^{-s}
  double tail = 0.0;           // midpoint-integral estimate of the rest
  double tail_error = 0.0;     // bound on |true rest - tail| plus rounding
  double closed_form = 0.0;    // ζ(s-1) - ζ(s)

  double estimate() const noexcept { return truncated_sum + tail; }
};

// Checks Σ_{m,n≥1} (m+n)^{-s} = ζ(s-1) - ζ(s) for s > 2.
ZetaIdentityCheck zeta_double_sum_identity_check(double s,
                                                 int cutoff = 10000);

} // namespace scott
