#pragma once

namespace scott {

// Hurwitz zeta ζ(s, a) = Σ_{k≥0} (a + k)^{-s} for real s > 1, a > 0.
//
// Euler-Maclaurin: the first terms are summed directly until the shifted
// argument reaches 16, then the remainder is the integral plus endpoint and
// Bernoulli corrections. Relative accuracy is close to machine precision;
// absolute error stays below 1e-14 for every (s, a) the library uses.
// Throws DomainError for s <= 1 or a <= 0.
double hurwitz_zeta(double s, double a);

// Riemann zeta ζ(s) = ζ(s, 1), s > 1.
double riemann_zeta(double s);

} // namespace scott
