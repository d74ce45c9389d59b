#pragma once

#include "scott/hydrogenic.hpp"

#include <iosfwd>
#include <memory>
#include <span>

namespace scott {

// Pieces of the Thomas-Fermi functional at the Z = 1 minimizer, in Hartree.
struct TfEnergyParts {
  double kinetic = 0.0;    // (3/10)(3π²)^{2/3} ∫ ρ^{5/3}
  double attraction = 0.0; // -∫ ρ / |x|
  double repulsion = 0.0;  // D[ρ] = ½ ∫∫ ρρ / |x - y|

  double total() const noexcept { return kinetic + attraction + repulsion; }
};

// Universal neutral-atom Thomas-Fermi profile φ.
//
// With r = b x Z^{-1/3}, b = ½ (3π/4)^{2/3}, the effective potential is
// Z/r - V_Z(r) = Z φ(x) / r and the profile solves
//
//   φ'' = φ^{3/2} / √x,   φ(0) = 1,   φ(∞) = 0.
//
// Between grid nodes φ is the cubic Hermite interpolant of the stored values
// and ODE slopes, hence C¹ and accurate to solver tolerance. The object is
// immutable and cheap to copy (shared storage).
class TfSolution {
public:
  // φ'(0), Baker's constant (≈ -1.588071).
  double initial_slope() const noexcept;
  // E_TF(1) from inserting the minimizer into the functional (≈ -0.768745).
  double e_tf_1() const noexcept;
  const TfEnergyParts &energy_parts() const noexcept;

  std::span<const double> grid() const noexcept;
  std::span<const double> phi() const noexcept;
  std::span<const double> dphi() const noexcept;

  // Length unit b of the dimensionless variable (r = b x at Z = 1).
  static double length_scale() noexcept;

  double phi_at(double x) const;
  double dphi_at(double x) const;

  // Fraction of the electrons inside x: ∫_0^x √y φ^{3/2} dy.
  double charge_inside(double x) const;
  // ∫_x^∞ φ^{3/2} / √y dy, the outer-shell part of Newton's theorem.
  double outer_integral(double x) const;

  // Abscissa where the shooting solution hands over to the asymptotic tail.
  double match_point() const noexcept;
  // |φ'_shoot - φ'_tail| / |φ'| at the match point.
  double tail_slope_mismatch() const noexcept;
  double tolerance() const noexcept;

  struct Data;

private:
  explicit TfSolution(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend TfSolution solve_tf(double tol);
  friend struct TfAccess;
};

// Solves for the profile by bisection on the initial slope (overshoot: φ
// reaches 0; undershoot: φ' turns positive), continues it past the reliable
// shooting range along the universal asymptotic orbit 144 x^{-3} (1 + w), and
// evaluates E_TF(1) by radial quadrature. tol ∈ [1e-10, 1e-4].
TfSolution solve_tf(double tol);

// E_TF(Z) = E_TF(1) Z^{7/3}.
EnergyHa tf_energy(double Z, const TfSolution &sol);

// E^TF[a ρ_1] for the amplitude-scaled minimizer, in Hartree.
double tf_functional(const TfSolution &sol, double amplitude);

// Spherically symmetric TF density of a neutral atom of charge Z,
// ρ_Z(r) = Z² ρ_1(Z^{1/3} r).
class RadialDensity {
public:
  RadialDensity(double Z, TfSolution sol);

  double Z() const noexcept { return Z_; }
  // Electrons per unit volume at radius r > 0.
  double operator()(double r) const;
  // Electrons inside radius r.
  double charge_inside(double r) const;
  double total_charge() const;

private:
  double Z_;
  TfSolution sol_;
};

RadialDensity density(double Z, const TfSolution &sol);

// V_Z = ρ_Z * 1/|·| at radius r > 0 by Newton's theorem.
double mean_field(double Z, const TfSolution &sol, double r);
// dV_Z/dr = -Q_Z(r) / r².
double mean_field_gradient(double Z, const TfSolution &sol, double r);

// TF charge inside the ball of radius R centred at a point at distance r
// from the nucleus.
double ball_charge(double Z, const TfSolution &sol, double r, double R);

// Smallest R with ball_charge(Z, sol, r, R) = 1/2. Throws InsufficientCharge
// for Z < 1/2.
double exchange_hole_radius(double Z, const TfSolution &sol, double r);

// Exchange-hole screened potential at x in the c-rescaled frame:
// χ(x) = c⁻² ∫_{|x/c - y| > R_Z(x/c)} ρ_Z(y) / |x/c - y| dy.
double screening_potential(double Z, double c, const TfSolution &sol,
                           double x);

// Profile as CSV with header `x,phi`.
void write_profile_csv(std::ostream &out, const TfSolution &sol);

} // namespace scott
