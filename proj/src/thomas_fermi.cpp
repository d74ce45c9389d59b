#include "scott/thomas_fermi.hpp"

#include "scott/errors.hpp"
#include "scott/summation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

namespace scott {

struct TfSolution::Data {
  double tol = 0.0;
  double slope = 0.0;
  double match_x = 0.0;
  double mismatch = 0.0;
  TfEnergyParts parts;

  std::vector<double> x;
  std::vector<double> phi;
  std::vector<double> dphi;
  // Segments [x_i, x_{i+1}) with i < inner_segments are integrated in √x,
  // the rest (asymptotic tail, log-spaced) in ln x.
  std::size_t inner_segments = 0;

  std::vector<double> charge;  // ∫_0^{x_i} √y φ^{3/2} dy
  std::vector<double> outer;   // ∫_{x_i}^∞ φ^{3/2}/√y dy
  double charge_beyond = 0.0;  // past the last node, φ ∝ x^{-3}
  double outer_beyond = 0.0;
};

namespace {

constexpr double kStartX = 1e-6;
constexpr double kShootRange = 100.0;   // profile taken from shooting up to here
constexpr double kClassifyRange = 1e4;  // over/undershoot decided up to here
constexpr double kOrbitStart = 1e-10;   // |w| where the tail orbit is seeded
constexpr double kOrbitStep = 5e-3;     // step in ln x along the tail orbit
constexpr int kMaxBisections = 200;

// Decay exponent of the perturbation of 144 x^{-3}: w ∝ x^{-μ}.
const double kMu = (std::sqrt(73.0) - 7.0) / 2.0;

constexpr std::array<double, 5> kGaussNodes = {
    -0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
    0.9061798459386640};
constexpr std::array<double, 5> kGaussWeights = {
    0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
    0.4786286704993665, 0.2369268850561891};

double length_unit() {
  return 0.5 * std::pow(3.0 * std::numbers::pi / 4.0, 2.0 / 3.0);
}

double pow15(double v) {
  v = std::max(v, 0.0);
  return v * std::sqrt(v);
}

// ---------------------------------------------------------------------------
// Shooting. In t = √x the profile equation becomes the regular system
//   dφ/dt = 2 t ψ,   dψ/dt = 2 φ^{3/2},   ψ = dφ/dx.

struct State {
  double phi;
  double psi;
};

State profile_rhs(double t, State y) {
  return {2.0 * t * y.psi, 2.0 * pow15(y.phi)};
}

State rk4_step(double t, State y, double h) {
  auto add = [](State a, State b, double s) {
    return State{a.phi + s * b.phi, a.psi + s * b.psi};
  };
  const State k1 = profile_rhs(t, y);
  const State k2 = profile_rhs(t + 0.5 * h, add(y, k1, 0.5 * h));
  const State k3 = profile_rhs(t + 0.5 * h, add(y, k2, 0.5 * h));
  const State k4 = profile_rhs(t + h, add(y, k3, h));
  return {y.phi + h / 6.0 * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi),
          y.psi + h / 6.0 * (k1.psi + 2.0 * k2.psi + 2.0 * k3.psi + k4.psi)};
}

// Series about the origin: φ = 1 + Bx + 4/3 x^{3/2} + 2B/5 x^{5/2} + x³/3.
State series_start(double slope, double x) {
  const double sx = std::sqrt(x);
  return {1.0 + slope * x + 4.0 / 3.0 * x * sx + 0.4 * slope * x * x * sx +
              x * x * x / 3.0,
          slope + 2.0 * sx + slope * x * sx + x * x};
}

enum class Outcome { Overshoot, Undershoot, Undecided };

struct Trajectory {
  Outcome outcome = Outcome::Undecided;
  std::vector<double> t;
  std::vector<State> y;
};

Trajectory shoot(double slope, double t_end, double h, bool keep) {
  Trajectory tr;
  double t = std::sqrt(kStartX);
  State y = series_start(slope, kStartX);
  if (keep) {
    tr.t.push_back(t);
    tr.y.push_back(y);
  }
  const auto steps = static_cast<long>(std::ceil((t_end - t) / h));
  for (long i = 0; i < steps; ++i) {
    y = rk4_step(t, y, h);
    t = std::sqrt(kStartX) + static_cast<double>(i + 1) * h;
    if (y.phi <= 0.0) {
      tr.outcome = Outcome::Overshoot;
      return tr;
    }
    if (y.psi > 0.0) {
      tr.outcome = Outcome::Undershoot;
      return tr;
    }
    if (keep) {
      tr.t.push_back(t);
      tr.y.push_back(y);
    }
  }
  return tr;
}

// ---------------------------------------------------------------------------
// Tail. Writing φ = 144 x^{-3} (1 + w) and σ = ln x gives the autonomous
//   w'' = 7 w' - 12 (1 + w) + 12 (1 + w)^{3/2}.
// The neutral-atom tail is the orbit entering w = 0 along w ∝ e^{-μσ}; it is
// traced backwards from there until w matches the shooting profile.

struct OrbitState {
  double w;
  double v; // dw/dσ
};

OrbitState orbit_rhs(OrbitState s) {
  const double u = std::max(1.0 + s.w, 0.0);
  return {s.v, 7.0 * s.v - 12.0 * u + 12.0 * u * std::sqrt(u)};
}

OrbitState orbit_step(OrbitState s, double h) {
  auto add = [](OrbitState a, OrbitState b, double f) {
    return OrbitState{a.w + f * b.w, a.v + f * b.v};
  };
  const OrbitState k1 = orbit_rhs(s);
  const OrbitState k2 = orbit_rhs(add(s, k1, 0.5 * h));
  const OrbitState k3 = orbit_rhs(add(s, k2, 0.5 * h));
  const OrbitState k4 = orbit_rhs(add(s, k3, h));
  return {s.w + h / 6.0 * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w),
          s.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v)};
}

// ---------------------------------------------------------------------------
// Interpolation and quadrature over the stored nodes.

std::size_t segment_of(const TfSolution::Data &d, double x) {
  const auto it = std::upper_bound(d.x.begin(), d.x.end(), x);
  const auto i = static_cast<std::size_t>(std::distance(d.x.begin(), it));
  return std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, d.x.size() - 2);
}

struct Hermite {
  double value;
  double slope;
};

Hermite hermite(const TfSolution::Data &d, std::size_t i, double x) {
  const double x0 = d.x[i];
  const double h = d.x[i + 1] - x0;
  const double s = (x - x0) / h;
  const double s2 = s * s;
  const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
  const double h10 = s * (1.0 - s) * (1.0 - s);
  const double h01 = s2 * (3.0 - 2.0 * s);
  const double h11 = s2 * (s - 1.0);
  const double value = h00 * d.phi[i] + h10 * h * d.dphi[i] +
                       h01 * d.phi[i + 1] + h11 * h * d.dphi[i + 1];
  const double slope = (6.0 * s2 - 6.0 * s) * (d.phi[i] - d.phi[i + 1]) / h +
                       (3.0 * s2 - 4.0 * s + 1.0) * d.dphi[i] +
                       (3.0 * s2 - 2.0 * s) * d.dphi[i + 1];
  return {value, slope};
}

// Past the last node φ follows 144 x^{-3} closely enough; scale from the end.
double phi_beyond(const TfSolution::Data &d, double x) {
  const double ratio = d.x.back() / x;
  return d.phi.back() * ratio * ratio * ratio;
}

double phi_eval(const TfSolution::Data &d, double x) {
  if (x <= 0.0) {
    return 1.0;
  }
  if (x >= d.x.back()) {
    return phi_beyond(d, x);
  }
  return hermite(d, segment_of(d, x), x).value;
}

// ∫_{xa}^{xb} f(x, φ(x)) dx within segment i, 5-point Gauss-Legendre in the
// segment's smoothing variable.
template <class F>
double segment_integral(const TfSolution::Data &d, std::size_t i, double xa,
                        double xb, F &&f) {
  if (xb <= xa) {
    return 0.0;
  }
  const bool inner = i < d.inner_segments;
  const double ta = inner ? std::sqrt(xa) : std::log(xa);
  const double tb = inner ? std::sqrt(xb) : std::log(xb);
  const double half = 0.5 * (tb - ta);
  const double mid = 0.5 * (tb + ta);
  double sum = 0.0;
  for (std::size_t k = 0; k < kGaussNodes.size(); ++k) {
    const double t = mid + half * kGaussNodes[k];
    const double x = inner ? t * t : std::exp(t);
    const double jac = inner ? 2.0 * t : x;
    const double phi = hermite(d, i, x).value;
    sum += kGaussWeights[k] * f(x, phi) * jac;
  }
  return half * sum;
}

// ∫_{xa}^{xb} f dx across segments; the part beyond the last node is dropped
// (φ < 1e-30 there).
template <class F>
double range_integral(const TfSolution::Data &d, double xa, double xb, F &&f) {
  xa = std::max(xa, 0.0);
  xb = std::min(xb, d.x.back());
  if (xb <= xa) {
    return 0.0;
  }
  NeumaierSum acc;
  std::size_t i = segment_of(d, xa);
  const std::size_t last = segment_of(d, xb);
  for (; i <= last; ++i) {
    const double lo = std::max(xa, d.x[i]);
    const double hi = std::min(xb, d.x[i + 1]);
    acc += segment_integral(d, i, lo, hi, f);
  }
  return acc.value();
}

double charge_density_integrand(double x, double phi) {
  return std::sqrt(x) * pow15(phi);
}

double potential_integrand(double x, double phi) {
  return pow15(phi) / std::sqrt(x);
}

double charge_eval(const TfSolution::Data &d, double x) {
  if (x <= 0.0) {
    return 0.0;
  }
  if (std::isinf(x)) {
    return d.charge.back() + d.charge_beyond;
  }
  if (x >= d.x.back()) {
    const double phi = phi_beyond(d, x);
    const double beyond = pow15(phi) * x * std::sqrt(x) / 3.0;
    return d.charge.back() + d.charge_beyond - beyond;
  }
  const std::size_t i = segment_of(d, x);
  return d.charge[i] +
         segment_integral(d, i, d.x[i], x, charge_density_integrand);
}

double outer_eval(const TfSolution::Data &d, double x) {
  if (x <= 0.0) {
    return d.outer.front();
  }
  if (std::isinf(x)) {
    return 0.0;
  }
  if (x >= d.x.back()) {
    return pow15(phi_beyond(d, x)) * std::sqrt(x) / 4.0;
  }
  const std::size_t i = segment_of(d, x);
  return d.outer[i + 1] +
         segment_integral(d, i, x, d.x[i + 1], potential_integrand);
}

void build_cumulative(TfSolution::Data &d) {
  const std::size_t n = d.x.size();
  d.charge.assign(n, 0.0);
  d.outer.assign(n, 0.0);

  const double X = d.x.back();
  const double phiX = d.phi.back();
  // With φ = φ_X (X/x)³ beyond X.
  d.charge_beyond = pow15(phiX) * X * std::sqrt(X) / 3.0;
  d.outer_beyond = pow15(phiX) * std::sqrt(X) / 4.0;

  NeumaierSum q;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    q += segment_integral(d, i, d.x[i], d.x[i + 1], charge_density_integrand);
    d.charge[i + 1] = q.value();
  }
  NeumaierSum p;
  p += d.outer_beyond;
  d.outer[n - 1] = p.value();
  for (std::size_t i = n - 1; i-- > 0;) {
    p += segment_integral(d, i, d.x[i], d.x[i + 1], potential_integrand);
    d.outer[i] = p.value();
  }
}

TfEnergyParts energy_parts_of(const TfSolution::Data &d) {
  const double b = length_unit();
  const std::size_t segments = d.x.size() - 1;

  NeumaierSum kinetic;
  NeumaierSum repulsion;
  for (std::size_t i = 0; i < segments; ++i) {
    kinetic += segment_integral(d, i, d.x[i], d.x[i + 1],
                                [](double x, double phi) {
                                  const double v = std::max(phi, 0.0);
                                  return v * v * std::sqrt(v) / std::sqrt(x);
                                });
    // D[ρ] = ∫ Q(r) dQ(r) / r
    repulsion += segment_integral(
        d, i, d.x[i], d.x[i + 1], [&](double x, double phi) {
          const double inside =
              d.charge[i] +
              segment_integral(d, i, d.x[i], x, charge_density_integrand);
          return inside * potential_integrand(x, phi);
        });
  }
  const double X = d.x.back();
  const double phiX = d.phi.back();
  kinetic += phiX * phiX * std::sqrt(phiX) * std::sqrt(X) / 7.0;
  repulsion += (d.charge.back() + 0.5 * d.charge_beyond) * d.outer_beyond;

  TfEnergyParts parts;
  parts.kinetic = 0.6 / b * kinetic.value();
  parts.attraction = -d.outer.front() / b;
  parts.repulsion = repulsion.value() / b;
  return parts;
}

} // namespace

// ---------------------------------------------------------------------------

double TfSolution::initial_slope() const noexcept { return data_->slope; }
double TfSolution::e_tf_1() const noexcept { return data_->parts.total(); }
const TfEnergyParts &TfSolution::energy_parts() const noexcept {
  return data_->parts;
}
std::span<const double> TfSolution::grid() const noexcept { return data_->x; }
std::span<const double> TfSolution::phi() const noexcept { return data_->phi; }
std::span<const double> TfSolution::dphi() const noexcept {
  return data_->dphi;
}
double TfSolution::length_scale() noexcept { return length_unit(); }
double TfSolution::match_point() const noexcept { return data_->match_x; }
double TfSolution::tail_slope_mismatch() const noexcept {
  return data_->mismatch;
}
double TfSolution::tolerance() const noexcept { return data_->tol; }

double TfSolution::phi_at(double x) const { return phi_eval(*data_, x); }

double TfSolution::dphi_at(double x) const {
  const Data &d = *data_;
  if (x <= 0.0) {
    return d.slope;
  }
  if (x >= d.x.back()) {
    return -3.0 * phi_beyond(d, x) / x;
  }
  return hermite(d, segment_of(d, x), x).slope;
}

double TfSolution::charge_inside(double x) const {
  return charge_eval(*data_, x);
}

double TfSolution::outer_integral(double x) const {
  return outer_eval(*data_, x);
}

TfSolution solve_tf(double tol) {
  if (!(tol >= 1e-10 && tol <= 1e-4)) {
    throw DomainError("solve_tf: tolerance must lie in [1e-10, 1e-4]");
  }
  const double h = std::clamp(0.05 * std::pow(tol, 0.25), 2.5e-4, 2e-3);
  const double t_classify = std::sqrt(kClassifyRange);

  double lo = -1.7; // overshoots
  double hi = -1.5; // undershoots
  if (shoot(lo, t_classify, h, false).outcome != Outcome::Overshoot ||
      shoot(hi, t_classify, h, false).outcome != Outcome::Undershoot) {
    throw ConvergenceError("solve_tf: initial slope bracket is invalid");
  }
  int iterations = 0;
  for (; iterations < kMaxBisections; ++iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const Outcome o = shoot(mid, t_classify, h, false).outcome;
    if (o == Outcome::Overshoot) {
      lo = mid;
    } else if (o == Outcome::Undershoot) {
      hi = mid;
    } else {
      lo = hi = mid;
      break;
    }
  }
  if (iterations == kMaxBisections) {
    throw ConvergenceError("solve_tf: bisection did not converge");
  }

  // The two bracketing trajectories agree until the unstable mode takes over;
  // only that common part is trusted.
  const double t_shoot = std::sqrt(kShootRange);
  const Trajectory over = shoot(lo, t_shoot + h, h, true);
  const Trajectory under = shoot(hi, t_shoot + h, h, true);
  const std::size_t common = std::min(over.y.size(), under.y.size());
  std::size_t match = 0;
  for (std::size_t i = 0; i < common; ++i) {
    const double x = over.t[i] * over.t[i];
    const double a = over.y[i].phi;
    const double b = under.y[i].phi;
    if (x > kShootRange || std::fabs(a - b) > tol * 0.5 * (a + b)) {
      break;
    }
    match = i;
  }
  const double x_match = over.t[match] * over.t[match];
  if (x_match < 10.0) {
    throw ConvergenceError("solve_tf: shooting profile unreliable beyond x = " +
                           std::to_string(x_match));
  }

  auto data = std::make_shared<TfSolution::Data>();
  data->tol = tol;
  data->slope = 0.5 * (lo + hi);

  data->x.push_back(0.0);
  data->phi.push_back(1.0);
  data->dphi.push_back(data->slope);
  for (std::size_t i = 0; i <= match; ++i) {
    data->x.push_back(over.t[i] * over.t[i]);
    data->phi.push_back(0.5 * (over.y[i].phi + under.y[i].phi));
    data->dphi.push_back(0.5 * (over.y[i].psi + under.y[i].psi));
  }
  data->inner_segments = data->x.size() - 1;

  const double phi_m = data->phi.back();
  const double dphi_m = data->dphi.back();
  const double w_match = phi_m * x_match * x_match * x_match / 144.0 - 1.0;
  if (!(w_match > -1.0 && w_match < -kOrbitStart)) {
    throw ConvergenceError("solve_tf: profile does not join the asymptotic "
                           "tail at x = " + std::to_string(x_match));
  }

  std::vector<OrbitState> orbit;
  orbit.push_back({-kOrbitStart, kMu * kOrbitStart});
  while (orbit.back().w > w_match) {
    if (orbit.size() > 1000000) {
      throw ConvergenceError("solve_tf: tail orbit did not reach the profile");
    }
    orbit.push_back(orbit_step(orbit.back(), -kOrbitStep));
  }
  // Refine the crossing inside the last step.
  const OrbitState before = orbit[orbit.size() - 2];
  double h_lo = 0.0;
  double h_hi = kOrbitStep;
  for (int k = 0; k < 60; ++k) {
    const double hm = 0.5 * (h_lo + h_hi);
    if (orbit_step(before, -hm).w > w_match) {
      h_lo = hm;
    } else {
      h_hi = hm;
    }
  }
  const double h_cross = 0.5 * (h_lo + h_hi);
  const OrbitState at_match = orbit_step(before, -h_cross);
  const double dphi_tail =
      144.0 / std::pow(x_match, 4) * (at_match.v - 3.0 * (1.0 + at_match.w));
  data->mismatch = std::fabs(dphi_tail - dphi_m) / std::fabs(dphi_m);
  data->match_x = x_match;

  // orbit[orbit.size() - 2] sits h_cross beyond the match point in ln x.
  for (std::size_t j = orbit.size() - 1; j-- > 0;) {
    const double offset =
        h_cross + static_cast<double>(orbit.size() - 2 - j) * kOrbitStep;
    if (offset < 1e-3 * kOrbitStep) {
      continue;
    }
    const double x = x_match * std::exp(offset);
    const double x3 = x * x * x;
    data->x.push_back(x);
    data->phi.push_back(144.0 / x3 * (1.0 + orbit[j].w));
    data->dphi.push_back(144.0 / (x3 * x) *
                         (orbit[j].v - 3.0 * (1.0 + orbit[j].w)));
  }

  build_cumulative(*data);
  data->parts = energy_parts_of(*data);
  return TfSolution(std::move(data));
}

EnergyHa tf_energy(double Z, const TfSolution &sol) {
  if (!(Z > 0.0)) {
    throw DomainError("tf_energy: Z must be positive");
  }
  return EnergyHa{sol.e_tf_1() * std::pow(Z, 7.0 / 3.0)};
}

double tf_functional(const TfSolution &sol, double amplitude) {
  if (!(amplitude >= 0.0)) {
    throw DomainError("tf_functional: amplitude must be nonnegative");
  }
  const TfEnergyParts &p = sol.energy_parts();
  return std::pow(amplitude, 5.0 / 3.0) * p.kinetic +
         amplitude * p.attraction + amplitude * amplitude * p.repulsion;
}

// ---------------------------------------------------------------------------

RadialDensity::RadialDensity(double Z, TfSolution sol)
    : Z_(Z), sol_(std::move(sol)) {
  if (!(Z > 0.0)) {
    throw DomainError("density: Z must be positive");
  }
}

double RadialDensity::operator()(double r) const {
  if (!(r > 0.0)) {
    throw DomainError("density: r must be positive");
  }
  const double scaled = std::cbrt(Z_) * r;
  const double phi = sol_.phi_at(scaled / TfSolution::length_scale());
  const double rho1 =
      pow15(2.0 * phi / scaled) / (3.0 * std::numbers::pi * std::numbers::pi);
  return Z_ * Z_ * rho1;
}

double RadialDensity::charge_inside(double r) const {
  if (r <= 0.0) {
    return 0.0;
  }
  return Z_ * sol_.charge_inside(std::cbrt(Z_) * r / TfSolution::length_scale());
}

double RadialDensity::total_charge() const {
  return Z_ * sol_.charge_inside(std::numeric_limits<double>::infinity());
}

RadialDensity density(double Z, const TfSolution &sol) {
  return RadialDensity(Z, sol);
}

namespace {

void check_radius(double r, const char *what) {
  if (!(r > 0.0)) {
    throw DomainError(std::string(what) + ": radius must be positive");
  }
}

void check_charge(double Z, const char *what) {
  if (!(Z > 0.0)) {
    throw DomainError(std::string(what) + ": Z must be positive");
  }
}

double unit_ball_charge(const TfSolution::Data &d, double rh, double Rh) {
  double inside = 0.0;
  if (Rh > rh) {
    inside = charge_eval(d, Rh - rh);
  }
  // Shells crossing the sphere contribute the fraction (R² - (x - r)²)/(4xr).
  const double shells = range_integral(
      d, std::fabs(rh - Rh), rh + Rh, [&](double x, double phi) {
        const double dx = x - rh;
        return charge_density_integrand(x, phi) * (Rh * Rh - dx * dx) /
               (4.0 * x * rh);
      });
  return inside + shells;
}

// Potential at x = rh of the Z = 1 density with the ball of radius Rh about
// that point removed, in units of 1/b.
double unit_screened_potential(const TfSolution::Data &d, double rh,
                               double Rh) {
  double inner = 0.0;
  if (Rh < rh) {
    inner = charge_eval(d, rh - Rh) / rh;
  }
  const double shells = range_integral(
      d, std::fabs(rh - Rh), rh + Rh, [&](double x, double phi) {
        return charge_density_integrand(x, phi) * (x + rh - Rh) /
               (2.0 * x * rh);
      });
  return inner + shells + outer_eval(d, rh + Rh);
}

double unit_hole_radius(const TfSolution::Data &d, double Z, double rh) {
  const double target = 0.5 / Z;
  const double total = d.charge.back() + d.charge_beyond;
  if (Z < 0.5 || target >= total) {
    throw InsufficientCharge("exchange_hole_radius: Z = " + std::to_string(Z) +
                             " carries less than half an electron");
  }
  double lo = 0.0;
  double hi = rh + 1.0;
  int grow = 0;
  while (unit_ball_charge(d, rh, hi) < target) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 200 || hi > 0.5 * d.x.back()) {
      throw InsufficientCharge("exchange_hole_radius: half an electron is not "
                               "reached within the atom");
    }
  }
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= 1e-14 * hi) {
      break;
    }
    if (unit_ball_charge(d, rh, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace

struct TfAccess {
  static const TfSolution::Data &data(const TfSolution &sol) {
    return *sol.data_;
  }
};

double mean_field(double Z, const TfSolution &sol, double r) {
  check_charge(Z, "mean_field");
  check_radius(r, "mean_field");
  const double b = TfSolution::length_scale();
  const double x = std::cbrt(Z) * r / b;
  const double v1 = (sol.charge_inside(x) / x + sol.outer_integral(x)) / b;
  return std::pow(Z, 4.0 / 3.0) * v1;
}

double mean_field_gradient(double Z, const TfSolution &sol, double r) {
  check_charge(Z, "mean_field_gradient");
  check_radius(r, "mean_field_gradient");
  const double b = TfSolution::length_scale();
  const double x = std::cbrt(Z) * r / b;
  const double g1 = -sol.charge_inside(x) / (b * b * x * x);
  return std::pow(Z, 5.0 / 3.0) * g1;
}

double ball_charge(double Z, const TfSolution &sol, double r, double R) {
  check_charge(Z, "ball_charge");
  check_radius(r, "ball_charge");
  if (!(R >= 0.0)) {
    throw DomainError("ball_charge: R must be nonnegative");
  }
  const double scale = std::cbrt(Z) / TfSolution::length_scale();
  return Z * unit_ball_charge(TfAccess::data(sol), scale * r, scale * R);
}

double exchange_hole_radius(double Z, const TfSolution &sol, double r) {
  check_charge(Z, "exchange_hole_radius");
  check_radius(r, "exchange_hole_radius");
  const double scale = std::cbrt(Z) / TfSolution::length_scale();
  return unit_hole_radius(TfAccess::data(sol), Z, scale * r) / scale;
}

double screening_potential(double Z, double c, const TfSolution &sol,
                           double x) {
  check_charge(Z, "screening_potential");
  check_radius(x, "screening_potential");
  if (!(c > 0.0)) {
    throw DomainError("screening_potential: c must be positive");
  }
  const TfSolution::Data &d = TfAccess::data(sol);
  const double b = TfSolution::length_scale();
  const double rh = std::cbrt(Z) * (x / c) / b;
  const double Rh = unit_hole_radius(d, Z, rh);
  const double chi1 = unit_screened_potential(d, rh, Rh) / b;
  return std::pow(Z, 4.0 / 3.0) * chi1 / (c * c);
}

void write_profile_csv(std::ostream &out, const TfSolution &sol) {
  out << "x,phi\n";
  const auto x = sol.grid();
  const auto phi = sol.phi();
  char buf[64];
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", x[i], phi[i]);
    out << buf;
  }
}

} // namespace scott
