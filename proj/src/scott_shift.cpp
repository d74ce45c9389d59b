#include "scott/scott_shift.hpp"

#include "parallel.hpp"
#include "scott/errors.hpp"
#include "scott/summation.hpp"
#include "scott/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace scott {

namespace {

// Highest power of 1/(n+l) kept in the per-channel expansion; the next order
// only feeds the truncation estimate.
constexpr int kMaxOrder = 10;

// Coefficients of the large-N expansion of one channel,
//
//   λ^D - λ^S = Σ_{q≥3} c_q N^{-q},     N = n + l,
//
// exact in γ. With δ = k - sqrt(k² - γ²) the Sommerfeld formula reads
// λ^D = f(x), f(x) = (1+x)^{-1/2} - 1, x = γ² / (N² (1 - δ/N)²). Expanding
// f in x and (1 - δ/N)^{-2m} in δ/N gives
//
//   c_q = Σ_{2m+p=q} binom(-1/2, m) γ^{2m} binom(2m+p-1, p) δ^p.
//
// The q = 2 term is the Balmer energy and cancels against λ^S.
struct ChannelExpansion {
  std::array<double, kMaxOrder + 1> coeff{};   // c_3 .. c_kMaxOrder
  double next_order_bound = 0.0;               // Σ |monomials| of c_{q+1}
};

ChannelExpansion channel_expansion(Coupling g, int k) {
  const double g2 = g.squared();
  const double delta = sommerfeld_defect(g, k);

  std::array<double, kMaxOrder / 2 + 2> f{}; // binom(-1/2, m) γ^{2m}
  f[0] = 1.0;
  for (std::size_t m = 1; m < f.size(); ++m) {
    f[m] = f[m - 1] * (-0.5 - static_cast<double>(m - 1)) /
           static_cast<double>(m) * g2;
  }

  auto order = [&](int q, bool absolute) {
    double c = 0.0;
    for (int m = 1; 2 * m <= q; ++m) {
      const int p = q - 2 * m;
      // binom(2m+p-1, p)
      double binom = 1.0;
      for (int i = 1; i <= p; ++i) {
        binom *= static_cast<double>(2 * m - 1 + i) / i;
      }
      const double term = f[m] * binom * std::pow(delta, p);
      c += absolute ? std::fabs(term) : term;
    }
    return c;
  };

  ChannelExpansion e;
  for (int q = 3; q <= kMaxOrder; ++q) {
    e.coeff[q] = order(q, false);
  }
  e.next_order_bound = order(kMaxOrder + 1, true);
  return e;
}

struct ChannelSum {
  double value = 0.0;    // (2j+1) Σ_n (λ^D - λ^S)
  double estimate = 0.0; // bound on the omitted part of this channel
};

ChannelSum sum_channel(Coupling g, const ChannelIndex &channel, int n_direct) {
  NeumaierSum acc;
  for (int n = n_direct; n >= 1; --n) {
    acc += level_difference(g, LevelIndex::make(n, channel));
  }
  const ChannelExpansion e = channel_expansion(g, channel.k());
  // The expansion takes over at N = l + n_direct + 1.
  const double first = channel.l() + n_direct + 1;
  for (int q = kMaxOrder; q >= 3; --q) {
    acc += e.coeff[q] * hurwitz_zeta(q, first);
  }
  const double weight = dirac_degeneracy(channel);
  ChannelSum out;
  out.value = weight * acc.value();
  out.estimate =
      2.0 * weight * e.next_order_bound * hurwitz_zeta(kMaxOrder + 1, first);
  return out;
}

// γ⁻² Σ_{l > l_last} Σ_j (2j+1) Σ_n δλ_{n,l,j} in closed form.
double schwinger_l_tail(double g2, int l_last) {
  const double a = l_last + 2.0;
  const double L1 = l_last + 1.0;
  const double z2 = hurwitz_zeta(2.0, a);
  const double inv_n3 = z2 - L1 * hurwitz_zeta(3.0, a);
  const double inv_n4 = z2 - L1 * L1 * hurwitz_zeta(4.0, a);
  return g2 * (-2.0 * inv_n3 + 0.75 * inv_n4);
}

// Bound (in units of s^D) on what schwinger_l_tail() leaves out: the
// per-channel expansion minus its γ⁴ part is at most ~1.7 γ⁶ / l⁵, weighted
// by 2j+1 over two channels and summed over l > l_last.
double l_tail_residual_bound(double g2, int l_last) {
  const double L = l_last;
  return 4.0 * g2 * g2 / (L * L * L);
}

struct Evaluation {
  double value = 0.0;
  double channel_estimate = 0.0;
  double l_tail_estimate = 0.0;
};

Evaluation evaluate(Coupling g, int n_direct, int l_direct, int l_channels,
                    unsigned threads) {
  // Channel order: (0, 1/2), (1, 1/2), (1, 3/2), (2, 3/2), ...
  const std::size_t count = 2 * static_cast<std::size_t>(l_channels) + 1;
  auto channel_at = [](std::size_t i) {
    const int l = static_cast<int>((i + 1) / 2);
    const int two_j = (i == 0 || i % 2 == 0) ? 2 * l + 1 : 2 * l - 1;
    return ChannelIndex::make(l, two_j);
  };

  std::vector<ChannelSum> sums(count);
  detail::parallel_for(count, threads, [&](std::size_t i) {
    const ChannelIndex channel = channel_at(i);
    sums[i] = sum_channel(g, channel, channel.l() <= l_direct ? n_direct : 0);
  });

  NeumaierSum total;
  NeumaierSum estimate;
  for (const ChannelSum &c : sums) {
    total += c.value;
    estimate += c.estimate;
  }

  const double g2 = g.squared();
  Evaluation out;
  out.value = total.value() / g2 + schwinger_l_tail(g2, l_channels);
  out.channel_estimate = estimate.value() / g2;
  out.l_tail_estimate = l_tail_residual_bound(g2, l_channels);
  return out;
}

void check_tolerance(double tol) {
  if (!(tol >= 1e-10 && tol <= 1e-2)) {
    throw DomainError("shift: tolerance must lie in [1e-10, 1e-2]");
  }
}

} // namespace

double default_shift_tolerance(Coupling g) noexcept {
  return g.value() <= 0.9 ? 1e-8 : 1e-6;
}

ShiftResult shift(Coupling g, double tol, const ShiftOptions &options) {
  check_tolerance(tol);
  ShiftResult result;
  result.gamma = g;
  result.target_tol = tol;
  if (g.value() == 0.0) {
    return result;
  }

  int n_direct = std::max(1, options.n_direct);
  int l_direct = std::max(0, options.l_direct);
  int l_channels = std::max({1, options.l_channels, l_direct});

  while (true) {
    const Evaluation e =
        evaluate(g, n_direct, l_direct, l_channels, options.threads);
    const double rounding =
        64.0 * std::numeric_limits<double>::epsilon() * std::fabs(e.value);
    const double estimate = e.channel_estimate + e.l_tail_estimate + rounding;
    if (estimate <= tol) {
      result.value = e.value;
      result.tail_estimate = estimate;
      result.l_max = l_channels;
      result.n_max = n_direct;
      result.l_direct = l_direct;
      return result;
    }

    const bool grow_channels = e.channel_estimate > 0.5 * tol &&
                               n_direct < options.n_direct_cap;
    const bool grow_l = e.l_tail_estimate > 0.5 * tol &&
                        l_channels < options.l_channels_cap;
    if (!grow_channels && !grow_l) {
      throw ToleranceUnreachable(
          "shift: tail bound " + std::to_string(estimate) +
          " exceeds tolerance " + std::to_string(tol) +
          " at the configured cutoffs");
    }
    if (grow_channels) {
      n_direct = std::min(2 * n_direct, options.n_direct_cap);
      l_direct = std::max(2 * l_direct, 1);
      l_channels = std::max(l_channels, l_direct);
    }
    if (grow_l) {
      l_channels = std::min(2 * l_channels, options.l_channels_cap);
    }
  }
}

ScottCoefficient scott_coefficient(Coupling g, double tol,
                                   const ShiftOptions &options) {
  const ShiftResult s = shift(g, tol, options);
  return ScottCoefficient{g, 0.5 + s.value, s.tail_estimate};
}

double direct_partial_sum(Coupling g, int l_max, int n_max) {
  if (l_max < 0 || n_max < 0) {
    throw DomainError("direct_partial_sum: cutoffs must be nonnegative");
  }
  if (g.value() == 0.0) {
    return 0.0;
  }
  NeumaierSum total;
  for (int l = 0; l <= l_max; ++l) {
    for (const ChannelIndex &c : channels_for_l(l)) {
      NeumaierSum channel;
      for (int n = n_max; n >= 1; --n) {
        channel += level_difference(g, LevelIndex::make(n, c));
      }
      total += dirac_degeneracy(c) * channel.value();
    }
  }
  return total.value() / g.squared();
}

double schwinger_constant() noexcept {
  return riemann_zeta(3.0) - 5.0 * std::numbers::pi * std::numbers::pi / 24.0;
}

double schwinger_shift(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("schwinger_shift: gamma must lie in [0, 1]");
  }
  return schwinger_constant() * gamma * gamma;
}

namespace {

// γ-free part: Σ (2j+1) δλ / γ⁴ over the truncated index box.
double fine_structure_box(int l_max, int n_max) {
  NeumaierSum total;
  for (int l = 0; l <= l_max; ++l) {
    for (const ChannelIndex &c : channels_for_l(l)) {
      NeumaierSum channel;
      for (int n = n_max; n >= 1; --n) {
        channel += fine_structure_term(1.0, LevelIndex::make(n, c));
      }
      total += dirac_degeneracy(c) * channel.value();
    }
  }
  return total.value();
}

} // namespace

SchwingerSum schwinger_shift_bruteforce(double gamma, int l_max, int n_max) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw DomainError("schwinger_shift_bruteforce: gamma must lie in [0, 1]");
  }
  if (l_max < 0 || n_max < 1) {
    throw DomainError("schwinger_shift_bruteforce: need l_max >= 0, n_max >= 1");
  }
  const double g2 = gamma * gamma;
  SchwingerSum out;
  const double s1 = fine_structure_box(l_max, n_max);
  out.partial = g2 * s1;
  if (l_max < 8 || n_max < 8) {
    out.extrapolated = out.partial;
    return out;
  }

  // S(h) = S + a h + b h² with h = 1/scale; three scales pin S.
  const double h1 = 1.0 / l_max;
  const double h2 = 1.0 / (l_max / 2);
  const double h4 = 1.0 / (l_max / 4);
  const double s2 = fine_structure_box(l_max / 2, n_max / 2);
  const double s4 = fine_structure_box(l_max / 4, n_max / 4);
  // Lagrange extrapolation of (h_i, s_i) to h = 0.
  const double w1 = h2 * h4 / ((h1 - h2) * (h1 - h4));
  const double w2 = h1 * h4 / ((h2 - h1) * (h2 - h4));
  const double w4 = h1 * h2 / ((h4 - h1) * (h4 - h2));
  out.extrapolated = g2 * (w1 * s1 + w2 * s2 + w4 * s4);
  return out;
}

ZetaIdentityCheck zeta_double_sum_identity_check(double s, int cutoff) {
  if (!(s > 2.0)) {
    throw DomainError("zeta identity check: s must exceed 2");
  }
  if (cutoff < 2) {
    throw DomainError("zeta identity check: cutoff must be at least 2");
  }

  std::vector<double> power(static_cast<std::size_t>(cutoff) + 1, 0.0);
  for (int N = 2; N <= cutoff; ++N) {
    power[N] = std::pow(static_cast<double>(N), -s);
  }
  NeumaierSum sum;
  for (int m = 1; m < cutoff; ++m) {
    for (int n = cutoff - m; n >= 1; --n) {
      sum += power[m + n];
    }
  }

  // Rest Σ_{N>M} (N-1) N^{-s}: midpoint integral from M + 1/2 plus the
  // first Euler-Maclaurin correction f'(X)/24.
  const double X = cutoff + 0.5;
  const double integral =
      std::pow(X, 2.0 - s) / (s - 2.0) - std::pow(X, 1.0 - s) / (s - 1.0);
  const double slope = (1.0 - s) * std::pow(X, -s) + s * std::pow(X, -s - 1.0);
  const double correction = slope / 24.0;

  ZetaIdentityCheck out;
  out.truncated_sum = sum.value();
  out.tail = integral + correction;
  out.closed_form = hurwitz_zeta(s - 1.0, 2.0) - hurwitz_zeta(s, 2.0);
  const double eps = std::numeric_limits<double>::epsilon();
  out.tail_error = std::fabs(correction) +
                   16.0 * eps * (std::fabs(out.truncated_sum) +
                                 std::fabs(out.closed_form));
  return out;
}

} // namespace scott
