#pragma once

#include <compare>
#include <vector>

namespace scott {

// Angular momentum channel (l, j) of the Dirac-Coulomb problem.
//
// j is half-integer, so it is stored doubled. Only the couplings
// j = l ± 1/2 with j ≥ 1/2 are representable; make() enforces this.
class ChannelIndex {
public:
  // Throws DomainError unless l ≥ 0, two_j = 2l ± 1 and two_j ≥ 1.
  static ChannelIndex make(int l, int two_j);

  int l() const noexcept { return l_; }
  int two_j() const noexcept { return two_j_; }
  double j() const noexcept { return 0.5 * two_j_; }
  // j + 1/2, the integer that enters every relativistic formula.
  int k() const noexcept { return (two_j_ + 1) / 2; }

  friend auto operator<=>(const ChannelIndex &, const ChannelIndex &) = default;

private:
  ChannelIndex(int l, int two_j) : l_(l), two_j_(two_j) {}
  int l_;
  int two_j_;
};

// Bound level (n, l, j). n counts levels within the channel, starting at 1,
// so n + l is the principal quantum number.
class LevelIndex {
public:
  static LevelIndex make(int n, ChannelIndex channel);
  static LevelIndex make(int n, int l, int two_j) {
    return make(n, ChannelIndex::make(l, two_j));
  }

  int n() const noexcept { return n_; }
  const ChannelIndex &channel() const noexcept { return channel_; }
  int l() const noexcept { return channel_.l(); }
  int k() const noexcept { return channel_.k(); }
  // n + l.
  int principal() const noexcept { return n_ + channel_.l(); }
  // n + l - (j + 1/2), the radial node count.
  int radial() const noexcept { return n_ + channel_.l() - channel_.k(); }

private:
  LevelIndex(int n, ChannelIndex channel) : n_(n), channel_(channel) {}
  int n_;
  ChannelIndex channel_;
};

// Channels of orbital momentum l in increasing j: [(l, l-1/2), (l, l+1/2)],
// with the nonexistent (0, -1/2) dropped.
std::vector<ChannelIndex> channels_for_l(int l);

// 2j + 1. The m quantum number is never enumerated; sums carry this weight.
int dirac_degeneracy(const ChannelIndex &c) noexcept;

} // namespace scott
