#include "scott/quantum_numbers.hpp"

#include "scott/errors.hpp"

#include <string>

namespace scott {

ChannelIndex ChannelIndex::make(int l, int two_j) {
  if (l < 0) {
    throw DomainError("channel: l must be nonnegative, got " +
                      std::to_string(l));
  }
  if (two_j < 1 || (two_j != 2 * l - 1 && two_j != 2 * l + 1)) {
    throw DomainError("channel: j = " + std::to_string(two_j) +
                      "/2 is not an admissible coupling for l = " +
                      std::to_string(l));
  }
  return ChannelIndex(l, two_j);
}

LevelIndex LevelIndex::make(int n, ChannelIndex channel) {
  if (n < 1) {
    throw DomainError("level: n must be >= 1, got " + std::to_string(n));
  }
  return LevelIndex(n, channel);
}

std::vector<ChannelIndex> channels_for_l(int l) {
  if (l < 0) {
    throw DomainError("channels_for_l: l must be nonnegative");
  }
  std::vector<ChannelIndex> out;
  out.reserve(2);
  if (l > 0) {
    out.push_back(ChannelIndex::make(l, 2 * l - 1));
  }
  out.push_back(ChannelIndex::make(l, 2 * l + 1));
  return out;
}

int dirac_degeneracy(const ChannelIndex &c) noexcept { return c.two_j() + 1; }

} // namespace scott
