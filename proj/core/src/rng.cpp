#include "cosmo/rng.hpp"

namespace cosmo {

namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

std::uint64_t RngCursor::next_below(std::uint64_t bound) {
  Wide product = static_cast<Wide>(next_bits()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<Wide>(next_bits()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace cosmo
