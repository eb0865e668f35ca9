#include "cosmo/normal.hpp"

#include <cmath>
#include <numbers>

namespace cosmo {

double normal_cdf(double x) {
  const double lower_tail = 0.5 * std::erfc(std::abs(x) / std::numbers::sqrt2);
  return x < 0 ? lower_tail : 1.0 - lower_tail;
}

}  // namespace cosmo
