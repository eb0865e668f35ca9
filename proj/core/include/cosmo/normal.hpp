#pragma once

namespace cosmo {

// Standard Gaussian CDF. Computed from erfc on the lower tail, with
// normal_cdf(-x) == 1 - normal_cdf(x) holding by construction.
double normal_cdf(double x);

}  // namespace cosmo
