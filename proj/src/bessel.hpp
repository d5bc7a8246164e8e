#pragma once

namespace laghardy {

// e^{-z} I_alpha(z) for alpha > -1, z >= 0. Three branches:
//   z < 20                     : power series on the scaled function
//   20 <= z < z_asym(alpha)    : integral representation, fixed Gauss panels
//   z >= z_asym(alpha)         : classical large-argument expansion
// Crossovers are chosen so every branch delivers <= 1e-12 relative error on
// alpha <= ~20; see the unit tests for the cross-branch checks.
double bessel_i_scaled(double alpha, double z);

// ln( e^{-z} I_alpha(z) ), usable when the scaled value itself would
// underflow (tiny z with large alpha). Requires z > 0.
double bessel_i_scaled_log(double alpha, double z);

// I_{alpha-1}(z) / I_alpha(z) for alpha >= 1/2, z > 0, by the forward
// continued fraction  I_{a-1}/I_a = 2a/z + 1/(2(a+1)/z + 1/(...)),
// evaluated with the modified Lentz algorithm. Cancellation free.
double bessel_ratio(double alpha, double z);

}  // namespace laghardy
