#pragma once

namespace laghardy {

// Cosine integral Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt, x > 0.
double cosint(double x);

// Sine integral Si(x) = int_0^x sin t / t dt, x >= 0.
double sinint(double x);

// int_a^b cos(v)/v dv with panels split at the zeros of the cosine and a
// Gauss rule per panel. 0 < a <= b. Matches cosint(b) - cosint(a) and is the
// workhorse for the oscillatory pieces of the series accelerations.
double osc_integral_cos_over_v(double a, double b);

}  // namespace laghardy
