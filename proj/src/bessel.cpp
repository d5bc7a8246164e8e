#include "bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "common.hpp"
#include "quadrature.hpp"

namespace laghardy {

namespace {

constexpr double kSeriesCross = 20.0;

double asym_cross(double alpha) {
  // classical expansion needs z well above mu = 4 alpha^2
  return std::max(400.0, 40.0 * (4.0 * alpha * alpha + 2.0));
}

// Power-series branch, returned in log form:
//   ln(e^{-z} I_a(z)) = a ln(z/2) - z - lgamma(a+1) + ln sum_m t_m,
//   t_0 = 1, t_{m+1} = t_m z^2 / (4 (m+1)(m+1+a)).
double log_series(double alpha, double z) {
  const double q = 0.25 * z * z;
  double term = 1.0;
  KahanSum sum;
  sum += 1.0;
  for (int m = 0; m < 500; ++m) {
    term *= q / ((m + 1.0) * (m + 1.0 + alpha));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return alpha * std::log(0.5 * z) - z - std::lgamma(alpha + 1.0) + std::log(static_cast<double>(sum));
}

// Middle branch: e^{-z} I_a(z) = (1/pi) int_0^pi e^{-z(1-cos t)} cos(a t) dt
// plus a K-type term that is O(e^{-2z}) and negligible for z >= 20.
// Substituting t = s/sqrt(z) concentrates the integrand near 0; the range
// [0, min(pi sqrt(z), 11)] carries everything above 1e-15 of the value.
double quad_branch(double alpha, double z) {
  static const QuadratureRule ref = gauss_legendre(30, -0.5, 0.5);
  constexpr int kPanels = 8;
  const double sqrtz = std::sqrt(z);
  const double smax = std::min(M_PI * sqrtz, 11.0);
  const double h = smax / kPanels;
  KahanSum total;
  for (int p = 0; p < kPanels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
      const double s = mid + h * ref.nodes[i];
      const double theta = s / sqrtz;
      // z(1-cos theta) = 2 z sin^2(theta/2), kept in this form for accuracy
      const double sh = std::sin(0.5 * theta);
      total += ref.weights[i] * h * std::exp(-2.0 * z * sh * sh) * std::cos(alpha * theta);
    }
  }
  return static_cast<double>(total) / (M_PI * sqrtz);
}

// Classical expansion: e^{-z} I_a(z) ~ (2 pi z)^{-1/2} sum_m (-1)^m a_m / z^m,
// a_m = prod_{j=1..m} (mu - (2j-1)^2) / (8 m!) with mu = 4 a^2.
double asym_branch(double alpha, double z) {
  const double mu = 4.0 * alpha * alpha;
  double term = 1.0;
  KahanSum sum;
  sum += 1.0;
  for (int m = 1; m <= 30; ++m) {
    term *= -(mu - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (8.0 * m * z);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(static_cast<double>(sum))) break;
  }
  return static_cast<double>(sum) / std::sqrt(2.0 * M_PI * z);
}

}  // namespace

double bessel_i_scaled(double alpha, double z) {
  if (!(alpha > -1.0)) throw std::range_error("bessel_i_scaled: requires alpha > -1");
  if (!(z >= 0.0)) throw std::domain_error("bessel_i_scaled: requires z >= 0");
  if (z == 0.0) {
    if (alpha == 0.0) return 1.0;
    if (alpha > 0.0) return 0.0;
    return std::numeric_limits<double>::infinity();  // (z/2)^alpha blows up
  }
  if (z < kSeriesCross) return std::exp(log_series(alpha, z));
  if (z < asym_cross(alpha)) return quad_branch(alpha, z);
  return asym_branch(alpha, z);
}

double bessel_i_scaled_log(double alpha, double z) {
  if (!(alpha > -1.0)) throw std::range_error("bessel_i_scaled_log: requires alpha > -1");
  if (!(z > 0.0)) throw std::domain_error("bessel_i_scaled_log: requires z > 0");
  if (z < kSeriesCross) return log_series(alpha, z);
  if (z < asym_cross(alpha)) return std::log(quad_branch(alpha, z));
  return std::log(asym_branch(alpha, z));
}

double bessel_ratio(double alpha, double z) {
  if (!(alpha >= 0.5)) throw std::range_error("bessel_ratio: requires alpha >= 1/2");
  if (!(z > 0.0)) throw std::domain_error("bessel_ratio: requires z > 0");
  // modified Lentz on  2a/z + 1/(2(a+1)/z + 1/(2(a+2)/z + ...))
  constexpr double tiny = 1e-300;
  double f = 2.0 * alpha / z;
  if (f == 0.0) f = tiny;
  double c = f;
  double d = 0.0;
  for (int m = 1; m < 100000; ++m) {
    const double b = 2.0 * (alpha + m) / z;
    d = b + d;
    if (d == 0.0) d = tiny;
    c = b + 1.0 / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double mult = c * d;
    f *= mult;
    if (std::abs(mult - 1.0) < 1e-16) return f;
  }
  throw budget_error("bessel_ratio: continued fraction did not converge");
}

}  // namespace laghardy
