#include "trig_integrals.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "common.hpp"
#include "quadrature.hpp"

namespace laghardy {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kCrossover = 2.0;

struct CiSi {
  double ci;
  double si;
};

// Power series, adequate to ~1e-16 for x <= 2.
CiSi cisi_series(double x) {
  const double x2 = -x * x;
  double term_s = x;   // sin series term x^{2k+1}/(2k+1)!
  double term_c = 1.0; // cos series term x^{2k}/(2k)!
  KahanSum si, ci;
  si += x;
  for (int k = 1; k <= 60; ++k) {
    term_c *= x2 / ((2.0 * k - 1.0) * (2.0 * k));
    ci += term_c / (2.0 * k);
    term_s *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
    si += term_s / (2.0 * k + 1.0);
    if (std::abs(term_s) < 1e-18 && std::abs(term_c) < 1e-18) break;
  }
  return {kEulerGamma + std::log(x) + static_cast<double>(ci), static_cast<double>(si)};
}

// Continued fraction for E1(ix) (modified Lentz), x > kCrossover:
//   E1(ix) e^{ix} = 1/(1+ix - 1^2/(3+ix - 2^2/(5+ix - ...)))
// and E1(ix) = -Ci(x) + i (Si(x) - pi/2).
CiSi cisi_fraction(double x) {
  using cplx = std::complex<double>;
  constexpr double tiny = 1e-290;
  cplx b(1.0, x);
  cplx c(1.0 / tiny, 0.0);
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -(i - 1.0) * (i - 1.0);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - cplx(1.0, 0.0)) < 1e-16) {
      h *= cplx(std::cos(x), -std::sin(x));
      return {-h.real(), M_PI_2 + h.imag()};
    }
  }
  throw budget_error("cosint/sinint: continued fraction did not converge");
}

CiSi cisi(double x) {
  return x <= kCrossover ? cisi_series(x) : cisi_fraction(x);
}

}  // namespace

double cosint(double x) {
  if (!(x > 0.0)) throw std::domain_error("cosint: requires x > 0");
  return cisi(x).ci;
}

double sinint(double x) {
  if (!(x >= 0.0)) throw std::domain_error("sinint: requires x >= 0");
  if (x == 0.0) return 0.0;
  return cisi(x).si;
}

double osc_integral_cos_over_v(double a, double b) {
  if (!(a > 0.0) || !(b >= a)) throw std::domain_error("osc_integral_cos_over_v: need 0 < a <= b");
  static const QuadratureRule ref = gauss_legendre(16, 0.0, 1.0);
  // panel edges: a, then zeros (j+1/2)pi inside (a,b), then b
  KahanSum total;
  double lo = a;
  long j = static_cast<long>(std::floor(a / M_PI - 0.5)) + 1;
  while (lo < b) {
    double hi = (static_cast<double>(j) + 0.5) * M_PI;
    if (hi <= lo) {
      ++j;
      continue;
    }
    hi = std::min(hi, b);
    const double h = hi - lo;
    KahanSum panel;
    for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
      const double v = lo + h * ref.nodes[i];
      panel += ref.weights[i] * h * std::cos(v) / v;
    }
    total += static_cast<double>(panel);
    lo = hi;
    ++j;
  }
  return total;
}

}  // namespace laghardy
