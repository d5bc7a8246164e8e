#include "kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bessel.hpp"
#include "common.hpp"

namespace laghardy {

namespace {

constexpr double kLn2 = 0.6931471805599453094;

// fitted sup bound: ||phi_k^a||_inf <= ~1.1 for a >= -1/2 on the tested range;
// 2.0 is a comfortable ceiling for the geometric tail estimate.
constexpr double kPhiSupCeiling = 2.0;

double gauss_exponent(const SmoothingParam& r, double x, double y) {
  const double s = std::sqrt(r.r);
  const double d1 = s * x - y;
  const double d2 = x - s * y;
  return (d1 * d1 + d2 * d2) / (2.0 * r.one_minus_r);
}

}  // namespace

SmoothingParam::SmoothingParam(double r_in) : r(r_in) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("SmoothingParam: requires r in (0,1)");
  one_minus_r = 1.0 - r;
  ratio_plus = (1.0 + r) / one_minus_r;
  bessel_scale = 2.0 * std::sqrt(r) / one_minus_r;
}

KernelBranch kernel_branch(const SmoothingParam& r, double x, double y) {
  return r.bessel_scale * x * y < 1e-2 ? KernelBranch::small_argument_series
                                       : KernelBranch::closed_bessel;
}

double kernel_closed_log(double alpha, const SmoothingParam& r, double x, double y) {
  if (!(alpha > -1.0)) throw std::domain_error("kernel_closed: requires alpha > -1");
  if (!(x > 0.0 && y > 0.0)) throw std::domain_error("kernel_closed: requires x,y > 0");
  const double z = r.bessel_scale * x * y;
  return kLn2 + 0.5 * std::log(x * y) - std::log(r.one_minus_r) -
         0.5 * alpha * std::log(r.r) + bessel_i_scaled_log(alpha, z) -
         gauss_exponent(r, x, y);
}

double kernel_closed(double alpha, const SmoothingParam& r, double x, double y) {
  return std::exp(kernel_closed_log(alpha, r, x, y));
}

double kernel_series(double alpha, const SmoothingParam& r, double x, double y,
                     double tol, int kcap, double* abs_sum) {
  if (!(r.r <= 0.99))
    throw std::domain_error("kernel_series: spectral series restricted to r <= 0.99");
  if (!(tol > 0.0)) throw std::domain_error("kernel_series: requires tol > 0");
  // geometric tail: sup^2 r^{N+1}/(1-r) < tol
  const double target = tol * r.one_minus_r / (kPhiSupCeiling * kPhiSupCeiling);
  int n = static_cast<int>(std::ceil(std::log(target) / std::log(r.r))) + 1;
  n = std::max(n, 8);
  if (n > kcap) throw budget_error("kernel_series: truncation order exceeds the cap");
  std::vector<double> px(static_cast<std::size_t>(n) + 1), py(static_cast<std::size_t>(n) + 1);
  hermite_laguerre_seq(alpha, x, n, px);
  hermite_laguerre_seq(alpha, y, n, py);
  KahanSum sum, asum;
  double rk = 1.0;
  for (int k = 0; k <= n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const double term = rk * px[kk] * py[kk];
    sum += term;
    asum += std::abs(term);
    rk *= r.r;
  }
  if (abs_sum != nullptr) *abs_sum = asum;
  return sum;
}

double kernel_dx(double alpha, const SmoothingParam& r, double x, double y) {
  if (!(x > 0.0 && y > 0.0)) throw std::domain_error("kernel_dx: requires x,y > 0");
  if (alpha >= 0.5) {
    const double lower = std::exp(kernel_closed_log(alpha - 1.0, r, x, y));
    const double same = std::exp(kernel_closed_log(alpha, r, x, y));
    return (2.0 * y / r.one_minus_r) * lower -
           ((2.0 * alpha - 1.0) / (2.0 * x) + r.ratio_plus * x) * same;
  }
  if (alpha == -0.5) {
    const double s = std::sqrt(r.r);
    const double z = r.bessel_scale * x * y;
    const double g = gauss_exponent(r, x, y);
    const double pref = std::pow(M_PI, -0.5) * std::pow(r.one_minus_r, -1.5);
    return pref * (std::exp(-g) * (2.0 * s * y - (1.0 + r.r) * x) -
                   std::exp(-g - 2.0 * z) * (2.0 * s * y + (1.0 + r.r) * x));
  }
  throw std::range_error("kernel_dx: requires alpha in {-1/2} union [1/2, inf)");
}

double kernel_multi(const AlphaIndex& alpha, const SmoothingParam& r,
                    std::span<const double> x, std::span<const double> y) {
  if (x.size() != static_cast<std::size_t>(alpha.dim()) || x.size() != y.size())
    throw std::domain_error("kernel_multi: dimension mismatch");
  double prod = 1.0;
  for (int i = 0; i < alpha.dim(); ++i) {
    const auto ii = static_cast<std::size_t>(i);
    prod *= kernel_closed(alpha.values[ii], r, x[ii], y[ii]);
  }
  return prod;
}

double kernel_dxj_multi(const AlphaIndex& alpha, int j, const SmoothingParam& r,
                        std::span<const double> x, std::span<const double> y) {
  if (x.size() != static_cast<std::size_t>(alpha.dim()) || x.size() != y.size())
    throw std::domain_error("kernel_dxj_multi: dimension mismatch");
  if (j < 1 || j > alpha.dim())
    throw std::domain_error("kernel_dxj_multi: coordinate index out of range");
  double prod = 1.0;
  for (int i = 0; i < alpha.dim(); ++i) {
    const auto ii = static_cast<std::size_t>(i);
    prod *= (i == j - 1) ? kernel_dx(alpha.values[ii], r, x[ii], y[ii])
                         : kernel_closed(alpha.values[ii], r, x[ii], y[ii]);
  }
  return prod;
}

namespace {

// Panel edges for integrating (a function of) R_r(x,.)^2: concentrate near
// y = x at the kernel width sigma, keep the far field covered coarsely.
std::vector<double> norm_panel_edges(const SmoothingParam& r, double x) {
  const double sigma = std::sqrt(r.one_minus_r / (1.0 + r.r));
  const double ymax = x + 12.0 * sigma + 3.0;
  std::vector<double> edges{0.0};
  auto push = [&edges](double v) {
    if (v > edges.back() + 1e-14) edges.push_back(v);
  };
  for (double k : {-48.0, -24.0, -12.0, -8.0, -6.0, -4.0, -3.0, -2.0, -1.0,
                   0.0, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0}) {
    const double v = x + k * sigma;
    if (v > 0.0 && v < ymax) push(v);
  }
  // the +3 guard zone in unit steps (matters when sigma ~ 1)
  for (double v = x + 12.0 * sigma + 1.0; v < ymax; v += 1.0) push(v);
  push(ymax);
  return edges;
}

double l2_over_edges(const std::function<double(double)>& f2,
                     const std::vector<double>& edges) {
  return std::sqrt(std::max(0.0, integrate_panels(f2, edges, 24)));
}

}  // namespace

double l2_norm_kernel(double alpha, const SmoothingParam& r, double x) {
  const auto edges = norm_panel_edges(r, x);
  return l2_over_edges(
      [&](double y) {
        const double v = kernel_closed(alpha, r, x, y);
        return v * v;
      },
      edges);
}

double l2_norm_kernel_dx(double alpha, const SmoothingParam& r, double x) {
  const auto edges = norm_panel_edges(r, x);
  return l2_over_edges(
      [&](double y) {
        const double v = kernel_dx(alpha, r, x, y);
        return v * v;
      },
      edges);
}

std::vector<double> norm_scan_grid(double alpha) {
  constexpr int kPoints = 200;
  std::vector<double> grid;
  grid.reserve(kPoints + 1);
  const double lo = std::log(1e-3), hi = std::log(20.0);
  for (int i = 0; i < kPoints; ++i)
    grid.push_back(std::exp(lo + (hi - lo) * i / (kPoints - 1)));
  grid.push_back(std::sqrt(nu_scale(alpha, 0)));
  std::sort(grid.begin(), grid.end());
  return grid;
}

namespace {

double sup_over_grid(const std::vector<double>& grid,
                     const std::function<double(double)>& eval) {
  std::vector<double> vals(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { vals[i] = eval(grid[i]); });
  double sup = 0.0;
  for (double v : vals) sup = std::max(sup, v);
  return sup;
}

}  // namespace

double sup_l2_norm_kernel(double alpha, const SmoothingParam& r) {
  return sup_over_grid(norm_scan_grid(alpha),
                       [&](double x) { return l2_norm_kernel(alpha, r, x); });
}

double sup_l2_norm_kernel_dx(double alpha, const SmoothingParam& r) {
  return sup_over_grid(norm_scan_grid(alpha),
                       [&](double x) { return l2_norm_kernel_dx(alpha, r, x); });
}

NormScanReport norm_scaling_scan(double alpha, int kind, int dim,
                                 const std::vector<double>& r_grid, double p) {
  if (kind < 0 || kind > 2) throw std::domain_error("norm_scaling_scan: bad kind");
  if (dim < 1) throw std::domain_error("norm_scaling_scan: bad dim");
  NormScanReport rep;
  rep.exponent_p = p;
  for (double rv : r_grid) {
    const SmoothingParam r(rv);
    double sup = 0.0;
    switch (kind) {
      case 0: sup = sup_l2_norm_kernel(alpha, r); break;
      case 1: sup = sup_l2_norm_kernel_dx(alpha, r); break;
      case 2: {
        // product structure: sup_x ||d_{x_1} R_r(x,.)||_{L^2(R_+^d)} equals
        // sup ||d_x R^a(x_1,.)|| * prod_{i>1} sup ||R^a(x_i,.)||
        sup = sup_l2_norm_kernel_dx(alpha, r);
        const double factor = sup_l2_norm_kernel(alpha, r);
        for (int i = 1; i < dim; ++i) sup *= factor;
        break;
      }
    }
    rep.r_values.push_back(rv);
    rep.sup_norms.push_back(sup);
    rep.rescaled.push_back(sup * std::pow(1.0 - rv, p));
  }
  const auto [mn, mx] = std::minmax_element(rep.rescaled.begin(), rep.rescaled.end());
  rep.max_min_ratio = *mx / *mn;
  return rep;
}

double apply_operator_kernel(double alpha, const SmoothingParam& r,
                             const std::function<double(double)>& f,
                             const std::vector<double>& edges, double x) {
  if (edges.size() < 2) throw std::domain_error("apply_operator_kernel: need support edges");
  // refine the support panels to the kernel width near y = x
  const double sigma = std::sqrt(r.one_minus_r / (1.0 + r.r));
  std::vector<double> refined{edges.front()};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i], b = edges[i + 1];
    const int parts = std::clamp(static_cast<int>(std::ceil((b - a) / sigma)), 1, 512);
    for (int p = 1; p <= parts; ++p) refined.push_back(a + (b - a) * p / parts);
  }
  return integrate_panels(
      [&](double y) { return kernel_closed(alpha, r, x, y) * f(y); }, refined, 16);
}

double apply_operator_spectral(double alpha, const SmoothingParam& r,
                               std::span<const double> coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<double> phi(coeffs.size());
  hermite_laguerre_seq(alpha, x, n, phi);
  KahanSum sum;
  double rk = 1.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    sum += rk * coeffs[k] * phi[k];
    rk *= r.r;
  }
  return sum;
}

}  // namespace laghardy
