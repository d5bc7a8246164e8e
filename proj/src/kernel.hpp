#pragma once

#include <span>
#include <vector>

#include "quadrature.hpp"
#include "special.hpp"

namespace laghardy {

// Smoothing parameter r in (0,1) with the derived quantities cached.
struct SmoothingParam {
  double r;
  double one_minus_r;
  double ratio_plus;     // (1+r)/(1-r)
  double bessel_scale;   // 2 sqrt(r)/(1-r)

  explicit SmoothingParam(double r_in);
};

enum class KernelBranch { closed_bessel, spectral_series, small_argument_series };

// Deterministic branch rule: the Bessel argument z = 2 sqrt(r) x y/(1-r)
// selects the small-argument power series below 1e-2, the closed Bessel form
// otherwise. The spectral series is only used on request (cross-checks).
KernelBranch kernel_branch(const SmoothingParam& r, double x, double y);

// One-dimensional kernel
//   R_r(x,y) = 2 sqrt(xy) / ((1-r) r^{a/2}) exp(-(1+r)(x^2+y^2)/(2(1-r))) I_a(z)
// evaluated in the log domain: the Gaussian factor and the e^{+z} inside I_a
// cancel into exp(-[(sqrt(r)x-y)^2 + (x-sqrt(r)y)^2]/(2(1-r))), so the result
// is representable whenever it is above the double underflow threshold.
double kernel_closed(double alpha, const SmoothingParam& r, double x, double y);
double kernel_closed_log(double alpha, const SmoothingParam& r, double x, double y);

// Truncated spectral series sum_{k<=N} r^k phi_k(x) phi_k(y) with N chosen so
// the geometric tail bound sup_bound^2 r^{N+1}/(1-r) < tol. If abs_sum is
// non-null it receives sum r^k |phi phi| (the roundoff scale of the series).
double kernel_series(double alpha, const SmoothingParam& r, double x, double y,
                     double tol, int kcap = 20000, double* abs_sum = nullptr);

// d/dx R_r^a(x,y). For a >= 1/2 uses
//   (2y/(1-r)) R^{a-1} - ((2a-1)/(2x) + (1+r)x/(1-r)) R^a;
// for a = -1/2 the explicit cosh/sinh differentiation in stabilized form.
double kernel_dx(double alpha, const SmoothingParam& r, double x, double y);

// Product kernel and its j-th coordinate derivative, d >= 1.
double kernel_multi(const AlphaIndex& alpha, const SmoothingParam& r,
                    std::span<const double> x, std::span<const double> y);
double kernel_dxj_multi(const AlphaIndex& alpha, int j, const SmoothingParam& r,
                        std::span<const double> x, std::span<const double> y);

// ||R_r^a(x,.)||_{L^2(R_+)} by quadrature over (0, x + 12 sigma + 3) with
// sigma = sqrt((1-r)/(1+r)); panels concentrate near y = x.
double l2_norm_kernel(double alpha, const SmoothingParam& r, double x);
double l2_norm_kernel_dx(double alpha, const SmoothingParam& r, double x);

// The sup-scan grid: 200 log-spaced points in [1e-3, 20] plus sqrt(nu(a,0)).
std::vector<double> norm_scan_grid(double alpha);

// sup over the scan grid, parallelized with a deterministic reduction.
double sup_l2_norm_kernel(double alpha, const SmoothingParam& r);
double sup_l2_norm_kernel_dx(double alpha, const SmoothingParam& r);

struct NormScanReport {
  std::vector<double> r_values;
  std::vector<double> sup_norms;
  std::vector<double> rescaled;  // sup * (1-r)^p
  double exponent_p = 0.0;
  double max_min_ratio = 0.0;
};

// Runs the sup-norm scan over an r grid and rescales by (1-r)^p.
// `kind` 0: kernel, 1: kernel_dx, 2: d-dim first-coordinate derivative with
// all coordinates at the same alpha (sup factorizes over coordinates).
NormScanReport norm_scaling_scan(double alpha, int kind, int dim,
                                 const std::vector<double>& r_grid, double p);

// (R_r f)(x) along the kernel route: int R_r(x,y) f(y) dy over the support
// described by `edges` (breakpoints of f, including the support ends).
double apply_operator_kernel(double alpha, const SmoothingParam& r,
                             const std::function<double(double)>& f,
                             const std::vector<double>& edges, double x);

// Spectral route: sum_k r^k c_k phi_k(x) for precomputed c_k = <f, phi_k>.
double apply_operator_spectral(double alpha, const SmoothingParam& r,
                               std::span<const double> coeffs, double x);

}  // namespace laghardy
