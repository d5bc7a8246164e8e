#pragma once

#include <utility>
#include <vector>

#include "atom.hpp"
#include "coefficients.hpp"
#include "special.hpp"

namespace laghardy {

struct HardySumReport {
  double beta = 0.0;
  std::vector<double> shell_sums;  // S(0), S(1), ..., S(Nmax), nondecreasing
  double final_value = 0.0;
  double cauchy_tail = 0.0;        // S(Nmax) - S(Nmax/2)
  double log_fit_slope = 0.0;      // d S / d log N over N in [100, Nmax]
  double log_fit_r2 = 0.0;
};

// Shell-ordered partial sums of |c_n| / (|n|+1)^beta from a coefficient
// table (d = 1 or 2).
HardySumReport hardy_sum(const CoefficientTable& coeffs, double beta);

// Coefficient table of an atom. d = 1 integrates the cells directly; d = 2
// tensorizes over the distinct cell-edge intervals per coordinate. The Bessel
// defect is recorded against the atom's exact L2 norm.
CoefficientTable atom_coefficients(const Atom& a, const AlphaIndex& alpha, int nmax);

struct RIntegralOptions {
  int levels = 0;        // geometric s-levels; 0 = choose from the atom geometry
  int points = 8;        // Gauss points per level
  double spectral_rmax = 0.95;  // spectral route for r <= this
  int spectral_nmax = 0; // 0 = 2000 (d=1) / 200 shells (d=2)

  RIntegralOptions doubled() const {
    RIntegralOptions o = *this;
    o.points = 2 * points;
    if (o.levels > 0) o.levels += 1;
    return o;
  }
};

struct RIntegralResult {
  double value = 0.0;
  double stub_value = 0.0;       // bracket midpoint of the unresolved s -> 0 piece
  double stub_half_width = 0.0;  // certified half width of that bracket
  int levels = 0;
  int points = 0;
};

// int_0^1 ||R_r a||_2 (1-r)^{(d-4)/4} dr. Substituting r = 1-s^2 gives
// 2 int_0^1 F(s) s^{(d-2)/2} ds with F(s) = ||R_{1-s^2} a||_2, integrated on
// geometric panels toward s = 0. F uses the spectral route for small r and
// the double-integral identity ||R_r a||^2 = (a, R_{r^2} a) near r = 1; the
// final unresolved piece is bracketed by the monotonicity of F in r.
RIntegralResult atom_r_integral(const Atom& a, const AlphaIndex& alpha,
                                const RIntegralOptions& opts = {});

// ( I, I*(n+1)^{3d/4} ) with I = int_0^1 r^{2n} (1-r)^{(3d-4)/4} dr by
// quadrature (the exact value is the Beta function B(2n+1, 3d/4)).
std::pair<double, double> beta_identity_check(int n_abs, int d);

struct PhiSumScanPoint {
  double u = 0.0;
  double sum = 0.0;   // S(K)
  double tail = 0.0;  // S(K) - S(K/2)
};

struct PhiSumScanReport {
  double alpha = 0.0, eps = 0.0;
  int kmax = 0;
  std::vector<PhiSumScanPoint> points;
  double grid_max = 0.0;
  double grid_max_u = 0.0;
  double worst_tail = 0.0;
};

// S_u(K) = sum_{k<=K} |phi_k^a(u)| / k^{3/4+eps} over a u grid.
PhiSumScanReport uniform_phi_sum_scan(double alpha, double eps,
                                      const std::vector<double>& u_grid, int kmax);

}  // namespace laghardy
