#pragma once

#include <cstdint>
#include <vector>

#include "special.hpp"

namespace laghardy {

// H(k) = sum_{j<=k} 1/j. Exact compensated sum for k <= 10^6, the asymptotic
// log k + gamma + 1/(2k) - 1/(12k^2) + 1/(120k^4) beyond (error < 1e-12).
double harmonic_number(std::int64_t k);

enum class TrigKind { cos_kind, sin_kind };

struct TrigSeriesState {
  double t = 0.0;
  TrigKind kind = TrigKind::cos_kind;
  std::int64_t kmax = 0;
  double naive = 0.0;         // compensated partial sum
  double identity_rhs = 0.0;  // summation-by-parts form of the same finite sum
  double accelerated = 0.0;   // estimate of the K -> infinity limit
  double err_indicator = 0.0; // size bound for the dropped correction tail
};

// sum_{k<=K} trig(t sqrt k)/k, compensated.
double trig_series_naive(double t, TrigKind kind, std::int64_t kmax);

// Naive sum, the summation-by-parts identity
//   sum = H(K) trig(t sqrt K) -+ sum_{m<K} H(m) [trig(t sqrt(m+1)) - trig(t sqrt m)]
// (exact per unit interval, so it equals the naive sum to rounding), and the
// accelerated limit estimate
//   cos: S(K) - r(K) cos(t sqrt K) - 2 Ci(t sqrt K)
//   sin: S(K) - r(K) sin(t sqrt K) + 2 (pi/2 - Si(t sqrt K))
// with r(K) = H(K) - log K - gamma.
TrigSeriesState trig_series(double t, TrigKind kind, std::int64_t kmax);

// sum_{k<=K} cos(sqrt k)/(n+k)^{d+1}, compensated.
double inner_series(std::int64_t n_abs, int d, std::int64_t kmax);

struct InnerSeriesResult {
  double value = 0.0;       // partial sum + integral tail estimate
  double tail_bound = 0.0;  // certified bound on what the estimate can miss
  std::int64_t kmax = 0;    // direct-summation cutoff used
};

// Picks the cutoff from the oscillatory (alternating zero-panel) tail
// certificate and closes the series with the integral tail.
InnerSeriesResult inner_series_auto(std::int64_t n_abs, int d);

struct DivergenceReport {
  double beta = 0.0;
  std::vector<double> shell_sums;  // S(N), N = 0..Nmax (d = 1: N = k)
  double final_value = 0.0;
  double cauchy_tail = 0.0;        // S(Nmax) - S(Nmax/2)
  double log_fit_slope = 0.0;      // fit over N in [100, Nmax]
  double log_fit_r2 = 0.0;
  bool used_surrogate = false;     // d = 2 only: asymptotic term past the cap
};

// Shell sums of |phi_n(x)| / (|n|+1)^beta. d = 1 evaluates the functions
// exactly up to nmax. d = 2 evaluates exactly up to shell 1000 and, if nmax
// exceeds that, continues with the oscillatory main term as a surrogate
// (flagged in the report, never silently mixed).
DivergenceReport divergence_demo(const AlphaIndex& alpha, const EvalPoint& x,
                                 double beta, std::int64_t nmax);

struct CosSquaredDecomposition {
  double sum = 0.0;         // sum_{k<=K} cos^2(2 sqrt k u - pi(2b+1)/4)/k
  double harmonic_main = 0.0;  // H(K)/2
  double remainder = 0.0;   // sum - harmonic_main (bounded as K grows)
};

// Decomposes the cos^2 series into the divergent harmonic main part and the
// bounded oscillatory remainder; the termwise identity
//   cos^2(phase) = (1 + cos(4 sqrt k u) cos Phi + sin(4 sqrt k u) sin Phi)/2,
// Phi = pi(2b+1)/2, is what the decomposition rests on.
CosSquaredDecomposition cos_squared_decomposition(double u, double beta,
                                                  std::int64_t kmax);

}  // namespace laghardy
