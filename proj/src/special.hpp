#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace laghardy {

// Laguerre-type order vector, one entry per coordinate, each > -1.
struct AlphaIndex {
  std::vector<double> values;

  explicit AlphaIndex(std::vector<double> v);
  static AlphaIndex scalar(double a) { return AlphaIndex({a}); }

  int dim() const { return static_cast<int>(values.size()); }
  // every alpha_i >= -1/2 (the sup-norm decay class)
  bool linf_ok() const;
  // every alpha_i in {-1/2} union [1/2, inf) (the derivative-formula class)
  bool hermite_class() const;
};

struct MultiIndex {
  std::vector<int> entries;

  explicit MultiIndex(std::vector<int> e);
  int dim() const { return static_cast<int>(entries.size()); }
  int length() const;  // |n| = n_1 + ... + n_d
};

// Visit all n with |n| = shell in lexicographic order; returns count visited.
std::size_t for_each_in_shell(int d, int shell,
                              const std::function<void(const std::vector<int>&)>& fn);

struct EvalPoint {
  std::vector<double> coords;
  explicit EvalPoint(std::vector<double> c);
  int dim() const { return static_cast<int>(coords.size()); }
};

// ln Gamma(x), x > 0. Relative error of the libm implementation is well below
// the 1e-13 contract on (0, 1e15).
double log_gamma(double x);

// Classical Laguerre polynomials L_0^a(u) .. L_kmax^a(u) by the three-term
// recurrence. Throws std::range_error if an intermediate exceeds the double
// range (happens around k ~ 150 for u of a few tens).
void laguerre_poly_seq(double alpha, double u, int kmax, std::span<double> out);

// Orthonormal standard Laguerre functions  cal-L_k^a(u), u > 0, via the
// normalized recurrence
//   L_{k+1} = (2k+1+a-u)/sqrt((k+1)(k+1+a)) L_k - sqrt(k(k+a)/((k+1)(k+1+a))) L_{k-1}
// carried in a (mantissa, power-of-2) representation so the sweep survives the
// deep tail where the seeds underflow doubles (e.g. u = 3600).
void standard_laguerre_seq(double alpha, double u, int kmax, std::span<double> out);
double standard_laguerre(double alpha, int k, double u);

// Laguerre functions of Hermite type: phi_k^a(u) = sqrt(2u) * cal-L_k^a(u^2).
void hermite_laguerre_seq(double alpha, double u, int kmax, std::span<double> out);
double hermite_laguerre(double alpha, int k, double u);

// Limit of phi_k^a(u) as u -> 0+. Finite only for a >= -1/2; nonzero only at
// a = -1/2 where it equals sqrt(2 Gamma(k+1/2) / (pi Gamma(k+1))).
double hermite_laguerre_limit0(double alpha, int k);

// d-dimensional product  phi_n^a(x) = prod_i phi_{n_i}^{a_i}(x_i).
double hermite_laguerre_multi(const AlphaIndex& alpha, const MultiIndex& n, const EvalPoint& x);

// (phi_k^a)'(u) = -2 sqrt(k) phi_{k-1}^{a+1}(u) + ((2a+1)/(2u) - u) phi_k^a(u).
// Gated to alpha in {-1/2} union [1/2, inf).
double hermite_laguerre_dx(double alpha, int k, double u);

// Oscillatory main term pi^{-1/2} k^{-1/4} cos(2 sqrt(k) u - pi(2b+1)/4).
double asymptotic_phi(double beta, int k, double u);

// Transition scale nu(a,k) = max(4k + 2a + 2, 2).
double nu_scale(double alpha, int k);

enum class Regime { small, flat, turning, tail };
const char* regime_name(Regime r);

struct Envelope {
  Regime regime;
  double bound;  // C times the regime bound
  double nu;
};

// Pointwise envelope of |phi_k^a| with caller constant C and tail rate gamma:
//   u <= 1/sqrt(nu)          : C u^{a+1/2} nu^{a/2}
//   1/sqrt(nu) < u <= sqrt(nu/2) : C nu^{-1/4}
//   sqrt(nu/2) < u <= sqrt(3nu/2): C sqrt(u) (nu (nu^{1/3} + |u^2-nu|))^{-1/4}
//   u > sqrt(3nu/2)          : C sqrt(u) exp(-gamma u^2)
Envelope envelope(double alpha, int k, double u, double C, double tail_gamma = 0.25);

}  // namespace laghardy
