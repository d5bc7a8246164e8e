#include "special.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "common.hpp"

namespace laghardy {

namespace {

constexpr double kLn2 = 0.6931471805599453094;

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

// value = mant * 2^exp2, |mant| kept within [1e-150, 1e150] by renormalize().
struct Scaled {
  double mant;
  long exp2;

  static Scaled from_log(double ln_value, double sign) {
    Scaled s;
    if (ln_value == -std::numeric_limits<double>::infinity()) {
      s.mant = 0.0;
      s.exp2 = 0;
      return s;
    }
    s.exp2 = static_cast<long>(std::floor(ln_value / kLn2));
    s.mant = sign * std::exp(ln_value - static_cast<double>(s.exp2) * kLn2);
    return s;
  }

  double to_double() const {
    if (mant == 0.0) return 0.0;
    if (exp2 > 2000) return mant > 0 ? std::numeric_limits<double>::infinity()
                                     : -std::numeric_limits<double>::infinity();
    if (exp2 < -2000) return 0.0;
    return std::ldexp(mant, static_cast<int>(exp2));
  }
};

}  // namespace

AlphaIndex::AlphaIndex(std::vector<double> v) : values(std::move(v)) {
  require(!values.empty(), "AlphaIndex: dimension must be >= 1");
  for (double a : values) require(a > -1.0, "AlphaIndex: every alpha_i must be > -1");
}

bool AlphaIndex::linf_ok() const {
  for (double a : values)
    if (a < -0.5) return false;
  return true;
}

bool AlphaIndex::hermite_class() const {
  for (double a : values)
    if (!(a == -0.5 || a >= 0.5)) return false;
  return true;
}

MultiIndex::MultiIndex(std::vector<int> e) : entries(std::move(e)) {
  require(!entries.empty(), "MultiIndex: dimension must be >= 1");
  for (int n : entries) require(n >= 0, "MultiIndex: entries must be >= 0");
}

int MultiIndex::length() const {
  int s = 0;
  for (int n : entries) s += n;
  return s;
}

std::size_t for_each_in_shell(int d, int shell,
                              const std::function<void(const std::vector<int>&)>& fn) {
  require(d >= 1 && shell >= 0, "for_each_in_shell: d >= 1, shell >= 0");
  std::vector<int> n(static_cast<std::size_t>(d), 0);
  std::size_t count = 0;
  // lexicographic enumeration of compositions of `shell` into d parts
  std::function<void(int, int)> rec = [&](int coord, int remaining) {
    if (coord == d - 1) {
      n[static_cast<std::size_t>(coord)] = remaining;
      fn(n);
      ++count;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      n[static_cast<std::size_t>(coord)] = v;
      rec(coord + 1, remaining - v);
    }
  };
  rec(0, shell);
  return count;
}

EvalPoint::EvalPoint(std::vector<double> c) : coords(std::move(c)) {
  require(!coords.empty(), "EvalPoint: dimension must be >= 1");
  for (double x : coords) require(x > 0.0, "EvalPoint: coordinates must be > 0");
}

double log_gamma(double x) {
  require(x > 0.0, "log_gamma: requires x > 0");
  return std::lgamma(x);
}

void laguerre_poly_seq(double alpha, double u, int kmax, std::span<double> out) {
  require(alpha > -1.0, "laguerre_poly_seq: requires alpha > -1");
  require(u >= 0.0, "laguerre_poly_seq: requires u >= 0");
  require(kmax >= 0 && out.size() >= static_cast<std::size_t>(kmax) + 1,
          "laguerre_poly_seq: bad kmax/output span");
  constexpr double kOverflowGuard = 1e300;
  double p0 = 1.0;
  out[0] = p0;
  if (kmax == 0) return;
  double p1 = 1.0 + alpha - u;
  out[1] = p1;
  for (int k = 1; k < kmax; ++k) {
    // (k+1) L_{k+1} = (2k+1+alpha-u) L_k - (k+alpha) L_{k-1}
    const double p2 =
        ((2.0 * k + 1.0 + alpha - u) * p1 - (k + alpha) * p0) / (k + 1.0);
    if (!(std::abs(p2) < kOverflowGuard))
      throw std::range_error("laguerre_poly_seq: overflow; use the normalized functions");
    p0 = p1;
    p1 = p2;
    out[static_cast<std::size_t>(k) + 1] = p2;
  }
}

namespace {

// Core sweep at v = u (standard) with the orthonormal-function recurrence.
// out[k] = cal-L_k^alpha(v).
void normalized_sweep(double alpha, double v, int kmax, std::span<double> out) {
  const double ln_seed =
      0.5 * alpha * std::log(v) - 0.5 * v - 0.5 * std::lgamma(alpha + 1.0);
  Scaled s = Scaled::from_log(ln_seed, 1.0);
  double m0 = s.mant;
  long e = s.exp2;
  out[0] = s.to_double();
  if (kmax == 0) return;
  double m1 = (1.0 + alpha - v) / std::sqrt(1.0 + alpha) * m0;
  out[1] = Scaled{m1, e}.to_double();
  for (int k = 1; k < kmax; ++k) {
    const double kk = static_cast<double>(k);
    const double c1 = (2.0 * kk + 1.0 + alpha - v) / std::sqrt((kk + 1.0) * (kk + 1.0 + alpha));
    const double c2 = std::sqrt(kk * (kk + alpha) / ((kk + 1.0) * (kk + 1.0 + alpha)));
    const double m2 = c1 * m1 - c2 * m0;
    m0 = m1;
    m1 = m2;
    const double am = std::max(std::abs(m0), std::abs(m1));
    if (am > 1e150) {
      m0 = std::ldexp(m0, -512);
      m1 = std::ldexp(m1, -512);
      e += 512;
    } else if (am > 0.0 && am < 1e-150) {
      m0 = std::ldexp(m0, 512);
      m1 = std::ldexp(m1, 512);
      e -= 512;
    }
    out[static_cast<std::size_t>(k) + 1] = Scaled{m1, e}.to_double();
  }
}

}  // namespace

void standard_laguerre_seq(double alpha, double u, int kmax, std::span<double> out) {
  require(alpha > -1.0, "standard_laguerre_seq: requires alpha > -1");
  require(u > 0.0, "standard_laguerre_seq: requires u > 0");
  require(kmax >= 0 && out.size() >= static_cast<std::size_t>(kmax) + 1,
          "standard_laguerre_seq: bad kmax/output span");
  normalized_sweep(alpha, u, kmax, out);
}

double standard_laguerre(double alpha, int k, double u) {
  require(k >= 0, "standard_laguerre: requires k >= 0");
  std::vector<double> buf(static_cast<std::size_t>(k) + 1);
  standard_laguerre_seq(alpha, u, k, buf);
  return buf[static_cast<std::size_t>(k)];
}

void hermite_laguerre_seq(double alpha, double u, int kmax, std::span<double> out) {
  require(u > 0.0, "hermite_laguerre_seq: requires u > 0");
  standard_laguerre_seq(alpha, u * u, kmax, out);
  const double root = std::sqrt(2.0 * u);
  for (int k = 0; k <= kmax; ++k) out[static_cast<std::size_t>(k)] *= root;
}

double hermite_laguerre(double alpha, int k, double u) {
  require(k >= 0, "hermite_laguerre: requires k >= 0");
  return std::sqrt(2.0 * u) * standard_laguerre(alpha, k, u * u);
}

double hermite_laguerre_limit0(double alpha, int k) {
  require(alpha >= -0.5, "hermite_laguerre_limit0: limit is finite only for alpha >= -1/2");
  require(k >= 0, "hermite_laguerre_limit0: requires k >= 0");
  if (alpha > -0.5) return 0.0;  // phi ~ u^{alpha+1/2} -> 0
  // alpha = -1/2: phi_k(0+) = sqrt(2 Gamma(k+1/2) / (pi Gamma(k+1)))
  const double ln = kLn2 + std::lgamma(k + 0.5) - std::lgamma(k + 1.0) - std::log(M_PI);
  return std::exp(0.5 * ln);
}

double hermite_laguerre_multi(const AlphaIndex& alpha, const MultiIndex& n, const EvalPoint& x) {
  require(alpha.dim() == n.dim() && alpha.dim() == x.dim(),
          "hermite_laguerre_multi: dimension mismatch");
  double prod = 1.0;
  for (int i = 0; i < alpha.dim(); ++i) {
    const auto ii = static_cast<std::size_t>(i);
    prod *= hermite_laguerre(alpha.values[ii], n.entries[ii], x.coords[ii]);
  }
  return prod;
}

double hermite_laguerre_dx(double alpha, int k, double u) {
  require(alpha == -0.5 || alpha >= 0.5,
          "hermite_laguerre_dx: requires alpha in {-1/2} union [1/2, inf)");
  require(k >= 0, "hermite_laguerre_dx: requires k >= 0");
  require(u > 0.0, "hermite_laguerre_dx: requires u > 0");
  const double lower =
      k == 0 ? 0.0 : -2.0 * std::sqrt(static_cast<double>(k)) * hermite_laguerre(alpha + 1.0, k - 1, u);
  return lower + ((2.0 * alpha + 1.0) / (2.0 * u) - u) * hermite_laguerre(alpha, k, u);
}

double asymptotic_phi(double beta, int k, double u) {
  require(beta >= -0.5, "asymptotic_phi: requires beta >= -1/2");
  require(k >= 1, "asymptotic_phi: requires k >= 1");
  const double kk = static_cast<double>(k);
  return std::pow(M_PI, -0.5) * std::pow(kk, -0.25) *
         std::cos(2.0 * std::sqrt(kk) * u - M_PI * (2.0 * beta + 1.0) / 4.0);
}

double nu_scale(double alpha, int k) {
  return std::max(4.0 * k + 2.0 * alpha + 2.0, 2.0);
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::small: return "small";
    case Regime::flat: return "flat";
    case Regime::turning: return "turning";
    case Regime::tail: return "tail";
  }
  return "?";
}

Envelope envelope(double alpha, int k, double u, double C, double tail_gamma) {
  require(alpha >= -0.5, "envelope: requires alpha >= -1/2");
  require(k >= 0, "envelope: requires k >= 0");
  require(u > 0.0, "envelope: requires u > 0");
  require(C > 0.0 && tail_gamma > 0.0, "envelope: requires C > 0 and gamma > 0");
  const double nu = nu_scale(alpha, k);
  Envelope env;
  env.nu = nu;
  if (u <= 1.0 / std::sqrt(nu)) {
    env.regime = Regime::small;
    env.bound = C * std::pow(u, alpha + 0.5) * std::pow(nu, 0.5 * alpha);
  } else if (u <= std::sqrt(0.5 * nu)) {
    env.regime = Regime::flat;
    env.bound = C * std::pow(nu, -0.25);
  } else if (u <= std::sqrt(1.5 * nu)) {
    env.regime = Regime::turning;
    env.bound = C * std::sqrt(u) *
                std::pow(nu * (std::cbrt(nu) + std::abs(u * u - nu)), -0.25);
  } else {
    env.regime = Regime::tail;
    env.bound = C * std::sqrt(u) * std::exp(-tail_gamma * u * u);
  }
  return env;
}

}  // namespace laghardy
