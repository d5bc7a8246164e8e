#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "common.hpp"

namespace laghardy {

namespace {

// Reference rule on (-1,1). Newton iteration on P_n with the usual Chebyshev
// starting guesses; accurate to ~2 ulp for n up to 10^4.
struct ReferenceRule {
  std::vector<double> x, w;
};

ReferenceRule compute_reference(int n) {
  ReferenceRule r;
  r.x.resize(static_cast<std::size_t>(n));
  r.w.resize(static_cast<std::size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    double z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    r.x[static_cast<std::size_t>(i - 1)] = -z;
    r.x[static_cast<std::size_t>(n - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    r.w[static_cast<std::size_t>(i - 1)] = w;
    r.w[static_cast<std::size_t>(n - i)] = w;
  }
  return r;
}

const ReferenceRule& reference(int n) {
  static std::map<int, ReferenceRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_reference(n)).first;
  return it->second;
}

}  // namespace

QuadratureRule gauss_legendre(int npts, double a, double b) {
  if (npts < 1 || npts > 10000)
    throw std::domain_error("gauss_legendre: npts must be in [1, 10^4]");
  if (!(a < b)) throw std::domain_error("gauss_legendre: requires a < b");
  const ReferenceRule& ref = reference(npts);
  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(static_cast<std::size_t>(npts));
  rule.weights.resize(static_cast<std::size_t>(npts));
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < npts; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    rule.nodes[ii] = mid + half * ref.x[ii];
    rule.weights[ii] = half * ref.w[ii];
  }
  return rule;
}

double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges, int npts) {
  if (edges.size() < 2) throw std::domain_error("integrate_panels: need >= 2 edges");
  const ReferenceRule& ref = reference(npts);
  KahanSum total;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    if (!(b > a)) continue;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < ref.x.size(); ++i)
      total += half * ref.w[i] * f(mid + half * ref.x[i]);
  }
  return total;
}

double integrate_uniform(const std::function<double(double)>& f, double a, double b,
                         int npanels, int npts) {
  std::vector<double> edges(static_cast<std::size_t>(npanels) + 1);
  for (int i = 0; i <= npanels; ++i)
    edges[static_cast<std::size_t>(i)] = a + (b - a) * i / npanels;
  return integrate_panels(f, edges, npts);
}

double integrate_halfline(const std::function<double(double)>& f, double sigma,
                          double tol) {
  if (!(sigma > 0.0) || !(tol > 0.0))
    throw std::domain_error("integrate_halfline: requires sigma > 0 and tol > 0");
  // exp(-s^2/2) < tol/(safety margin) at the cutoff
  const double s = std::sqrt(2.0 * std::log(1.0 / tol)) + 3.0;
  const double U = sigma * s;
  constexpr int kPts = 32;
  int npanels = std::max(4, static_cast<int>(std::ceil(U / sigma)));
  double prev = integrate_uniform(f, 0.0, U, npanels, kPts);
  for (int round = 0; round < 12; ++round) {
    npanels *= 2;
    const double cur = integrate_uniform(f, 0.0, U, npanels, kPts);
    if (std::abs(cur - prev) < tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw budget_error("integrate_halfline: did not converge within the panel cap");
}

}  // namespace laghardy
