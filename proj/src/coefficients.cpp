#include "coefficients.hpp"

#include <cmath>
#include <stdexcept>

#include "common.hpp"
#include "quadrature.hpp"

namespace laghardy {

std::size_t CoefficientTable::index_of(int n1, int n2) const {
  if (dim() != 2) throw std::domain_error("CoefficientTable::index_of: d = 2 only");
  const int s = n1 + n2;
  if (n1 < 0 || n2 < 0 || s > nmax) throw std::domain_error("CoefficientTable: index out of range");
  // shells 0..s-1 hold 1+2+...+s entries; within shell s the order is n1 = 0..s
  return static_cast<std::size_t>(s) * (s + 1) / 2 + static_cast<std::size_t>(n1);
}

double CoefficientTable::sum_of_squares() const {
  KahanSum s;
  for (double c : values) s += c * c;
  return s;
}

namespace {

// Refine integrand edges so each panel holds at most ~2.5 periods of phi_kmax
// (local frequency 2 sqrt(nu)); 24-point Gauss per panel then resolves the
// oscillation to machine precision.
std::vector<double> oscillation_edges(const std::vector<double>& edges, double alpha,
                                      int kmax) {
  if (edges.size() < 2) throw std::domain_error("coefficients: integrand needs >= 2 edges");
  const double freq = 2.0 * std::sqrt(nu_scale(alpha, kmax));
  const double max_width = 2.5 * 2.0 * M_PI / freq;
  std::vector<double> refined{edges.front()};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i], b = edges[i + 1];
    if (!(b > a)) continue;
    const int parts = std::clamp(static_cast<int>(std::ceil((b - a) / max_width)), 1, 100000);
    for (int p = 1; p <= parts; ++p) refined.push_back(a + (b - a) * p / parts);
  }
  return refined;
}

}  // namespace

double coefficient(const Integrand1D& f, double alpha, int k) {
  if (f.gaussian_sigma != 0.0)
    throw std::domain_error("coefficient: only compactly supported integrands are implemented");
  const auto edges = oscillation_edges(f.edges, alpha, k);
  return integrate_panels(
      [&](double u) { return f.fn(u) * hermite_laguerre(alpha, k, u); }, edges, 24);
}

CoefficientTable coefficients_up_to(const Integrand1D& f, double alpha, int nmax,
                                    std::optional<double> l2_squared) {
  if (nmax < 0) throw std::domain_error("coefficients_up_to: requires nmax >= 0");
  if (f.gaussian_sigma != 0.0)
    throw std::domain_error("coefficients_up_to: only compactly supported integrands are implemented");
  const auto edges = oscillation_edges(f.edges, alpha, nmax);
  const QuadratureRule ref = gauss_legendre(24, 0.0, 1.0);

  // per-panel accumulation slots, reduced in panel order
  const std::size_t npanels = edges.size() - 1;
  const std::size_t ncoef = static_cast<std::size_t>(nmax) + 1;
  std::vector<std::vector<double>> slots(npanels);
  parallel_for(npanels, [&](std::size_t p) {
    std::vector<double> local(ncoef, 0.0);
    std::vector<double> phi(ncoef);
    const double a = edges[p], b = edges[p + 1];
    const double h = b - a;
    for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
      const double u = a + h * ref.nodes[i];
      const double wf = h * ref.weights[i] * f.fn(u);
      if (wf == 0.0) continue;
      hermite_laguerre_seq(alpha, u, nmax, phi);
      for (std::size_t k = 0; k < ncoef; ++k) local[k] += wf * phi[k];
    }
    slots[p] = std::move(local);
  });

  CoefficientTable table{AlphaIndex::scalar(alpha)};
  table.nmax = nmax;
  table.values.assign(ncoef, 0.0);
  std::vector<KahanSum> acc(ncoef);
  for (const auto& local : slots)
    for (std::size_t k = 0; k < ncoef; ++k) acc[k] += local[k];
  for (std::size_t k = 0; k < ncoef; ++k) table.values[k] = acc[k];

  if (l2_squared.has_value()) table.bessel_defect = *l2_squared - table.sum_of_squares();
  return table;
}

std::vector<double> interval_phi_integrals(double alpha, double a, double b, int nmax) {
  if (!(0.0 <= a && a < b)) throw std::domain_error("interval_phi_integrals: need 0 <= a < b");
  Integrand1D box{[](double) { return 1.0; }, {a, b}, 0.0};
  return coefficients_up_to(box, alpha, nmax).values;
}

}  // namespace laghardy
