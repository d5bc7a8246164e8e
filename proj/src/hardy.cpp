#include "hardy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "common.hpp"
#include "kernel.hpp"
#include "quadrature.hpp"

namespace laghardy {

namespace {

std::vector<std::size_t> dyadic_fit_window(int nmax) {
  std::vector<std::size_t> out;
  for (double n = 100.0; n <= nmax; n *= 1.25)
    out.push_back(static_cast<std::size_t>(std::llround(n)));
  if (out.empty() || out.back() != static_cast<std::size_t>(nmax))
    out.push_back(static_cast<std::size_t>(nmax));
  return out;
}

void attach_diagnostics(HardySumReport& rep, int nmax) {
  rep.final_value = rep.shell_sums.back();
  rep.cauchy_tail = rep.shell_sums.back() -
                    rep.shell_sums[static_cast<std::size_t>(nmax / 2)];
  if (nmax >= 200) {
    std::vector<double> lx, ly;
    for (std::size_t n : dyadic_fit_window(nmax)) {
      lx.push_back(std::log(static_cast<double>(n)));
      ly.push_back(rep.shell_sums[n]);
    }
    const LinearFit fit = fit_line(lx, ly);
    rep.log_fit_slope = fit.slope;
    rep.log_fit_r2 = fit.r_squared;
  }
}

}  // namespace

HardySumReport hardy_sum(const CoefficientTable& coeffs, double beta) {
  if (!(beta > 0.0)) throw std::domain_error("hardy_sum: requires beta > 0");
  HardySumReport rep;
  rep.beta = beta;
  rep.shell_sums.reserve(static_cast<std::size_t>(coeffs.nmax) + 1);
  KahanSum acc;
  if (coeffs.dim() == 1) {
    for (int k = 0; k <= coeffs.nmax; ++k) {
      acc += std::abs(coeffs.values[static_cast<std::size_t>(k)]) /
             std::pow(k + 1.0, beta);
      rep.shell_sums.push_back(acc);
    }
  } else if (coeffs.dim() == 2) {
    for (int s = 0; s <= coeffs.nmax; ++s) {
      KahanSum shell;
      for (int n1 = 0; n1 <= s; ++n1)
        shell += std::abs(coeffs.values[coeffs.index_of(n1, s - n1)]);
      acc += static_cast<double>(shell) / std::pow(s + 1.0, beta);
      rep.shell_sums.push_back(acc);
    }
  } else {
    throw std::domain_error("hardy_sum: d <= 2 only");
  }
  attach_diagnostics(rep, coeffs.nmax);
  return rep;
}

namespace {

// distinct interval ids along a coordinate, plus each cell's interval index
struct IntervalIndex {
  std::vector<std::pair<double, double>> intervals;
  std::vector<std::size_t> cell_to_interval;
};

IntervalIndex index_intervals(const Atom& a, int coord) {
  IntervalIndex ix;
  std::map<std::pair<double, double>, std::size_t> seen;
  for (const auto& c : a.cells) {
    const auto key = std::make_pair(c.lo[static_cast<std::size_t>(coord)],
                                    c.hi[static_cast<std::size_t>(coord)]);
    auto it = seen.find(key);
    if (it == seen.end()) {
      it = seen.emplace(key, ix.intervals.size()).first;
      ix.intervals.push_back(key);
    }
    ix.cell_to_interval.push_back(it->second);
  }
  return ix;
}

}  // namespace

CoefficientTable atom_coefficients(const Atom& a, const AlphaIndex& alpha, int nmax) {
  if (alpha.dim() != a.dim) throw std::domain_error("atom_coefficients: dimension mismatch");
  if (a.dim == 1) {
    Integrand1D f{[&a](double u) { return a(std::span<const double>(&u, 1)); },
                  a.breakpoints(0), 0.0};
    return coefficients_up_to(f, alpha.values[0], nmax, a.l2_norm_squared());
  }

  // d = 2: tensorize over the distinct x/y intervals
  const IntervalIndex ix = index_intervals(a, 0);
  const IntervalIndex iy = index_intervals(a, 1);
  const std::size_t ni = ix.intervals.size(), nj = iy.intervals.size();
  const std::size_t ncoef = static_cast<std::size_t>(nmax) + 1;

  std::vector<std::vector<double>> m1(ni), m2(nj);
  parallel_for(ni + nj, [&](std::size_t t) {
    if (t < ni)
      m1[t] = interval_phi_integrals(alpha.values[0], ix.intervals[t].first,
                                     ix.intervals[t].second, nmax);
    else
      m2[t - ni] = interval_phi_integrals(alpha.values[1], iy.intervals[t - ni].first,
                                          iy.intervals[t - ni].second, nmax);
  });

  // cell weights aggregated per interval pair
  std::vector<double> w(ni * nj, 0.0);
  for (std::size_t c = 0; c < a.cells.size(); ++c)
    w[ix.cell_to_interval[c] * nj + iy.cell_to_interval[c]] += a.cells[c].value;

  // t[i][n2] = sum_j w[i][j] m2[j][n2]
  std::vector<std::vector<double>> t(ni, std::vector<double>(ncoef, 0.0));
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j) {
      const double wij = w[i * nj + j];
      if (wij == 0.0) continue;
      for (std::size_t n2 = 0; n2 < ncoef; ++n2) t[i][n2] += wij * m2[j][n2];
    }

  CoefficientTable table{alpha};
  table.nmax = nmax;
  table.values.assign((ncoef * (ncoef + 1)) / 2, 0.0);
  for (int s = 0; s <= nmax; ++s)
    for (int n1 = 0; n1 <= s; ++n1) {
      const int n2 = s - n1;
      KahanSum acc;
      for (std::size_t i = 0; i < ni; ++i)
        acc += m1[i][static_cast<std::size_t>(n1)] * t[i][static_cast<std::size_t>(n2)];
      table.values[table.index_of(n1, n2)] = acc;
    }
  table.bessel_defect = a.l2_norm_squared() - table.sum_of_squares();
  return table;
}

namespace {

// ---- r-integral internals ----------------------------------------------

// per-shell sum of squared coefficients, so the spectral F is O(nmax)
std::vector<double> shell_squares(const CoefficientTable& t) {
  std::vector<double> out(static_cast<std::size_t>(t.nmax) + 1, 0.0);
  if (t.dim() == 1) {
    for (int k = 0; k <= t.nmax; ++k)
      out[static_cast<std::size_t>(k)] =
          t.values[static_cast<std::size_t>(k)] * t.values[static_cast<std::size_t>(k)];
  } else {
    for (int s = 0; s <= t.nmax; ++s) {
      KahanSum acc;
      for (int n1 = 0; n1 <= s; ++n1) {
        const double c = t.values[t.index_of(n1, s - n1)];
        acc += c * c;
      }
      out[static_cast<std::size_t>(s)] = acc;
    }
  }
  return out;
}

double spectral_norm(const std::vector<double>& shell_sq, double r) {
  KahanSum acc;
  double r2s = 1.0;
  const double r2 = r * r;
  for (double cs : shell_sq) {
    acc += r2s * cs;
    r2s *= r2;
  }
  return std::sqrt(std::max(0.0, static_cast<double>(acc)));
}

// composite panel edges covering [a,b], width <= cap
std::vector<double> width_capped_edges(double a, double b, double cap) {
  const int parts = std::clamp(static_cast<int>(std::ceil((b - a) / cap)), 1, 4096);
  std::vector<double> e(static_cast<std::size_t>(parts) + 1);
  for (int p = 0; p <= parts; ++p) e[static_cast<std::size_t>(p)] = a + (b - a) * p / parts;
  return e;
}

// ||R_r a||^2 = (a, R_{r^2} a): banded double integral over the support,
// d = 1. `rule` is a unit Gauss rule on (0,1).
double physical_norm_sq_1d(const Atom& a, double alpha, double r,
                           const QuadratureRule& rule) {
  const SmoothingParam rho(r * r);
  const double w = std::sqrt(rho.one_minus_r / (1.0 + rho.r));
  const double band = 14.0 * w;
  KahanSum total;
  for (const auto& outer : a.cells) {
    const auto oe = width_capped_edges(outer.lo[0], outer.hi[0], 2.5 * w);
    for (std::size_t p = 0; p + 1 < oe.size(); ++p) {
      const double h = oe[p + 1] - oe[p];
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = oe[p] + h * rule.nodes[i];
        const double wy = h * rule.weights[i] * outer.value;
        KahanSum inner;
        for (const auto& in : a.cells) {
          const double lo = std::max(in.lo[0], y - band);
          const double hi = std::min(in.hi[0], y + band);
          if (hi <= lo) continue;
          const auto ie = width_capped_edges(lo, hi, 2.5 * w);
          for (std::size_t q = 0; q + 1 < ie.size(); ++q) {
            const double h2 = ie[q + 1] - ie[q];
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
              const double yp = ie[q] + h2 * rule.nodes[j];
              inner += h2 * rule.weights[j] * in.value * kernel_closed(alpha, rho, y, yp);
            }
          }
        }
        total += wy * static_cast<double>(inner);
      }
    }
  }
  return total;
}

// double integral of R_{rho} over an interval pair (1-D factor of the d = 2
// case), banded the same way
double pair_integral(double alpha, const SmoothingParam& rho, double w,
                     std::pair<double, double> I, std::pair<double, double> J,
                     const QuadratureRule& rule) {
  const double band = 14.0 * w;
  if (J.first - I.second > band || I.first - J.second > band) return 0.0;
  KahanSum total;
  const auto oe = width_capped_edges(I.first, I.second, 2.5 * w);
  for (std::size_t p = 0; p + 1 < oe.size(); ++p) {
    const double h = oe[p + 1] - oe[p];
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double y = oe[p] + h * rule.nodes[i];
      const double lo = std::max(J.first, y - band);
      const double hi = std::min(J.second, y + band);
      if (hi <= lo) continue;
      KahanSum inner;
      const auto ie = width_capped_edges(lo, hi, 2.5 * w);
      for (std::size_t q = 0; q + 1 < ie.size(); ++q) {
        const double h2 = ie[q + 1] - ie[q];
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
          inner += h2 * rule.weights[j] * kernel_closed(alpha, rho, y, ie[q] + h2 * rule.nodes[j]);
      }
      total += h * rule.weights[i] * static_cast<double>(inner);
    }
  }
  return total;
}

double physical_norm_sq_2d(const Atom& a, const AlphaIndex& alpha, double r,
                           const IntervalIndex& ix, const IntervalIndex& iy,
                           const std::vector<double>& wij,
                           const QuadratureRule& rule) {
  const SmoothingParam rho(r * r);
  const double w = std::sqrt(rho.one_minus_r / (1.0 + rho.r));
  const std::size_t ni = ix.intervals.size(), nj = iy.intervals.size();
  std::vector<double> wx(ni * ni), wy(nj * nj);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t k = 0; k < ni; ++k)
      wx[i * ni + k] =
          pair_integral(alpha.values[0], rho, w, ix.intervals[i], ix.intervals[k], rule);
  for (std::size_t j = 0; j < nj; ++j)
    for (std::size_t k = 0; k < nj; ++k)
      wy[j * nj + k] =
          pair_integral(alpha.values[1], rho, w, iy.intervals[j], iy.intervals[k], rule);
  // F^2 = sum_{I,J,I',J'} w_{IJ} w_{I'J'} Wx_{II'} Wy_{JJ'}
  std::vector<double> b(ni * nj, 0.0);  // b_{I',J} = sum_{J'} w_{I'J'} Wy_{J J'}
  for (std::size_t ip = 0; ip < ni; ++ip)
    for (std::size_t j = 0; j < nj; ++j) {
      KahanSum acc;
      for (std::size_t jp = 0; jp < nj; ++jp) acc += wij[ip * nj + jp] * wy[j * nj + jp];
      b[ip * nj + j] = acc;
    }
  KahanSum total;
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j) {
      if (wij[i * nj + j] == 0.0) continue;
      KahanSum acc;
      for (std::size_t ip = 0; ip < ni; ++ip) acc += wx[i * ni + ip] * b[ip * nj + j];
      total += wij[i * nj + j] * static_cast<double>(acc);
    }
  return total;
}

}  // namespace

RIntegralResult atom_r_integral(const Atom& a, const AlphaIndex& alpha,
                                const RIntegralOptions& opts) {
  if (!alpha.hermite_class())
    throw std::domain_error("atom_r_integral: alpha must be in the {-1/2} union [1/2,inf) class");
  if (alpha.dim() != a.dim) throw std::domain_error("atom_r_integral: dimension mismatch");

  const int nmax_spec = opts.spectral_nmax > 0 ? opts.spectral_nmax : (a.dim == 1 ? 2000 : 200);
  const CoefficientTable table = atom_coefficients(a, alpha, nmax_spec);
  const std::vector<double> shell_sq = shell_squares(table);

  // cell-resolution scale drives the mesh depth
  double cellmin = std::numeric_limits<double>::infinity();
  for (const auto& c : a.cells)
    for (int i = 0; i < a.dim; ++i)
      cellmin = std::min(cellmin, c.hi[static_cast<std::size_t>(i)] - c.lo[static_cast<std::size_t>(i)]);
  int levels = opts.levels;
  if (levels == 0) {
    if (a.dim == 1)
      levels = std::clamp(static_cast<int>(std::ceil(std::log2(96.0 / cellmin))), 12, 46);
    else
      levels = std::clamp(static_cast<int>(std::ceil(std::log2(1.0 / std::max(cellmin / 8.0, 0.012)))), 5, 10);
  }

  const IntervalIndex ix = a.dim == 2 ? index_intervals(a, 0) : IntervalIndex{};
  const IntervalIndex iy = a.dim == 2 ? index_intervals(a, 1) : IntervalIndex{};
  std::vector<double> wij;
  if (a.dim == 2) {
    wij.assign(ix.intervals.size() * iy.intervals.size(), 0.0);
    for (std::size_t c = 0; c < a.cells.size(); ++c)
      wij[ix.cell_to_interval[c] * iy.intervals.size() + iy.cell_to_interval[c]] +=
          a.cells[c].value;
  }
  const QuadratureRule unit_rule = gauss_legendre(10, 0.0, 1.0);

  auto F = [&](double s) {
    const double r = 1.0 - s * s;
    if (r <= opts.spectral_rmax) return spectral_norm(shell_sq, r);
    const double f2 = a.dim == 1 ? physical_norm_sq_1d(a, alpha.values[0], r, unit_rule)
                                 : physical_norm_sq_2d(a, alpha, r, ix, iy, wij, unit_rule);
    return std::sqrt(std::max(0.0, f2));
  };

  // 2 int_0^1 F(s) s^{(d-2)/2} ds on geometric panels, deepest level first so
  // the Kahan accumulation picks up the small contributions first
  const double spow = 0.5 * (a.dim - 2);
  const QuadratureRule level_rule = gauss_legendre(opts.points, 0.0, 1.0);
  std::vector<double> level_vals(static_cast<std::size_t>(levels));
  parallel_for(static_cast<std::size_t>(levels), [&](std::size_t j) {
    const double lo = std::pow(2.0, -static_cast<double>(j) - 1.0);
    const double hi = 2.0 * lo;
    KahanSum acc;
    for (std::size_t i = 0; i < level_rule.nodes.size(); ++i) {
      const double s = lo + (hi - lo) * level_rule.nodes[i];
      acc += (hi - lo) * level_rule.weights[i] * 2.0 * F(s) * std::pow(s, spow);
    }
    level_vals[j] = acc;
  });

  RIntegralResult res;
  res.levels = levels;
  res.points = opts.points;
  KahanSum total;
  for (int j = levels - 1; j >= 0; --j) total += level_vals[static_cast<std::size_t>(j)];

  const double eps = std::pow(2.0, -static_cast<double>(levels));
  const double f_eps = F(eps);
  const double l2 = a.l2_norm();
  if (a.dim == 1) {
    res.stub_value = 2.0 * (l2 + f_eps) * std::sqrt(eps);
    res.stub_half_width = 2.0 * std::abs(l2 - f_eps) * std::sqrt(eps);
  } else {
    res.stub_value = (l2 + f_eps) * eps;
    res.stub_half_width = std::abs(l2 - f_eps) * eps;
  }
  total += res.stub_value;
  res.value = total;
  return res;
}

std::pair<double, double> beta_identity_check(int n_abs, int d) {
  if (n_abs < 0 || d < 1) throw std::domain_error("beta_identity_check: bad arguments");
  // substitute 1-r = s^4: I = int_0^1 4 (1-s^4)^{2n} s^{3d-1} ds, regular at
  // both ends; geometric panels toward s = 0 where r^{2n} concentrates
  const double n2 = 2.0 * n_abs;
  const auto f = [&](double s) {
    const double s4 = s * s * s * s;
    const double rpow = n2 == 0.0 ? 1.0 : std::exp(n2 * std::log1p(-s4));
    return 4.0 * rpow * std::pow(s, 3.0 * d - 1.0);
  };
  KahanSum total;
  const QuadratureRule rule = gauss_legendre(16, 0.0, 1.0);
  for (int j = 20; j >= 0; --j) {
    const double hi = std::pow(2.0, -static_cast<double>(j));
    const double lo = j == 20 ? 0.0 : 0.5 * hi;
    KahanSum acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double s = lo + (hi - lo) * rule.nodes[i];
      acc += (hi - lo) * rule.weights[i] * f(s);
    }
    total += static_cast<double>(acc);
  }
  const double I = total;
  return {I, I * std::pow(n_abs + 1.0, 0.75 * d)};
}

PhiSumScanReport uniform_phi_sum_scan(double alpha, double eps,
                                      const std::vector<double>& u_grid, int kmax) {
  if (!(alpha >= -0.5)) throw std::domain_error("uniform_phi_sum_scan: requires alpha >= -1/2");
  if (!(eps >= 0.0)) throw std::domain_error("uniform_phi_sum_scan: requires eps >= 0");
  if (kmax < 2) throw std::domain_error("uniform_phi_sum_scan: requires kmax >= 2");
  PhiSumScanReport rep;
  rep.alpha = alpha;
  rep.eps = eps;
  rep.kmax = kmax;
  rep.points.resize(u_grid.size());
  parallel_for(u_grid.size(), [&](std::size_t i) {
    std::vector<double> phi(static_cast<std::size_t>(kmax) + 1);
    hermite_laguerre_seq(alpha, u_grid[i], kmax, phi);
    KahanSum acc;
    double half = 0.0;
    for (int k = 1; k <= kmax; ++k) {
      acc += std::abs(phi[static_cast<std::size_t>(k)]) / std::pow(k, 0.75 + eps);
      if (k == kmax / 2) half = acc;
    }
    rep.points[i] = {u_grid[i], acc, static_cast<double>(acc) - half};
  });
  for (const auto& p : rep.points) {
    if (p.sum > rep.grid_max) {
      rep.grid_max = p.sum;
      rep.grid_max_u = p.u;
    }
    rep.worst_tail = std::max(rep.worst_tail, p.tail);
  }
  return rep;
}

}  // namespace laghardy
