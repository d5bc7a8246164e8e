#include "atom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "common.hpp"

namespace laghardy {

double AtomCell::measure(int dim) const {
  double m = hi[0] - lo[0];
  if (dim == 2) m *= hi[1] - lo[1];
  return m;
}

double Atom::sup_norm() const {
  double s = 0.0;
  for (const auto& c : cells) s = std::max(s, std::abs(c.value));
  return s;
}

double Atom::l1_norm() const {
  KahanSum s;
  for (const auto& c : cells) s += std::abs(c.value) * c.measure(dim);
  return s;
}

double Atom::l2_norm_squared() const {
  KahanSum s;
  for (const auto& c : cells) s += c.value * c.value * c.measure(dim);
  return s;
}

double Atom::l2_norm() const { return std::sqrt(l2_norm_squared()); }

double Atom::integral() const {
  KahanSum s;
  for (const auto& c : cells) s += c.value * c.measure(dim);
  return s;
}

double Atom::operator()(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(dim))
    throw std::domain_error("Atom: dimension mismatch");
  for (const auto& c : cells) {
    bool inside = true;
    for (int i = 0; i < dim; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      if (!(x[ii] >= c.lo[ii] && x[ii] < c.hi[ii])) {
        inside = false;
        break;
      }
    }
    if (inside) return c.value;
  }
  return 0.0;
}

std::vector<double> Atom::breakpoints(int coord) const {
  if (coord < 0 || coord >= dim) throw std::domain_error("Atom: bad coordinate");
  std::vector<double> edges;
  for (const auto& c : cells) {
    edges.push_back(c.lo[static_cast<std::size_t>(coord)]);
    edges.push_back(c.hi[static_cast<std::size_t>(coord)]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-15; }),
              edges.end());
  return edges;
}

std::pair<double, double> Atom::support(int coord) const {
  const auto e = breakpoints(coord);
  return {e.front(), e.back()};
}

std::string Atom::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["dim"] = dim;
  j["center"] = center;
  j["radius"] = radius;
  j["ball_measure"] = ball_measure;
  j["seed"] = seed;
  auto& arr = j["cells"] = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json jc;
    jc["lo"] = std::vector<double>(c.lo.begin(), c.lo.begin() + dim);
    jc["hi"] = std::vector<double>(c.hi.begin(), c.hi.begin() + dim);
    jc["value"] = c.value;
    arr.push_back(jc);
  }
  return j.dump(2);
}

Atom Atom::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Atom a;
  a.dim = j.at("dim").get<int>();
  a.center = j.at("center").get<std::vector<double>>();
  a.radius = j.at("radius").get<double>();
  a.ball_measure = j.at("ball_measure").get<double>();
  a.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& jc : j.at("cells")) {
    AtomCell c;
    const auto lo = jc.at("lo").get<std::vector<double>>();
    const auto hi = jc.at("hi").get<std::vector<double>>();
    for (std::size_t i = 0; i < lo.size(); ++i) {
      c.lo[i] = lo[i];
      c.hi[i] = hi[i];
    }
    c.value = jc.at("value").get<double>();
    a.cells.push_back(c);
  }
  return a;
}

namespace {

// Split the +/- groups so that sup|a| = 1/|B| exactly and the integral
// vanishes exactly: the larger-measure group gets the reduced value.
void balance_groups(std::vector<AtomCell>& cells, int dim,
                    const std::vector<bool>& plus, double inv_measure) {
  double area_p = 0.0, area_m = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i)
    (plus[i] ? area_p : area_m) += cells[i].measure(dim);
  if (area_p <= 0.0 || area_m <= 0.0)
    throw std::domain_error("make_atom: degenerate group split");
  const double vp = area_p >= area_m ? inv_measure * area_m / area_p : inv_measure;
  const double vm = area_p >= area_m ? inv_measure : inv_measure * area_p / area_m;
  for (std::size_t i = 0; i < cells.size(); ++i)
    cells[i].value = plus[i] ? vp : -vm;
}

Atom make_atom_1d(double center, double radius, std::uint64_t seed) {
  Atom a;
  a.dim = 1;
  a.center = {center};
  a.radius = radius;
  a.ball_measure = 2.0 * radius;
  a.seed = seed;
  const double lo = std::max(0.0, center - radius);
  const double hi = center + radius;
  if (!(hi > lo)) throw std::domain_error("make_atom: empty support");

  SplitMix64 rng(seed);
  const int ncells = seed == 0 ? 2 : 2 + static_cast<int>(rng.below(4));
  std::vector<double> edges{lo};
  if (seed == 0) {
    edges.push_back(0.5 * (lo + hi));
  } else {
    for (int i = 1; i < ncells; ++i)
      edges.push_back(lo + (hi - lo) * (i + 0.6 * (rng.uniform() - 0.5)) / ncells);
    std::sort(edges.begin(), edges.end());
  }
  edges.push_back(hi);

  std::vector<bool> plus;
  for (int i = 0; i < ncells; ++i)
    plus.push_back(seed == 0 ? (i == 0) : rng.uniform() < 0.5);
  // both groups must be nonempty
  if (std::find(plus.begin(), plus.end(), true) == plus.end()) plus[0] = true;
  if (std::find(plus.begin(), plus.end(), false) == plus.end()) plus.back() = false;

  for (int i = 0; i < ncells; ++i) {
    AtomCell c;
    c.lo[0] = edges[static_cast<std::size_t>(i)];
    c.hi[0] = edges[static_cast<std::size_t>(i) + 1];
    a.cells.push_back(c);
  }
  balance_groups(a.cells, 1, plus, 1.0 / a.ball_measure);
  return a;
}

Atom make_atom_2d(const std::vector<double>& center, double radius, std::uint64_t seed) {
  constexpr int kRes = 32;
  Atom a;
  a.dim = 2;
  a.center = center;
  a.radius = radius;
  a.ball_measure = M_PI * radius * radius;
  a.seed = seed;

  const double cx = center[0], cy = center[1];
  std::vector<std::pair<int, int>> idx;
  auto edge = [&](double c0, int i) { return c0 - radius + 2.0 * radius * i / kRes; };
  for (int i = 0; i < kRes; ++i) {
    for (int j = 0; j < kRes; ++j) {
      const double x0 = edge(cx, i), x1 = edge(cx, i + 1);
      const double y0 = edge(cy, j), y1 = edge(cy, j + 1);
      if (x0 <= 0.0 || y0 <= 0.0) continue;
      bool inside = true;
      for (double px : {x0, x1})
        for (double py : {y0, y1})
          if ((px - cx) * (px - cx) + (py - cy) * (py - cy) > radius * radius)
            inside = false;
      if (inside) idx.emplace_back(i, j);
    }
  }
  if (idx.size() < 2)
    throw std::domain_error("make_atom: ball does not meet the open quadrant at this resolution");
  std::sort(idx.begin(), idx.end());

  // contiguous split along the x index; the threshold position is seeded
  SplitMix64 rng(seed);
  const double q = 0.35 + 0.3 * rng.uniform();
  const std::size_t split = std::clamp<std::size_t>(
      static_cast<std::size_t>(q * static_cast<double>(idx.size())), 1, idx.size() - 1);
  const int ix_split = idx[split].first;

  std::vector<bool> plus;
  for (const auto& [i, j] : idx) plus.push_back(i <= ix_split);
  if (std::find(plus.begin(), plus.end(), false) == plus.end()) {
    // threshold swallowed everything (tiny cell counts); fall back to halves
    for (std::size_t i = 0; i < plus.size(); ++i) plus[i] = i < plus.size() / 2;
  }

  for (const auto& [i, j] : idx) {
    AtomCell c;
    c.lo = {edge(cx, i), edge(cy, j)};
    c.hi = {edge(cx, i + 1), edge(cy, j + 1)};
    a.cells.push_back(c);
  }
  balance_groups(a.cells, 2, plus, 1.0 / a.ball_measure);
  return a;
}

}  // namespace

Atom make_atom(int d, const std::vector<double>& center, double radius,
               std::uint64_t seed) {
  if (d != 1 && d != 2) throw std::domain_error("make_atom: d must be 1 or 2");
  if (center.size() != static_cast<std::size_t>(d))
    throw std::domain_error("make_atom: center dimension mismatch");
  for (double c : center)
    if (!(c > 0.0)) throw std::domain_error("make_atom: center must lie in the open quadrant");
  if (!(radius > 0.0)) throw std::domain_error("make_atom: radius must be > 0");
  return d == 1 ? make_atom_1d(center[0], radius, seed) : make_atom_2d(center, radius, seed);
}

}  // namespace laghardy
