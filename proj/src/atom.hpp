#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace laghardy {

// Axis-aligned cell with a constant value; d <= 2 (coordinate 1 unused when
// d = 1).
struct AtomCell {
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{0.0, 0.0};
  double value = 0.0;
  double measure(int dim) const;
};

// Mean-zero piecewise-constant function supported in (ball B) intersect R_+^d
// with sup |a| = |B|^{-1}. The profile is a two-group +/- pattern balanced to
// exact zero mean; |B| is always the measure of the full d-ball, also when the
// ball pokes out of the quadrant.
struct Atom {
  int dim = 1;
  std::vector<double> center;
  double radius = 0.0;
  double ball_measure = 0.0;
  std::uint64_t seed = 0;
  std::vector<AtomCell> cells;

  double sup_norm() const;
  double l1_norm() const;       // closed form from cells
  double l2_norm_squared() const;
  double l2_norm() const;
  double integral() const;      // ~0 up to rounding
  double operator()(std::span<const double> x) const;

  // cell edges along a coordinate (sorted, unique) - the quadrature
  // breakpoints
  std::vector<double> breakpoints(int coord) const;
  // support bounds along a coordinate
  std::pair<double, double> support(int coord) const;

  std::string to_json() const;
  static Atom from_json(const std::string& text);
};

// Builds a seeded atom. d = 1: the support interval is split into a seeded
// number of cells (seed 0 gives the canonical two equal halves). d = 2: the
// 32x32 grid cells of the bounding square that lie fully inside the disk and
// the open quadrant, split into two contiguous groups. Throws
// std::domain_error when the geometry is infeasible.
Atom make_atom(int d, const std::vector<double>& center, double radius,
               std::uint64_t seed);

}  // namespace laghardy
