#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "special.hpp"

namespace laghardy {

// One-dimensional integrand with the structure the quadrature needs: the
// breakpoints (discontinuities and support ends, increasing) and an optional
// Gaussian decay scale past the last edge (0 = compactly supported).
struct Integrand1D {
  std::function<double(double)> fn;
  std::vector<double> edges;
  double gaussian_sigma = 0.0;
};

// Expansion coefficients <f, phi_n^a> for |n| up to nmax.
// d = 1: values[k] = <f, phi_k>.
// d = 2: values stored shell by shell, lexicographic within each shell; use
//        index_of(n1, n2).
struct CoefficientTable {
  AlphaIndex alpha;
  int nmax = 0;
  std::vector<double> values;
  // Bessel defect ||f||_2^2 - sum c_n^2, when the caller supplied ||f||_2^2.
  std::optional<double> bessel_defect;

  int dim() const { return alpha.dim(); }
  std::size_t index_of(int n1, int n2) const;  // d = 2 only
  double sum_of_squares() const;
};

// <f, phi_k^a> on the half line. Panels are the integrand's edges refined to
// the oscillation scale of phi_k.
double coefficient(const Integrand1D& f, double alpha, int k);

// All coefficients k <= nmax with one recurrence sweep per quadrature node
// (O(nmax) per node, not O(nmax^2)). If l2_squared is supplied, the Bessel
// defect is recorded.
CoefficientTable coefficients_up_to(const Integrand1D& f, double alpha, int nmax,
                                    std::optional<double> l2_squared = std::nullopt);

// int_a^b phi_k^alpha(u) du for all k <= nmax; the building block for
// tensorized coefficients of piecewise-constant functions in d = 2.
std::vector<double> interval_phi_integrals(double alpha, double a, double b, int nmax);

}  // namespace laghardy
