#pragma once

#include <functional>
#include <vector>

namespace laghardy {

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, inside (a,b)
  std::vector<double> weights;  // positive, sum = b-a
  double a = 0.0, b = 0.0;
};

// Gauss-Legendre rule on (a,b); exact for polynomials of degree <= 2n-1.
// Reference nodes/weights per point count are computed once (Newton iteration
// on the Legendre recurrence) and cached.
QuadratureRule gauss_legendre(int npts, double a, double b);

// Composite integration of f over the panels [edges[0],edges[1]], ... with an
// npts Gauss rule per panel. Edges must be nondecreasing.
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges, int npts);

// Splits (a,b) into `npanels` equal panels.
double integrate_uniform(const std::function<double(double)>& f, double a, double b,
                         int npanels, int npts);

// int_0^inf f(u) du for f with Gaussian decay: |f(u)| <= M exp(-u^2/(2 sigma^2))
// eventually. Truncates where the decay hint certifies the tail is below tol
// and doubles the panel count until two successive estimates differ by less
// than tol * max(1, |I|). Throws budget_error on non-convergence.
double integrate_halfline(const std::function<double(double)>& f, double sigma,
                          double tol);

}  // namespace laghardy
