#pragma once

#include <complex>
#include <vector>

#include "perron/poly.hpp"

namespace perron {

// All complex roots of p, with multiplicity, via balanced companion-matrix
// eigenvalues followed by Newton refinement.  Every returned root r
// satisfies |p(r)| <= tol * sum_k |c_k| |r|^k; otherwise NumericFailure.
std::vector<std::complex<double>> all_roots(const IntPolynomial& p, double tol = 1e-10);

// Newton iteration in extended precision from x0, bisection fallback when a
// bracket is available.  Throws NoConvergence when neither converges.
double polish_real_root(const IntPolynomial& p, double x0);

}  // namespace perron
