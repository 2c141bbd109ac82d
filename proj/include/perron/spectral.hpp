#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "perron/poly.hpp"
#include "perron/polymatrix.hpp"
#include "perron/words.hpp"

namespace perron {

// Correlation polynomial (x,y)_z = sum_l b_l z^{|x|-1-l}, where b_l = 1 iff
// the suffix of x starting at position l matches the prefix of y of the
// overlap length.  Coefficients are 0/1; degree <= |x|-1.
IntPolynomial correlation_polynomial(const Word& x, const Word& y);

struct Tolerances {
    double root = 1e-10;       // residual acceptance in root finding
    double singular = 1e-8;    // removable-singularity detection
};

// The exact data attached to a forbidden collection {a_1..a_s}:
// M(z) with entry (i,j) = (a_j, a_i)_z, its determinant D, the entry sum S
// of its adjugate, per-row and per-column adjugate sums (numerators of the
// row/column sums of M^{-1}), and the reduced ratio r = S/D.
struct CorrelationSystem {
    int s = 0;
    PolyMatrix M;
    IntPolynomial D;
    IntPolynomial S;
    std::vector<IntPolynomial> rowsums;
    std::vector<IntPolynomial> colsums;
    RationalFn r;
};

CorrelationSystem correlation_system(const ShiftSpec& spec);

// lim_{z->x0} num(z)/den(z): exact gcd cancellation first, then synthetic
// deflation of any residual shared root at x0.  Throws LimitUndefined when
// the limit diverges or the deflation budget runs out.
double rational_limit_at(const IntPolynomial& num, const IntPolynomial& den, double x0,
                         const Tolerances& tol = {});

// d/dz (num/den) at x0 on a reduced rational function, via the quotient rule
// with the same deflation fallback.
double rational_derivative_at(const RationalFn& r, double x0, const Tolerances& tol = {});

// Largest-modulus zero of (z-q) + r(z), computed from the exact polynomial
// (z-q) D(z) + S(z) with common factors of D cancelled and repeated roots
// stripped to their square-free part.  Returns q for the full shift.
double perron_root(const ShiftSpec& spec, const Tolerances& tol = {});
double perron_root_of_system(const CorrelationSystem& sys, int q, const Tolerances& tol = {});

// R_i(theta) and C_j(theta): limits of the row/column sums of M(z)^{-1}.
std::pair<std::vector<double>, std::vector<double>> row_col_limits(const CorrelationSystem& sys,
                                                                   double theta,
                                                                   const Tolerances& tol = {});

// u_x = 1 - sum_i R_i (a_i minus first symbol, x)_theta,
// v_x = 1 - sum_j C_j (x, a_j)_theta, over the given label words.
std::pair<std::vector<double>, std::vector<double>> eigenvectors_from_limits(
    const ShiftSpec& spec, const std::vector<double>& rlim, const std::vector<double>& clim,
    double theta, const std::vector<Word>& labels);
std::pair<std::vector<double>, std::vector<double>> eigenvectors(const ShiftSpec& spec,
                                                                 const CorrelationSystem& sys,
                                                                 double theta,
                                                                 const std::vector<Word>& labels,
                                                                 const Tolerances& tol = {});

// u^T v = theta^{p-1} (1 + r'(theta)); requires irreducibility and
// positive entropy (theta > 1).
double normalization_factor(const CorrelationSystem& sys, double theta, int p, bool irreducible,
                            const Tolerances& tol = {});

// f(0..n_max): the number of allowed words of each length, exactly.
std::vector<BigInt> count_series(const ShiftSpec& spec, int n_max);

// f_i(n): words whose only forbidden occurrence is a_i at the very end;
// g_i(n): the same with the occurrence at the very beginning.  Extracted
// from the exact series of rowsum_i / P and colsum_i / P where
// P = (z-q) D + S.
std::vector<std::vector<BigInt>> end_count_series(const ShiftSpec& spec, int n_max);
std::vector<std::vector<BigInt>> begin_count_series(const ShiftSpec& spec, int n_max);

struct SpectralReport {
    ShiftSpec spec;
    AdjacencyMatrix adjacency;
    GraphAnalysis graph;
    double theta = 0.0;
    double entropy = 0.0;
    std::vector<double> R, C;   // row/column limits, empty for the full shift
    std::vector<double> u, v;   // aligned with adjacency.labels
    RationalFn r;
    std::optional<double> one_plus_rprime;
    std::optional<double> normalization;
    std::string normalization_status;  // "ok" | "not-irreducible" | "entropy-not-positive"

    const std::vector<Word>& labels() const { return adjacency.labels; }
};

// Full pipeline: adjacency, graph flags, theta, limits, eigenvectors,
// normalization when defined.
SpectralReport analyze(const ShiftSpec& spec, const Tolerances& tol = {});

// Entry sums of exact powers: f(n) for n >= p-1 equals 1^T A^{n-p+1} 1.
std::vector<BigInt> adjacency_power_entry_sums(const AdjacencyMatrix& adj, int kmax);
// (A^k)_{xy} for k = 0..kmax.
std::vector<BigInt> adjacency_power_entry(const AdjacencyMatrix& adj, int x, int y, int kmax);

}  // namespace perron
