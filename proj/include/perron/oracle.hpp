#pragma once

#include <string>
#include <vector>

#include "perron/spectral.hpp"

namespace perron {
namespace oracle {

// Enumeration budget: the largest q^n the counting oracle will walk.
// Overridable through the PERRON_SFT_BUDGET environment variable.
long long default_budget();

struct CountTables {
    std::vector<BigInt> f;                  // allowed words per length
    std::vector<std::vector<BigInt>> f_end;    // single occurrence of a_i at the end
    std::vector<std::vector<BigInt>> g_begin;  // single occurrence of a_i at the beginning
};

// Exhaustive word enumeration (depth-first over clean prefixes, constant
// work per extension) with occurrence counting.  Shares nothing with the
// correlation-polynomial pipeline.
CountTables brute_force_counts(const ShiftSpec& spec, int n_max, long long budget = default_budget());

struct DensePerron {
    double theta = 0.0;
    std::vector<double> u, v;  // positive, normalized so u.v = 1 (irreducible input)
    bool irreducible = false;
};

// Power iteration on A + I (the identity shift makes every irreducible
// block aperiodic).  For reducible input the spectral radius is taken as
// the max over strongly connected components; the vectors are then not
// meaningful and are left empty.
DensePerron dense_perron(const AdjacencyMatrix& adj);
DensePerron dense_perron(const std::vector<std::vector<int>>& entries);

// lim_{z->theta} (D S_w - S D_w)/D^2 for the correlation system bordered by
// the allowed word w; equals u_x v_y for the first/last (p-1)-words of w.
double bordered_product(const ShiftSpec& spec, const CorrelationSystem& sys, double theta,
                        const Word& w, const Tolerances& tol = {});

struct Discrepancy {
    std::string check;
    double delta = 0.0;
    double tolerance = 0.0;
};

struct OracleReport {
    double theta = 0.0;       // symbolic pipeline value
    double theta_hat = 0.0;   // dense oracle value
    std::vector<double> u_hat, v_hat;
    CountTables counts;
    bool irreducible = false;
    std::vector<std::string> checks_run;
    std::vector<std::string> checks_skipped;
    std::vector<Discrepancy> discrepancies;  // failing checks only; empty <=> pass

    bool pass() const { return discrepancies.empty(); }
    double max_delta() const;
};

// Cross-checks the symbolic pipeline against enumeration and dense linear
// algebra: theta, eigenvector proportionality, count series, normalization
// identity, measure additivity.  Individual check failures are collected,
// not thrown.
OracleReport verify(const ShiftSpec& spec, long long budget = default_budget(),
                    const Tolerances& tol = {});

}  // namespace oracle
}  // namespace perron
