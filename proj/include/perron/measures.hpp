#pragma once

#include <optional>
#include <vector>

#include "perron/spectral.hpp"

namespace perron {

// A point of the shift given by a finite description: preperiod . cycle^inf.
// A missing cycle describes a point only known through its prefix, treated
// as non-periodic.
struct EventuallyPeriodicPoint {
    Word preperiod;
    std::optional<Word> cycle;
};

// Parry measure of the cylinder based at w.  Words of length >= p use the
// closed form u_x v_y / (theta^n (1 + r'(theta))); shorter words are summed
// over their one-symbol allowed extensions.  A word with a forbidden factor
// has measure exactly 0.
double parry_measure(const SpectralReport& report, const Word& w);

struct EscapeRate {
    double theta;   // entropy base of the original shift
    double lambda;  // entropy base of the shift avoiding the hole as well
    double rate;    // ln(theta / lambda)
};

// Escape rate into the union of cylinders based at the hole words: forbids
// the hole words in addition to the original collection, re-reduces, and
// compares entropies.
EscapeRate escape_rate(const ShiftSpec& spec, const std::vector<Word>& hole,
                       const Tolerances& tol = {});

struct LocalEscapeRate {
    bool periodic = false;   // purely periodic
    int period = 0;          // minimal period when periodic
    double rho = 1.0;        // 1 - theta^{-m} when periodic, else 1
    double g_theta = 1.0;    // 1 / rho
};

LocalEscapeRate local_escape_rate(const SpectralReport& report, const EventuallyPeriodicPoint& alpha);

// Diagnostic sequence t_n = theta^{-n+1} (w^n, w^n)_theta for the prefixes
// w^n of alpha; t_n converges to 1/rho(alpha).
std::vector<double> local_escape_convergence(const SpectralReport& report,
                                             const EventuallyPeriodicPoint& alpha, int n_max);

// Limit of f_{x,y}(n)/theta^n for allowed (p-1)-words x, y:
// v_x u_y / (theta^{2p-2} (1 + r'(theta))).  Requires a primitive shift
// with theta > 1.
double path_count_asymptotics(const SpectralReport& report, const Word& x, const Word& y);

}  // namespace perron
