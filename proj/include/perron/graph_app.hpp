#pragma once

#include <vector>

#include "perron/spectral.hpp"

namespace perron {

// Adjacency matrix of a directed graph with at most one edge per vertex
// pair.  Vertices are 0-indexed internally and 1-indexed in reports.
struct DigraphInput {
    int n = 0;
    std::vector<std::vector<int>> entries;
};

// Perron data of the digraph through the forbidden-2-word shift: alphabet
// {0..n-1} and forbidden set {xy | A_xy = 0}.  The labels of the resulting
// report are the n vertices in order.
SpectralReport digraph_perron(const DigraphInput& g, const Tolerances& tol = {});

// theta^{k-1} v_x u_y / (1 + r'(theta)): the asymptotic estimate of the
// number of k-step paths from x to y (0-indexed).  Requires primitivity and
// theta > 1.
double path_count_estimate(const SpectralReport& report, int x, int y, int k);

}  // namespace perron
