#include <doctest.h>

#include <cmath>
#include <random>

#include "perron/graph_app.hpp"
#include "perron/oracle.hpp"

using namespace perron;

namespace {
DigraphInput star(int n) {
    DigraphInput g;
    g.n = n;
    g.entries.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int j = 1; j < n; ++j) {
        g.entries[0][static_cast<size_t>(j)] = 1;
        g.entries[static_cast<size_t>(j)][0] = 1;
    }
    return g;
}
}  // namespace

TEST_CASE("digraph perron on the star graph") {
    SpectralReport rep = digraph_perron(star(5));
    CHECK(rep.theta == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.graph.irreducible);
    CHECK(rep.graph.period == 2);
    CHECK(rep.adjacency.size() == 5);
    // the 2-word construction's adjacency over 1-word labels is the graph itself
    CHECK(rep.adjacency.entries == star(5).entries);
}

TEST_CASE("digraph perron on the full graph and a swap") {
    DigraphInput ones;
    ones.n = 3;
    ones.entries = {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
    SpectralReport rep = digraph_perron(ones);
    CHECK(rep.theta == doctest::Approx(3.0).epsilon(1e-12));
    for (double x : rep.u) CHECK(x == doctest::Approx(1.0));
    for (double x : rep.v) CHECK(x == doctest::Approx(1.0));

    DigraphInput swap2;
    swap2.n = 2;
    swap2.entries = {{0, 1}, {1, 0}};
    SpectralReport r2 = digraph_perron(swap2);
    CHECK(r2.theta == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r2.graph.period == 2);
    CHECK(r2.u[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r2.u[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r2.v[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("digraph perron rejects empty rows") {
    DigraphInput g;
    g.n = 2;
    g.entries = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(digraph_perron(g), Error);
}

TEST_CASE("digraph theta equals the dense value on random irreducible graphs") {
    std::mt19937 rng(83);
    int done = 0;
    while (done < 25) {
        int n = 2 + static_cast<int>(rng() % 5);
        DigraphInput g;
        g.n = n;
        g.entries.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        for (auto& row : g.entries)
            for (auto& e : row) e = (rng() % 100 < 55) ? 1 : 0;
        if (!analyze_graph(g.entries).irreducible) continue;
        bool fullrows = true;
        for (int i = 0; i < n; ++i) {
            bool r = false, c = false;
            for (int j = 0; j < n; ++j) {
                r = r || g.entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
                c = c || g.entries[static_cast<size_t>(j)][static_cast<size_t>(i)];
            }
            fullrows = fullrows && r && c;
        }
        if (!fullrows) continue;
        SpectralReport rep = digraph_perron(g);
        double dense = oracle::dense_perron(g.entries).theta;
        CHECK(std::abs(rep.theta - dense) <= 1e-8 * std::max(dense, 1.0));

        // correlation-matrix structure for all-2-word collections:
        // diagonal z or z+1 (z+1 exactly for doubled symbols), off-diagonal 0/1
        if (!rep.spec.full_shift()) {
            CorrelationSystem sys = correlation_system(rep.spec);
            for (int i = 0; i < sys.s; ++i)
                for (int j = 0; j < sys.s; ++j) {
                    const IntPolynomial& e = sys.M.at(i, j);
                    if (i == j) {
                        const Word& a = rep.spec.forbidden[static_cast<size_t>(i)];
                        bool doubled = a[0] == a[1];
                        CHECK(e == (doubled ? IntPolynomial({1, 1}) : IntPolynomial({0, 1})));
                    } else {
                        CHECK((e.is_zero() || e == IntPolynomial({1})));
                    }
                }
        }
        ++done;
    }
}

TEST_CASE("path count estimate") {
    {
        // Perron data of the 3-vertex digraph with one missing edge
        DigraphInput g;
        g.n = 3;
        g.entries = {{1, 0, 1}, {1, 1, 1}, {1, 1, 1}};
        SpectralReport rep = digraph_perron(g);
        REQUIRE(rep.graph.primitive);
        std::vector<BigInt> exact = adjacency_power_entry(rep.adjacency, 2, 2, 40);
        double est = path_count_estimate(rep, 2, 2, 40);
        double ratio = est / exact[40].convert_to<double>();
        CHECK(std::abs(ratio - 1.0) <= 1e-3);
    }
    {
        // full graph: the estimate is exact for every k
        DigraphInput ones;
        ones.n = 4;
        ones.entries.assign(4, std::vector<int>(4, 1));
        SpectralReport rep = digraph_perron(ones);
        std::vector<BigInt> exact = adjacency_power_entry(rep.adjacency, 1, 2, 6);
        for (int k = 1; k <= 6; ++k) {
            double est = path_count_estimate(rep, 1, 2, k);
            CHECK(est == doctest::Approx(exact[static_cast<size_t>(k)].convert_to<double>())
                             .epsilon(1e-12));
        }
        CHECK(path_count_estimate(rep, 0, 0, 1) > 0.0);
    }
    {
        SpectralReport rep = digraph_perron(star(5));  // period 2: not primitive
        CHECK_THROWS_AS(path_count_estimate(rep, 0, 1, 5), Error);
    }
}
