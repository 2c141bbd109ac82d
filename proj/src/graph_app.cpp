#include "perron/graph_app.hpp"

#include <cmath>

namespace perron {

SpectralReport digraph_perron(const DigraphInput& g, const Tolerances& tol) {
    if (g.n < 2) throw_invalid("EmptyAlphabet", "digraph needs at least 2 vertices");
    if (static_cast<int>(g.entries.size()) != g.n)
        throw_invalid("ParseError", "digraph matrix has the wrong number of rows");
    for (const auto& row : g.entries) {
        if (static_cast<int>(row.size()) != g.n)
            throw_invalid("ParseError", "digraph matrix is not square");
        for (int e : row)
            if (e != 0 && e != 1) throw_invalid("ParseError", "digraph entries must be 0 or 1");
    }
    for (int i = 0; i < g.n; ++i) {
        bool row_one = false, col_one = false;
        for (int j = 0; j < g.n; ++j) {
            row_one = row_one || g.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] == 1;
            col_one = col_one || g.entries[static_cast<size_t>(j)][static_cast<size_t>(i)] == 1;
        }
        if (!row_one || !col_one)
            throw_assumption("EmptyShift", "vertex " + std::to_string(i + 1) +
                                               " has an empty row or column; the shift is empty");
    }
    std::vector<Word> forbidden;
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (g.entries[static_cast<size_t>(x)][static_cast<size_t>(y)] == 0)
                forbidden.push_back(Word(std::vector<Symbol>{x, y}));
    ShiftSpec spec = validate_spec(g.n, std::move(forbidden));
    return analyze(spec, tol);
}

double path_count_estimate(const SpectralReport& report, int x, int y, int k) {
    if (!report.graph.primitive)
        throw_assumption("NotPrimitive", "path-count estimate requires a primitive matrix");
    if (report.theta <= 1.0 + 1e-9 || !report.one_plus_rprime)
        throw_assumption("EntropyNotPositive", "path-count estimate requires theta > 1");
    const int n = report.adjacency.size();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw_invalid("SymbolOutOfRange", "vertex index out of range");
    if (k < 1) throw_invalid("ParseError", "path length must be at least 1");
    return std::pow(report.theta, k - 1) * report.v[static_cast<size_t>(x)] *
           report.u[static_cast<size_t>(y)] / *report.one_plus_rprime;
}

}  // namespace perron
