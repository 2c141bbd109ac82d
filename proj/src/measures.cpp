#include "perron/measures.hpp"

#include <algorithm>
#include <cmath>

namespace perron {

namespace {

double closed_form_measure(const SpectralReport& rep, const Word& w) {
    const int pm1 = rep.spec.p - 1;
    int ix = rep.adjacency.index_of(w.prefix(pm1));
    int iy = rep.adjacency.index_of(w.suffix(pm1));
    if (ix < 0 || iy < 0)
        throw_numeric("NumericFailure", "allowed word has prefix/suffix outside the label set");
    // u_x v_y / (theta^n (1+r')) = u_x v_y / (theta^{n-p+1} * normalization)
    return rep.u[static_cast<size_t>(ix)] * rep.v[static_cast<size_t>(iy)] /
           (std::pow(rep.theta, w.size() - rep.spec.p + 1) * *rep.normalization);
}

double measure_rec(const SpectralReport& rep, const Word& w) {
    if (w.size() >= rep.spec.p) return closed_form_measure(rep, w);
    double total = 0.0;
    for (Symbol b = 0; b < rep.spec.q; ++b) {
        Word ext = w.append(b);
        if (!contains_forbidden(rep.spec, ext)) total += measure_rec(rep, ext);
    }
    return total;
}

}  // namespace

double parry_measure(const SpectralReport& report, const Word& w) {
    for (int i = 0; i < w.size(); ++i)
        if (w[i] < 0 || w[i] >= report.spec.q)
            throw_invalid("SymbolOutOfRange", "cylinder word uses a symbol outside the alphabet");
    if (w.empty()) return 1.0;
    if (contains_forbidden(report.spec, w)) return 0.0;
    if (!report.graph.irreducible)
        throw_assumption("NotIrreducible", "the Parry measure requires an irreducible shift");
    if (report.theta <= 1.0 + 1e-9)
        throw_assumption("EntropyNotPositive", "the Parry measure requires theta > 1");
    if (!report.normalization)
        throw_assumption("EntropyNotPositive", "normalization factor unavailable");
    return measure_rec(report, w);
}

EscapeRate escape_rate(const ShiftSpec& spec, const std::vector<Word>& hole, const Tolerances& tol) {
    if (hole.empty()) throw_invalid("EmptyHole", "escape rate needs at least one hole word");
    for (const Word& g : hole) {
        if (g.size() < 1) throw_invalid("EmptyHole", "empty hole word");
        for (int i = 0; i < g.size(); ++i)
            if (g[i] < 0 || g[i] >= spec.q)
                throw_invalid("SymbolOutOfRange", "hole word uses a symbol outside the alphabet");
        if (contains_forbidden(spec, g))
            throw_invalid("HoleWordForbidden", "hole word \"" + g.str() + "\" is not allowed in the shift");
    }
    for (size_t i = 0; i < hole.size(); ++i)
        for (size_t j = 0; j < hole.size(); ++j)
            if (i != j && hole[i] == hole[j])
                throw_invalid("DuplicateHoleWord", "duplicate hole word \"" + hole[i].str() + "\"");

    // Union collection, re-reduced: a hole word subsumes any word containing
    // it as a factor (from either set).  Hole words of length one would make
    // the union collection invalid, so they are rejected up front.
    std::vector<Word> keep;
    for (const Word& g : hole) {
        if (g.size() == 1)
            throw_invalid("LengthOneForbiddenWord",
                          "hole word \"" + g.str() + "\" has length one; remove the symbol instead");
        bool subsumed = false;
        for (const Word& g2 : hole)
            if (!(g2 == g) && g.contains_factor(g2)) { subsumed = true; break; }
        if (!subsumed) keep.push_back(g);
    }
    std::vector<Word> unioned;
    for (const Word& a : spec.forbidden) {
        bool drop = false;
        for (const Word& g : keep)
            if (a.contains_factor(g)) { drop = true; break; }
        if (!drop) unioned.push_back(a);
    }
    unioned.insert(unioned.end(), keep.begin(), keep.end());

    EscapeRate out{};
    out.theta = perron_root(spec, tol);
    ShiftSpec uspec = validate_spec(spec.q, std::move(unioned));
    try {
        out.lambda = perron_root(uspec, tol);
    } catch (const Error& e) {
        if (e.code() == "EmptyShift")
            throw_assumption("HoleEmptiesShift", "removing the hole leaves no sequence in the shift");
        throw;
    }
    out.rate = std::log(out.theta / out.lambda);
    return out;
}

namespace {

// Minimal period of the periodic tail cycle^inf: the smallest divisor d of
// |cycle| such that cycle is (cycle prefix of length d) repeated.
int minimal_cycle_period(const Word& c) {
    for (int d = 1; d <= c.size(); ++d) {
        if (c.size() % d != 0) continue;
        bool ok = true;
        for (int i = d; i < c.size() && ok; ++i)
            if (c[i] != c[i - d]) ok = false;
        if (ok) return d;
    }
    return c.size();
}

// First n symbols of preperiod . cycle^inf (cycle required).
Word point_prefix(const EventuallyPeriodicPoint& a, int n) {
    std::vector<Symbol> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < a.preperiod.size() && static_cast<int>(out.size()) < n; ++i)
        out.push_back(a.preperiod[i]);
    if (a.cycle) {
        int i = 0;
        while (static_cast<int>(out.size()) < n) {
            out.push_back((*a.cycle)[i]);
            i = (i + 1) % a.cycle->size();
        }
    }
    if (static_cast<int>(out.size()) < n)
        throw_invalid("PointNotInShift", "point description is shorter than the requested prefix");
    return Word(std::move(out));
}

void check_point_in_shift(const SpectralReport& rep, const EventuallyPeriodicPoint& a) {
    if (a.cycle && a.cycle->empty())
        throw_invalid("PointNotInShift", "empty cycle word");
    int span = a.preperiod.size();
    if (a.cycle) span += a.cycle->size() * (1 + (rep.spec.p + a.cycle->size() - 1) / a.cycle->size());
    if (span == 0) throw_invalid("PointNotInShift", "empty point description");
    Word probe = point_prefix(a, span);
    for (int i = 0; i < probe.size(); ++i)
        if (probe[i] < 0 || probe[i] >= rep.spec.q)
            throw_invalid("PointNotInShift", "point uses a symbol outside the alphabet");
    if (contains_forbidden(rep.spec, probe))
        throw_invalid("PointNotInShift", "point contains a forbidden factor");
}

}  // namespace

LocalEscapeRate local_escape_rate(const SpectralReport& report, const EventuallyPeriodicPoint& alpha) {
    check_point_in_shift(report, alpha);
    if (report.theta <= 1.0 + 1e-9)
        throw_assumption("EntropyNotPositive", "local escape rate requires theta > 1");
    LocalEscapeRate out;
    if (alpha.cycle) {
        int m = minimal_cycle_period(*alpha.cycle);
        // purely periodic iff the preperiod already follows the m-cycle
        Word ref = point_prefix(alpha, alpha.preperiod.size() + m);
        bool purely = true;
        for (int i = 0; i < alpha.preperiod.size(); ++i)
            if (ref[i] != ref[i + m]) { purely = false; break; }
        if (purely) {
            out.periodic = true;
            out.period = m;
            out.rho = 1.0 - std::pow(report.theta, -m);
            out.g_theta = 1.0 / out.rho;
            return out;
        }
    }
    out.periodic = false;
    out.rho = 1.0;
    out.g_theta = 1.0;
    return out;
}

std::vector<double> local_escape_convergence(const SpectralReport& report,
                                             const EventuallyPeriodicPoint& alpha, int n_max) {
    check_point_in_shift(report, alpha);
    if (!alpha.cycle && alpha.preperiod.size() < n_max)
        throw_invalid("PointNotInShift", "prefix description shorter than n_max");
    Word w = point_prefix(alpha, n_max);
    const long double theta = report.theta;
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        // t_n = theta^{-n+1} (w^n, w^n)_theta = sum over matching offsets l
        // of theta^{-l}; the l = 0 term is always 1.
        long double t = 0.0L;
        for (int l = 0; l < n; ++l) {
            bool match = true;
            for (int k = 0; k < n - l; ++k)
                if (w[l + k] != w[k]) { match = false; break; }
            if (match) t += std::pow(theta, static_cast<long double>(-l));
        }
        out.push_back(static_cast<double>(t));
    }
    return out;
}

double path_count_asymptotics(const SpectralReport& report, const Word& x, const Word& y) {
    if (!report.graph.primitive)
        throw_assumption("NotPrimitive", "path-count asymptotics require a primitive shift");
    if (report.theta <= 1.0 + 1e-9 || !report.normalization)
        throw_assumption("EntropyNotPositive", "path-count asymptotics require theta > 1");
    int ix = report.adjacency.index_of(x);
    int iy = report.adjacency.index_of(y);
    if (ix < 0 || iy < 0)
        throw_invalid("WordForbidden", "endpoint is not an allowed (p-1)-word");
    // v_x u_y / (theta^{2p-2} (1+r')) = v_x u_y / (theta^{p-1} normalization)
    return report.v[static_cast<size_t>(ix)] * report.u[static_cast<size_t>(iy)] /
           (std::pow(report.theta, report.spec.p - 1) * *report.normalization);
}

}  // namespace perron
