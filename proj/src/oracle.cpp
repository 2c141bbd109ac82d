#include "perron/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "perron/measures.hpp"

namespace perron {
namespace oracle {

long long default_budget() {
    if (const char* env = std::getenv("PERRON_SFT_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1LL << 14;
}

namespace {

// Aho-Corasick automaton over the forbidden words.  States are the trie
// prefixes; because the collection is reduced, at most one word can end at
// any position and accepting states are exactly the word-end nodes.
struct Matcher {
    int q = 0;
    std::vector<std::vector<int>> next;  // state x symbol -> state
    std::vector<int> accept;             // forbidden-word index or -1

    explicit Matcher(const ShiftSpec& spec) : q(spec.q) {
        next.push_back(std::vector<int>(static_cast<size_t>(q), -1));
        accept.push_back(-1);
        for (int i = 0; i < spec.s(); ++i) {
            const Word& a = spec.forbidden[static_cast<size_t>(i)];
            int st = 0;
            for (int k = 0; k < a.size(); ++k) {
                int& slot = next[static_cast<size_t>(st)][static_cast<size_t>(a[k])];
                if (slot < 0) {
                    slot = static_cast<int>(next.size());
                    next.push_back(std::vector<int>(static_cast<size_t>(q), -1));
                    accept.push_back(-1);
                }
                st = slot;
            }
            accept[static_cast<size_t>(st)] = i;
        }
        // breadth-first failure links folded into the transition table
        std::vector<int> fail(next.size(), 0);
        std::vector<int> queue;
        for (int b = 0; b < q; ++b) {
            int& slot = next[0][static_cast<size_t>(b)];
            if (slot < 0) {
                slot = 0;
            } else {
                fail[static_cast<size_t>(slot)] = 0;
                queue.push_back(slot);
            }
        }
        for (size_t head = 0; head < queue.size(); ++head) {
            int st = queue[head];
            for (int b = 0; b < q; ++b) {
                int& slot = next[static_cast<size_t>(st)][static_cast<size_t>(b)];
                int via = next[static_cast<size_t>(fail[static_cast<size_t>(st)])][static_cast<size_t>(b)];
                if (slot < 0) {
                    slot = via;
                } else {
                    fail[static_cast<size_t>(slot)] = via;
                    queue.push_back(slot);
                }
            }
        }
    }

    int walk(int state, Symbol b) const { return next[static_cast<size_t>(state)][static_cast<size_t>(b)]; }
};

long long checked_pow(long long q, int n, long long cap) {
    long long v = 1;
    for (int i = 0; i < n; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

}  // namespace

CountTables brute_force_counts(const ShiftSpec& spec, int n_max, long long budget) {
    if (n_max < 0) n_max = 0;
    if (checked_pow(spec.q, n_max, budget) > budget)
        throw_invalid("BudgetExceeded", "q^n_max exceeds the enumeration budget (" +
                                            std::to_string(budget) + "); raise PERRON_SFT_BUDGET");
    CountTables t;
    t.f.assign(static_cast<size_t>(n_max) + 1, BigInt(0));
    t.f_end.assign(static_cast<size_t>(spec.s()), t.f);
    t.g_begin.assign(static_cast<size_t>(spec.s()), t.f);
    t.f[0] = 1;

    Matcher m(spec);
    // depth-first over clean (occurrence-free) prefixes; a transition into an
    // accepting state is the unique new occurrence, ending at that position
    struct Frame { int state; int depth; };
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.depth >= n_max) continue;
        for (Symbol b = 0; b < spec.q; ++b) {
            int nx = m.walk(fr.state, b);
            int acc = m.accept[static_cast<size_t>(nx)];
            if (acc >= 0) {
                t.f_end[static_cast<size_t>(acc)][static_cast<size_t>(fr.depth) + 1] += 1;
            } else {
                t.f[static_cast<size_t>(fr.depth) + 1] += 1;
                stack.push_back({nx, fr.depth + 1});
            }
        }
    }
    // g_i: fix the prefix a_i, then walk only occurrence-free continuations
    for (int i = 0; i < spec.s(); ++i) {
        const Word& a = spec.forbidden[static_cast<size_t>(i)];
        if (a.size() > n_max) continue;
        int st = 0;
        for (int k = 0; k < a.size(); ++k) st = m.walk(st, a[k]);
        t.g_begin[static_cast<size_t>(i)][static_cast<size_t>(a.size())] = 1;
        stack.clear();
        stack.push_back({st, a.size()});
        while (!stack.empty()) {
            Frame fr = stack.back();
            stack.pop_back();
            if (fr.depth >= n_max) continue;
            for (Symbol b = 0; b < spec.q; ++b) {
                int nx = m.walk(fr.state, b);
                if (m.accept[static_cast<size_t>(nx)] >= 0) continue;
                t.g_begin[static_cast<size_t>(i)][static_cast<size_t>(fr.depth) + 1] += 1;
                stack.push_back({nx, fr.depth + 1});
            }
        }
    }
    return t;
}

namespace {

struct PowerResult {
    double rho = 0.0;
    std::vector<double> vec;
    bool converged = false;
};

// Power iteration for the spectral radius of a nonnegative matrix shifted by
// the identity; returns rho(A) and the dominant right vector of A.
PowerResult power_iteration(const std::vector<std::vector<int>>& a, bool transpose) {
    const int n = static_cast<int>(a.size());
    std::vector<double> x(static_cast<size_t>(n), 1.0);
    std::vector<double> y(static_cast<size_t>(n), 0.0);
    PowerResult out;
    double rho = 0.0;
    for (int it = 0; it < 200000; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = x[static_cast<size_t>(i)];  // identity shift
            for (int j = 0; j < n; ++j) {
                int e = transpose ? a[static_cast<size_t>(j)][static_cast<size_t>(i)]
                                  : a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (e) acc += x[static_cast<size_t>(j)];
            }
            y[static_cast<size_t>(i)] = acc;
        }
        double num = 0.0, den = 0.0, norm = 0.0;
        for (int i = 0; i < n; ++i) {
            num += x[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
            den += x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
            norm = std::max(norm, std::abs(y[static_cast<size_t>(i)]));
        }
        double next_rho = num / den;
        for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / norm;
        // residual of the shifted matrix at the current vector
        double resid = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = x[static_cast<size_t>(i)];
            for (int j = 0; j < n; ++j) {
                int e = transpose ? a[static_cast<size_t>(j)][static_cast<size_t>(i)]
                                  : a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (e) acc += x[static_cast<size_t>(j)];
            }
            resid = std::max(resid, std::abs(acc - next_rho * x[static_cast<size_t>(i)]));
        }
        bool settled = std::abs(next_rho - rho) <= 1e-12 * std::max(next_rho, 1.0);
        rho = next_rho;
        if (settled && resid <= 1e-12 * std::max(rho, 1.0)) {
            out.converged = true;
            break;
        }
    }
    out.rho = rho - 1.0;
    out.vec = x;
    return out;
}

std::vector<std::vector<int>> submatrix(const std::vector<std::vector<int>>& a,
                                        const std::vector<int>& verts) {
    std::vector<std::vector<int>> sub(verts.size(), std::vector<int>(verts.size(), 0));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j)
            sub[i][j] = a[static_cast<size_t>(verts[i])][static_cast<size_t>(verts[j])];
    return sub;
}

}  // namespace

DensePerron dense_perron(const std::vector<std::vector<int>>& entries) {
    DensePerron out;
    GraphAnalysis ga = analyze_graph(entries);
    out.irreducible = ga.irreducible;
    if (ga.irreducible) {
        PowerResult right = power_iteration(entries, false);
        PowerResult left = power_iteration(entries, true);
        if (!right.converged || !left.converged)
            throw_numeric("NoConvergence", "power iteration did not reach its tolerance");
        out.theta = right.rho;
        out.v = right.vec;
        out.u = left.vec;
        // positive and normalized with u.v = 1
        double dot = 0.0;
        for (size_t i = 0; i < out.u.size(); ++i) dot += out.u[i] * out.v[i];
        for (auto& ui : out.u) ui /= dot;
        return out;
    }
    // reducible: spectral radius is the max over strongly connected pieces
    const int n = static_cast<int>(entries.size());
    double best = 0.0;
    std::vector<int> comp(static_cast<size_t>(n), -1);
    {
        // label components by mutual reachability
        std::vector<std::vector<char>> reach(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
        for (int s = 0; s < n; ++s) {
            std::vector<int> stack{s};
            reach[static_cast<size_t>(s)][static_cast<size_t>(s)] = 1;
            while (!stack.empty()) {
                int vtx = stack.back();
                stack.pop_back();
                for (int w = 0; w < n; ++w)
                    if (entries[static_cast<size_t>(vtx)][static_cast<size_t>(w)] &&
                        !reach[static_cast<size_t>(s)][static_cast<size_t>(w)]) {
                        reach[static_cast<size_t>(s)][static_cast<size_t>(w)] = 1;
                        stack.push_back(w);
                    }
            }
        }
        int next_id = 0;
        for (int i = 0; i < n; ++i) {
            if (comp[static_cast<size_t>(i)] >= 0) continue;
            comp[static_cast<size_t>(i)] = next_id;
            for (int j = i + 1; j < n; ++j)
                if (reach[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                    reach[static_cast<size_t>(j)][static_cast<size_t>(i)])
                    comp[static_cast<size_t>(j)] = next_id;
            ++next_id;
        }
        for (int id = 0; id < next_id; ++id) {
            std::vector<int> verts;
            for (int i = 0; i < n; ++i)
                if (comp[static_cast<size_t>(i)] == id) verts.push_back(i);
            bool has_edge = false;
            for (int i : verts)
                for (int j : verts)
                    if (entries[static_cast<size_t>(i)][static_cast<size_t>(j)]) has_edge = true;
            if (!has_edge) continue;  // single transient vertex, radius 0
            PowerResult pr = power_iteration(submatrix(entries, verts), false);
            if (!pr.converged)
                throw_numeric("NoConvergence", "power iteration did not reach its tolerance");
            best = std::max(best, pr.rho);
        }
    }
    out.theta = best;
    return out;
}

DensePerron dense_perron(const AdjacencyMatrix& adj) { return dense_perron(adj.entries); }

double bordered_product(const ShiftSpec& spec, const CorrelationSystem& sys, double theta,
                        const Word& w, const Tolerances& tol) {
    if (w.size() < spec.p)
        throw_invalid("WordForbidden", "bordered product needs a word of length >= p");
    if (contains_forbidden(spec, w))
        throw_invalid("WordForbidden", "bordered product of a word with a forbidden factor");
    const int s = sys.s;
    PolyMatrix mw(s + 1);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) mw.at(i, j) = sys.M.at(i, j);
    for (int i = 0; i < s; ++i) {
        // bordered collection {a_1..a_s, w}: rightmost column (w, a_i),
        // bottom row (a_j, w)
        mw.at(i, s) = correlation_polynomial(w, spec.forbidden[static_cast<size_t>(i)]);
        mw.at(s, i) = correlation_polynomial(spec.forbidden[static_cast<size_t>(i)], w);
    }
    mw.at(s, s) = correlation_polynomial(w, w);
    IntPolynomial dw = polymatrix_determinant(mw);
    PolyMatrix adjw = polymatrix_adjugate(mw);
    IntPolynomial sw;
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= s; ++j) sw = sw + adjw.at(i, j);
    IntPolynomial numer = sys.D * sw - sys.S * dw;
    return rational_limit_at(numer, sys.D * sys.D, theta, tol);
}

double OracleReport::max_delta() const {
    double m = 0.0;
    for (const auto& d : discrepancies) m = std::max(m, std::abs(d.delta));
    return m;
}

namespace {

void check(OracleReport& rep, const std::string& name, double delta, double tolerance) {
    rep.checks_run.push_back(name);
    if (!(std::abs(delta) <= tolerance)) rep.discrepancies.push_back({name, delta, tolerance});
}

}  // namespace

OracleReport verify(const ShiftSpec& spec, long long budget, const Tolerances& tol) {
    OracleReport rep;
    SpectralReport sym = analyze(spec, tol);
    rep.theta = sym.theta;
    rep.irreducible = sym.graph.irreducible;

    DensePerron dense = dense_perron(sym.adjacency);
    rep.theta_hat = dense.theta;
    rep.u_hat = dense.u;
    rep.v_hat = dense.v;
    check(rep, "theta_vs_dense", sym.theta - dense.theta, 1e-8 * std::max(sym.theta, 1.0));

    if (sym.graph.irreducible) {
        // symbolic u, v must be scalar multiples of the dense pair
        auto proportional = [&](const std::vector<double>& a, const std::vector<double>& b) {
            double ratio = 0.0;
            for (size_t i = 0; i < a.size(); ++i)
                if (std::abs(b[i]) > 1e-300) { ratio = a[i] / b[i]; break; }
            double worst = 0.0;
            for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - ratio * b[i]));
            return worst / std::max(std::abs(ratio), 1e-300);
        };
        check(rep, "u_proportional_to_dense", proportional(sym.u, dense.u), 1e-7);
        check(rep, "v_proportional_to_dense", proportional(sym.v, dense.v), 1e-7);
        double positive = 1.0;
        for (double x : sym.u) positive = std::min(positive, x * (sym.u[0] > 0 ? 1.0 : -1.0));
        for (double x : sym.v) positive = std::min(positive, x * (sym.u[0] > 0 ? 1.0 : -1.0));
        check(rep, "eigenvector_positivity", positive > 0 ? 0.0 : 1.0, 0.5);
    } else {
        rep.checks_skipped.push_back("eigenvector_positivity (reducible)");
        rep.checks_skipped.push_back("u_proportional_to_dense (reducible)");
        rep.checks_skipped.push_back("v_proportional_to_dense (reducible)");
    }

    // eigen residuals against the adjacency matrix
    {
        const auto& A = sym.adjacency.entries;
        const int L = sym.adjacency.size();
        double rv = 0.0, ru = 0.0, nv = 0.0, nu = 0.0;
        for (int i = 0; i < L; ++i) {
            double av = 0.0, au = 0.0;
            for (int j = 0; j < L; ++j) {
                if (A[static_cast<size_t>(i)][static_cast<size_t>(j)]) av += sym.v[static_cast<size_t>(j)];
                if (A[static_cast<size_t>(j)][static_cast<size_t>(i)]) au += sym.u[static_cast<size_t>(j)];
            }
            rv = std::max(rv, std::abs(av - sym.theta * sym.v[static_cast<size_t>(i)]));
            ru = std::max(ru, std::abs(au - sym.theta * sym.u[static_cast<size_t>(i)]));
            nv = std::max(nv, std::abs(sym.v[static_cast<size_t>(i)]));
            nu = std::max(nu, std::abs(sym.u[static_cast<size_t>(i)]));
        }
        check(rep, "right_eigen_residual", rv, 1e-8 * std::max(nv, 1e-300));
        check(rep, "left_eigen_residual", ru, 1e-8 * std::max(nu, 1e-300));
    }

    // counting series against enumeration
    {
        int n_max = 0;
        long long space = 1;
        while (n_max < 12 && space * spec.q <= budget) {
            space *= spec.q;
            ++n_max;
        }
        rep.counts = brute_force_counts(spec, n_max, budget);
        std::vector<BigInt> f = count_series(spec, n_max);
        double worst = 0.0;
        for (int n = 0; n <= n_max; ++n)
            if (f[static_cast<size_t>(n)] != rep.counts.f[static_cast<size_t>(n)]) worst = 1.0;
        check(rep, "count_series_vs_enumeration", worst, 0.5);
        if (!spec.full_shift()) {
            auto fe = end_count_series(spec, n_max);
            auto gb = begin_count_series(spec, n_max);
            double mism = 0.0;
            for (int i = 0; i < spec.s(); ++i)
                for (int n = 0; n <= n_max; ++n) {
                    if (fe[static_cast<size_t>(i)][static_cast<size_t>(n)] !=
                        rep.counts.f_end[static_cast<size_t>(i)][static_cast<size_t>(n)])
                        mism = 1.0;
                    if (gb[static_cast<size_t>(i)][static_cast<size_t>(n)] !=
                        rep.counts.g_begin[static_cast<size_t>(i)][static_cast<size_t>(n)])
                        mism = 1.0;
                }
            check(rep, "occurrence_series_vs_enumeration", mism, 0.5);
            // recurrence f(n) = q f(n-1) - sum_i f_i(n)
            double rec = 0.0;
            for (int n = 1; n <= n_max; ++n) {
                BigInt rhs = BigInt(spec.q) * f[static_cast<size_t>(n - 1)];
                for (int i = 0; i < spec.s(); ++i) rhs -= fe[static_cast<size_t>(i)][static_cast<size_t>(n)];
                if (rhs != f[static_cast<size_t>(n)]) rec = 1.0;
            }
            check(rep, "count_recurrence", rec, 0.5);
        }
    }

    if (sym.graph.irreducible && sym.theta > 1.0 + 1e-9 && sym.normalization) {
        double dot = 0.0;
        for (size_t i = 0; i < sym.u.size(); ++i) dot += sym.u[i] * sym.v[i];
        check(rep, "normalization_identity", dot - *sym.normalization,
              1e-8 * std::abs(*sym.normalization));
        // measure additivity on short cylinders
        double worst = 0.0;
        std::vector<Word> base = enumerate_allowed_words(spec, std::min(spec.p, 3));
        for (const Word& w : base) {
            double mu = parry_measure(sym, w);
            double total = 0.0;
            for (Symbol b = 0; b < spec.q; ++b) total += parry_measure(sym, w.append(b));
            worst = std::max(worst, std::abs(mu - total));
        }
        check(rep, "measure_additivity", worst, 1e-10);
    } else {
        rep.checks_skipped.push_back("normalization_identity");
        rep.checks_skipped.push_back("measure_additivity");
    }
    return rep;
}

}  // namespace oracle
}  // namespace perron
