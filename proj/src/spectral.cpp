#include "perron/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "perron/roots.hpp"

namespace perron {

IntPolynomial correlation_polynomial(const Word& x, const Word& y) {
    if (x.empty() || y.empty())
        throw_invalid("EmptyWord", "correlation polynomial of an empty word");
    const int p1 = x.size(), p2 = y.size();
    std::vector<BigInt> coeffs(static_cast<size_t>(p1), BigInt(0));
    for (int l = 0; l < p1; ++l) {
        const int len = std::min(p1 - l, p2);
        bool match = true;
        for (int k = 0; k < len; ++k)
            if (x[l + k] != y[k]) { match = false; break; }
        if (match) coeffs[static_cast<size_t>(p1 - 1 - l)] = 1;
    }
    return IntPolynomial(std::move(coeffs));
}

namespace {

// Beyond this size a z I + C system goes through the characteristic
// polynomial route; below it the generic adjugate is instant and the two
// paths cross-check each other in the tests.
constexpr int kPencilThreshold = 8;

}  // namespace

CorrelationSystem correlation_system(const ShiftSpec& spec) {
    if (spec.full_shift())
        throw_assumption("FullShift", "the full shift has no correlation system; use closed forms");
    CorrelationSystem sys;
    sys.s = spec.s();
    sys.M = PolyMatrix(sys.s);
    for (int i = 0; i < sys.s; ++i)
        for (int j = 0; j < sys.s; ++j)
            sys.M.at(i, j) = correlation_polynomial(spec.forbidden[static_cast<size_t>(j)],
                                                    spec.forbidden[static_cast<size_t>(i)]);
    auto pencil = sys.s > kPencilThreshold ? as_pencil(sys.M) : std::nullopt;
    if (pencil) {
        PencilSums ps = pencil_adjugate_sums(*pencil);
        sys.D = std::move(ps.det);
        sys.S = std::move(ps.entry_sum);
        sys.rowsums = std::move(ps.rowsums);
        sys.colsums = std::move(ps.colsums);
    } else {
        sys.D = polymatrix_determinant(sys.M);
        PolyMatrix adj = polymatrix_adjugate(sys.M);
        sys.rowsums.assign(static_cast<size_t>(sys.s), IntPolynomial());
        sys.colsums.assign(static_cast<size_t>(sys.s), IntPolynomial());
        for (int i = 0; i < sys.s; ++i)
            for (int j = 0; j < sys.s; ++j) {
                sys.rowsums[static_cast<size_t>(i)] = sys.rowsums[static_cast<size_t>(i)] + adj.at(i, j);
                sys.colsums[static_cast<size_t>(j)] = sys.colsums[static_cast<size_t>(j)] + adj.at(i, j);
            }
        for (const auto& rs : sys.rowsums) sys.S = sys.S + rs;
        IntPolynomial check;
        for (const auto& cs : sys.colsums) check = check + cs;
        if (check != sys.S)
            throw_numeric("NumericFailure", "adjugate row/column sums disagree");
    }
    sys.r = reduce(RationalFn{sys.S, sys.D});
    return sys;
}

double rational_limit_at(const IntPolynomial& num, const IntPolynomial& den, double x0,
                         const Tolerances& tol) {
    if (den.is_zero()) throw_numeric("ZeroDenominator", "limit of a fraction with zero denominator");
    if (num.is_zero()) return 0.0;
    IntPolynomial g = int_poly_gcd(num, den);
    RealCoeffs a = to_real(divide_exact(num, g));
    RealCoeffs b = to_real(divide_exact(den, g));
    const long double x = x0;
    const long double ts = tol.singular;
    int budget = static_cast<int>(b.size());
    while (true) {
        long double bv = eval_real(b, x);
        long double bscale = std::max(eval_real_abs(b, x), 1.0L);
        if (std::abs(bv) > ts * bscale) return static_cast<double>(eval_real(a, x) / bv);
        long double av = eval_real(a, x);
        long double ascale = std::max(eval_real_abs(a, x), 1.0L);
        if (std::abs(av) > ts * ascale || a.size() <= 1 || b.size() <= 1 || budget-- <= 0)
            throw_numeric("LimitUndefined", "limit does not exist at the requested point");
        a = deflate_at(a, x, ts);
        b = deflate_at(b, x, ts);
    }
}

double rational_derivative_at(const RationalFn& r, double x0, const Tolerances& tol) {
    IntPolynomial n = r.num, d = r.den;
    IntPolynomial num = n.derivative() * d - n * d.derivative();
    return rational_limit_at(num, d * d, x0, tol);
}

double perron_root_of_system(const CorrelationSystem& sys, int q, const Tolerances& tol) {
    IntPolynomial zq({-static_cast<long long>(q), 1});
    IntPolynomial P = zq * sys.D + sys.S;
    IntPolynomial G = int_poly_gcd(P, sys.D);
    IntPolynomial reduced = divide_exact(P, G);
    int tz = reduced.trailing_zeros();
    if (tz > 0) reduced = reduced.shift_down(tz);
    if (reduced.degree() < 1)
        throw_assumption("EmptyShift", "the characteristic equation has no root away from zero");
    // exact square-free part: repeated roots (reducible shifts) defeat
    // floating-point Newton, simple roots polish to full precision
    if (reduced.degree() >= 2) {
        IntPolynomial sq = int_poly_gcd(reduced, reduced.derivative());
        if (sq.degree() >= 1) reduced = divide_exact(reduced, sq);
    }
    std::vector<std::complex<double>> roots = all_roots(reduced, tol.root);
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        return a.real() > b.real();
    });
    const std::complex<double> cand = roots.front();
    const double mod = std::abs(cand);
    if (mod < 1.0 - 1e-6)
        throw_assumption("EmptyShift", "dominant root below 1; the shift contains no sequence");
    if (std::abs(cand.imag()) > 1e-8 * mod || cand.real() <= 0.0)
        throw_numeric("NoRealDominantRoot", "largest-modulus root is not real positive");
    double theta = polish_real_root(reduced, cand.real());
    if (theta < 1.0 - 1e-6)
        throw_assumption("EmptyShift", "dominant root below 1; the shift contains no sequence");
    return theta;
}

double perron_root(const ShiftSpec& spec, const Tolerances& tol) {
    if (spec.full_shift()) return static_cast<double>(spec.q);
    return perron_root_of_system(correlation_system(spec), spec.q, tol);
}

std::pair<std::vector<double>, std::vector<double>> row_col_limits(const CorrelationSystem& sys,
                                                                   double theta,
                                                                   const Tolerances& tol) {
    std::vector<double> rlim(static_cast<size_t>(sys.s)), clim(static_cast<size_t>(sys.s));
    for (int i = 0; i < sys.s; ++i) {
        rlim[static_cast<size_t>(i)] = rational_limit_at(sys.rowsums[static_cast<size_t>(i)], sys.D, theta, tol);
        clim[static_cast<size_t>(i)] = rational_limit_at(sys.colsums[static_cast<size_t>(i)], sys.D, theta, tol);
    }
    return {rlim, clim};
}

std::pair<std::vector<double>, std::vector<double>> eigenvectors_from_limits(
    const ShiftSpec& spec, const std::vector<double>& rlim, const std::vector<double>& clim,
    double theta, const std::vector<Word>& labels) {
    std::vector<double> u(labels.size()), v(labels.size());
    for (size_t k = 0; k < labels.size(); ++k) {
        const Word& x = labels[k];
        long double us = 0.0L, vs = 0.0L;
        for (int i = 0; i < spec.s(); ++i) {
            const Word& a = spec.forbidden[static_cast<size_t>(i)];
            us += rlim[static_cast<size_t>(i)] *
                  correlation_polynomial(a.drop_first(), x).eval(static_cast<long double>(theta));
            vs += clim[static_cast<size_t>(i)] *
                  correlation_polynomial(x, a).eval(static_cast<long double>(theta));
        }
        u[k] = static_cast<double>(1.0L - us);
        v[k] = static_cast<double>(1.0L - vs);
    }
    return {u, v};
}

std::pair<std::vector<double>, std::vector<double>> eigenvectors(const ShiftSpec& spec,
                                                                 const CorrelationSystem& sys,
                                                                 double theta,
                                                                 const std::vector<Word>& labels,
                                                                 const Tolerances& tol) {
    auto [rlim, clim] = row_col_limits(sys, theta, tol);
    return eigenvectors_from_limits(spec, rlim, clim, theta, labels);
}

double normalization_factor(const CorrelationSystem& sys, double theta, int p, bool irreducible,
                            const Tolerances& tol) {
    if (!irreducible)
        throw_assumption("NotIrreducible", "normalization factor requires an irreducible shift");
    if (theta <= 1.0 + 1e-9)
        throw_assumption("EntropyNotPositive", "normalization factor requires theta > 1");
    double rp = rational_derivative_at(sys.r, theta, tol);
    double value = std::pow(theta, p - 1) * (1.0 + rp);
    if (!(value > 0.0))
        throw_numeric("NumericFailure", "normalization factor came out non-positive");
    return value;
}

std::vector<BigInt> adjacency_power_entry_sums(const AdjacencyMatrix& adj, int kmax) {
    const int L = adj.size();
    std::vector<BigInt> x(static_cast<size_t>(L), BigInt(1));
    std::vector<BigInt> sums;
    sums.reserve(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        BigInt s = 0;
        for (const auto& xi : x) s += xi;
        sums.push_back(s);
        if (k == kmax) break;
        std::vector<BigInt> nx(static_cast<size_t>(L), BigInt(0));
        for (int i = 0; i < L; ++i) {
            BigInt acc = 0;
            for (int j = 0; j < L; ++j)
                if (adj.entries[static_cast<size_t>(i)][static_cast<size_t>(j)]) acc += x[static_cast<size_t>(j)];
            nx[static_cast<size_t>(i)] = std::move(acc);
        }
        x = std::move(nx);
    }
    return sums;
}

std::vector<BigInt> adjacency_power_entry(const AdjacencyMatrix& adj, int x0, int y0, int kmax) {
    const int L = adj.size();
    std::vector<BigInt> x(static_cast<size_t>(L), BigInt(0));
    x[static_cast<size_t>(y0)] = 1;  // x_k = A^k e_y; entry = e_x . x_k
    std::vector<BigInt> vals;
    vals.reserve(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        vals.push_back(x[static_cast<size_t>(x0)]);
        if (k == kmax) break;
        std::vector<BigInt> nx(static_cast<size_t>(L), BigInt(0));
        for (int i = 0; i < L; ++i) {
            BigInt acc = 0;
            for (int j = 0; j < L; ++j)
                if (adj.entries[static_cast<size_t>(i)][static_cast<size_t>(j)]) acc += x[static_cast<size_t>(j)];
            nx[static_cast<size_t>(i)] = std::move(acc);
        }
        x = std::move(nx);
    }
    return vals;
}

std::vector<BigInt> count_series(const ShiftSpec& spec, int n_max) {
    if (n_max < 0) throw_invalid("ParseError", "count_series requires n_max >= 0");
    std::vector<BigInt> f(static_cast<size_t>(n_max) + 1, BigInt(0));
    for (int n = 0; n <= std::min(n_max, spec.p - 2); ++n)
        f[static_cast<size_t>(n)] = static_cast<long long>(enumerate_allowed_words(spec, n).size());
    if (n_max >= spec.p - 1) {
        AdjacencyMatrix adj = build_adjacency(spec);
        std::vector<BigInt> sums = adjacency_power_entry_sums(adj, n_max - (spec.p - 1));
        for (int n = spec.p - 1; n <= n_max; ++n)
            f[static_cast<size_t>(n)] = sums[static_cast<size_t>(n - (spec.p - 1))];
    }
    return f;
}

namespace {

// Coefficients c_0..c_kmax of the expansion num/P = sum c_k z^{-k}
// (P monic, deg num < deg P), by the exact linear recurrence
// c_k = num_{d-k} - sum_{j>=1} P_{d-j} c_{k-j}.
std::vector<BigInt> series_coefficients(const IntPolynomial& num, const IntPolynomial& P, int kmax) {
    const int d = P.degree();
    std::vector<BigInt> c(static_cast<size_t>(kmax) + 1, BigInt(0));
    for (int k = 0; k <= kmax; ++k) {
        BigInt acc = num.coeff(d - k);
        for (int j = 1; j <= std::min(k, d); ++j)
            acc -= P.coeff(d - j) * c[static_cast<size_t>(k - j)];
        c[static_cast<size_t>(k)] = std::move(acc);
    }
    return c;
}

std::vector<std::vector<BigInt>> occurrence_series(const ShiftSpec& spec, int n_max, bool begin) {
    CorrelationSystem sys = correlation_system(spec);
    IntPolynomial P = IntPolynomial({-static_cast<long long>(spec.q), 1}) * sys.D + sys.S;
    std::vector<std::vector<BigInt>> out;
    out.reserve(static_cast<size_t>(sys.s));
    for (int i = 0; i < sys.s; ++i)
        out.push_back(series_coefficients(begin ? sys.colsums[static_cast<size_t>(i)]
                                                : sys.rowsums[static_cast<size_t>(i)],
                                          P, n_max));
    return out;
}

}  // namespace

std::vector<std::vector<BigInt>> end_count_series(const ShiftSpec& spec, int n_max) {
    return occurrence_series(spec, n_max, /*begin=*/false);
}

std::vector<std::vector<BigInt>> begin_count_series(const ShiftSpec& spec, int n_max) {
    return occurrence_series(spec, n_max, /*begin=*/true);
}

SpectralReport analyze(const ShiftSpec& spec, const Tolerances& tol) {
    SpectralReport rep;
    rep.spec = spec;
    rep.adjacency = build_adjacency(spec);
    rep.graph = analyze_graph(rep.adjacency);
    if (spec.full_shift()) {
        rep.theta = static_cast<double>(spec.q);
        rep.u.assign(rep.adjacency.labels.size(), 1.0);
        rep.v.assign(rep.adjacency.labels.size(), 1.0);
        rep.r = RationalFn{IntPolynomial(), IntPolynomial::constant(1)};
        rep.one_plus_rprime = 1.0;
        rep.normalization = static_cast<double>(spec.q);
        rep.normalization_status = "ok";
        rep.entropy = std::log(rep.theta);
        return rep;
    }
    CorrelationSystem sys = correlation_system(spec);
    rep.theta = perron_root_of_system(sys, spec.q, tol);
    rep.entropy = std::log(rep.theta);
    auto [rlim, clim] = row_col_limits(sys, rep.theta, tol);
    rep.R = rlim;
    rep.C = clim;
    auto uv = eigenvectors_from_limits(spec, rlim, clim, rep.theta, rep.adjacency.labels);
    rep.u = std::move(uv.first);
    rep.v = std::move(uv.second);
    rep.r = sys.r;
    if (rep.theta <= 1.0 + 1e-9) {
        rep.normalization_status = "entropy-not-positive";
        return rep;
    }
    if (rep.graph.irreducible) {
        rep.one_plus_rprime = 1.0 + rational_derivative_at(sys.r, rep.theta, tol);
        rep.normalization = normalization_factor(sys, rep.theta, spec.p, true, tol);
        rep.normalization_status = "ok";
    } else {
        // best effort: the derivative may not exist for reducible shifts
        try {
            rep.one_plus_rprime = 1.0 + rational_derivative_at(sys.r, rep.theta, tol);
        } catch (const Error&) {
        }
        rep.normalization_status = "not-irreducible";
    }
    return rep;
}

}  // namespace perron
