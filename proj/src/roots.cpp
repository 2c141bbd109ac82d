#include "perron/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace perron {

namespace {

// Parlett-Reinsch balancing: similarity scaling by powers of 2 so row and
// column norms roughly agree.  Eigen's nonsymmetric solver does not balance,
// and companion matrices of polynomials with wide coefficient ranges need it.
void balance(Eigen::MatrixXd& a) {
    const int n = static_cast<int>(a.rows());
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            double s = c + r;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c >= r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if ((c + r) < 0.95 * s && f != 1.0) {
                converged = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

bool refine_newton(const IntPolynomial& p, std::complex<long double>& x) {
    for (int it = 0; it < 60; ++it) {
        std::complex<long double> v = p.eval(x);
        if (v == std::complex<long double>(0.0L, 0.0L)) return true;
        // derivative by Horner
        std::complex<long double> d = 0.0L;
        for (int k = p.degree(); k >= 1; --k)
            d = d * x + static_cast<long double>(k) *
                            p.coeff(k).convert_to<long double>();
        if (d == std::complex<long double>(0.0L, 0.0L)) return false;
        std::complex<long double> step = v / d;
        x -= step;
        if (std::abs(step) <= 1e-18L * std::max(std::abs(x), 1.0L)) return true;
    }
    return true;  // linear convergence at multiple roots still improves x
}

}  // namespace

std::vector<std::complex<double>> all_roots(const IntPolynomial& p_in, double tol) {
    if (p_in.degree() < 1) throw_numeric("NumericFailure", "all_roots requires degree >= 1");
    IntPolynomial p = p_in.primitive_part();
    std::vector<std::complex<double>> roots;
    int tz = p.trailing_zeros();
    if (tz > 0) {
        roots.assign(static_cast<size_t>(tz), std::complex<double>(0.0, 0.0));
        p = p.shift_down(tz);
    }
    const int d = p.degree();
    if (d >= 1) {
        // monic companion in double; coefficient ratios computed in extended
        // precision first so huge integer coefficients survive the conversion
        std::vector<double> ratio(static_cast<size_t>(d));
        long double lead = p.lead().convert_to<long double>();
        for (int k = 0; k < d; ++k) {
            long double q = p.coeff(k).convert_to<long double>() / lead;
            if (!std::isfinite(static_cast<double>(q)))
                throw_numeric("NumericFailure", "companion entries overflow double precision");
            ratio[static_cast<size_t>(k)] = static_cast<double>(q);
        }
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
        for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
        for (int k = 0; k < d; ++k) comp(k, d - 1) = -ratio[static_cast<size_t>(k)];
        balance(comp);
        Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
        if (es.info() != Eigen::Success)
            throw_numeric("NumericFailure", "companion eigenvalue iteration failed");
        for (int i = 0; i < d; ++i) {
            std::complex<long double> x(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
            refine_newton(p, x);
            roots.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
        }
    }
    for (const auto& r : roots) {
        std::complex<long double> x(r.real(), r.imag());
        long double resid = std::abs(p_in.eval(x));
        long double scale = std::max(p_in.eval_abs(static_cast<long double>(std::abs(r))), 1.0L);
        if (resid > static_cast<long double>(tol) * scale)
            throw_numeric("NumericFailure", "root residual policy unmet after refinement");
    }
    return roots;
}

double polish_real_root(const IntPolynomial& p, double x0) {
    long double x = x0;
    long double lo = 0.0L, hi = 0.0L;
    bool have_bracket = false;
    long double best = x;
    long double best_resid = std::abs(p.eval(x));
    for (int it = 0; it < 200; ++it) {
        long double v = p.eval(x);
        long double av = std::abs(v);
        if (av < best_resid) {
            best = x;
            best_resid = av;
        }
        long double dv = p.eval_derivative(x);
        if (dv != 0.0L) {
            // remember a sign change for the bisection fallback
            long double x1 = x - v / dv;
            long double v1 = p.eval(x1);
            if (v != 0.0L && v1 != 0.0L && ((v < 0) != (v1 < 0))) {
                lo = std::min(x, x1);
                hi = std::max(x, x1);
                have_bracket = true;
            }
            long double step = std::abs(x1 - x);
            x = x1;
            if (step <= 1e-17L * std::max(std::abs(x), 1.0L)) break;
        } else {
            break;
        }
    }
    long double scale = std::max(p.eval_abs(x), 1.0L);
    if (std::abs(p.eval(x)) <= 1e-14L * scale) return static_cast<double>(x);
    if (best_resid <= 1e-14L * std::max(p.eval_abs(best), 1.0L)) return static_cast<double>(best);
    if (have_bracket) {
        for (int it = 0; it < 200; ++it) {
            long double mid = 0.5L * (lo + hi);
            long double vm = p.eval(mid);
            if (vm == 0.0L || (hi - lo) <= 1e-18L * std::max(std::abs(mid), 1.0L))
                return static_cast<double>(mid);
            if ((vm < 0) == (p.eval(lo) < 0))
                lo = mid;
            else
                hi = mid;
        }
        long double mid = 0.5L * (lo + hi);
        if (std::abs(p.eval(mid)) <= 1e-12L * std::max(p.eval_abs(mid), 1.0L))
            return static_cast<double>(mid);
    }
    throw_numeric("NoConvergence", "Newton polishing did not converge near x0");
}

}  // namespace perron
