#include "perron/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace perron {

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
    c_.reserve(ascending.size());
    for (long long v : ascending) c_.emplace_back(v);
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { normalize(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) {
    IntPolynomial p;
    if (c != 0) p.c_ = {c};
    return p;
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int k) {
    IntPolynomial p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, BigInt(0));
        p.c_.back() = c;
    }
    return p;
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPolynomial::coeff(int k) const {
    static const BigInt kZero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

int IntPolynomial::trailing_zeros() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[static_cast<size_t>(k)] == 0) ++k;
    return is_zero() ? 0 : k;
}

IntPolynomial IntPolynomial::shift_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (trailing_zeros() < k) throw_numeric("NumericFailure", "shift_down would drop nonzero coefficients");
    return IntPolynomial(std::vector<BigInt>(c_.begin() + k, c_.end()));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const BigInt& k) const {
    if (k == 0) return IntPolynomial();
    std::vector<BigInt> r = c_;
    for (auto& c : r) c *= k;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const { return *this * BigInt(-1); }

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return IntPolynomial();
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * BigInt(static_cast<long long>(k));
    return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : c_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g < 0 ? BigInt(-g) : g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    std::vector<BigInt> r = c_;
    for (auto& c : r) c /= g;
    return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::eval_int(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

long double IntPolynomial::eval(long double x) const {
    long double acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + it->convert_to<long double>();
    return acc;
}

long double IntPolynomial::eval_derivative(long double x) const {
    long double acc = 0.0L;
    for (int k = degree(); k >= 1; --k)
        acc = acc * x + static_cast<long double>(k) * c_[static_cast<size_t>(k)].convert_to<long double>();
    return acc;
}

std::complex<long double> IntPolynomial::eval(std::complex<long double> x) const {
    std::complex<long double> acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + it->convert_to<long double>();
    return acc;
}

long double IntPolynomial::eval_abs(long double x) const {
    long double acc = 0.0L;
    long double ax = std::abs(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * ax + std::abs(it->convert_to<long double>());
    return acc;
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = c_[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (a != 1 || k == 0) os << a.str();
        if (k >= 1) {
            if (a != 1) os << "*";
            os << "z";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw_numeric("NumericFailure", "exact division by the zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree())
        throw_numeric("NumericFailure", "exact division with quotient degree < 0");
    std::vector<BigInt> rem = a.coeffs();
    std::vector<BigInt> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    const BigInt& lb = b.lead();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt& top = rem[static_cast<size_t>(k + b.degree())];
        if (top == 0) continue;
        BigInt q, r;
        boost::multiprecision::divide_qr(top, lb, q, r);
        if (r != 0) throw_numeric("NumericFailure", "polynomial division is not exact");
        quo[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
    }
    for (const auto& c : rem)
        if (c != 0) throw_numeric("NumericFailure", "polynomial division is not exact (remainder)");
    return IntPolynomial(std::move(quo));
}

PseudoDivision pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw_numeric("NumericFailure", "pseudo-division by zero polynomial");
    IntPolynomial r = a;
    const BigInt d = b.lead();
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPolynomial t = IntPolynomial::monomial(r.lead(), r.degree() - b.degree());
        r = r * d - t * b;
        --e;
    }
    // multiply by the unused powers of d so the result equals d^(delta+1) a mod b
    BigInt scale = 1;
    for (int i = 0; i < e; ++i) scale *= d;
    return {r * scale, a.degree() - b.degree() + 1};
}

namespace {

IntPolynomial positive_lead(IntPolynomial p) {
    if (!p.is_zero() && p.lead() < 0) return -p;
    return p;
}

BigInt int_pow(const BigInt& b, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Subresultant PRS on primitive inputs with deg a >= deg b >= 0.
IntPolynomial gcd_core(IntPolynomial a, IntPolynomial b) {
    BigInt g = 1, h = 1;
    while (true) {
        int delta = a.degree() - b.degree();
        IntPolynomial r = pseudo_remainder(a, b).remainder;
        if (r.is_zero()) return b.primitive_part();
        if (r.degree() == 0) return IntPolynomial::constant(1);
        a = b;
        b = divide_exact(r, IntPolynomial::constant(g * int_pow(h, delta)));
        g = a.lead();
        if (delta >= 1)
            h = divide_exact(IntPolynomial::constant(int_pow(g, delta)),
                             IntPolynomial::constant(int_pow(h, delta - 1)))
                    .coeff(0);
        // delta == 0 leaves h unchanged
    }
}

}  // namespace

IntPolynomial int_poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw_numeric("NumericFailure", "gcd(0, 0) is undefined");
    if (a.is_zero()) return positive_lead(b.primitive_part());
    if (b.is_zero()) return positive_lead(a.primitive_part());
    BigInt c = boost::multiprecision::gcd(a.content(), b.content());
    int ta = a.trailing_zeros();
    int tb = b.trailing_zeros();
    int tz = std::min(ta, tb);
    IntPolynomial pa = a.primitive_part().shift_down(ta);
    IntPolynomial pb = b.primitive_part().shift_down(tb);
    IntPolynomial g = pa.degree() >= pb.degree() ? gcd_core(pa, pb) : gcd_core(pb, pa);
    return positive_lead(g.shift_up(tz) * c);
}

RationalFn reduce(RationalFn r) {
    if (r.den.is_zero()) throw_numeric("ZeroDenominator", "rational function with zero denominator");
    if (r.num.is_zero()) return {IntPolynomial(), IntPolynomial::constant(1)};
    IntPolynomial g = int_poly_gcd(r.num, r.den);
    r.num = divide_exact(r.num, g);
    r.den = divide_exact(r.den, g);
    BigInt cc = boost::multiprecision::gcd(r.num.content(), r.den.content());
    if (cc > 1) {
        r.num = divide_exact(r.num, IntPolynomial::constant(cc));
        r.den = divide_exact(r.den, IntPolynomial::constant(cc));
    }
    if (r.den.lead() < 0) {
        r.num = -r.num;
        r.den = -r.den;
    }
    return r;
}

bool operator==(const RationalFn& a, const RationalFn& b) { return a.num == b.num && a.den == b.den; }

long double eval_rational(const RationalFn& r, long double x) { return r.num.eval(x) / r.den.eval(x); }

RealCoeffs to_real(const IntPolynomial& p) {
    RealCoeffs r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i].convert_to<long double>();
    return r;
}

long double eval_real(const RealCoeffs& p, long double x) {
    long double acc = 0.0L;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

long double eval_real_abs(const RealCoeffs& p, long double x) {
    long double acc = 0.0L;
    long double ax = std::abs(x);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * ax + std::abs(*it);
    return acc;
}

RealCoeffs derivative_real(const RealCoeffs& p) {
    if (p.size() <= 1) return {};
    RealCoeffs r(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k) r[k - 1] = static_cast<long double>(k) * p[k];
    return r;
}

RealCoeffs deflate_at(const RealCoeffs& p, long double x0, long double tol) {
    long double scale = eval_real_abs(p, x0);
    long double val = eval_real(p, x0);
    if (std::abs(val) > tol * std::max(scale, 1.0L))
        throw_numeric("NotARoot", "deflation point is not a root within tolerance");
    if (p.size() <= 1) return {};
    RealCoeffs q(p.size() - 1);
    long double acc = 0.0L;
    for (size_t k = p.size(); k-- > 1;) {
        acc = acc * x0 + p[k];
        q[k - 1] = acc;
    }
    return q;
}

}  // namespace perron
