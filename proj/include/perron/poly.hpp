#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <vector>

#include "perron/errors.hpp"

namespace perron {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial with exact integer coefficients, stored in
// ascending degree with no trailing zero coefficient.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> ascending);
    explicit IntPolynomial(std::vector<BigInt> ascending);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const BigInt& c);
    // c * z^k
    static IntPolynomial monomial(const BigInt& c, int k);

    bool is_zero() const { return c_.empty(); }
    // Degree, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int k) const;
    const BigInt& lead() const { return c_.back(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    // Number of trailing zero coefficients, i.e. multiplicity of the root 0.
    int trailing_zeros() const;
    // Divide by z^k (requires the k lowest coefficients to be zero).
    IntPolynomial shift_down(int k) const;
    IntPolynomial shift_up(int k) const { return monomial(1, k) * *this; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const BigInt& k) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    IntPolynomial derivative() const;

    // gcd of the coefficients, positive; 0 for the zero polynomial.
    BigInt content() const;
    IntPolynomial primitive_part() const;

    BigInt eval_int(const BigInt& x) const;
    long double eval(long double x) const;
    long double eval_derivative(long double x) const;
    std::complex<long double> eval(std::complex<long double> x) const;
    // Horner evaluation of sum |c_k| |x|^k, the natural residual scale.
    long double eval_abs(long double x) const;

    std::string str() const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

// Exact quotient a / b; throws NumericFailure if b is zero or does not
// divide a over the integers.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Quotient and remainder of a by b over the rationals, restricted to the
// case lc(b) = +-1 so everything stays integral (used for series extraction).
// General callers use pseudo_division.
struct PseudoDivision {
    IntPolynomial remainder;
    int power;  // lc(b)^power multiplied into a before dividing
};
PseudoDivision pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd via the subresultant polynomial remainder sequence,
// times gcd of the integer contents; leading coefficient positive.
IntPolynomial int_poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Ratio of integer polynomials.  Canonical form: gcd(num, den) constant,
// common integer content removed, den leading coefficient positive.
struct RationalFn {
    IntPolynomial num;
    IntPolynomial den = IntPolynomial::constant(1);
};

RationalFn reduce(RationalFn r);
bool operator==(const RationalFn& a, const RationalFn& b);

// Value of r at x; pole handling is the caller's business.
long double eval_rational(const RationalFn& r, long double x);

// Real-coefficient polynomial utilities used at the numeric boundary.
using RealCoeffs = std::vector<long double>;

RealCoeffs to_real(const IntPolynomial& p);
long double eval_real(const RealCoeffs& p, long double x);
long double eval_real_abs(const RealCoeffs& p, long double x);
RealCoeffs derivative_real(const RealCoeffs& p);

// Synthetic division of p by (z - x0).  Requires |p(x0)| <= tol * scale(p)
// where scale is the Horner magnitude of p at |x0|; throws NotARoot
// otherwise.  Returns the quotient.
RealCoeffs deflate_at(const RealCoeffs& p, long double x0, long double tol);

}  // namespace perron
