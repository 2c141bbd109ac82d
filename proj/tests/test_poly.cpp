#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "perron/poly.hpp"

using namespace perron;

namespace {
IntPolynomial rand_poly(std::mt19937& rng, int max_deg, int max_abs) {
    int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    std::vector<BigInt> c;
    for (int k = 0; k <= deg; ++k)
        c.emplace_back(static_cast<long long>(rng() % static_cast<unsigned>(2 * max_abs + 1)) - max_abs);
    return IntPolynomial(std::move(c));
}
}  // namespace

TEST_CASE("canonical form and arithmetic") {
    CHECK(IntPolynomial({0, 0, 0}).is_zero());
    CHECK(IntPolynomial({1, 2, 0}).degree() == 1);
    IntPolynomial a({1, 2});       // 2z + 1
    IntPolynomial b({-1, 1});      // z - 1
    CHECK(a * b == IntPolynomial({-1, -1, 2}));
    CHECK(a + b == IntPolynomial({0, 3}));
    CHECK(a - a == IntPolynomial());
    CHECK(IntPolynomial({0, 0, 3, 6}).trailing_zeros() == 2);
    CHECK(IntPolynomial({0, 0, 3, 6}).shift_down(2) == IntPolynomial({3, 6}));
    CHECK(IntPolynomial({3, 6}).content() == 3);
    CHECK(IntPolynomial({3, 6}).primitive_part() == IntPolynomial({1, 2}));
    CHECK(IntPolynomial({1, 1, 1}).derivative() == IntPolynomial({1, 2}));
}

TEST_CASE("exact division") {
    IntPolynomial num({-1, 0, 1});  // z^2 - 1
    CHECK(divide_exact(num, IntPolynomial({-1, 1})) == IntPolynomial({1, 1}));
    CHECK_THROWS_AS(divide_exact(IntPolynomial({1, 1, 1}), IntPolynomial({1, 1})), Error);
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        IntPolynomial x = rand_poly(rng, 4, 5), y = rand_poly(rng, 4, 5);
        if (y.is_zero()) continue;
        CHECK(divide_exact(x * y, y) == x);
    }
}

TEST_CASE("gcd on the worked examples") {
    CHECK(int_poly_gcd(IntPolynomial({-1, 0, 1}), IntPolynomial({-1, 1})) == IntPolynomial({-1, 1}));
    // z^3+z^2+z+1 = (z+1)(z^2+1)
    CHECK(int_poly_gcd(IntPolynomial({1, 1, 1, 1}), IntPolynomial({1, 0, 1})) ==
          IntPolynomial({1, 0, 1}));
    CHECK(int_poly_gcd(IntPolynomial({2, 4}), IntPolynomial()) == IntPolynomial({1, 2}));
    CHECK_THROWS_AS(int_poly_gcd(IntPolynomial(), IntPolynomial()), Error);
}

TEST_CASE("gcd divides both arguments exactly on random pairs") {
    std::mt19937 rng(23);
    for (int t = 0; t < 300; ++t) {
        IntPolynomial a = rand_poly(rng, 5, 4);
        IntPolynomial b = rand_poly(rng, 5, 4);
        IntPolynomial m = rand_poly(rng, 3, 3);
        if (a.is_zero() && b.is_zero()) continue;
        IntPolynomial am = a * m, bm = b * m;
        if (am.is_zero() && bm.is_zero()) continue;
        IntPolynomial g = int_poly_gcd(am, bm);
        CHECK(!g.is_zero());
        if (!am.is_zero()) CHECK(divide_exact(am, g) * g == am);
        if (!bm.is_zero()) CHECK(divide_exact(bm, g) * g == bm);
        // the planted common factor divides the gcd
        IntPolynomial mp = m.primitive_part();
        if (mp.lead() < 0) mp = -mp;
        CHECK(divide_exact(g, mp) * mp == g);
    }
}

TEST_CASE("rational reduction") {
    RationalFn r1 = reduce({IntPolynomial({-1, 0, 1}), IntPolynomial({-1, 1})});
    CHECK(r1.num == IntPolynomial({1, 1}));
    CHECK(r1.den == IntPolynomial({1}));

    // 2z^3 / (z^6+z^5+z^4+z^3) -> 2 / (z^3+z^2+z+1)
    RationalFn r2 = reduce({IntPolynomial({0, 0, 0, 2}), IntPolynomial({0, 0, 0, 1, 1, 1, 1})});
    CHECK(r2.num == IntPolynomial({2}));
    CHECK(r2.den == IntPolynomial({1, 1, 1, 1}));

    RationalFn r3 = reduce({IntPolynomial(), IntPolynomial({1, 1})});
    CHECK(r3.num.is_zero());
    CHECK(r3.den == IntPolynomial({1}));

    CHECK_THROWS_AS(reduce({IntPolynomial({1}), IntPolynomial()}), Error);

    // sign normalization: denominator lead positive
    RationalFn r4 = reduce({IntPolynomial({1}), IntPolynomial({1, -1})});
    CHECK(r4.den.lead() > 0);
    CHECK(r4.num == IntPolynomial({-1}));
}

TEST_CASE("reduction preserves the value away from poles") {
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        IntPolynomial n = rand_poly(rng, 4, 4), d = rand_poly(rng, 4, 4), m = rand_poly(rng, 3, 3);
        if (d.is_zero() || m.is_zero()) continue;
        RationalFn raw{n * m, d * m};
        RationalFn red = reduce(raw);
        int checked = 0;
        for (int k = 0; k < 40 && checked < 10; ++k) {
            double x = -3.0 + 6.0 * static_cast<double>(rng() % 10000) / 10000.0;
            double denr = static_cast<double>(raw.den.eval(x));
            double denm = static_cast<double>(red.den.eval(x));
            if (std::abs(denr) < 1e-3 || std::abs(denm) < 1e-3) continue;
            double v1 = static_cast<double>(raw.num.eval(x)) / denr;
            double v2 = static_cast<double>(red.num.eval(x)) / denm;
            CHECK(v1 == doctest::Approx(v2).epsilon(1e-12));
            ++checked;
        }
    }
}

TEST_CASE("Horner evaluation") {
    CHECK(IntPolynomial({2, 0, 1}).eval(2.0L) == 6.0L);
    CHECK(IntPolynomial({0, 0, 0, 1}).eval_derivative(2.0L) == 12.0L);
    // value used by the worked 2x2 examples (z^3+z^2+z+1 at the dominant root)
    CHECK(static_cast<double>(IntPolynomial({1, 1, 1, 1}).eval(4.821125912405385L)) ==
          doctest::Approx(141.12304024983462).epsilon(1e-12));
    CHECK(IntPolynomial({4, 3}).eval_int(BigInt(10)) == 34);
}

TEST_CASE("real deflation") {
    RealCoeffs q1 = deflate_at({-1.0L, 0.0L, 1.0L}, 1.0L, 1e-12);  // z^2-1 at 1
    REQUIRE(q1.size() == 2);
    CHECK(static_cast<double>(q1[0]) == doctest::Approx(1.0));
    CHECK(static_cast<double>(q1[1]) == doctest::Approx(1.0));

    const long double theta = 2.618033988749895L;
    RealCoeffs q2 = deflate_at({1.0L, -3.0L, 1.0L}, theta, 1e-10);
    REQUIRE(q2.size() == 2);
    CHECK(static_cast<double>(q2[1]) == doctest::Approx(1.0));
    CHECK(static_cast<double>(q2[0]) == doctest::Approx(-(3.0 - 2.618033988749895)).epsilon(1e-12));

    CHECK_THROWS_AS(deflate_at({1.0L, 1.0L}, 0.5L, 1e-10), Error);

    // deflate then re-multiply reconstructs the polynomial
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        std::vector<long double> roots;
        int deg = 2 + static_cast<int>(rng() % 4);
        RealCoeffs p = {1.0L};
        for (int k = 0; k < deg; ++k) {
            long double r = -2.0L + 4.0L * static_cast<long double>(rng() % 10000) / 10000.0L;
            roots.push_back(r);
            RealCoeffs np(p.size() + 1, 0.0L);
            for (size_t i = 0; i < p.size(); ++i) {
                np[i + 1] += p[i];
                np[i] -= r * p[i];
            }
            p = np;
        }
        RealCoeffs q = deflate_at(p, roots[0], 1e-9);
        RealCoeffs back(q.size() + 1, 0.0L);
        for (size_t i = 0; i < q.size(); ++i) {
            back[i + 1] += q[i];
            back[i] -= roots[0] * q[i];
        }
        long double scale = 0.0L;
        for (long double c : p) scale = std::max(scale, std::abs(c));
        for (size_t i = 0; i < p.size(); ++i)
            CHECK(static_cast<double>(std::abs(back[i] - p[i])) <=
                  1e-10 * std::max(1.0, static_cast<double>(scale)));
    }
}
