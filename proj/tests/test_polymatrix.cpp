#include <doctest.h>

#include <random>

#include "perron/polymatrix.hpp"

using namespace perron;

namespace {

PolyMatrix example_93() {
    PolyMatrix m(2);
    m.at(0, 0) = IntPolynomial({1, 1});
    m.at(0, 1) = IntPolynomial({1});
    m.at(1, 0) = IntPolynomial();
    m.at(1, 1) = IntPolynomial({0, 1, 0, 1});
    return m;
}

PolyMatrix example_94() {
    PolyMatrix m(2);
    m.at(0, 0) = IntPolynomial({1, 1, 1, 1});
    m.at(0, 1) = IntPolynomial();
    m.at(1, 0) = IntPolynomial({1, 1, 1});
    m.at(1, 1) = IntPolynomial({0, 0, 0, 1});
    return m;
}

PolyMatrix rand_matrix(std::mt19937& rng, int n, int max_deg) {
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
            std::vector<BigInt> c;
            for (int k = 0; k <= deg; ++k) c.emplace_back(static_cast<long long>(rng() % 7) - 3);
            m.at(i, j) = IntPolynomial(std::move(c));
        }
    return m;
}

IntPolynomial entry_sum(const PolyMatrix& m) {
    IntPolynomial s;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) s = s + m.at(i, j);
    return s;
}

}  // namespace

TEST_CASE("determinants of the worked correlation matrices") {
    CHECK(polymatrix_determinant(example_93()) == IntPolynomial({0, 1, 1, 1, 1}));
    CHECK(polymatrix_determinant(example_94()) == IntPolynomial({0, 0, 0, 1, 1, 1, 1}));
    PolyMatrix one(1);
    one.at(0, 0) = IntPolynomial({0, 1});
    CHECK(polymatrix_determinant(one) == IntPolynomial({0, 1}));
}

TEST_CASE("adjugate basics and entry sums") {
    PolyMatrix one(1);
    one.at(0, 0) = IntPolynomial({0, 1});
    PolyMatrix adj1 = polymatrix_adjugate(one);
    CHECK(adj1.at(0, 0) == IntPolynomial({1}));

    CHECK(entry_sum(polymatrix_adjugate(example_93())) == IntPolynomial({0, 2, 0, 1}));
    CHECK(entry_sum(polymatrix_adjugate(example_94())) == IntPolynomial({0, 0, 0, 2}));
}

TEST_CASE("m * adj(m) = det(m) I on random matrices") {
    std::mt19937 rng(41);
    for (int t = 0; t < 120; ++t) {
        int n = 1 + static_cast<int>(rng() % 4);
        PolyMatrix m = rand_matrix(rng, n, 3);
        IntPolynomial det = polymatrix_determinant(m);
        PolyMatrix adj = polymatrix_adjugate(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                IntPolynomial acc;
                for (int k = 0; k < n; ++k) acc = acc + m.at(i, k) * adj.at(k, j);
                CHECK(acc == (i == j ? det : IntPolynomial()));
            }
    }
}

TEST_CASE("Bareiss and cofactor determinants agree") {
    std::mt19937 rng(43);
    for (int t = 0; t < 80; ++t) {
        int n = 1 + static_cast<int>(rng() % 5);
        PolyMatrix m = rand_matrix(rng, n, 2);
        CHECK(polymatrix_determinant_bareiss(m) == polymatrix_determinant_cofactor(m));
    }
    // singular matrices too
    PolyMatrix sing(3);
    for (int j = 0; j < 3; ++j) {
        sing.at(0, j) = IntPolynomial({1, 1});
        sing.at(1, j) = IntPolynomial({2, 2});
        sing.at(2, j) = IntPolynomial({0, 1});
    }
    CHECK(polymatrix_determinant_bareiss(sing).is_zero());
    CHECK(polymatrix_determinant_cofactor(sing).is_zero());

    // rank-2 singular: the cofactor fallback yields a nonzero adjugate with
    // m * adj = 0
    PolyMatrix rank2(3);
    rank2.at(0, 0) = IntPolynomial({1});
    rank2.at(0, 2) = IntPolynomial({0, 1});
    rank2.at(1, 1) = IntPolynomial({1});
    rank2.at(1, 2) = IntPolynomial({0, 1});
    rank2.at(2, 0) = IntPolynomial({1});
    rank2.at(2, 1) = IntPolynomial({1});
    rank2.at(2, 2) = IntPolynomial({0, 2});
    CHECK(polymatrix_determinant(rank2).is_zero());
    PolyMatrix adj2 = polymatrix_adjugate(rank2);
    bool nonzero = false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) nonzero = nonzero || !adj2.at(i, j).is_zero();
    CHECK(nonzero);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            IntPolynomial acc;
            for (int k = 0; k < 3; ++k) acc = acc + rank2.at(i, k) * adj2.at(k, j);
            CHECK(acc.is_zero());
        }
}

TEST_CASE("exact charpoly equals the polynomial determinant of zI - A") {
    std::mt19937 rng(47);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<long long>> a(static_cast<size_t>(n),
                                              std::vector<long long>(static_cast<size_t>(n)));
        PolyMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    static_cast<long long>(rng() % 7) - 3;
                m.at(i, j) = IntPolynomial({-a[static_cast<size_t>(i)][static_cast<size_t>(j)]});
                if (i == j) m.at(i, j) = m.at(i, j) + IntPolynomial({0, 1});
            }
        CHECK(charpoly(a) == polymatrix_determinant(m));
    }
}

TEST_CASE("pencil detection") {
    PolyMatrix m(2);
    m.at(0, 0) = IntPolynomial({1, 1});
    m.at(0, 1) = IntPolynomial({1});
    m.at(1, 0) = IntPolynomial();
    m.at(1, 1) = IntPolynomial({0, 1});
    auto c = as_pencil(m);
    REQUIRE(c.has_value());
    CHECK((*c)[0][0] == 1);
    CHECK((*c)[0][1] == 1);
    CHECK((*c)[1][0] == 0);
    CHECK((*c)[1][1] == 0);
    CHECK_FALSE(as_pencil(example_93()).has_value());  // cubic diagonal entry
}

TEST_CASE("pencil adjugate sums match the generic adjugate") {
    std::mt19937 rng(53);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<long long>> c(static_cast<size_t>(n),
                                              std::vector<long long>(static_cast<size_t>(n)));
        PolyMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                c[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<long long>(rng() % 2);
                m.at(i, j) = IntPolynomial({c[static_cast<size_t>(i)][static_cast<size_t>(j)]});
                if (i == j) m.at(i, j) = m.at(i, j) + IntPolynomial({0, 1});
            }
        PencilSums ps = pencil_adjugate_sums(c);
        CHECK(ps.det == polymatrix_determinant(m));
        PolyMatrix adj = polymatrix_adjugate(m);
        for (int i = 0; i < n; ++i) {
            IntPolynomial row, col;
            for (int j = 0; j < n; ++j) {
                row = row + adj.at(i, j);
                col = col + adj.at(j, i);
            }
            CHECK(ps.rowsums[static_cast<size_t>(i)] == row);
            CHECK(ps.colsums[static_cast<size_t>(i)] == col);
        }
        CHECK(ps.entry_sum == entry_sum(adj));
    }
}
