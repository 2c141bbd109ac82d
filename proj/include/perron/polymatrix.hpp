#pragma once

#include <optional>
#include <vector>

#include "perron/poly.hpp"

namespace perron {

// Square matrix of integer polynomials, row-major.
struct PolyMatrix {
    int n = 0;
    std::vector<IntPolynomial> e;

    PolyMatrix() = default;
    explicit PolyMatrix(int size) : n(size), e(static_cast<size_t>(size) * static_cast<size_t>(size)) {}

    IntPolynomial& at(int i, int j) { return e[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }
    const IntPolynomial& at(int i, int j) const {
        return e[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    }
};

// Exact determinant: cofactor expansion for n <= 4, fraction-free Bareiss
// elimination above that.  Both routes agree exactly.
IntPolynomial polymatrix_determinant(const PolyMatrix& m);

// Exposed for cross-checking the two determinant routes against each other.
IntPolynomial polymatrix_determinant_cofactor(const PolyMatrix& m);
IntPolynomial polymatrix_determinant_bareiss(const PolyMatrix& m);

// Exact adjugate: m * adj(m) = det(m) * I.  Fraction-free Gauss-Jordan for
// nonsingular m, cofactor fallback when the determinant vanishes.
PolyMatrix polymatrix_adjugate(const PolyMatrix& m);

// --- integer pencil support ------------------------------------------------
// Many correlation matrices have the shape M(z) = z I + C with integer C
// (every forbidden word of length two).  Determinant and adjugate row/column
// sums then reduce to one exact characteristic polynomial plus two
// matrix-vector recursions, which scales to hundreds of words.

// If m == z I + C for an integer matrix C, returns C.
std::optional<std::vector<std::vector<long long>>> as_pencil(const PolyMatrix& m);

// Exact det(z I - A) for an integer matrix, by Hessenberg charpoly modulo
// word-sized primes and Chinese remaindering against a Hadamard-type bound.
IntPolynomial charpoly(const std::vector<std::vector<long long>>& a);

struct PencilSums {
    IntPolynomial det;                    // det(z I + C)
    std::vector<IntPolynomial> rowsums;   // adj(z I + C) * 1
    std::vector<IntPolynomial> colsums;   // 1^T adj(z I + C)
    IntPolynomial entry_sum;              // 1^T adj(z I + C) 1
};

PencilSums pencil_adjugate_sums(const std::vector<std::vector<long long>>& c);

}  // namespace perron
