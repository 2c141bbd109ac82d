#include "perron/polymatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace perron {

namespace {

IntPolynomial det_cofactor_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
    const int n = m.n;
    if (row == n) return IntPolynomial::constant(1);
    int live = 0;
    IntPolynomial acc;
    for (int j = 0; j < n; ++j) {
        if (cols[static_cast<size_t>(j)]) continue;
        const IntPolynomial& pivot = m.at(row, j);
        if (!pivot.is_zero()) {
            cols[static_cast<size_t>(j)] = 1;
            IntPolynomial sub = det_cofactor_rec(m, cols, row + 1);
            cols[static_cast<size_t>(j)] = 0;
            IntPolynomial term = pivot * sub;
            acc = (live % 2 == 0) ? acc + term : acc - term;
        }
        ++live;
    }
    return acc;
}

}  // namespace

IntPolynomial polymatrix_determinant_cofactor(const PolyMatrix& m) {
    if (m.n == 0) return IntPolynomial::constant(1);
    std::vector<int> cols(static_cast<size_t>(m.n), 0);
    return det_cofactor_rec(m, cols, 0);
}

IntPolynomial polymatrix_determinant_bareiss(const PolyMatrix& m) {
    const int n = m.n;
    if (n == 0) return IntPolynomial::constant(1);
    PolyMatrix a = m;
    int sign = 1;
    IntPolynomial prev = IntPolynomial::constant(1);
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k).is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a.at(r, k).is_zero()) { piv = r; break; }
            if (piv < 0) return IntPolynomial();  // column of zeros below: singular
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IntPolynomial num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = divide_exact(num, prev);
            }
            a.at(i, k) = IntPolynomial();
        }
        prev = a.at(k, k);
    }
    IntPolynomial det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

IntPolynomial polymatrix_determinant(const PolyMatrix& m) {
    return m.n <= 4 ? polymatrix_determinant_cofactor(m) : polymatrix_determinant_bareiss(m);
}

namespace {

PolyMatrix adjugate_cofactor(const PolyMatrix& m) {
    const int n = m.n;
    PolyMatrix adj(n);
    if (n == 1) {
        adj.at(0, 0) = IntPolynomial::constant(1);
        return adj;
    }
    PolyMatrix minor(n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int mr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int mc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = m.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            IntPolynomial d = polymatrix_determinant(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

// Fraction-free Gauss-Jordan on [P m | P], P a row permutation chosen by a
// forward Bareiss pass so every pivot is a nonzero polynomial.  The final
// left block is det(P m) * I and the right block T satisfies
// m * (sign T) = det(m) * I.
std::optional<PolyMatrix> adjugate_ffgj(const PolyMatrix& m) {
    const int n = m.n;
    // forward pass to pick the permutation
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    int sign = 1;
    {
        PolyMatrix a = m;
        IntPolynomial prev = IntPolynomial::constant(1);
        for (int k = 0; k < n; ++k) {
            if (a.at(k, k).is_zero()) {
                int piv = -1;
                for (int r = k + 1; r < n; ++r)
                    if (!a.at(r, k).is_zero()) { piv = r; break; }
                if (piv < 0) return std::nullopt;  // singular
                for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
                std::swap(perm[static_cast<size_t>(k)], perm[static_cast<size_t>(piv)]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j)
                    a.at(i, j) = divide_exact(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
                a.at(i, k) = IntPolynomial();
            }
            prev = a.at(k, k);
        }
    }
    // Gauss-Jordan with the settled pivot order; work on [P m | P]
    const int w = 2 * n;
    std::vector<IntPolynomial> work(static_cast<size_t>(n) * static_cast<size_t>(w));
    auto at = [&](int i, int j) -> IntPolynomial& {
        return work[static_cast<size_t>(i) * static_cast<size_t>(w) + static_cast<size_t>(j)];
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = m.at(perm[static_cast<size_t>(i)], j);
        at(i, n + perm[static_cast<size_t>(i)]) = IntPolynomial::constant(1);
    }
    IntPolynomial prev = IntPolynomial::constant(1);
    for (int k = 0; k < n; ++k) {
        const IntPolynomial piv = at(k, k);
        if (piv.is_zero()) return std::nullopt;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < w; ++j) {
                if (j == k) continue;
                at(i, j) = divide_exact(piv * at(i, j) - at(i, k) * at(k, j), prev);
            }
            at(i, k) = IntPolynomial();
        }
        prev = piv;
    }
    PolyMatrix adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            adj.at(i, j) = sign < 0 ? -at(i, n + j) : at(i, n + j);
    return adj;
}

}  // namespace

PolyMatrix polymatrix_adjugate(const PolyMatrix& m) {
    if (m.n == 0) return PolyMatrix(0);
    if (m.n == 1) {
        PolyMatrix adj(1);
        adj.at(0, 0) = IntPolynomial::constant(1);
        return adj;
    }
    if (auto adj = adjugate_ffgj(m)) return *adj;
    return adjugate_cofactor(m);
}

std::optional<std::vector<std::vector<long long>>> as_pencil(const PolyMatrix& m) {
    std::vector<std::vector<long long>> c(static_cast<size_t>(m.n),
                                          std::vector<long long>(static_cast<size_t>(m.n), 0));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            const IntPolynomial& p = m.at(i, j);
            if (p.degree() > 1) return std::nullopt;
            const BigInt& lin = p.coeff(1);
            if (i == j ? lin != 1 : lin != 0) return std::nullopt;
            const BigInt& cst = p.coeff(0);
            if (cst < std::numeric_limits<long long>::min() || cst > std::numeric_limits<long long>::max())
                return std::nullopt;
            c[static_cast<size_t>(i)][static_cast<size_t>(j)] = cst.convert_to<long long>();
        }
    return c;
}

namespace {

bool is_prime_u32(uint32_t x) {
    if (x < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::vector<uint64_t> primes_near_2_31(size_t count) {
    std::vector<uint64_t> ps;
    uint32_t cand = 2147483647u;  // 2^31 - 1
    while (ps.size() < count) {
        if (is_prime_u32(cand)) ps.push_back(cand);
        cand -= 2;
    }
    return ps;
}

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// charpoly of an integer matrix modulo p: similarity reduction to upper
// Hessenberg, then the leading-principal-minor recurrence
//   p_k = (z - h_{k,k}) p_{k-1} - sum_m h_{k-m,k} (prod subdiagonals) p_{k-m-1}.
std::vector<uint64_t> charpoly_mod_p(const std::vector<std::vector<long long>>& a, uint64_t p) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<uint64_t>> h(static_cast<size_t>(n), std::vector<uint64_t>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long v = a[static_cast<size_t>(i)][static_cast<size_t>(j)] % static_cast<long long>(p);
            if (v < 0) v += static_cast<long long>(p);
            h[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<uint64_t>(v);
        }
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int r = k + 1; r < n; ++r)
            if (h[static_cast<size_t>(r)][static_cast<size_t>(k)]) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != k + 1) {
            std::swap(h[static_cast<size_t>(k + 1)], h[static_cast<size_t>(piv)]);
            for (auto& row : h)
                std::swap(row[static_cast<size_t>(k + 1)], row[static_cast<size_t>(piv)]);
        }
        uint64_t inv = mod_pow(h[static_cast<size_t>(k + 1)][static_cast<size_t>(k)], p - 2, p);
        for (int i = k + 2; i < n; ++i) {
            uint64_t f = h[static_cast<size_t>(i)][static_cast<size_t>(k)] * inv % p;
            if (!f) continue;
            // row_i -= f * row_{k+1};  col_{k+1} += f * col_i  (similarity)
            for (int j = 0; j < n; ++j) {
                uint64_t sub = f * h[static_cast<size_t>(k + 1)][static_cast<size_t>(j)] % p;
                uint64_t& x = h[static_cast<size_t>(i)][static_cast<size_t>(j)];
                x = (x + p - sub) % p;
            }
            for (int r = 0; r < n; ++r) {
                uint64_t add = f * h[static_cast<size_t>(r)][static_cast<size_t>(i)] % p;
                uint64_t& x = h[static_cast<size_t>(r)][static_cast<size_t>(k + 1)];
                x = (x + add) % p;
            }
        }
    }
    std::vector<std::vector<uint64_t>> polys;
    polys.push_back({1});
    for (int k = 1; k <= n; ++k) {
        const auto& prev = polys[static_cast<size_t>(k - 1)];
        std::vector<uint64_t> cur(static_cast<size_t>(k) + 1, 0);
        for (size_t i = 0; i < prev.size(); ++i) cur[i + 1] = (cur[i + 1] + prev[i]) % p;
        uint64_t hkk = h[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)];
        for (size_t i = 0; i < prev.size(); ++i)
            cur[i] = (cur[i] + p * p - hkk * prev[i] % p) % p;
        uint64_t prodsub = 1;
        for (int mstep = 1; mstep < k; ++mstep) {
            prodsub = prodsub * h[static_cast<size_t>(k - mstep)][static_cast<size_t>(k - mstep - 1)] % p;
            if (!prodsub) break;
            uint64_t coef = h[static_cast<size_t>(k - 1 - mstep)][static_cast<size_t>(k - 1)] * prodsub % p;
            if (!coef) continue;
            const auto& pm = polys[static_cast<size_t>(k - 1 - mstep)];
            for (size_t i = 0; i < pm.size(); ++i)
                cur[i] = (cur[i] + p * p - coef * pm[i] % p) % p;
        }
        polys.push_back(std::move(cur));
    }
    return polys.back();
}

// log2 of max_k C(n,k) * prod of the k largest row 2-norms: a Hadamard-type
// bound on every characteristic polynomial coefficient.
double charpoly_coeff_bound_log2(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<double> lognorm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            double v = static_cast<double>(a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            s += v * v;
        }
        lognorm[static_cast<size_t>(i)] = 0.5 * std::log2(std::max(s, 1.0));
    }
    std::sort(lognorm.rbegin(), lognorm.rend());
    double best = 0.0, logbinom = 0.0, lognormprod = 0.0;
    for (int k = 1; k <= n; ++k) {
        logbinom += std::log2(static_cast<double>(n - k + 1)) - std::log2(static_cast<double>(k));
        lognormprod += lognorm[static_cast<size_t>(k - 1)];
        best = std::max(best, logbinom + lognormprod);
    }
    return best;
}

}  // namespace

IntPolynomial charpoly(const std::vector<std::vector<long long>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return IntPolynomial::constant(1);
    double bits = charpoly_coeff_bound_log2(a) + 2.0;  // sign bit + slack
    size_t nprimes = static_cast<size_t>(bits / 30.9) + 2;
    std::vector<uint64_t> ps = primes_near_2_31(nprimes);
    std::vector<std::vector<uint64_t>> residues;
    residues.reserve(ps.size());
    for (uint64_t p : ps) residues.push_back(charpoly_mod_p(a, p));
    // Garner-style incremental CRT with balanced lift
    std::vector<BigInt> coef(static_cast<size_t>(n) + 1, BigInt(0));
    BigInt modulus = 1;
    for (size_t t = 0; t < ps.size(); ++t) {
        BigInt p(ps[t]);
        BigInt minv(1);
        if (t > 0) {
            // modular inverse of the accumulated modulus mod p, via Fermat
            uint64_t mm = (modulus % p).convert_to<uint64_t>();
            minv = BigInt(mod_pow(mm, ps[t] - 2, ps[t]));
        }
        for (size_t k = 0; k < coef.size(); ++k) {
            BigInt cur = coef[k] % p;
            if (cur < 0) cur += p;
            BigInt target(residues[t][k]);
            BigInt delta = ((target - cur) * minv) % p;
            if (delta < 0) delta += p;
            coef[k] += modulus * delta;
        }
        modulus *= p;
    }
    BigInt half = modulus / 2;
    for (auto& c : coef)
        if (c > half) c -= modulus;
    return IntPolynomial(std::move(coef));
}

PencilSums pencil_adjugate_sums(const std::vector<std::vector<long long>>& c) {
    const int n = static_cast<int>(c.size());
    // det(z I + C) = charpoly of -C
    std::vector<std::vector<long long>> a(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = -c[static_cast<size_t>(i)][static_cast<size_t>(j)];
    PencilSums out;
    out.det = charpoly(a);

    // adj(z I - A) b = sum_k z^{n-1-k} w_k with w_0 = b, w_k = A w_{k-1} + c_{n-k} b
    auto adj_times_ones = [&](bool transpose) {
        std::vector<std::vector<BigInt>> w;
        w.emplace_back(static_cast<size_t>(n), BigInt(1));
        for (int k = 1; k < n; ++k) {
            std::vector<BigInt> nxt(static_cast<size_t>(n), BigInt(0));
            const auto& prev = w.back();
            for (int i = 0; i < n; ++i) {
                BigInt acc = 0;
                for (int j = 0; j < n; ++j) {
                    long long aij = transpose ? a[static_cast<size_t>(j)][static_cast<size_t>(i)]
                                              : a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (aij) acc += aij * prev[static_cast<size_t>(j)];
                }
                nxt[static_cast<size_t>(i)] = acc + out.det.coeff(n - k);
            }
            w.push_back(std::move(nxt));
        }
        std::vector<IntPolynomial> sums(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<BigInt> coeffs(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) coeffs[static_cast<size_t>(j)] = w[static_cast<size_t>(n - 1 - j)][static_cast<size_t>(i)];
            sums[static_cast<size_t>(i)] = IntPolynomial(std::move(coeffs));
        }
        return sums;
    };
    out.rowsums = adj_times_ones(false);
    out.colsums = adj_times_ones(true);
    IntPolynomial total;
    for (const auto& r : out.rowsums) total = total + r;
    out.entry_sum = total;
    IntPolynomial check;
    for (const auto& csum : out.colsums) check = check + csum;
    if (check != total)
        throw_numeric("NumericFailure", "pencil adjugate row/column sums disagree");
    return out;
}

}  // namespace perron
