#include "prseq/linalg.hpp"

#include <cstddef>
#include <utility>

namespace prseq {

namespace {

// Fraction-free elimination on an integer matrix. Intermediate entries are
// k x k minors of the input, so growth stays polynomial.
Int bareiss_det(std::vector<Int>& m, int n) {
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    auto e = [&](int i, int j) -> Int& { return m[static_cast<std::size_t>(i * n + j)]; };
    for (int k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (e(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(e(k, j), e(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = e(i, j) * e(k, k) - e(i, k) * e(k, j);
                mpz_divexact(e(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    return sign < 0 ? Int(-e(n - 1, n - 1)) : e(n - 1, n - 1);
}

// Clears denominators with a single lcm L and returns (L*entries, L).
std::pair<std::vector<Int>, Int> cleared(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    Int lcm(1);
    for (const auto& row : rows)
        for (const auto& v : row) {
            Int d = v.denominator();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        }
    std::vector<Int> m;
    m.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& row : rows)
        for (const auto& v : row) {
            Int scale;
            mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
            m.push_back(v.numerator() * scale);
        }
    return {std::move(m), lcm};
}

Rational det_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) return Rational(1);
    auto [m, lcm] = cleared(rows);
    Int d = bareiss_det(m, n);
    Int denom(1);
    mpz_pow_ui(denom.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(d, denom);
}

std::vector<std::vector<Rational>> rows_of(const SymMatrix& b) {
    const int n = b.order();
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        rows[static_cast<std::size_t>(i - 1)].reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) rows[static_cast<std::size_t>(i - 1)].push_back(b.at(i, j));
    }
    return rows;
}

}  // namespace

Grid submatrix(const SymMatrix& b, const IndexSet& rows, const IndexSet& cols) {
    if (rows.max_index() > b.order() || cols.max_index() > b.order())
        throw std::out_of_range("submatrix: index out of range");
    Grid g;
    g.rows.resize(static_cast<std::size_t>(rows.size()));
    for (int r = 0; r < rows.size(); ++r) {
        auto& row = g.rows[static_cast<std::size_t>(r)];
        row.reserve(static_cast<std::size_t>(cols.size()));
        for (int c = 0; c < cols.size(); ++c) row.push_back(b.at(rows[r], cols[c]));
    }
    return g;
}

SymMatrix principal_submatrix(const SymMatrix& b, const IndexSet& alpha) {
    if (alpha.max_index() > b.order())
        throw std::out_of_range("principal_submatrix: index out of range");
    if (alpha.empty()) throw std::invalid_argument("principal_submatrix: empty index set");
    SymMatrix m(alpha.size());
    for (int i = 0; i < alpha.size(); ++i)
        for (int j = i; j < alpha.size(); ++j) m.set(i + 1, j + 1, b.at(alpha[i], alpha[j]));
    return m;
}

Rational det(const SymMatrix& b) { return det_rows(rows_of(b)); }

Rational det(const Grid& g) {
    if (!g.square()) throw std::invalid_argument("det: grid is not square");
    return det_rows(g.rows);
}

int rank(const SymMatrix& b) {
    auto rows = rows_of(b);
    const int n = b.order();
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int pivot = -1;
        for (int i = r; i < n; ++i)
            if (!rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(r)]);
        const Rational inv_p =
            Rational(1) / rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        for (int i = r + 1; i < n; ++i) {
            Rational f = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] * inv_p;
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    return r;
}

SymMatrix inverse(const SymMatrix& b) {
    const int n = b.order();
    auto rows = rows_of(b);
    // Gauss-Jordan over exact rationals with the identity appended.
    std::vector<std::vector<Rational>> aug(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        aug[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)];
        aug[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(2 * n), Rational(0));
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("inverse: matrix is singular");
        std::swap(aug[static_cast<std::size_t>(pivot)], aug[static_cast<std::size_t>(col)]);
        const Rational inv_p =
            Rational(1) / aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j < 2 * n; ++j)
            aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= inv_p;
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            Rational f = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = col; j < 2 * n; ++j)
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * aug[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    SymMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            out.set(i, j, aug[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(n + j - 1)]);
    return out;
}

SymMatrix schur_complement(const SymMatrix& b, const IndexSet& alpha) {
    const int n = b.order();
    if (alpha.max_index() > n) throw std::out_of_range("schur_complement: index out of range");
    if (alpha.empty()) throw std::invalid_argument("schur_complement: empty pivot block");
    if (alpha.size() >= n)
        throw std::invalid_argument("schur_complement: pivot block must be proper");
    SymMatrix block = principal_submatrix(b, alpha);
    SymMatrix block_inv = [&] {
        try {
            return inverse(block);
        } catch (const std::domain_error&) {
            throw std::domain_error("schur_complement: pivot block B[alpha] is singular");
        }
    }();
    const IndexSet gamma = alpha.complement(n);
    const int m = gamma.size();
    const int k = alpha.size();
    SymMatrix out(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            Rational acc = b.at(gamma[i], gamma[j]);
            for (int s = 0; s < k; ++s)
                for (int t = 0; t < k; ++t)
                    acc -= b.at(gamma[i], alpha[s]) * block_inv.at(s + 1, t + 1) *
                           b.at(alpha[t], gamma[j]);
            out.set(i + 1, j + 1, acc);
        }
    }
    return out;
}

SymMatrix direct_sum(const SymMatrix& b, const SymMatrix& c) {
    const int nb = b.order(), nc = c.order();
    SymMatrix out(nb + nc);
    for (int i = 1; i <= nb; ++i)
        for (int j = i; j <= nb; ++j) out.set(i, j, b.at(i, j));
    for (int i = 1; i <= nc; ++i)
        for (int j = i; j <= nc; ++j) out.set(nb + i, nb + j, c.at(i, j));
    return out;
}

SymMatrix duplicate_index(const SymMatrix& b, int i) {
    const int n = b.order();
    if (i < 1 || i > n) throw std::out_of_range("duplicate_index: index out of range");
    SymMatrix out(n + 1);
    for (int r = 1; r <= n; ++r)
        for (int c = r; c <= n; ++c) out.set(r, c, b.at(r, c));
    for (int c = 1; c <= n; ++c) out.set(n + 1, c, b.at(i, c));
    out.set(n + 1, n + 1, b.at(i, i));
    return out;
}

SymMatrix border_with_combination(const SymMatrix& b, const std::vector<Rational>& x) {
    const int n = b.order();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("border_with_combination: x must have length n");
    std::vector<Rational> bx(static_cast<std::size_t>(n), Rational(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            bx[static_cast<std::size_t>(i - 1)] += b.at(i, j) * x[static_cast<std::size_t>(j - 1)];
    Rational corner(0);
    for (int i = 0; i < n; ++i) corner += x[static_cast<std::size_t>(i)] * bx[static_cast<std::size_t>(i)];
    SymMatrix out(n + 1);
    for (int r = 1; r <= n; ++r)
        for (int c = r; c <= n; ++c) out.set(r, c, b.at(r, c));
    for (int c = 1; c <= n; ++c) out.set(n + 1, c, bx[static_cast<std::size_t>(c - 1)]);
    out.set(n + 1, n + 1, corner);
    return out;
}

SymMatrix conjugate_by_diagonal(const SymMatrix& b, const std::vector<Rational>& d) {
    const int n = b.order();
    if (static_cast<int>(d.size()) != n)
        throw std::invalid_argument("conjugate_by_diagonal: d must have length n");
    SymMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            out.set(i, j, d[static_cast<std::size_t>(i - 1)] * b.at(i, j) * d[static_cast<std::size_t>(j - 1)]);
    return out;
}

}  // namespace prseq
