#include "geokit/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace geokit {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>> &rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("from_rows: ragged row lengths");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const mpz_class &aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

void IntMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const mpz_class &k) {
    for (size_t j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const mpz_class &k) {
    for (size_t i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

void IntMatrix::negate_row(size_t i) {
    for (size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(size_t j) {
    for (size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

mpz_class IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            size_t piv = k;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign == 1 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).get_str();
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// Minimal |entry| over the trailing submatrix, ties by lowest (row, col).
// Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix &S, size_t t, size_t &pi, size_t &pj) {
    bool found = false;
    mpz_class best;
    for (size_t i = t; i < S.rows(); ++i)
        for (size_t j = t; j < S.cols(); ++j) {
            const mpz_class &v = S.at(i, j);
            if (v == 0) continue;
            mpz_class a = abs(v);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SnfResult snf(const IntMatrix &A) {
    size_t m = A.rows(), n = A.cols();
    SnfResult r;
    r.S = A;
    r.U = IntMatrix::identity(m);
    r.V = IntMatrix::identity(n);
    IntMatrix &S = r.S;

    size_t limit = std::min(m, n);
    for (size_t t = 0; t < limit; ++t) {
        size_t pi = t, pj = t;
        if (!find_pivot(S, t, pi, pj)) break;
        S.swap_rows(t, pi);
        r.U.swap_rows(t, pi);
        S.swap_cols(t, pj);
        r.V.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot, then row t right of it. A
            // nonzero remainder becomes the new (smaller) pivot next pass.
            bool reduced = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (S.at(i, t) == 0) continue;
                mpz_class q = S.at(i, t) / S.at(t, t);
                if (q != 0) {
                    S.add_row_multiple(i, t, -q);
                    r.U.add_row_multiple(i, t, -q);
                }
                if (S.at(i, t) != 0) reduced = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (S.at(t, j) == 0) continue;
                mpz_class q = S.at(t, j) / S.at(t, t);
                if (q != 0) {
                    S.add_col_multiple(j, t, -q);
                    r.V.add_col_multiple(j, t, -q);
                }
                if (S.at(t, j) != 0) reduced = false;
            }
            if (!reduced) {
                size_t qi, qj;
                find_pivot(S, t, qi, qj);
                S.swap_rows(t, qi);
                r.U.swap_rows(t, qi);
                S.swap_cols(t, qj);
                r.V.swap_cols(t, qj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the trailing
            // block by folding a bad row into row t and starting over.
            bool divides_all = true;
            for (size_t i = t + 1; i < m && divides_all; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (S.at(i, j) % S.at(t, t) != 0) {
                        S.add_row_multiple(t, i, 1);
                        r.U.add_row_multiple(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (S.at(t, t) < 0) {
            S.negate_row(t);
            r.U.negate_row(t);
        }
    }
    for (size_t t = 0; t < limit; ++t)
        if (S.at(t, t) != 0) r.invariant_factors.push_back(S.at(t, t));
    return r;
}

AbelianGroup cokernel(const IntMatrix &A) {
    SnfResult s = snf(A);
    AbelianGroup g;
    g.rank = static_cast<long>(A.cols()) - static_cast<long>(s.invariant_factors.size());
    for (const mpz_class &d : s.invariant_factors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

std::string AbelianGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << (rank == 1 ? "Z" : "Z^" + std::to_string(rank));
        first = false;
    }
    for (const mpz_class &d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    if (torsion_is_lower_bound) os << " (torsion is a lower bound)";
    return os.str();
}

size_t rank_mod_p(const IntMatrix &A, const mpz_class &p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw NotPrime("rank_mod_p: " + p.get_str() + " is not prime");
    size_t m = A.rows(), n = A.cols();
    std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            a[i][j] = A.at(i, j) % p;
            if (a[i][j] < 0) a[i][j] += p;
        }
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t piv = rank;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[rank], a[piv]);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), a[rank][col].get_mpz_t(), p.get_mpz_t());
        for (size_t j = col; j < n; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (size_t i = 0; i < m; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            mpz_class f = a[i][col];
            for (size_t j = col; j < n; ++j) {
                a[i][j] = (a[i][j] - f * a[rank][j]) % p;
                if (a[i][j] < 0) a[i][j] += p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace geokit
