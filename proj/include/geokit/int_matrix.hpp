#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace geokit {

struct NotPrime : std::domain_error {
    explicit NotPrime(const std::string &what) : std::domain_error(what) {}
};

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Zero-dimensional matrices are legal (degenerate presentations occur).
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, mpz_class(0)) {}

    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>> &rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const mpz_class &at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    mpz_class &at(size_t i, size_t j) { return e_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix &o) const;
    bool operator==(const IntMatrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    void swap_rows(size_t a, size_t b);
    void swap_cols(size_t a, size_t b);
    void add_row_multiple(size_t dst, size_t src, const mpz_class &k);  // row dst += k * row src
    void add_col_multiple(size_t dst, size_t src, const mpz_class &k);
    void negate_row(size_t i);
    void negate_col(size_t j);

    /// Exact determinant (square matrices), Bareiss fraction-free elimination.
    mpz_class det() const;

    std::string str() const;

  private:
    size_t rows_, cols_;
    std::vector<mpz_class> e_;
};

/// Smith normal form: U * A * V = S with U, V unimodular and S diagonal,
/// diagonal entries nonnegative and forming a divisibility chain.
struct SnfResult {
    IntMatrix S, U, V;
    std::vector<mpz_class> invariant_factors;  // the nonzero diagonal entries
};

/// Deterministic SNF: the pivot is always the minimal-absolute-value nonzero
/// entry of the trailing submatrix, ties broken by lowest (row, col).
SnfResult snf(const IntMatrix &A);

/// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
    long rank = 0;
    std::vector<mpz_class> torsion;       // invariant factors > 1, each dividing the next
    bool torsion_is_lower_bound = false;  // set when identified generators were killed

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup &o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    std::string str() const;  // "Z^2 + Z/3 + Z/6", "0"
};

/// Cokernel Z^cols / (row span of A).
AbelianGroup cokernel(const IntMatrix &A);

/// Rank of A over the field with p elements; throws NotPrime.
size_t rank_mod_p(const IntMatrix &A, const mpz_class &p);

}  // namespace geokit
