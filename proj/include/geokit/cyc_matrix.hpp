#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "geokit/cyclotomic.hpp"

namespace geokit {

struct SingularMatrix : std::domain_error {
    explicit SingularMatrix(const std::string &what) : std::domain_error(what) {}
};

/// 3x3 matrix over Z[zeta12]. Value type, exact arithmetic throughout.
class CycMatrix {
  public:
    CycMatrix() = default;
    explicit CycMatrix(std::array<Cyclotomic, 9> entries) : e_(std::move(entries)) {}

    static CycMatrix identity();
    static CycMatrix scalar(const Cyclotomic &lambda);

    const Cyclotomic &at(int i, int j) const { return e_[static_cast<size_t>(3 * i + j)]; }
    Cyclotomic &at(int i, int j) { return e_[static_cast<size_t>(3 * i + j)]; }

    CycMatrix operator*(const CycMatrix &o) const;
    CycMatrix operator+(const CycMatrix &o) const;
    bool operator==(const CycMatrix &o) const { return e_ == o.e_; }
    bool operator!=(const CycMatrix &o) const { return !(*this == o); }

    /// Entrywise conjugation composed with transpose; an involution.
    CycMatrix conj_transpose() const;

    /// Exact determinant by cofactor expansion.
    Cyclotomic det() const;

    /// Adjugate-based inverse; throws SingularMatrix unless det is a unit.
    CycMatrix inverse() const;

    /// If the matrix equals lambda * I, returns lambda.
    std::optional<Cyclotomic> as_scalar() const;

    bool is_hermitian() const { return conj_transpose() == *this; }

    std::string str() const;  // "[ a, b, c ; d, e, f ; g, h, i ]"

  private:
    std::array<Cyclotomic, 9> e_{};
};

/// Unit scalar witnessing an equality "P = lambda * Q" (projective equality).
struct ScalarWitness {
    Cyclotomic lambda;
    std::string relation_name;
};

/// True iff P* A P = A exactly. A is expected Hermitian.
bool preserves_form(const CycMatrix &P, const CycMatrix &A);

/// Returns a witness lambda with P = lambda * Q (lambda a unit), if one
/// exists; throws SingularMatrix when Q is not invertible.
std::optional<ScalarWitness> scalar_equivalent(const CycMatrix &P, const CycMatrix &Q,
                                               const std::string &relation_name = "");

}  // namespace geokit
