#include "geokit/cyc_matrix.hpp"

#include <sstream>

namespace geokit {

CycMatrix CycMatrix::identity() { return scalar(Cyclotomic(1)); }

CycMatrix CycMatrix::scalar(const Cyclotomic &lambda) {
    CycMatrix m;
    for (int i = 0; i < 3; ++i) m.at(i, i) = lambda;
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix &o) const {
    CycMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Cyclotomic s;
            for (int k = 0; k < 3; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix &o) const {
    CycMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

CycMatrix CycMatrix::conj_transpose() const {
    CycMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i).conj();
    return r;
}

Cyclotomic CycMatrix::det() const {
    Cyclotomic d;
    d = d + at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
    d = d - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
    d = d + at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    return d;
}

CycMatrix CycMatrix::inverse() const {
    Cyclotomic d = det();
    if (!d.is_unit())
        throw SingularMatrix("inverse: determinant " + d.str() + " is not a unit");
    Cyclotomic dinv = d.inverse();
    CycMatrix adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            // adj(j,i) = cofactor(i,j); the cyclic index choice keeps signs +1.
            adj.at(j, i) = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
        }
    CycMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = adj.at(i, j) * dinv;
    return r;
}

std::optional<Cyclotomic> CycMatrix::as_scalar() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !at(i, j).is_zero()) return std::nullopt;
    if (at(0, 0) != at(1, 1) || at(1, 1) != at(2, 2)) return std::nullopt;
    return at(0, 0);
}

std::string CycMatrix::str() const {
    std::ostringstream os;
    os << "[ ";
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            os << at(i, j).str();
            if (j < 2) os << ", ";
        }
        if (i < 2) os << " ; ";
    }
    os << " ]";
    return os.str();
}

bool preserves_form(const CycMatrix &P, const CycMatrix &A) {
    return P.conj_transpose() * A * P == A;
}

std::optional<ScalarWitness> scalar_equivalent(const CycMatrix &P, const CycMatrix &Q,
                                               const std::string &relation_name) {
    CycMatrix ratio = P * Q.inverse();
    auto lambda = ratio.as_scalar();
    if (!lambda || !lambda->is_unit()) return std::nullopt;
    return ScalarWitness{*lambda, relation_name};
}

}  // namespace geokit
