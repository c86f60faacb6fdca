#include <doctest.h>

#include <random>

#include "geokit/cartwright_steger.hpp"
#include "geokit/cyc_matrix.hpp"

using geokit::CycMatrix;
using geokit::Cyclotomic;

namespace {

// Independent determinant route: the full signed permutation sum.
Cyclotomic leibniz_det(const CycMatrix &m) {
    Cyclotomic d;
    int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    for (int p = 0; p < 6; ++p) {
        Cyclotomic term = m.at(0, perms[p][0]) * m.at(1, perms[p][1]) * m.at(2, perms[p][2]);
        d = p < 3 ? d + term : d - term;
    }
    return d;
}

Cyclotomic small_elt(std::mt19937 &rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    return Cyclotomic(d(rng), d(rng), d(rng), d(rng));
}

CycMatrix random_matrix(std::mt19937 &rng) {
    CycMatrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = small_elt(rng);
    return m;
}

// Random invertible matrix: product of unit-diagonal and transvection factors.
CycMatrix random_invertible(std::mt19937 &rng) {
    std::uniform_int_distribution<int> pw(0, 11), pos(0, 2), count(2, 5);
    CycMatrix m = CycMatrix::identity();
    int steps = count(rng);
    for (int s = 0; s < steps; ++s) {
        CycMatrix f = CycMatrix::identity();
        if (pos(rng) == 0) {
            for (int i = 0; i < 3; ++i) f.at(i, i) = Cyclotomic::zeta_power(pw(rng));
        } else {
            int i = pos(rng), j = pos(rng);
            if (i == j) j = (j + 1) % 3;
            f.at(i, j) = small_elt(rng);
        }
        m = m * f;
    }
    return m;
}

}  // namespace

TEST_CASE("identity multiplication") {
    std::mt19937 rng(11);
    CycMatrix p = random_matrix(rng);
    CHECK(CycMatrix::identity() * p == p);
    CHECK(p * CycMatrix::identity() == p);
}

TEST_CASE("determinant of the diagonal generator") {
    CHECK(geokit::cs::gen_j().det() == Cyclotomic::zeta_power(2));
    CHECK(leibniz_det(geokit::cs::gen_j()) == Cyclotomic::zeta_power(2));
}

TEST_CASE("determinant matches the permanent-sum route") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        CycMatrix m = random_matrix(rng);
        CHECK(m.det() == leibniz_det(m));
    }
}

TEST_CASE("determinant is multiplicative on invertible pairs") {
    std::mt19937 rng(29);
    for (int i = 0; i < 100; ++i) {
        CycMatrix p = random_invertible(rng), q = random_invertible(rng);
        CHECK((p * q).det() == p.det() * q.det());
    }
}

TEST_CASE("conjugate-transpose is an involution") {
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        CycMatrix m = random_matrix(rng);
        CHECK(m.conj_transpose().conj_transpose() == m);
    }
}

TEST_CASE("the Hermitian form is its own conjugate-transpose") {
    const CycMatrix &A = geokit::cs::form_A();
    CHECK(A.conj_transpose() == A);
    CHECK(A.is_hermitian());
}

TEST_CASE("inverse and singularity") {
    std::mt19937 rng(37);
    for (int i = 0; i < 50; ++i) {
        CycMatrix p = random_invertible(rng);
        CHECK(p * p.inverse() == CycMatrix::identity());
        CHECK(p.inverse() * p == CycMatrix::identity());
    }
    CHECK_THROWS_AS(CycMatrix::scalar(Cyclotomic(2)).inverse(), geokit::SingularMatrix);
    CHECK_THROWS_AS(CycMatrix().inverse(), geokit::SingularMatrix);
}

TEST_CASE("form preservation basics") {
    const CycMatrix &A = geokit::cs::form_A();
    CHECK(geokit::preserves_form(CycMatrix::identity(), A));
    CHECK(geokit::preserves_form(geokit::cs::gen_u(), A));
    CHECK_FALSE(geokit::preserves_form(CycMatrix::scalar(Cyclotomic(2)), A));
}

TEST_CASE("form preservation is closed under products") {
    const CycMatrix &A = geokit::cs::form_A();
    const CycMatrix gens[4] = {geokit::cs::gen_u(), geokit::cs::gen_v(), geokit::cs::gen_j(),
                               geokit::cs::gen_b()};
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> pick(0, 3), len(1, 6);
    for (int trial = 0; trial < 30; ++trial) {
        CycMatrix p = CycMatrix::identity(), q = CycMatrix::identity();
        for (int i = len(rng); i > 0; --i) p = p * gens[pick(rng)];
        for (int i = len(rng); i > 0; --i) q = q * gens[pick(rng)];
        REQUIRE(geokit::preserves_form(p, A));
        REQUIRE(geokit::preserves_form(q, A));
        CHECK(geokit::preserves_form(p * q, A));
    }
}

TEST_CASE("scalar equivalence") {
    CycMatrix zi = CycMatrix::scalar(Cyclotomic::zeta_power(1));
    auto w = geokit::scalar_equivalent(zi, CycMatrix::identity(), "test");
    REQUIRE(w.has_value());
    CHECK(w->lambda == Cyclotomic::zeta_power(1));
    CHECK(w->relation_name == "test");

    // u and v differ by more than a scalar.
    CHECK_FALSE(geokit::scalar_equivalent(geokit::cs::gen_u(), geokit::cs::gen_v()));

    // Witness equation: P = lambda * Q exactly whenever a witness is returned.
    std::mt19937 rng(43);
    for (int i = 0; i < 20; ++i) {
        CycMatrix q = random_invertible(rng);
        Cyclotomic lambda = Cyclotomic::zeta_power(static_cast<int>(rng() % 12));
        CycMatrix p = CycMatrix::scalar(lambda) * q;
        auto ww = geokit::scalar_equivalent(p, q);
        REQUIRE(ww.has_value());
        CHECK(CycMatrix::scalar(ww->lambda) * q == p);
    }
    CHECK_THROWS_AS(geokit::scalar_equivalent(CycMatrix::identity(),
                                              CycMatrix::scalar(Cyclotomic(2))),
                    geokit::SingularMatrix);
}

TEST_CASE("scalar witness products stay in the fixed subring") {
    // lambda * conj(lambda) is conjugation-fixed for any witness lambda.
    for (int k = 0; k < 12; ++k) {
        Cyclotomic lam = Cyclotomic::zeta_power(k);
        Cyclotomic prod = lam * lam.conj();
        CHECK(prod.conj() == prod);
        CHECK(prod == Cyclotomic(1));
    }
}
