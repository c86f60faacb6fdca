#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace geokit {

struct NotAUnit : std::domain_error {
    explicit NotAUnit(const std::string &what) : std::domain_error(what) {}
};

/// Element of Z[zeta], zeta a primitive 12th root of unity, written in the
/// power basis {1, zeta, zeta^2, zeta^3} with zeta^4 = zeta^2 - 1.
/// The representation is canonical: two elements are equal iff all four
/// coefficients agree. All arithmetic is exact.
class Cyclotomic {
  public:
    Cyclotomic() : c_{0, 0, 0, 0} {}
    Cyclotomic(mpz_class c0, mpz_class c1, mpz_class c2, mpz_class c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
    Cyclotomic(long n) : c_{n, 0, 0, 0} {}  // NOLINT: implicit from integers

    static Cyclotomic zeta_power(int k);  // zeta^k, any integer k
    static Cyclotomic sqrt3() { return Cyclotomic(0, 2, 0, -1); }  // 2z - z^3

    const mpz_class &coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_integer() const;  // lies in Z
    bool is_real() const { return conj() == *this; }

    Cyclotomic operator+(const Cyclotomic &o) const;
    Cyclotomic operator-(const Cyclotomic &o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic &o) const;
    bool operator==(const Cyclotomic &o) const { return c_ == o.c_; }
    bool operator!=(const Cyclotomic &o) const { return !(*this == o); }

    /// Complex conjugation, zeta -> zeta^-1 = zeta - zeta^3. Ring involution.
    Cyclotomic conj() const;

    /// Galois map zeta -> zeta^k for k in {1, 5, 7, 11}.
    Cyclotomic galois(int k) const;

    /// Field norm: product of the four Galois conjugates. Always a rational
    /// integer; nonnegative since the field is totally imaginary.
    mpz_class norm() const;

    bool is_unit() const;

    /// Multiplicative inverse; throws NotAUnit unless norm is +-1.
    Cyclotomic inverse() const;

    Cyclotomic pow(long e) const;  // negative e requires a unit

    /// Canonical rendering, e.g. "1+z-z^2-z^3", "2*z-z^3", "0".
    std::string str() const;

  private:
    std::array<mpz_class, 4> c_;
};

inline Cyclotomic operator*(const mpz_class &n, const Cyclotomic &x) {
    return Cyclotomic(n, 0, 0, 0) * x;
}

}  // namespace geokit
