#include "geokit/cyclotomic.hpp"

#include <sstream>

namespace geokit {

Cyclotomic Cyclotomic::zeta_power(int k) {
    k %= 12;
    if (k < 0) k += 12;
    // zeta^6 = -1, so reduce to 0..5 with a sign.
    int sign = 1;
    if (k >= 6) {
        k -= 6;
        sign = -1;
    }
    Cyclotomic r;
    switch (k) {
        case 0: r = Cyclotomic(1, 0, 0, 0); break;
        case 1: r = Cyclotomic(0, 1, 0, 0); break;
        case 2: r = Cyclotomic(0, 0, 1, 0); break;
        case 3: r = Cyclotomic(0, 0, 0, 1); break;
        case 4: r = Cyclotomic(-1, 0, 1, 0); break;  // zeta^2 - 1
        default: r = Cyclotomic(0, -1, 0, 1); break; // zeta^3 - zeta
    }
    return sign == 1 ? r : -r;
}

bool Cyclotomic::is_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Cyclotomic::is_integer() const {
    return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic &o) const {
    return Cyclotomic(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic &o) const {
    return Cyclotomic(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

Cyclotomic Cyclotomic::operator-() const {
    return Cyclotomic(-c_[0], -c_[1], -c_[2], -c_[3]);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic &o) const {
    // Convolve to degree 6, then fold with zeta^4 = zeta^2 - 1,
    // zeta^5 = zeta^3 - zeta, zeta^6 = -1.
    std::array<mpz_class, 7> t;
    for (auto &v : t) v = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    return Cyclotomic(t[0] - t[4] - t[6],
                      t[1] - t[5],
                      t[2] + t[4],
                      t[3] + t[5]);
}

Cyclotomic Cyclotomic::conj() const {
    // conj(1) = 1, conj(z) = z - z^3, conj(z^2) = 1 - z^2, conj(z^3) = -z^3.
    return Cyclotomic(c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]);
}

Cyclotomic Cyclotomic::galois(int k) const {
    switch (k) {
        case 1:
            return *this;
        case 7:
            // zeta -> -zeta: negate odd powers.
            return Cyclotomic(c_[0], -c_[1], c_[2], -c_[3]);
        case 11:
            return conj();
        case 5:
            // sigma_5 = sigma_7 . sigma_11
            return conj().galois(7);
        default:
            throw std::invalid_argument("galois: k must be one of 1, 5, 7, 11");
    }
}

mpz_class Cyclotomic::norm() const {
    Cyclotomic p = (*this) * galois(5) * galois(7) * galois(11);
    if (!p.is_integer())
        throw std::logic_error("norm: conjugate product not rational");
    return p.coeff(0);
}

bool Cyclotomic::is_unit() const {
    mpz_class n = norm();
    return n == 1 || n == -1;
}

Cyclotomic Cyclotomic::inverse() const {
    mpz_class n = norm();
    if (n != 1 && n != -1)
        throw NotAUnit("inverse: element has norm " + n.get_str());
    Cyclotomic cof = galois(5) * galois(7) * galois(11);
    return n == 1 ? cof : -cof;
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Cyclotomic acc(1);
    while (k > 0) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::string Cyclotomic::str() const {
    static const char *names[4] = {"", "z", "z^2", "z^3"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        const mpz_class &v = c_[static_cast<size_t>(i)];
        if (v == 0) continue;
        mpz_class a = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << names[i];
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace geokit
