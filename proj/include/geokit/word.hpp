#pragma once

#include <string>
#include <utility>
#include <vector>

namespace geokit {

/// Syllable of a group word: a generator name with a nonzero exponent.
struct Syllable {
    std::string gen;
    long long exp;
    bool operator==(const Syllable &o) const { return gen == o.gen && exp == o.exp; }
};

/// Freely reduced group word, run-length encoded. Construction reduces, so
/// adjacent syllables always have distinct generators and nonzero exponents;
/// equality of words is equality in the free group.
class Word {
  public:
    Word() = default;
    Word(std::initializer_list<Syllable> syllables);
    explicit Word(std::vector<Syllable> syllables);

    static Word generator(const std::string &g, long long e = 1);

    /// Parses the serialization format, e.g. "a1^-1*d1^-1*a1*d1". "1" is the
    /// empty word. Throws std::invalid_argument with a position message.
    static Word parse(const std::string &text);

    const std::vector<Syllable> &syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    size_t length() const;  // total letter count, sum of |exp|

    Word inverse() const;
    Word operator*(const Word &o) const;  // concatenation, reduced
    Word pow(long long k) const;
    bool operator==(const Word &o) const { return syl_ == o.syl_; }
    bool operator!=(const Word &o) const { return !(*this == o); }

    /// Exponent sum of one generator (image in the abelianization).
    long long exponent_sum(const std::string &g) const;

    /// Applies a generator renaming; names absent from the map are kept.
    Word renamed(const std::vector<std::pair<std::string, std::string>> &map) const;

    std::string str() const;  // round-trips through parse bit-exactly

  private:
    std::vector<Syllable> syl_;
    void reduce();
};

inline Word free_reduce(const Word &w) { return w; }  // the type is the invariant

/// [a, b] = a^-1 b^-1 a b.
Word commutator(const Word &a, const Word &b);

}  // namespace geokit
