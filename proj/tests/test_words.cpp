#include <doctest.h>

#include <random>
#include <stdexcept>

#include "geokit/word.hpp"

using geokit::Syllable;
using geokit::Word;

namespace {

Word random_word(std::mt19937 &rng) {
    static const char *names[4] = {"x", "y", "z", "w"};
    std::uniform_int_distribution<int> len(0, 8), pick(0, 3), ex(-3, 3);
    std::vector<Syllable> syl;
    int n = len(rng);
    for (int i = 0; i < n; ++i) syl.push_back({names[pick(rng)], ex(rng)});
    return Word(std::move(syl));
}

}  // namespace

TEST_CASE("free reduction cancels") {
    Word w({{"x", 1}, {"x", -1}});
    CHECK(w.empty());
    CHECK(geokit::commutator(Word::generator("x"), Word::generator("x")).empty());
    Word deep({{"a", 1}, {"b", 1}, {"b", -1}, {"a", -1}, {"c", 2}});
    CHECK(deep == Word::generator("c", 2));
}

TEST_CASE("commutator convention and abelianization") {
    // [a, b] = a^-1 b^-1 a b
    Word c = geokit::commutator(Word::generator("a"), Word::generator("b"));
    CHECK(c.str() == "a^-1*b^-1*a*b");
    CHECK(c.exponent_sum("a") == 0);
    CHECK(c.exponent_sum("b") == 0);

    // [b1^-1, d1^-1] * a1^-1 abelianizes to -a1.
    Word rel = geokit::commutator(Word::generator("b1", -1), Word::generator("d1", -1)) *
               Word::generator("a1", -1);
    CHECK(rel.exponent_sum("a1") == -1);
    CHECK(rel.exponent_sum("b1") == 0);
    CHECK(rel.exponent_sum("d1") == 0);
}

TEST_CASE("inverse and concatenation") {
    Word w = Word::parse("a^2*b^-1*c");
    CHECK((w * w.inverse()).empty());
    CHECK((w.inverse() * w).empty());
    CHECK(w.inverse().str() == "c^-1*b*a^-2");
    CHECK(w.pow(0).empty());
    CHECK(w.pow(2) == w * w);
    CHECK(w.pow(-2) == (w * w).inverse());
}

TEST_CASE("parse and format round-trip") {
    for (const char *s : {"1", "a1", "a1^-1", "a1^-1*d1^-1*a1*d1*a1^-1", "c^2", "r.x*y^-3"}) {
        Word w = Word::parse(s);
        CHECK(w.str() == s);
        CHECK(Word::parse(w.str()) == w);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("a^"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("a**b"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("a*"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("^2"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("a b"), std::invalid_argument);
}

TEST_CASE("random words: reduction is idempotent and round-trips") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(rng);
        CHECK(Word(w.syllables()) == w);          // already reduced
        CHECK(Word::parse(w.str()) == w);          // serialization is faithful
        CHECK(w.inverse().inverse() == w);
        Word v = random_word(rng);
        CHECK((w * v).length() <= w.length() + v.length());
        CHECK((w * v).inverse() == v.inverse() * w.inverse());
    }
}

TEST_CASE("renaming") {
    Word w = Word::parse("a*b^-2*a");
    Word r = w.renamed({{"a", "r.a"}});
    CHECK(r.str() == "r.a*b^-2*r.a");
    CHECK(r.exponent_sum("r.a") == 2);
}
