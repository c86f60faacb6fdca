#include "geokit/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace geokit {

Word::Word(std::initializer_list<Syllable> syllables) : syl_(syllables) { reduce(); }
Word::Word(std::vector<Syllable> syllables) : syl_(std::move(syllables)) { reduce(); }

Word Word::generator(const std::string &g, long long e) {
    return Word({Syllable{g, e}});
}

void Word::reduce() {
    std::vector<Syllable> out;
    for (const Syllable &s : syl_) {
        if (s.exp == 0) continue;
        if (!out.empty() && out.back().gen == s.gen) {
            out.back().exp += s.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    syl_ = std::move(out);
}

size_t Word::length() const {
    size_t n = 0;
    for (const Syllable &s : syl_) n += static_cast<size_t>(s.exp < 0 ? -s.exp : s.exp);
    return n;
}

Word Word::inverse() const {
    std::vector<Syllable> out;
    out.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
        out.push_back(Syllable{it->gen, -it->exp});
    Word w;
    w.syl_ = std::move(out);  // reversal of a reduced word is reduced
    return w;
}

Word Word::operator*(const Word &o) const {
    std::vector<Syllable> cat = syl_;
    cat.insert(cat.end(), o.syl_.begin(), o.syl_.end());
    return Word(std::move(cat));
}

Word Word::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    Word acc;
    for (long long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

long long Word::exponent_sum(const std::string &g) const {
    long long s = 0;
    for (const Syllable &sy : syl_)
        if (sy.gen == g) s += sy.exp;
    return s;
}

Word Word::renamed(const std::vector<std::pair<std::string, std::string>> &map) const {
    std::vector<Syllable> out = syl_;
    for (Syllable &s : out)
        for (const auto &[from, to] : map)
            if (s.gen == from) {
                s.gen = to;
                break;
            }
    return Word(std::move(out));
}

std::string Word::str() const {
    if (syl_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Syllable &s : syl_) {
        if (!first) os << "*";
        os << s.gen;
        if (s.exp != 1) os << "^" << s.exp;
        first = false;
    }
    return os.str();
}

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

}  // namespace

Word Word::parse(const std::string &text) {
    if (text == "1") return Word();
    if (text.empty()) throw std::invalid_argument("word parse error: empty input");
    std::vector<Syllable> out;
    size_t i = 0;
    const size_t n = text.size();
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("word parse error at position " + std::to_string(i) +
                                    ": " + msg + " in \"" + text + "\"");
    };
    while (i < n) {
        if (!name_start(text[i])) fail("expected generator name");
        size_t start = i;
        while (i < n && name_char(text[i])) ++i;
        std::string gen = text.substr(start, i - start);
        long long exp = 1;
        if (i < n && text[i] == '^') {
            ++i;
            size_t es = i;
            if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == es || (i == es + 1 && !std::isdigit(static_cast<unsigned char>(text[es]))))
                fail("expected exponent");
            exp = std::stoll(text.substr(es, i - es));
        }
        out.push_back(Syllable{gen, exp});
        if (i < n) {
            if (text[i] != '*') fail("expected '*'");
            ++i;
            if (i == n) fail("trailing '*'");
        }
    }
    return Word(std::move(out));
}

Word commutator(const Word &a, const Word &b) {
    return a.inverse() * b.inverse() * a * b;
}

}  // namespace geokit
