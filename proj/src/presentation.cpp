#include "geokit/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace geokit {

bool Presentation::has_generator(const std::string &g) const {
    return std::find(generators.begin(), generators.end(), g) != generators.end();
}

void Presentation::validate_word(const Word &w) const {
    for (const Syllable &s : w.syllables())
        if (!has_generator(s.gen))
            throw UnknownGenerator("unknown generator \"" + s.gen + "\" in relator " + w.str());
}

std::string Presentation::str() const {
    std::ostringstream os;
    os << "gen";
    for (const auto &g : generators) os << " " << g;
    os << "\n";
    for (const Word &r : relators) os << "rel " << r.str() << "\n";
    if (!rationally_trivial.empty()) {
        os << "qtrivial";
        for (const auto &g : rationally_trivial) os << " " << g;
        os << "\n";
    }
    return os.str();
}

Presentation Presentation::parse(const std::string &text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    bool saw_gen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "gen") {
            std::string g;
            while (ls >> g) p.generators.push_back(g);
            saw_gen = true;
        } else if (tag == "rel") {
            std::string w;
            ls >> w;
            p.relators.push_back(Word::parse(w));
        } else if (tag == "qtrivial") {
            std::string g;
            while (ls >> g) p.rationally_trivial.push_back(g);
        } else {
            throw std::invalid_argument("presentation parse error at line " +
                                        std::to_string(lineno) + ": unknown tag \"" + tag + "\"");
        }
    }
    if (!saw_gen)
        throw std::invalid_argument("presentation parse error: missing gen line");
    for (const Word &r : p.relators) p.validate_word(r);
    for (const auto &g : p.rationally_trivial)
        if (!p.has_generator(g))
            throw UnknownGenerator("unknown generator \"" + g + "\" in qtrivial line");
    return p;
}

Word SurgeryDatum::relator() const {
    Word r = meridian.pow(-static_cast<long long>(sign) * num);
    if (den != 0) r = r * lagrangian_push_off.pow(-den);
    return r;
}

Presentation free_product(const Presentation &P, const Presentation &Q,
                          const std::string &clash_prefix) {
    bool clash = false;
    for (const auto &g : Q.generators)
        if (P.has_generator(g)) clash = true;

    Presentation q = Q;
    if (clash) {
        std::vector<std::pair<std::string, std::string>> rename;
        for (auto &g : q.generators) {
            rename.push_back({g, clash_prefix + g});
            g = clash_prefix + g;
        }
        for (auto &r : q.relators) r = r.renamed(rename);
        for (auto &g : q.rationally_trivial) g = clash_prefix + g;
    }

    Presentation out = P;
    for (const auto &g : q.generators) out.generators.push_back(g);
    for (const auto &r : q.relators) out.relators.push_back(r);
    for (const auto &g : q.rationally_trivial) out.rationally_trivial.push_back(g);
    for (const auto &n : Q.notes) out.notes.push_back(n);
    if (clash)
        out.notes.push_back("free product renamed right-side generators with prefix \"" +
                            clash_prefix + "\"");
    return out;
}

Presentation add_relators(const Presentation &P, const std::vector<Word> &ws) {
    Presentation out = P;
    for (const Word &w : ws) {
        out.validate_word(w);
        out.relators.push_back(w);
    }
    return out;
}

Presentation apply_surgery(const Presentation &P, const SurgeryDatum &s) {
    return add_relators(P, {s.relator()});
}

Presentation identify_generators(const Presentation &P,
                                 const std::vector<std::pair<Word, Word>> &pairs) {
    std::vector<Word> rels;
    rels.reserve(pairs.size());
    for (const auto &[w1, w2] : pairs) rels.push_back(w1 * w2.inverse());
    return add_relators(P, rels);
}

Presentation attach_rationally_trivial_side(const Presentation &P,
                                            const std::vector<std::string> &gens) {
    Presentation out = P;
    for (const auto &g : gens) {
        if (!out.has_generator(g))
            throw UnknownGenerator("attach_rationally_trivial_side: unknown generator \"" + g +
                                   "\"");
        if (std::find(out.rationally_trivial.begin(), out.rationally_trivial.end(), g) ==
            out.rationally_trivial.end())
            out.rationally_trivial.push_back(g);
    }
    return out;
}

IntMatrix abelianized_matrix(const Presentation &P) {
    IntMatrix m(P.relators.size(), P.generators.size());
    for (size_t i = 0; i < P.relators.size(); ++i)
        for (size_t j = 0; j < P.generators.size(); ++j)
            m.at(i, j) = static_cast<long>(P.relators[i].exponent_sum(P.generators[j]));
    return m;
}

AbelianGroup h1(const Presentation &P) {
    IntMatrix A = abelianized_matrix(P);
    if (P.rationally_trivial.empty()) return cokernel(A);
    // Kill the identified generators: the result is the image of H1 under the
    // surjection that collapses the glued side, so rank is exact and torsion
    // is a lower bound.
    IntMatrix B(A.rows() + P.rationally_trivial.size(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) B.at(i, j) = A.at(i, j);
    for (size_t k = 0; k < P.rationally_trivial.size(); ++k) {
        auto it = std::find(P.generators.begin(), P.generators.end(), P.rationally_trivial[k]);
        B.at(A.rows() + k, static_cast<size_t>(it - P.generators.begin())) = 1;
    }
    AbelianGroup g = cokernel(B);
    g.torsion_is_lower_bound = true;
    return g;
}

long b1(const Presentation &P) { return h1(P).rank; }

Presentation surface_group(int genus, const std::string &a_name, const std::string &b_name) {
    Presentation p;
    Word rel;
    for (int i = 1; i <= genus; ++i) {
        std::string a = a_name + std::to_string(i);
        std::string b = b_name + std::to_string(i);
        p.generators.push_back(a);
        p.generators.push_back(b);
        rel = rel * commutator(Word::generator(a), Word::generator(b));
    }
    if (genus > 0) p.relators.push_back(rel);
    return p;
}

Presentation direct_product(const Presentation &P, const Presentation &Q) {
    Presentation out = free_product(P, Q);
    size_t np = P.generators.size();
    for (size_t i = 0; i < np; ++i)
        for (size_t j = np; j < out.generators.size(); ++j)
            out.relators.push_back(commutator(Word::generator(out.generators[i]),
                                              Word::generator(out.generators[j])));
    return out;
}

}  // namespace geokit
