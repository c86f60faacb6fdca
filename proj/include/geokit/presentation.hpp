#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geokit/int_matrix.hpp"
#include "geokit/word.hpp"

namespace geokit {

struct UnknownGenerator : std::invalid_argument {
    explicit UnknownGenerator(const std::string &what) : std::invalid_argument(what) {}
};

/// Finitely presented group: an ordered generator list and relator words.
/// Generators may additionally be marked rationally trivial, which models
/// gluing them into a side whose rational first homology vanishes: h1 then
/// kills them, the rank is exact and the torsion is only a lower bound.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::vector<std::string> rationally_trivial;
    std::vector<std::string> notes;  // provenance (renames, data flags)

    bool has_generator(const std::string &g) const;
    void validate_word(const Word &w) const;  // throws UnknownGenerator

    bool operator==(const Presentation &o) const {
        return generators == o.generators && relators == o.relators &&
               rationally_trivial == o.rationally_trivial;
    }

    /// Line format: "gen a1 b1 ...", then "rel <word>" per relator, then an
    /// optional "qtrivial g ..." line. Round-trips bit-exactly.
    std::string str() const;
    static Presentation parse(const std::string &text);
};

/// Torus surgery data. The surgery coefficient is sign * num / den; den = 0
/// degenerates to the trivial filling of the push-off direction.
/// apply_surgery adds the relator meridian^(-sign*num) * pushoff^(-den),
/// oriented the way the surgered relation lists print it (push-off power on
/// the right-hand side); the inverse word generates the same normal subgroup.
struct SurgeryDatum {
    Word meridian;
    Word lagrangian_push_off;
    long long num = 1;
    long long den = 1;
    int sign = 1;

    Word relator() const;
    bool operator==(const SurgeryDatum &o) const {
        return meridian == o.meridian && lagrangian_push_off == o.lagrangian_push_off &&
               num == o.num && den == o.den && sign == o.sign;
    }
};

/// Free product; on a name clash every right-hand generator is prefixed
/// (default "r.") and the rename is recorded in notes.
Presentation free_product(const Presentation &P, const Presentation &Q,
                          const std::string &clash_prefix = "r.");

Presentation add_relators(const Presentation &P, const std::vector<Word> &ws);

Presentation apply_surgery(const Presentation &P, const SurgeryDatum &s);

/// Adds relators w1 * w2^-1 for each pair.
Presentation identify_generators(const Presentation &P,
                                 const std::vector<std::pair<Word, Word>> &pairs);

Presentation attach_rationally_trivial_side(const Presentation &P,
                                            const std::vector<std::string> &gens);

/// Rows = relators, columns = generators, entries = exponent sums.
IntMatrix abelianized_matrix(const Presentation &P);

AbelianGroup h1(const Presentation &P);
long b1(const Presentation &P);

/// Standard genus-g surface group, generators a1,b1,...,ag,bg and the single
/// product-of-commutators relator. g = 0 gives the trivial group.
Presentation surface_group(int genus, const std::string &a_name = "a",
                           const std::string &b_name = "b");

/// Direct product with all cross commutators spelled out.
Presentation direct_product(const Presentation &P, const Presentation &Q);

}  // namespace geokit
