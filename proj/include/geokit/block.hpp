#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geokit/presentation.hpp"

namespace geokit {

struct GenusMismatch : std::invalid_argument {
    explicit GenusMismatch(const std::string &w) : std::invalid_argument(w) {}
};
struct SquareMismatch : std::invalid_argument {
    explicit SquareMismatch(const std::string &w) : std::invalid_argument(w) {}
};
struct UnsupportedIntersectionPattern : std::invalid_argument {
    explicit UnsupportedIntersectionPattern(const std::string &w) : std::invalid_argument(w) {}
};
struct MissingPresentation : std::logic_error {
    explicit MissingPresentation(const std::string &w) : std::logic_error(w) {}
};
struct NonIntegralGenus : std::invalid_argument {
    explicit NonIntegralGenus(const std::string &w) : std::invalid_argument(w) {}
};
struct NegativeGenus : std::invalid_argument {
    explicit NegativeGenus(const std::string &w) : std::invalid_argument(w) {}
};
struct HalfIntegerB2 : std::invalid_argument {
    explicit HalfIntegerB2(const std::string &w) : std::invalid_argument(w) {}
};

enum class Parity { Odd, Even, Unknown };
std::string parity_str(Parity p);

/// Embedded surface tracked through the constructions. When it is flagged
/// adjunction-exact and carries K.S, genus = 1 + (S.S + K.S)/2 must hold;
/// construction enforces it.
struct TrackedSurface {
    std::string label;
    int genus = 0;
    long long self_intersection = 0;
    std::optional<long long> k_pairing;
    bool symplectic = true;
    bool adjunction_exact = false;
};

TrackedSurface make_surface(std::string label, int genus, long long self_intersection,
                            std::optional<long long> k_pairing, bool symplectic,
                            bool adjunction_exact);

/// Exact characteristic numbers: chi_h = (e + sigma)/4 as a reduced
/// fraction, c1^2 = 2e + 3*sigma, and the c1^2 = 9*chi_h test.
struct CharNumbers {
    long long chi_num = 0;
    long long chi_den = 1;
    long long c1sq = 0;
    bool on_bmy_line = false;
    std::string chi_str() const;
};

/// 4-manifold building block. Derived quantities are always recomputed,
/// never stored.
struct Block {
    std::string name;
    long long euler = 0;
    long long signature = 0;
    std::optional<long> b1;
    bool symplectic = false;
    std::optional<bool> minimal;
    Parity parity = Parity::Unknown;
    std::string parity_note;
    bool almost_complex = false;  // when set, e + sigma mod 4 == 0 is enforced
    std::vector<TrackedSurface> surfaces;
    std::optional<Presentation> presentation;
    std::vector<std::string> provenance;

    long long c1_sq() const { return 2 * euler + 3 * signature; }
    const TrackedSurface *find_surface(const std::string &label) const;
    void validate() const;
};

CharNumbers char_numbers(const Block &B);

struct Profile {
    long long b2 = 0, b2_plus = 0, b2_minus = 0;
    CharNumbers chars;
    Parity parity = Parity::Unknown;
    std::string model;  // rational-homology model when b1 = 0 and parity known
};

/// Genus from the adjunction formula, 1 + (S.S + K.S)/2.
int adjunction_genus(long long self_intersection, long long k_pairing);

/// Sigma_g x Sigma_h with its product group and the two canonical square-zero
/// surfaces (K.S = 2g-2 resp. 2h-2).
Block product_block(int g, int h);

/// Blow-up at a generic point, or through `through_surface` with the given
/// multiplicity (square drops by multiplicity^2, genus unchanged).
Block blow_up(const Block &B);
Block blow_up(const Block &B, const std::string &through_surface, long long multiplicity);

TrackedSurface sew_surfaces(const TrackedSurface &s1, const TrackedSurface &s2,
                            int intersections_with_gluing_surface);

/// Data describing one normal connected sum. Surfaces listed in `sew` meet
/// the gluing surface once on their side and are sewn across; surfaces in
/// `consumed` meet it but are not sewn, so they do not survive closed.
/// `right_relators_removed` uses the right side's original generator names;
/// `identify` pairs and `right_meridian` use the names after the free
/// product (an "r." prefix on a clash).
struct GluingSpec {
    struct SewPair {
        std::string left, right, result;
        int intersections = 1;
    };
    std::vector<SewPair> sew;
    std::vector<std::string> consumed;
    std::vector<std::pair<Word, Word>> identify;      // when both sides have groups
    std::vector<std::string> left_identified_gens;    // glued into the other side
    std::optional<Word> left_meridian;
    std::optional<Word> right_meridian;
    std::vector<Word> left_relators_removed;          // fail in the complement
    std::vector<Word> right_relators_removed;
    bool right_meridian_trivial = false;              // right meridians die (given)
    bool keep_parallel_copy = false;                  // push-off survives for chaining
    std::string parallel_label;
    std::optional<Parity> parity_assertion;
    std::string parity_assertion_note;
};

Block fiber_sum(const Block &A, const std::string &surface_A, const Block &B,
                const std::string &surface_B, const GluingSpec &glue);

/// Adds the surgery relator; e and sigma never change, the symplectic flag
/// survives only coefficient-numerator-1 data.
Block torus_surgery(const Block &B, const SurgeryDatum &datum, const std::string &torus_label);

Profile homology_profile(const Block &B);

Block mumford_m();
Block mumford_blown();  // M # CPbar with Sigma3bar (square 0) and E tracked
Block cs_surface(int n);
std::vector<Block> builtin_blocks();
std::optional<Block> builtin_block(const std::string &name);

/// One block per line, stable column order.
std::string blocks_table();

}  // namespace geokit
