#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "geokit/block.hpp"
#include "geokit/presentation.hpp"

namespace geokit {

struct SyntaxError : std::runtime_error {
    int line;
    SyntaxError(int line_, const std::string &what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};
struct UnknownStep : std::runtime_error {
    explicit UnknownStep(const std::string &what) : std::runtime_error(what) {}
};
struct ParameterOutOfRange : std::runtime_error {
    explicit ParameterOutOfRange(const std::string &what) : std::runtime_error(what) {}
};

/// Recipe steps, fully expanded (parameters already substituted).
struct ProductStep {
    int g = 0, h = 0;
    std::string scaffold = "none";  // none | yn | y1 | zn
    bool operator==(const ProductStep &) const = default;
};
struct BlockStep {
    std::string catalog_name;
    bool operator==(const BlockStep &) const = default;
};
struct BlowUpStep {
    bool generic = true;
    std::string surface;
    long long multiplicity = 1;
    bool operator==(const BlowUpStep &) const = default;
};
struct SurfaceStep {  // track a class represented by a known surface
    std::string label;
    int genus = 0;
    long long square = 0;
    long long k_pairing = 0;
    bool operator==(const SurfaceStep &) const = default;
};
struct SurgeryStep {
    std::string torus_label;
    SurgeryDatum datum;
    bool operator==(const SurgeryStep &) const = default;
};
struct FiberSumStep {
    std::string left_surface;
    std::string right_block;
    std::string right_surface;
    GluingSpec glue;
    bool operator==(const FiberSumStep &) const = default;
};
struct AttachTrivialStep {
    std::vector<std::string> gens;
    bool operator==(const AttachTrivialStep &) const = default;
};

using Step = std::variant<ProductStep, BlockStep, BlowUpStep, SurfaceStep, SurgeryStep,
                          FiberSumStep, AttachTrivialStep>;

struct Expectation {
    std::string key;
    std::string value;
    std::string citation;
    bool operator==(const Expectation &) const = default;
};

struct Flag {
    std::string message;
    std::string citation;
    bool operator==(const Flag &) const = default;
};

struct Recipe {
    std::string name;
    std::vector<std::pair<std::string, long long>> params;  // resolved values, ordered
    std::vector<Step> steps;
    std::vector<Expectation> expects;
    std::vector<std::string> notes;     // header flags
    std::vector<Flag> annotations;      // cited not-computed annotations
    bool cs_section = false;            // include the lattice verification
    bool chain_discrepancy = false;     // print the chain Euler comparison
    bool operator==(const Recipe &) const = default;

    std::optional<long long> param(const std::string &k) const;
};

std::string render_recipe(const Recipe &r);

/// Parses the line grammar (`recipe`, `param`, `note`, `section`, `step`,
/// `annotate`, `expect`). Throws SyntaxError with the line number,
/// UnknownStep for an unknown step kind, ParameterOutOfRange when the recipe
/// name matches a built-in family and a parameter leaves its declared range.
Recipe parse_recipe(const std::string &text);

struct ParamSpec {
    std::string name;
    long long def, min, max;
};
struct RecipeFamily {
    std::string name;
    std::string summary;
    std::vector<ParamSpec> params;
};

const std::vector<RecipeFamily> &builtin_recipes();

/// Instantiates a built-in family with parameter overrides; validates ranges.
Recipe build_recipe(const std::string &name,
                    const std::map<std::string, long long> &overrides = {});

}  // namespace geokit

// GluingSpec comparison lives with the recipe layer, which is what needs
// value equality for round-trip checks.
namespace geokit {
inline bool operator==(const GluingSpec::SewPair &a, const GluingSpec::SewPair &b) {
    return a.left == b.left && a.right == b.right && a.result == b.result &&
           a.intersections == b.intersections;
}
inline bool operator==(const GluingSpec &a, const GluingSpec &b) {
    return a.sew == b.sew && a.consumed == b.consumed && a.identify == b.identify &&
           a.left_identified_gens == b.left_identified_gens &&
           a.left_meridian == b.left_meridian && a.right_meridian == b.right_meridian &&
           a.left_relators_removed == b.left_relators_removed &&
           a.right_relators_removed == b.right_relators_removed &&
           a.right_meridian_trivial == b.right_meridian_trivial &&
           a.keep_parallel_copy == b.keep_parallel_copy &&
           a.parallel_label == b.parallel_label && a.parity_assertion == b.parity_assertion &&
           a.parity_assertion_note == b.parity_assertion_note;
}
}  // namespace geokit
