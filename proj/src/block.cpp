#include "geokit/block.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace geokit {

std::string parity_str(Parity p) {
    switch (p) {
        case Parity::Odd: return "odd";
        case Parity::Even: return "even";
        default: return "unknown";
    }
}

TrackedSurface make_surface(std::string label, int genus, long long self_intersection,
                            std::optional<long long> k_pairing, bool symplectic,
                            bool adjunction_exact) {
    TrackedSurface s{std::move(label), genus, self_intersection, k_pairing, symplectic,
                     adjunction_exact};
    if (s.adjunction_exact) {
        if (!s.k_pairing)
            throw std::invalid_argument("surface " + s.label + ": adjunction-exact needs K.S");
        if (adjunction_genus(s.self_intersection, *s.k_pairing) != s.genus)
            throw std::invalid_argument("surface " + s.label + ": adjunction inconsistency");
    }
    return s;
}

std::string CharNumbers::chi_str() const {
    if (chi_den == 1) return std::to_string(chi_num);
    return std::to_string(chi_num) + "/" + std::to_string(chi_den);
}

const TrackedSurface *Block::find_surface(const std::string &label) const {
    for (const auto &s : surfaces)
        if (s.label == label) return &s;
    return nullptr;
}

void Block::validate() const {
    if (almost_complex && ((euler + signature) % 4 + 4) % 4 != 0)
        throw std::logic_error("block " + name + ": e + sigma not divisible by 4");
}

CharNumbers char_numbers(const Block &B) {
    CharNumbers c;
    long long num = B.euler + B.signature, den = 4;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    c.chi_num = num / g;
    c.chi_den = den / g;
    c.c1sq = B.c1_sq();
    c.on_bmy_line = 4 * c.c1sq == 9 * num;
    return c;
}

int adjunction_genus(long long self_intersection, long long k_pairing) {
    long long sum = self_intersection + k_pairing;
    if (((sum % 2) + 2) % 2 != 0)
        throw NonIntegralGenus("adjunction: S.S + K.S = " + std::to_string(sum) + " is odd");
    long long g = 1 + sum / 2;
    if (g < 0) throw NegativeGenus("adjunction: genus " + std::to_string(g));
    return static_cast<int>(g);
}

Block product_block(int g, int h) {
    if (g < 0 || h < 0) throw std::invalid_argument("product_block: negative genus");
    auto factor_name = [](int k) {
        if (k == 0) return std::string("S2");
        if (k == 1) return std::string("T2");
        return "Sigma" + std::to_string(k);
    };
    Block b;
    b.name = factor_name(g) + "x" + factor_name(h);
    b.euler = static_cast<long long>(2 - 2 * g) * (2 - 2 * h);
    b.signature = 0;
    b.b1 = 2 * g + 2 * h;
    b.symplectic = true;
    b.parity = Parity::Even;
    b.parity_note = "product intersection form is even";
    b.almost_complex = true;
    b.surfaces.push_back(make_surface("Sigma" + std::to_string(g) + "_x_pt", g, 0,
                                      2LL * g - 2, true, true));
    b.surfaces.push_back(make_surface("pt_x_Sigma" + std::to_string(h), h, 0,
                                      2LL * h - 2, true, true));
    b.presentation = direct_product(surface_group(g, "a", "b"), surface_group(h, "c", "d"));
    b.provenance.push_back("product " + b.name);
    b.validate();
    return b;
}

namespace {

std::string fresh_exceptional_label(const Block &b) {
    if (!b.find_surface("E")) return "E";
    for (int k = 2;; ++k) {
        std::string l = "E" + std::to_string(k);
        if (!b.find_surface(l)) return l;
    }
}

}  // namespace

Block blow_up(const Block &B) {
    Block r = B;
    r.euler += 1;
    r.signature -= 1;
    r.parity = Parity::Odd;
    r.parity_note = "exceptional sphere has square -1";
    r.minimal = false;
    r.surfaces.push_back(make_surface(fresh_exceptional_label(r), 0, -1, -1, true, true));
    r.provenance.push_back("blow-up");
    r.validate();
    return r;
}

Block blow_up(const Block &B, const std::string &through_surface, long long multiplicity) {
    Block r = B;
    bool found = false;
    for (auto &s : r.surfaces) {
        if (s.label != through_surface) continue;
        found = true;
        s.self_intersection -= multiplicity * multiplicity;
        if (s.k_pairing) {
            *s.k_pairing += multiplicity;
            if (s.adjunction_exact &&
                adjunction_genus(s.self_intersection, *s.k_pairing) != s.genus)
                s.adjunction_exact = false;
        }
    }
    if (!found)
        throw std::invalid_argument("blow_up: no tracked surface \"" + through_surface + "\"");
    r.euler += 1;
    r.signature -= 1;
    r.parity = Parity::Odd;
    r.parity_note = "exceptional sphere has square -1";
    r.minimal = false;
    r.surfaces.push_back(make_surface(fresh_exceptional_label(r), 0, -1, -1, true, true));
    r.provenance.push_back("blow-up through " + through_surface + " with multiplicity " +
                           std::to_string(multiplicity));
    r.validate();
    return r;
}

TrackedSurface sew_surfaces(const TrackedSurface &s1, const TrackedSurface &s2,
                            int intersections_with_gluing_surface) {
    if (intersections_with_gluing_surface != 1)
        throw UnsupportedIntersectionPattern(
            "sew_surfaces: surfaces must meet the gluing surface once, got " +
            std::to_string(intersections_with_gluing_surface));
    TrackedSurface out;
    out.label = "sew(" + s1.label + "," + s2.label + ")";
    out.genus = s1.genus + s2.genus;
    out.self_intersection = s1.self_intersection + s2.self_intersection;
    out.k_pairing = std::nullopt;
    out.symplectic = s1.symplectic && s2.symplectic;
    out.adjunction_exact = false;
    return out;
}

namespace {

Presentation remove_relators(const Presentation &P, const std::vector<Word> &ws) {
    Presentation out = P;
    for (const Word &w : ws) {
        auto it = std::find(out.relators.begin(), out.relators.end(), w);
        if (it == out.relators.end())
            throw std::invalid_argument("gluing: relator " + w.str() + " not present");
        out.relators.erase(it);
    }
    return out;
}

}  // namespace

Block fiber_sum(const Block &A, const std::string &surface_A, const Block &B,
                const std::string &surface_B, const GluingSpec &glue) {
    const TrackedSurface *sa = A.find_surface(surface_A);
    const TrackedSurface *sb = B.find_surface(surface_B);
    if (!sa || !sb)
        throw std::invalid_argument("fiber_sum: unknown surface label \"" +
                                    (sa ? surface_B : surface_A) + "\"");
    if (sa->genus != sb->genus)
        throw GenusMismatch("fiber_sum: genus " + std::to_string(sa->genus) + " vs " +
                            std::to_string(sb->genus));
    if (sa->self_intersection + sb->self_intersection != 0)
        throw SquareMismatch("fiber_sum: squares sum to " +
                             std::to_string(sa->self_intersection + sb->self_intersection));

    int g = sa->genus;
    Block r;
    r.name = A.name + "#" + B.name;
    r.euler = A.euler + B.euler - 2 * (2 - 2 * static_cast<long long>(g));
    r.signature = A.signature + B.signature;
    r.symplectic = A.symplectic && B.symplectic;
    r.almost_complex = A.almost_complex && B.almost_complex;
    r.minimal = std::nullopt;

    // Surviving tracked surfaces: both sides minus the glued pair, right-side
    // labels prefixed on clash, sewn pairs merged, punctured leftovers dropped.
    for (const auto &s : A.surfaces)
        if (s.label != surface_A) r.surfaces.push_back(s);
    for (const auto &s : B.surfaces) {
        if (s.label == surface_B) continue;
        TrackedSurface t = s;
        if (r.find_surface(t.label)) t.label = "r." + t.label;
        r.surfaces.push_back(t);
    }
    for (const auto &pair : glue.sew) {
        auto take = [&](const std::string &label) {
            auto it = std::find_if(r.surfaces.begin(), r.surfaces.end(),
                                   [&](const TrackedSurface &s) { return s.label == label; });
            if (it == r.surfaces.end())
                throw std::invalid_argument("fiber_sum: sew label \"" + label + "\" not found");
            TrackedSurface s = *it;
            r.surfaces.erase(it);
            return s;
        };
        TrackedSurface left = take(pair.left);
        TrackedSurface right = take(pair.right);
        TrackedSurface sewn = sew_surfaces(left, right, pair.intersections);
        if (!pair.result.empty()) sewn.label = pair.result;
        r.surfaces.push_back(sewn);
    }
    for (const auto &label : glue.consumed) {
        auto it = std::find_if(r.surfaces.begin(), r.surfaces.end(),
                               [&](const TrackedSurface &s) { return s.label == label; });
        if (it != r.surfaces.end()) r.surfaces.erase(it);
    }
    if (glue.keep_parallel_copy) {
        TrackedSurface par;
        par.label = glue.parallel_label.empty() ? "parallel_" + surface_A : glue.parallel_label;
        par.genus = g;
        par.self_intersection = 0;
        par.symplectic = sa->symplectic && sb->symplectic;
        r.surfaces.push_back(par);
        r.provenance.push_back("kept parallel push-off \"" + par.label +
                               "\" of the gluing surface");
    }

    // Group data: assembled when both sides carry presentations; with a
    // presentation-free right side whose meridians are given trivial, the
    // left complement group survives with the identified generators killed
    // rationally (rank exact, torsion a lower bound).
    if (A.presentation && B.presentation) {
        Presentation left = remove_relators(*A.presentation, glue.left_relators_removed);
        Presentation right = remove_relators(*B.presentation, glue.right_relators_removed);
        Presentation joined = free_product(left, right);
        if (!glue.identify.empty()) joined = identify_generators(joined, glue.identify);
        if (glue.left_meridian && glue.right_meridian)
            joined = add_relators(joined, {*glue.left_meridian * *glue.right_meridian});
        else if (glue.left_meridian && glue.right_meridian_trivial)
            joined = add_relators(joined, {*glue.left_meridian});
        r.presentation = joined;
        r.b1 = h1(joined).rank;
    } else if (A.presentation && glue.right_meridian_trivial) {
        Presentation left = remove_relators(*A.presentation, glue.left_relators_removed);
        if (glue.left_meridian) left = add_relators(left, {*glue.left_meridian});
        if (!glue.left_identified_gens.empty())
            left = attach_rationally_trivial_side(left, glue.left_identified_gens);
        r.presentation = left;
        r.b1 = h1(left).rank;
    } else {
        r.presentation = std::nullopt;
        r.b1 = std::nullopt;
    }

    if (glue.parity_assertion) {
        r.parity = *glue.parity_assertion;
        r.parity_note = glue.parity_assertion_note;
    } else {
        r.parity = Parity::Unknown;
        r.parity_note = "not determined";
        for (const auto &s : r.surfaces)
            if (((s.self_intersection % 2) + 2) % 2 == 1) {
                r.parity = Parity::Odd;
                r.parity_note = "odd-square class " + s.label;
                break;
            }
    }

    r.provenance.push_back("normal connected sum of " + A.name + " and " + B.name +
                           " along genus-" + std::to_string(g) + " surfaces " + surface_A +
                           " ~ " + surface_B);
    r.validate();
    return r;
}

Block torus_surgery(const Block &B, const SurgeryDatum &datum, const std::string &torus_label) {
    if (!B.presentation)
        throw MissingPresentation("torus_surgery on " + B.name + ": no presentation");
    Block r = B;
    r.presentation = apply_surgery(*B.presentation, datum);
    r.b1 = h1(*r.presentation).rank;
    r.symplectic = B.symplectic && datum.num == 1;
    std::ostringstream coeff;
    coeff << (datum.sign < 0 ? "-" : "+") << datum.num << "/" << datum.den;
    r.provenance.push_back("torus surgery on " + torus_label + " with coefficient " +
                           coeff.str());
    // e and sigma are untouched by construction.
    r.validate();
    return r;
}

Profile homology_profile(const Block &B) {
    if (!B.b1) throw std::invalid_argument("homology_profile: b1 unknown for " + B.name);
    Profile p;
    p.b2 = B.euler - 2 + 2 * *B.b1;
    if ((((p.b2 + B.signature) % 2) + 2) % 2 != 0)
        throw HalfIntegerB2("homology_profile: b2 = " + std::to_string(p.b2) + ", sigma = " +
                            std::to_string(B.signature));
    p.b2_plus = (p.b2 + B.signature) / 2;
    p.b2_minus = (p.b2 - B.signature) / 2;
    p.chars = char_numbers(B);
    p.parity = B.parity;
    if (*B.b1 == 0) {
        if (B.parity == Parity::Odd)
            p.model = std::to_string(p.b2_plus) + "CP#" + std::to_string(p.b2_minus) + "CPbar";
        else if (B.parity == Parity::Even && B.signature == 0)
            p.model = std::to_string(p.b2 / 2) + "(S2xS2)";
    }
    return p;
}

Block mumford_m() {
    Block b;
    b.name = "M";
    b.euler = 3;
    b.signature = 1;
    b.b1 = 0;
    b.symplectic = true;
    b.minimal = true;
    b.parity = Parity::Odd;
    b.parity_note = "intersection form (1)";
    b.almost_complex = true;
    // K = 3H and H.H = 1, so K.H = 3 and the adjunction genus is 3.
    b.surfaces.push_back(make_surface("H", 3, 1, 3, true, true));
    b.provenance.push_back("fake projective plane (Mumford); ball quotient on the c1^2 = "
                           "9*chi_h line");
    b.validate();
    return b;
}

Block mumford_blown() {
    Block b = blow_up(mumford_m(), "H", 1);
    b.name = "M#CPbar";
    for (auto &s : b.surfaces)
        if (s.label == "H") s.label = "Sigma3bar";
    b.provenance.push_back("genus-3 surface Sigma3bar of square 0; exceptional sphere E "
                           "meets it once");
    return b;
}

Block cs_surface(int n) {
    if (n < 1) throw std::invalid_argument("cs_surface: n >= 1");
    Block b;
    b.name = "M_" + std::to_string(n);
    b.euler = 3LL * n;
    b.signature = n;
    if (n == 1) b.b1 = 2;
    b.symplectic = true;
    b.minimal = true;
    b.parity = Parity::Odd;
    b.parity_note = n == 1 ? "intersection form 3(1) + 2(-1)" : "asserted for the family";
    b.almost_complex = true;
    b.provenance.push_back("Cartwright-Steger surface degree-" + std::to_string(n) +
                           " cover; c1^2 = 9n on the c1^2 = 9*chi_h line");
    b.validate();
    return b;
}

std::vector<Block> builtin_blocks() {
    std::vector<Block> v;
    v.push_back(mumford_m());
    v.push_back(mumford_blown());
    for (int n = 1; n <= 3; ++n) v.push_back(cs_surface(n));
    v.push_back(product_block(2, 0));
    v.push_back(product_block(3, 1));
    v.push_back(product_block(2, 2));
    v.push_back(product_block(2, 3));
    v.push_back(product_block(3, 2));
    return v;
}

std::optional<Block> builtin_block(const std::string &name) {
    for (Block &b : builtin_blocks())
        if (b.name == name) return b;
    return std::nullopt;
}

std::string blocks_table() {
    std::ostringstream os;
    os << "name e sigma b1 chi_h c1sq bmy parity symplectic minimal\n";
    for (const Block &b : builtin_blocks()) {
        CharNumbers c = char_numbers(b);
        os << b.name << " " << b.euler << " " << b.signature << " "
           << (b.b1 ? std::to_string(*b.b1) : "?") << " " << c.chi_str() << " " << c.c1sq << " "
           << (c.on_bmy_line ? "yes" : "no") << " " << parity_str(b.parity) << " "
           << (b.symplectic ? "yes" : "no") << " "
           << (b.minimal ? (*b.minimal ? "yes" : "no") : "?") << "\n";
    }
    return os.str();
}

}  // namespace geokit
