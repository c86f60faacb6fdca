#include "geokit/relation_sets.hpp"

#include <stdexcept>

namespace geokit {
namespace data {

namespace {

Word g(const std::string &name, long long e = 1) { return Word::generator(name, e); }

std::string idx(const std::string &base, int i) { return base + std::to_string(i); }

void check_n(int n) {
    if (n < 2) throw std::invalid_argument("family requires n >= 2");
}

}  // namespace

Presentation yn_scaffold(int n) {
    check_n(n);
    Presentation p;
    p.generators = {"a1", "a2", "b1", "b2"};
    for (int j = 1; j <= n; ++j) p.generators.push_back(idx("c", j));
    for (int j = 1; j <= n; ++j) p.generators.push_back(idx("d", j));

    auto com = [&](const std::string &x, const std::string &y) {
        p.relators.push_back(commutator(g(x), g(y)));
    };
    com("a1", "c1");
    com("a1", "c2");
    com("a1", "d2");
    com("b1", "c1");
    com("a2", "c1");
    com("a2", "c2");
    com("a2", "d1");
    com("b2", "c2");
    p.relators.push_back(commutator(g("a1"), g("b1")) * commutator(g("a2"), g("b2")));
    Word surf;
    for (int j = 1; j <= n; ++j) surf = surf * commutator(g(idx("c", j)), g(idx("d", j)));
    p.relators.push_back(surf);
    for (int j = 3; j <= n; ++j) {
        com("b1", idx("c", j));
        com("b2", idx("d", j));
    }
    return p;
}

std::vector<std::pair<std::string, SurgeryDatum>> yn_surgeries(int n, long long m) {
    check_n(n);
    std::vector<std::pair<std::string, SurgeryDatum>> s;
    auto lut = [&](const std::string &label, Word mer, const std::string &push, long long num,
                   long long den, int sign) {
        s.push_back({label, SurgeryDatum{std::move(mer), g(push), num, den, sign}});
    };
    lut("a1_x_c1", commutator(g("b1", -1), g("d1", -1)), "a1", 1, 1, -1);
    lut("b1_x_c1", commutator(g("a1", -1), g("d1")), "b1", 1, 1, -1);
    lut("a2_x_c2", commutator(g("b2", -1), g("d2", -1)), "a2", 1, 1, -1);
    lut("b2_x_c2", commutator(g("a2", -1), g("d2")), "b2", 1, 1, -1);
    lut("a2_x_c1", commutator(g("b2", -1), g("d1", -1)), "c1", 1, 1, +1);
    lut("a2_x_d1", commutator(g("b2"), g("c1", -1)), "d1", 1, 1, +1);
    lut("a1_x_c2", commutator(g("b1", -1), g("d2", -1)), "c2", 1, 1, +1);
    lut("a1_x_d2", commutator(g("b1"), g("c2", -1)), "d2", m, 1, +1);
    for (int j = 3; j <= n; ++j) {
        lut("b1_x_c" + std::to_string(j), commutator(g("a1", -1), g(idx("d", j), -1)),
            idx("c", j), 1, 1, -1);
        lut("b2_x_d" + std::to_string(j), commutator(g("a2", -1), g(idx("c", j), -1)),
            idx("d", j), 1, 1, -1);
    }
    return s;
}

Presentation yn_relations(int n, long long m) {
    Presentation p = yn_scaffold(n);
    for (const auto &[label, datum] : yn_surgeries(n, m)) {
        (void)label;
        p.relators.push_back(datum.relator());
    }
    return p;
}

Presentation y1_scaffold() {
    Presentation p;
    p.generators = {"a1", "b1", "a2", "b2", "a3", "b3", "c", "d"};
    auto com = [&](const std::string &x, const std::string &y) {
        p.relators.push_back(commutator(g(x), g(y)));
    };
    com("a1", "c");
    com("b1", "c");
    com("a2", "c");
    com("b2", "c");
    com("a3", "c");
    com("a3", "d");
    // Surface relator with all three handles; the source prints
    // [a_1,b_1][a_2,b_2][a_2,b_2], a presumed typo flagged in reports.
    p.relators.push_back(commutator(g("a1"), g("b1")) * commutator(g("a2"), g("b2")) *
                         commutator(g("a3"), g("b3")));
    com("c", "d");
    return p;
}

std::vector<std::pair<std::string, SurgeryDatum>> y1_surgeries(long long p, long long q,
                                                               long long m) {
    if (p < 1 || q < 1 || m < 1)
        throw std::invalid_argument("family requires p, q, m >= 1");
    std::vector<std::pair<std::string, SurgeryDatum>> s;
    s.push_back({"a1_x_c", SurgeryDatum{commutator(g("b1", -1), g("d", -1)), g("a1"), 1, 1, -1}});
    s.push_back({"b1_x_c", SurgeryDatum{commutator(g("a1", -1), g("d")), g("b1"), 1, 1, -1}});
    s.push_back({"a2_x_c", SurgeryDatum{commutator(g("b2", -1), g("d", -1)), g("a2"), 1, 1, -1}});
    s.push_back({"b2_x_c", SurgeryDatum{commutator(g("a2", -1), g("d")), g("b2"), 1, 1, -1}});
    s.push_back({"a3_x_c", SurgeryDatum{commutator(g("b3", -1), g("d", -1)), g("c"), 1, p, +1}});
    s.push_back({"a3_x_d", SurgeryDatum{commutator(g("c", -1), g("b3")), g("d"), m, q, +1}});
    return s;
}

Presentation y1_relations(long long p, long long q, long long m) {
    Presentation pr = y1_scaffold();
    for (const auto &[label, datum] : y1_surgeries(p, q, m)) {
        (void)label;
        pr.relators.push_back(datum.relator());
    }
    return pr;
}

Word y1_meridian() { return commutator(g("c"), g("d")); }

Presentation zn_scaffold(int n) {
    check_n(n);
    Presentation p;
    p.generators = {"a1", "a2", "a3", "b1", "b2", "b3"};
    for (int j = 1; j <= n; ++j) p.generators.push_back(idx("c", j));
    for (int j = 1; j <= n; ++j) p.generators.push_back(idx("d", j));

    auto com = [&](const std::string &x, const std::string &y) {
        p.relators.push_back(commutator(g(x), g(y)));
    };
    com("a1", "c1");
    com("a1", "c2");
    com("a1", "d2");
    com("b1", "c1");
    com("a2", "c1");
    com("a2", "c2");
    com("a2", "d1");
    com("b2", "c2");
    p.relators.push_back(commutator(g("a1"), g("b1")) * commutator(g("a2"), g("b2")) *
                         commutator(g("a3"), g("b3")));
    Word surf;
    for (int j = 1; j <= n; ++j) surf = surf * commutator(g(idx("c", j)), g(idx("d", j)));
    p.relators.push_back(surf);
    for (int j = 3; j <= n; ++j) {
        com("b1", idx("c", j));
        com("b2", idx("d", j));
    }
    // The untouched third handle: transcribed by analogy, the surgery tori
    // avoid it, so it commutes with the second factor throughout.
    for (int j = 1; j <= n; ++j) {
        com("a3", idx("c", j));
        com("a3", idx("d", j));
        com("b3", idx("c", j));
        com("b3", idx("d", j));
    }
    return p;
}

std::vector<std::pair<std::string, SurgeryDatum>> zn_surgeries(int n, long long m) {
    return yn_surgeries(n, m);
}

Presentation cs_presentation() {
    Presentation p;
    p.generators = {"u", "v", "j", "b"};
    p.relators = {
        Word::parse("v*u*b*j*u^-1"),
        Word::parse("b*j^2*u^-1*j^-1"),
        Word::parse("u^2*v*b*u*j^-2"),
    };
    return p;
}

}  // namespace data
}  // namespace geokit
