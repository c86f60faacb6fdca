#include "geokit/recipe.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "geokit/relation_sets.hpp"

namespace geokit {

std::optional<long long> Recipe::param(const std::string &k) const {
    for (const auto &[name, v] : params)
        if (name == k) return v;
    return std::nullopt;
}

namespace {

std::string quoted(const std::string &s) { return "\"" + s + "\""; }

std::vector<std::string> tokenize(const std::string &line, int lineno) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '"') {
            size_t end = line.find('"', i + 1);
            if (end == std::string::npos) throw SyntaxError(lineno, "unterminated quote");
            out.push_back(line.substr(i + 1, end - i - 1));
            i = end + 1;
        } else {
            size_t end = i;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
                ++end;
            out.push_back(line.substr(i, end - i));
            i = end;
        }
    }
    return out;
}

long long to_int(const std::string &s, int lineno) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception &) {
        throw SyntaxError(lineno, "expected integer, got \"" + s + "\"");
    }
}

std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string join_commas(const std::vector<std::string> &v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i];
    }
    return out;
}

}  // namespace

std::string render_recipe(const Recipe &r) {
    std::ostringstream os;
    os << "recipe " << r.name << "\n";
    for (const auto &[k, v] : r.params) os << "param " << k << " = " << v << "\n";
    for (const auto &n : r.notes) os << "note " << quoted(n) << "\n";
    if (r.cs_section) os << "section cs\n";
    if (r.chain_discrepancy) os << "section chain\n";
    for (const Step &step : r.steps) {
        os << "step ";
        std::visit(
            [&](const auto &s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, ProductStep>) {
                    os << "product " << s.g << " " << s.h << " scaffold " << s.scaffold;
                } else if constexpr (std::is_same_v<T, BlockStep>) {
                    os << "block " << s.catalog_name;
                } else if constexpr (std::is_same_v<T, BlowUpStep>) {
                    os << "blow_up";
                    if (!s.generic) os << " " << s.surface << " " << s.multiplicity;
                } else if constexpr (std::is_same_v<T, SurfaceStep>) {
                    os << "surface " << s.label << " genus " << s.genus << " square " << s.square
                       << " kpair " << s.k_pairing;
                } else if constexpr (std::is_same_v<T, SurgeryStep>) {
                    os << "surgery " << s.torus_label << " meridian " << s.datum.meridian.str()
                       << " pushoff " << s.datum.lagrangian_push_off.str() << " num "
                       << s.datum.num << " den " << s.datum.den << " sign "
                       << (s.datum.sign < 0 ? "-1" : "+1");
                } else if constexpr (std::is_same_v<T, FiberSumStep>) {
                    os << "fiber_sum left " << s.left_surface << " right " << s.right_block
                       << " rightsurface " << s.right_surface;
                    const GluingSpec &gl = s.glue;
                    if (gl.left_meridian) os << " meridian " << gl.left_meridian->str();
                    if (gl.right_meridian) os << " rmeridian " << gl.right_meridian->str();
                    for (const Word &w : gl.left_relators_removed)
                        os << " removerel " << w.str();
                    for (const Word &w : gl.right_relators_removed)
                        os << " rremoverel " << w.str();
                    for (const auto &[w1, w2] : gl.identify)
                        os << " identify " << w1.str() << ":" << w2.str();
                    if (!gl.left_identified_gens.empty())
                        os << " trivialize " << join_commas(gl.left_identified_gens);
                    for (const auto &p : gl.sew)
                        os << " sew " << p.left << ":" << p.right << ":" << p.result;
                    for (const auto &c : gl.consumed) os << " consume " << c;
                    if (gl.keep_parallel_copy) os << " parallel " << gl.parallel_label;
                    if (gl.right_meridian_trivial) os << " rtrivial";
                    if (gl.parity_assertion)
                        os << " parity " << parity_str(*gl.parity_assertion) << " "
                           << quoted(gl.parity_assertion_note);
                } else if constexpr (std::is_same_v<T, AttachTrivialStep>) {
                    os << "attach_trivial " << join_commas(s.gens);
                }
            },
            step);
        os << "\n";
    }
    for (const Flag &a : r.annotations)
        os << "annotate " << quoted(a.message) << " cite " << quoted(a.citation) << "\n";
    for (const Expectation &e : r.expects)
        os << "expect " << e.key << " = " << e.value << " cite " << quoted(e.citation) << "\n";
    return os.str();
}

namespace {

void validate_against_family(const Recipe &r);

Step parse_step(const std::vector<std::string> &t, int lineno) {
    // t[0] == "step"
    if (t.size() < 2) throw SyntaxError(lineno, "step kind missing");
    const std::string &kind = t[1];
    auto need = [&](size_t n, const char *what) {
        if (t.size() < n) throw SyntaxError(lineno, std::string("step ") + kind + ": " + what);
    };
    if (kind == "product") {
        need(6, "usage: product <g> <h> scaffold <name>");
        if (t[4] != "scaffold") throw SyntaxError(lineno, "expected 'scaffold'");
        ProductStep s;
        s.g = static_cast<int>(to_int(t[2], lineno));
        s.h = static_cast<int>(to_int(t[3], lineno));
        s.scaffold = t[5];
        if (s.scaffold != "none" && s.scaffold != "yn" && s.scaffold != "y1" &&
            s.scaffold != "zn")
            throw SyntaxError(lineno, "unknown scaffold \"" + s.scaffold + "\"");
        return s;
    }
    if (kind == "block") {
        need(3, "usage: block <catalog-name>");
        return BlockStep{t[2]};
    }
    if (kind == "blow_up") {
        if (t.size() == 2) return BlowUpStep{};
        need(4, "usage: blow_up [<surface> <multiplicity>]");
        return BlowUpStep{false, t[2], to_int(t[3], lineno)};
    }
    if (kind == "surface") {
        need(9, "usage: surface <label> genus <g> square <s> kpair <k>");
        if (t[3] != "genus" || t[5] != "square" || t[7] != "kpair")
            throw SyntaxError(lineno, "surface: expected genus/square/kpair keywords");
        SurfaceStep s;
        s.label = t[2];
        s.genus = static_cast<int>(to_int(t[4], lineno));
        s.square = to_int(t[6], lineno);
        s.k_pairing = to_int(t[8], lineno);
        return s;
    }
    if (kind == "surgery") {
        need(13, "usage: surgery <label> meridian <w> pushoff <w> num <n> den <n> sign <s>");
        if (t[3] != "meridian" || t[5] != "pushoff" || t[7] != "num" || t[9] != "den" ||
            t[11] != "sign")
            throw SyntaxError(lineno, "surgery: expected meridian/pushoff/num/den/sign");
        SurgeryStep s;
        s.torus_label = t[2];
        try {
            s.datum.meridian = Word::parse(t[4]);
            s.datum.lagrangian_push_off = Word::parse(t[6]);
        } catch (const std::invalid_argument &e) {
            throw SyntaxError(lineno, e.what());
        }
        s.datum.num = to_int(t[8], lineno);
        s.datum.den = to_int(t[10], lineno);
        long long sg = to_int(t[12], lineno);
        if (sg != 1 && sg != -1) throw SyntaxError(lineno, "sign must be +1 or -1");
        s.datum.sign = static_cast<int>(sg);
        if (s.datum.den < 0) throw SyntaxError(lineno, "denominator must be >= 0");
        return s;
    }
    if (kind == "fiber_sum") {
        FiberSumStep s;
        size_t i = 2;
        auto value = [&](const char *key) {
            if (i + 1 >= t.size())
                throw SyntaxError(lineno, std::string("fiber_sum: missing value for ") + key);
            return t[++i];
        };
        for (; i < t.size(); ++i) {
            const std::string &key = t[i];
            try {
                if (key == "left") s.left_surface = value("left");
                else if (key == "right") s.right_block = value("right");
                else if (key == "rightsurface") s.right_surface = value("rightsurface");
                else if (key == "meridian") s.glue.left_meridian = Word::parse(value("meridian"));
                else if (key == "rmeridian")
                    s.glue.right_meridian = Word::parse(value("rmeridian"));
                else if (key == "removerel")
                    s.glue.left_relators_removed.push_back(Word::parse(value("removerel")));
                else if (key == "rremoverel")
                    s.glue.right_relators_removed.push_back(Word::parse(value("rremoverel")));
                else if (key == "identify") {
                    std::string pair_text = value("identify");
                    size_t colon = pair_text.find(':');
                    if (colon == std::string::npos)
                        throw SyntaxError(lineno, "identify expects w1:w2");
                    s.glue.identify.push_back({Word::parse(pair_text.substr(0, colon)),
                                               Word::parse(pair_text.substr(colon + 1))});
                } else if (key == "trivialize")
                    s.glue.left_identified_gens = split_commas(value("trivialize"));
                else if (key == "sew") {
                    std::string triple = value("sew");
                    std::replace(triple.begin(), triple.end(), ':', ' ');
                    std::istringstream ps(triple);
                    GluingSpec::SewPair pair;
                    if (!(ps >> pair.left >> pair.right >> pair.result))
                        throw SyntaxError(lineno, "sew expects left:right:result");
                    s.glue.sew.push_back(pair);
                } else if (key == "consume") s.glue.consumed.push_back(value("consume"));
                else if (key == "parallel") {
                    s.glue.keep_parallel_copy = true;
                    s.glue.parallel_label = value("parallel");
                } else if (key == "rtrivial") s.glue.right_meridian_trivial = true;
                else if (key == "parity") {
                    std::string p = value("parity");
                    s.glue.parity_assertion = p == "odd" ? Parity::Odd
                                              : p == "even" ? Parity::Even
                                                            : Parity::Unknown;
                    s.glue.parity_assertion_note = value("parity note");
                } else
                    throw SyntaxError(lineno, "fiber_sum: unknown key \"" + key + "\"");
            } catch (const std::invalid_argument &e) {
                throw SyntaxError(lineno, e.what());
            }
        }
        if (s.left_surface.empty() || s.right_block.empty() || s.right_surface.empty())
            throw SyntaxError(lineno, "fiber_sum needs left, right and rightsurface");
        return s;
    }
    if (kind == "attach_trivial") {
        need(3, "usage: attach_trivial g1,g2,...");
        return AttachTrivialStep{split_commas(t[2])};
    }
    throw UnknownStep("unknown step kind \"" + kind + "\" at line " + std::to_string(lineno));
}

}  // namespace

Recipe parse_recipe(const std::string &text) {
    Recipe r;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_name = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto t = tokenize(line, lineno);
        if (t.empty()) continue;
        const std::string &tag = t[0];
        if (tag == "recipe") {
            if (t.size() != 2) throw SyntaxError(lineno, "usage: recipe <name>");
            r.name = t[1];
            saw_name = true;
        } else if (tag == "param") {
            if (t.size() != 4 || t[2] != "=")
                throw SyntaxError(lineno, "usage: param <name> = <int>");
            r.params.push_back({t[1], to_int(t[3], lineno)});
        } else if (tag == "note") {
            if (t.size() != 2) throw SyntaxError(lineno, "usage: note \"<text>\"");
            r.notes.push_back(t[1]);
        } else if (tag == "section") {
            if (t.size() != 2) throw SyntaxError(lineno, "usage: section <cs|chain>");
            if (t[1] == "cs") r.cs_section = true;
            else if (t[1] == "chain") r.chain_discrepancy = true;
            else throw SyntaxError(lineno, "unknown section \"" + t[1] + "\"");
        } else if (tag == "step") {
            r.steps.push_back(parse_step(t, lineno));
        } else if (tag == "annotate") {
            if (t.size() != 4 || t[2] != "cite")
                throw SyntaxError(lineno, "usage: annotate \"<msg>\" cite \"<ref>\"");
            r.annotations.push_back(Flag{t[1], t[3]});
        } else if (tag == "expect") {
            if (t.size() != 6 || t[2] != "=" || t[4] != "cite")
                throw SyntaxError(lineno, "usage: expect <key> = <value> cite \"<ref>\"");
            r.expects.push_back(Expectation{t[1], t[3], t[5]});
        } else {
            throw SyntaxError(lineno, "unknown directive \"" + tag + "\"");
        }
    }
    if (!saw_name) throw SyntaxError(lineno, "missing recipe line");
    validate_against_family(r);
    return r;
}

// ---------------------------------------------------------------------------
// Built-in families.

namespace {

long long get(const std::map<std::string, long long> &m, const std::string &k, long long def) {
    auto it = m.find(k);
    return it == m.end() ? def : it->second;
}

std::string torsion_pattern(long long p, long long q) {
    // SNF of diag(p, q): gcd then lcm; list only the factors > 1.
    long long g = std::gcd(p, q);
    long long l = p / g * q;
    std::vector<std::string> out;
    if (g > 1) out.push_back(std::to_string(g));
    if (l > 1) out.push_back(std::to_string(l));
    return out.empty() ? "-" : join_commas(out);
}

void append_surgeries(Recipe &r,
                      const std::vector<std::pair<std::string, SurgeryDatum>> &surgeries) {
    for (const auto &[label, datum] : surgeries) r.steps.push_back(SurgeryStep{label, datum});
}

Flag typo_flag() {
    return Flag{"surface relator encoded as [a1,b1][a2,b2][a3,b3]; the source prints "
                "[a_1,b_1][a_2,b_2][a_2,b_2], a presumed typo",
                "§4, displayed relations"};
}

std::vector<Flag> not_computed_annotations() {
    return {
        Flag{"minimality asserted via Usher's theorem; not computed here", "§4"},
        Flag{"pairwise distinctness of the infinite family rests on Seiberg-Witten values; "
             "not desk-verifiable, not computed",
             "§4"},
        Flag{"simple connectivity prospects are speculative; not computed", "§1"},
    };
}

Recipe build_yn(const std::map<std::string, long long> &ov) {
    long long n = get(ov, "n", 2), m = get(ov, "m", 1);
    Recipe r;
    r.name = "Yn";
    r.params = {{"n", n}, {"m", m}};
    r.steps.push_back(ProductStep{2, static_cast<int>(n), "yn"});
    append_surgeries(r, data::yn_surgeries(static_cast<int>(n), m));
    long long e = 4 * n - 4;
    r.expects = {
        {"e", std::to_string(e), "§2.1, Euler characteristic 4n-4"},
        {"sigma", "0", "§2.1"},
        {"h1_trivial", "true", "§2.1, integer cohomology of (2n-3)(S2xS2)"},
        {"profile", std::to_string(2 * n - 3) + "(S2xS2)", "§2.1"},
        {"symplectic", m == 1 ? "true" : "false",
         "§2.1, m torus surgery is non-symplectic for m >= 2"},
    };
    return r;
}

Recipe build_y1pq(const std::map<std::string, long long> &ov) {
    long long p = get(ov, "p", 1), q = get(ov, "q", 1), m = get(ov, "m", 1);
    Recipe r;
    r.name = "Y1pq";
    r.params = {{"p", p}, {"q", q}, {"m", m}};
    r.steps.push_back(ProductStep{3, 1, "y1"});
    append_surgeries(r, data::y1_surgeries(p, q, m));
    r.annotations.push_back(typo_flag());
    r.expects = {
        {"e", "0", "§4, e(Sigma3 x T2) = 0 and surgeries preserve e"},
        {"sigma", "0", "§4"},
        {"h1_rank", "2", "§4, displayed relations abelianized"},
        {"h1_torsion", torsion_pattern(p, q), "§4, c^p and d^q relations"},
        {"symplectic", m == 1 ? "true" : "false", "§4"},
    };
    return r;
}

FiberSumStep x_gluing_step(bool first, const std::string &left_surface,
                           const std::string &sew_left, const std::string &sew_result,
                           bool keep_parallel) {
    FiberSumStep f;
    f.left_surface = left_surface;
    f.right_block = "M#CPbar";
    f.right_surface = "Sigma3bar";
    if (first) {
        f.glue.left_meridian = data::y1_meridian();
        f.glue.left_relators_removed = {data::y1_meridian()};
        f.glue.left_identified_gens = {"a1", "b1", "a2", "b2", "a3", "b3"};
    }
    f.glue.sew.push_back({sew_left, "E", sew_result, 1});
    f.glue.right_meridian_trivial = true;
    if (keep_parallel) {
        f.glue.keep_parallel_copy = true;
        f.glue.parallel_label = "Sigma3_par";
    }
    return f;
}

Recipe build_x1(const std::map<std::string, long long> &ov) {
    long long p = get(ov, "p", 1), q = get(ov, "q", 1), m = get(ov, "m", 1);
    Recipe r = build_y1pq(ov);
    r.name = "X1";
    r.params = {{"m", m}, {"p", p}, {"q", q}};
    r.steps.push_back(x_gluing_step(true, "Sigma3_x_pt", "pt_x_Sigma1", "Tminus1", false));
    r.annotations = not_computed_annotations();
    r.annotations.push_back(typo_flag());
    r.expects = {
        {"e", "12", "Lemma 4.2, 0 + 4 + 8 = 12"},
        {"sigma", "0", "Lemma 4.2"},
        {"b1", "0", "Lemma 4.2, b1 = 0"},
        {"profile", "5CP#5CPbar", "Lemma 4.2, fake rational homology 5CP#5CPbar"},
        {"parity", "odd", "Lemma 4.2, -1 torus from sewing"},
        {"h1_torsion", torsion_pattern(p, q), "Lemma 4.2, q = 1 introduces p torsion"},
        {"symplectic", m == 1 ? "true" : "false", "§4"},
    };
    return r;
}

Recipe build_xn(const std::map<std::string, long long> &ov) {
    long long n = get(ov, "n", 2);
    long long p = get(ov, "p", 1), q = get(ov, "q", 1), m = get(ov, "m", 1);
    Recipe r = build_y1pq(ov);
    r.name = "Xn";
    r.params = {{"n", n}, {"m", m}, {"p", p}, {"q", q}};
    for (long long k = 1; k <= n; ++k) {
        bool first = k == 1;
        std::string left_surf = first ? "Sigma3_x_pt" : "Sigma3_par";
        std::string sew_left = first ? "pt_x_Sigma1" : "Tminus" + std::to_string(k - 1);
        std::string result = "Tminus" + std::to_string(k);
        r.steps.push_back(x_gluing_step(first, left_surf, sew_left, result, k < n));
    }
    r.chain_discrepancy = true;
    r.annotations = not_computed_annotations();
    r.annotations.push_back(typo_flag());
    r.expects = {
        {"e", std::to_string(12 * n),
         "§4 normal-sum formula applied pairwise; §5 prints 4n+8 (flagged)"},
        {"sigma", "0", "§5"},
        {"b1", "0", "§5 via Lemma 4.2 argument"},
    };
    if (n % 2 == 1)
        r.expects.push_back({"parity", "odd", "§5, odd when n is odd (-n torus)"});
    return r;
}

Recipe build_spinx(const std::map<std::string, long long> &) {
    Recipe r;
    r.name = "spinX";
    r.steps.push_back(ProductStep{2, 0, "none"});
    // The class 2[Sigma2 x pt] carries a connected symplectic genus-3
    // representative of square 0 with K.S = 4.
    r.steps.push_back(SurfaceStep{"2Sigma2", 3, 0, 4});
    FiberSumStep f;
    f.left_surface = "2Sigma2";
    f.right_block = "M#CPbar";
    f.right_surface = "Sigma3bar";
    f.glue.left_identified_gens = {"a1", "b1", "a2", "b2"};
    f.glue.consumed = {"E", "pt_x_Sigma0"};
    f.glue.right_meridian_trivial = true;
    f.glue.parity_assertion = Parity::Even;
    f.glue.parity_assertion_note = "spin, via the canonical class formula; asserted (§6)";
    r.steps.push_back(f);
    r.expects = {
        {"e", "8", "§6, -4 + 4 + 8 = 8"},
        {"sigma", "0", "§6"},
        {"b1", "0", "§6, rational homology of 3(S2xS2)"},
        {"profile", "3(S2xS2)", "§6"},
        {"parity", "even", "§6, X is spin (asserted)"},
    };
    return r;
}

Recipe build_zn(const std::map<std::string, long long> &ov) {
    long long n = get(ov, "n", 2), m = get(ov, "m", 1);
    Recipe r;
    r.name = "Zn";
    r.params = {{"n", n}, {"m", m}};
    r.notes.push_back("surgery and relation list transcribed by analogy; the source gives "
                      "no explicit list for this family (§2.1)");
    r.steps.push_back(ProductStep{3, static_cast<int>(n), "zn"});
    append_surgeries(r, data::zn_surgeries(static_cast<int>(n), m));
    r.expects = {
        {"e", std::to_string(8 * n - 8), "§2.1 by analogy, e(Sigma3 x Sigma_n)"},
        {"sigma", "0", "§2.1 by analogy"},
        {"h1_rank", "2", "transcription by analogy: the untouched handle survives"},
        {"symplectic", m == 1 ? "true" : "false", "§2.1"},
    };
    return r;
}

Recipe build_cs_verify(const std::map<std::string, long long> &) {
    Recipe r;
    r.name = "cs-verify";
    r.cs_section = true;
    r.expects = {
        {"cs_form_preserved", "true", "§3.2, xi*A xi = A for u, v, j, b"},
    };
    return r;
}

Recipe build_mumford_check(const std::map<std::string, long long> &) {
    Recipe r;
    r.name = "mumford-check";
    r.steps.push_back(BlockStep{"M"});
    r.steps.push_back(BlowUpStep{false, "H", 1});
    r.expects = {
        {"e", "4", "Lemma 4.2 proof, e(M#CPbar) = 4"},
        {"sigma", "0", "Lemma 4.2 proof"},
        {"parity", "odd", "§3.1"},
        {"surface:H:genus", "3", "§3.1, adjunction g(H) = 3"},
        {"surface:H:square", "0", "§3.1, self-intersection 0 after the blow-up"},
    };
    return r;
}

const long long NMAX = 64, COEFMAX = 1000000;

struct FamilyEntry {
    RecipeFamily family;
    Recipe (*build)(const std::map<std::string, long long> &);
};

const std::vector<FamilyEntry> &families() {
    static const std::vector<FamilyEntry> f = {
        {{"Yn",
          "surgered Sigma2 x Sigma_n with trivial first homology",
          {{"n", 2, 2, NMAX}, {"m", 1, 1, COEFMAX}}},
         build_yn},
        {{"Y1pq",
          "surgered Sigma3 x T2 with coefficients 1/p and m/q",
          {{"p", 1, 1, COEFMAX}, {"q", 1, 1, COEFMAX}, {"m", 1, 1, COEFMAX}}},
         build_y1pq},
        {{"X1",
          "normal connected sum of Y1pq with the blown-up Mumford plane",
          {{"m", 1, 1, COEFMAX}, {"p", 1, 1, COEFMAX}, {"q", 1, 1, COEFMAX}}},
         build_x1},
        {{"Xn",
          "chain of normal connected sums with n blown-up Mumford planes",
          {{"n", 2, 1, NMAX}, {"m", 1, 1, COEFMAX}, {"p", 1, 1, COEFMAX}, {"q", 1, 1, COEFMAX}}},
         build_xn},
        {{"spinX", "Sigma2 x S2 glued to the blown-up Mumford plane along a genus-3 class", {}},
         build_spinx},
        {{"Zn",
          "surgered Sigma3 x Sigma_n (transcribed by analogy)",
          {{"n", 2, 2, NMAX}, {"m", 1, 1, COEFMAX}}},
         build_zn},
        {{"cs-verify", "exact verification of the lattice generator data", {}},
         build_cs_verify},
        {{"mumford-check", "Mumford plane invariants and blow-up bookkeeping", {}},
         build_mumford_check},
    };
    return f;
}

const FamilyEntry *find_family(const std::string &name) {
    for (const auto &e : families())
        if (e.family.name == name) return &e;
    return nullptr;
}

void check_ranges(const RecipeFamily &fam, const std::map<std::string, long long> &vals) {
    for (const auto &p : fam.params) {
        auto it = vals.find(p.name);
        if (it == vals.end()) continue;
        if (it->second < p.min || it->second > p.max)
            throw ParameterOutOfRange("recipe " + fam.name + ": parameter " + p.name + " = " +
                                      std::to_string(it->second) + " outside [" +
                                      std::to_string(p.min) + ", " + std::to_string(p.max) +
                                      "]");
    }
    for (const auto &[k, v] : vals) {
        bool known = false;
        for (const auto &p : fam.params)
            if (p.name == k) known = true;
        if (!known)
            throw ParameterOutOfRange("recipe " + fam.name + ": unknown parameter " + k);
    }
}

void validate_against_family(const Recipe &r) {
    const FamilyEntry *e = find_family(r.name);
    if (!e) return;  // free-form recipe file, no declared ranges
    std::map<std::string, long long> vals;
    for (const auto &[k, v] : r.params) vals[k] = v;
    check_ranges(e->family, vals);
}

}  // namespace

const std::vector<RecipeFamily> &builtin_recipes() {
    static const std::vector<RecipeFamily> v = [] {
        std::vector<RecipeFamily> out;
        for (const auto &e : families()) out.push_back(e.family);
        return out;
    }();
    return v;
}

Recipe build_recipe(const std::string &name, const std::map<std::string, long long> &overrides) {
    const FamilyEntry *e = find_family(name);
    if (!e) throw UnknownStep("unknown recipe \"" + name + "\"");
    check_ranges(e->family, overrides);
    return e->build(overrides);
}

}  // namespace geokit
