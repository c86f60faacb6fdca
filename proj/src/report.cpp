#include "geokit/report.hpp"

#include <sstream>

#include <json.hpp>

#include "geokit/relation_sets.hpp"

namespace geokit {

std::string H1Display::str() const {
    std::string out;
    if (rank > 0) out = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (const auto &t : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t;
    }
    if (out.empty()) out = "0";
    if (lower_bound) out += " (torsion is a lower bound)";
    return out;
}

bool Report::expects_pass() const {
    if (error) return false;
    for (const auto &e : expects)
        if (!e.pass) return false;
    return true;
}

int exit_code_for(const Report &rep) {
    if (rep.error) return 3;
    return rep.expects_pass() ? 0 : 1;
}

namespace {

std::string describe(const Step &step) {
    return std::visit(
        [](const auto &s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ProductStep>)
                return "product Sigma" + std::to_string(s.g) + " x Sigma" + std::to_string(s.h) +
                       (s.scaffold == "none" ? "" : " (complement scaffold " + s.scaffold + ")");
            else if constexpr (std::is_same_v<T, BlockStep>)
                return "block " + s.catalog_name;
            else if constexpr (std::is_same_v<T, BlowUpStep>)
                return s.generic ? "blow-up"
                                 : "blow-up through " + s.surface + " multiplicity " +
                                       std::to_string(s.multiplicity);
            else if constexpr (std::is_same_v<T, SurfaceStep>)
                return "track surface " + s.label;
            else if constexpr (std::is_same_v<T, SurgeryStep>)
                return "torus surgery " + s.torus_label + " " +
                       (s.datum.sign < 0 ? "-" : "+") + std::to_string(s.datum.num) + "/" +
                       std::to_string(s.datum.den);
            else if constexpr (std::is_same_v<T, FiberSumStep>)
                return "fiber sum with " + s.right_block + " along " + s.left_surface + " ~ " +
                       s.right_surface;
            else
                return "attach rationally trivial side";
        },
        step);
}

Block execute(const Step &step, std::optional<Block> current) {
    return std::visit(
        [&](const auto &s) -> Block {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ProductStep>) {
                Block b = product_block(s.g, s.h);
                if (s.scaffold == "yn") {
                    b.presentation = data::yn_scaffold(s.h);
                } else if (s.scaffold == "y1") {
                    b.presentation = data::y1_scaffold();
                } else if (s.scaffold == "zn") {
                    b.presentation = data::zn_scaffold(s.h);
                }
                if (s.scaffold != "none") {
                    b.b1 = static_cast<long>(h1(*b.presentation).rank);
                    b.provenance.push_back("presentation replaced by the " + s.scaffold +
                                           " surgery-complement scaffold");
                }
                return b;
            } else if constexpr (std::is_same_v<T, BlockStep>) {
                auto b = builtin_block(s.catalog_name);
                if (!b) throw std::invalid_argument("no catalog block \"" + s.catalog_name + "\"");
                return *b;
            } else if constexpr (std::is_same_v<T, BlowUpStep>) {
                if (!current) throw std::logic_error("blow_up without a current block");
                return s.generic ? blow_up(*current)
                                 : blow_up(*current, s.surface, s.multiplicity);
            } else if constexpr (std::is_same_v<T, SurfaceStep>) {
                if (!current) throw std::logic_error("surface step without a current block");
                Block b = *current;
                b.surfaces.push_back(
                    make_surface(s.label, s.genus, s.square, s.k_pairing, true, true));
                b.provenance.push_back("tracked class " + s.label + " (given representative)");
                return b;
            } else if constexpr (std::is_same_v<T, SurgeryStep>) {
                if (!current) throw std::logic_error("surgery without a current block");
                Block before = *current;
                Block after = torus_surgery(before, s.datum, s.torus_label);
                if (after.euler != before.euler || after.signature != before.signature)
                    throw std::logic_error("torus surgery changed (e, sigma)");
                return after;
            } else if constexpr (std::is_same_v<T, FiberSumStep>) {
                if (!current) throw std::logic_error("fiber_sum without a current block");
                auto right = builtin_block(s.right_block);
                if (!right)
                    throw std::invalid_argument("no catalog block \"" + s.right_block + "\"");
                return fiber_sum(*current, s.left_surface, *right, s.right_surface, s.glue);
            } else {
                if (!current) throw std::logic_error("attach_trivial without a current block");
                Block b = *current;
                if (!b.presentation)
                    throw MissingPresentation("attach_trivial: block has no presentation");
                b.presentation = attach_rationally_trivial_side(*b.presentation, s.gens);
                b.b1 = static_cast<long>(h1(*b.presentation).rank);
                return b;
            }
        },
        step);
}

std::string actual_for_key(const std::string &key, const Report &rep, const Block *final_block) {
    auto opt_ll = [](const std::optional<long long> &v) {
        return v ? std::to_string(*v) : std::string("?");
    };
    if (key == "e") return opt_ll(rep.euler);
    if (key == "sigma") return opt_ll(rep.sigma);
    if (key == "b1")
        return final_block && final_block->b1 ? std::to_string(*final_block->b1) : "?";
    if (key == "symplectic")
        return rep.symplectic ? (*rep.symplectic ? "true" : "false") : "?";
    if (key == "parity") return rep.parity.empty() ? "?" : rep.parity;
    if (key == "profile") return rep.profile ? rep.profile->model : "?";
    if (key == "c1sq")
        return final_block ? std::to_string(final_block->c1_sq()) : "?";
    if (key == "chi_h")
        return final_block ? char_numbers(*final_block).chi_str() : "?";
    if (key == "bmy")
        return final_block ? (char_numbers(*final_block).on_bmy_line ? "true" : "false") : "?";
    if (key == "h1_rank") return rep.h1 ? std::to_string(rep.h1->rank) : "?";
    if (key == "h1_torsion") {
        if (!rep.h1) return "?";
        if (rep.h1->torsion.empty()) return "-";
        std::string out;
        for (size_t i = 0; i < rep.h1->torsion.size(); ++i)
            out += (i ? "," : "") + rep.h1->torsion[i];
        return out;
    }
    if (key == "h1_trivial")
        return rep.h1 ? (rep.h1->rank == 0 && rep.h1->torsion.empty() ? "true" : "false") : "?";
    if (key == "cs_form_preserved") {
        if (!rep.has_cs) return "?";
        for (const auto &f : rep.cs_report.form_preservation)
            if (!f.preserves) return "false";
        return "true";
    }
    if (key == "cs_relations_verified") {
        if (!rep.has_cs) return "?";
        for (const auto &r : rep.cs_report.relations)
            if (!r.holds_mod_scalar || !r.lambda_is_unit) return "false";
        return "true";
    }
    if (key.rfind("surface:", 0) == 0) {
        size_t second = key.find(':', 8);
        if (second == std::string::npos || !final_block) return "?";
        std::string label = key.substr(8, second - 8);
        std::string field = key.substr(second + 1);
        const TrackedSurface *s = final_block->find_surface(label);
        if (!s) return "?";
        if (field == "genus") return std::to_string(s->genus);
        if (field == "square") return std::to_string(s->self_intersection);
        return "?";
    }
    return "unknown-key";
}

}  // namespace

Report run_recipe(const Recipe &r) {
    Report rep;
    rep.recipe_name = r.name;
    rep.params = r.params;
    rep.notes = r.notes;
    rep.annotations = r.annotations;

    std::optional<Block> current;
    int index = 0;
    for (const Step &step : r.steps) {
        ++index;
        try {
            current = execute(step, current);
        } catch (const std::exception &e) {
            rep.error = StepError{index, e.what()};
            return rep;
        }
        StepSnapshot snap;
        snap.index = index;
        snap.description = describe(step);
        snap.e = current->euler;
        snap.sigma = current->signature;
        snap.symplectic = current->symplectic;
        snap.b1 = current->b1;
        rep.steps.push_back(snap);
    }

    if (current) {
        rep.euler = current->euler;
        rep.sigma = current->signature;
        rep.symplectic = current->symplectic;
        rep.parity = parity_str(current->parity);
        rep.parity_note = current->parity_note;
        if (current->b1) {
            try {
                rep.profile = homology_profile(*current);
            } catch (const std::exception &e) {
                rep.error = StepError{index, e.what()};
                return rep;
            }
        }
        if (current->presentation) {
            AbelianGroup g = h1(*current->presentation);
            H1Display d;
            d.rank = g.rank;
            for (const auto &t : g.torsion) d.torsion.push_back(t.get_str());
            d.lower_bound = g.torsion_is_lower_bound;
            rep.h1 = d;
            if (d.lower_bound)
                rep.flags.push_back(
                    Flag{"gluing words into the rationally trivial side are not explicit; the "
                         "rank is exact, the torsion is a lower bound",
                         "§4, displayed quotient and Lemma 4.2"});
            for (const auto &n : current->presentation->notes) {
                bool dup = false;
                for (const auto &existing : rep.notes) dup = dup || existing == n;
                if (!dup) rep.notes.push_back(n);
            }
        }
    }

    if (r.cs_section) {
        rep.has_cs = true;
        rep.cs_report = cs::relation_report();
        rep.flags.push_back(Flag{rep.cs_report.h1_note, "§3.2"});
        if (!rep.cs_report.relations_note.empty())
            rep.flags.push_back(Flag{rep.cs_report.relations_note, "§3.2"});
    }

    if (r.chain_discrepancy) {
        long long n = r.param("n").value_or(1);
        // At n = 1 the printed value and the pairwise formula agree (12);
        // the comparison is only informative for longer chains.
        if (n >= 2) {
            ChainComparison c;
            c.n = n;
            c.source_value = 4 * n + 8;
            c.pairwise_value = 12 * n;
            c.target_value = 4 * n;
            rep.chain = c;
            rep.flags.push_back(
                Flag{"chain Euler number: source prints 4n+8 = " +
                         std::to_string(c.source_value) + ", the pairwise formula gives 12n = " +
                         std::to_string(c.pairwise_value) +
                         ", and the target model (2n-1)CP#(2n-1)CPbar has e = 4n = " +
                         std::to_string(c.target_value) +
                         "; the three disagree for n >= 2 and the toolkit does not decide intent",
                     "§5"});
        }
    }

    const Block *final_block = current ? &*current : nullptr;
    for (const Expectation &e : r.expects) {
        ExpectResult res;
        res.key = e.key;
        res.expected = e.value;
        res.citation = e.citation;
        res.actual = actual_for_key(e.key, rep, final_block);
        res.pass = res.actual == res.expected;
        rep.expects.push_back(res);
    }
    return rep;
}

std::string Report::render_text() const {
    std::ostringstream os;
    os << "recipe " << recipe_name;
    if (!params.empty()) {
        os << " (";
        for (size_t i = 0; i < params.size(); ++i)
            os << (i ? ", " : "") << params[i].first << "=" << params[i].second;
        os << ")";
    }
    os << "\n";
    for (const auto &n : notes) os << "note: " << n << "\n";
    for (const auto &s : steps) {
        os << "step " << s.index << ": " << s.description << "  [e=" << s.e
           << " sigma=" << s.sigma << " symplectic=" << (s.symplectic ? "yes" : "no");
        if (s.b1) os << " b1=" << *s.b1;
        os << "]\n";
    }
    if (error) {
        os << "error at step " << error->step_index << ": " << error->message << "\n";
        return os.str();
    }
    if (euler) {
        os << "final: e=" << *euler << " sigma=" << *sigma << " symplectic="
           << (*symplectic ? "yes" : "no") << " parity=" << parity;
        if (!parity_note.empty()) os << " (" << parity_note << ")";
        os << "\n";
    }
    if (profile) {
        os << "profile: b2=" << profile->b2 << " b2+=" << profile->b2_plus
           << " b2-=" << profile->b2_minus << " chi_h=" << profile->chars.chi_str()
           << " c1sq=" << profile->chars.c1sq
           << " bmy=" << (profile->chars.on_bmy_line ? "yes" : "no");
        if (!profile->model.empty()) os << " model=" << profile->model;
        os << "\n";
    }
    if (h1) os << "h1: " << h1->str() << "\n";
    if (has_cs) {
        os << "lattice verification:\n";
        for (const auto &f : cs_report.form_preservation)
            os << "  form xi*Axi=A for " << f.generator << ": "
               << (f.preserves ? "exact" : "FAILED") << "\n";
        for (const auto &rel : cs_report.relations) {
            os << "  relation " << rel.name << ": ";
            if (rel.holds_mod_scalar)
                os << "holds modulo scalars, lambda = " << rel.lambda.str()
                   << (rel.lambda_is_unit ? " (unit)" : " (NOT a unit)");
            else
                os << "FAILED (no scalar witness)";
            os << "\n";
        }
        for (const auto &rel : cs_report.observed)
            os << "  observed " << rel.name << ": lambda = " << rel.lambda.str() << "\n";
        os << "  order of j modulo scalars: " << cs_report.j_order_mod_scalars << "\n";
        os << "  abelianization of the printed relations: " << cs_report.relation_h1.str()
           << " (SNF factors";
        for (const auto &d : cs_report.relation_snf_factors) os << " " << d.get_str();
        os << ")\n";
    }
    if (chain) {
        os << "chain comparison (n=" << chain->n << "): source 4n+8 = " << chain->source_value
           << "; pairwise formula 12n = " << chain->pairwise_value
           << "; target model e = 4n = " << chain->target_value << "\n";
    }
    for (const auto &f : flags) os << "flag: " << f.message << " [" << f.citation << "]\n";
    for (const auto &a : annotations)
        os << "annotation: " << a.message << " [" << a.citation << "]\n";
    for (const auto &e : expects)
        os << "expect " << e.key << " = " << e.expected << ": actual " << e.actual << " "
           << (e.pass ? "PASS" : "FAIL") << " [" << e.citation << "]\n";
    os << "result: " << (expects_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string Report::render_json() const {
    nlohmann::ordered_json j;
    j["recipe"] = recipe_name;
    nlohmann::ordered_json pj = nlohmann::ordered_json::object();
    for (const auto &[k, v] : params) pj[k] = v;
    j["params"] = pj;
    j["notes"] = notes;
    nlohmann::ordered_json sj = nlohmann::ordered_json::array();
    for (const auto &s : steps) {
        nlohmann::ordered_json e;
        e["index"] = s.index;
        e["op"] = s.description;
        e["e"] = s.e;
        e["sigma"] = s.sigma;
        e["symplectic"] = s.symplectic;
        if (s.b1) e["b1"] = *s.b1;
        sj.push_back(e);
    }
    j["steps"] = sj;
    if (error) {
        j["error"] = {{"step", error->step_index}, {"message", error->message}};
        return j.dump(2) + "\n";
    }
    if (euler) {
        j["final"]["e"] = *euler;
        j["final"]["sigma"] = *sigma;
        j["final"]["symplectic"] = *symplectic;
        j["final"]["parity"] = parity;
        j["final"]["parity_note"] = parity_note;
    }
    if (profile) {
        j["profile"]["b2"] = profile->b2;
        j["profile"]["b2_plus"] = profile->b2_plus;
        j["profile"]["b2_minus"] = profile->b2_minus;
        j["profile"]["chi_h"] = profile->chars.chi_str();
        j["profile"]["c1sq"] = profile->chars.c1sq;
        j["profile"]["bmy"] = profile->chars.on_bmy_line;
        j["profile"]["model"] = profile->model;
    }
    if (h1) {
        j["h1"]["rank"] = h1->rank;
        j["h1"]["torsion"] = h1->torsion;
        j["h1"]["torsion_is_lower_bound"] = h1->lower_bound;
    }
    if (has_cs) {
        nlohmann::ordered_json cj;
        for (const auto &f : cs_report.form_preservation)
            cj["form_preservation"][f.generator] = f.preserves;
        nlohmann::ordered_json rels = nlohmann::ordered_json::array();
        for (const auto &rel : cs_report.relations) {
            nlohmann::ordered_json rj;
            rj["name"] = rel.name;
            rj["holds_mod_scalar"] = rel.holds_mod_scalar;
            rj["lambda"] = rel.lambda.str();
            rj["lambda_is_unit"] = rel.lambda_is_unit;
            rels.push_back(rj);
        }
        cj["relations"] = rels;
        nlohmann::ordered_json obs = nlohmann::ordered_json::array();
        for (const auto &rel : cs_report.observed) {
            nlohmann::ordered_json rj;
            rj["name"] = rel.name;
            rj["lambda"] = rel.lambda.str();
            obs.push_back(rj);
        }
        cj["observed_relations"] = obs;
        cj["j_order_mod_scalars"] = cs_report.j_order_mod_scalars;
        cj["printed_relation_h1"] = cs_report.relation_h1.str();
        j["lattice"] = cj;
    }
    if (chain) {
        j["chain"]["n"] = chain->n;
        j["chain"]["source_4n_plus_8"] = chain->source_value;
        j["chain"]["pairwise_12n"] = chain->pairwise_value;
        j["chain"]["target_model_4n"] = chain->target_value;
    }
    nlohmann::ordered_json fj = nlohmann::ordered_json::array();
    for (const auto &f : flags) fj.push_back({{"message", f.message}, {"cite", f.citation}});
    j["flags"] = fj;
    nlohmann::ordered_json aj = nlohmann::ordered_json::array();
    for (const auto &a : annotations)
        aj.push_back({{"message", a.message}, {"cite", a.citation}});
    j["annotations"] = aj;
    nlohmann::ordered_json ej = nlohmann::ordered_json::array();
    for (const auto &e : expects) {
        nlohmann::ordered_json x;
        x["key"] = e.key;
        x["expected"] = e.expected;
        x["actual"] = e.actual;
        x["pass"] = e.pass;
        x["cite"] = e.citation;
        ej.push_back(x);
    }
    j["expects"] = ej;
    j["result"] = expects_pass() ? "PASS" : "FAIL";
    return j.dump(2) + "\n";
}

std::string Report::render(const std::string &format) const {
    if (format == "text") return render_text();
    if (format == "json-like" || format == "json") return render_json();
    throw std::invalid_argument("unknown format \"" + format + "\" (use text or json-like)");
}

}  // namespace geokit
