#include <doctest.h>

#include "geokit/recipe.hpp"
#include "geokit/report.hpp"

using geokit::Recipe;
using geokit::Report;

namespace {

bool registry_has(const std::string &name) {
    for (const auto &f : geokit::builtin_recipes())
        if (f.name == name) return true;
    return false;
}

}  // namespace

TEST_CASE("registry contents") {
    for (const char *name :
         {"Yn", "Y1pq", "X1", "Xn", "spinX", "Zn", "cs-verify", "mumford-check"})
        CHECK(registry_has(name));
    CHECK_FALSE(registry_has("nope"));
    CHECK_THROWS_AS(geokit::build_recipe("nope"), geokit::UnknownStep);
}

TEST_CASE("render/parse round-trip for every built-in") {
    std::vector<std::pair<std::string, std::map<std::string, long long>>> cases = {
        {"Yn", {{"n", 4}, {"m", 2}}},
        {"Y1pq", {{"p", 2}, {"q", 3}, {"m", 1}}},
        {"X1", {{"p", 7}, {"q", 1}}},
        {"Xn", {{"n", 3}}},
        {"spinX", {}},
        {"Zn", {{"n", 2}}},
        {"cs-verify", {}},
        {"mumford-check", {}},
    };
    for (const auto &[name, params] : cases) {
        Recipe r = geokit::build_recipe(name, params);
        std::string text = geokit::render_recipe(r);
        Recipe back = geokit::parse_recipe(text);
        CHECK(back == r);
        CHECK(geokit::render_recipe(back) == text);
    }
}

TEST_CASE("parameter range validation") {
    CHECK_THROWS_AS(geokit::build_recipe("Yn", {{"n", 1}}), geokit::ParameterOutOfRange);
    CHECK_THROWS_AS(geokit::build_recipe("Y1pq", {{"p", 0}}), geokit::ParameterOutOfRange);
    CHECK_THROWS_AS(geokit::build_recipe("Yn", {{"bogus", 3}}), geokit::ParameterOutOfRange);

    // The same check runs when a file names a built-in family.
    std::string text = "recipe Yn\nparam n = 1\n";
    CHECK_THROWS_AS(geokit::parse_recipe(text), geokit::ParameterOutOfRange);
}

TEST_CASE("parse errors carry line positions") {
    CHECK_THROWS_AS(geokit::parse_recipe("recipe t\nstep product 2\n"), geokit::SyntaxError);
    CHECK_THROWS_AS(geokit::parse_recipe("recipe t\nstep fiber_sum left A right B\n"),
                    geokit::SyntaxError);
    CHECK_THROWS_AS(geokit::parse_recipe("recipe t\nstep teleport\n"), geokit::UnknownStep);
    CHECK_THROWS_AS(geokit::parse_recipe("step block M\n"), geokit::SyntaxError);
    CHECK_THROWS_AS(geokit::parse_recipe("recipe t\nexpect e = 1\n"), geokit::SyntaxError);
    try {
        geokit::parse_recipe("recipe t\nstep product 2\n");
    } catch (const geokit::SyntaxError &e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("running the trivial-homology family") {
    Report rep = geokit::run_recipe(geokit::build_recipe("Yn", {{"n", 4}, {"m", 1}}));
    CHECK(rep.expects_pass());
    CHECK(*rep.euler == 12);
    CHECK(*rep.sigma == 0);
    REQUIRE(rep.h1.has_value());
    CHECK(rep.h1->rank == 0);
    CHECK(rep.h1->torsion.empty());
    CHECK(geokit::exit_code_for(rep) == 0);
}

TEST_CASE("running the glued family") {
    Report rep = geokit::run_recipe(geokit::build_recipe("X1"));
    CHECK(rep.expects_pass());
    CHECK(*rep.euler == 12);
    REQUIRE(rep.profile.has_value());
    CHECK(rep.profile->model == "5CP#5CPbar");
    CHECK(rep.parity == "odd");

    Report p7 = geokit::run_recipe(geokit::build_recipe("X1", {{"p", 7}, {"q", 1}}));
    REQUIRE(p7.h1.has_value());
    REQUIRE(p7.h1->torsion.size() == 1);
    CHECK(p7.h1->torsion[0] == "7");
    CHECK(p7.h1->lower_bound);
    CHECK(p7.expects_pass());
}

TEST_CASE("chain report surfaces the Euler discrepancy but still exits 0") {
    Report rep = geokit::run_recipe(geokit::build_recipe("Xn", {{"n", 2}}));
    REQUIRE(rep.chain.has_value());
    CHECK(rep.chain->source_value == 16);
    CHECK(rep.chain->pairwise_value == 24);
    CHECK(rep.chain->target_value == 8);
    bool flagged = false;
    for (const auto &f : rep.flags)
        if (f.message.find("4n+8") != std::string::npos && f.citation.find("§5") == 0)
            flagged = true;
    CHECK(flagged);
    std::string text = rep.render_text();
    CHECK(text.find("16") != std::string::npos);
    CHECK(text.find("24") != std::string::npos);
    CHECK(text.find("= 8") != std::string::npos);
    CHECK(geokit::exit_code_for(rep) == 0);

    Report r1 = geokit::run_recipe(geokit::build_recipe("Xn", {{"n", 1}}));
    CHECK_FALSE(r1.chain.has_value());  // nothing to compare at n = 1
    CHECK(*r1.euler == 12);
}

TEST_CASE("every flag and annotation in a report is cited") {
    for (const char *name : {"X1", "Xn", "Zn", "cs-verify", "Y1pq"}) {
        Report rep = geokit::run_recipe(geokit::build_recipe(name));
        for (const auto &f : rep.flags) CHECK(!f.citation.empty());
        for (const auto &a : rep.annotations) CHECK(!a.citation.empty());
    }
}

TEST_CASE("spin recipe") {
    Report rep = geokit::run_recipe(geokit::build_recipe("spinX"));
    CHECK(rep.expects_pass());
    CHECK(*rep.euler == 8);
    CHECK(rep.profile->model == "3(S2xS2)");
    CHECK(rep.parity == "even");
}

TEST_CASE("verification recipe carries the failure flags") {
    Report rep = geokit::run_recipe(geokit::build_recipe("cs-verify"));
    CHECK(rep.has_cs);
    CHECK(rep.expects_pass());  // form preservation is the asserted expectation
    bool h1_flag = false, relation_flag = false;
    for (const auto &f : rep.flags) {
        if (f.message.find("Z^2") != std::string::npos) h1_flag = true;
        if (f.message.find("do not hold") != std::string::npos) relation_flag = true;
    }
    CHECK(h1_flag);
    CHECK(relation_flag);
}

TEST_CASE("annotation presence for the not-computed claims") {
    Report rep = geokit::run_recipe(geokit::build_recipe("X1"));
    bool usher = false, sw = false, pi1 = false;
    for (const auto &a : rep.annotations) {
        if (a.message.find("Usher") != std::string::npos) usher = true;
        if (a.message.find("Seiberg-Witten") != std::string::npos) sw = true;
        if (a.message.find("imple connectivity") != std::string::npos) pi1 = true;
        CHECK(!a.citation.empty());
    }
    CHECK(usher);
    CHECK(sw);
    CHECK(pi1);
}

TEST_CASE("reports are byte-deterministic") {
    Recipe r = geokit::build_recipe("X1", {{"p", 3}, {"q", 2}, {"m", 2}});
    Report a = geokit::run_recipe(r);
    Report b = geokit::run_recipe(r);
    CHECK(a.render_text() == b.render_text());
    CHECK(a.render_json() == b.render_json());
    CHECK(a.render("json-like") == a.render_json());
    CHECK_THROWS_AS(a.render("yaml"), std::invalid_argument);
}

TEST_CASE("step errors surface with their index and exit code 3") {
    std::string text =
        "recipe broken\n"
        "step block M\n"
        "step fiber_sum left nope right M#CPbar rightsurface Sigma3bar\n";
    Recipe r = geokit::parse_recipe(text);
    Report rep = geokit::run_recipe(r);
    REQUIRE(rep.error.has_value());
    CHECK(rep.error->step_index == 2);
    CHECK(geokit::exit_code_for(rep) == 3);
    CHECK(rep.render_text().find("error at step 2") != std::string::npos);
}

TEST_CASE("failed expectations exit 1") {
    std::string text =
        "recipe custom\n"
        "step block M\n"
        "expect e = 99 cite \"nowhere\"\n";
    Report rep = geokit::run_recipe(geokit::parse_recipe(text));
    CHECK_FALSE(rep.expects_pass());
    CHECK(geokit::exit_code_for(rep) == 1);
}

TEST_CASE("every built-in expectation carries a citation") {
    std::vector<std::pair<std::string, std::map<std::string, long long>>> cases = {
        {"Yn", {}}, {"Y1pq", {}}, {"X1", {}}, {"Xn", {}},
        {"spinX", {}}, {"Zn", {}}, {"cs-verify", {}}, {"mumford-check", {}},
    };
    for (const auto &[name, params] : cases) {
        Recipe r = geokit::build_recipe(name, params);
        for (const auto &e : r.expects) CHECK(!e.citation.empty());
    }
}

TEST_CASE("mumford check passes") {
    Report rep = geokit::run_recipe(geokit::build_recipe("mumford-check"));
    CHECK(rep.expects_pass());
}

TEST_CASE("file recipes can glue two presented blocks") {
    std::string text =
        "recipe glue2\n"
        "step product 3 1 scaffold none\n"
        "step fiber_sum left Sigma3_x_pt right Sigma3xT2 rightsurface Sigma3_x_pt"
        " meridian c1^-1*d1^-1*c1*d1 rmeridian r.c1^-1*r.d1^-1*r.c1*r.d1"
        " removerel c1^-1*d1^-1*c1*d1 rremoverel c1^-1*d1^-1*c1*d1"
        " identify a1:r.a1 identify b1:r.b1 identify a2:r.a2 identify b2:r.b2"
        " identify a3:r.a3 identify b3:r.b3\n"
        "expect e = 8 cite \"normal-sum formula\"\n"
        "expect b1 = 10 cite \"six identifications on Z^16\"\n";
    Recipe r = geokit::parse_recipe(text);
    Recipe back = geokit::parse_recipe(geokit::render_recipe(r));
    CHECK(back == r);
    Report rep = geokit::run_recipe(r);
    CHECK(rep.expects_pass());
    REQUIRE(rep.h1.has_value());
    CHECK(rep.h1->rank == 10);
    CHECK_FALSE(rep.h1->lower_bound);
}

TEST_CASE("analogy recipe is flagged in its header") {
    Report rep = geokit::run_recipe(geokit::build_recipe("Zn", {{"n", 2}}));
    bool note = false;
    for (const auto &n : rep.notes)
        if (n.find("analogy") != std::string::npos) note = true;
    CHECK(note);
    CHECK(rep.expects_pass());
}
