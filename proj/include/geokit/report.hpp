#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geokit/block.hpp"
#include "geokit/cartwright_steger.hpp"
#include "geokit/recipe.hpp"

namespace geokit {

struct StepSnapshot {
    int index = 0;
    std::string description;
    long long e = 0, sigma = 0;
    bool symplectic = false;
    std::optional<long> b1;
};

struct H1Display {
    long rank = 0;
    std::vector<std::string> torsion;
    bool lower_bound = false;
    std::string str() const;
};

struct ChainComparison {
    long long n = 0;
    long long source_value = 0;    // 4n + 8 as printed
    long long pairwise_value = 0;  // 12n from the formula applied pairwise
    long long target_value = 0;    // 4n, Euler number of (2n-1)CP#(2n-1)CPbar
};

struct ExpectResult {
    std::string key, expected, actual, citation;
    bool pass = false;
};

struct StepError {
    int step_index = 0;
    std::string message;
};

struct Report {
    std::string recipe_name;
    std::vector<std::pair<std::string, long long>> params;
    std::vector<std::string> notes;
    std::vector<StepSnapshot> steps;
    std::optional<StepError> error;  // set when a step failed; later data absent

    std::optional<Profile> profile;
    std::optional<long long> euler, sigma;
    std::optional<bool> symplectic;
    std::string parity;
    std::string parity_note;
    std::optional<H1Display> h1;

    bool has_cs = false;
    cs::RelationReport cs_report;

    std::optional<ChainComparison> chain;
    std::vector<Flag> flags;
    std::vector<Flag> annotations;
    std::vector<ExpectResult> expects;

    bool expects_pass() const;
    std::string render_text() const;
    std::string render_json() const;  // stable key order
    std::string render(const std::string &format) const;
};

Report run_recipe(const Recipe &r);

/// 0 success, 1 expectation failed, 3 a step failed.
int exit_code_for(const Report &rep);

}  // namespace geokit
