#pragma once

#include "tsurf/pres.hpp"

#include <functional>
#include <map>

namespace tsurf {

// Parameters of an appendix family. Counts of 2s are named as in the
// family's chain shape; unused fields stay 0.
struct FamilyParams {
    std::int64_t r = 0, a = 0, b = 0, c = 0, n = 0, nn = 0;

    std::map<std::string, std::int64_t> as_map(const std::vector<std::string>& names) const;
    static FamilyParams from_map(const std::map<std::string, std::int64_t>& m);
};

// One token of a golden row in bracket notation: [d(n,a)], A_x or (c).
struct NotationToken {
    enum Kind { T, A, Link } kind = T;
    std::int64_t d = 1, n = 2, a = 1;
    std::int64_t x = 0;
};

struct GoldenRow {
    std::string label;
    std::function<bool(const FamilyParams&)> applies;
    std::function<Chain(const FamilyParams&)> zcf;
    std::function<std::vector<NotationToken>(const FamilyParams&)> tokens;
};

struct AppendixFamily {
    std::string id;
    std::vector<std::string> param_names;
    std::function<bool(const FamilyParams&)> in_range;
    std::function<Chain(const FamilyParams&)> chain;
    bool cross_only = false;
    std::vector<GoldenRow> rows;
    // Frozen parameter grid, inclusive ranges per name.
    std::vector<std::pair<std::int64_t, std::int64_t>> grid;
};

const std::vector<AppendixFamily>& appendix_families();
const AppendixFamily& appendix_family(const std::string& id);

// Expands the end shorthands and d = 0 degenerations, fills in smooth
// points, and merges equal Wahl neighbours joined by a (1)-curve.
std::pair<std::vector<PNode>, std::vector<std::int64_t>> parse_notation(const std::vector<NotationToken>& toks);

struct ExpectedRow {
    std::string notation;
    std::vector<std::string> labels;
    Chain zcf;
};

struct ComparisonReport {
    std::string family;
    FamilyParams params;
    Fraction source;
    std::vector<ExpectedRow> expected;
    std::vector<std::pair<Chain, std::string>> computed;
    std::vector<std::string> missing;
    std::vector<std::string> extra;
    std::vector<std::string> zcf_mismatch;
    // Notations claimed by more than one row label.
    std::vector<std::string> collisions;

    bool ok() const { return missing.empty() && extra.empty() && zcf_mismatch.empty(); }
};

ComparisonReport appendix_check(const std::string& family, const FamilyParams& params);

// All parameter points of the family's frozen grid that are in range.
std::vector<FamilyParams> grid_points(const AppendixFamily& fam);

}  // namespace tsurf
