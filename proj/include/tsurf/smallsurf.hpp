#pragma once

#include "tsurf/tsing.hpp"

#include <functional>
#include <map>
#include <optional>

namespace tsurf {

// Kodaira fiber; starred types never occur in a small surface.
struct FiberType {
    enum Kind { I, II, III, IV } kind = I;
    std::int64_t n = 1;

    std::int64_t euler() const;
    static FiberType In(std::int64_t n) { return {I, n}; }

    bool operator==(const FiberType&) const = default;
};

std::string to_string(const FiberType& f);
// Accepts "I1", "I_3", "II", "III", "IV".
FiberType parse_fiber(const std::string& text);

struct BlockParams {
    std::optional<std::int64_t> r;
    std::optional<FiberType> f;
    std::optional<FiberType> f2;
};

struct BlockInstance {
    std::string id;
    BlockParams params;
    // Base chains first, then the chains contributed by the fibers.
    std::vector<Chain> chains;
    std::vector<Chain> du_val;
    std::int64_t local_k2 = 0;
    std::int64_t euler_cost = 0;
    std::int64_t singular_fibers = 0;
    std::int64_t complete_fibers = 0;
    // Blow-ups of S needed to reach the chains: Sum(r_j - d_j + 1) - localK2.
    std::int64_t blowups = 0;
    std::optional<int> j_class;
    std::optional<Rational> section_discrepancy;
};

// Static catalog data for one block.
struct BlockInfo {
    std::string id;
    std::optional<int> j_class;
    std::optional<std::int64_t> fixed_r;
    std::int64_t min_r = 0;
    int fiber_slots = 0;
    // Where the section sits among the base chains: (chain, 0-based position).
    std::function<std::pair<std::size_t, std::size_t>(std::int64_t r)> section_position;
    // Blow-up count of the general configuration as computed in the catalog
    // prose (every optional chain present).
    std::function<std::int64_t(std::int64_t r)> general_blowups;
};

const std::vector<BlockInfo>& block_catalog();
const BlockInfo& block_info(const std::string& id);
// Checks fiber and r admissibility without building chains.
bool block_accepts(const std::string& id, const BlockParams& params);
BlockInstance instantiate_block(const std::string& id, const BlockParams& params);

struct SmallSurfaceConfig {
    std::int64_t pg = 2;
    BlockInstance main;
    std::vector<BlockInstance> fibs;
};

struct NefCheck {
    std::size_t junction = 0;
    Rational k_dot_e;
    bool ok = false;
};

struct InvariantsRecord {
    std::int64_t pg = 0, N = 0, K2 = 0;
    std::int64_t chi_top = 0, b_plus = 0, b_minus = 0, sigma = 0;
    std::string homeo;
    // Set when simple connectivity of the blowdown is not known.
    bool homeo_caveat = false;
};

struct SmallSurfaceReport {
    std::int64_t pg = 0;
    std::string block;
    std::vector<Chain> chains;
    std::vector<Chain> du_val;
    std::vector<TType> singularities;
    std::int64_t K2 = 0;
    std::int64_t N = 0;
    std::int64_t l = 0;
    std::int64_t blowups = 0;
    std::int64_t euler_used = 0;
    std::int64_t euler_budget = 0;
    bool euler_ok = false;
    std::vector<NefCheck> nef_checks;
    bool nef_ok = false;
    bool law_ok = false;
    InvariantsRecord invariants;

    bool ok() const { return euler_ok && nef_ok && law_ok; }
};

// Throws ValidationError when the config shape is wrong and StructuralError
// when the two K^2 bookkeepings disagree. Budget and nefness failures are
// reported, not thrown.
SmallSurfaceReport assemble(const SmallSurfaceConfig& config);

// K_S^2 - m + Sum(r_j - d_j + 1) over (length, d) pairs.
std::int64_t k2_global(std::int64_t k_s2, std::int64_t m,
                       const std::vector<std::pair<std::int64_t, std::int64_t>>& chains);

InvariantsRecord blowdown_invariants(std::int64_t pg, std::int64_t N);

struct GeographyWitness {
    std::string block;
    std::int64_t s = 0;
    std::int64_t K2 = 0;
    std::int64_t euler_used = 0;
};

struct BlockMaximum {
    std::string block;
    std::int64_t s_max = 0;
    std::int64_t k2_max = 0;
};

struct GeographyResult {
    std::int64_t pg = 0;
    std::int64_t min_k2 = 0;
    std::int64_t max_k2 = 0;
    Rational rational_max;
    std::map<std::int64_t, std::vector<GeographyWitness>> witnesses;
    std::vector<BlockMaximum> block_maxima;
    bool all_realizable = false;
    bool s2f7_attains_rational_max = false;
};

// Cheapest configuration for a block with s FIBs, or nullopt when no fiber
// choice fits the Euler budget or nefness fails.
std::optional<SmallSurfaceConfig> cheapest_config(std::int64_t pg, const std::string& block, std::int64_t s);
GeographyResult geography(std::int64_t pg);

struct TableItem {
    std::int64_t count = 1;
    Chain chain;
    // 1 for Wahl chains; the table's stated d for T-chains.
    std::int64_t d = 1;
};

struct HorikawaFamily {
    std::int64_t pg = 0;
    std::string label;
    std::string block_tag;
    std::vector<std::string> param_names;
    // Bound on the sum of the parameters, as printed and as derived from
    // the Euler budget.
    std::optional<std::int64_t> stated_bound;
    std::optional<std::int64_t> computed_bound;
    std::string smoothability_note;
    // Chains as listed in the classification table.
    std::function<std::vector<TableItem>(const std::vector<std::int64_t>&)> table_chains;
    // Block assembly realizing the row; empty for the Lee-Park row.
    std::function<SmallSurfaceConfig(const std::vector<std::int64_t>&)> instantiate;
};

std::vector<HorikawaFamily> horikawa_families(std::int64_t pg);
SmallSurfaceReport realize(const HorikawaFamily& fam, const std::vector<std::int64_t>& params);

SmallSurfaceReport lee_park(std::int64_t pg);

std::int64_t k2_multisection(std::int64_t e, std::int64_t e_prime, std::int64_t N, std::int64_t n_prime,
                             std::int64_t n_star, std::int64_t t30, std::int64_t pg);
Rational bmy_bound(std::int64_t pg, const std::vector<TType>& sings);

}  // namespace tsurf
