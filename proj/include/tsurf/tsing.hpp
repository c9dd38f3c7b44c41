#pragma once

#include "tsurf/cf_core.hpp"

#include <optional>
#include <utility>

namespace tsurf {

// T-singularity 1/(d n^2)(1, d n a - 1). Du Val chains are not TTypes.
struct TType {
    std::int64_t d = 1;
    std::int64_t n = 2;
    std::int64_t a = 1;

    Fraction fraction() const;
    bool is_wahl() const { return d == 1; }
    // The same singularity read from the other end of its chain.
    TType reversed() const { return {d, n, n - a}; }

    auto operator<=>(const TType&) const = default;
};

TType make_ttype(std::int64_t d, std::int64_t n, std::int64_t a);
std::string to_string(const TType& t);

struct DiscrepancyVector {
    std::vector<Rational> deltas;
    // t = n (1 + delta) at the two ends; only set for T-chains.
    std::optional<Int> t_first;
    std::optional<Int> t_last;
};

Chain t_expand(const TType& t);
std::optional<TType> t_recognize(const Chain& chain);
std::pair<Chain, Chain> t_children(const Chain& chain);

// Breadth-first closure of the seeds under t_children, sorted
// lexicographically by chain.
std::vector<std::pair<TType, Chain>> enumerate_t_chains(int max_len, const Int& max_delta,
                                                         std::optional<std::int64_t> d_filter = {});

// Exact solve of the tridiagonal system M delta = (e_i - 2).
DiscrepancyVector discrepancies(const Chain& chain);

// Discrepancies obtained by unwrapping the chain to its seed and replaying
// the child operations with the t_i/n bookkeeping.
DiscrepancyVector discrepancies_recursive(const Chain& chain);

// 1-based indices of the curves with minimal discrepancy.
std::vector<std::size_t> center(const Chain& chain);

// Sequence of child operations leading from the seed to the chain:
// 'L' prepends a 2 (first child of the pair), 'R' appends a 2.
struct Unwrapping {
    std::int64_t d;
    std::string ops;
};
std::optional<Unwrapping> t_unwrap(const Chain& chain);

}  // namespace tsurf
