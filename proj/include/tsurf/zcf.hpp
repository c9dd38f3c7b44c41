#pragma once

#include "tsurf/cf_core.hpp"

#include <set>
#include <utility>

namespace tsurf {

// Triangulation of the (s+1)-gon with vertices V_0..V_s.
struct Triangulation {
    int vertex_count = 0;
    std::set<std::pair<int, int>> diagonals;
    // Triangles at each vertex, v_0..v_s.
    std::vector<std::int64_t> degrees;

    // The zero chain [v_1, ..., v_s].
    Chain zero_chain() const { return Chain(degrees.begin() + 1, degrees.end()); }
};

std::vector<Triangulation> enumerate_triangulations(int s);

// Zero continued fractions of length s, lexicographically sorted.
std::vector<Chain> enumerate_zcf(int s);

// Zero chains bounded entrywise by dual(delta, omega).
std::vector<Chain> k_set(const Int& delta, const Int& omega);

// Members of k_set whose end entries equal those of the dual chain.
std::vector<Chain> k_cross_set(const Int& delta, const Int& omega);

// Reference filter: enumerate_zcf(s) restricted to the dual bound.
std::vector<Chain> k_set_by_filter(const Int& delta, const Int& omega);

Int catalan_count(int s);

}  // namespace tsurf
