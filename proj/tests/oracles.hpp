#pragma once

#include "tsurf/cf_core.hpp"

#include <optional>
#include <random>
#include <set>

namespace oracle {

using tsurf::Chain;
using tsurf::Int;
using tsurf::Rational;

// Value of [e_1, ..., e_s] folded from the right; nullopt on division by zero.
inline std::optional<Rational> value(const Chain& c)
{
    Rational x = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        if (x == 0) return std::nullopt;
        x = Rational(c[i]) - 1 / x;
    }
    return x;
}

// All zero chains of length <= max_len, grown from [1,1] by arithmetic blow-ups.
inline std::set<Chain> zero_chains_by_blowup(std::size_t max_len)
{
    std::set<Chain> all{{1, 1}};
    std::set<Chain> frontier = all;
    while (!frontier.empty()) {
        std::set<Chain> next;
        for (const auto& z : frontier) {
            if (z.size() >= max_len) continue;
            for (std::size_t i = 0; i <= z.size(); ++i) {
                Chain w;
                for (std::size_t j = 0; j < z.size(); ++j) {
                    if (j == i) w.push_back(1);
                    w.push_back(z[j]);
                }
                if (i == z.size()) w.push_back(1);
                // The new 1 sits at index i; bump its neighbours.
                if (i > 0) w[i - 1] += 1;
                if (i + 1 < w.size()) w[i + 1] += 1;
                if (all.insert(w).second) next.insert(w);
            }
        }
        frontier = std::move(next);
    }
    return all;
}

// Random zero chain of the given length via random blow-ups.
inline Chain random_zero_chain(std::size_t len, std::mt19937& rng)
{
    Chain z{1, 1};
    while (z.size() < len) {
        std::uniform_int_distribution<std::size_t> pos(0, z.size());
        auto i = pos(rng);
        z.insert(z.begin() + static_cast<std::ptrdiff_t>(i), 1);
        if (i > 0) z[i - 1] += 1;
        if (i + 1 < z.size()) z[i + 1] += 1;
    }
    return z;
}

}  // namespace oracle
