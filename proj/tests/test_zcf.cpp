#include "oracles.hpp"

#include "tsurf/zcf.hpp"

#include <doctest.h>

#include <numeric>

using namespace tsurf;

TEST_SUITE("zcf")
{
    TEST_CASE("catalan counts")
    {
        const std::vector<std::size_t> want{1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
        for (int s = 2; s <= 12; ++s) {
            REQUIRE(enumerate_zcf(s).size() == want[static_cast<std::size_t>(s - 2)]);
            REQUIRE(catalan_count(s) == want[static_cast<std::size_t>(s - 2)]);
        }
        CHECK_THROWS_AS(enumerate_zcf(1), ValidationError);
    }

    TEST_CASE("enumeration equals the blow-up closure and is sorted")
    {
        auto closure = oracle::zero_chains_by_blowup(9);
        for (int s = 2; s <= 9; ++s) {
            auto z = enumerate_zcf(s);
            REQUIRE(std::is_sorted(z.begin(), z.end()));
            for (const auto& c : z) REQUIRE(closure.count(c) == 1);
            std::size_t want = 0;
            for (const auto& c : closure) want += c.size() == static_cast<std::size_t>(s);
            REQUIRE(z.size() == want);
        }
    }

    TEST_CASE("triangulation degrees")
    {
        for (int s = 2; s <= 8; ++s)
            for (const auto& t : enumerate_triangulations(s)) {
                REQUIRE(t.vertex_count == s + 1);
                REQUIRE(t.diagonals.size() == static_cast<std::size_t>(s - 2));
                std::int64_t total = std::accumulate(t.degrees.begin(), t.degrees.end(), std::int64_t{0});
                REQUIRE(total == 3 * (s - 1));
                REQUIRE(is_zero_chain(t.zero_chain()));
            }
    }

    TEST_CASE("k_set examples")
    {
        CHECK(k_set(19, 7) == std::vector<Chain>{{1, 2, 2, 1}, {1, 3, 1, 2}, {2, 2, 1, 3}});
        auto cross = k_cross_set(19, 7);
        for (const auto& c : cross) {
            CHECK(c.front() == dual(19, 7).front());
            CHECK(c.back() == dual(19, 7).back());
        }
        CHECK(k_set(3, 2).empty());
    }

    TEST_CASE("k_set equals the filter on a grid")
    {
        for (std::int64_t delta = 2; delta <= 120; ++delta)
            for (std::int64_t omega = 1; omega < delta; ++omega) {
                if (std::gcd(delta, omega) != 1) continue;
                auto ks = k_set(delta, omega);
                auto b = dual(delta, omega);
                // The filter walks all Catalan-many zero chains; keep it to short duals.
                if (b.size() <= 11) REQUIRE(ks == k_set_by_filter(delta, omega));
                REQUIRE(std::is_sorted(ks.begin(), ks.end()));
                for (const auto& k : ks) {
                    REQUIRE(k.size() == b.size());
                    for (std::size_t i = 0; i < k.size(); ++i) REQUIRE(k[i] <= b[i]);
                    REQUIRE(is_zero_chain(k));
                }
            }
    }

    TEST_CASE("ears of the polygon")
    {
        for (int s = 2; s <= 10; ++s)
            for (const auto& z : enumerate_zcf(s)) {
                std::vector<std::int64_t> v{3 * (s - 1)};
                for (auto e : z) {
                    v[0] -= e;
                    v.push_back(e);
                }
                std::vector<std::size_t> ears;
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (v[i] == 1) ears.push_back(i);
                REQUIRE(ears.size() >= 2);
                if (s >= 3)
                    for (std::size_t k = 0; k < ears.size(); ++k)
                        REQUIRE((ears[k] + 1) % v.size() != ears[(k + 1) % ears.size()]);
            }
    }

    TEST_CASE("contracting a 1 stays in the zero locus")
    {
        for (int s = 3; s <= 10; ++s)
            for (const auto& z : enumerate_zcf(s))
                for (std::size_t i = 0; i < z.size(); ++i) {
                    if (z[i] != 1) continue;
                    Chain w;
                    for (std::size_t j = 0; j < z.size(); ++j)
                        if (j != i) w.push_back(j + 1 == i || j == i + 1 ? z[j] - 1 : z[j]);
                    REQUIRE(is_zero_chain(w));
                    if (s >= 4 && i > 0 && i + 1 < z.size()) REQUIRE_FALSE((z[i - 1] == 2 && z[i + 1] == 2));
                }
    }
}
