#include "oracles.hpp"

#include "tsurf/cf_core.hpp"

#include <doctest.h>

#include <numeric>

using namespace tsurf;

TEST_SUITE("cf_core")
{
    TEST_CASE("expand examples")
    {
        CHECK(hj_expand(25, 9) == Chain{3, 5, 2});
        CHECK(hj_expand(19, 7) == Chain{3, 4, 2});
        CHECK(dual(19, 7) == Chain{2, 3, 2, 3});
        CHECK(chain_to_string({3, 5, 2}) == "[3,5,2]");
        CHECK(parse_chain("[3, 5,2]") == Chain{3, 5, 2});
    }

    TEST_CASE("round trip and rational value agree on a grid")
    {
        for (std::int64_t delta = 2; delta <= 150; ++delta)
            for (std::int64_t omega = 1; omega < delta; ++omega) {
                if (std::gcd(delta, omega) != 1) continue;
                auto c = hj_expand(delta, omega);
                for (auto e : c) REQUIRE(e >= 2);
                auto v = evaluate(c);
                REQUIRE(v.p == delta);
                REQUIRE(v.q == omega);
                REQUIRE(*oracle::value(c) == Rational(delta, omega));
                // Dual chain expands Delta/(Delta - Omega), and is an involution.
                auto d = dual(delta, omega);
                REQUIRE(*oracle::value(d) == Rational(delta, delta - omega));
                REQUIRE(dual(delta, delta - omega) == c);
            }
    }

    TEST_CASE("large values stay exact")
    {
        Int delta("1000000000000000000000000000057");
        Int omega("123456789012345678901234567");
        auto c = hj_expand(delta, omega);
        auto v = evaluate(c);
        CHECK(v.p == delta);
        CHECK(v.q == omega);
    }

    TEST_CASE("invalid input is rejected")
    {
        CHECK_THROWS_AS(hj_expand(10, 4), ValidationError);
        CHECK_THROWS_AS(hj_expand(1, 0), ValidationError);
        CHECK_THROWS_AS(hj_expand(5, 5), ValidationError);
        CHECK_THROWS_AS(evaluate(Chain{}), ValidationError);
        CHECK_THROWS_AS(parse_chain("[3,x]"), ValidationError);
    }

    TEST_CASE("zero test matches the blow-up closure")
    {
        auto zeros = oracle::zero_chains_by_blowup(6);
        std::size_t hits = 0;
        // Every chain with entries in 1..6 and length 2..6.
        for (std::size_t len = 2; len <= 6; ++len) {
            Chain c(len, 1);
            while (true) {
                bool want = zeros.count(c) > 0;
                REQUIRE(is_zero_chain(c) == want);
                REQUIRE(reduces_to_zero(c) == want);
                hits += want;
                std::size_t i = 0;
                while (i < len && c[i] == 6) c[i++] = 1;
                if (i == len) break;
                ++c[i];
            }
        }
        CHECK(hits == 1 + 2 + 5 + 14 + 42);
    }

    TEST_CASE("random zero chains contract to [0]")
    {
        std::mt19937 rng(20240611);
        for (int trial = 0; trial < 500; ++trial) {
            auto z = oracle::random_zero_chain(2 + static_cast<std::size_t>(trial % 25), rng);
            REQUIRE(is_zero_chain(z));
            REQUIRE(blow_down(GenChain{z}).terminal());
            // Bumping any entry leaves the zero locus.
            auto w = z;
            w[static_cast<std::size_t>(trial) % w.size()] += 1;
            REQUIRE_FALSE(is_zero_chain(w));
        }
    }

    TEST_CASE("blow_down rejects interior zeros")
    {
        CHECK_THROWS_AS(blow_down(GenChain{{1, 1, 2, 1, 1}}), StructuralError);
        CHECK_FALSE(reduces_to_zero({1, 1, 2, 1, 1}));
        CHECK(blow_down(GenChain{{2, 1, 2}}).terminal());
    }
}
