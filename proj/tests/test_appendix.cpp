#include "tsurf/appendix.hpp"
#include "tsurf/zcf.hpp"

#include <doctest.h>

#include <set>

using namespace tsurf;

TEST_SUITE("appendix")
{
    TEST_CASE("catalog")
    {
        std::set<std::string> ids;
        for (const auto& f : appendix_families()) ids.insert(f.id);
        CHECK(ids.size() == 11);
        CHECK(ids.count("typeII") == 1);
        CHECK_THROWS_AS(appendix_family("nope"), ValidationError);
    }

    TEST_CASE("every grid point matches its golden rows")
    {
        std::size_t points = 0;
        for (const auto& fam : appendix_families()) {
            auto grid = grid_points(fam);
            REQUIRE_FALSE(grid.empty());
            for (const auto& p : grid) {
                ++points;
                auto rep = appendix_check(fam.id, p);
                INFO(fam.id);
                REQUIRE(rep.missing.empty());
                REQUIRE(rep.extra.empty());
                REQUIRE(rep.zcf_mismatch.empty());
                // Each computed resolution belongs to the family chain's K-set.
                auto c = fam.chain(p);
                auto v = evaluate(c);
                auto ks = fam.cross_only ? k_cross_set(v.p, v.q) : k_set(v.p, v.q);
                std::set<Chain> kset(ks.begin(), ks.end());
                for (const auto& [z, text] : rep.computed) REQUIRE(kset.count(z) == 1);
            }
        }
        CHECK(points == 3263);
    }

    TEST_CASE("typeII rows at a = 4")
    {
        FamilyParams p;
        p.a = 4;
        auto rep = appendix_check("typeII", p);
        std::set<std::string> texts;
        for (const auto& [z, t] : rep.computed) texts.insert(t);
        CHECK(texts == std::set<std::string>{"(3)-(4)-A_1", "(3)-[(2,1)]-(2)", "[(2,1)]-(1)-[(3,1)]"});
    }

    TEST_CASE("notation parsing")
    {
        using K = NotationToken::Kind;
        auto [nodes, links] = parse_notation({{K::T, 2, 2, 1, 0}, {K::Link, 1, 2, 1, 1}, {K::T, 1, 3, 1, 0}});
        REQUIRE(nodes.size() == 2);
        CHECK(nodes[0] == PNode{2, 2, 1});
        CHECK(links == std::vector<std::int64_t>{1});
        CHECK(render_nodes(nodes, links) == "[2(2,1)]-(1)-[(3,1)]");
    }

    TEST_CASE("params map round trip")
    {
        auto m = std::map<std::string, std::int64_t>{{"r", 4}, {"a", 5}};
        auto p = FamilyParams::from_map(m);
        CHECK(p.as_map({"r", "a"}) == m);
    }
}
