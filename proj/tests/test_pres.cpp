#include "tsurf/pres.hpp"
#include "tsurf/zcf.hpp"

#include <doctest.h>

#include <numeric>

using namespace tsurf;

TEST_SUITE("pres")
{
    TEST_CASE("examples")
    {
        CHECK(render(compute_p_resolution(19, 7, {1, 2, 2, 1})) == "(3)-(4)-A_1");
        CHECK(render(compute_p_resolution(19, 7, {2, 2, 1, 3})) == "[(2,1)]-(1)-[(3,1)]");
        auto w = compute_p_resolution(4, 1, {2, 1, 2});
        REQUIRE(w.nodes.size() == 1);
        CHECK(w.nodes[0] == PNode{1, 2, 1});
        CHECK(w.links.empty());
        CHECK_THROWS_AS(compute_p_resolution(19, 7, {1, 1, 2, 2}), ValidationError);
    }

    TEST_CASE("every enumerated resolution is sound")
    {
        for (std::int64_t delta = 2; delta <= 40; ++delta)
            for (std::int64_t omega = 1; omega < delta; ++omega) {
                if (std::gcd(delta, omega) != 1) continue;
                auto all = enumerate_p_resolutions(delta, omega, false);
                REQUIRE(all.size() == k_set(delta, omega).size());
                for (const auto& p : all) {
                    auto r = verify_p_resolution(p);
                    REQUIRE(r.ok());
                    REQUIRE(p.zcf.size() == dual(delta, omega).size());
                    for (const auto& k : r.k_dot_gamma) REQUIRE(k > 0);
                    // Nodes sit at the positive deficits, one per deficit.
                    std::size_t positive = 0;
                    for (auto d : p.d_deficits) positive += d > 0;
                    REQUIRE(p.nodes.size() == std::max<std::size_t>(positive, 1));
                }
                auto cross = enumerate_p_resolutions(delta, omega, true);
                REQUIRE(cross.size() == k_cross_set(delta, omega).size());
            }
    }

    TEST_CASE("tampering is detected")
    {
        auto p = compute_p_resolution(19, 7, {2, 2, 1, 3});
        REQUIRE(verify_p_resolution(p).ok());
        auto bad_link = p;
        bad_link.links = {2};
        CHECK_FALSE(verify_p_resolution(bad_link).ok());
        auto bad_node = p;
        bad_node.nodes[0].a = 2;
        CHECK_FALSE(verify_p_resolution(bad_node).node_validity);
        auto bad_zcf = p;
        bad_zcf.zcf = {1, 3, 1, 2};
        CHECK_FALSE(verify_p_resolution(bad_zcf).zcf_roundtrip);
    }

    TEST_CASE("node chains")
    {
        CHECK(PNode{1, 1, 1}.chain().empty());
        CHECK(PNode{3, 1, 1}.chain() == Chain{2, 2});
        CHECK(PNode{2, 2, 1}.chain() == Chain{3, 3});
        CHECK(PNode{3, 1, 1}.is_du_val());
    }
}
