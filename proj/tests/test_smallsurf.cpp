#include "tsurf/smallsurf.hpp"

#include <doctest.h>

#include <map>
#include <numeric>

using namespace tsurf;

namespace {

// T-type read off the fraction 1/(d n^2)(1, d n a - 1) directly.
std::optional<TType> type_from_fraction(const Chain& c)
{
    auto v = evaluate(c);
    auto delta = static_cast<std::int64_t>(v.p), omega = static_cast<std::int64_t>(v.q);
    for (std::int64_t n = 2; n * n <= delta; ++n) {
        if (delta % (n * n)) continue;
        std::int64_t d = delta / (n * n);
        if ((omega + 1) % (d * n)) continue;
        std::int64_t a = (omega + 1) / (d * n);
        if (a > 0 && a < n && std::gcd(a, n) == 1) return TType{d, n, a};
    }
    return std::nullopt;
}

using Multiset = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

void add(Multiset& m, const Chain& c, std::int64_t copies)
{
    if (copies == 0) return;
    auto t = type_from_fraction(c);
    REQUIRE(t.has_value());
    m[{t->n, std::min(t->a, t->n - t->a)}] += t->d * copies;
}

BlockParams general(const BlockInfo& info, std::int64_t r)
{
    BlockParams p;
    p.r = r;
    if (info.fiber_slots >= 1) p.f = FiberType::In(r + 12);
    if (info.fiber_slots >= 2) p.f2 = FiberType::In(r + 12);
    return p;
}

}  // namespace

TEST_SUITE("smallsurf")
{
    TEST_CASE("fibers")
    {
        CHECK(parse_fiber("I_3") == FiberType::In(3));
        CHECK(parse_fiber("III").kind == FiberType::III);
        CHECK(to_string(FiberType::In(3)) == "I3");
        CHECK(FiberType::In(5).euler() == 5);
        CHECK(parse_fiber("IV").euler() == 4);
        CHECK_THROWS_AS(parse_fiber("I0*"), ValidationError);
    }

    TEST_CASE("catalog blocks: chains, blow-ups and section discrepancy")
    {
        for (const auto& info : block_catalog()) {
            if (info.id == "FIB") continue;
            std::vector<std::int64_t> rs;
            if (info.fixed_r)
                rs = {*info.fixed_r};
            else
                rs = {info.min_r, info.min_r + 1, info.min_r + 4};
            for (auto r : rs) {
                INFO(info.id << " r=" << r);
                auto b = instantiate_block(info.id, general(info, r));
                std::int64_t sum = 0;
                for (const auto& c : b.chains) {
                    auto t = type_from_fraction(c);
                    REQUIRE(t.has_value());
                    REQUIRE(t_recognize(c) == t);
                    sum += static_cast<std::int64_t>(c.size()) - t->d + 1;
                }
                CHECK(b.local_k2 == sum - b.blowups);
                CHECK(b.blowups == info.general_blowups(r));
                auto [ci, pi] = info.section_position(r);
                REQUIRE(b.section_discrepancy.has_value());
                CHECK(discrepancies(b.chains.at(ci)).deltas.at(pi) == *b.section_discrepancy);
            }
        }
    }

    TEST_CASE("FIB block")
    {
        auto b = instantiate_block("FIB", {std::nullopt, FiberType::In(2), std::nullopt});
        CHECK(b.chains == std::vector<Chain>{{2, 5}, {4}});
        CHECK(b.local_k2 == -1);
        auto b5 = instantiate_block("FIB", {std::nullopt, FiberType::In(5), std::nullopt});
        CHECK(b5.chains == std::vector<Chain>{{2, 5}, {3, 2, 2, 3}});
        CHECK(b5.local_k2 == -1);
    }

    TEST_CASE("k2_global")
    {
        // Literal arithmetic of the one-chain form.
        CHECK(k2_global(0, 4, {{5, 1}}) == 1);
        SmallSurfaceConfig cfg;
        cfg.pg = 3;
        cfg.main = instantiate_block("S0F", {6, std::nullopt, std::nullopt});
        cfg.fibs = {instantiate_block("FIB", {std::nullopt, FiberType::In(2), std::nullopt})};
        auto rep = assemble(cfg);
        CHECK(rep.chains == std::vector<Chain>{{6, 2, 2}, {2, 5}, {4}});
        CHECK(rep.blowups == 4);
        CHECK(k2_global(0, 4, {{3, 1}, {2, 1}, {1, 1}}) == 2);
        CHECK(rep.K2 == 2);
        CHECK(rep.ok());
    }

    TEST_CASE("assembly validation")
    {
        SmallSurfaceConfig cfg;
        cfg.pg = 3;
        cfg.main = instantiate_block("S0F", {5, std::nullopt, std::nullopt});
        cfg.fibs = {instantiate_block("FIB", {std::nullopt, FiberType::In(1), std::nullopt})};
        CHECK_THROWS_AS(assemble(cfg), ValidationError);
        CHECK_THROWS_AS(instantiate_block("S9F", {}), ValidationError);
        CHECK_THROWS_AS(lee_park(2), ValidationError);
    }

    TEST_CASE("Lee-Park orientation")
    {
        for (std::int64_t pg = 3; pg <= 15; ++pg) {
            auto rep = lee_park(pg);
            REQUIRE(rep.singularities.size() == 2);
            auto t = rep.singularities[0];
            CHECK(t == TType{1, pg - 1, 1});
            CHECK(t.reversed() == TType{1, pg - 1, pg - 2});
            CHECK(t_expand(t.reversed()) == Chain(rep.chains[0].rbegin(), rep.chains[0].rend()));
            CHECK(rep.K2 == 2 * pg - 4);
        }
    }

    TEST_CASE("Horikawa tables against an independent multiset oracle")
    {
        for (std::int64_t pg = 3; pg <= 12; ++pg) {
            auto fams = horikawa_families(pg);
            CHECK(fams.size() == (pg == 3 ? 4u : pg == 4 ? 10u : 9u));
            for (const auto& h : fams) {
                INFO(h.label);
                if (h.stated_bound) CHECK(h.computed_bound == h.stated_bound);
                if (!h.instantiate) continue;
                std::vector<std::int64_t> params(h.param_names.size(), 0);
                auto bound = h.computed_bound.value_or(0);
                for (std::size_t k = 0; k <= params.size(); ++k) {
                    // All zeros, then each parameter alone at its bound.
                    std::fill(params.begin(), params.end(), 0);
                    if (k < params.size()) params[k] = bound;
                    auto rep = realize(h, params);
                    CHECK(rep.K2 == 2 * pg - 4);
                    CHECK(rep.ok());
                    Multiset table, built;
                    for (const auto& item : h.table_chains(params)) add(table, item.chain, item.count);
                    for (const auto& c : rep.chains) add(built, c, 1);
                    CHECK(table == built);
                }
                // One past the bound breaks the Euler budget.
                if (!params.empty()) {
                    std::fill(params.begin(), params.end(), 0);
                    params[0] = bound + 1;
                    CHECK_FALSE(realize(h, params).euler_ok);
                }
            }
        }
    }

    TEST_CASE("geography")
    {
        for (std::int64_t pg = 3; pg <= 11; ++pg) {
            auto g = geography(pg);
            CHECK(g.min_k2 == pg - 2);
            CHECK(g.max_k2 == (14 * pg + 11) / 3);
            CHECK(g.all_realizable);
            CHECK(g.s2f7_attains_rational_max == (pg % 3 == 2));
            for (const auto& [k2, ws] : g.witnesses)
                for (const auto& w : ws) {
                    auto cfg = cheapest_config(pg, w.block, w.s);
                    REQUIRE(cfg.has_value());
                    auto rep = assemble(*cfg);
                    CHECK(rep.K2 == k2);
                    CHECK(rep.ok());
                }
        }
    }

    TEST_CASE("invariants")
    {
        auto inv = blowdown_invariants(3, 1);
        CHECK(inv.b_plus == 7);
        CHECK(inv.b_minus == 37);
        CHECK(inv.homeo == "7CP² # 37CP̄²");
        for (std::int64_t pg = 2; pg <= 20; ++pg)
            for (std::int64_t n = 0; n <= 3 * pg; ++n) {
                auto x = blowdown_invariants(pg, n);
                CHECK(12 * (pg + 1) == x.K2 + x.chi_top);
                CHECK(x.b_plus + x.b_minus + 2 == x.chi_top);
                CHECK(3 * x.sigma == x.K2 - 2 * x.chi_top);
            }
    }

    TEST_CASE("bounds")
    {
        CHECK(bmy_bound(2, {{1, 3, 2}}) == Rational(79, 3));
        CHECK(bmy_bound(3, {}) == 36);
        CHECK(k2_multisection(2, 0, 1, 0, 0, 0, 3) == 4);
        CHECK_THROWS_AS(k2_multisection(2, 5, 1, 1, 0, 0, 3), ValidationError);
    }
}
