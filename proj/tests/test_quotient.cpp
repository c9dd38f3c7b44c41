#include "tsurf/quotient.hpp"

#include <doctest.h>

#include <numeric>

using namespace tsurf;

namespace {

const QuotientOutcome& find_case(const std::vector<QuotientOutcome>& v, char tag, std::size_t skip = 0)
{
    for (const auto& o : v)
        if (o.case_tag == tag && skip-- == 0) return o;
    throw std::runtime_error("case not found");
}

}  // namespace

TEST_SUITE("quotient")
{
    TEST_CASE("1/49(1,6)")
    {
        auto v = quotient_candidates(49, 6);
        CHECK_FALSE(find_case(v, 'a').applicable);
        CHECK(find_case(v, 'b', 0).raw == Fraction{98, 6});
        CHECK_FALSE(find_case(v, 'b', 0).normalized.has_value());
        CHECK(find_case(v, 'b', 1).normalized == Fraction{98, 55});
        CHECK(find_case(v, 'b', 1).t_type == TType{2, 7, 4});
        CHECK(find_case(v, 'c').normalized == Fraction{49, 12});
        CHECK_FALSE(find_case(v, 'd').applicable);
        CHECK_FALSE(find_case(v, 'e').applicable);
    }

    TEST_CASE("small cases")
    {
        auto v = quotient_candidates(9, 2);
        CHECK(find_case(v, 'b', 1).t_type == TType{2, 3, 2});
        CHECK(find_case(v, 'b', 1).normalized == Fraction{18, 11});
        auto w = quotient_candidates(16, 3);
        CHECK(find_case(w, 'd').normalized == Fraction{8, 3});
        CHECK(find_case(w, 'd').t_type == TType{2, 2, 1});
        CHECK(find_case(quotient_candidates(5, 4), 'a').smooth);
        CHECK_THROWS_AS(quotient_candidates(6, 4), ValidationError);
    }

    TEST_CASE("normalized outcomes are valid and consistently typed")
    {
        for (std::int64_t m = 2; m <= 200; ++m)
            for (std::int64_t q = 1; q < m; ++q) {
                if (std::gcd(m, q) != 1) continue;
                auto v = quotient_candidates(m, q);
                REQUIRE(v.size() == 6);
                for (const auto& o : v) {
                    if (!o.applicable || !o.normalized || o.smooth) continue;
                    const auto& f = *o.normalized;
                    REQUIRE(f.omega > 0);
                    REQUIRE(f.omega < f.delta);
                    REQUIRE(gcd(f.delta, f.omega) == 1);
                    auto t = t_recognize(hj_expand(f.delta, f.omega));
                    REQUIRE(t == o.t_type);
                    REQUIRE(o.du_val == (f.omega == f.delta - 1));
                }
                // (e) needs an involution: q^2 = 1 mod m and q != m - 1.
                REQUIRE(find_case(v, 'e').applicable == ((q * q) % m == 1 && q != m - 1));
                REQUIRE(find_case(v, 'd').applicable == (m % 2 == 0));
            }
    }

    TEST_CASE("Wahl quotients are neither Wahl nor smooth")
    {
        auto rep = wahl_quotient_scan(50);
        CHECK(rep.checked == 773);
        CHECK(rep.violations.empty());
    }

    TEST_CASE("Du Val quotients: only the case (e) family deviates")
    {
        auto rep = duval_quotient_scan(500);
        CHECK(rep.checked == 729);
        CHECK(rep.violations.size() == 124);
        for (const auto& v : rep.violations) {
            CHECK(v.source.n == 2);
            CHECK(v.source.a == 1);
            CHECK(v.source.d >= 2);
            CHECK(v.case_tag == 'e');
            CHECK(v.result == Fraction{2, 1});
        }
    }

    TEST_CASE("Lee-Park quotients")
    {
        CHECK(lee_park_quotient(3).expected == Fraction{18, 11});
        CHECK(lee_park_quotient(4).expected == Fraction{8, 3});
        for (std::int64_t n = 2; n <= 60; ++n) {
            auto lp = lee_park_quotient(n);
            CHECK(lp.matches);
            CHECK(lp.expected_case == (n % 2 ? 'b' : 'd'));
            REQUIRE(lp.t_results.size() == 1);
            CHECK(lp.t_results[0] == lp.expected);
        }
    }
}
