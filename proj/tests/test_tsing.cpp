#include "tsurf/tsing.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

using namespace tsurf;

namespace {

// Solves -e_i x_i + x_{i-1} + x_{i+1} = e_i - 2 by plain Gaussian elimination.
std::vector<Rational> dense_discrepancies(const Chain& c)
{
    const std::size_t r = c.size();
    std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1, 0));
    for (std::size_t i = 0; i < r; ++i) {
        m[i][i] = -c[i];
        if (i > 0) m[i][i - 1] = 1;
        if (i + 1 < r) m[i][i + 1] = 1;
        m[i][r] = c[i] - 2;
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        while (m[piv][col] == 0) ++piv;
        std::swap(m[piv], m[col]);
        for (std::size_t row = 0; row < r; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational k = m[row][col] / m[col][col];
            for (std::size_t j = col; j <= r; ++j) m[row][j] -= k * m[col][j];
        }
    }
    std::vector<Rational> x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = m[i][r] / m[i][i];
    return x;
}

// T-chains up to max_len: seeds [4], [3,3], [3,2,3], ... closed under the two children.
std::set<Chain> t_chain_closure(std::size_t max_len)
{
    std::set<Chain> all;
    std::vector<Chain> work;
    work.push_back({4});
    for (std::size_t d = 2; d <= max_len; ++d) {
        Chain s(d, 2);
        s.front() = s.back() = 3;
        work.push_back(s);
    }
    while (!work.empty()) {
        auto c = work.back();
        work.pop_back();
        if (c.size() > max_len || !all.insert(c).second) continue;
        Chain l{2};
        l.insert(l.end(), c.begin(), c.end());
        l.back() += 1;
        Chain r = c;
        r.front() += 1;
        r.push_back(2);
        work.push_back(l);
        work.push_back(r);
    }
    return all;
}

}  // namespace

TEST_SUITE("tsing")
{
    TEST_CASE("expand and recognize examples")
    {
        CHECK(t_expand({1, 2, 1}) == Chain{4});
        CHECK(t_expand({1, 3, 1}) == Chain{5, 2});
        CHECK(t_expand({2, 2, 1}) == Chain{3, 3});
        CHECK(*t_recognize({2, 4, 3, 3}) == TType{2, 5, 3});
        CHECK(to_string(TType{2, 5, 3}) == "T(2,5,3)");
        CHECK(TType{1, 5, 1}.reversed() == TType{1, 5, 4});
        CHECK(!t_recognize({2, 2}).has_value());
        CHECK_THROWS_AS(make_ttype(1, 4, 2), ValidationError);
        CHECK_THROWS_AS(t_children({2, 2}), ValidationError);
    }

    TEST_CASE("recognition agrees with the children closure")
    {
        const std::size_t max_len = 6;
        auto closure = t_chain_closure(max_len);
        // Every chain with entries 2..9 and length <= 6.
        std::size_t found = 0;
        for (std::size_t len = 1; len <= max_len; ++len) {
            Chain c(len, 2);
            while (true) {
                auto t = t_recognize(c);
                bool want = closure.count(c) > 0;
                REQUIRE(t.has_value() == want);
                if (t) {
                    ++found;
                    auto f = evaluate(c);
                    REQUIRE(t->fraction() == Fraction{f.p, f.q});
                    REQUIRE(t_expand(*t) == c);
                }
                std::size_t i = 0;
                while (i < len && c[i] == 9) c[i++] = 2;
                if (i == len) break;
                ++c[i];
            }
        }
        std::size_t in_range = 0;
        for (const auto& c : closure)
            if (*std::max_element(c.begin(), c.end()) <= 9) ++in_range;
        CHECK(found == in_range);
    }

    TEST_CASE("children of a T-chain are T-chains of the same d")
    {
        for (std::int64_t n = 2; n <= 12; ++n)
            for (std::int64_t a = 1; a < n; ++a) {
                if (std::gcd(n, a) != 1) continue;
                for (std::int64_t d = 1; d <= 4; ++d) {
                    auto [l, r] = t_children(t_expand({d, n, a}));
                    REQUIRE(t_recognize(l)->d == d);
                    REQUIRE(t_recognize(r)->d == d);
                    auto nl = t_recognize(l)->n, nr = t_recognize(r)->n;
                    REQUIRE(std::set<std::int64_t>{nl, nr} == std::set<std::int64_t>{n + a, 2 * n - a});
                }
            }
    }

    TEST_CASE("discrepancies: solve, recursion and oracle agree")
    {
        for (std::int64_t n = 2; n <= 13; ++n)
            for (std::int64_t a = 1; a < n; ++a) {
                if (std::gcd(n, a) != 1) continue;
                for (std::int64_t d = 1; d * n * n <= 600; ++d) {
                    auto c = t_expand({d, n, a});
                    auto dv = discrepancies(c);
                    REQUIRE(dv.deltas == dense_discrepancies(c));
                    REQUIRE(discrepancies_recursive(c).deltas == dv.deltas);
                    REQUIRE(dv.deltas.front() + dv.deltas.back() == -1);
                    auto lo = *std::min_element(dv.deltas.begin(), dv.deltas.end());
                    REQUIRE(lo == Rational(-(n - 1), n));
                    for (auto i : center(c)) REQUIRE(dv.deltas[i - 1] == lo);
                    REQUIRE(dv.t_first.has_value());
                    REQUIRE(Rational(*dv.t_first) == n * (1 + dv.deltas.front()));
                }
            }
    }

    TEST_CASE("discrepancies of a plain chain")
    {
        auto dv = discrepancies({2, 5});
        CHECK(dv.deltas == std::vector<Rational>{Rational(-1, 3), Rational(-2, 3)});
        CHECK(center({2, 5}) == std::vector<std::size_t>{2});
        CHECK(dense_discrepancies({2, 3, 2}) == discrepancies({2, 3, 2}).deltas);
        CHECK_FALSE(discrepancies({2, 3, 2}).t_first.has_value());
    }

    TEST_CASE("unwrap replays to the chain")
    {
        for (const auto& c : t_chain_closure(7)) {
            auto u = t_unwrap(c);
            REQUIRE(u.has_value());
            Chain x;
            if (u->d == 1)
                x = {4};
            else {
                x = Chain(static_cast<std::size_t>(u->d), 2);
                x.front() = x.back() = 3;
            }
            for (char op : u->ops) {
                auto [l, r] = t_children(x);
                x = op == 'L' ? l : r;
            }
            REQUIRE(x == c);
        }
    }

    TEST_CASE("enumeration is sorted and complete")
    {
        auto got = enumerate_t_chains(6, 10'000);
        std::set<Chain> want;
        for (const auto& c : t_chain_closure(6)) want.insert(c);
        std::set<Chain> seen;
        for (std::size_t i = 0; i < got.size(); ++i) {
            if (i) REQUIRE(got[i - 1].second < got[i].second);
            seen.insert(got[i].second);
            REQUIRE(t_expand(got[i].first) == got[i].second);
        }
        CHECK(seen == want);
        for (const auto& [t, c] : enumerate_t_chains(8, 500, 2)) CHECK(t.d == 2);
    }
}
