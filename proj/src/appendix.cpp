#include "tsurf/appendix.hpp"

#include "tsurf/zcf.hpp"

#include <algorithm>

namespace tsurf {

namespace {

using FP = FamilyParams;
using Toks = std::vector<NotationToken>;

Chain two(std::int64_t k) { return Chain(static_cast<std::size_t>(std::max<std::int64_t>(k, 0)), 2); }

Chain cat(std::initializer_list<Chain> parts)
{
    Chain out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

NotationToken T(std::int64_t n, std::int64_t a, std::int64_t d = 1)
{
    return {NotationToken::T, d, n, a, 0};
}
NotationToken A(std::int64_t x) { return {NotationToken::A, 1, 1, 1, x}; }
NotationToken L(std::int64_t c) { return {NotationToken::Link, 1, 1, 1, c}; }

GoldenRow row(std::string label, std::function<bool(const FP&)> applies, std::function<Chain(const FP&)> zcf,
              std::function<Toks(const FP&)> toks)
{
    return {std::move(label), std::move(applies), std::move(zcf), std::move(toks)};
}

const auto always = [](const FP&) { return true; };

std::vector<AppendixFamily> build_catalog()
{
    std::vector<AppendixFamily> fams;

    fams.push_back({"2r2", {"r", "a", "b"},
        [](const FP& p) { return p.r >= 3 && p.a >= 0 && p.b >= 0; },
        [](const FP& p) { return cat({two(p.a), {p.r}, two(p.b)}); }, false,
        {
            row("a", always,
                [](const FP& p) { return cat({{1}, two(p.r - 3), {1}}); },
                [](const FP& p) { return Toks{A(p.a), L(p.r), A(p.b)}; }),
            row("b", [](const FP& p) { return p.a >= p.r - 4 && p.r >= 4; },
                [](const FP& p) { return cat({{p.r - 2, 1}, two(p.r - 3)}); },
                [](const FP& p) { return Toks{A(p.a - p.r + 4), T(p.r - 2, p.r - 3), A(p.b)}; }),
            row("c", [](const FP& p) { return p.b >= p.r - 4 && p.r >= 4; },
                [](const FP& p) { return cat({two(p.r - 3), {1, p.r - 2}}); },
                [](const FP& p) { return Toks{A(p.a), T(p.r - 2, 1), A(p.b - p.r + 4)}; }),
        },
        {{3, 8}, {0, 6}, {0, 6}}});

    fams.push_back({"2ra2", {"r", "a", "b", "c"},
        [](const FP& p) { return p.r >= 3 && p.a >= 3 && p.b >= 0 && p.c >= 0; },
        [](const FP& p) { return cat({two(p.b), {p.r, p.a}, two(p.c)}); }, false,
        {
            row("a", always,
                [](const FP& p) { return cat({{1}, two(p.r + p.a - 5), {1}}); },
                [](const FP& p) { return Toks{A(p.b), L(p.r), L(p.a), A(p.c)}; }),
            row("b", [](const FP& p) { return p.a >= 4 && p.c >= p.a - 4; },
                [](const FP& p) { return cat({{1}, two(p.r - 3), {3}, two(p.a - 4), {1, p.a - 2}}); },
                [](const FP& p) { return Toks{A(p.b), L(p.r), T(p.a - 2, 1), A(p.c - p.a + 4)}; }),
            row("c", [](const FP& p) { return p.r >= 4 && p.b >= p.r - 4; },
                [](const FP& p) { return cat({{p.r - 2, 1}, two(p.r - 4), {3}, two(p.a - 3), {1}}); },
                [](const FP& p) { return Toks{A(p.b - p.r + 4), T(p.r - 2, p.r - 3), L(p.a), A(p.c)}; }),
            row("d", [](const FP& p) { return p.b >= p.r + p.a - 6; },
                [](const FP& p) { return cat({{p.r + p.a - 4, 1}, two(p.r + p.a - 5)}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.r - p.a + 6), T(p.r + p.a - 4, p.r + p.a - 5), L(1), T(p.a - 1, p.a - 2),
                                A(p.c)};
                }),
            row("e", [](const FP& p) { return p.c >= p.r + p.a - 6; },
                [](const FP& p) { return cat({two(p.r + p.a - 5), {1, p.r + p.a - 4}}); },
                [](const FP& p) {
                    return Toks{A(p.b), T(p.r - 1, 1), L(1), T(p.r + p.a - 4, 1), A(p.c - p.r - p.a + 6)};
                }),
            row("f", [](const FP& p) { return p.r >= 4 && p.a >= 4 && p.b >= p.r - 3 && p.c >= p.a - 3; },
                [](const FP& p) { return cat({{p.r - 1, 1}, two(p.r - 4), {3}, two(p.a - 4), {1, p.a - 1}}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.r + 3), T(p.r - 1, p.r - 2), L(1), T(p.a - 1, 1), A(p.c - p.a + 3)};
                }),
            row("g", [](const FP& p) { return p.r == 5 && p.b >= p.a - 2; },
                [](const FP& p) { return cat({{p.a, 2, 1, 3}, two(p.a - 2)}); },
                [](const FP& p) { return Toks{A(p.b - p.a + 2), T(2 * p.a - 1, 2 * p.a - 3), A(p.c)}; }),
            row("h", [](const FP& p) { return p.a == 5 && p.c >= p.r - 2; },
                [](const FP& p) { return cat({two(p.r - 2), {3, 1, 2, p.r}}); },
                [](const FP& p) { return Toks{A(p.b), T(2 * p.r - 1, 2), A(p.c - p.r + 2)}; }),
        },
        {{3, 7}, {3, 7}, {0, 6}, {0, 6}}});

    fams.push_back({"2ra232", {"r", "a", "b", "n"},
        [](const FP& p) { return p.r >= 3 && p.a >= 3 && p.b >= 0 && p.n >= 2; },
        [](const FP& p) { return cat({two(p.b), {p.r, p.a}, two(p.n - 2), {3}, two(p.a - 3)}); }, false,
        {
            row("a", always,
                [](const FP& p) { return cat({{1}, two(p.r + p.a - 4), {1}}); },
                [](const FP& p) { return Toks{A(p.b), L(p.r), L(p.a), A(p.n - 2), L(3), A(p.a - 3)}; }),
            row("b", [](const FP& p) { return p.a >= 4 && p.n >= p.a - 2; },
                [](const FP& p) { return cat({{1}, two(p.r - 3), {3}, two(p.a - 4), {1, p.a - 1, 1}}); },
                [](const FP& p) {
                    return Toks{A(p.b), L(p.r), T(p.a - 2, 1), A(p.n - p.a + 2), L(3), A(p.a - 3)};
                }),
            row("c", always,
                [](const FP& p) { return cat({{1}, two(p.r - 3), {3}, two(p.a - 3), {1, p.a - 1}}); },
                [](const FP& p) { return Toks{A(p.b), L(p.r), T(p.a - 1, 1, p.n)}; }),
            row("d", [](const FP& p) { return p.r >= 4 && p.b >= p.r - 4; },
                [](const FP& p) { return cat({{p.r - 2, 1}, two(p.r - 4), {3}, two(p.a - 2), {1}}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.r + 4), T(p.r - 2, p.r - 3), L(p.a), A(p.n - 2), L(3), A(p.a - 3)};
                }),
            row("e", [](const FP& p) { return p.b >= p.r + p.a - 5; },
                [](const FP& p) { return cat({{p.r + p.a - 3, 1}, two(p.r + p.a - 4)}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.r - p.a + 5), T(p.r + p.a - 3, p.r + p.a - 4), L(1), T(p.a, p.a - 1), L(1),
                                T(2, 1, p.n - 1), A(p.a - 3)};
                }),
            row("f", [](const FP& p) { return p.b >= p.r + p.a - 6; },
                [](const FP& p) { return cat({{p.r + p.a - 4, 1}, two(p.r + p.a - 6), {3, 1}}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.r - p.a + 6), T(p.r + p.a - 4, p.r + p.a - 5), L(1), T(p.a - 1, p.a - 2),
                                A(p.n - 2), L(3), A(p.a - 3)};
                }),
            row("g", [](const FP& p) { return p.r >= 4 && p.a >= 4 && p.b >= p.r - 2 && p.n >= p.a - 2; },
                [](const FP& p) { return cat({{p.r, 1}, two(p.r - 4), {3}, two(p.a - 4), {1, p.a - 1, 2}}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.r + 2), T(p.r, p.r - 1), L(1), T(2 * p.a - 3, p.a - 1), L(1),
                                T(2, 1, p.n - p.a + 2), A(p.a - 3)};
                }),
            row("h", [](const FP& p) { return p.r >= 4 && p.a >= 4 && p.b >= p.r - 3 && p.n >= p.a - 1; },
                [](const FP& p) { return cat({{p.r - 1, 1}, two(p.r - 4), {3}, two(p.a - 4), {1, p.a, 1}}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.r + 3), T(p.r - 1, p.r - 2), L(1), T(p.a - 1, 1), A(p.n - p.a + 1), L(3),
                                A(p.a - 3)};
                }),
            row("i", [](const FP& p) { return p.r == 5 && p.b >= p.a - 1; },
                [](const FP& p) { return cat({{p.a + 1, 2, 1, 3}, two(p.a - 1)}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.a + 1), T(2 * p.a + 1, 2 * p.a - 1), L(1), T(2, 1, p.n - 1), A(p.a - 3)};
                }),
            row("j", [](const FP& p) { return p.r == 5 && p.b >= p.a - 2; },
                [](const FP& p) { return cat({{p.a, 2, 1, 3}, two(p.a - 3), {3, 1}}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.a + 2), T(2 * p.a - 1, 2 * p.a - 3), A(p.n - 2), L(3), A(p.a - 3)};
                }),
            row("k", [](const FP& p) { return p.a == 5 && p.b >= 1 && p.n >= p.r - 1; },
                [](const FP& p) { return cat({{3}, two(p.r - 3), {3, 1, 2, p.r, 2}}); },
                [](const FP& p) {
                    return Toks{A(p.b - 1), T(4 * (p.r - 1), 2 * p.r - 1), L(1), T(2, 1, p.n - p.r + 1), L(2), A(1)};
                }),
            row("l", [](const FP& p) { return p.a == 5 && p.n >= p.r; },
                [](const FP& p) { return cat({two(p.r - 2), {3, 1, 2, p.r + 1, 1}}); },
                [](const FP& p) { return Toks{A(p.b), T(2 * p.r - 1, 2), A(p.n - p.r), L(3), A(p.a - 3)}; }),
            row("m", [](const FP& p) { return p.b >= 1 && p.n >= p.r + p.a - 5; },
                [](const FP& p) { return cat({{3}, two(p.r + p.a - 6), {1, p.r + p.a - 4, 2}}); },
                [](const FP& p) {
                    return Toks{A(p.b - 1), T(2 * p.r - 3, p.r - 1), L(1), T(2 * p.r + 2 * p.a - 9, p.r + p.a - 4),
                                L(1), T(2, 1, p.n - p.r - p.a + 5), A(p.a - 3)};
                }),
            row("n", [](const FP& p) { return p.n >= p.r + p.a - 4; },
                [](const FP& p) { return cat({two(p.r + p.a - 5), {1, p.a + p.r - 3, 1}}); },
                [](const FP& p) {
                    return Toks{A(p.b), T(p.r - 1, 1), L(1), T(p.r + p.a - 4, 1), A(p.n - p.r - p.a + 4), L(3),
                                A(p.a - 3)};
                }),
            row("o", [](const FP& p) { return p.n >= p.a - 3 && p.a >= p.r + 1; },
                [](const FP& p) { return cat({two(p.r - 2), {3}, two(p.a - 4), {1, p.a - 2, p.r}}); },
                [](const FP& p) {
                    return Toks{A(p.b), T(p.r * p.a - 2 * p.r - 1, p.a - 2), L(1), T(p.r, 1, p.n - p.a + 3),
                                A(p.a - p.r - 1)};
                }),
        },
        {{3, 6}, {3, 7}, {0, 6}, {2, 7}}});

    fams.push_back({"2a232", {"a", "b", "n"},
        [](const FP& p) { return p.a >= 4 && p.b >= 0 && p.n >= 2; },
        [](const FP& p) { return cat({two(p.b), {p.a}, two(p.n - 2), {3}, two(p.a - 4)}); }, false,
        {
            row("a", always,
                [](const FP& p) { return cat({{1}, two(p.a - 2), {1}}); },
                [](const FP& p) { return Toks{A(p.b), L(p.a), A(p.n - 2), L(3), A(p.a - 4)}; }),
            row("b", [](const FP& p) { return p.b >= p.a - 3; },
                [](const FP& p) { return cat({{p.a - 1, 1}, two(p.a - 2)}); },
                [](const FP& p) {
                    return Toks{A(p.b - p.a + 3), T(p.a - 1, p.a - 2), L(1), T(2, 1, p.n - 1), A(p.a - 4)};
                }),
            row("c", [](const FP& p) { return p.b >= p.a - 4; },
                [](const FP& p) { return cat({{p.a - 2, 1}, two(p.a - 4), {3, 1}}); },
                [](const FP& p) { return Toks{A(p.b - p.a + 4), T(p.a - 2, p.a - 3), A(p.n - 2), L(3), A(p.a - 4)}; }),
            row("d", [](const FP& p) { return p.b >= 1 && p.n >= p.a - 3; },
                [](const FP& p) { return cat({{3}, two(p.a - 4), {1, p.a - 2, 2}}); },
                [](const FP& p) {
                    return Toks{A(p.b - 1), T(2 * p.a - 5, p.a - 2), L(1), T(2, 1, p.n - p.a + 3), A(p.a - 4)};
                }),
            row("e", [](const FP& p) { return p.n >= p.a - 2; },
                [](const FP& p) { return cat({two(p.a - 3), {1, p.a - 1, 1}}); },
                [](const FP& p) { return Toks{A(p.b), T(p.a - 2, 1), A(p.n - p.a + 2), L(3), A(p.a - 4)}; }),
        },
        {{4, 7}, {0, 6}, {2, 7}}});

    auto a_eq = [](std::int64_t v) { return [v](const FP& p) { return p.a == v; }; };

    fams.push_back({"typeII", {"a"}, [](const FP& p) { return p.a >= 3; },
        [](const FP& p) { return Chain{3, p.a, 2}; }, false,
        {
            row("a", always, [](const FP& p) { return cat({{1}, two(p.a - 2), {1}}); },
                [](const FP& p) { return Toks{L(3), L(p.a), A(1)}; }),
            row("b", a_eq(3), [](const FP&) { return Chain{2, 1, 2}; },
                [](const FP&) { return Toks{T(2, 1, 2), L(2)}; }),
            row("c", a_eq(4), [](const FP&) { return Chain{1, 3, 1, 2}; },
                [](const FP&) { return Toks{L(3), T(2, 1), L(2)}; }),
            row("d", a_eq(4), [](const FP&) { return Chain{2, 2, 1, 3}; },
                [](const FP&) { return Toks{T(2, 1), L(1), T(3, 1)}; }),
            row("e", a_eq(5), [](const FP&) { return Chain{2, 3, 1, 2, 3}; },
                [](const FP&) { return Toks{T(5, 2)}; }),
            row("f", a_eq(5), [](const FP&) { return Chain{1, 3, 2, 1, 3}; },
                [](const FP&) { return Toks{L(3), T(3, 1)}; }),
        },
        {{3, 9}}});

    fams.push_back({"typeIII", {"a"}, [](const FP& p) { return p.a >= 3; },
        [](const FP& p) { return Chain{4, p.a, 2}; }, false,
        {
            row("a", always, [](const FP& p) { return cat({{1}, two(p.a - 1), {1}}); },
                [](const FP& p) { return Toks{L(4), L(p.a), A(1)}; }),
            row("b", a_eq(4), [](const FP&) { return Chain{1, 2, 3, 1, 2}; },
                [](const FP&) { return Toks{L(4), T(2, 1), L(2)}; }),
            row("c", a_eq(5), [](const FP&) { return Chain{1, 2, 3, 2, 1, 3}; },
                [](const FP&) { return Toks{L(4), T(3, 1)}; }),
            row("d", always, [](const FP& p) { return cat({{2, 1, 3}, two(p.a - 3), {1}}); },
                [](const FP& p) { return Toks{T(2, 1), L(p.a), A(1)}; }),
            row("e", a_eq(3), [](const FP&) { return Chain{2, 2, 1, 3}; },
                [](const FP&) { return Toks{T(3, 1, 2)}; }),
        },
        {{3, 9}}});

    fams.push_back({"typeIV", {"a"}, [](const FP& p) { return p.a >= 3; },
        [](const FP& p) { return Chain{3, p.a, 3}; }, false,
        {
            row("a", always, [](const FP& p) { return cat({{1}, two(p.a - 1), {1}}); },
                [](const FP& p) { return Toks{L(3), L(p.a), L(3)}; }),
            row("b", a_eq(3), [](const FP&) { return Chain{1, 3, 1, 2}; },
                [](const FP&) { return Toks{L(3), T(2, 1, 2)}; }),
            row("c", a_eq(3), [](const FP&) { return Chain{2, 1, 3, 1}; },
                [](const FP&) { return Toks{T(2, 1, 2), L(3)}; }),
            row("d", a_eq(4), [](const FP&) { return Chain{1, 3, 1, 3, 1}; },
                [](const FP&) { return Toks{L(3), T(2, 1), L(3)}; }),
        },
        {{3, 9}}});

    fams.push_back({"4rb2", {"r", "b"}, [](const FP& p) { return p.r >= 3 && p.b >= 4; },
        [](const FP& p) { return cat({{4, p.r, p.b}, two(p.b - 4)}); }, true,
        {
            row("a", always,
                [](const FP& p) { return cat({{2, 1, 3}, two(p.r - 3), {3}, two(p.b - 4), {1, p.b - 2}}); },
                [](const FP& p) { return Toks{T(2, 1), L(p.r), T(p.b - 2, 1)}; }),
        },
        {{3, 7}, {4, 8}}});

    fams.push_back({"4rb232", {"r", "b", "n"},
        [](const FP& p) { return p.r >= 3 && p.b >= 3 && p.n >= 2; },
        [](const FP& p) { return cat({{4, p.r, p.b}, two(p.n - 2), {3}, two(p.b - 3)}); }, true,
        {
            row("a", always,
                [](const FP& p) { return cat({{2, 1, 3}, two(p.r - 3), {3}, two(p.b - 3), {1, p.b - 1}}); },
                [](const FP& p) { return Toks{T(2, 1), L(p.r), T(p.b - 1, 1, p.n)}; }),
            row("b", [](const FP& p) { return p.b == 5 && p.n >= p.r - 1; },
                [](const FP& p) { return cat({{2, 2, 3}, two(p.r - 3), {3, 1, 2, p.r, 4}}); },
                [](const FP& p) { return Toks{T(8 * p.r - 6, 2 * p.r - 1), L(1), T(4, 1, p.n - p.r + 1)}; }),
            row("c", [](const FP& p) { return p.b == 5 && p.n >= p.r; },
                [](const FP& p) { return cat({{2, 2, 3}, two(p.r - 1), {1, p.r + 1, 4}}); },
                [](const FP& p) {
                    return Toks{T(4 * p.r - 5, p.r - 1), L(1), T(4 * p.r + 3, p.r + 1), L(1), T(4, 1, p.n - p.r)};
                }),
            row("d", [](const FP& p) { return p.b == p.r + 3 && p.n >= p.r; },
                [](const FP& p) { return cat({two(p.r), {3}, two(p.r - 1), {1, p.b - 2, p.b - 1}}); },
                [](const FP& p) {
                    return Toks{T(3, 1), L(1), T(p.r * p.r + 3 * p.r + 1, p.r + 1), L(1), T(p.r + 2, 1, p.n - p.r)};
                }),
        },
        {{3, 6}, {3, 8}, {2, 7}}});

    fams.push_back({"2ar323", {"r", "a", "n"},
        [](const FP& p) { return p.r >= 3 && p.a >= 4 && p.n >= 2; },
        [](const FP& p) { return cat({two(p.a - 4), {p.a, p.r, 3}, two(p.n - 2), {3}}); }, true,
        {
            row("a", always,
                [](const FP& p) { return cat({{p.a - 2, 1}, two(p.a - 4), {3}, two(p.r - 3), {3, 1, 2}}); },
                [](const FP& p) { return Toks{T(p.a - 2, p.a - 3), L(p.r), T(2, 1, p.n)}; }),
            row("b", [](const FP& p) { return p.a == 5 && p.r == 4 && p.n >= 4; },
                [](const FP&) { return Chain{3, 2, 2, 3, 1, 2, 5, 2}; },
                [](const FP& p) { return Toks{T(16, 9), L(1), T(9, 5), L(1), T(2, 1, p.n - 4)}; }),
            row("c", [](const FP& p) { return p.a == 5 && p.r == 5 && p.n >= 4; },
                [](const FP&) { return Chain{3, 2, 2, 3, 2, 1, 3, 5, 2}; },
                [](const FP& p) { return Toks{T(25, 14), L(1), T(2, 1, p.n - 4)}; }),
            row("d", [](const FP& p) { return p.a == 5 && p.n >= p.r + 1; },
                [](const FP& p) { return cat({{3}, two(p.r), {1, p.r + 2, 2}}); },
                [](const FP& p) {
                    return Toks{T(7, 4), L(1), T(2 * p.r + 3, p.r + 2, 2), L(1), T(2, 1, p.n - p.r - 1)};
                }),
        },
        {{3, 6}, {4, 7}, {2, 7}}});

    fams.push_back({"323rb232", {"r", "b", "n", "nn"},
        [](const FP& p) { return p.r >= 3 && p.b >= 3 && p.n >= 2 && p.nn >= 2; },
        [](const FP& p) { return cat({{3}, two(p.n - 2), {3, p.r, p.b}, two(p.nn - 2), {3}, two(p.b - 3)}); },
        true,
        {
            row("a", [](const FP& p) { return p.r == 3 && p.b == 4; },
                [](const FP&) { return Chain{2, 3, 3, 1, 2, 3, 3}; },
                [](const FP& p) { return Toks{T(2, 1, p.n - 2), L(1), T(13, 5, 2), L(1), T(3, 1, p.nn - 2)}; }),
            row("b", [](const FP& p) { return p.r == 4 && p.b == 4 && p.nn >= 3; },
                [](const FP&) { return Chain{2, 3, 3, 1, 3, 1, 4, 3}; },
                [](const FP& p) {
                    return Toks{T(2, 1, p.n - 2), L(1), T(13, 5), L(1), T(11, 4), L(1), T(3, 1, p.nn - 3)};
                }),
            row("c", [](const FP& p) { return p.r == 4 && p.b == 4 && p.n >= 4; },
                [](const FP&) { return Chain{2, 5, 2, 1, 3, 2, 2, 3}; },
                [](const FP& p) {
                    return Toks{T(2, 1, p.n - 4), L(1), T(9, 4), L(1), T(16, 7), L(1), T(3, 1, p.nn - 1)};
                }),
            row("d", [](const FP& p) { return p.r == 5 && p.b == 4 && p.n >= 4; },
                [](const FP&) { return Chain{2, 5, 3, 1, 2, 3, 2, 2, 3}; },
                [](const FP& p) { return Toks{T(2, 1, p.n - 4), L(1), T(25, 11), L(1), T(3, 1, p.nn - 1)}; }),
            row("e", always,
                [](const FP& p) { return cat({{2, 1, 3}, two(p.r - 3), {3}, two(p.b - 3), {1, p.b - 1}}); },
                [](const FP& p) { return Toks{T(2, 1, p.n), L(p.r), T(p.b - 1, 1, p.nn)}; }),
            row("f", [](const FP& p) { return p.b == 4 && p.n >= p.r + 1; },
                [](const FP& p) { return cat({{2, p.r + 2, 1}, two(p.r), {3}}); },
                [](const FP& p) {
                    return Toks{T(2, 1, p.n - p.r - 1), L(1), T(2 * p.r + 3, p.r + 1, 2), L(1), T(7, 3), L(1),
                                T(3, 1, p.nn - 1)};
                }),
            row("g", [](const FP& p) { return p.b == 4 && p.n >= p.r; },
                [](const FP& p) { return cat({{2, p.r + 1, 1}, two(p.r - 3), {3, 1, 3, 3}}); },
                [](const FP& p) {
                    return Toks{T(2, 1, p.n - p.r), L(1), T(2 * p.r + 1, p.r, 2), L(1), T(8, 3), L(1),
                                T(3, 1, p.nn - 2)};
                }),
            row("h", [](const FP& p) { return p.b == 4 && p.nn >= p.r; },
                [](const FP& p) { return cat({{2, 3}, two(p.r - 1), {1, p.r + 1, 3}}); },
                [](const FP& p) {
                    return Toks{T(2, 1, p.n - 2), L(1), T(5, 2), L(1), T(3 * p.r - 1, p.r), L(1),
                                T(3 * p.r + 2, p.r + 1), L(1), T(3, 1, p.nn - p.r)};
                }),
            row("i", [](const FP& p) { return p.b == 5 && p.nn >= p.r - 1; },
                [](const FP& p) { return cat({{2, 2, 3}, two(p.r - 3), {3, 1, 2, p.r, 4}}); },
                [](const FP& p) {
                    return Toks{T(2, 1, p.n - 1), L(1), T(8 * p.r - 6, 2 * p.r - 1), L(1), T(4, 1, p.nn - p.r + 1)};
                }),
            row("j", [](const FP& p) { return p.b == 5 && p.nn >= p.r; },
                [](const FP& p) { return cat({{2, 2, 3}, two(p.r - 1), {1, p.r + 1, 4}}); },
                [](const FP& p) {
                    return Toks{T(2, 1, p.n - 1), L(1), T(4 * p.r - 5, p.r - 1), L(1), T(4 * p.r + 3, p.r + 1), L(1),
                                T(4, 1, p.nn - p.r)};
                }),
            row("k", [](const FP& p) { return p.b == p.r + 3 && p.nn >= p.r; },
                [](const FP& p) { return cat({two(p.r), {3}, two(p.r - 1), {1, p.b - 2, p.b - 1}}); },
                [](const FP& p) {
                    return Toks{T(2, 1, p.n - 1), L(1), T(3, 1), L(1), T(p.r * p.r + 3 * p.r + 1, p.r + 1), L(1),
                                T(p.r + 2, 1, p.nn - p.r)};
                }),
        },
        {{3, 5}, {3, 8}, {2, 6}, {2, 6}}});

    return fams;
}

}  // namespace

std::map<std::string, std::int64_t> FamilyParams::as_map(const std::vector<std::string>& names) const
{
    std::map<std::string, std::int64_t> out;
    for (const auto& nm : names) {
        if (nm == "r") out[nm] = r;
        else if (nm == "a") out[nm] = a;
        else if (nm == "b") out[nm] = b;
        else if (nm == "c") out[nm] = c;
        else if (nm == "n") out[nm] = n;
        else if (nm == "nn") out[nm] = nn;
    }
    return out;
}

FamilyParams FamilyParams::from_map(const std::map<std::string, std::int64_t>& m)
{
    FamilyParams p;
    for (const auto& [k, v] : m) {
        if (k == "r") p.r = v;
        else if (k == "a") p.a = v;
        else if (k == "b") p.b = v;
        else if (k == "c") p.c = v;
        else if (k == "n") p.n = v;
        else if (k == "nn") p.nn = v;
        else throw ValidationError("unknown family parameter '" + k + "'");
    }
    return p;
}

const std::vector<AppendixFamily>& appendix_families()
{
    static const std::vector<AppendixFamily> fams = build_catalog();
    return fams;
}

const AppendixFamily& appendix_family(const std::string& id)
{
    for (const auto& f : appendix_families())
        if (f.id == id) return f;
    throw ValidationError("unknown appendix family '" + id + "'");
}

std::pair<std::vector<PNode>, std::vector<std::int64_t>> parse_notation(const std::vector<NotationToken>& input)
{
    using K = NotationToken;
    // End shorthand: A_x next to a T node stands for A_{x-1}-(2).
    std::vector<NotationToken> toks;
    for (std::size_t i = 0; i < input.size(); ++i) {
        const auto& t = input[i];
        if (t.kind == K::A) {
            bool adj_l = i > 0 && input[i - 1].kind == K::T;
            bool adj_r = i + 1 < input.size() && input[i + 1].kind == K::T;
            if (adj_l && adj_r) throw ValidationError("A_x between two T nodes");
            if (adj_l || adj_r) {
                if (t.x < 0) throw ValidationError("negative A index");
                if (t.x >= 1) {
                    if (adj_r) {
                        toks.push_back(A(t.x - 1));
                        toks.push_back(L(2));
                    } else {
                        toks.push_back(L(2));
                        toks.push_back(A(t.x - 1));
                    }
                }
                continue;
            }
        }
        toks.push_back(t);
    }
    // A T node with d = 0 is no node at all.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (toks[i].kind != K::T || toks[i].d != 0) continue;
            bool link_l = i > 0 && toks[i - 1].kind == K::Link;
            bool link_r = i + 1 < toks.size() && toks[i + 1].kind == K::Link;
            auto at = [&](std::size_t k) { return toks.begin() + static_cast<std::ptrdiff_t>(k); };
            if (i == 0 && link_r) {
                toks.erase(at(0), at(2));
            } else if (i + 1 == toks.size() && link_l) {
                toks.erase(at(i - 1), at(i + 1));
            } else if (link_l && link_r) {
                auto merged = L(toks[i - 1].x + toks[i + 1].x - 1);
                toks.erase(at(i - 1), at(i + 2));
                toks.insert(at(i - 1), merged);
            } else {
                throw ValidationError("unsupported d = 0 node");
            }
            changed = true;
            break;
        }
    }
    std::vector<PNode> nodes;
    std::vector<std::int64_t> links;
    bool expect_node = true;
    for (const auto& t : toks) {
        if (t.kind == K::Link) {
            if (expect_node) nodes.push_back({1, 1, 1});
            links.push_back(t.x);
            expect_node = true;
            continue;
        }
        if (!expect_node) throw ValidationError("adjacent nodes without a connecting curve");
        if (t.kind == K::A) {
            if (t.x < 0) throw ValidationError("negative A index");
            nodes.push_back({t.x + 1, 1, 1});
        } else {
            if (t.d < 0) throw ValidationError("negative node multiplicity");
            nodes.push_back({t.d, t.n, t.a});
        }
        expect_node = false;
    }
    if (expect_node) nodes.push_back({1, 1, 1});
    // Equal Wahl neighbours across a (1)-curve have K.E = 0 and merge.
    for (std::size_t i = 0; i < links.size();) {
        auto& l = nodes[i];
        const auto& r = nodes[i + 1];
        if (links[i] == 1 && l.n > 1 && l.n == r.n && l.a == r.a) {
            l.d += r.d;
            nodes.erase(nodes.begin() + static_cast<std::ptrdiff_t>(i + 1));
            links.erase(links.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return {nodes, links};
}

ComparisonReport appendix_check(const std::string& family, const FamilyParams& params)
{
    const auto& fam = appendix_family(family);
    if (!fam.in_range(params)) throw ValidationError("parameters out of range for family " + family);
    ComparisonReport rep;
    rep.family = family;
    rep.params = params;
    Chain ch = fam.chain(params);
    auto [delta, omega] = evaluate(ch);
    rep.source = {delta, omega};
    if (hj_expand(delta, omega) != ch) throw StructuralError("family chain is not an HJ chain");

    std::map<std::string, Chain> got;
    for (const auto& p : enumerate_p_resolutions(delta, omega, fam.cross_only)) {
        auto s = render(p);
        rep.computed.emplace_back(p.zcf, s);
        got[s] = p.zcf;
    }

    std::map<std::string, ExpectedRow> expected;
    for (const auto& row : fam.rows) {
        if (!row.applies(params)) continue;
        auto [nodes, links] = parse_notation(row.tokens(params));
        auto s = render_nodes(nodes, links);
        auto& e = expected[s];
        if (!e.labels.empty()) rep.collisions.push_back(s);
        e.notation = s;
        e.labels.push_back(row.label);
        e.zcf = row.zcf(params);
        auto it = got.find(s);
        if (it != got.end() && it->second != e.zcf) rep.zcf_mismatch.push_back(row.label);
    }
    for (auto& [s, e] : expected) {
        if (!got.count(s)) rep.missing.push_back(s);
        rep.expected.push_back(std::move(e));
    }
    for (const auto& [s, z] : got)
        if (!expected.count(s)) rep.extra.push_back(s);
    return rep;
}

std::vector<FamilyParams> grid_points(const AppendixFamily& fam)
{
    std::vector<FamilyParams> out;
    std::vector<std::int64_t> cur(fam.grid.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == fam.grid.size()) {
            std::map<std::string, std::int64_t> m;
            for (std::size_t k = 0; k < cur.size(); ++k) m[fam.param_names[k]] = cur[k];
            auto p = FamilyParams::from_map(m);
            if (fam.in_range(p)) out.push_back(p);
            return;
        }
        for (auto v = fam.grid[i].first; v <= fam.grid[i].second; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace tsurf
