#include "tsurf/zcf.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace tsurf {

namespace {

using Triangles = std::vector<std::array<int, 3>>;

// Ear recursion on the sub-polygon lo..hi: the edge (lo, hi) lies in a
// unique triangle (lo, k, hi).
void triangulate(int lo, int hi, Triangles& cur, const std::function<void()>& emit)
{
    if (hi - lo < 2) {
        emit();
        return;
    }
    for (int k = lo + 1; k < hi; ++k) {
        cur.push_back({lo, k, hi});
        triangulate(lo, k, cur, [&] { triangulate(k, hi, cur, emit); });
        cur.pop_back();
    }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int s)
{
    if (s < 2) throw ValidationError("zero chains need length s >= 2");
    std::vector<Triangulation> out;
    Triangles cur;
    triangulate(0, s, cur, [&] {
        Triangulation t;
        t.vertex_count = s + 1;
        t.degrees.assign(static_cast<std::size_t>(s + 1), 0);
        for (const auto& tri : cur) {
            for (int v : tri) t.degrees[static_cast<std::size_t>(v)] += 1;
            for (int i = 0; i < 3; ++i) {
                int x = tri[static_cast<std::size_t>(i)], y = tri[static_cast<std::size_t>((i + 1) % 3)];
                if (x > y) std::swap(x, y);
                if (y - x != 1 && !(x == 0 && y == s)) t.diagonals.insert({x, y});
            }
        }
        out.push_back(std::move(t));
    });
    return out;
}

std::vector<Chain> enumerate_zcf(int s)
{
    std::set<Chain> seen;
    for (const auto& t : enumerate_triangulations(s)) seen.insert(t.zero_chain());
    return {seen.begin(), seen.end()};
}

std::vector<Chain> k_set(const Int& delta, const Int& omega)
{
    Chain b = dual(delta, omega);
    std::size_t s = b.size();
    std::vector<Chain> out;
    if (s < 2) return out;
    Chain cur;
    // Continuant backtracking: every proper prefix must stay positive and
    // the full chain must hit zero.
    std::function<void(const Int&, const Int&)> rec = [&](const Int& prev, const Int& p) {
        std::size_t m = cur.size();
        if (m == s) {
            if (p == 0) out.push_back(cur);
            return;
        }
        if (m + 1 == s) {
            // The last entry is forced: k_s * p = prev.
            if (p > 0 && prev % p == 0) {
                Int k = prev / p;
                if (k >= 1 && k <= b[m]) {
                    cur.push_back(static_cast<std::int64_t>(k));
                    out.push_back(cur);
                    cur.pop_back();
                }
            }
            return;
        }
        for (std::int64_t x = 1; x <= b[m]; ++x) {
            Int next = Int(x) * p - prev;
            if (next <= 0) continue;
            cur.push_back(x);
            rec(p, next);
            cur.pop_back();
        }
    };
    rec(Int(0), Int(1));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Chain> k_cross_set(const Int& delta, const Int& omega)
{
    Chain b = dual(delta, omega);
    std::vector<Chain> out;
    for (auto& k : k_set(delta, omega))
        if (k.front() == b.front() && k.back() == b.back()) out.push_back(std::move(k));
    return out;
}

std::vector<Chain> k_set_by_filter(const Int& delta, const Int& omega)
{
    Chain b = dual(delta, omega);
    std::vector<Chain> out;
    if (b.size() < 2) return out;
    for (auto& z : enumerate_zcf(static_cast<int>(b.size()))) {
        bool ok = true;
        for (std::size_t i = 0; i < b.size(); ++i) ok = ok && z[i] <= b[i];
        if (ok) out.push_back(std::move(z));
    }
    return out;
}

Int catalan_count(int s)
{
    // (1/s) * C(2(s-1), s-1)
    Int c = 1;
    int m = s - 1;
    for (int i = 1; i <= m; ++i) c = c * (m + i) / i;
    return c / s;
}

}  // namespace tsurf
