#include "tsurf/tsing.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tsurf {

namespace {

void require_hj(const Chain& chain)
{
    if (chain.empty()) throw ValidationError("empty chain");
    for (auto e : chain)
        if (e < 2) throw ValidationError("HJ chain entries must be >= 2");
}

bool is_seed(const Chain& c, std::int64_t& d)
{
    if (c.size() == 1 && c[0] == 4) {
        d = 1;
        return true;
    }
    if (c.size() >= 2 && c.front() == 3 && c.back() == 3) {
        for (std::size_t i = 1; i + 1 < c.size(); ++i)
            if (c[i] != 2) return false;
        d = static_cast<std::int64_t>(c.size());
        return true;
    }
    return false;
}

}  // namespace

Fraction TType::fraction() const
{
    Int dn = Int(d) * n;
    return {dn * n, dn * a - 1};
}

TType make_ttype(std::int64_t d, std::int64_t n, std::int64_t a)
{
    if (d < 1) throw ValidationError("T-type requires d >= 1");
    if (n < 2) throw ValidationError("T-type requires n >= 2");
    if (a <= 0 || a >= n) throw ValidationError("T-type requires 0 < a < n");
    if (gcd(Int(a), Int(n)) != 1) throw ValidationError("T-type requires gcd(a, n) = 1");
    return {d, n, a};
}

std::string to_string(const TType& t)
{
    return "T(" + std::to_string(t.d) + "," + std::to_string(t.n) + "," + std::to_string(t.a) + ")";
}

Chain t_expand(const TType& t)
{
    make_ttype(t.d, t.n, t.a);
    auto f = t.fraction();
    return hj_expand(f.delta, f.omega);
}

std::optional<Unwrapping> t_unwrap(const Chain& chain)
{
    require_hj(chain);
    Chain c = chain;
    std::string ops;
    std::int64_t d = 0;
    while (!is_seed(c, d)) {
        if (c.size() < 2) return std::nullopt;
        if (c.front() == 2) {
            c.erase(c.begin());
            c.back() -= 1;
            ops += 'L';
        } else if (c.back() == 2) {
            c.pop_back();
            c.front() -= 1;
            ops += 'R';
        } else {
            return std::nullopt;
        }
        if (c.front() < 2 || c.back() < 2) return std::nullopt;
    }
    std::reverse(ops.begin(), ops.end());
    return Unwrapping{d, ops};
}

std::optional<TType> t_recognize(const Chain& chain)
{
    require_hj(chain);
    auto [delta, omega] = evaluate(chain);
    std::optional<TType> arith;
    Int g = gcd(delta, omega + 1);
    Int n = delta / g;
    if (n >= 2 && g % n == 0) {
        Int d = g / n;
        Int a = (omega + 1) / g;
        if (d >= 1 && a > 0 && a < n && gcd(a, n) == 1 && d * n * n == delta)
            arith = TType{static_cast<std::int64_t>(d), static_cast<std::int64_t>(n),
                          static_cast<std::int64_t>(a)};
    }
    auto unwrapped = t_unwrap(chain);
    if (arith.has_value() != unwrapped.has_value() || (arith && arith->d != unwrapped->d))
        throw StructuralError("T-chain recognition paths disagree on " + chain_to_string(chain));
    return arith;
}

std::pair<Chain, Chain> t_children(const Chain& chain)
{
    if (!t_recognize(chain)) throw ValidationError("t_children requires a T-chain");
    Chain left;
    left.push_back(2);
    left.insert(left.end(), chain.begin(), chain.end());
    left.back() += 1;
    Chain right = chain;
    right.front() += 1;
    right.push_back(2);
    return {left, right};
}

std::vector<std::pair<TType, Chain>> enumerate_t_chains(int max_len, const Int& max_delta,
                                                         std::optional<std::int64_t> d_filter)
{
    if (max_len < 1) throw ValidationError("max_len must be >= 1");
    std::set<Chain> seen;
    std::deque<Chain> queue;
    auto admit = [&](const Chain& c) {
        if (static_cast<int>(c.size()) > max_len) return;
        if (evaluate(c).p > max_delta) return;
        if (seen.insert(c).second) queue.push_back(c);
    };
    for (std::int64_t d = 1;; ++d) {
        if (Int(4 * d) > max_delta || (d >= 2 && d > max_len) ) break;
        if (d_filter && *d_filter != d) continue;
        Chain seed;
        if (d == 1) {
            seed = {4};
        } else {
            seed.assign(static_cast<std::size_t>(d), 2);
            seed.front() = 3;
            seed.back() = 3;
        }
        admit(seed);
    }
    while (!queue.empty()) {
        Chain c = queue.front();
        queue.pop_front();
        auto [l, r] = t_children(c);
        admit(l);
        admit(r);
    }
    std::vector<std::pair<TType, Chain>> out;
    for (const auto& c : seen) out.emplace_back(*t_recognize(c), c);
    return out;
}

DiscrepancyVector discrepancies(const Chain& chain)
{
    require_hj(chain);
    // Forward elimination on the tridiagonal matrix with diagonal -e_i and
    // unit off-diagonals.
    std::size_t r = chain.size();
    std::vector<Rational> diag(r), rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        diag[i] = Rational(-chain[i]);
        rhs[i] = Rational(chain[i] - 2);
    }
    for (std::size_t i = 1; i < r; ++i) {
        if (diag[i - 1] == 0) throw StructuralError("singular intersection matrix");
        Rational m = Rational(1) / diag[i - 1];
        diag[i] -= m;
        rhs[i] -= m * rhs[i - 1];
    }
    DiscrepancyVector out;
    out.deltas.assign(r, Rational(0));
    if (diag[r - 1] == 0) throw StructuralError("singular intersection matrix");
    out.deltas[r - 1] = rhs[r - 1] / diag[r - 1];
    for (std::size_t i = r - 1; i-- > 0;)
        out.deltas[i] = (rhs[i] - out.deltas[i + 1]) / diag[i];
    if (auto t = t_recognize(chain)) {
        Int n = t->n;
        out.t_first = Int(numerator(Rational(n) * (1 + out.deltas.front())));
        out.t_last = Int(numerator(Rational(n) * (1 + out.deltas.back())));
    }
    return out;
}

DiscrepancyVector discrepancies_recursive(const Chain& chain)
{
    auto unwrapped = t_unwrap(chain);
    if (!unwrapped) throw ValidationError("recursive discrepancies require a T-chain");
    std::vector<Int> t(static_cast<std::size_t>(unwrapped->d == 1 ? 1 : unwrapped->d), Int(1));
    Int n = 2;
    for (char op : unwrapped->ops) {
        Int sum = t.front() + t.back();
        if (op == 'R') {
            n += t.front();
            t.push_back(sum);
        } else {
            n += t.back();
            t.insert(t.begin(), sum);
        }
    }
    DiscrepancyVector out;
    for (const auto& ti : t) out.deltas.push_back(Rational(-1) + Rational(ti, n));
    out.t_first = t.front();
    out.t_last = t.back();
    return out;
}

std::vector<std::size_t> center(const Chain& chain)
{
    if (!t_recognize(chain)) throw ValidationError("center requires a T-chain");
    auto dv = discrepancies(chain);
    Rational lo = *std::min_element(dv.deltas.begin(), dv.deltas.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dv.deltas.size(); ++i)
        if (dv.deltas[i] == lo) out.push_back(i + 1);
    return out;
}

}  // namespace tsurf
