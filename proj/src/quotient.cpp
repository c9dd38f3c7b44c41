#include "tsurf/quotient.hpp"

#include <algorithm>
#include <numeric>

namespace tsurf {

namespace {

std::string pair_str(const Int& a, const Int& b) { return "(" + a.str() + "," + b.str() + ")"; }

QuotientOutcome outcome(char tag, const Int& m0, const Int& q0)
{
    QuotientOutcome o;
    o.case_tag = tag;
    o.applicable = true;
    o.raw = Fraction{m0, q0};
    if (m0 == 1) {
        o.smooth = true;
        return o;
    }
    Int q = q0 % m0;
    if (q < 0) q += m0;
    if (q == 0 || gcd(q, m0) != 1) {
        o.reason = "raw " + pair_str(m0, q0) + " is not a valid c.q.s.";
        return o;
    }
    o.normalized = Fraction{m0, q};
    o.du_val = q == m0 - 1;
    if (!o.du_val) o.t_type = t_recognize(hj_expand(m0, q));
    return o;
}

QuotientOutcome inapplicable(char tag, std::string reason)
{
    QuotientOutcome o;
    o.case_tag = tag;
    o.reason = std::move(reason);
    return o;
}

std::vector<TType> wahl_types(std::int64_t n)
{
    std::vector<TType> out;
    for (std::int64_t a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) out.push_back({1, n, a});
    return out;
}

}  // namespace

std::vector<QuotientOutcome> quotient_candidates(const Int& m, const Int& q)
{
    make_fraction(m, q);
    if (m < 2) throw ValidationError("quotient_candidates requires m >= 2");
    std::vector<QuotientOutcome> out;

    if (q == m - 1) {
        QuotientOutcome a;
        a.case_tag = 'a';
        a.applicable = true;
        a.smooth = true;
        out.push_back(a);
    } else {
        out.push_back(inapplicable('a', "requires q = m-1"));
    }

    out.push_back(outcome('b', 2 * m, q));
    out.push_back(outcome('b', 2 * m, m + q));
    out.push_back(outcome('c', m, 2 * q));

    if (m % 2 == 0)
        out.push_back(outcome('d', m / 2, q));
    else
        out.push_back(inapplicable('d', "requires m even"));

    if ((q * q) % m != 1 % m)
        out.push_back(inapplicable('e', "requires q^2 = 1 mod m"));
    else if (q == m - 1)
        out.push_back(inapplicable('e', "requires q != m-1"));
    else {
        Int u = gcd(q + 1, m);
        out.push_back(outcome('e', m / u, (q + 1) / u));
    }
    return out;
}

QuotientScanReport wahl_quotient_scan(std::int64_t max_n)
{
    if (max_n < 2) throw ValidationError("wahl_quotient_scan requires max_n >= 2");
    QuotientScanReport rep;
    for (std::int64_t n = 2; n <= max_n; ++n)
        for (const auto& t : wahl_types(n)) {
            ++rep.checked;
            auto f = t.fraction();
            for (const auto& o : quotient_candidates(f.delta, f.omega)) {
                if (!o.applicable) continue;
                if (o.smooth)
                    rep.violations.push_back({t, o.case_tag, o.normalized, "smooth quotient"});
                else if (o.t_type && o.t_type->is_wahl())
                    rep.violations.push_back({t, o.case_tag, o.normalized, "Wahl quotient " + to_string(*o.t_type)});
            }
        }
    return rep;
}

QuotientScanReport duval_quotient_scan(std::int64_t max_index)
{
    if (max_index < 1) throw ValidationError("duval_quotient_scan requires max_index >= 1");
    QuotientScanReport rep;
    for (std::int64_t n = 2; n * n <= max_index; ++n)
        for (std::int64_t d = 1; d * n * n <= max_index; ++d)
            for (std::int64_t a = 1; a < n; ++a) {
                if (std::gcd(a, n) != 1) continue;
                TType t{d, n, a};
                ++rep.checked;
                auto f = t.fraction();
                for (const auto& o : quotient_candidates(f.delta, f.omega)) {
                    if (!o.applicable || !o.du_val) continue;
                    Fraction expected{Int(2 * d), Int(2 * d - 1)};
                    if (n != 2)
                        rep.violations.push_back({t, o.case_tag, o.normalized, "Du Val quotient with n != 2"});
                    else if (!(*o.normalized == expected))
                        rep.violations.push_back({t, o.case_tag, o.normalized,
                                                  "Du Val quotient is not " + pair_str(expected.delta, expected.omega)});
                }
            }
    return rep;
}

LeeParkQuotient lee_park_quotient(std::int64_t n)
{
    if (n < 2) throw ValidationError("lee_park_quotient requires n >= 2");
    LeeParkQuotient lp;
    lp.n = n;
    if (n % 2 == 1) {
        std::int64_t k = (n + 1) / 2;
        lp.expected = {Int(2 * n * n), Int(2 * n * k - 1)};
        lp.expected_case = 'b';
    } else {
        std::int64_t k = n / 2;
        lp.expected = {Int(2 * k * k), Int(2 * k - 1)};
        lp.expected_case = 'd';
    }
    for (const auto& o : quotient_candidates(Int(n * n), Int(n - 1))) {
        if (!o.applicable || !o.normalized) continue;
        // At n = 2 the quotient 1/2(1,1) is Du Val; it is still the expected one.
        if (!o.t_type && !(o.du_val && *o.normalized == lp.expected)) continue;
        if (std::find(lp.t_results.begin(), lp.t_results.end(), *o.normalized) == lp.t_results.end())
            lp.t_results.push_back(*o.normalized);
    }
    lp.matches = lp.t_results.size() == 1 && lp.t_results[0] == lp.expected;
    return lp;
}

}  // namespace tsurf
