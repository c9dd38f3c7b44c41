#include "tsurf/cf_core.hpp"

#include <climits>
#include <sstream>

namespace tsurf {

std::string chain_to_string(const Chain& c)
{
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

Chain parse_chain(const std::string& text)
{
    Chain out;
    std::string cleaned;
    for (char ch : text)
        cleaned += (ch == '[' || ch == ']' || ch == ',') ? ' ' : ch;
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ValidationError("bad chain entry '" + tok + "'");
        }
        if (used != tok.size()) throw ValidationError("bad chain entry '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ValidationError("empty chain");
    return out;
}

Fraction make_fraction(const Int& delta, const Int& omega)
{
    if (delta < 2) throw ValidationError("delta must be >= 2");
    if (omega <= 0 || omega >= delta) throw ValidationError("omega must satisfy 0 < omega < delta");
    if (gcd(delta, omega) != 1) throw ValidationError("delta and omega must be coprime");
    return {delta, omega};
}

Chain hj_expand(const Int& delta, const Int& omega)
{
    make_fraction(delta, omega);
    Chain out;
    Int d = delta, o = omega;
    while (o != 0) {
        Int e = (d + o - 1) / o;
        if (e > Int(INT64_MAX)) throw ValidationError("chain entry exceeds 64 bits");
        out.push_back(static_cast<std::int64_t>(e));
        Int next = e * o - d;
        d = o;
        o = next;
    }
    return out;
}

Continuant evaluate(const Chain& chain)
{
    if (chain.empty()) throw ValidationError("cannot evaluate an empty chain");
    Int p_prev = 0, p = 1;
    Int q_prev = -1, q = 0;
    for (auto e : chain) {
        if (e < 1) throw ValidationError("chain entries must be positive");
        Int pn = Int(e) * p - p_prev;
        Int qn = Int(e) * q - q_prev;
        p_prev = p;
        p = pn;
        q_prev = q;
        q = qn;
    }
    return {p, q};
}

Chain dual(const Int& delta, const Int& omega)
{
    make_fraction(delta, omega);
    return hj_expand(delta, delta - omega);
}

GenChain blow_down(GenChain gen)
{
    auto& v = gen.entries;
    for (auto e : v)
        if (e < 0) throw StructuralError("negative entry in blow-down input");
    auto check_zero = [&v]() {
        if (v.size() > 1)
            for (auto e : v)
                if (e == 0) throw StructuralError("zero entry inside chain " + chain_to_string(v));
    };
    check_zero();
    while (!gen.terminal() && v.size() > 1) {
        std::size_t i = 0;
        while (i < v.size() && v[i] != 1) ++i;
        if (i == v.size()) break;
        if (i == 0) {
            v.erase(v.begin());
            v[0] -= 1;
        } else if (i + 1 == v.size()) {
            v.pop_back();
            v.back() -= 1;
        } else {
            v[i - 1] -= 1;
            v[i + 1] -= 1;
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        }
        for (auto e : v)
            if (e < 0) throw StructuralError("negative entry during blow-down");
        if (!gen.terminal()) check_zero();
    }
    return gen;
}

bool reduces_to_zero(const Chain& chain)
{
    try {
        return blow_down(GenChain{chain}).terminal();
    } catch (const StructuralError&) {
        return false;
    }
}

bool is_zero_chain(const Chain& chain)
{
    if (chain.empty()) throw ValidationError("empty chain");
    Int p_prev = 0, p = 1;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i] < 1) throw ValidationError("chain entries must be positive");
        Int pn = Int(chain[i]) * p - p_prev;
        p_prev = p;
        p = pn;
        if (i + 1 < chain.size() && p <= 0) return false;
    }
    return p == 0;
}

}  // namespace tsurf
