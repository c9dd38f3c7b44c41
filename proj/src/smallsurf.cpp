#include "tsurf/smallsurf.hpp"

#include <algorithm>
#include <cctype>

namespace tsurf {

namespace {

using FT = FiberType;

Chain two(std::int64_t k) { return Chain(static_cast<std::size_t>(std::max<std::int64_t>(k, 0)), 2); }

Chain cat(std::initializer_list<Chain> parts)
{
    Chain out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// T(d, n, a); d = 0 means the chain is absent.
void add_t(std::vector<Chain>& out, std::int64_t d, std::int64_t n, std::int64_t a)
{
    if (d >= 1) out.push_back(t_expand(make_ttype(d, n, a)));
}

bool is_i(const FT& f, std::int64_t lo) { return f.kind == FT::I && f.n >= lo; }
bool is_kind(const FT& f, FT::Kind k) { return f.kind == k; }

struct Chains {
    std::vector<Chain> t;
    std::vector<Chain> du_val;
};

struct BlockSpec {
    BlockInfo info;
    std::function<bool(std::int64_t r, int slot, const FT& f)> accepts;
    // Euler cost on top of the fibers passed as parameters.
    std::function<std::int64_t(std::int64_t r)> extra_cost = [](std::int64_t) { return 0; };
    std::function<std::int64_t(std::int64_t r)> extra_fibers = [](std::int64_t) { return 0; };
    std::function<Rational(std::int64_t r)> d_gamma;
    std::function<Chains(std::int64_t r, const FT* f, const FT* f2)> build;
};

// Extra chains shared by S2F.2, S2F.3 and S2F.4 for the second fiber.
void s2f_tail_3(Chains& c, const FT& f2)
{
    if (is_i(f2, 2)) add_t(c.t, f2.n - 1, 3, 1);
    if (is_kind(f2, FT::III)) c.t.push_back({2, 3, 4});
}

// First-fiber extras shared by S2F.7 and S2F.8.
void s2f_head_78(Chains& c, const FT& f)
{
    if (is_i(f, 2)) add_t(c.t, f.n - 1, 2, 1);
    if (is_kind(f, FT::III)) {
        c.t.push_back({4});
        c.du_val.push_back({2});
    }
    if (is_kind(f, FT::IV)) c.t.push_back({3, 2, 3});
}

// III behaves as I_2 in the blocks below; IV as I_2 plus a [4].
std::int64_t eff_n(const FT& f) { return f.kind == FT::I ? f.n : 2; }

std::vector<BlockSpec> build_block_specs()
{
    std::vector<BlockSpec> s;
    auto fixed = [](std::int64_t r) { return [r](std::int64_t) { return r; }; };
    auto pos = [](std::size_t c, std::size_t p) {
        return [c, p](std::int64_t) { return std::pair<std::size_t, std::size_t>{c, p}; };
    };
    auto q = [](std::int64_t a, std::int64_t b) { return Rational(a, b); };

    {
        BlockSpec b;
        b.info = {"S0F", 0, std::nullopt, 4, 0, pos(0, 0), [](std::int64_t) { return 0; }};
        b.accepts = [](std::int64_t, int, const FT&) { return false; };
        b.extra_cost = [](std::int64_t r) { return r - 3; };
        b.extra_fibers = [](std::int64_t r) { return r >= 5 ? 1 : 0; };
        b.d_gamma = [](std::int64_t r) { return Rational(-(r - 3), r - 2); };
        b.build = [](std::int64_t r, const FT*, const FT*) { return Chains{{cat({{r}, two(r - 4)})}, {}}; };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S1F.1", 1, 3, 3, 1, pos(0, 0), fixed(4)};
        b.accepts = [](std::int64_t, int, const FT& f) {
            return is_i(f, 1) || is_kind(f, FT::II) || is_kind(f, FT::III);
        };
        b.d_gamma = [q](std::int64_t) { return q(-3, 5); };
        b.build = [](std::int64_t, const FT* f, const FT*) {
            Chains c{{{3, 5, 2}}, {}};
            if (is_i(*f, 2)) add_t(c.t, f->n - 1, 3, 1);
            if (is_kind(*f, FT::III)) c.t.push_back({2, 3, 4});
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S1F.2", 1, std::nullopt, 4, 1, pos(0, 0), [](std::int64_t r) { return 2 * (r - 1); }};
        b.accepts = [](std::int64_t r, int, const FT& f) { return is_i(f, r - 2); };
        b.d_gamma = [](std::int64_t r) { return Rational(-(r * r - 2 * r), r * r - r - 1); };
        b.build = [](std::int64_t r, const FT* f, const FT*) {
            Chains c{{cat({{r, r + 1}, two(r - 4), {3}, two(r - 2)})}, {}};
            add_t(c.t, f->n - r + 2, r, 1);
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S1F.3", 1, 5, 5, 1, pos(0, 2), fixed(2)};
        b.accepts = [](std::int64_t, int, const FT& f) { return f.kind != FT::I || f.n >= 1; };
        b.extra_cost = [](std::int64_t) { return 3; };
        b.extra_fibers = [](std::int64_t) { return 1; };
        b.d_gamma = [q](std::int64_t) { return q(-6, 7); };
        b.build = [](std::int64_t, const FT* f, const FT*) {
            Chains c{{{2, 2, 5, 4}}, {}};
            if (is_i(*f, 2)) add_t(c.t, f->n - 1, 2, 1);
            if (is_kind(*f, FT::III)) {
                c.t.push_back({4});
                c.du_val.push_back({2});
            }
            if (is_kind(*f, FT::IV)) c.t.push_back({3, 2, 3});
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S1F.4", 1, std::nullopt, 4, 1, pos(0, 1), fixed(2)};
        b.accepts = [](std::int64_t r, int, const FT& f) {
            if (f.kind == FT::I) return f.n >= r - 2;
            if (f.kind == FT::IV) return r == 4 || r == 5;
            return r == 4;
        };
        b.extra_cost = [](std::int64_t) { return 2; };
        b.extra_fibers = [](std::int64_t) { return 1; };
        b.d_gamma = [](std::int64_t r) { return Rational(-(2 * r - 4), 2 * r - 3); };
        b.build = [](std::int64_t r, const FT* f, const FT*) {
            Chains c{{cat({{2, r, 3}, two(r - 4), {3}})}, {}};
            // II and III act as I_2, IV as I_3 plus a [4].
            std::int64_t n = f->kind == FT::I ? f->n : f->kind == FT::IV ? 3 : 2;
            add_t(c.t, n - r + 2, 2, 1);
            if (is_kind(*f, FT::IV)) c.t.push_back({4});
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S2F.1", 2, 4, 4, 2, pos(0, 2), fixed(10)};
        b.accepts = [](std::int64_t, int slot, const FT& f) {
            if (slot == 0) return is_i(f, 2) || is_kind(f, FT::III) || is_kind(f, FT::IV);
            return is_i(f, 3);
        };
        b.d_gamma = [q](std::int64_t) { return q(-12, 13); };
        b.build = [](std::int64_t, const FT* f, const FT* f2) {
            Chains c{{{3, 3, 5, 3, 2}, {3, 6, 2, 3, 2}}, {}};
            add_t(c.t, eff_n(*f) - 2, 2, 1);
            if (is_kind(*f, FT::IV)) c.t.push_back({4});
            add_t(c.t, f2->n - 3, 3, 1);
            return c;
        };
        s.push_back(b);
    }
    auto tail_ok = [](const FT& f) { return is_i(f, 1) || is_kind(f, FT::II) || is_kind(f, FT::III); };
    {
        BlockSpec b;
        b.info = {"S2F.2", 2, 4, 4, 2, pos(1, 3), fixed(11)};
        b.accepts = [tail_ok](std::int64_t, int slot, const FT& f) { return slot == 0 ? is_i(f, 4) : tail_ok(f); };
        b.d_gamma = [q](std::int64_t) { return q(-15, 16); };
        b.build = [](std::int64_t, const FT* f, const FT* f2) {
            Chains c{{{3, 2, 2, 7, 2}, {3, 2, 2, 5, 5, 2}}, {}};
            add_t(c.t, f->n - 4, 2, 1);
            s2f_tail_3(c, *f2);
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S2F.3", 2, 5, 5, 2, pos(0, 4), fixed(6)};
        b.accepts = [tail_ok](std::int64_t, int slot, const FT& f) { return slot == 0 ? is_i(f, 4) : tail_ok(f); };
        b.d_gamma = [q](std::int64_t) { return q(-24, 25); };
        b.build = [](std::int64_t, const FT* f, const FT* f2) {
            Chains c{{{3, 2, 2, 3, 5, 5, 2}}, {}};
            add_t(c.t, f->n - 4, 2, 1);
            s2f_tail_3(c, *f2);
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S2F.4", 2, std::nullopt, 3, 2,
                  [](std::int64_t r) { return std::pair<std::size_t, std::size_t>{0, static_cast<std::size_t>(r + 1)}; },
                  fixed(10)};
        b.accepts = [tail_ok](std::int64_t r, int slot, const FT& f) {
            return slot == 0 ? is_i(f, r + 1) : tail_ok(f);
        };
        b.d_gamma = [](std::int64_t r) { return Rational(-(2 * r + 2), 2 * r + 3); };
        b.build = [](std::int64_t r, const FT* f, const FT* f2) {
            Chains c{{cat({{3}, two(r - 1), {3, r + 3, 2}}), {3, 2, 6, 2}}, {}};
            add_t(c.t, f->n - r - 1, 2, 1);
            s2f_tail_3(c, *f2);
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S2F.5", 2, std::nullopt, 3, 2,
                  [](std::int64_t r) { return std::pair<std::size_t, std::size_t>{0, static_cast<std::size_t>(r)}; },
                  fixed(9)};
        b.accepts = [](std::int64_t r, int slot, const FT& f) { return slot == 0 ? is_i(f, r) : is_i(f, 2); };
        b.d_gamma = [](std::int64_t r) { return Rational(-2 * r, 2 * r + 1); };
        b.build = [](std::int64_t r, const FT* f, const FT* f2) {
            Chains c{{cat({{3}, two(r - 2), {3, r + 2, 2}}), {3, 5, 3, 2}}, {}};
            add_t(c.t, f->n - r, 2, 1);
            add_t(c.t, f2->n - 2, 3, 1);
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S2F.6", 2, std::nullopt, 3, 2, pos(1, 1), [](std::int64_t r) { return r + 10; }};
        b.accepts = [](std::int64_t r, int slot, const FT& f) {
            if (slot == 0) return is_i(f, 2) || is_kind(f, FT::III) || is_kind(f, FT::IV);
            return is_i(f, r);
        };
        b.d_gamma = [](std::int64_t r) { return Rational(-(3 * r - 2), 3 * r - 1); };
        b.build = [](std::int64_t r, const FT* f, const FT* f2) {
            Chains c{{{3, 5, 2}, cat({{3, r + 2}, two(r - 3), {3, 2}}), cat({{3, r + 3}, two(r - 2), {3, 2}})}, {}};
            if (is_kind(*f, FT::IV)) {
                c.t.push_back({4});
                c.t.push_back({4});
            } else {
                add_t(c.t, eff_n(*f) - 2, 2, 1);
            }
            add_t(c.t, f2->n - r, 3, 1);
            return c;
        };
        s.push_back(b);
    }
    auto head_ok = [](const FT& f) { return f.kind != FT::I || f.n >= 1; };
    {
        BlockSpec b;
        b.info = {"S2F.7", 2, std::nullopt, 3, 2, pos(0, 1), fixed(8)};
        b.accepts = [head_ok](std::int64_t r, int slot, const FT& f) {
            return slot == 0 ? head_ok(f) : is_i(f, r - 1);
        };
        b.d_gamma = [](std::int64_t r) { return Rational(-(8 * r - 8), 8 * r - 6); };
        b.build = [](std::int64_t r, const FT* f, const FT* f2) {
            Chains c{{cat({{4, r, 5}, two(r - 3), {3, 2, 2}})}, {}};
            s2f_head_78(c, *f);
            add_t(c.t, f2->n - r + 1, 4, 1);
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S2F.8", 2, std::nullopt, 4, 2, pos(0, 1), [](std::int64_t r) { return r + 9; }};
        b.accepts = [head_ok](std::int64_t r, int slot, const FT& f) {
            return slot == 0 ? head_ok(f) : is_i(f, r);
        };
        b.d_gamma = [](std::int64_t r) { return Rational(-(4 * r - 6), 4 * r - 5); };
        b.build = [](std::int64_t r, const FT* f, const FT* f2) {
            Chains c{{cat({{4, r + 1}, two(r - 4), {3, 2, 2}}), cat({{4, r + 3}, two(r - 2), {3, 2, 2}})}, {}};
            s2f_head_78(c, *f);
            add_t(c.t, f2->n - r, 4, 1);
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"S2F.9", 2, 3, 3, 2, pos(0, 2), fixed(6)};
        b.accepts = [](std::int64_t, int slot, const FT& f) {
            if (slot == 0) return is_i(f, 2) || is_kind(f, FT::III) || is_kind(f, FT::IV);
            return is_i(f, 2) || is_kind(f, FT::III);
        };
        b.d_gamma = [q](std::int64_t) { return q(-12, 13); };
        b.build = [](std::int64_t, const FT* f, const FT* f2) {
            Chains c{{{3, 3, 3, 4, 3, 2}}, {}};
            if (is_kind(*f, FT::IV)) {
                c.t.push_back({4});
                c.t.push_back({4});
            } else {
                add_t(c.t, eff_n(*f) - 2, 2, 1);
            }
            if (is_kind(*f2, FT::III))
                c.t.push_back({2, 5});
            else
                add_t(c.t, f2->n - 2, 3, 1);
            return c;
        };
        s.push_back(b);
    }
    {
        BlockSpec b;
        b.info = {"FIB", std::nullopt, std::nullopt, 0, 1, pos(0, 0), fixed(4)};
        b.accepts = [](std::int64_t, int, const FT& f) { return f.kind != FT::I || f.n >= 1; };
        b.build = [](std::int64_t, const FT* f, const FT*) {
            Chains c{{{2, 5}}, {}};
            if (is_i(*f, 2)) add_t(c.t, f->n - 1, 2, 1);
            if (is_kind(*f, FT::III)) c.t.push_back({4});
            // Assumed by analogy with I_4; the IV picture is not spelled out.
            if (is_kind(*f, FT::IV)) c.t.push_back({3, 3});
            return c;
        };
        s.push_back(b);
    }
    return s;
}

const std::vector<BlockSpec>& block_specs()
{
    static const std::vector<BlockSpec> s = build_block_specs();
    return s;
}

const BlockSpec& block_spec(const std::string& id)
{
    for (const auto& s : block_specs())
        if (s.info.id == id) return s;
    throw ValidationError("unknown block " + id);
}

// Effective r: FIB has none, fixed-r blocks may omit it.
std::optional<std::int64_t> resolve_r(const BlockSpec& s, const BlockParams& p)
{
    if (s.info.id == "FIB") {
        if (p.r) throw ValidationError("FIB takes no r");
        return std::nullopt;
    }
    if (s.info.fixed_r) {
        if (p.r && *p.r != *s.info.fixed_r)
            throw ValidationError(s.info.id + " requires r = " + std::to_string(*s.info.fixed_r));
        return s.info.fixed_r;
    }
    if (!p.r) throw ValidationError(s.info.id + " requires r");
    if (*p.r < s.info.min_r) throw ValidationError(s.info.id + " requires r >= " + std::to_string(s.info.min_r));
    return p.r;
}

std::string check_params(const BlockSpec& s, const BlockParams& p, std::int64_t& r)
{
    std::optional<std::int64_t> rr;
    try {
        rr = resolve_r(s, p);
    } catch (const ValidationError& e) {
        return e.what();
    }
    r = rr.value_or(0);
    const std::optional<FT>* slots[2] = {&p.f, &p.f2};
    for (int i = 0; i < 2; ++i) {
        const auto& f = *slots[i];
        std::string name = i == 0 ? "F" : "F'";
        if (i >= s.info.fiber_slots) {
            if (f) return s.info.id + " takes no fiber " + name;
            continue;
        }
        if (!f) return s.info.id + " requires fiber " + name;
        if (f->kind == FT::I && f->n < 1) return "I_n requires n >= 1";
        if (!s.accepts(r, i, *f)) return s.info.id + " does not accept " + name + " = " + to_string(*f) + " at r = " + std::to_string(r);
    }
    return {};
}

std::int64_t fiber_euler(const BlockParams& p)
{
    std::int64_t e = 0;
    if (p.f) e += p.f->euler();
    if (p.f2) e += p.f2->euler();
    return e;
}

}  // namespace

std::int64_t FiberType::euler() const
{
    switch (kind) {
    case I: return n;
    case II: return 2;
    case III: return 3;
    case IV: return 4;
    }
    return 0;
}

std::string to_string(const FiberType& f)
{
    switch (f.kind) {
    case FiberType::I: return "I" + std::to_string(f.n);
    case FiberType::II: return "II";
    case FiberType::III: return "III";
    case FiberType::IV: return "IV";
    }
    return "?";
}

FiberType parse_fiber(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (c != '_' && c != ' ') t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (t == "II") return {FiberType::II, 0};
    if (t == "III") return {FiberType::III, 0};
    if (t == "IV") return {FiberType::IV, 0};
    if (t.size() >= 2 && t[0] == 'I' && std::all_of(t.begin() + 1, t.end(), ::isdigit)) {
        auto n = std::stoll(t.substr(1));
        if (n < 1) throw ValidationError("I_n requires n >= 1");
        return FiberType::In(n);
    }
    throw ValidationError("bad fiber type: " + text);
}

const std::vector<BlockInfo>& block_catalog()
{
    static const std::vector<BlockInfo> out = [] {
        std::vector<BlockInfo> v;
        for (const auto& s : block_specs()) v.push_back(s.info);
        return v;
    }();
    return out;
}

const BlockInfo& block_info(const std::string& id) { return block_spec(id).info; }

bool block_accepts(const std::string& id, const BlockParams& params)
{
    std::int64_t r = 0;
    return check_params(block_spec(id), params, r).empty();
}

BlockInstance instantiate_block(const std::string& id, const BlockParams& params)
{
    const BlockSpec& s = block_spec(id);
    std::int64_t r = 0;
    if (auto err = check_params(s, params, r); !err.empty()) throw ValidationError(err);

    BlockInstance b;
    b.id = id;
    b.params = params;
    if (s.info.id != "FIB") b.params.r = r;
    const FT* f = params.f ? &*params.f : nullptr;
    const FT* f2 = params.f2 ? &*params.f2 : nullptr;
    auto chains = s.build(r, f, f2);
    b.chains = std::move(chains.t);
    b.du_val = std::move(chains.du_val);
    b.j_class = s.info.j_class;
    if (s.info.id == "FIB") {
        b.local_k2 = -1;
        b.complete_fibers = 1;
        b.singular_fibers = 1;
    } else {
        b.local_k2 = r - 3 + *s.info.j_class;
        b.complete_fibers = *s.info.j_class;
        b.singular_fibers = s.info.fiber_slots + s.extra_fibers(r);
        b.section_discrepancy = s.d_gamma(r);
    }
    b.euler_cost = fiber_euler(params) + s.extra_cost(r);

    std::int64_t contribution = 0;
    for (const auto& c : b.chains) {
        auto t = t_recognize(c);
        if (!t) throw StructuralError(id + " produced a non-T chain " + chain_to_string(c));
        contribution += static_cast<std::int64_t>(c.size()) - t->d + 1;
    }
    b.blowups = contribution - b.local_k2;
    return b;
}

std::int64_t k2_global(std::int64_t k_s2, std::int64_t m,
                       const std::vector<std::pair<std::int64_t, std::int64_t>>& chains)
{
    std::int64_t k2 = k_s2 - m;
    for (auto [len, d] : chains) {
        if (len < 1 || d < 1) throw ValidationError("chain length and d must be >= 1");
        k2 += len - d + 1;
    }
    return k2;
}

InvariantsRecord blowdown_invariants(std::int64_t pg, std::int64_t N)
{
    if (pg < 2) throw ValidationError("blowdown_invariants requires p_g >= 2");
    if (N < 0) throw ValidationError("blowdown_invariants requires N >= 0");
    InvariantsRecord inv;
    inv.pg = pg;
    inv.N = N;
    inv.K2 = pg - 2 + N;
    inv.chi_top = 12 * (1 + pg) - inv.K2;
    inv.b_plus = 2 * pg + 1;
    inv.b_minus = 9 * pg + 11 - N;
    inv.sigma = -7 * pg - 10 + N;
    inv.homeo = std::to_string(2 * pg + 1) + "CP² # " + std::to_string(10 * pg + 9 - inv.K2) + "CP̄²";
    return inv;
}

SmallSurfaceReport assemble(const SmallSurfaceConfig& config)
{
    if (config.pg < 2) throw ValidationError("assemble requires p_g >= 2");
    if (config.main.id == "FIB") throw ValidationError("main block must not be a FIB");
    for (const auto& f : config.fibs)
        if (f.id != "FIB") throw ValidationError("fibs must be FIB blocks, got " + f.id);
    auto s = static_cast<std::int64_t>(config.fibs.size());
    std::int64_t r = config.main.params.r.value_or(0);
    if (r != config.pg + 1 + 2 * s)
        throw ValidationError("block r = " + std::to_string(r) + " but p_g + 1 + 2s = " +
                              std::to_string(config.pg + 1 + 2 * s));

    SmallSurfaceReport rep;
    rep.pg = config.pg;
    rep.block = config.main.id;
    std::int64_t k2_blocks = 0, blowups = 0, cost = 0, fibers = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> lengths;
    auto absorb = [&](const BlockInstance& b) {
        k2_blocks += b.local_k2;
        blowups += b.blowups;
        cost += b.euler_cost;
        fibers += b.singular_fibers;
        rep.N += b.complete_fibers;
        for (const auto& c : b.chains) {
            auto t = *t_recognize(c);
            rep.chains.push_back(c);
            rep.singularities.push_back(t);
            lengths.emplace_back(static_cast<std::int64_t>(c.size()), t.d);
        }
        for (const auto& c : b.du_val) {
            rep.du_val.push_back(c);
            // A_k contributes k - (k + 1) + 1 = 0.
            auto k = static_cast<std::int64_t>(c.size());
            lengths.emplace_back(k, k + 1);
        }
    };
    absorb(config.main);
    for (const auto& f : config.fibs) absorb(f);
    std::sort(rep.singularities.begin(), rep.singularities.end());

    rep.blowups = blowups;
    rep.K2 = k2_blocks;
    std::int64_t k2_chains = k2_global(0, blowups, lengths);
    std::int64_t k2_formula = config.pg - 2 + rep.N;
    std::int64_t k2_class = config.pg - 2 + s + config.main.j_class.value_or(0);
    if (k2_chains != rep.K2 || k2_formula != rep.K2 || k2_class != rep.K2)
        throw StructuralError("K^2 bookkeeping disagrees: blocks " + std::to_string(rep.K2) + ", chains " +
                              std::to_string(k2_chains) + ", p_g - 2 + N " + std::to_string(k2_formula));

    rep.l = static_cast<std::int64_t>(rep.chains.size());
    rep.law_ok = rep.l >= std::max<std::int64_t>(1, rep.N - 1);
    rep.euler_budget = 12 * (config.pg + 1);
    // A semi-stable fiber forces at least three singular fibers, each with e >= 1.
    rep.euler_used = cost + std::max<std::int64_t>(0, 3 - fibers);
    rep.euler_ok = rep.euler_used <= rep.euler_budget;

    rep.nef_ok = true;
    for (std::size_t i = 0; i < config.fibs.size(); ++i) {
        Rational ke = Rational(-2, 3) - config.main.section_discrepancy.value_or(Rational(0));
        bool ok = ke >= 0;
        rep.nef_checks.push_back({i, ke, ok});
        rep.nef_ok = rep.nef_ok && ok;
    }
    rep.invariants = blowdown_invariants(config.pg, rep.N);
    rep.invariants.homeo_caveat = config.main.id == "S2F.7";
    return rep;
}

std::optional<SmallSurfaceConfig> cheapest_config(std::int64_t pg, const std::string& block, std::int64_t s)
{
    const BlockSpec& sp = block_spec(block);
    if (block == "FIB") throw ValidationError("FIB is not a main block");
    if (pg < 2 || s < 0) throw ValidationError("cheapest_config requires p_g >= 2 and s >= 0");
    std::int64_t r = pg + 1 + 2 * s;
    if (sp.info.fixed_r ? r != *sp.info.fixed_r : r < sp.info.min_r) return std::nullopt;
    if (s > 0 && Rational(-2, 3) - sp.d_gamma(r) < 0) return std::nullopt;

    // Per slot: the special fibers plus the smallest admissible I_n. The
    // Euler cost grows with n, so larger I_n are never cheaper.
    std::vector<std::vector<FT>> options(static_cast<std::size_t>(sp.info.fiber_slots));
    for (int slot = 0; slot < sp.info.fiber_slots; ++slot) {
        for (auto k : {FT::II, FT::III, FT::IV})
            if (sp.accepts(r, slot, {k, 0})) options[static_cast<std::size_t>(slot)].push_back({k, 0});
        for (std::int64_t n = 1; n <= r + 8; ++n)
            if (sp.accepts(r, slot, FT::In(n))) {
                options[static_cast<std::size_t>(slot)].push_back(FT::In(n));
                break;
            }
        if (options[static_cast<std::size_t>(slot)].empty()) return std::nullopt;
    }
    std::vector<BlockParams> cands;
    if (sp.info.fiber_slots == 0) cands.push_back({r, std::nullopt, std::nullopt});
    if (sp.info.fiber_slots == 1)
        for (const auto& f : options[0]) cands.push_back({r, f, std::nullopt});
    if (sp.info.fiber_slots == 2)
        for (const auto& f : options[0])
            for (const auto& f2 : options[1]) cands.push_back({r, f, f2});

    std::int64_t budget = 12 * (pg + 1);
    std::optional<BlockParams> best;
    std::int64_t best_used = 0;
    for (const auto& p : cands) {
        std::int64_t fibers = sp.info.fiber_slots + sp.extra_fibers(r) + s;
        std::int64_t used = fiber_euler(p) + sp.extra_cost(r) + s + std::max<std::int64_t>(0, 3 - fibers);
        if (used <= budget && (!best || used < best_used)) {
            best = p;
            best_used = used;
        }
    }
    if (!best) return std::nullopt;
    SmallSurfaceConfig cfg;
    cfg.pg = pg;
    cfg.main = instantiate_block(block, *best);
    BlockInstance fib = instantiate_block("FIB", {std::nullopt, FT::In(1), std::nullopt});
    cfg.fibs.assign(static_cast<std::size_t>(s), fib);
    return cfg;
}

GeographyResult geography(std::int64_t pg)
{
    if (pg < 3) throw ValidationError("geography requires p_g >= 3");
    GeographyResult g;
    g.pg = pg;
    g.rational_max = Rational(14 * pg + 11, 3);
    std::int64_t budget = 12 * (pg + 1);
    for (const auto& sp : block_specs()) {
        if (sp.info.id == "FIB") continue;
        std::optional<BlockMaximum> best;
        // Each FIB costs at least one unit of the budget.
        for (std::int64_t s = 0; s <= budget; ++s) {
            auto cfg = cheapest_config(pg, sp.info.id, s);
            if (!cfg) continue;
            auto rep = assemble(*cfg);
            if (!rep.ok()) continue;
            g.witnesses[rep.K2].push_back({sp.info.id, s, rep.K2, rep.euler_used});
            if (!best || rep.K2 > best->k2_max) best = BlockMaximum{sp.info.id, s, rep.K2};
        }
        if (best) {
            g.block_maxima.push_back(*best);
            if (sp.info.id == "S2F.7") g.s2f7_attains_rational_max = Rational(best->k2_max) == g.rational_max;
        }
    }
    if (g.witnesses.empty()) throw StructuralError("no small surface fits the budget");
    g.min_k2 = g.witnesses.begin()->first;
    g.max_k2 = g.witnesses.rbegin()->first;
    g.all_realizable = true;
    for (auto k = g.min_k2; k <= g.max_k2; ++k)
        if (!g.witnesses.count(k)) g.all_realizable = false;
    return g;
}

SmallSurfaceReport lee_park(std::int64_t pg)
{
    if (pg < 3) throw ValidationError("lee_park requires p_g >= 3");
    Chain c = cat({{pg + 1}, two(pg - 3)});
    auto t = t_recognize(c);
    if (!t || !t->is_wahl()) throw StructuralError("Lee-Park chain is not Wahl");
    SmallSurfaceReport rep;
    rep.pg = pg;
    rep.block = "LeePark";
    rep.chains = {c, c};
    rep.singularities = {*t, *t};
    auto len = static_cast<std::int64_t>(c.size());
    rep.K2 = k2_global(0, 0, {{len, 1}, {len, 1}});
    rep.N = rep.K2 - (pg - 2);
    rep.l = 2;
    rep.euler_budget = 12 * (pg + 1);
    rep.euler_ok = true;
    rep.nef_ok = true;
    // The singularity-count law is a statement about small surfaces only.
    rep.law_ok = true;
    rep.invariants = blowdown_invariants(pg, rep.N);
    return rep;
}

namespace {

BlockInstance fib(std::int64_t n) { return instantiate_block("FIB", {std::nullopt, FT::In(n), std::nullopt}); }

SmallSurfaceConfig config(std::int64_t pg, const std::string& id, std::int64_t r, std::optional<FT> f,
                          std::optional<FT> f2, std::vector<BlockInstance> fibs)
{
    SmallSurfaceConfig c;
    c.pg = pg;
    c.main = instantiate_block(id, {r, f, f2});
    c.fibs = std::move(fibs);
    return c;
}

std::vector<BlockInstance> ones(std::int64_t k, std::vector<BlockInstance> head = {})
{
    for (std::int64_t i = 0; i < k; ++i) head.push_back(fib(1));
    return head;
}

using P = std::vector<std::int64_t>;
using Items = std::vector<TableItem>;

HorikawaFamily fam(std::int64_t pg, const std::string& roman, const std::string& block, std::vector<std::string> names,
                   std::optional<std::int64_t> stated, std::function<Items(const P&)> table,
                   std::function<SmallSurfaceConfig(const P&)> inst)
{
    HorikawaFamily h;
    h.pg = pg;
    h.label = "p_g=" + std::to_string(pg) + " (" + roman + ")";
    h.block_tag = block;
    h.param_names = std::move(names);
    h.stated_bound = stated;
    h.table_chains = std::move(table);
    h.instantiate = std::move(inst);
    if (block == "LeePark")
        h.smoothability_note = "each (-(p_g+1))-curve is a section";
    else if (block == "S2F.7")
        h.smoothability_note = "simple connectivity of the rational blowdown is open";
    else
        h.smoothability_note = "parametric chains listed by their M-resolution";
    return h;
}

// Largest t such that putting t on any single parameter stays in budget.
std::optional<std::int64_t> budget_bound(const HorikawaFamily& h)
{
    if (!h.instantiate || h.param_names.empty()) return std::nullopt;
    std::int64_t limit = 12 * (h.pg + 1);
    std::optional<std::int64_t> bound;
    for (std::size_t i = 0; i < h.param_names.size(); ++i) {
        std::int64_t lo = -1;
        for (std::int64_t t = 0; t <= limit; ++t) {
            P p(h.param_names.size(), 0);
            p[i] = t;
            if (!assemble(h.instantiate(p)).euler_ok) break;
            lo = t;
        }
        if (lo < 0) return std::nullopt;
        bound = bound ? std::min(*bound, lo) : lo;
    }
    return bound;
}

std::vector<HorikawaFamily> table_pg3()
{
    const std::int64_t pg = 3;
    std::vector<HorikawaFamily> v;
    v.push_back(fam(pg, "i", "LeePark", {}, std::nullopt, [](const P&) { return Items{{2, {4}, 1}}; }, {}));
    v.push_back(fam(pg, "ii", "S0F", {"n"}, 43,
        [](const P& p) { return Items{{1, {2, 2, 6}, 1}, {1, {2, 5}, 1}, {p[0], {4}, 1}}; },
        [](const P& p) { return config(3, "S0F", 6, std::nullopt, std::nullopt, {fib(p[0] + 1)}); }));
    v.push_back(fam(pg, "iii", "S1F.2", {"n"}, 44,
        [](const P& p) { return Items{{1, {4, 5, 3, 2, 2}, 1}, {p[0], {6, 2, 2}, 1}}; },
        [](const P& p) { return config(3, "S1F.2", 4, FT::In(p[0] + 2), std::nullopt, {}); }));
    v.push_back(fam(pg, "iv", "S1F.4", {"n"}, 43,
        [](const P& p) { return Items{{1, {2, 4, 3, 3}, 2}, {p[0], {4}, 1}}; },
        [](const P& p) { return config(3, "S1F.4", 4, FT::In(p[0] + 2), std::nullopt, {}); }));
    return v;
}

std::vector<HorikawaFamily> table_pg4()
{
    const std::int64_t pg = 4;
    std::vector<HorikawaFamily> v;
    v.push_back(fam(pg, "i", "LeePark", {}, std::nullopt, [](const P&) { return Items{{2, {5, 2}, 1}}; }, {}));
    v.push_back(fam(pg, "ii", "S0F", {"n"}, 52,
        [](const P& p) { return Items{{1, {9, 2, 2, 2, 2, 2}, 1}, {2, {2, 5}, 1}, {p[0], {4}, 1}}; },
        [](const P& p) { return config(4, "S0F", 9, std::nullopt, std::nullopt, {fib(p[0] + 1), fib(1)}); }));
    v.push_back(fam(pg, "iii", "S1F.2", {"n1", "n2"}, 53,
        [](const P& p) {
            return Items{{1, {7, 8, 2, 2, 2, 3, 2, 2, 2, 2, 2}, 1}, {1, {2, 5}, 1}, {p[0], {4}, 1},
                         {p[1], {9, 2, 2, 2, 2, 2}, 1}};
        },
        [](const P& p) { return config(4, "S1F.2", 7, FT::In(p[1] + 5), std::nullopt, {fib(p[0] + 1)}); }));
    v.push_back(fam(pg, "iv", "S1F.4", {"n"}, 52,
        [](const P& p) { return Items{{1, {2, 7, 3, 2, 2, 2, 3}, 2}, {1, {2, 5}, 1}, {p[0], {4}, 1}}; },
        [](const P& p) { return config(4, "S1F.4", 7, FT::In(5), std::nullopt, {fib(p[0] + 1)}); }));
    v.push_back(fam(pg, "v", "S2F.3", {"n1", "n2"}, 54,
        [](const P& p) { return Items{{1, {3, 2, 2, 3, 5, 5, 2}, 1}, {p[0], {4}, 1}, {p[1], {5, 2}, 1}}; },
        [](const P& p) { return config(4, "S2F.3", 5, FT::In(p[0] + 4), FT::In(p[1] + 1), {}); }));
    v.push_back(fam(pg, "vi", "S2F.4", {"n1", "n2"}, 52,
        [](const P& p) {
            return Items{{1, {3, 2, 2, 2, 2, 3, 8, 2}, 2}, {1, {3, 2, 6, 2}, 1}, {p[0], {4}, 1}, {p[1], {2, 5}, 1}};
        },
        [](const P& p) { return config(4, "S2F.4", 5, FT::In(p[0] + 6), FT::In(p[1] + 1), {}); }));
    v.push_back(fam(pg, "vii", "S2F.5", {"n1", "n2"}, 52,
        [](const P& p) {
            return Items{{1, {3, 2, 2, 2, 3, 7, 2}, 2}, {1, {3, 5, 3, 2}, 1}, {p[0], {4}, 1}, {p[1], {2, 5}, 1}};
        },
        [](const P& p) { return config(4, "S2F.5", 5, FT::In(p[0] + 5), FT::In(p[1] + 2), {}); }));
    v.push_back(fam(pg, "viii", "S2F.6", {"n1", "n2"}, 52,
        [](const P& p) {
            return Items{{1, {3, 7, 2, 2, 3, 2}, 1}, {1, {3, 8, 2, 2, 2, 3, 2}, 1}, {1, {3, 5, 2}, 1},
                         {p[0], {4}, 1}, {p[1], {2, 5}, 1}};
        },
        [](const P& p) { return config(4, "S2F.6", 5, FT::In(p[0] + 2), FT::In(p[1] + 5), {}); }));
    v.push_back(fam(pg, "ix", "S2F.7", {"n1", "n2"}, 54,
        [](const P& p) { return Items{{1, {4, 5, 5, 2, 2, 3, 2, 2}, 1}, {p[0], {4}, 1}, {p[1], {6, 2, 2}, 1}}; },
        [](const P& p) { return config(4, "S2F.7", 5, FT::In(p[0] + 1), FT::In(p[1] + 4), {}); }));
    v.push_back(fam(pg, "x", "S2F.8", {"n1", "n2"}, 53,
        [](const P& p) {
            return Items{{1, {4, 6, 2, 3, 2, 2}, 1}, {1, {4, 8, 2, 2, 2, 3, 2, 2}, 1}, {p[0], {4}, 1},
                         {p[1], {6, 2, 2}, 1}};
        },
        [](const P& p) { return config(4, "S2F.8", 5, FT::In(p[0] + 1), FT::In(p[1] + 5), {}); }));
    return v;
}

std::vector<HorikawaFamily> table_general(std::int64_t pg)
{
    const std::int64_t p = pg;
    std::vector<HorikawaFamily> v;
    v.push_back(fam(p, "i", "LeePark", {}, std::nullopt,
        [p](const P&) { return Items{{2, cat({{p + 1}, two(p - 3)}), 1}}; }, {}));
    v.push_back(fam(p, "ii", "S0F", {"n"}, 8 * p + 20,
        [p](const P& x) {
            return Items{{1, cat({{3 * p - 3}, two(3 * p - 7)}), 1}, {p - 2, {2, 5}, 1}, {x[0], {4}, 1}};
        },
        [p](const P& x) { return config(p, "S0F", 3 * p - 3, std::nullopt, std::nullopt, ones(p - 3, {fib(x[0] + 1)})); }));
    v.push_back(fam(p, "iii", "S1F.2", {"n1", "n2"}, 8 * p + 22,
        [p](const P& x) {
            return Items{{1, cat({{3 * p - 5, 3 * p - 4}, two(3 * p - 9), {3}, two(3 * p - 7)}), 1},
                         {p - 3, {2, 5}, 1}, {x[0], {4}, 1}, {x[1], cat({{3 * p - 3}, two(3 * p - 7)}), 1}};
        },
        [p](const P& x) {
            std::int64_t r = 3 * p - 5;
            return config(p, "S1F.2", r, FT::In(x[1] + r - 2), std::nullopt, ones(p - 4, {fib(x[0] + 1)}));
        }));
    v.push_back(fam(p, "iv", "S1F.4", {"n"}, 8 * p + 20,
        [p](const P& x) {
            return Items{{1, cat({{2, 3 * p - 5, 3}, two(3 * p - 9), {3}}), 2}, {p - 3, {2, 5}, 1}, {x[0], {4}, 1}};
        },
        [p](const P& x) {
            std::int64_t r = 3 * p - 5;
            return config(p, "S1F.4", r, FT::In(r - 2), std::nullopt, ones(p - 4, {fib(x[0] + 1)}));
        }));
    std::int64_t r = 3 * p - 7;
    v.push_back(fam(p, "v", "S2F.4", {"n1", "n2"}, 8 * p + 21,
        [p](const P& x) {
            return Items{{1, cat({{3}, two(3 * p - 8), {3, 3 * p - 4, 2}}), 2}, {p - 4 + x[0], {2, 5}, 1},
                         {1, {3, 2, 6, 2}, 1}, {x[1], {4}, 1}};
        },
        [p, r](const P& x) { return config(p, "S2F.4", r, FT::In(x[1] + r + 1), FT::In(x[0] + 1), ones(p - 4)); }));
    v.push_back(fam(p, "vi", "S2F.5", {"n1", "n2"}, 8 * p + 21,
        [p](const P& x) {
            return Items{{1, cat({{3}, two(3 * p - 9), {3, 3 * p - 5, 2}}), 2}, {p - 4 + x[0], {2, 5}, 1},
                         {1, {3, 5, 3, 2}, 1}, {x[1], {4}, 1}};
        },
        [p, r](const P& x) { return config(p, "S2F.5", r, FT::In(x[1] + r), FT::In(x[0] + 2), ones(p - 4)); }));
    v.push_back(fam(p, "vii", "S2F.6", {"n1", "n2"}, 8 * p + 21,
        [p](const P& x) {
            return Items{{1, cat({{3, 3 * p - 5}, two(3 * p - 10), {3, 2}}), 1},
                         {1, cat({{3, 3 * p - 4}, two(3 * p - 9), {3, 2}}), 1}, {p - 4 + x[0], {2, 5}, 1},
                         {1, {3, 5, 2}, 1}, {x[1], {4}, 1}};
        },
        [p, r](const P& x) { return config(p, "S2F.6", r, FT::In(x[1] + 2), FT::In(x[0] + r), ones(p - 4)); }));
    v.push_back(fam(p, "viii", "S2F.7", {"n1", "n2"}, 8 * p + 23,
        [p](const P& x) {
            return Items{{1, cat({{4, 3 * p - 7, 5}, two(3 * p - 10), {3, 2, 2}}), 1}, {p - 4, {2, 5}, 1},
                         {x[0], {4}, 1}, {x[1], {6, 2, 2}, 1}};
        },
        [p, r](const P& x) { return config(p, "S2F.7", r, FT::In(x[0] + 1), FT::In(x[1] + r - 1), ones(p - 4)); }));
    v.push_back(fam(p, "ix", "S2F.8", {"n1", "n2"}, 8 * p + 22,
        [p](const P& x) {
            return Items{{1, cat({{4, 3 * p - 6}, two(3 * p - 11), {3, 2, 2}}), 1},
                         {1, cat({{4, 3 * p - 4}, two(3 * p - 9), {3, 2, 2}}), 1}, {p - 4, {2, 5}, 1},
                         {x[0], {4}, 1}, {x[1], {6, 2, 2}, 1}};
        },
        [p, r](const P& x) { return config(p, "S2F.8", r, FT::In(x[0] + 1), FT::In(x[1] + r), ones(p - 4)); }));
    return v;
}

}  // namespace

std::vector<HorikawaFamily> horikawa_families(std::int64_t pg)
{
    if (pg < 3) throw ValidationError("horikawa_families requires p_g >= 3");
    auto v = pg == 3 ? table_pg3() : pg == 4 ? table_pg4() : table_general(pg);
    for (auto& h : v) h.computed_bound = budget_bound(h);
    return v;
}

SmallSurfaceReport realize(const HorikawaFamily& fam, const std::vector<std::int64_t>& params)
{
    if (params.size() != fam.param_names.size())
        throw ValidationError(fam.label + " takes " + std::to_string(fam.param_names.size()) + " parameters");
    for (auto x : params)
        if (x < 0) throw ValidationError("family parameters must be >= 0");
    if (!fam.instantiate) return lee_park(fam.pg);
    return assemble(fam.instantiate(params));
}

std::int64_t k2_multisection(std::int64_t e, std::int64_t e_prime, std::int64_t N, std::int64_t n_prime,
                             std::int64_t n_star, std::int64_t t30, std::int64_t pg)
{
    if (e < 0 || e_prime < 0 || N < 0 || n_prime < 0 || n_star < 0 || t30 < 0 || pg < 0)
        throw ValidationError("k2_multisection counts must be >= 0");
    if (n_prime > 0 && (e_prime < n_prime || e_prime > e * n_prime))
        throw ValidationError("k2_multisection requires N' <= e' <= e N'");
    return (N + pg - 2) * e + e_prime - n_prime - n_star + t30;
}

Rational bmy_bound(std::int64_t pg, const std::vector<TType>& sings)
{
    Rational sum = 0;
    for (const auto& t : sings) {
        make_ttype(t.d, t.n, t.a);
        sum += Rational(t.d) - Rational(1, t.d * t.n * t.n);
    }
    return Rational(9 * (1 + pg)) - Rational(3, 4) * sum;
}

}  // namespace tsurf
