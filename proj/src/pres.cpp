#include "tsurf/pres.hpp"

#include "tsurf/zcf.hpp"

#include <algorithm>
#include <optional>

namespace tsurf {

namespace {

// Working chain for the algorithm. Dual entries carry their index j
// (1-based); the pending connecting curve is a link placeholder whose
// self-intersection is only known after the contractions.
struct Entry {
    std::int64_t value = 0;
    int label = 0;
    bool link = false;
};

// Contracts the (-1)-curve at i. Returns how many link placeholders were
// adjacent; those absorb the contraction into the pending c.
int contract(std::vector<Entry>& ch, std::size_t i)
{
    int hits = 0;
    for (std::size_t j : {i - 1, i + 1}) {
        if (j >= ch.size()) continue;
        if (ch[j].link)
            ++hits;
        else
            ch[j].value -= 1;
    }
    ch.erase(ch.begin() + static_cast<std::ptrdiff_t>(i));
    return hits;
}

std::size_t find_label(const std::vector<Entry>& ch, int label)
{
    for (std::size_t t = 0; t < ch.size(); ++t)
        if (!ch[t].link && ch[t].label == label) return t;
    throw StructuralError("lost dual entry " + std::to_string(label));
}

Rational end_discrepancy(const PNode& node, bool first)
{
    if (!node.is_t()) return Rational(0);
    auto dv = discrepancies(node.chain());
    return first ? dv.deltas.front() : dv.deltas.back();
}

}  // namespace

Chain PNode::chain() const
{
    if (is_t()) return t_expand(TType{d, n, a});
    return Chain(static_cast<std::size_t>(d - 1), 2);
}

PResolution compute_p_resolution(const Int& delta, const Int& omega, const Chain& zcf)
{
    make_fraction(delta, omega);
    Chain b = dual(delta, omega);
    std::size_t s = b.size();
    if (zcf.size() != s || s < 2) throw ValidationError("zero chain length must match the dual chain");
    for (std::size_t j = 0; j < s; ++j)
        if (zcf[j] < 1 || zcf[j] > b[j]) throw ValidationError("zero chain is not bounded by the dual chain");
    if (!is_zero_chain(zcf)) throw ValidationError("not a zero continued fraction");

    PResolution out;
    out.source = {delta, omega};
    out.zcf = zcf;
    std::vector<int> pos;
    for (std::size_t j = 0; j < s; ++j) {
        out.d_deficits.push_back(b[j] - zcf[j]);
        if (b[j] > zcf[j]) pos.push_back(static_cast<int>(j + 1));
    }
    if (pos.empty()) throw StructuralError("zero chain equals the dual chain");

    std::vector<Entry> ch;
    for (std::size_t j = s; j >= 1; --j) ch.push_back({b[j - 1], static_cast<int>(j), false});
    ch.push_back({1, 0, false});

    bool finished = false;
    for (std::size_t idx = 0; idx < pos.size(); ++idx) {
        int j = pos[idx];
        bool last = idx + 1 == pos.size();
        std::size_t li = find_label(ch, j);
        Chain q;
        for (std::size_t t = li + 1; t + 1 < ch.size(); ++t) q.push_back(ch[t].value);
        std::int64_t n = 1, a = 1;
        if (!q.empty()) {
            std::reverse(q.begin(), q.end());
            for (auto e : q)
                if (e < 1) throw StructuralError("non-positive entry while reading a node");
            auto [p, qq] = evaluate(q);
            if (p <= 0 || qq <= 0 || p < qq) throw StructuralError("node fraction out of range");
            if (p != qq) {
                n = static_cast<std::int64_t>(p);
                a = static_cast<std::int64_t>(p - qq);
            }
        }
        PNode node{out.d_deficits[static_cast<std::size_t>(j - 1)], n, a};
        out.nodes.push_back(node);
        for (auto e : node.chain()) ch.push_back({e, 0, false});
        if (!last) ch.push_back({0, 0, true});

        int hits = 0;
        while (true) {
            std::size_t start = last ? 0 : find_label(ch, pos[idx + 1]) + 1;
            std::optional<std::size_t> c;
            for (std::size_t t = start; t < ch.size(); ++t)
                if (!ch[t].link && ch[t].value == 1) {
                    c = t;
                    break;
                }
            if (!c) break;
            if (last && ch.size() == 2 && ch[0].value == 1 && ch[1].value == 1) {
                ch = {{0, 0, false}};
                finished = true;
                break;
            }
            hits += contract(ch, *c);
            for (const auto& e : ch)
                if (!e.link && e.value < 1) throw StructuralError("contraction produced a non-positive curve");
        }
        if (!last) {
            out.links.push_back(1 + hits);
            for (auto& e : ch)
                if (e.link) e = {1, 0, false};
        }
    }
    if (!finished) throw StructuralError("algorithm did not end at the zero chain");
    return out;
}

std::vector<PResolution> enumerate_p_resolutions(const Int& delta, const Int& omega, bool cross_only)
{
    std::vector<PResolution> out;
    for (const auto& k : cross_only ? k_cross_set(delta, omega) : k_set(delta, omega)) {
        auto p = compute_p_resolution(delta, omega, k);
        auto report = verify_p_resolution(p);
        if (!report.ok())
            throw StructuralError("P-resolution for " + chain_to_string(k) + " fails verification");
        out.push_back(std::move(p));
    }
    return out;
}

PReport verify_p_resolution(const PResolution& p)
{
    PReport r;
    Chain b = dual(p.source.delta, p.source.omega);

    r.node_validity = p.nodes.size() == p.links.size() + 1;
    for (const auto& nd : p.nodes) {
        bool ok = nd.d >= 1 && (nd.is_t() ? (nd.a > 0 && nd.a < nd.n && gcd(Int(nd.a), Int(nd.n)) == 1)
                                          : (nd.n == 1 && nd.a == 1));
        if (!ok) r.diagnostics.push_back("invalid node");
        r.node_validity = r.node_validity && ok;
    }
    for (auto c : p.links)
        if (c < 1) r.node_validity = false;

    if (r.node_validity) {
        Chain seq(b.rbegin(), b.rend());
        seq.push_back(1);
        for (std::size_t i = 0; i < p.nodes.size(); ++i) {
            auto c = p.nodes[i].chain();
            seq.insert(seq.end(), c.begin(), c.end());
            if (i < p.links.size()) seq.push_back(p.links[i]);
        }
        try {
            r.zero_reduction = blow_down(GenChain{seq}).terminal();
        } catch (const StructuralError& e) {
            r.diagnostics.push_back(e.what());
        }
        if (!r.zero_reduction) r.diagnostics.push_back("combined chain does not contract to [0]");

        r.ampleness = true;
        for (std::size_t i = 0; i < p.links.size(); ++i) {
            Rational k = Rational(p.links[i] - 2) - end_discrepancy(p.nodes[i], false) -
                         end_discrepancy(p.nodes[i + 1], true);
            r.k_dot_gamma.push_back(k);
            if (k <= 0) r.ampleness = false;
        }
        if (!r.ampleness) r.diagnostics.push_back("K is not relatively ample");
    }

    // Step (5): subtract the node multiplicities from the dual at the node
    // positions and compare with the stored zero chain.
    r.zcf_roundtrip = p.d_deficits.size() == b.size();
    if (r.zcf_roundtrip) {
        std::size_t node = 0;
        Chain k;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::int64_t d = p.d_deficits[j];
            if (d > 0) {
                if (node >= p.nodes.size() || p.nodes[node].d != d) r.zcf_roundtrip = false;
                ++node;
            }
            k.push_back(b[j] - d);
        }
        r.zcf_roundtrip = r.zcf_roundtrip && node == p.nodes.size() && k == p.zcf;
        for (auto e : k)
            if (e < 1) r.zcf_roundtrip = false;
        r.zcf_roundtrip = r.zcf_roundtrip && is_zero_chain(k);
    }
    if (!r.zcf_roundtrip) r.diagnostics.push_back("zero chain round trip mismatch");
    return r;
}

std::string render_nodes(const std::vector<PNode>& nodes, const std::vector<std::int64_t>& links)
{
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& nd = nodes[i];
        if (nd.is_t()) {
            std::string d = nd.d == 1 ? "" : std::to_string(nd.d);
            parts.push_back("[" + d + "(" + std::to_string(nd.n) + "," + std::to_string(nd.a) + ")]");
        } else if (nd.is_du_val()) {
            parts.push_back("A_" + std::to_string(nd.d - 1));
        }
        if (i < links.size()) parts.push_back("(" + std::to_string(links[i]) + ")");
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "-";
        out += parts[i];
    }
    return out;
}

std::string render(const PResolution& p)
{
    if (!verify_p_resolution(p).ok()) throw ValidationError("render requires a verified P-resolution");
    return render_nodes(p.nodes, p.links);
}

}  // namespace tsurf
