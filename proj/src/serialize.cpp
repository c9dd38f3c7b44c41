#include "tsurf/serialize.hpp"

namespace tsurf {

namespace {

Json opt(const std::optional<Fraction>& f) { return f ? to_json(*f) : Json(nullptr); }

Json table_items(const std::vector<TableItem>& items)
{
    Json out = Json::array();
    for (const auto& it : items) out.push_back({{"count", it.count}, {"chain", it.chain}, {"d", it.d}});
    return out;
}

}  // namespace

Json to_json(const Int& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json to_json(const Rational& v)
{
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

Json to_json(const Fraction& f) { return {{"delta", to_json(f.delta)}, {"omega", to_json(f.omega)}}; }

Json to_json(const TType& t) { return {{"d", t.d}, {"n", t.n}, {"a", t.a}}; }

Json to_json(const DiscrepancyVector& dv)
{
    Json j;
    j["deltas"] = Json::array();
    for (const auto& d : dv.deltas) j["deltas"].push_back(to_json(d));
    j["t_first"] = dv.t_first ? to_json(*dv.t_first) : Json(nullptr);
    j["t_last"] = dv.t_last ? to_json(*dv.t_last) : Json(nullptr);
    return j;
}

Json to_json(const PResolution& p)
{
    Json nodes = Json::array();
    for (const auto& n : p.nodes) nodes.push_back({{"d", n.d}, {"n", n.n}, {"a", n.a}});
    return {{"source", to_json(p.source)}, {"zcf", p.zcf}, {"nodes", nodes}, {"links", p.links},
            {"notation", render_nodes(p.nodes, p.links)}};
}

Json to_json(const PReport& r)
{
    Json kg = Json::array();
    for (const auto& k : r.k_dot_gamma) kg.push_back(to_json(k));
    return {{"zero_reduction", r.zero_reduction}, {"node_validity", r.node_validity}, {"ampleness", r.ampleness},
            {"zcf_roundtrip", r.zcf_roundtrip}, {"k_dot_gamma", kg}, {"diagnostics", r.diagnostics},
            {"ok", r.ok()}};
}

Json to_json(const ComparisonReport& r)
{
    const auto& fam = appendix_family(r.family);
    Json params = Json::object();
    for (const auto& [k, v] : r.params.as_map(fam.param_names)) params[k] = v;
    Json expected = Json::array();
    for (const auto& e : r.expected) expected.push_back({{"notation", e.notation}, {"labels", e.labels}, {"zcf", e.zcf}});
    Json computed = Json::array();
    for (const auto& [z, s] : r.computed) computed.push_back({{"zcf", z}, {"notation", s}});
    return {{"family", r.family}, {"params", params}, {"source", to_json(r.source)}, {"expected", expected},
            {"computed", computed}, {"missing", r.missing}, {"extra", r.extra},
            {"zcf_mismatch", r.zcf_mismatch}, {"collisions", r.collisions}, {"ok", r.ok()}};
}

Json to_json(const FiberType& f) { return to_string(f); }

Json to_json(const BlockInstance& b)
{
    Json j;
    j["id"] = b.id;
    j["r"] = b.params.r ? Json(*b.params.r) : Json(nullptr);
    j["f"] = b.params.f ? to_json(*b.params.f) : Json(nullptr);
    j["f2"] = b.params.f2 ? to_json(*b.params.f2) : Json(nullptr);
    j["chains"] = b.chains;
    j["du_val"] = b.du_val;
    j["local_k2"] = b.local_k2;
    j["euler_cost"] = b.euler_cost;
    j["singular_fibers"] = b.singular_fibers;
    j["complete_fibers"] = b.complete_fibers;
    j["blowups"] = b.blowups;
    j["j_class"] = b.j_class ? Json(*b.j_class) : Json(nullptr);
    j["section_discrepancy"] = b.section_discrepancy ? to_json(*b.section_discrepancy) : Json(nullptr);
    return j;
}

Json to_json(const InvariantsRecord& inv)
{
    return {{"pg", inv.pg}, {"N", inv.N}, {"K2", inv.K2}, {"chi_top", inv.chi_top}, {"b_plus", inv.b_plus},
            {"b_minus", inv.b_minus}, {"sigma", inv.sigma}, {"homeo", inv.homeo}, {"homeo_caveat", inv.homeo_caveat}};
}

Json to_json(const SmallSurfaceReport& r)
{
    Json sings = Json::array();
    for (const auto& t : r.singularities) sings.push_back(to_json(t));
    Json nef = Json::array();
    for (const auto& c : r.nef_checks) nef.push_back({{"junction", c.junction}, {"k_dot_e", to_json(c.k_dot_e)}, {"ok", c.ok}});
    return {{"pg", r.pg}, {"block", r.block}, {"chains", r.chains}, {"du_val", r.du_val}, {"singularities", sings},
            {"K2", r.K2}, {"N", r.N}, {"l", r.l}, {"blowups", r.blowups}, {"euler_used", r.euler_used},
            {"euler_budget", r.euler_budget}, {"euler_ok", r.euler_ok}, {"nef_checks", nef}, {"nef_ok", r.nef_ok},
            {"law_ok", r.law_ok}, {"invariants", to_json(r.invariants)}, {"ok", r.ok()}};
}

Json to_json(const GeographyResult& g)
{
    Json w = Json::object();
    for (const auto& [k2, list] : g.witnesses) {
        Json arr = Json::array();
        for (const auto& x : list) arr.push_back({{"block", x.block}, {"s", x.s}, {"euler_used", x.euler_used}});
        w[std::to_string(k2)] = arr;
    }
    Json maxima = Json::array();
    for (const auto& m : g.block_maxima) maxima.push_back({{"block", m.block}, {"s_max", m.s_max}, {"k2_max", m.k2_max}});
    return {{"pg", g.pg}, {"min_k2", g.min_k2}, {"max_k2", g.max_k2}, {"rational_max", to_json(g.rational_max)},
            {"witnesses", w}, {"block_maxima", maxima}, {"all_realizable", g.all_realizable},
            {"s2f7_attains_rational_max", g.s2f7_attains_rational_max}};
}

Json to_json(const HorikawaFamily& h)
{
    std::vector<std::int64_t> zero(h.param_names.size(), 0);
    return {{"pg", h.pg}, {"label", h.label}, {"block", h.block_tag}, {"params", h.param_names},
            {"stated_bound", h.stated_bound ? Json(*h.stated_bound) : Json(nullptr)},
            {"computed_bound", h.computed_bound ? Json(*h.computed_bound) : Json(nullptr)},
            {"note", h.smoothability_note}, {"chains_at_zero", table_items(h.table_chains(zero))}};
}

Json to_json(const QuotientOutcome& o)
{
    return {{"case", std::string(1, o.case_tag)}, {"applicable", o.applicable}, {"raw", opt(o.raw)},
            {"normalized", opt(o.normalized)}, {"smooth", o.smooth}, {"du_val", o.du_val},
            {"t_type", o.t_type ? to_json(*o.t_type) : Json(nullptr)}, {"reason", o.reason}};
}

Json to_json(const QuotientScanReport& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"source", to_json(x.source)}, {"case", std::string(1, x.case_tag)}, {"result", opt(x.result)},
                     {"reason", x.reason}});
    return {{"checked", r.checked}, {"violations", v}};
}

Json to_json(const LeeParkQuotient& lp)
{
    Json res = Json::array();
    for (const auto& f : lp.t_results) res.push_back(to_json(f));
    return {{"n", lp.n}, {"expected", to_json(lp.expected)}, {"expected_case", std::string(1, lp.expected_case)},
            {"t_results", res}, {"matches", lp.matches}};
}

}  // namespace tsurf
