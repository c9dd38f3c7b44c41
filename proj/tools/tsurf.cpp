#include "criteria.hpp"

#include "tsurf/corpus.hpp"
#include "tsurf/serialize.hpp"
#include "tsurf/zcf.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#ifndef TSURF_DATA_DIR
#define TSURF_DATA_DIR "data/appendix"
#endif

using namespace tsurf;

namespace {

// Result of one command: text lines for the plain output, a payload for
// --json, and the exit code (0 ok, 2 check failure).
struct Outcome {
    int code = 0;
    std::vector<std::string> lines;
    Json payload = Json::object();
    std::vector<std::string> diagnostics;
};

struct Globals {
    bool json = false;
    std::optional<std::size_t> limit;
    std::string command;
};

Int parse_int(const std::string& text)
{
    bool ok = !text.empty();
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])) && !(i == 0 && text[i] == '-' && text.size() > 1)) ok = false;
    if (!ok) throw ValidationError("not an integer: '" + text + "'");
    return Int(text);
}

std::int64_t parse_small(const std::string& text)
{
    Int v = parse_int(text);
    if (v > 1'000'000'000 || v < -1'000'000'000) throw ValidationError("value out of range: " + text);
    return static_cast<std::int64_t>(v);
}

TType parse_ttype(const std::string& text)
{
    auto c = parse_chain(text);
    if (c.size() != 3) throw ValidationError("T-singularity must be d,n,a: '" + text + "'");
    return make_ttype(c[0], c[1], c[2]);
}

std::string fraction_text(const Fraction& f) { return "(" + f.delta.str() + "," + f.omega.str() + ")"; }

// Applies --limit to a streamed list.
template <class T>
std::size_t capped(const std::vector<T>& v, const Globals& g)
{
    return g.limit ? std::min(*g.limit, v.size()) : v.size();
}

std::string rationals_text(const std::vector<Rational>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + "]";
}

BlockParams block_params(const std::optional<std::int64_t>& r, const std::string& f, const std::string& f2)
{
    BlockParams p;
    p.r = r;
    if (!f.empty()) p.f = parse_fiber(f);
    if (!f2.empty()) p.f2 = parse_fiber(f2);
    return p;
}

std::string report_line(const SmallSurfaceReport& r)
{
    std::string s = r.block + " p_g=" + std::to_string(r.pg) + " K2=" + std::to_string(r.K2) + " N=" +
                    std::to_string(r.N) + " l=" + std::to_string(r.l) + " euler=" + std::to_string(r.euler_used) +
                    "/" + std::to_string(r.euler_budget) + " nef=" + (r.nef_ok ? "ok" : "fail") +
                    " ok=" + (r.ok() ? "true" : "false") + " chains:";
    for (const auto& c : r.chains) s += " " + chain_to_string(c);
    for (const auto& c : r.du_val) s += " A" + std::to_string(c.size());
    return s;
}

std::string quotient_line(const QuotientOutcome& o)
{
    std::string s = std::string("(") + o.case_tag + ") ";
    if (!o.applicable) return s + "inapplicable: " + o.reason;
    if (o.smooth) return s + "smooth";
    s += "raw " + fraction_text(*o.raw);
    if (o.normalized) s += " -> " + fraction_text(*o.normalized);
    if (o.t_type) s += " " + to_string(*o.t_type);
    if (o.du_val) s += " Du Val";
    if (!o.reason.empty()) s += " (" + o.reason + ")";
    return s;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact continued-fraction, T-singularity and small-surface toolkit."};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    std::size_t limit_value = 0;
    app.add_flag("--json", g.json, "Emit one JSON document");
    auto* limit_opt = app.add_option("--limit", limit_value, "Cap the number of listed results");

    std::function<Outcome()> action;
    auto bind = [&](CLI::App* sub, const std::string& name, std::function<Outcome()> fn) {
        sub->callback([&g, &action, name, fn] {
            g.command = name;
            action = fn;
        });
    };
    auto group = [&](const std::string& name, const std::string& help) {
        auto* s = app.add_subcommand(name, help);
        s->require_subcommand(1);
        return s;
    };

    // hj
    auto* hj = group("hj", "Hirzebruch-Jung continued fractions");
    std::string a1, a2, a3;
    {
        auto* s = hj->add_subcommand("expand", "Chain of Delta/Omega");
        s->add_option("delta", a1)->required();
        s->add_option("omega", a2)->required();
        bind(s, "hj expand", [&] {
            auto c = hj_expand(parse_int(a1), parse_int(a2));
            return Outcome{0, {chain_to_string(c)}, {{"chain", c}}, {}};
        });
        s = hj->add_subcommand("eval", "Fraction of a chain");
        s->add_option("chain", a1)->required();
        bind(s, "hj eval", [&] {
            auto v = evaluate(parse_chain(a1));
            return Outcome{0, {v.p.str() + "/" + v.q.str()}, {{"p", to_json(v.p)}, {"q", to_json(v.q)}}, {}};
        });
        s = hj->add_subcommand("dual", "Chain of Delta/(Delta-Omega)");
        s->add_option("delta", a1)->required();
        s->add_option("omega", a2)->required();
        bind(s, "hj dual", [&] {
            auto c = dual(parse_int(a1), parse_int(a2));
            return Outcome{0, {chain_to_string(c)}, {{"chain", c}}, {}};
        });
    }

    // tchain
    auto* tc = group("tchain", "T-chains and discrepancies");
    std::int64_t max_len = 8;
    std::string max_delta = "200";
    std::optional<std::int64_t> d_filter;
    {
        auto* s = tc->add_subcommand("check", "Recognize a T-chain");
        s->add_option("chain", a1)->required();
        bind(s, "tchain check", [&] {
            auto t = t_recognize(parse_chain(a1));
            if (!t) return Outcome{2, {"not a T-chain"}, {{"t_type", nullptr}}, {"not a T-chain"}};
            return Outcome{0, {to_string(*t)}, {{"t_type", to_json(*t)}, {"fraction", to_json(t->fraction())}}, {}};
        });
        s = tc->add_subcommand("disc", "Discrepancies of a chain");
        s->add_option("chain", a1)->required();
        bind(s, "tchain disc", [&] {
            auto c = parse_chain(a1);
            auto dv = discrepancies(c);
            auto ctr = center(c);
            Json p = to_json(dv);
            p["center"] = ctr;
            std::string cs;
            for (auto i : ctr) cs += (cs.empty() ? "" : ",") + std::to_string(i);
            return Outcome{0, {rationals_text(dv.deltas), "center " + cs}, p, {}};
        });
        s = tc->add_subcommand("children", "The two T-chain children");
        s->add_option("chain", a1)->required();
        bind(s, "tchain children", [&] {
            auto [l, r] = t_children(parse_chain(a1));
            return Outcome{0, {chain_to_string(l), chain_to_string(r)}, {{"children", {l, r}}}, {}};
        });
        s = tc->add_subcommand("enum", "Enumerate T-chains");
        s->add_option("--max-len", max_len, "Longest chain")->capture_default_str();
        s->add_option("--max-delta", max_delta, "Largest d n^2")->capture_default_str();
        s->add_option("--d", d_filter, "Only this d");
        bind(s, "tchain enum", [&] {
            auto all = enumerate_t_chains(static_cast<int>(max_len), parse_int(max_delta), d_filter);
            Outcome o;
            o.payload["count"] = all.size();
            o.payload["items"] = Json::array();
            for (std::size_t i = 0; i < capped(all, g); ++i) {
                o.lines.push_back(chain_to_string(all[i].second) + " " + to_string(all[i].first));
                o.payload["items"].push_back({{"chain", all[i].second}, {"t_type", to_json(all[i].first)}});
            }
            return o;
        });
    }

    // zcf
    auto* zc = group("zcf", "Zero continued fractions");
    {
        auto list = [&g](const std::vector<Chain>& v) {
            Outcome o;
            o.payload["count"] = v.size();
            o.payload["items"] = Json::array();
            for (std::size_t i = 0; i < capped(v, g); ++i) {
                o.lines.push_back(chain_to_string(v[i]));
                o.payload["items"].push_back(v[i]);
            }
            return o;
        };
        auto* s = zc->add_subcommand("enum", "All zero chains of length s");
        s->add_option("s", a1)->required();
        bind(s, "zcf enum", [&, list] { return list(enumerate_zcf(static_cast<int>(parse_small(a1)))); });
        s = zc->add_subcommand("kset", "Zero chains bounded by the dual");
        s->add_option("delta", a1)->required();
        s->add_option("omega", a2)->required();
        bind(s, "zcf kset", [&, list] { return list(k_set(parse_int(a1), parse_int(a2))); });
        s = zc->add_subcommand("kcross", "K-set members with matching ends");
        s->add_option("delta", a1)->required();
        s->add_option("omega", a2)->required();
        bind(s, "zcf kcross", [&, list] { return list(k_cross_set(parse_int(a1), parse_int(a2))); });
    }

    // pres
    auto* pr = group("pres", "P-resolutions");
    bool cross = false, render_only = false;
    std::vector<std::string> params;
    {
        auto* s = pr->add_subcommand("all", "All P-resolutions of 1/Delta(1,Omega)");
        s->add_option("delta", a1)->required();
        s->add_option("omega", a2)->required();
        s->add_flag("--cross", cross, "Only cross-type zero chains");
        s->add_flag("--render", render_only, "Print notation only");
        bind(s, "pres all", [&] {
            auto all = enumerate_p_resolutions(parse_int(a1), parse_int(a2), cross);
            Outcome o;
            o.payload["count"] = all.size();
            o.payload["items"] = Json::array();
            for (std::size_t i = 0; i < capped(all, g); ++i) {
                auto text = render(all[i]);
                o.lines.push_back(render_only ? text : chain_to_string(all[i].zcf) + " " + text);
                o.payload["items"].push_back(to_json(all[i]));
            }
            return o;
        });
        s = pr->add_subcommand("verify", "Check one P-resolution");
        s->add_option("delta", a1)->required();
        s->add_option("omega", a2)->required();
        s->add_option("zcf", a3)->required();
        bind(s, "pres verify", [&] {
            auto p = compute_p_resolution(parse_int(a1), parse_int(a2), parse_chain(a3));
            auto r = verify_p_resolution(p);
            Outcome o;
            o.code = r.ok() ? 0 : 2;
            o.payload = {{"resolution", to_json(p)}, {"report", to_json(r)}};
            o.diagnostics = r.diagnostics;
            auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
            o.lines.push_back(render(p));
            o.lines.push_back(std::string("zero_reduction ") + flag(r.zero_reduction) + " node_validity " +
                              flag(r.node_validity) + " ampleness " + flag(r.ampleness) + " zcf_roundtrip " +
                              flag(r.zcf_roundtrip));
            o.lines.push_back("K.Gamma " + rationals_text(r.k_dot_gamma));
            return o;
        });
        s = pr->add_subcommand("render", "Notation of one P-resolution");
        s->add_option("delta", a1)->required();
        s->add_option("omega", a2)->required();
        s->add_option("zcf", a3)->required();
        bind(s, "pres render", [&] {
            auto p = compute_p_resolution(parse_int(a1), parse_int(a2), parse_chain(a3));
            return Outcome{0, {render(p)}, to_json(p), {}};
        });
        s = pr->add_subcommand("appendix", "Compare an appendix family point with its golden rows");
        s->add_option("family", a1)->required();
        s->add_option("params", params, "name=value pairs");
        bind(s, "pres appendix", [&] {
            const auto& fam = appendix_family(a1);
            std::map<std::string, std::int64_t> m;
            for (const auto& kv : params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw ValidationError("parameter must be name=value: '" + kv + "'");
                auto name = kv.substr(0, eq);
                if (std::find(fam.param_names.begin(), fam.param_names.end(), name) == fam.param_names.end())
                    throw ValidationError("family " + fam.id + " has no parameter '" + name + "'");
                m[name] = parse_small(kv.substr(eq + 1));
            }
            for (const auto& n : fam.param_names)
                if (!m.count(n)) throw ValidationError("missing parameter '" + n + "'");
            auto rep = appendix_check(fam.id, FamilyParams::from_map(m));
            Outcome o;
            o.code = rep.ok() ? 0 : 2;
            o.payload = to_json(rep);
            for (const auto& [z, text] : rep.computed) o.lines.push_back(chain_to_string(z) + " " + text);
            for (const auto& x : rep.missing) o.diagnostics.push_back("missing " + x);
            for (const auto& x : rep.extra) o.diagnostics.push_back("extra " + x);
            for (const auto& x : rep.zcf_mismatch) o.diagnostics.push_back("zcf mismatch " + x);
            o.lines.push_back(rep.ok() ? "matches golden rows" : "MISMATCH against golden rows");
            return o;
        });
    }

    // small
    auto* sm = group("small", "Small surfaces");
    std::int64_t pg = 3, big_n = 0;
    std::optional<std::int64_t> r_opt;
    std::string f1, f2, block_id;
    std::vector<std::string> fibs, sings;
    {
        auto* s = sm->add_subcommand("block", "Instantiate a building block");
        s->add_option("id", block_id)->required();
        s->add_option("--r", r_opt, "Section parameter r");
        s->add_option("--f", f1, "First fiber (I1, I_3, II, III, IV)");
        s->add_option("--f2", f2, "Second fiber");
        bind(s, "small block", [&] {
            auto b = instantiate_block(block_id, block_params(r_opt, f1, f2));
            Outcome o;
            o.payload = to_json(b);
            std::string chains;
            for (const auto& c : b.chains) chains += " " + chain_to_string(c);
            for (const auto& c : b.du_val) chains += " A" + std::to_string(c.size());
            o.lines.push_back(b.id + " localK2=" + std::to_string(b.local_k2) + " m=" + std::to_string(b.blowups) +
                              " euler=" + std::to_string(b.euler_cost) + " chains:" + chains);
            if (b.section_discrepancy) o.lines.push_back("d(Gamma) " + to_string(*b.section_discrepancy));
            return o;
        });
        s = sm->add_subcommand("assemble", "Glue a block with FIBs");
        s->add_option("--pg", pg, "Geometric genus")->required();
        s->add_option("--block", block_id, "Main block")->required();
        s->add_option("--r", r_opt, "Block r (default p_g + 1 + 2s)");
        s->add_option("--f", f1, "First fiber");
        s->add_option("--f2", f2, "Second fiber");
        s->add_option("--fib", fibs, "Fiber of one FIB block (repeatable)");
        bind(s, "small assemble", [&] {
            SmallSurfaceConfig cfg;
            cfg.pg = pg;
            auto r = r_opt.value_or(pg + 1 + 2 * static_cast<std::int64_t>(fibs.size()));
            cfg.main = instantiate_block(block_id, block_params(r, f1, f2));
            for (const auto& fb : fibs) cfg.fibs.push_back(instantiate_block("FIB", {std::nullopt, parse_fiber(fb), {}}));
            auto rep = assemble(cfg);
            Outcome o{rep.ok() ? 0 : 2, {report_line(rep), rep.invariants.homeo}, to_json(rep), {}};
            if (!rep.euler_ok) o.diagnostics.push_back("Euler budget exceeded");
            if (!rep.nef_ok) o.diagnostics.push_back("K not nef at a FIB junction");
            if (!rep.law_ok) o.diagnostics.push_back("singularity count law violated");
            return o;
        });
        s = sm->add_subcommand("horikawa", "Horikawa families for p_g");
        s->add_option("--pg", pg, "Geometric genus")->required();
        bind(s, "small horikawa", [&] {
            auto fams = horikawa_families(pg);
            Outcome o;
            o.payload["count"] = fams.size();
            o.payload["families"] = Json::array();
            for (std::size_t i = 0; i < capped(fams, g); ++i) {
                const auto& h = fams[i];
                o.payload["families"].push_back(to_json(h));
                std::string names;
                for (const auto& n : h.param_names) names += (names.empty() ? "" : "+") + n;
                std::string line = h.label + " " + h.block_tag;
                if (!names.empty())
                    line += " " + names + " <= " + (h.computed_bound ? std::to_string(*h.computed_bound) : "-") +
                            " (stated " + (h.stated_bound ? std::to_string(*h.stated_bound) : "-") + ")";
                o.lines.push_back(line);
            }
            return o;
        });
        s = sm->add_subcommand("geography", "Realizable K^2 range for p_g");
        s->add_option("--pg", pg, "Geometric genus")->required();
        bind(s, "small geography", [&] {
            auto geo = geography(pg);
            Outcome o{geo.all_realizable ? 0 : 2, {}, to_json(geo), {}};
            o.lines.push_back("K2 " + std::to_string(geo.min_k2) + ".." + std::to_string(geo.max_k2) +
                              " rational max " + to_string(geo.rational_max) +
                              (geo.all_realizable ? " all realizable" : " GAPS"));
            for (const auto& m : geo.block_maxima)
                o.lines.push_back(m.block + " max K2 " + std::to_string(m.k2_max) + " at s=" + std::to_string(m.s_max));
            return o;
        });
        s = sm->add_subcommand("invariants", "Rational blowdown invariants");
        s->add_option("--pg", pg, "Geometric genus")->required();
        s->add_option("--N", big_n, "Complete fibers")->required();
        bind(s, "small invariants", [&] {
            auto inv = blowdown_invariants(pg, big_n);
            return Outcome{0,
                           {"K2=" + std::to_string(inv.K2) + " chi_top=" + std::to_string(inv.chi_top) + " b+=" +
                                std::to_string(inv.b_plus) + " b-=" + std::to_string(inv.b_minus) +
                                " sigma=" + std::to_string(inv.sigma),
                            inv.homeo},
                           to_json(inv),
                           {}};
        });
        s = sm->add_subcommand("leepark", "Lee-Park surface with two Wahl singularities");
        s->add_option("--pg", pg, "Geometric genus")->required();
        bind(s, "small leepark", [&] {
            auto rep = lee_park(pg);
            return Outcome{0, {report_line(rep), to_string(rep.singularities.at(0))}, to_json(rep), {}};
        });
        s = sm->add_subcommand("bmy", "Bogomolov-Miyaoka-Yau bound on K^2");
        s->add_option("--pg", pg, "Geometric genus")->required();
        s->add_option("--t", sings, "Singularity d,n,a (repeatable)");
        bind(s, "small bmy", [&] {
            std::vector<TType> ts;
            for (const auto& t : sings) ts.push_back(parse_ttype(t));
            auto b = bmy_bound(pg, ts);
            return Outcome{0, {to_string(b)}, {{"bound", to_json(b)}}, {}};
        });
    }

    // quot
    auto* qu = group("quot", "Involution quotients");
    std::int64_t max_n = 50, max_index = 500;
    {
        auto* s = qu->add_subcommand("cases", "All involution cases for 1/m(1,q)");
        s->add_option("m", a1)->required();
        s->add_option("q", a2)->required();
        bind(s, "quot cases", [&] {
            Outcome o;
            o.payload["cases"] = Json::array();
            for (const auto& c : quotient_candidates(parse_int(a1), parse_int(a2))) {
                o.lines.push_back(quotient_line(c));
                o.payload["cases"].push_back(to_json(c));
            }
            return o;
        });
        auto scan = [&g](const QuotientScanReport& rep) {
            Outcome o{rep.violations.empty() ? 0 : 2, {}, to_json(rep), {}};
            o.lines.push_back(std::to_string(rep.checked) + " checked, " + std::to_string(rep.violations.size()) +
                              " violation(s)");
            for (std::size_t i = 0; i < capped(rep.violations, g); ++i) {
                const auto& v = rep.violations[i];
                o.lines.push_back(to_string(v.source) + " case " + v.case_tag + " -> " +
                                  (v.result ? fraction_text(*v.result) : "-") + " " + v.reason);
            }
            return o;
        };
        s = qu->add_subcommand("scan-wahl", "Check that Wahl quotients are neither Wahl nor smooth");
        s->add_option("--max-n", max_n, "Largest n")->capture_default_str();
        bind(s, "quot scan-wahl", [&, scan] { return scan(wahl_quotient_scan(max_n)); });
        s = qu->add_subcommand("scan-duval", "Check that Du Val quotients only arise from n = 2");
        s->add_option("--max-index", max_index, "Largest d n^2")->capture_default_str();
        bind(s, "quot scan-duval", [&, scan] { return scan(duval_quotient_scan(max_index)); });
        s = qu->add_subcommand("leepark", "Quotients of 1/n^2(1,n-1)");
        s->add_option("n", a1)->required();
        bind(s, "quot leepark", [&] {
            auto lp = lee_park_quotient(parse_small(a1));
            std::string res;
            for (const auto& f : lp.t_results) res += " " + fraction_text(f);
            return Outcome{lp.matches ? 0 : 2,
                           {"expected " + fraction_text(lp.expected) + " by case " + lp.expected_case + "; T results:" + res},
                           to_json(lp),
                           {}};
        });
    }

    // selftest
    auto* st = app.add_subcommand("selftest", "Acceptance criteria at reduced scale");
    bind(st, "selftest", [&] {
        Outcome o;
        o.payload["criteria"] = Json::array();
        for (const auto& r : acceptance::run_all(acceptance::Scale::Quick)) {
            o.lines.push_back(acceptance::format_line(r));
            o.payload["criteria"].push_back(
                {{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"known_deviation", r.known_deviation}, {"detail", r.detail}});
            if (!r.pass && !r.known_deviation) o.code = 2;
        }
        return o;
    });

    // corpus
    auto* co = group("corpus", "Golden appendix corpus");
    std::string dir = TSURF_DATA_DIR;
    {
        auto* s = co->add_subcommand("check", "Diff the corpus against regenerated output");
        s->add_option("--dir", dir, "Corpus directory")->capture_default_str();
        bind(s, "corpus check", [&] {
            auto rep = corpus_check(dir);
            Outcome o{rep.empty() ? 0 : 2, {}, Json::object(), {}};
            o.payload["records"] = rep.records;
            o.payload["diff"] = Json::array();
            for (std::size_t i = 0; i < capped(rep.entries, g); ++i) {
                const auto& e = rep.entries[i];
                o.payload["diff"].push_back(
                    {{"family", e.family}, {"line", e.line}, {"expected", e.expected}, {"actual", e.actual}});
                o.lines.push_back(e.family + ":" + std::to_string(e.line) + " expected " + e.expected + " got " + e.actual);
            }
            o.lines.push_back(std::to_string(rep.records) + " records, " + std::to_string(rep.entries.size()) +
                              " difference(s)");
            return o;
        });
        s = co->add_subcommand("regen", "Rewrite the corpus");
        s->add_option("--dir", dir, "Corpus directory")->capture_default_str();
        bind(s, "corpus regen", [&] {
            auto n = corpus_regen(dir);
            return Outcome{0, {std::to_string(n) + " records written to " + dir}, {{"records", n}, {"dir", dir}}, {}};
        });
    }

    auto fail = [&](int code, const std::string& kind, const std::string& msg) {
        std::string one_line = msg;
        std::replace(one_line.begin(), one_line.end(), '\n', ' ');
        std::cerr << "error: " << kind << ": " << one_line << std::endl;
        if (g.json) {
            Json doc{{"status", "error"}, {"command", g.command}, {"payload", nullptr}, {"diagnostics", {kind + ": " + one_line}}};
            std::cout << doc.dump(2) << std::endl;
        }
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(1, "usage", e.what());
    }
    if (limit_opt->count() > 0) g.limit = limit_value;

    try {
        auto o = action();
        if (g.json) {
            Json doc{{"status", o.code == 0 ? "ok" : "check_failed"},
                     {"command", g.command},
                     {"payload", o.payload},
                     {"diagnostics", o.diagnostics}};
            std::cout << doc.dump(2) << std::endl;
        } else {
            for (const auto& l : o.lines) std::cout << l << '\n';
            for (const auto& d : o.diagnostics) std::cerr << "check: " << d << '\n';
            std::cout.flush();
        }
        return o.code;
    } catch (const ValidationError& e) {
        return fail(1, "validation", e.what());
    } catch (const CheckFailure& e) {
        return fail(2, "check", e.what());
    } catch (const StructuralError& e) {
        return fail(3, "internal", e.what());
    } catch (const std::exception& e) {
        return fail(3, "internal", e.what());
    }
}
