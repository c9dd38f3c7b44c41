#pragma once

#include "tsurf/tsing.hpp"

namespace tsurf {

// (d, n, a) with n = a = 1 meaning A_{d-1}, and d = n = a = 1 a smooth point.
struct PNode {
    std::int64_t d = 1;
    std::int64_t n = 1;
    std::int64_t a = 1;

    bool is_smooth() const { return d == 1 && n == 1; }
    bool is_du_val() const { return n == 1 && d > 1; }
    bool is_t() const { return n > 1; }
    // Minimal resolution chain; empty for a smooth point.
    Chain chain() const;

    auto operator<=>(const PNode&) const = default;
};

struct PResolution {
    Fraction source;
    Chain zcf;
    std::vector<PNode> nodes;
    std::vector<std::int64_t> links;
    // d_j = b_j - k_j; nodes sit at the positive entries, in order.
    std::vector<std::int64_t> d_deficits;
};

struct PReport {
    bool zero_reduction = false;
    bool node_validity = false;
    bool ampleness = false;
    bool zcf_roundtrip = false;
    std::vector<Rational> k_dot_gamma;
    std::vector<std::string> diagnostics;

    bool ok() const { return zero_reduction && node_validity && ampleness && zcf_roundtrip; }
};

PResolution compute_p_resolution(const Int& delta, const Int& omega, const Chain& zcf);
std::vector<PResolution> enumerate_p_resolutions(const Int& delta, const Int& omega, bool cross_only);
PReport verify_p_resolution(const PResolution& p);

// Bracket notation for a node list with connecting curves.
std::string render_nodes(const std::vector<PNode>& nodes, const std::vector<std::int64_t>& links);
std::string render(const PResolution& p);

}  // namespace tsurf
