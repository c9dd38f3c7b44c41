#pragma once

#include "tsurf/tsing.hpp"

#include <optional>

namespace tsurf {

struct QuotientOutcome {
    char case_tag = 'a';
    // Raw (m0, q0) exactly as the case formula gives it; unset for case (a).
    std::optional<Fraction> raw;
    // Reduced mod m0 when that yields a valid c.q.s.
    std::optional<Fraction> normalized;
    // The quotient point is smooth (case (a), or m0 = 1).
    bool smooth = false;
    bool applicable = false;
    // Why the case does not apply, or why the raw value does not normalize.
    std::string reason;
    std::optional<TType> t_type;
    // normalized is A_{m0-1}.
    bool du_val = false;
};

// The five involution quotient cases for 1/m(1,q).
std::vector<QuotientOutcome> quotient_candidates(const Int& m, const Int& q);

struct QuotientViolation {
    TType source;
    char case_tag = 'a';
    std::optional<Fraction> result;
    std::string reason;
};

struct QuotientScanReport {
    std::int64_t checked = 0;
    std::vector<QuotientViolation> violations;
};

// No applicable case turns a Wahl singularity into a Wahl singularity or a
// smooth point.
QuotientScanReport wahl_quotient_scan(std::int64_t max_n);

// A Du Val quotient of a non-Du-Val T-singularity with d n^2 <= max_index
// only arises for n = 2, and is then 1/(2d)(1, 2d-1).
QuotientScanReport duval_quotient_scan(std::int64_t max_index);

struct LeeParkQuotient {
    std::int64_t n = 2;
    Fraction expected;
    char expected_case = 'b';
    // Distinct T-singularity results over all applicable cases.
    std::vector<Fraction> t_results;
    bool matches = false;
};

// Quotients of 1/n^2(1, n-1).
LeeParkQuotient lee_park_quotient(std::int64_t n);

}  // namespace tsurf
