#pragma once

#include "tsurf/appendix.hpp"
#include "tsurf/quotient.hpp"
#include "tsurf/smallsurf.hpp"

#include <json.hpp>

namespace tsurf {

using Json = nlohmann::json;

// Integers that fit in 64 bits become numbers, larger ones strings.
Json to_json(const Int& v);
// Always "p/q".
Json to_json(const Rational& v);
Json to_json(const Fraction& f);
Json to_json(const TType& t);
Json to_json(const DiscrepancyVector& dv);
Json to_json(const PResolution& p);
Json to_json(const PReport& r);
Json to_json(const ComparisonReport& r);
Json to_json(const FiberType& f);
Json to_json(const BlockInstance& b);
Json to_json(const InvariantsRecord& inv);
Json to_json(const SmallSurfaceReport& r);
Json to_json(const GeographyResult& g);
Json to_json(const HorikawaFamily& h);
Json to_json(const QuotientOutcome& o);
Json to_json(const QuotientScanReport& r);
Json to_json(const LeeParkQuotient& lp);

}  // namespace tsurf
