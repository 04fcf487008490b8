#pragma once

// JSON encodings. Integers inside points and lines are JSON numbers, or
// decimal strings once they no longer fit in a long. Input accepts both, and
// triples are canonicalized.

#include "kfp/cht.hpp"
#include "kfp/kconfig.hpp"
#include "kfp/verify.hpp"

#include <json.hpp>

#include <string>

namespace kfp::io {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& v);
Json to_json(const Triple& t);
Triple triple_from_json(const Json& j);
Json to_json(const ProjPoint& p);
Json to_json(const ProjLine& l);
ProjPoint point_from_json(const Json& j);
ProjLine line_from_json(const Json& j);
std::vector<ProjLine> lines_from_json(const Json& j);
Json to_json(const std::vector<ProjLine>& lines);

/// {"points": [...], "mults": [...]}
Json to_json(const FatPointScheme& z);
FatPointScheme scheme_from_json(const Json& j);

/// {"type": [...], "subsets": [[...], ...], "lines": [...]}; not validated.
Json to_json(const KConfiguration& x);
KConfiguration config_from_json(const Json& j);

Json to_json(const HilbertTable& t);
Json to_json(const ReductionVector& v);
Json to_json(const BoundReport& r);
Json to_json(const LineCount& c);
Json to_json(const CaseReport& c);
Json to_json(const VerificationReport& r);
Json to_json(const ReducedBoundReport& r);
Json to_json(const RegularityReport& r);
Json to_json(const LastNonzeroReport& r);
Json to_json(const FamilyReport& r);

/// Reads and parses a file; throws Error(Parse).
Json read_file(const std::string& path);

}  // namespace kfp::io
