#pragma once

#include <string>

#include <json.hpp>

#include "diffset/bohr.hpp"
#include "diffset/cover.hpp"
#include "diffset/delta.hpp"
#include "diffset/density.hpp"
#include "diffset/embed.hpp"
#include "diffset/extract.hpp"
#include "diffset/gen.hpp"
#include "diffset/intset.hpp"

namespace diffset {

using Json = nlohmann::ordered_json;

inline constexpr const char* version_string = "diffset 0.1.0";

// Rationals always travel as "p/q" strings.
Json rat(const Rational& r);
Rational rat_from(const Json& j);

Json to_json(const Window& w);
// {"window", "count", "fingerprint", "members"}; members are omitted above member_cap.
Json to_json(const IntSet& s, std::size_t member_cap = 4096);
std::string fingerprint(const IntSet& s);
Json to_json(const DensityEstimate& e);
Json to_json(const EpsDeltaResult& r, bool per_t = false);
Json to_json(const Pattern& p);
Json to_json(const EmbeddabilityReport& r);
Json to_json(const CoverCertificate& c);
Json to_json(const DeltaCoverResult& r);
Json to_json(const CoverDensityReport& r);
Json to_json(const QuotientCoverReport& r);
Json to_json(const PigeonholeWitness& w);
Json to_json(const BlockWalk& w);
Json to_json(const ExtractionCertificate& c);
Json to_json(const DenseExtractResult& r);
Json to_json(const PipelineParams& p);
Json to_json(const PipelineResult& r);
Json to_json(const RuzsaChainResult& r);
Json to_json(const JinCoverResult& r);
Json to_json(const IntersectCoverResult& r);
Json to_json(const BohrSpec& s);
Json to_json(const BohrWitness& w);
Json to_json(const GenSpec& s);

// {"kind", "window": [lo, hi], "seed", ...kind params}. Unknown kinds or missing params are InputErrors.
GenSpec gen_spec_from_json(const Json& j);

// Copy with every "timing" member removed, recursively.
Json strip_timing(const Json& j);

}  // namespace diffset
