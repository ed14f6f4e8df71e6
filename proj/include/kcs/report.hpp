#pragma once

#include <string>

#include "json.hpp"
#include "kcs/bundle.hpp"
#include "kcs/hodge.hpp"
#include "kcs/inequality.hpp"
#include "kcs/ring.hpp"

namespace kcs {

/// Reports keep insertion order so identical runs give identical bytes.
using Json = nlohmann::ordered_json;

// Numbers are always exact strings: "p/q", and {"re", "im"} for Gaussians.
Json to_json(const Rational& q);
Json to_json(const GaussianRational& z);
Json to_json(const Inertia& in);
Json to_json(const Matrix& m);
Json class_json(const IntersectionRing& r, const ClassVector& c);

Json to_json(const ValidationReport& rep);
Json to_json(const KahlerSanityReport& rep);
Json setup_json(const IntersectionRing& r, const MixedSetup& setup);
Json to_json(const SymmetricFormReport& rep);
Json hr_json(const IntersectionRing& r, const HrReport& rep);
Json decomposition_json(const IntersectionRing& r, const DecompositionResult& d);
Json to_json(const CsVerdict& v);
Json to_json(const HodgeCondition& c);
Json counterexample_json(const IntersectionRing& r, const Counterexample& ce);
Json theorem_json(const IntersectionRing& r, const TheoremReport& rep);
Json to_json(const KtReport& rep);
Json bundle_summary_json(const RingBundle& b);

/// Indented "key: value" rendering of a report; scalars print verbatim, so
/// text and JSON carry the same numbers.
std::string render_text(const Json& j);

}  // namespace kcs
