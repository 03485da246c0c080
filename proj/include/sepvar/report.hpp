#pragma once

// JSON renderings of library results. Keys keep insertion order, rationals
// are "p/q" strings and Q(i) values are {"re", "im"} objects.

#include "sepvar/genus.hpp"
#include "sepvar/klein_s4.hpp"
#include "sepvar/orbifold.hpp"
#include "sepvar/series.hpp"

#include <json.hpp>

namespace sepvar::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json rational(const BigRational& q);
Json gaussian(const GaussianRational& c);
Json function(const RationalFunction& f);
Json point_class(const PointClass& c);
Json multiplicities(const Multiplicities& m);
Json portrait(const RamificationPortrait& p);
Json signature(const OrbifoldSignature& o);
Json orbifold_class(const OrbifoldClass& c);
Json genus(const GenusReport& g);
Json basis(const BasisVerdict& v);
Json family(const FamilyInstance& f, const GenusReport& g);
Json series(const SeriesCertificate& s);
Json bound_check(const HyperbolicBoundCheck& b);
Json certificate(const KleinS4Certificate& c);

}  // namespace sepvar::report
