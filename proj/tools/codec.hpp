#pragma once

// JSON encodings of the layercake data types. Decoders reject unknown and
// missing fields with ParseError; semantic validation is left to the library.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "layercake/cohomology.hpp"
#include "layercake/fincat.hpp"
#include "layercake/grothendieck.hpp"
#include "layercake/pointed.hpp"
#include "layercake/schreier.hpp"
#include "layercake/surjectivity.hpp"
#include "layercake/twogroup.hpp"

namespace layercake::codec {

using Json = nlohmann::json;

Json read_file(const std::filesystem::path& path);

CategoryPtr category_from_json(const Json& j);
Json to_json(const FinCategory& c);

/// {"domain": <category>, "codomain": <category>, "objects": {x: y}, "morphisms": {f: g}}
FinFunctor functor_from_json(const Json& j);
Json to_json(const FinFunctor& f);

/// {"p", "m", "top", "bottom": <functor>, "iso": {object of A: morphism of D}}
LiftingSquare square_from_json(const Json& j);

FinGroup group_from_json(const Json& j);
Json to_json(const FinGroup& g);

FinAbGroup abelian_from_json(const Json& j);
Json to_json(const FinAbGroup& a);

/// {"coefficients": <abelian>, "action": {g: matrix}}; missing g act trivially.
GModule module_from_json(const Json& j, const FinGroup& g);
Json module_to_json(const GModule& m);

/// {"degree": n, "entries": [{"args": [...], "value": [...]}], "normalized"?: bool};
/// missing tuples are zero.
Cochain cochain_from_json(const Json& j, const GModule& m);
Json cochain_to_json(const Cochain& c, const GModule& m);

SkeletalTwoGroup twogroup_from_json(const Json& j);
Json to_json(const SkeletalTwoGroup& t);

Extension extension_from_json(const Json& j);
Json to_json(const Extension& e);

/// {"B": <group>, "F": <group>, "phi": {b: {x: y}}, "factor": {"b,b'": x}};
/// missing phi entries are the identity, missing factors the unit.
NonabelianCocycle cocycle_from_json(const Json& j);
Json to_json(const NonabelianCocycle& c);

SetValuedFunctor set_functor_from_json(const Json& j);
Json to_json(const SetValuedFunctor& f);

Monoid monoid_from_json(const Json& j);
Json to_json(const Monoid& m);

/// A category with an extra "basepoint" key naming an object.
PointedCategory pointed_from_json(const Json& j);
Json to_json(const PointedCategory& p);

}  // namespace layercake::codec
