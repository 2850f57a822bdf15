#pragma once

#include "polyadic/character.hpp"
#include "polyadic/grid.hpp"
#include "polyadic/periodic_function.hpp"
#include "polyadic/polyadic_int.hpp"
#include "polyadic/residue_claim.hpp"

#include <json.hpp>

#include <string>

namespace polyadic {

using Json = nlohmann::ordered_json;

/// Integers round-trip as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that; parsing accepts both forms.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

// {"depth": K, "digits": [nu_1, ..., nu_K]}
Json to_json(const PolyadicInt& alpha);
PolyadicInt polyadic_int_from_json(const Json& j);

// {"mod": n, "res": r}
Json to_json(const ResidueClaim& claim);
ResidueClaim residue_claim_from_json(const Json& j);

// {"period": p, "values": [[re, im], ...]}
Json to_json(const PeriodicFunction& u);
PeriodicFunction periodic_function_from_json(const Json& j);

// The tower's JSON with a "kind": "character" tag.
Json to_json(const Character& psi);
Character character_from_json(const Json& j);

// {"width": n, "center": <PolyadicInt>}
Json to_json(const Grid& grid);
Grid grid_from_json(const Json& j);

} // namespace polyadic
