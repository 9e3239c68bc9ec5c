#pragma once

// JSON schemas shared by the CLI and the library:
//   band      {"conjugator": [ints], "core": j, "sign": +-1}
//   surface   {"strands": m, "bands": [band, ...]}
//   covering  {"degree": d, "transpositions": [[a, b], ...]}
//   palf      {"page": {"chi", "genus", "boundary_labels"},
//              "cycles": [{"band", "winding"}], "covering"?: covering}
// Parse errors throw Error(InvalidArgument) with the offending 1-based index.

#include <nlohmann/json.hpp>

#include "braidcover/braid.hpp"
#include "braidcover/covering.hpp"
#include "braidcover/families.hpp"
#include "braidcover/homology.hpp"
#include "braidcover/surface.hpp"

namespace braidcover {

using Json = nlohmann::ordered_json;

Json to_json(const BraidWord& b);
Json to_json(const BandGenerator& band);
Json to_json(const MonodromyTuple& t);
Json to_json(const BraidedSurface& s);
Json to_json(const CoveringMonodromy& rho);
Json to_json(const PageInvariants& page);
Json to_json(const PalfDescriptor& p);
Json to_json(const AbelianGroupDescriptor& g);
Json to_json(const TransverseLinkData& link);
Json to_json(const family::ExpectedRecord& e);

BraidWord braid_from_json(const Json& j, std::size_t strand_count);
BandGenerator band_from_json(const Json& j, std::size_t strand_count);
/// A bare JSON array of bands.
MonodromyTuple tuple_from_json(const Json& j, std::size_t strand_count);
BraidedSurface surface_from_json(const Json& j);
CoveringMonodromy covering_from_json(const Json& j);
PalfDescriptor palf_from_json(const Json& j);

}  // namespace braidcover
