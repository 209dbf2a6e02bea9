// Canonical JSON encodings.  Field elements serialize as arrays of k
// integers in [0, p), little-endian; valuations as "num/den" strings, never
// floats.  Object keys are emitted in sorted order so reports are byte-stable.

#pragma once

#include <json.hpp>

#include "srw/cartier.hpp"
#include "srw/graph.hpp"
#include "srw/padic.hpp"

namespace srw {

using json = nlohmann::json;

json to_json(const FieldElement& e);
json to_json(const Field& f);  // {p, k, modulus}
json to_json(const Poly& f);
json to_json(const RatFunc& f);
json to_json(const Field& F, const CyclicCoverDifferential& w);  // {n, g, m, h_num, h_den}
json to_json(const SpecialDeformationDatum& d);
json to_json(const ReductionGraph& g);
json to_json(const ValQ& v);  // "num/den" string

FieldElement field_element_from_json(const Field& F, const json& j);
Field field_from_json(const json& j);
SpecialDeformationDatum datum_from_json(const json& j);
ReductionGraph graph_from_json(const json& j);

}  // namespace srw
