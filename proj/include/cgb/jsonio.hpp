#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "cgb/apps.hpp"

namespace cgb {

// Insertion-ordered JSON keeps every serialization byte-stable.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const IntMat& m);
IntMat matrix_from_json(const Json& j);

Json vector_to_json(const std::vector<long long>& v);
std::vector<long long> vector_from_json(const Json& j);

// Orders are serialized with variable names, not indices, so a file stays
// readable next to the ring it belongs to.
Json order_to_json(const TermOrderSpec& spec, const RingSpec& ring);
TermOrderSpec order_from_json(const Json& j, const RingSpec& ring);

Json basis_to_json(const GroebnerBasis& gb);
Json map_to_json(const MonomialMap& map);
MonomialMap map_from_json(const Json& j);

Json problem_to_json(const ContractionProblem& p);
ContractionProblem problem_from_json(const Json& j);

Json report_to_json(const ContractionReport& r, const RingPtr& source_ring);

Json nested_instance_to_json(const NestedInstance& inst);
NestedInstance nested_instance_from_json(const Json& j);
Json nested_result_to_json(const NestedResult& r);

Json fiber_product_instance_to_json(const FiberProductInstance& inst);
FiberProductInstance fiber_product_instance_from_json(const Json& j);
Json fiber_product_result_to_json(const FiberProductResult& r);

Json flagship_report_to_json(const FlagshipReport& r);
std::string flagship_report_text(const FlagshipReport& r);

std::string read_text_file(const std::string& path);
Json load_json_file(const std::string& path);

// FNV-1a, 64-bit, over raw bytes; rendered as 16 hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string checksum_hex(std::string_view bytes);

// Fixture loading verified against <dir>/manifest.json: the manifest maps
// file names to checksums, and a stale or edited fixture is refused
// (fixture_checksum) rather than silently consumed.
std::string load_checked_text(const std::string& dir, const std::string& name);
Json load_checked_json(const std::string& dir, const std::string& name);

}  // namespace cgb
