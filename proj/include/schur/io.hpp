#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "schur/enumerate.hpp"
#include "schur/sring.hpp"

namespace schur {

/// Malformed JSON or a document that does not follow the ring schema.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

using Json = nlohmann::ordered_json;

/// {"group":[m1,...],"classes":[[[a1,...],...],...]} in canonical order.
Json ring_to_json(const SRing& a);
/// Canonical compact serialization (stable bytes for equal rings).
std::string serialize_ring(const SRing& a);

/// Reads the ring schema and re-validates. Throws MalformedInput for schema
/// problems and ValidationError when the partition is not an S-ring.
SRing ring_from_json(const Json& j);
SRing parse_ring(const std::string& text);

/// Accepts a single ring object, an array of rings, or an object with a
/// "rings" array (the enumerate output). All rings must share one group.
std::vector<SRing> rings_from_json(const Json& j);
std::vector<SRing> parse_rings(const std::string& text);

Json parse_json(const std::string& text);

struct EnumerationDocument {
  AbelianGroup group;
  std::vector<SRing> rings;
  /// Orbit sizes when the list holds Cayley-class representatives.
  std::vector<std::size_t> class_sizes;
  std::string filter;
  EnumerateStats stats;
};

Json enumeration_to_json(const EnumerationDocument& d);

enum class ClaimStatus { Pass, Fail, Budget };
const char* to_string(ClaimStatus s);

struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::Fail;
  std::string detail;
  double seconds = 0;
};

/// {"claims":[{"id":...,"status":"pass"|"fail"|"budget","detail":...,"seconds":...}]}
Json report_to_json(const std::vector<Claim>& claims);

}  // namespace schur
