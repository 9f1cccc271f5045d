#include "schur/io.hpp"

namespace schur {

namespace {

std::vector<int> group_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("\"group\" must be an array of positive integers");
  std::vector<int> orders;
  for (const auto& m : j) {
    if (!m.is_number_integer() || m.get<long long>() < 1 || m.get<long long>() > 1'000'000)
      throw MalformedInput("\"group\" must be an array of positive integers");
    orders.push_back(m.get<int>());
  }
  std::size_t size = 1;
  for (int m : orders) {
    size *= static_cast<std::size_t>(m);
    if (size > 1'000'000) throw MalformedInput("group too large");
  }
  return orders;
}

Index element_from_json(const AbelianGroup& g, const Json& j) {
  const auto& orders = g.orders();
  if (!j.is_array() || j.size() != orders.size())
    throw MalformedInput("element must be an array of " + std::to_string(orders.size()) + " residues");
  Element e;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (!j[i].is_number_integer()) throw MalformedInput("residues must be integers");
    const auto r = j[i].get<long long>();
    if (r < 0 || r >= orders[i])
      throw MalformedInput("residue " + std::to_string(r) + " out of range for Z" + std::to_string(orders[i]));
    e.residues.push_back(static_cast<int>(r));
  }
  return g.index(e);
}

Json element_to_json(const AbelianGroup& g, Index x) {
  Json out = Json::array();
  for (int r : g.element(x).residues) out.push_back(r);
  return out;
}

}  // namespace

Json ring_to_json(const SRing& a) {
  const auto& g = a.group();
  Json j;
  j["group"] = g.orders();
  Json classes = Json::array();
  for (const auto& c : a.classes()) {
    Json members = Json::array();
    for (Index x : c) members.push_back(element_to_json(g, x));
    classes.push_back(std::move(members));
  }
  j["classes"] = std::move(classes);
  return j;
}

std::string serialize_ring(const SRing& a) { return ring_to_json(a).dump(); }

SRing ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("classes"))
    throw MalformedInput("ring must be an object with \"group\" and \"classes\"");
  AbelianGroup g(group_from_json(j["group"]));
  const auto& cj = j["classes"];
  if (!cj.is_array()) throw MalformedInput("\"classes\" must be an array");
  Partition p;
  for (const auto& c : cj) {
    if (!c.is_array()) throw MalformedInput("each class must be an array of elements");
    Class cls;
    for (const auto& x : c) cls.push_back(element_from_json(g, x));
    p.push_back(std::move(cls));
  }
  return make_sring(g, std::move(p));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("malformed JSON: ") + e.what());
  }
}

SRing parse_ring(const std::string& text) { return ring_from_json(parse_json(text)); }

std::vector<SRing> rings_from_json(const Json& j) {
  std::vector<SRing> out;
  if (j.is_object() && j.contains("rings")) return rings_from_json(j["rings"]);
  if (j.is_object()) {
    out.push_back(ring_from_json(j));
  } else if (j.is_array()) {
    for (const auto& r : j) out.push_back(ring_from_json(r));
  } else {
    throw MalformedInput("expected a ring, an array of rings, or {\"rings\": [...]}");
  }
  for (const auto& r : out)
    if (!(r.group() == out.front().group())) throw MalformedInput("rings over different groups");
  return out;
}

std::vector<SRing> parse_rings(const std::string& text) { return rings_from_json(parse_json(text)); }

Json enumeration_to_json(const EnumerationDocument& d) {
  Json j;
  j["group"] = d.group.orders();
  j["count"] = d.rings.size();
  j["seconds"] = d.stats.seconds;
  if (!d.filter.empty()) j["filter"] = d.filter;
  j["up_to_cayley"] = !d.class_sizes.empty();
  j["stats"] = {{"nodes", d.stats.nodes},
                {"candidates", d.stats.candidates},
                {"pruned_inverse", d.stats.pruned_inverse},
                {"pruned_multiplier", d.stats.pruned_multiplier},
                {"pruned_module", d.stats.pruned_module},
                {"leaves", d.stats.leaves},
                {"rejected_leaves", d.stats.rejected_leaves}};
  if (!d.class_sizes.empty()) j["class_sizes"] = d.class_sizes;
  Json rings = Json::array();
  for (const auto& r : d.rings) rings.push_back(ring_to_json(r));
  j["rings"] = std::move(rings);
  return j;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Budget: return "budget";
  }
  return "fail";
}

Json report_to_json(const std::vector<Claim>& claims) {
  Json arr = Json::array();
  for (const auto& c : claims) {
    Json o;
    o["id"] = c.id;
    o["status"] = to_string(c.status);
    o["detail"] = c.detail;
    o["seconds"] = c.seconds;
    arr.push_back(std::move(o));
  }
  Json j;
  j["claims"] = std::move(arr);
  return j;
}

}  // namespace schur
