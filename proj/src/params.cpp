#include "tdpair/params.hpp"

#include <map>
#include <mutex>

#include "json.hpp"

#include "tdpair/errors.hpp"

namespace tdpair {

namespace {

using nlohmann::ordered_json;

FieldElement scalar_from(const ordered_json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing parameter '") + key + "'");
  const auto& v = doc.at(key);
  if (v.is_string()) return FieldElement::parse(v.get<std::string>());
  if (v.is_number_integer()) return FieldElement(v.get<long>());
  throw ParseError(std::string("parameter '") + key + "' must be a rational string");
}

std::string scalar_to(const FieldElement& v, const char* key) {
  if (!v.is_rational()) throw InvalidParameters(std::string("parameter '") + key + "' is not rational");
  return v.rational().to_string();
}

}  // namespace

std::shared_ptr<const Basis> TDParameters::basis() const {
  // Bases are immutable and shared between all matrices of one shape.
  static std::mutex mu;
  static std::map<std::vector<int>, std::shared_ptr<const Basis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[shape.ell()];
  if (!slot) slot = std::make_shared<const Basis>(shape);
  return slot;
}

TDParameters TDParameters::from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid parameter JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("parameter JSON must be an object");
  if (!doc.contains("ell") || !doc["ell"].is_array()) throw ParseError("parameter 'ell' must be an array");
  std::vector<int> ell;
  for (const auto& e : doc["ell"]) {
    if (!e.is_number_integer()) throw ParseError("'ell' entries must be integers");
    ell.push_back(e.get<int>());
  }
  TDParameters p{Shape(ell),
                 scalar_from(doc, "theta0"),
                 scalar_from(doc, "theta0_star"),
                 scalar_from(doc, "h"),
                 scalar_from(doc, "h_star"),
                 scalar_from(doc, "omega"),
                 scalar_from(doc, "omega_star"),
                 {}};
  if (!doc.contains("a") || !doc["a"].is_array()) throw ParseError("parameter 'a' must be an array");
  for (const auto& e : doc["a"]) {
    if (e.is_string()) {
      p.a.push_back(FieldElement::parse(e.get<std::string>()));
    } else if (e.is_number_integer()) {
      p.a.push_back(FieldElement(e.get<long>()));
    } else {
      throw ParseError("'a' entries must be rational strings");
    }
  }
  if (p.a.size() != p.shape.size()) {
    throw ParseError("'a' has " + std::to_string(p.a.size()) + " entries but 'ell' has " +
                     std::to_string(p.shape.size()));
  }
  return p;
}

std::string TDParameters::to_json() const {
  ordered_json doc;
  doc["ell"] = shape.ell();
  doc["theta0"] = scalar_to(theta0, "theta0");
  doc["theta0_star"] = scalar_to(theta0_star, "theta0_star");
  doc["h"] = scalar_to(h, "h");
  doc["h_star"] = scalar_to(h_star, "h_star");
  doc["omega"] = scalar_to(omega, "omega");
  doc["omega_star"] = scalar_to(omega_star, "omega_star");
  auto arr = ordered_json::array();
  for (const auto& v : a) arr.push_back(scalar_to(v, "a"));
  doc["a"] = arr;
  return doc.dump();
}

}  // namespace tdpair
