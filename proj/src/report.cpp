#include "tdpair/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace tdpair {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "SKIPPED";
  }
  return "?";
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.check == name) return &c;
  }
  return nullptr;
}

std::string VerificationReport::to_text(bool include_timing) const {
  std::string out;
  for (const auto& c : checks) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", c.millis);
    out += to_string(c.status) + "  " + c.check + "  (" + c.paper_ref + ")";
    out += include_timing ? std::string("  ") + ms + " ms\n" : std::string("\n");
    if (!c.note.empty()) out += "      note: " + c.note + "\n";
    if (c.witness) {
      const Witness& w = *c.witness;
      out += "      witness: " + w.description;
      if (w.row) out += " row=" + w.row->to_string();
      if (w.col) out += " col=" + w.col->to_string();
      if (!w.expected.empty() || !w.actual.empty()) out += " expected=" + w.expected + " actual=" + w.actual;
      out += "\n";
    }
  }
  out += passed() ? "RESULT: PASS\n" : "RESULT: FAIL\n";
  return out;
}

std::string VerificationReport::to_json(bool include_timing) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["pass"] = passed();
  doc["params"] = params_json.empty() ? ordered_json(nullptr) : ordered_json::parse(params_json);
  auto arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json j;
    j["check"] = c.check;
    j["paper_ref"] = c.paper_ref;
    j["pass"] = c.passed();
    j["status"] = to_string(c.status);
    if (c.witness) {
      ordered_json w;
      w["description"] = c.witness->description;
      w["row"] = c.witness->row ? ordered_json(c.witness->row->to_string()) : ordered_json(nullptr);
      w["col"] = c.witness->col ? ordered_json(c.witness->col->to_string()) : ordered_json(nullptr);
      w["expected"] = c.witness->expected;
      w["actual"] = c.witness->actual;
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    if (!c.note.empty()) j["note"] = c.note;
    if (include_timing) j["millis"] = c.millis;
    arr.push_back(j);
  }
  doc["checks"] = arr;
  return doc.dump(2);
}

}  // namespace tdpair
