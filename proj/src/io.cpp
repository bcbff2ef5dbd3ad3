#include "tdpair/io.hpp"

#include <algorithm>

#include "json.hpp"

namespace tdpair {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

nlohmann::ordered_json index_list(const Basis& b) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& n : b) {
    auto entry = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < n.size(); ++k) entry.push_back(n[k]);
    arr.push_back(entry);
  }
  return arr;
}

}  // namespace

std::string matrix_to_csv(const ExactMatrix& m, const std::string& corner) {
  const Basis& b = m.basis();
  std::string out = quoted(corner);
  for (const auto& n : b) out += "," + quoted(n.to_string());
  out += "\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += quoted(b[r].to_string());
    for (std::size_t c = 0; c < m.size(); ++c) out += "," + m.at(r, c).to_string();
    out += "\n";
  }
  return out;
}

std::string matrix_to_json(const ExactMatrix& m, const std::string& name) {
  nlohmann::ordered_json doc;
  doc["name"] = name;
  doc["rows"] = index_list(m.basis());
  doc["cols"] = index_list(m.basis());
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      const FieldElement v = m.at(r, c);
      if (!v.is_zero()) entries.push_back(nlohmann::ordered_json::array({r, c, v.to_string()}));
    }
  }
  doc["entries"] = entries;
  return doc.dump(2) + "\n";
}

std::string matrix_to_text(const ExactMatrix& m) {
  const Basis& b = m.basis();
  std::vector<std::vector<std::string>> cells(m.size() + 1, std::vector<std::string>(m.size() + 1));
  for (std::size_t k = 0; k < m.size(); ++k) {
    cells[0][k + 1] = b[k].to_string();
    cells[k + 1][0] = b[k].to_string();
    for (std::size_t c = 0; c < m.size(); ++c) cells[k + 1][c + 1] = m.at(k, c).to_string();
  }
  std::vector<std::size_t> width(m.size() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += std::string(width[c] - row[c].size() + (c ? 2 : 0), ' ') + row[c];
    }
    out += "\n";
  }
  return out;
}

}  // namespace tdpair
