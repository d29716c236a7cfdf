#include "xmodlie/report.hpp"

#include <sstream>

namespace xmodlie {

namespace {

void render_human(const Json& node, const std::string& key, int depth,
                  std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (node.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (const auto& [k, v] : node.items())
      render_human(v, k, key.empty() ? depth : depth + 1, os);
    return;
  }
  if (node.is_array()) {
    bool scalar_only = true;
    for (const auto& v : node)
      if (v.is_object() || v.is_array()) scalar_only = false;
    if (scalar_only) {
      os << pad << key << ": [";
      bool first = true;
      for (const auto& v : node) {
        if (!first) os << ", ";
        first = false;
        os << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      os << "]\n";
      return;
    }
    os << pad << key << ":\n";
    Index i = 0;
    for (const auto& v : node)
      render_human(v, "- " + std::to_string(i++), depth + 1, os);
    return;
  }
  os << pad << key << ": "
     << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
}

}  // namespace

std::string Report::render(bool machine) const {
  if (machine) return doc.dump(2) + "\n";
  std::ostringstream os;
  render_human(doc, "", 0, os);
  return os.str();
}

Json json_rational(const Rational& r) { return to_string(r); }

Json json_matrix(const RatMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_subspace(const Subspace& s) {
  Json out;
  out["ambient"] = s.ambient();
  out["dim"] = s.dim();
  out["basis"] = json_matrix(s.basis());
  return out;
}

Json json_verdict(const Verdict& v) {
  Json out;
  out["pass"] = v.pass();
  if (!v.pass()) {
    Json list = Json::array();
    for (const auto& viol : v.violations()) list.push_back(viol.to_string());
    out["violations"] = std::move(list);
  }
  return out;
}

}  // namespace xmodlie
