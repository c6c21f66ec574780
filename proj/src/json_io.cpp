#include "qev/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qev {

namespace {
using nlohmann::ordered_json;

double require_number(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw DataError(where + ": missing numeric field '" + key + "'");
  }
  return obj[key].get<double>();
}
}  // namespace

EvidenceSet parse_evidence_set(std::string_view document, double mass_tol) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const ordered_json::parse_error& e) {
    throw DataError(std::string("malformed evidence document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("frame") || !doc.contains("evidences")) {
    throw DataError("evidence document needs 'frame' and 'evidences'");
  }

  std::vector<Hypothesis> hypotheses;
  for (const auto& label : doc["frame"]) {
    if (!label.is_string()) throw DataError("frame labels must be strings");
    hypotheses.push_back({label.get<std::string>()});
  }
  Frame frame(std::move(hypotheses));

  std::vector<OrdinalEvidence> evidences;
  for (const auto& ev : doc["evidences"]) {
    if (!ev.contains("id") || !ev["id"].is_string()) {
      throw DataError("evidence entry without string 'id'");
    }
    const std::string id = ev["id"].get<std::string>();
    if (!ev.contains("assignments") || !ev["assignments"].is_array()) {
      throw DataError("evidence '" + id + "' without 'assignments' array");
    }
    std::vector<Assignment> assignments;
    for (const auto& a : ev["assignments"]) {
      if (!a.contains("set") || !a["set"].is_array()) {
        throw DataError("evidence '" + id + "': assignment without 'set'");
      }
      std::vector<std::string> members;
      for (const auto& m : a["set"]) {
        if (!m.is_string()) throw DataError("evidence '" + id + "': set members must be strings");
        const std::string label = m.get<std::string>();
        if (!frame.contains(label)) {
          throw DataError("evidence '" + id + "': unknown hypothesis label '" + label + "'");
        }
        members.push_back(label);
      }
      QuantumMass mass{require_number(a, "amplitude", "evidence '" + id + "'"),
                       require_number(a, "phase", "evidence '" + id + "'")};
      assignments.push_back({FocalSet(std::move(members)), mass});
    }
    evidences.emplace_back(id, std::move(assignments));
  }

  EvidenceSet es(std::move(frame), std::move(evidences));
  for (const auto& ev : es.evidences()) {
    for (const auto& v : validate_evidence(ev, mass_tol)) {
      throw DataError(v.rule + ": " + v.detail);
    }
  }
  return es;
}

EvidenceSet load_evidence_file(const std::string& path, double mass_tol) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open evidence file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_evidence_set(buf.str(), mass_tol);
}

std::string serialize_evidence_set(const EvidenceSet& es) {
  ordered_json doc;
  doc["frame"] = ordered_json::array();
  for (const auto& h : es.frame().hypotheses()) doc["frame"].push_back(h.label);
  doc["evidences"] = ordered_json::array();
  for (const auto& ev : es.evidences()) {
    ordered_json entry;
    entry["id"] = ev.id();
    entry["assignments"] = ordered_json::array();
    for (const auto& a : ev.assignments()) {
      ordered_json item;
      item["set"] = a.set.members();
      item["amplitude"] = a.mass.amplitude;
      item["phase"] = a.mass.phase;
      entry["assignments"].push_back(std::move(item));
    }
    doc["evidences"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace qev
