#pragma once

#include <string>
#include <string_view>

#include "qev/evidence.hpp"

namespace qev {

/// Parses the evidence-file format:
///   {"frame": ["C","F","S"],
///    "evidences": [{"id": "...", "assignments":
///        [{"set": ["C"], "amplitude": 0.7416, "phase": 0.4882}, ...]}, ...]}
/// Assignment order in the file becomes ordinal rank. Throws DataError on
/// malformed documents, unknown hypothesis labels, duplicate focal sets and
/// mass-sum violations beyond `mass_tol`.
EvidenceSet parse_evidence_set(std::string_view document,
                               double mass_tol = kDefaultMassTolerance);

EvidenceSet load_evidence_file(const std::string& path,
                               double mass_tol = kDefaultMassTolerance);

/// Inverse of parse_evidence_set. Amplitude/phase values serialize with
/// shortest round-trip formatting, so decimal text written by this function
/// re-parses to the identical doubles and re-serializes byte-identically.
std::string serialize_evidence_set(const EvidenceSet& es);

}  // namespace qev
