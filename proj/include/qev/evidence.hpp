#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qev/errors.hpp"

namespace qev {

struct Hypothesis {
  std::string label;
  bool operator==(const Hypothesis&) const = default;
};

/// Exhaustive set of mutually exclusive hypotheses. The stored order is
/// presentational only.
class Frame {
 public:
  explicit Frame(std::vector<Hypothesis> hypotheses);

  std::size_t size() const { return hypotheses_.size(); }
  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }
  bool contains(const std::string& label) const;

  bool operator==(const Frame&) const = default;

 private:
  std::vector<Hypothesis> hypotheses_;
};

/// Nonempty subset of a frame's hypotheses. Members are kept sorted, and the
/// ordering over focal sets (lexicographic by sorted member labels, then by
/// cardinality) is the canonical ordering used for every matrix, vector and
/// combined-result layout.
class FocalSet {
 public:
  explicit FocalSet(std::vector<std::string> members);
  FocalSet(std::initializer_list<std::string> members)
      : FocalSet(std::vector<std::string>(members)) {}

  const std::vector<std::string>& members() const { return members_; }
  std::size_t cardinality() const { return members_.size(); }
  bool is_subset_of(const Frame& frame) const;

  /// Set intersection; empty optional when the intersection is empty.
  std::optional<FocalSet> intersect(const FocalSet& other) const;

  /// "{C,S}" — members joined in sorted order.
  std::string display() const;

  bool operator==(const FocalSet&) const = default;
  bool operator<(const FocalSet& other) const;

 private:
  std::vector<std::string> members_;
};

/// One complex-amplitude mass value sigma * e^{j alpha}. The belief carried by
/// the proposition is sigma^2 throughout.
struct QuantumMass {
  double amplitude = 0.0;
  double phase = 0.0;

  double belief() const { return amplitude * amplitude; }
  /// The literal complex value sigma * e^{j alpha}.
  std::complex<double> amplitude_phasor() const;
  /// The complex value whose modulus is the belief: sigma^2 * e^{j alpha}.
  /// Combination arithmetic operates on this embedding.
  std::complex<double> belief_phasor() const;
};

/// Mirrored first-quadrant components (|sigma cos a|, |sigma sin a|).
struct MirroredComponents {
  double real_part = 0.0;
  double imag_part = 0.0;
};
MirroredComponents components(const QuantumMass& mass);

struct Assignment {
  FocalSet set;
  QuantumMass mass;
};

/// One QBPA. Assignment order is significant: the 0-based position of an
/// assignment is its ordinal rank.
class OrdinalEvidence {
 public:
  OrdinalEvidence(std::string id, std::vector<Assignment> assignments);

  const std::string& id() const { return id_; }
  const std::vector<Assignment>& assignments() const { return assignments_; }
  std::size_t size() const { return assignments_.size(); }

  /// nullptr when the focal set carries no mass in this evidence.
  const QuantumMass* find(const FocalSet& set) const;
  double belief_sum() const;

 private:
  std::string id_;
  std::vector<Assignment> assignments_;
};

/// A shared frame plus two or more ordinal evidences over it.
class EvidenceSet {
 public:
  EvidenceSet(Frame frame, std::vector<OrdinalEvidence> evidences);

  const Frame& frame() const { return frame_; }
  const std::vector<OrdinalEvidence>& evidences() const { return evidences_; }
  std::size_t size() const { return evidences_.size(); }

 private:
  Frame frame_;
  std::vector<OrdinalEvidence> evidences_;
};

struct Violation {
  std::string rule;
  std::string detail;
};

inline constexpr double kDefaultMassTolerance = 1e-3;

/// Invariant check; violations are data, not failures. Empty result means the
/// evidence is valid within `tol`.
std::vector<Violation> validate_evidence(const OrdinalEvidence& ev,
                                         double tol = kDefaultMassTolerance);

/// Classic basic probability assignment keyed in canonical focal order.
using ClassicBpa = std::map<FocalSet, double>;

/// Projects beliefs sigma^2, discarding phases.
ClassicBpa to_classic(const OrdinalEvidence& ev);

/// Beliefs aligned to `canon`; focal sets absent from the evidence contribute
/// zero. Throws DataError when canon misses a set present in the evidence.
std::vector<double> belief_vector(const OrdinalEvidence& ev,
                                  std::span<const FocalSet> canon);

/// Union of all focal sets across the given evidences, canonically ordered.
std::vector<FocalSet> focal_union(std::span<const OrdinalEvidence> evidences);

}  // namespace qev
