#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qev/evidence.hpp"
#include "qev/measures.hpp"
#include "qev/ordinal.hpp"

namespace qev {

inline constexpr double kConflictTolerance = 1e-9;

/// Conflict mass K gathered from empty intersections during one combination
/// step; |K| is the degree of conflict.
struct ConflictRecord {
  std::complex<double> k;
  double magnitude = 0.0;
};

struct CombineResult {
  OrdinalEvidence evidence;
  ConflictRecord conflict;
};

/// Conjunctive combination of two QBPAs. Masses enter as complex values with
/// modulus sigma^2 and argument alpha; per nonempty focal set the products of
/// intersecting pairs are summed and divided by (1 - K), then the result is
/// renormalized so beliefs sum to 1. Output assignments follow canonical
/// focal order. Throws TotalConflictError when |1 - K| <= eps.
CombineResult quantum_combine(const OrdinalEvidence& a, const OrdinalEvidence& b,
                              double eps = kConflictTolerance);

/// Rescales beliefs to sum 1, keeping phases; amplitudes become square roots
/// of the rescaled beliefs. Idempotent. Throws PipelineError on all-zero input.
OrdinalEvidence quantum_normalize(const OrdinalEvidence& ev);

/// Dempster's rule on real masses; the zero-phase oracle for quantum_combine.
ClassicBpa classical_dempster(const ClassicBpa& a, const ClassicBpa& b,
                              double eps = kConflictTolerance);

/// Credibility weights: row sums of SIM excluding the diagonal, normalized to
/// sum 1.
std::vector<double> evidence_weights(const PairwiseMatrix& sim);

/// Convex combination of beliefs per focal set followed by renormalization.
/// The phase of a focal set is the argument of the weight-averaged complex
/// values sigma e^{j alpha} across evidences.
OrdinalEvidence weighted_average(std::span<const OrdinalEvidence> mods,
                                 std::span<const double> weights);

struct FoldResult {
  OrdinalEvidence evidence;
  std::vector<ConflictRecord> conflicts;
};

/// Left fold of quantum_combine over `copies` copies of the evidence
/// (copies - 1 combination steps; copies = 1 is the identity).
FoldResult fuse_n_fold(const OrdinalEvidence& ev, int copies,
                       double eps = kConflictTolerance);

/// One cell of a computed-vs-expected comparison.
struct DiscrepancyEntry {
  std::string table;
  std::string cell;
  double expected = 0.0;
  double computed = 0.0;
  double difference = 0.0;
  std::string strategy;
};

struct PipelineOptions {
  MeasureStrategy strategy;
  std::optional<int> copies;  // default: number of evidences
};

struct FusionReport {
  MeasureStrategy strategy;
  int copies = 0;
  PairwiseMatrix dxp;
  PairwiseMatrix dwb;
  PairwiseMatrix sim1;
  PairwiseMatrix sim2;
  PairwiseMatrix sim;
  std::vector<double> weights;
  std::vector<OrdinalEvidence> modified;
  OrdinalEvidence averaged;
  OrdinalEvidence combined;
  ClassicBpa combined_classic;
  OrdinalEvidence baseline;
  ClassicBpa baseline_classic;
  std::vector<ConflictRecord> combined_conflicts;
  std::vector<ConflictRecord> baseline_conflicts;
  std::vector<std::string> evidence_ids;
  std::vector<std::string> notes;
  std::vector<DiscrepancyEntry> discrepancies;
};

/// Full pipeline: distance matrices, similarities, credibility weights,
/// ordinal reweighting, weighted average, n-fold self-combination, plus the
/// baseline fold of the raw evidences in file order.
FusionReport run_pipeline(const EvidenceSet& es, const PipelineOptions& options = {});

}  // namespace qev
