#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qev/evidence.hpp"

namespace qev {

enum class DistanceSemantics { ComplexModulus, Belief, Amplitude };
enum class DivergenceInput { Belief, Amplitude };
enum class LogBase { Ten, Two, E };

/// Interpretation knobs for the two distance measures. Defaults follow the
/// most literal reading: complex-modulus differences, beliefs into the
/// divergence, base-10 logarithms.
struct MeasureStrategy {
  DistanceSemantics distance_semantics = DistanceSemantics::ComplexModulus;
  DivergenceInput divergence_input = DivergenceInput::Belief;
  LogBase log_base = LogBase::Ten;

  std::string name() const;
  bool operator==(const MeasureStrategy&) const = default;
};

/// All 18 strategy combinations in a fixed enumeration order.
std::vector<MeasureStrategy> all_strategies();

std::string to_string(DistanceSemantics s);
std::string to_string(DivergenceInput s);
std::string to_string(LogBase b);
DistanceSemantics distance_semantics_from(const std::string& s);
DivergenceInput divergence_input_from(const std::string& s);
LogBase log_base_from(const std::string& s);

enum class MatrixKind { Distance, Similarity };

/// Symmetric n x n distance or similarity matrix. Distance matrices carry a
/// zero diagonal, similarity matrices a unit diagonal. `normalized` records
/// that the off-diagonal entries were divided by their unordered-pair sum.
class PairwiseMatrix {
 public:
  PairwiseMatrix(MatrixKind kind, std::size_t n);

  static PairwiseMatrix from_upper(MatrixKind kind, std::size_t n,
                                   std::span<const double> upper, bool normalized);

  MatrixKind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  bool normalized() const { return normalized_; }
  void mark_normalized() { normalized_ = true; }

  double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set_pair(std::size_t i, std::size_t j, double value);

  /// Sum over unordered pairs i < j.
  double off_diagonal_sum() const;
  std::size_t pair_count() const { return n_ * (n_ - 1) / 2; }

 private:
  MatrixKind kind_;
  std::size_t n_;
  bool normalized_ = false;
  std::vector<double> entries_;
};

inline constexpr double kDenominatorGuard = 1e-12;

/// Sum over the union of focal sets of the per-proposition difference
/// magnitude under the chosen semantics.
double end_to_end_distance(const OrdinalEvidence& ei, const OrdinalEvidence& ej,
                           const MeasureStrategy& s = {});

/// Symmetrized Jensen-Shannon-style divergence over the union of focal sets.
/// Terms with zero input contribute zero; the p>0 vs 0 term is p*log_b(2).
double fuzzy_divergence(const OrdinalEvidence& ei, const OrdinalEvidence& ej,
                        const MeasureStrategy& s = {});

/// Overlap of mirrored first-quadrant components, summed per proposition:
///   2 min(r_i,r_j) min(im_i,im_j) / (r_i im_i + r_j im_j).
/// Terms whose denominator falls below kDenominatorGuard contribute zero.
double sim1_intermediate(const OrdinalEvidence& ei, const OrdinalEvidence& ej);

/// Divides every off-diagonal entry by the unordered-pair sum and forces the
/// diagonal (0 for distance, 1 for similarity). Throws DegenerateMatrixError
/// when all off-diagonal entries are zero.
PairwiseMatrix normalize_pairwise(const PairwiseMatrix& m);

/// Uniform normalized matrix: every off-diagonal entry 1/#pairs.
PairwiseMatrix uniform_normalized(MatrixKind kind, std::size_t n);

struct NormalizeOutcome {
  PairwiseMatrix matrix;
  bool fell_back_uniform = false;
};

/// normalize_pairwise with the degenerate case mapped to the uniform matrix.
NormalizeOutcome normalize_or_uniform(const PairwiseMatrix& m);

/// Raw intermediate similarities (1 - dxp)(1 - dwb); inputs must be
/// normalized matrices of equal size.
PairwiseMatrix sim2_intermediate(const PairwiseMatrix& dxp, const PairwiseMatrix& dwb);

/// Normalized second similarity. Degenerate intermediates (e.g. n = 2, where
/// both normalized distances are exactly 1) fall back to the uniform matrix.
PairwiseMatrix sim2_matrix(const PairwiseMatrix& dxp, const PairwiseMatrix& dwb);

/// SIM = Sim1 + Sim2 entrywise; diagonal 2; unordered off-diagonal sum 2.
PairwiseMatrix combined_similarity(const PairwiseMatrix& s1, const PairwiseMatrix& s2);

using PairMeasure =
    std::function<double(const OrdinalEvidence&, const OrdinalEvidence&)>;

/// Serial reference builder: evaluates `fn` once per unordered pair.
PairwiseMatrix build_pairwise(std::span<const OrdinalEvidence> evidences,
                              MatrixKind kind, const PairMeasure& fn);

/// OpenMP builder over the flattened pair list. Each pair writes its own two
/// cells, so the result is bit-identical to the serial builder under any
/// schedule.
PairwiseMatrix build_pairwise_parallel(std::span<const OrdinalEvidence> evidences,
                                       MatrixKind kind, const PairMeasure& fn);

}  // namespace qev
