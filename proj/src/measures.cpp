#include "qev/measures.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace qev {

std::string to_string(DistanceSemantics s) {
  switch (s) {
    case DistanceSemantics::ComplexModulus: return "complex";
    case DistanceSemantics::Belief: return "belief";
    case DistanceSemantics::Amplitude: return "amplitude";
  }
  return "?";
}

std::string to_string(DivergenceInput s) {
  return s == DivergenceInput::Belief ? "belief" : "amplitude";
}

std::string to_string(LogBase b) {
  switch (b) {
    case LogBase::Ten: return "10";
    case LogBase::Two: return "2";
    case LogBase::E: return "e";
  }
  return "?";
}

DistanceSemantics distance_semantics_from(const std::string& s) {
  if (s == "complex") return DistanceSemantics::ComplexModulus;
  if (s == "belief") return DistanceSemantics::Belief;
  if (s == "amplitude") return DistanceSemantics::Amplitude;
  throw DataError("unknown distance semantics '" + s + "'");
}

DivergenceInput divergence_input_from(const std::string& s) {
  if (s == "belief") return DivergenceInput::Belief;
  if (s == "amplitude") return DivergenceInput::Amplitude;
  throw DataError("unknown divergence input '" + s + "'");
}

LogBase log_base_from(const std::string& s) {
  if (s == "10") return LogBase::Ten;
  if (s == "2") return LogBase::Two;
  if (s == "e") return LogBase::E;
  throw DataError("unknown log base '" + s + "'");
}

std::string MeasureStrategy::name() const {
  return "distance=" + to_string(distance_semantics) +
         ",divergence=" + to_string(divergence_input) + ",log=" + to_string(log_base);
}

std::vector<MeasureStrategy> all_strategies() {
  std::vector<MeasureStrategy> out;
  for (auto d : {DistanceSemantics::ComplexModulus, DistanceSemantics::Belief,
                 DistanceSemantics::Amplitude}) {
    for (auto i : {DivergenceInput::Belief, DivergenceInput::Amplitude}) {
      for (auto b : {LogBase::Ten, LogBase::Two, LogBase::E}) {
        out.push_back({d, i, b});
      }
    }
  }
  return out;
}

PairwiseMatrix::PairwiseMatrix(MatrixKind kind, std::size_t n)
    : kind_(kind), n_(n), entries_(n * n, 0.0) {
  if (n_ < 2) throw DataError("pairwise matrix needs n >= 2");
  if (kind_ == MatrixKind::Similarity) {
    for (std::size_t i = 0; i < n_; ++i) entries_[i * n_ + i] = 1.0;
  }
}

PairwiseMatrix PairwiseMatrix::from_upper(MatrixKind kind, std::size_t n,
                                          std::span<const double> upper, bool normalized) {
  PairwiseMatrix m(kind, n);
  if (upper.size() != m.pair_count()) {
    throw DataError("upper triangle size mismatch");
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.set_pair(i, j, upper[k++]);
  }
  m.normalized_ = normalized;
  return m;
}

void PairwiseMatrix::set_pair(std::size_t i, std::size_t j, double value) {
  entries_[i * n_ + j] = value;
  entries_[j * n_ + i] = value;
}

double PairwiseMatrix::off_diagonal_sum() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) sum += at(i, j);
  }
  return sum;
}

namespace {

double log_divisor(LogBase b) {
  switch (b) {
    case LogBase::Ten: return std::log(10.0);
    case LogBase::Two: return std::log(2.0);
    case LogBase::E: return 1.0;
  }
  return 1.0;
}

std::vector<FocalSet> pair_union(const OrdinalEvidence& ei, const OrdinalEvidence& ej) {
  const OrdinalEvidence evs[] = {ei, ej};
  return focal_union(evs);
}

QuantumMass mass_or_zero(const OrdinalEvidence& ev, const FocalSet& set) {
  const QuantumMass* m = ev.find(set);
  return m ? *m : QuantumMass{0.0, 0.0};
}

}  // namespace

double end_to_end_distance(const OrdinalEvidence& ei, const OrdinalEvidence& ej,
                           const MeasureStrategy& s) {
  double total = 0.0;
  for (const auto& set : pair_union(ei, ej)) {
    const QuantumMass a = mass_or_zero(ei, set);
    const QuantumMass b = mass_or_zero(ej, set);
    switch (s.distance_semantics) {
      case DistanceSemantics::ComplexModulus:
        total += std::abs(a.amplitude_phasor() - b.amplitude_phasor());
        break;
      case DistanceSemantics::Belief:
        total += std::abs(a.belief() - b.belief());
        break;
      case DistanceSemantics::Amplitude:
        total += std::abs(a.amplitude - b.amplitude);
        break;
    }
  }
  return total;
}

double fuzzy_divergence(const OrdinalEvidence& ei, const OrdinalEvidence& ej,
                        const MeasureStrategy& s) {
  const double div = log_divisor(s.log_base);
  double left = 0.0, right = 0.0;
  for (const auto& set : pair_union(ei, ej)) {
    const QuantumMass a = mass_or_zero(ei, set);
    const QuantumMass b = mass_or_zero(ej, set);
    const double pi = s.divergence_input == DivergenceInput::Belief ? a.belief() : a.amplitude;
    const double pj = s.divergence_input == DivergenceInput::Belief ? b.belief() : b.amplitude;
    if (pi > 0.0) left += pi * std::log(2.0 * pi / (pi + pj)) / div;
    if (pj > 0.0) right += pj * std::log(2.0 * pj / (pj + pi)) / div;
  }
  return 0.5 * (left + right);
}

double sim1_intermediate(const OrdinalEvidence& ei, const OrdinalEvidence& ej) {
  double total = 0.0;
  for (const auto& set : pair_union(ei, ej)) {
    const auto a = components(mass_or_zero(ei, set));
    const auto b = components(mass_or_zero(ej, set));
    const double denom = a.real_part * a.imag_part + b.real_part * b.imag_part;
    if (denom < kDenominatorGuard) continue;
    total += 2.0 * std::min(a.real_part, b.real_part) *
             std::min(a.imag_part, b.imag_part) / denom;
  }
  return total;
}

PairwiseMatrix normalize_pairwise(const PairwiseMatrix& m) {
  const double sum = m.off_diagonal_sum();
  if (sum <= 0.0) {
    throw DegenerateMatrixError("all off-diagonal entries are zero");
  }
  PairwiseMatrix out(m.kind(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) out.set_pair(i, j, m.at(i, j) / sum);
  }
  out.mark_normalized();
  return out;
}

PairwiseMatrix uniform_normalized(MatrixKind kind, std::size_t n) {
  PairwiseMatrix out(kind, n);
  const double v = 1.0 / static_cast<double>(out.pair_count());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.set_pair(i, j, v);
  }
  out.mark_normalized();
  return out;
}

NormalizeOutcome normalize_or_uniform(const PairwiseMatrix& m) {
  try {
    return {normalize_pairwise(m), false};
  } catch (const DegenerateMatrixError&) {
    return {uniform_normalized(m.kind(), m.size()), true};
  }
}

PairwiseMatrix sim2_intermediate(const PairwiseMatrix& dxp, const PairwiseMatrix& dwb) {
  if (dxp.size() != dwb.size()) throw DataError("distance matrix dimension mismatch");
  if (!dxp.normalized() || !dwb.normalized()) {
    throw DataError("sim2 inputs must be normalized distance matrices");
  }
  PairwiseMatrix out(MatrixKind::Similarity, dxp.size());
  for (std::size_t i = 0; i < dxp.size(); ++i) {
    for (std::size_t j = i + 1; j < dxp.size(); ++j) {
      out.set_pair(i, j, (1.0 - dxp.at(i, j)) * (1.0 - dwb.at(i, j)));
    }
  }
  return out;
}

PairwiseMatrix sim2_matrix(const PairwiseMatrix& dxp, const PairwiseMatrix& dwb) {
  return normalize_or_uniform(sim2_intermediate(dxp, dwb)).matrix;
}

PairwiseMatrix combined_similarity(const PairwiseMatrix& s1, const PairwiseMatrix& s2) {
  if (s1.size() != s2.size()) throw DataError("similarity matrix dimension mismatch");
  PairwiseMatrix out(MatrixKind::Similarity, s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    out.set_pair(i, i, 2.0);
    for (std::size_t j = i + 1; j < s1.size(); ++j) {
      out.set_pair(i, j, s1.at(i, j) + s2.at(i, j));
    }
  }
  return out;
}

PairwiseMatrix build_pairwise(std::span<const OrdinalEvidence> evidences,
                              MatrixKind kind, const PairMeasure& fn) {
  PairwiseMatrix out(kind, evidences.size());
  for (std::size_t i = 0; i < evidences.size(); ++i) {
    for (std::size_t j = i + 1; j < evidences.size(); ++j) {
      out.set_pair(i, j, fn(evidences[i], evidences[j]));
    }
  }
  return out;
}

PairwiseMatrix build_pairwise_parallel(std::span<const OrdinalEvidence> evidences,
                                       MatrixKind kind, const PairMeasure& fn) {
  const std::size_t n = evidences.size();
  PairwiseMatrix out(kind, n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const auto count = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < count; ++k) {
    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
    out.set_pair(i, j, fn(evidences[i], evidences[j]));
  }
  return out;
}

}  // namespace qev
