#include "qev/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qev {

namespace {

double phase_of(const std::complex<double>& z) {
  return std::abs(z) > 0.0 ? std::arg(z) : 0.0;
}

OrdinalEvidence evidence_from_values(const std::string& id,
                                     const std::map<FocalSet, std::complex<double>>& values) {
  std::vector<Assignment> assignments;
  assignments.reserve(values.size());
  for (const auto& [set, z] : values) {
    assignments.push_back({set, {std::sqrt(std::abs(z)), phase_of(z)}});
  }
  return {id, std::move(assignments)};
}

}  // namespace

CombineResult quantum_combine(const OrdinalEvidence& a, const OrdinalEvidence& b,
                              double eps) {
  std::map<FocalSet, std::complex<double>> acc;
  std::complex<double> conflict{0.0, 0.0};
  for (const auto& pa : a.assignments()) {
    const auto va = pa.mass.belief_phasor();
    for (const auto& pb : b.assignments()) {
      const auto product = va * pb.mass.belief_phasor();
      if (auto common = pa.set.intersect(pb.set)) {
        acc[*common] += product;
      } else {
        conflict += product;
      }
    }
  }
  const std::complex<double> denom = 1.0 - conflict;
  if (acc.empty() || std::abs(denom) <= eps) {
    throw TotalConflictError("total conflict: |1-K| = " + std::to_string(std::abs(denom)), 1);
  }
  std::map<FocalSet, std::complex<double>> values;
  for (auto& [set, z] : acc) values.emplace(set, z / denom);

  const std::string id = a.id() == b.id() ? a.id() : a.id() + "+" + b.id();
  return {quantum_normalize(evidence_from_values(id, values)),
          {conflict, std::abs(conflict)}};
}

OrdinalEvidence quantum_normalize(const OrdinalEvidence& ev) {
  const double total = ev.belief_sum();
  if (total <= 0.0) {
    throw PipelineError("quantum normalize: all masses are zero");
  }
  std::vector<Assignment> out;
  out.reserve(ev.size());
  for (const auto& a : ev.assignments()) {
    out.push_back({a.set, {std::sqrt(a.mass.belief() / total), a.mass.phase}});
  }
  return {ev.id(), std::move(out)};
}

ClassicBpa classical_dempster(const ClassicBpa& a, const ClassicBpa& b, double eps) {
  ClassicBpa acc;
  double conflict = 0.0;
  for (const auto& [sa, ma] : a) {
    for (const auto& [sb, mb] : b) {
      const double product = ma * mb;
      if (auto common = sa.intersect(sb)) {
        acc[*common] += product;
      } else {
        conflict += product;
      }
    }
  }
  const double denom = 1.0 - conflict;
  if (acc.empty() || denom <= eps) {
    throw TotalConflictError("total conflict: K = " + std::to_string(conflict), 1);
  }
  for (auto& [set, m] : acc) m /= denom;
  return acc;
}

std::vector<double> evidence_weights(const PairwiseMatrix& sim) {
  const std::size_t n = sim.size();
  std::vector<double> intermediate(n, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      intermediate[i] += sim.at(i, j);
    }
    total += intermediate[i];
  }
  if (total <= 0.0) {
    throw PipelineError("evidence weights: all intermediate weights are zero");
  }
  for (double& w : intermediate) w /= total;
  return intermediate;
}

OrdinalEvidence weighted_average(std::span<const OrdinalEvidence> mods,
                                 std::span<const double> weights) {
  if (mods.size() != weights.size()) {
    throw DataError("weighted average: " + std::to_string(mods.size()) + " evidences vs " +
                    std::to_string(weights.size()) + " weights");
  }
  if (mods.empty()) throw DataError("weighted average: no evidences");

  // domain in first-seen order, so identical inputs come back unchanged
  std::vector<FocalSet> domain;
  for (const auto& ev : mods) {
    for (const auto& a : ev.assignments()) {
      if (std::find(domain.begin(), domain.end(), a.set) == domain.end()) {
        domain.push_back(a.set);
      }
    }
  }

  std::vector<Assignment> out;
  out.reserve(domain.size());
  double total = 0.0;
  std::vector<double> beliefs;
  std::vector<double> phases;
  for (const auto& set : domain) {
    double belief = 0.0;
    std::complex<double> phasor{0.0, 0.0};
    for (std::size_t i = 0; i < mods.size(); ++i) {
      if (const QuantumMass* m = mods[i].find(set)) {
        belief += weights[i] * m->belief();
        phasor += weights[i] * m->amplitude_phasor();
      }
    }
    beliefs.push_back(belief);
    phases.push_back(phase_of(phasor));
    total += belief;
  }
  if (total <= 0.0) throw PipelineError("weighted average: zero total belief");
  for (std::size_t k = 0; k < domain.size(); ++k) {
    out.push_back({domain[k], {std::sqrt(beliefs[k] / total), phases[k]}});
  }
  return {"average", std::move(out)};
}

FoldResult fuse_n_fold(const OrdinalEvidence& ev, int copies, double eps) {
  if (copies < 1) throw DataError("fuse_n_fold: copies must be >= 1");
  FoldResult result{ev, {}};
  for (int step = 1; step < copies; ++step) {
    try {
      CombineResult combined = quantum_combine(result.evidence, ev, eps);
      result.evidence = std::move(combined.evidence);
      result.conflicts.push_back(combined.conflict);
    } catch (const TotalConflictError& e) {
      throw TotalConflictError(std::string(e.what()) + " at combination step " +
                                   std::to_string(step),
                               step);
    }
  }
  return result;
}

FusionReport run_pipeline(const EvidenceSet& es, const PipelineOptions& options) {
  const auto& evs = es.evidences();
  const std::size_t n = evs.size();
  const int copies = options.copies.value_or(static_cast<int>(n));
  if (copies < 1) throw DataError("copies must be >= 1");

  std::vector<std::string> notes;
  const auto build = [&](MatrixKind kind, const PairMeasure& fn) {
    // parallel builder pays off only for large sets; results are identical
    return n >= 16 ? build_pairwise_parallel(evs, kind, fn)
                   : build_pairwise(evs, kind, fn);
  };

  const MeasureStrategy& strategy = options.strategy;
  auto dxp_raw = build(MatrixKind::Distance, [&](const auto& a, const auto& b) {
    return end_to_end_distance(a, b, strategy);
  });
  auto dxp = normalize_or_uniform(dxp_raw);
  if (dxp.fell_back_uniform) notes.push_back("d_XP degenerate (identical evidences); uniform fallback");

  auto dwb_raw = build(MatrixKind::Distance, [&](const auto& a, const auto& b) {
    return fuzzy_divergence(a, b, strategy);
  });
  auto dwb = normalize_or_uniform(dwb_raw);
  if (dwb.fell_back_uniform) notes.push_back("d_WB degenerate (identical evidences); uniform fallback");

  auto sim1_raw = build(MatrixKind::Similarity, [](const auto& a, const auto& b) {
    return sim1_intermediate(a, b);
  });
  auto sim1 = normalize_or_uniform(sim1_raw);
  if (sim1.fell_back_uniform) notes.push_back("Sim1 degenerate (zero component products); uniform fallback");

  auto sim2 = normalize_or_uniform(sim2_intermediate(dxp.matrix, dwb.matrix));
  if (sim2.fell_back_uniform) notes.push_back("Sim2 degenerate; uniform fallback");

  auto sim = combined_similarity(sim1.matrix, sim2.matrix);
  auto weights = evidence_weights(sim);

  std::vector<OrdinalEvidence> modified;
  modified.reserve(n);
  for (const auto& ev : evs) modified.push_back(ordinal_reweight(ev));

  auto averaged = weighted_average(modified, weights);
  auto folded = fuse_n_fold(averaged, copies);

  OrdinalEvidence baseline = evs.front();
  std::vector<ConflictRecord> baseline_conflicts;
  for (std::size_t i = 1; i < n; ++i) {
    try {
      CombineResult combined = quantum_combine(baseline, evs[i]);
      baseline = std::move(combined.evidence);
      baseline_conflicts.push_back(combined.conflict);
    } catch (const TotalConflictError& e) {
      throw TotalConflictError(std::string(e.what()) + " at combination step " +
                                   std::to_string(i),
                               static_cast<int>(i));
    }
  }

  notes.push_back("final result: weighted average self-combined " +
                  std::to_string(copies - 1) + " times (copies=" + std::to_string(copies) + ")");
  notes.push_back("averaged phases: argument of the weight-averaged complex values");

  std::vector<std::string> ids;
  ids.reserve(n);
  for (const auto& ev : evs) ids.push_back(ev.id());

  return FusionReport{strategy,
                      copies,
                      std::move(dxp.matrix),
                      std::move(dwb.matrix),
                      std::move(sim1.matrix),
                      std::move(sim2.matrix),
                      std::move(sim),
                      std::move(weights),
                      std::move(modified),
                      averaged,
                      folded.evidence,
                      to_classic(folded.evidence),
                      baseline,
                      to_classic(baseline),
                      std::move(folded.conflicts),
                      std::move(baseline_conflicts),
                      std::move(ids),
                      std::move(notes),
                      {}};
}

}  // namespace qev
