#pragma once

// Test-only utilities: random evidence generation plus an independent
// bitmask-based Dempster implementation used as an oracle against the
// library's combination paths.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qev/evidence.hpp"

namespace qtest {

inline std::vector<std::string> frame_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('A' + i)));
  return out;
}

inline qev::FocalSet set_from_mask(std::uint64_t mask, const std::vector<std::string>& labels) {
  std::vector<std::string> members;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (mask & (1ull << i)) members.push_back(labels[i]);
  }
  return qev::FocalSet(std::move(members));
}

inline std::uint64_t mask_of(const qev::FocalSet& set, const std::vector<std::string>& labels) {
  std::uint64_t mask = 0;
  for (const auto& m : set.members()) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == m) mask |= 1ull << i;
    }
  }
  return mask;
}

/// Valid random evidence: 1..max_sets distinct focal structures, beliefs
/// normalized to 1, phases zero or uniform in [0, 1.5].
inline qev::OrdinalEvidence random_evidence(const std::string& id,
                                            const std::vector<std::string>& labels,
                                            std::mt19937_64& rng, bool zero_phase,
                                            std::size_t max_sets = 6) {
  const std::uint64_t full = (1ull << labels.size()) - 1;
  std::uniform_int_distribution<std::uint64_t> mask_dist(1, full);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 1.5);

  const std::size_t want = 1 + rng() % std::min<std::size_t>(max_sets, full);
  std::vector<std::uint64_t> masks;
  while (masks.size() < want) {
    const std::uint64_t m = mask_dist(rng);
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
  }

  std::vector<double> beliefs(masks.size());
  double total = 0.0;
  for (auto& b : beliefs) total += (b = unit(rng));

  std::vector<qev::Assignment> assignments;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    assignments.push_back({set_from_mask(masks[i], labels),
                           {std::sqrt(beliefs[i] / total), zero_phase ? 0.0 : angle(rng)}});
  }
  return {id, std::move(assignments)};
}

/// Low-conflict random evidence: every singleton plus the full frame set,
/// beliefs biased toward the first hypothesis. Long combination folds of
/// such evidences stay clear of total conflict.
inline qev::OrdinalEvidence agreeable_evidence(const std::string& id,
                                               const std::vector<std::string>& labels,
                                               std::mt19937_64& rng) {
  std::uniform_real_distribution<double> noise(0.1, 0.4);
  std::uniform_real_distribution<double> angle(0.0, 1.5);
  std::vector<double> beliefs;
  double total = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    total += beliefs.emplace_back((i == 0 ? 2.0 : 0.0) + noise(rng));
  }
  total += beliefs.emplace_back(noise(rng));  // full frame set
  std::vector<qev::Assignment> assignments;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    assignments.push_back(
        {qev::FocalSet{labels[i]}, {std::sqrt(beliefs[i] / total), angle(rng)}});
  }
  assignments.push_back(
      {qev::FocalSet(labels), {std::sqrt(beliefs.back() / total), angle(rng)}});
  return {id, std::move(assignments)};
}

/// Independent Dempster oracle over bitmask-keyed masses.
inline std::map<std::uint64_t, double> dempster_masks(const std::map<std::uint64_t, double>& a,
                                                      const std::map<std::uint64_t, double>& b) {
  std::map<std::uint64_t, double> acc;
  double conflict = 0.0;
  for (const auto& [ma, va] : a) {
    for (const auto& [mb, vb] : b) {
      const std::uint64_t common = ma & mb;
      if (common) {
        acc[common] += va * vb;
      } else {
        conflict += va * vb;
      }
    }
  }
  for (auto& [m, v] : acc) v /= (1.0 - conflict);
  return acc;
}

inline std::map<std::uint64_t, double> masks_of(const qev::OrdinalEvidence& ev,
                                                const std::vector<std::string>& labels) {
  std::map<std::uint64_t, double> out;
  for (const auto& a : ev.assignments()) out[mask_of(a.set, labels)] = a.mass.belief();
  return out;
}

}  // namespace qtest
