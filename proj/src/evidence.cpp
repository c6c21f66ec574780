#include "qev/evidence.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qev {

Frame::Frame(std::vector<Hypothesis> hypotheses) : hypotheses_(std::move(hypotheses)) {
  if (hypotheses_.size() < 2) {
    throw DataError("frame needs at least 2 hypotheses, got " +
                    std::to_string(hypotheses_.size()));
  }
  std::set<std::string> seen;
  for (const auto& h : hypotheses_) {
    if (h.label.empty()) throw DataError("empty hypothesis label");
    if (!seen.insert(h.label).second) {
      throw DataError("duplicate hypothesis label '" + h.label + "'");
    }
  }
}

bool Frame::contains(const std::string& label) const {
  return std::any_of(hypotheses_.begin(), hypotheses_.end(),
                     [&](const Hypothesis& h) { return h.label == label; });
}

FocalSet::FocalSet(std::vector<std::string> members) : members_(std::move(members)) {
  if (members_.empty()) throw DataError("focal set must be nonempty");
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw DataError("duplicate member '" + *dup + "' in focal set");
  }
  for (const auto& m : members_) {
    if (m.empty()) throw DataError("empty member label in focal set");
  }
}

bool FocalSet::is_subset_of(const Frame& frame) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](const std::string& m) { return frame.contains(m); });
}

std::optional<FocalSet> FocalSet::intersect(const FocalSet& other) const {
  std::vector<std::string> common;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return FocalSet(std::move(common));
}

std::string FocalSet::display() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ',';
    out << members_[i];
  }
  out << '}';
  return out.str();
}

bool FocalSet::operator<(const FocalSet& other) const {
  if (members_ != other.members_) return members_ < other.members_;
  return cardinality() < other.cardinality();
}

std::complex<double> QuantumMass::amplitude_phasor() const {
  return std::polar(amplitude, phase);
}

std::complex<double> QuantumMass::belief_phasor() const {
  return std::polar(amplitude * amplitude, phase);
}

MirroredComponents components(const QuantumMass& mass) {
  const auto z = mass.amplitude_phasor();
  return {std::abs(z.real()), std::abs(z.imag())};
}

OrdinalEvidence::OrdinalEvidence(std::string id, std::vector<Assignment> assignments)
    : id_(std::move(id)), assignments_(std::move(assignments)) {
  if (id_.empty()) throw DataError("evidence id must be nonempty");
  if (assignments_.empty()) {
    throw DataError("evidence '" + id_ + "' has no assignments");
  }
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    for (std::size_t j = i + 1; j < assignments_.size(); ++j) {
      if (assignments_[i].set == assignments_[j].set) {
        throw DataError("evidence '" + id_ + "' assigns " + assignments_[i].set.display() +
                        " twice");
      }
    }
  }
}

const QuantumMass* OrdinalEvidence::find(const FocalSet& set) const {
  for (const auto& a : assignments_) {
    if (a.set == set) return &a.mass;
  }
  return nullptr;
}

double OrdinalEvidence::belief_sum() const {
  double sum = 0.0;
  for (const auto& a : assignments_) sum += a.mass.belief();
  return sum;
}

EvidenceSet::EvidenceSet(Frame frame, std::vector<OrdinalEvidence> evidences)
    : frame_(std::move(frame)), evidences_(std::move(evidences)) {
  if (evidences_.size() < 2) {
    throw DataError("evidence set needs at least 2 evidences, got " +
                    std::to_string(evidences_.size()));
  }
  std::set<std::string> ids;
  for (const auto& ev : evidences_) {
    if (!ids.insert(ev.id()).second) {
      throw DataError("duplicate evidence id '" + ev.id() + "'");
    }
    for (const auto& a : ev.assignments()) {
      if (!a.set.is_subset_of(frame_)) {
        throw DataError("evidence '" + ev.id() + "': focal set " + a.set.display() +
                        " is not a subset of the frame");
      }
    }
  }
}

namespace {
std::string num(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}
}  // namespace

std::vector<Violation> validate_evidence(const OrdinalEvidence& ev, double tol) {
  std::vector<Violation> out;
  for (const auto& a : ev.assignments()) {
    const auto& m = a.mass;
    if (!(m.amplitude >= 0.0 && m.amplitude <= 1.0)) {
      out.push_back({"amplitude out of range",
                     ev.id() + " " + a.set.display() + ": amplitude " + num(m.amplitude)});
    }
    if (!std::isfinite(m.phase)) {
      out.push_back({"phase not finite", ev.id() + " " + a.set.display()});
    }
  }
  const double sum = ev.belief_sum();
  if (std::abs(sum - 1.0) > tol) {
    out.push_back({"mass-sum violation",
                   ev.id() + ": beliefs sum to " + num(sum) + " (tolerance " + num(tol) + ")"});
  }
  return out;
}

ClassicBpa to_classic(const OrdinalEvidence& ev) {
  ClassicBpa out;
  for (const auto& a : ev.assignments()) out.emplace(a.set, a.mass.belief());
  return out;
}

std::vector<double> belief_vector(const OrdinalEvidence& ev,
                                  std::span<const FocalSet> canon) {
  for (const auto& a : ev.assignments()) {
    if (std::find(canon.begin(), canon.end(), a.set) == canon.end()) {
      throw DataError("canonical ordering misses focal set " + a.set.display() +
                      " present in evidence '" + ev.id() + "'");
    }
  }
  std::vector<double> out;
  out.reserve(canon.size());
  for (const auto& set : canon) {
    const QuantumMass* m = ev.find(set);
    out.push_back(m ? m->belief() : 0.0);
  }
  return out;
}

std::vector<FocalSet> focal_union(std::span<const OrdinalEvidence> evidences) {
  std::set<FocalSet> acc;
  for (const auto& ev : evidences) {
    for (const auto& a : ev.assignments()) acc.insert(a.set);
  }
  return {acc.begin(), acc.end()};
}

}  // namespace qev
