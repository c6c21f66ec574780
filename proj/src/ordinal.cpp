#include "qev/ordinal.hpp"

#include <cmath>

namespace qev {

std::vector<double> ordinal_weights(const OrdinalEvidence& ev) {
  const std::size_t m = ev.size();
  std::vector<double> out(m);
  for (std::size_t n = 0; n < m; ++n) out[n] = static_cast<double>(m - n);
  return out;
}

OrdinalEvidence ordinal_reweight(const OrdinalEvidence& ev) {
  const std::vector<double> weights = ordinal_weights(ev);
  std::vector<double> intermediate(ev.size());
  double total = 0.0;
  for (std::size_t n = 0; n < ev.size(); ++n) {
    intermediate[n] = ev.assignments()[n].mass.belief() * weights[n];
    total += intermediate[n];
  }
  if (total <= 0.0) {
    throw PipelineError("ordinal reweight: all intermediate values are zero");
  }
  std::vector<Assignment> out;
  out.reserve(ev.size());
  for (std::size_t n = 0; n < ev.size(); ++n) {
    const auto& a = ev.assignments()[n];
    out.push_back({a.set, {std::sqrt(intermediate[n] / total), a.mass.phase}});
  }
  return {ev.id(), std::move(out)};
}

}  // namespace qev
