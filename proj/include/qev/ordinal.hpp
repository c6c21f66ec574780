#pragma once

#include <vector>

#include "qev/evidence.hpp"

namespace qev {

/// Rank weights m - n for the assignment at 0-based position n of an
/// m-assignment evidence: (m, m-1, ..., 1).
std::vector<double> ordinal_weights(const OrdinalEvidence& ev);

/// Multiplies each belief by its rank weight and renormalizes the beliefs to
/// sum 1. Phases and assignment order are preserved; amplitudes become the
/// square roots of the new beliefs.
OrdinalEvidence ordinal_reweight(const OrdinalEvidence& ev);

}  // namespace qev
