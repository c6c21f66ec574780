#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qev/fixtures.hpp"
#include "qev/fusion.hpp"
#include "qev/report.hpp"

namespace qev {

/// Per-strategy total absolute deviation of the computed normalized matrices
/// from the fixture's reference tables.
struct SweepEntry {
  MeasureStrategy strategy;
  double dxp_deviation = 0.0;
  double dwb_deviation = 0.0;
  double sim2_deviation = 0.0;
};

struct TableDeviation {
  std::string table;
  std::string strategy;
  double total_abs_deviation = 0.0;
};

struct AssertionLine {
  bool gating = false;
  bool passed = true;
  std::string text;
};

struct ReproduceResult {
  std::string fixture_id;
  FusionReport report;  // default-strategy run with discrepancies filled in
  std::vector<AssertionLine> assertions;
  std::vector<SweepEntry> sweep;          // one entry per strategy when swept
  std::vector<TableDeviation> best_match; // per reference table
  double sim1_deviation = 0.0;            // Sim1 has no strategy knobs
  bool passed() const;
};

/// Runs the pipeline on a bundled fixture, fills the discrepancy report
/// against every reference table, asserts the rank-level expectations and the
/// weight chain from the published similarity matrices, and optionally sweeps
/// all 18 measure strategies.
ReproduceResult reproduce(const CaseStudy& fx, const MeasureStrategy& strategy,
                          bool sweep, std::optional<int> copies = std::nullopt);

std::string format_reproduce(const ReproduceResult& result, ReportFormat format);

}  // namespace qev
