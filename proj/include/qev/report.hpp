#pragma once

#include <span>
#include <string>

#include "qev/fusion.hpp"

namespace qev {

enum class ReportFormat { Markdown, Csv };
ReportFormat report_format_from(const std::string& s);

/// Fixed 9-decimal rendering used in every table, so reports diff cleanly.
std::string fixed9(double v);

/// Tabular matrix layout: header = evidence ids, one row per evidence.
std::string format_matrix(const PairwiseMatrix& m, std::span<const std::string> ids,
                          ReportFormat format);

std::string format_report(const FusionReport& report, ReportFormat format);

}  // namespace qev
