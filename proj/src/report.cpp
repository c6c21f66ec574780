#include "qev/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qev {

ReportFormat report_format_from(const std::string& s) {
  if (s == "md") return ReportFormat::Markdown;
  if (s == "csv") return ReportFormat::Csv;
  throw DataError("unknown report format '" + s + "'");
}

std::string fixed9(double v) {
  if (std::abs(v) < 5e-10) v = 0.0;  // never print -0.000000000
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

namespace {

std::string join_row(std::span<const std::string> cells, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Markdown) {
    out << '|';
    for (const auto& c : cells) out << ' ' << c << " |";
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
  }
  out << '\n';
  return out.str();
}

std::string rule_row(std::size_t columns) {
  std::ostringstream out;
  out << '|';
  for (std::size_t i = 0; i < columns; ++i) out << " --- |";
  out << '\n';
  return out.str();
}

std::string table(std::span<const std::string> header,
                  std::span<const std::vector<std::string>> rows, ReportFormat format) {
  std::ostringstream out;
  out << join_row(header, format);
  if (format == ReportFormat::Markdown) out << rule_row(header.size());
  for (const auto& row : rows) out << join_row(row, format);
  return out.str();
}

std::string heading(const std::string& text, ReportFormat format) {
  if (format == ReportFormat::Markdown) return "\n## " + text + "\n\n";
  return "\n# " + text + "\n";
}

std::string evidence_table(const OrdinalEvidence& ev, ReportFormat format) {
  const std::vector<std::string> header = {"proposition", "amplitude", "phase", "belief"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& a : ev.assignments()) {
    rows.push_back({a.set.display(), fixed9(a.mass.amplitude), fixed9(a.mass.phase),
                    fixed9(a.mass.belief())});
  }
  return table(header, rows, format);
}

std::string classic_table(const ClassicBpa& bpa, ReportFormat format) {
  const std::vector<std::string> header = {"proposition", "mass"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& [set, mass] : bpa) rows.push_back({set.display(), fixed9(mass)});
  return table(header, rows, format);
}

std::string conflict_lines(std::span<const ConflictRecord> conflicts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < conflicts.size(); ++i) {
    out << "step " << (i + 1) << ": |K| = " << fixed9(conflicts[i].magnitude) << '\n';
  }
  return out.str();
}

}  // namespace

std::string format_matrix(const PairwiseMatrix& m, std::span<const std::string> ids,
                          ReportFormat format) {
  if (ids.size() != m.size()) throw DataError("matrix/id count mismatch");
  std::vector<std::string> header;
  header.push_back("");
  header.insert(header.end(), ids.begin(), ids.end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row{ids[i]};
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(fixed9(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return table(header, rows, format);
}

std::string format_report(const FusionReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Markdown) {
    out << "# Fusion report\n\n";
  } else {
    out << "# Fusion report\n";
  }
  out << "strategy: " << report.strategy.name() << '\n';
  out << "copies: " << report.copies << '\n';
  if (!report.notes.empty()) {
    out << heading("Notes", format);
    for (const auto& n : report.notes) out << "- " << n << '\n';
  }

  out << heading("Distance d_XP (normalized)", format)
      << format_matrix(report.dxp, report.evidence_ids, format);
  out << heading("Distance d_WB (normalized)", format)
      << format_matrix(report.dwb, report.evidence_ids, format);
  out << heading("Similarity Sim1 (normalized)", format)
      << format_matrix(report.sim1, report.evidence_ids, format);
  out << heading("Similarity Sim2 (normalized)", format)
      << format_matrix(report.sim2, report.evidence_ids, format);
  out << heading("Combined similarity SIM", format)
      << format_matrix(report.sim, report.evidence_ids, format);

  out << heading("Evidence weights", format);
  {
    std::vector<std::string> header = {"evidence", "weight"};
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < report.weights.size(); ++i) {
      rows.push_back({report.evidence_ids[i], fixed9(report.weights[i])});
    }
    out << table(header, rows, format);
  }

  out << heading("Ordinal-modified evidences", format);
  for (const auto& ev : report.modified) {
    out << (format == ReportFormat::Markdown ? "\n**" + ev.id() + "**\n\n"
                                             : "\n# modified " + ev.id() + "\n")
        << evidence_table(ev, format);
  }

  out << heading("Weighted average", format) << evidence_table(report.averaged, format);

  out << heading("Combined result (weighted pipeline)", format)
      << evidence_table(report.combined, format);
  out << conflict_lines(report.combined_conflicts);
  out << heading("Combined result, classic projection", format)
      << classic_table(report.combined_classic, format);

  out << heading("Baseline combination of raw evidences", format)
      << evidence_table(report.baseline, format);
  out << conflict_lines(report.baseline_conflicts);
  out << heading("Baseline, classic projection", format)
      << classic_table(report.baseline_classic, format);

  if (!report.discrepancies.empty()) {
    out << heading("Discrepancies vs reference tables", format);
    std::vector<std::string> header = {"table", "cell", "expected", "computed",
                                       "abs diff", "strategy"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : report.discrepancies) {
      rows.push_back({d.table, d.cell, fixed9(d.expected), fixed9(d.computed),
                      fixed9(d.difference), d.strategy});
    }
    out << table(header, rows, format);
  }
  return out.str();
}

}  // namespace qev
