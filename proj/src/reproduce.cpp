#include "qev/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qev {

namespace {

constexpr double kWeightChainTolerance = 5e-4;

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::pair<FocalSet, double> top_of(const ClassicBpa& bpa) {
  auto it = std::max_element(bpa.begin(), bpa.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  return *it;
}

double matrix_deviation(const PairwiseMatrix& computed, const PairwiseMatrix& expected) {
  double dev = 0.0;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    for (std::size_t j = i + 1; j < computed.size(); ++j) {
      dev += std::abs(computed.at(i, j) - expected.at(i, j));
    }
  }
  return dev;
}

void add_matrix_discrepancies(FusionReport& report, const std::string& label,
                              const PairwiseMatrix& expected, const PairwiseMatrix& computed) {
  for (std::size_t i = 0; i < computed.size(); ++i) {
    for (std::size_t j = i + 1; j < computed.size(); ++j) {
      report.discrepancies.push_back({label,
                                      "(" + report.evidence_ids[i] + "," +
                                          report.evidence_ids[j] + ")",
                                      expected.at(i, j), computed.at(i, j),
                                      std::abs(expected.at(i, j) - computed.at(i, j)),
                                      report.strategy.name()});
    }
  }
}

void add_row_discrepancies(FusionReport& report, const std::string& label,
                           const std::vector<std::pair<FocalSet, double>>& expected,
                           const ClassicBpa& computed) {
  for (const auto& [set, value] : expected) {
    auto it = computed.find(set);
    const double got = it == computed.end() ? 0.0 : it->second;
    report.discrepancies.push_back({label, set.display(), value, got,
                                    std::abs(value - got), report.strategy.name()});
  }
}

}  // namespace

bool ReproduceResult::passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const AssertionLine& a) { return !a.gating || a.passed; });
}

ReproduceResult reproduce(const CaseStudy& fx, const MeasureStrategy& strategy,
                          bool sweep, std::optional<int> copies) {
  ReproduceResult result{fx.id, run_pipeline(fx.evidence_set, {strategy, copies}),
                         {}, {}, {}, 0.0};
  FusionReport& report = result.report;

  for (const auto& ev : fx.evidence_set.evidences()) {
    for (const auto& v : validate_evidence(ev, fx.mass_tolerance)) {
      report.notes.push_back("validation (tolerance " + short_num(fx.mass_tolerance) +
                             "): " + v.rule + " — " + v.detail);
    }
  }

  add_matrix_discrepancies(report, "d_XP", fx.dxp, report.dxp);
  add_matrix_discrepancies(report, "d_WB", fx.dwb, report.dwb);
  add_matrix_discrepancies(report, "Sim1", fx.sim1, report.sim1);
  add_matrix_discrepancies(report, "Sim2", fx.sim2, report.sim2);
  for (std::size_t i = 0; i < fx.weights.size(); ++i) {
    report.discrepancies.push_back({"weights", report.evidence_ids[i], fx.weights[i],
                                    report.weights[i],
                                    std::abs(fx.weights[i] - report.weights[i]),
                                    strategy.name()});
  }
  add_row_discrepancies(report, "modified classic", fx.modified_classic,
                        report.combined_classic);
  add_row_discrepancies(report, "basic classic", fx.basic_classic, report.baseline_classic);

  // weight chain from the reference similarity matrices; exactly reproducible
  {
    const auto chain = evidence_weights(combined_similarity(fx.sim1, fx.sim2));
    double max_dev = 0.0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      max_dev = std::max(max_dev, std::abs(chain[i] - fx.weights[i]));
    }
    result.assertions.push_back(
        {true, max_dev < kWeightChainTolerance,
         "weight chain from reference Sim1+Sim2 matches the reference weights "
         "(max deviation " + short_num(max_dev) + ", tolerance 5e-4)"});
  }

  const auto [computed_top, computed_top_value] = top_of(report.combined_classic);
  const auto [baseline_top, baseline_top_value] = top_of(report.baseline_classic);
  if (fx.expected_top) {
    result.assertions.push_back(
        {true, computed_top == *fx.expected_top,
         "modified classic result ranks " + fx.expected_top->display() + " first (computed top " +
             computed_top.display() + " = " + fixed9(computed_top_value) + ")"});
  } else {
    result.assertions.push_back(
        {false, true,
         "rankings are report-only: modified top " + computed_top.display() + " = " +
             fixed9(computed_top_value) + ", baseline top " + baseline_top.display() + " = " +
             fixed9(baseline_top_value)});
  }
  if (fx.basic_top_bound) {
    const auto ref_top = *std::max_element(
        fx.basic_classic.begin(), fx.basic_classic.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    result.assertions.push_back(
        {true, ref_top.second < *fx.basic_top_bound,
         "reference basic row has no dominant proposition: top " + ref_top.first.display() +
             " = " + fixed9(ref_top.second) + " < " + short_num(*fx.basic_top_bound)});
    result.assertions.push_back(
        {false, true,
         "computed baseline top " + baseline_top.display() + " = " +
             fixed9(baseline_top_value) + " (see basic-classic discrepancy rows)"});
  }

  if (sweep) {
    const auto strategies = all_strategies();
    result.sweep.resize(strategies.size());
    const auto& evs = fx.evidence_set.evidences();
    const auto count = static_cast<long long>(strategies.size());
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < count; ++k) {
      const MeasureStrategy& s = strategies[static_cast<std::size_t>(k)];
      auto dxp = normalize_or_uniform(
          build_pairwise(evs, MatrixKind::Distance,
                         [&](const auto& a, const auto& b) { return end_to_end_distance(a, b, s); }));
      auto dwb = normalize_or_uniform(
          build_pairwise(evs, MatrixKind::Distance,
                         [&](const auto& a, const auto& b) { return fuzzy_divergence(a, b, s); }));
      auto sim2 = sim2_matrix(dxp.matrix, dwb.matrix);
      result.sweep[static_cast<std::size_t>(k)] =
          {s, matrix_deviation(dxp.matrix, fx.dxp), matrix_deviation(dwb.matrix, fx.dwb),
           matrix_deviation(sim2, fx.sim2)};
    }

    const auto best_by = [&](const std::string& label, auto accessor) {
      const auto it = std::min_element(result.sweep.begin(), result.sweep.end(),
                                       [&](const SweepEntry& a, const SweepEntry& b) {
                                         return accessor(a) < accessor(b);
                                       });
      result.best_match.push_back({label, it->strategy.name(), accessor(*it)});
    };
    best_by("d_XP", [](const SweepEntry& e) { return e.dxp_deviation; });
    best_by("d_WB", [](const SweepEntry& e) { return e.dwb_deviation; });
    best_by("Sim2", [](const SweepEntry& e) { return e.sim2_deviation; });
    result.sim1_deviation = matrix_deviation(report.sim1, fx.sim1);
  }

  return result;
}

std::string format_reproduce(const ReproduceResult& result, ReportFormat format) {
  std::ostringstream out;
  out << "# Reproduction report: " << result.fixture_id << "\n\n";
  for (const auto& a : result.assertions) {
    if (a.gating) {
      out << "- [" << (a.passed ? "PASS" : "FAIL") << "] " << a.text << '\n';
    } else {
      out << "- [info] " << a.text << '\n';
    }
  }

  if (!result.sweep.empty()) {
    out << "\n"
        << (format == ReportFormat::Markdown ? "## Strategy sweep\n\n" : "# Strategy sweep\n");
    if (format == ReportFormat::Markdown) {
      out << "| strategy | d_XP dev | d_WB dev | Sim2 dev |\n| --- | --- | --- | --- |\n";
      for (const auto& e : result.sweep) {
        out << "| " << e.strategy.name() << " | " << fixed9(e.dxp_deviation) << " | "
            << fixed9(e.dwb_deviation) << " | " << fixed9(e.sim2_deviation) << " |\n";
      }
    } else {
      out << "strategy,dxp_dev,dwb_dev,sim2_dev\n";
      for (const auto& e : result.sweep) {
        out << e.strategy.name() << ',' << fixed9(e.dxp_deviation) << ','
            << fixed9(e.dwb_deviation) << ',' << fixed9(e.sim2_deviation) << '\n';
      }
    }
    out << "\nBest-matching strategy per reference table:\n";
    for (const auto& b : result.best_match) {
      out << "- " << b.table << ": " << b.strategy << " (total abs deviation "
          << fixed9(b.total_abs_deviation) << ")\n";
    }
    out << "- Sim1 has no strategy knobs; total abs deviation " << fixed9(result.sim1_deviation)
        << '\n';
  }

  out << '\n' << format_report(result.report, format);
  return out.str();
}

}  // namespace qev
