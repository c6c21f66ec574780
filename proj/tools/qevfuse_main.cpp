#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qev/fixtures.hpp"
#include "qev/fusion.hpp"
#include "qev/json_io.hpp"
#include "qev/report.hpp"
#include "qev/reproduce.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitPipeline = 3;
constexpr int kExitAssertion = 4;

struct StrategyFlags {
  std::string distance = "complex";
  std::string divergence = "belief";
  std::string log_base = "10";

  qev::MeasureStrategy strategy() const {
    return {qev::distance_semantics_from(distance), qev::divergence_input_from(divergence),
            qev::log_base_from(log_base)};
  }
};

void add_strategy_flags(CLI::App* cmd, StrategyFlags& flags) {
  cmd->add_option("--distance", flags.distance, "Distance semantics")
      ->check(CLI::IsMember({"complex", "belief", "amplitude"}));
  cmd->add_option("--divergence-input", flags.divergence, "Divergence input")
      ->check(CLI::IsMember({"belief", "amplitude"}));
  cmd->add_option("--log-base", flags.log_base, "Divergence log base")
      ->check(CLI::IsMember({"10", "2", "e"}));
}

void emit(const std::string& text, const std::string& output_dir, const std::string& filename) {
  if (output_dir.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(output_dir);
  const auto path = std::filesystem::path(output_dir) / filename;
  std::ofstream out(path);
  if (!out) throw qev::DataError("cannot write '" + path.string() + "'");
  out << text;
  std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal quantum evidence fusion"};
  app.require_subcommand(1);

  std::string input_path;
  std::string output_dir;
  std::string format = "md";
  std::string measure_name;
  std::string fixture_id;
  double mass_tolerance = qev::kDefaultMassTolerance;
  std::optional<int> copies;
  bool sweep = false;
  StrategyFlags flags;

  auto* fuse = app.add_subcommand("fuse", "Run the fusion pipeline on an evidence file");
  fuse->add_option("--input", input_path, "Evidence file")->required();
  add_strategy_flags(fuse, flags);
  fuse->add_option("--copies", copies, "Self-combination count (default: evidence count)");
  fuse->add_option("--format", format, "Output format")->check(CLI::IsMember({"md", "csv"}));
  fuse->add_option("--output", output_dir, "Output directory (default: stdout)");
  fuse->add_option("--mass-tolerance", mass_tolerance, "Belief-sum tolerance for parsing");

  auto* measure = app.add_subcommand("measure", "Write one normalized pairwise matrix");
  measure->add_option("--input", input_path, "Evidence file")->required();
  measure->add_option("name", measure_name, "Measure name")
      ->required()
      ->check(CLI::IsMember({"dxp", "dwb", "sim1", "sim2", "sim"}));
  add_strategy_flags(measure, flags);
  measure->add_option("--format", format, "Output format")->check(CLI::IsMember({"md", "csv"}));
  measure->add_option("--output", output_dir, "Output directory (default: stdout)");
  measure->add_option("--mass-tolerance", mass_tolerance, "Belief-sum tolerance for parsing");

  auto* reproduce = app.add_subcommand("reproduce", "Audit a bundled case study");
  reproduce->add_option("fixture", fixture_id, "Fixture id")
      ->required()
      ->check(CLI::IsMember({"app1", "app2", "app3", "app4", "all"}));
  reproduce->add_flag("--sweep", sweep, "Evaluate all 18 measure strategies");
  add_strategy_flags(reproduce, flags);
  reproduce->add_option("--copies", copies, "Self-combination count");
  reproduce->add_option("--format", format, "Output format")->check(CLI::IsMember({"md", "csv"}));
  reproduce->add_option("--output", output_dir, "Output directory (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto report_format = qev::report_format_from(format);
    const auto extension = format == "md" ? ".md" : ".csv";

    if (fuse->parsed()) {
      const auto es = qev::load_evidence_file(input_path, mass_tolerance);
      const auto report = qev::run_pipeline(es, {flags.strategy(), copies});
      emit(qev::format_report(report, report_format), output_dir,
           std::string("report") + extension);
      return kExitOk;
    }

    if (measure->parsed()) {
      const auto es = qev::load_evidence_file(input_path, mass_tolerance);
      const auto& evs = es.evidences();
      const auto strategy = flags.strategy();
      const auto dxp = [&] {
        return qev::normalize_or_uniform(
                   qev::build_pairwise(evs, qev::MatrixKind::Distance,
                                       [&](const auto& a, const auto& b) {
                                         return qev::end_to_end_distance(a, b, strategy);
                                       }))
            .matrix;
      };
      const auto dwb = [&] {
        return qev::normalize_or_uniform(
                   qev::build_pairwise(evs, qev::MatrixKind::Distance,
                                       [&](const auto& a, const auto& b) {
                                         return qev::fuzzy_divergence(a, b, strategy);
                                       }))
            .matrix;
      };
      const auto sim1 = [&] {
        return qev::normalize_or_uniform(
                   qev::build_pairwise(evs, qev::MatrixKind::Similarity,
                                       [](const auto& a, const auto& b) {
                                         return qev::sim1_intermediate(a, b);
                                       }))
            .matrix;
      };
      qev::PairwiseMatrix matrix(qev::MatrixKind::Distance, evs.size());
      if (measure_name == "dxp") matrix = dxp();
      else if (measure_name == "dwb") matrix = dwb();
      else if (measure_name == "sim1") matrix = sim1();
      else if (measure_name == "sim2") matrix = qev::sim2_matrix(dxp(), dwb());
      else matrix = qev::combined_similarity(sim1(), qev::sim2_matrix(dxp(), dwb()));
      std::vector<std::string> ids;
      for (const auto& ev : evs) ids.push_back(ev.id());
      emit(qev::format_matrix(matrix, ids, report_format), output_dir,
           "measure_" + measure_name + extension);
      return kExitOk;
    }

    // reproduce
    bool all_passed = true;
    const std::vector<std::string> ids =
        fixture_id == "all" ? qev::fixture_ids() : std::vector<std::string>{fixture_id};
    for (const auto& id : ids) {
      const auto result =
          qev::reproduce(qev::fixture(id), flags.strategy(), sweep, copies);
      emit(qev::format_reproduce(result, report_format), output_dir,
           "reproduce_" + id + extension);
      all_passed = all_passed && result.passed();
    }
    return all_passed ? kExitOk : kExitAssertion;
  } catch (const qev::TotalConflictError& e) {
    std::cerr << "pipeline error: " << e.what() << '\n';
    return kExitPipeline;
  } catch (const qev::PipelineError& e) {
    std::cerr << "pipeline error: " << e.what() << '\n';
    return kExitPipeline;
  } catch (const qev::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPipeline;
  }
}
