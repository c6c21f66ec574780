// Compares the serial and OpenMP pairwise-matrix builders on synthetic
// evidence sets and checks that both produce identical matrices.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qev/fusion.hpp"
#include "qev/measures.hpp"

namespace {

std::vector<qev::OrdinalEvidence> synthetic_evidences(std::size_t count, std::mt19937_64& rng) {
  const std::vector<std::string> labels = {"A", "B", "C", "D", "E", "F"};
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 1.5);

  std::vector<qev::OrdinalEvidence> out;
  out.reserve(count);
  for (std::size_t e = 0; e < count; ++e) {
    std::vector<qev::FocalSet> sets;
    for (const auto& l : labels) sets.push_back(qev::FocalSet{l});
    sets.push_back(qev::FocalSet{labels[pick(rng)], "Z"});  // one compound set
    std::vector<double> beliefs(sets.size());
    double total = 0.0;
    for (auto& b : beliefs) total += (b = unit(rng));
    std::vector<qev::Assignment> assignments;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      assignments.push_back({sets[i], {std::sqrt(beliefs[i] / total), angle(rng)}});
    }
    out.emplace_back("S" + std::to_string(e), std::move(assignments));
  }
  return out;
}

double run_ms(const std::vector<qev::OrdinalEvidence>& evs, bool parallel,
              const qev::PairMeasure& fn, qev::PairwiseMatrix* out) {
  const auto start = std::chrono::steady_clock::now();
  auto m = parallel ? qev::build_pairwise_parallel(evs, qev::MatrixKind::Distance, fn)
                    : qev::build_pairwise(evs, qev::MatrixKind::Distance, fn);
  const auto stop = std::chrono::steady_clock::now();
  *out = m;
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  std::printf("%8s %14s %14s %10s %8s\n", "n", "serial (ms)", "openmp (ms)", "speedup",
              "equal");

  std::mt19937_64 rng(42);
  const qev::MeasureStrategy strategy;
  const qev::PairMeasure fn = [&](const qev::OrdinalEvidence& a, const qev::OrdinalEvidence& b) {
    return qev::end_to_end_distance(a, b, strategy) + qev::fuzzy_divergence(a, b, strategy) +
           qev::sim1_intermediate(a, b);
  };

  for (std::size_t n : {64, 128, 256, 512}) {
    const auto evs = synthetic_evidences(n, rng);
    qev::PairwiseMatrix serial(qev::MatrixKind::Distance, 2);
    qev::PairwiseMatrix parallel(qev::MatrixKind::Distance, 2);
    const double t_serial = run_ms(evs, false, fn, &serial);
    const double t_parallel = run_ms(evs, true, fn, &parallel);

    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
      for (std::size_t j = 0; equal && j < serial.size(); ++j) {
        equal = serial.at(i, j) == parallel.at(i, j);
      }
    }
    std::printf("%8zu %14.2f %14.2f %9.2fx %8s\n", n, t_serial, t_parallel,
                t_serial / t_parallel, equal ? "yes" : "NO");
    if (!equal) return 1;
  }
  return 0;
}
