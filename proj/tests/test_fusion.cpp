#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qev/fixtures.hpp"
#include "qev/fusion.hpp"

using namespace qev;

namespace {

OrdinalEvidence from_beliefs(const std::string& id,
                             const std::vector<std::pair<FocalSet, double>>& rows,
                             double phase = 0.0) {
  std::vector<Assignment> assignments;
  for (const auto& [set, belief] : rows) {
    assignments.push_back({set, {std::sqrt(belief), phase}});
  }
  return {id, std::move(assignments)};
}

FocalSet top_set(const ClassicBpa& bpa) {
  auto it = std::max_element(bpa.begin(), bpa.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  return it->first;
}

}  // namespace

TEST_CASE("quantum_combine basics") {
  SUBCASE("certainty combined with itself") {
    OrdinalEvidence certain("c", {{FocalSet{"X"}, {1.0, 0.0}}});
    const auto [combined, conflict] = quantum_combine(certain, certain);
    CHECK(conflict.magnitude == 0.0);
    CHECK(combined.assignments().size() == 1);
    CHECK(combined.assignments()[0].mass.belief() == doctest::Approx(1.0));
  }
  SUBCASE("disjoint certainties are total conflict") {
    OrdinalEvidence a("a", {{FocalSet{"X"}, {1.0, 0.0}}});
    OrdinalEvidence b("b", {{FocalSet{"Y"}, {1.0, 0.0}}});
    CHECK_THROWS_AS(quantum_combine(a, b), TotalConflictError);
  }
  SUBCASE("zero-phase beliefs follow Dempster") {
    const auto a = from_beliefs("a", {{FocalSet{"A"}, 0.6}, {FocalSet{"B"}, 0.4}});
    const auto b = from_beliefs("b", {{FocalSet{"A"}, 0.3}, {FocalSet{"B"}, 0.7}});
    const auto [combined, conflict] = quantum_combine(a, b);
    const auto classic = to_classic(combined);
    CHECK(classic.at(FocalSet{"A"}) == doctest::Approx(0.391304347826).epsilon(1e-10));
    CHECK(classic.at(FocalSet{"B"}) == doctest::Approx(0.608695652174).epsilon(1e-10));
    CHECK(conflict.magnitude == doctest::Approx(0.54).epsilon(1e-12));
    // the library oracle agrees
    const auto oracle = classical_dempster(to_classic(a), to_classic(b));
    CHECK(oracle.at(FocalSet{"A"}) == doctest::Approx(0.18 / 0.46).epsilon(1e-12));
  }
  SUBCASE("output follows canonical focal order") {
    const auto a = from_beliefs("a", {{FocalSet{"B"}, 0.5}, {FocalSet{"A", "B"}, 0.5}});
    const auto b = from_beliefs("b", {{FocalSet{"A"}, 0.5}, {FocalSet{"A", "B"}, 0.5}});
    const auto [combined, conflict] = quantum_combine(a, b);
    REQUIRE(combined.assignments().size() == 3);
    CHECK(combined.assignments()[0].set == FocalSet{"A"});
    CHECK(combined.assignments()[1].set == FocalSet{"A", "B"});
    CHECK(combined.assignments()[2].set == FocalSet{"B"});
  }
}

TEST_CASE("quantum_combine is commutative") {
  std::mt19937_64 rng(41);
  const auto labels = qtest::frame_labels(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = qtest::random_evidence("a", labels, rng, false);
    const auto b = qtest::random_evidence("b", labels, rng, false);
    try {
      const auto ab = quantum_combine(a, b);
      const auto ba = quantum_combine(b, a);
      REQUIRE(ab.evidence.size() == ba.evidence.size());
      for (std::size_t i = 0; i < ab.evidence.size(); ++i) {
        CHECK(ab.evidence.assignments()[i].set == ba.evidence.assignments()[i].set);
        CHECK(ab.evidence.assignments()[i].mass.amplitude ==
              doctest::Approx(ba.evidence.assignments()[i].mass.amplitude).epsilon(1e-12));
        CHECK(ab.evidence.assignments()[i].mass.phase ==
              doctest::Approx(ba.evidence.assignments()[i].mass.phase).epsilon(1e-12));
      }
      CHECK(ab.conflict.magnitude == doctest::Approx(ba.conflict.magnitude).epsilon(1e-12));
    } catch (const TotalConflictError&) {
      CHECK_THROWS_AS(quantum_combine(b, a), TotalConflictError);
    }
  }
}

TEST_CASE("zero-phase combination equals classical Dempster") {
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 1000) {
    const std::size_t hypotheses = 2 + rng() % 4;  // frames of 2..5
    const auto labels = qtest::frame_labels(hypotheses);
    const auto a = qtest::random_evidence("a", labels, rng, true);
    const auto b = qtest::random_evidence("b", labels, rng, true);
    try {
      const auto quantum = to_classic(quantum_combine(a, b).evidence);
      const auto classical = classical_dempster(to_classic(a), to_classic(b));
      REQUIRE(quantum.size() == classical.size());
      for (const auto& [set, mass] : classical) {
        CHECK(quantum.at(set) == doctest::Approx(mass).epsilon(1e-10));
      }
      // spot-check the library oracle against an independent bitmask fold
      if (done % 100 == 0) {
        const auto independent =
            qtest::dempster_masks(qtest::masks_of(a, labels), qtest::masks_of(b, labels));
        for (const auto& [set, mass] : classical) {
          CHECK(independent.at(qtest::mask_of(set, labels)) ==
                doctest::Approx(mass).epsilon(1e-12));
        }
      }
      ++done;
    } catch (const TotalConflictError&) {
      // disjoint draw; try another pair
    }
  }
}

TEST_CASE("vacuous evidence is neutral") {
  std::mt19937_64 rng(47);
  const auto labels = qtest::frame_labels(4);
  std::vector<std::string> all = labels;
  const OrdinalEvidence vacuous("vac", {{FocalSet(all), {1.0, 0.0}}});
  for (int trial = 0; trial < 100; ++trial) {
    const auto ev = qtest::random_evidence("e", labels, rng, false);
    const auto combined = to_classic(quantum_combine(ev, vacuous).evidence);
    const auto original = to_classic(ev);
    REQUIRE(combined.size() == original.size());
    for (const auto& [set, mass] : original) {
      CHECK(combined.at(set) == doctest::Approx(mass).epsilon(1e-10));
    }
  }
}

TEST_CASE("quantum_normalize") {
  const auto scaled = from_beliefs("e", {{FocalSet{"A"}, 0.2}, {FocalSet{"B"}, 0.2}});
  const auto n = quantum_normalize(scaled);
  CHECK(n.assignments()[0].mass.belief() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(n.assignments()[1].mass.belief() == doctest::Approx(0.5).epsilon(1e-12));

  SUBCASE("idempotent") {
    const auto twice = quantum_normalize(n);
    for (std::size_t i = 0; i < n.size(); ++i) {
      CHECK(twice.assignments()[i].mass.amplitude ==
            doctest::Approx(n.assignments()[i].mass.amplitude).epsilon(1e-12));
    }
  }
  SUBCASE("phases ride along") {
    OrdinalEvidence raw("e", {{FocalSet{"A"}, {std::sqrt(0.09), 0.3}},
                              {FocalSet{"B"}, {std::sqrt(0.01), 1.1}}});
    const auto out = quantum_normalize(raw);
    CHECK(out.assignments()[0].mass.belief() == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(out.assignments()[1].mass.belief() == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(out.assignments()[0].mass.phase == 0.3);
    CHECK(out.assignments()[1].mass.phase == 1.1);
  }
  SUBCASE("all-zero input fails") {
    OrdinalEvidence zero("e", {{FocalSet{"A"}, {0.0, 0.0}}});
    CHECK_THROWS_AS(quantum_normalize(zero), PipelineError);
  }
}

TEST_CASE("classical_dempster") {
  SUBCASE("vacuous neutrality") {
    ClassicBpa m{{FocalSet{"A"}, 0.7}, {FocalSet{"B"}, 0.3}};
    ClassicBpa vac{{FocalSet{"A", "B"}, 1.0}};
    const auto out = classical_dempster(m, vac);
    CHECK(out.at(FocalSet{"A"}) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(out.at(FocalSet{"B"}) == doctest::Approx(0.3).epsilon(1e-12));
  }
  SUBCASE("commutative") {
    ClassicBpa a{{FocalSet{"A"}, 0.6}, {FocalSet{"A", "B"}, 0.4}};
    ClassicBpa b{{FocalSet{"B"}, 0.5}, {FocalSet{"A", "B"}, 0.5}};
    const auto ab = classical_dempster(a, b);
    const auto ba = classical_dempster(b, a);
    for (const auto& [set, mass] : ab) CHECK(ba.at(set) == doctest::Approx(mass));
  }
  SUBCASE("total conflict") {
    ClassicBpa a{{FocalSet{"A"}, 1.0}};
    ClassicBpa b{{FocalSet{"B"}, 1.0}};
    CHECK_THROWS_AS(classical_dempster(a, b), TotalConflictError);
  }
}

TEST_CASE("evidence_weights") {
  SUBCASE("reference similarity matrices") {
    const auto& fx1 = fixture("app1");
    const auto w1 = evidence_weights(combined_similarity(fx1.sim1, fx1.sim2));
    REQUIRE(w1.size() == 4);
    CHECK(w1[0] == doctest::Approx(0.272426549614).epsilon(1e-9));
    CHECK(w1[1] == doctest::Approx(0.270906389865).epsilon(1e-9));
    CHECK(w1[2] == doctest::Approx(0.235417598382).epsilon(1e-9));
    CHECK(w1[3] == doctest::Approx(0.221249462139).epsilon(1e-9));

    const auto& fx3 = fixture("app3");
    const auto w3 = evidence_weights(combined_similarity(fx3.sim1, fx3.sim2));
    CHECK(w3[0] == doctest::Approx(0.213284090000).epsilon(1e-9));
    CHECK(w3[4] == doctest::Approx(0.189612921500).epsilon(1e-9));
  }
  SUBCASE("uniform similarities give uniform weights") {
    const auto sim = combined_similarity(uniform_normalized(MatrixKind::Similarity, 5),
                                         uniform_normalized(MatrixKind::Similarity, 5));
    for (double w : evidence_weights(sim)) CHECK(w == doctest::Approx(0.2).epsilon(1e-12));
  }
  SUBCASE("scaling the off-diagonal leaves weights unchanged") {
    const auto& fx = fixture("app1");
    const auto sim = combined_similarity(fx.sim1, fx.sim2);
    PairwiseMatrix scaled(MatrixKind::Similarity, sim.size());
    for (std::size_t i = 0; i < sim.size(); ++i) {
      for (std::size_t j = i + 1; j < sim.size(); ++j) {
        scaled.set_pair(i, j, 37.5 * sim.at(i, j));
      }
    }
    const auto w = evidence_weights(sim);
    const auto ws = evidence_weights(scaled);
    for (std::size_t i = 0; i < w.size(); ++i) {
      CHECK(w[i] == doctest::Approx(ws[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("weighted_average") {
  SUBCASE("identical evidences are a fixed point") {
    const auto ev = from_beliefs("e", {{FocalSet{"A"}, 0.6}, {FocalSet{"B"}, 0.4}}, 0.7);
    const std::vector<OrdinalEvidence> mods{ev, ev, ev};
    const std::vector<double> w{0.2, 0.5, 0.3};
    const auto avg = weighted_average(mods, w);
    REQUIRE(avg.size() == 2);
    CHECK(avg.assignments()[0].set == FocalSet{"A"});
    CHECK(avg.assignments()[0].mass.belief() == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(avg.assignments()[0].mass.phase == doctest::Approx(0.7).epsilon(1e-12));
  }
  SUBCASE("complementary certainties blend") {
    const auto a = from_beliefs("a", {{FocalSet{"A"}, 1.0}});
    const auto b = from_beliefs("b", {{FocalSet{"B"}, 1.0}});
    const std::vector<OrdinalEvidence> mods{a, b};
    const auto avg = weighted_average(mods, std::vector<double>{0.5, 0.5});
    const auto classic = to_classic(avg);
    CHECK(classic.at(FocalSet{"A"}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(classic.at(FocalSet{"B"}) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("listed case-study beliefs with the reference weights") {
    const FocalSet C{"C"}, F{"F"}, S{"S"}, CS{"C", "S"};
    const std::vector<OrdinalEvidence> mods{
        from_beliefs("m1", {{C, 0.6875}, {F, 0.1875}, {S, 0.09375}, {CS, 0.03125}}),
        from_beliefs("m2", {{F, 1.8 / 3.02}, {C, 0.75 / 3.02}, {CS, 0.34 / 3.02}, {S, 0.13 / 3.02}}),
        from_beliefs("m3", {{F, 2.12 / 2.99}, {C, 0.45 / 2.99}, {S, 0.20 / 2.99}, {CS, 0.22 / 2.99}}),
        from_beliefs("m4", {{CS, 2.6 / 3.29}, {S, 0.39 / 3.29}, {C, 0.16 / 3.29}, {F, 0.14 / 3.29}}),
    };
    const std::vector<double> w{0.2724, 0.2709, 0.2354, 0.2212};
    const auto classic = to_classic(weighted_average(mods, w));
    CHECK(classic.at(C) == doctest::Approx(0.300767107231).epsilon(1e-9));
    CHECK(classic.at(F) == doctest::Approx(0.388895917327).epsilon(1e-9));
    CHECK(classic.at(S) == doctest::Approx(0.079173771649).epsilon(1e-9));
    CHECK(classic.at(CS) == doctest::Approx(0.231163203793).epsilon(1e-9));
  }
  SUBCASE("length mismatch") {
    const auto a = from_beliefs("a", {{FocalSet{"A"}, 1.0}});
    const std::vector<OrdinalEvidence> mods{a};
    CHECK_THROWS_AS(weighted_average(mods, std::vector<double>{0.5, 0.5}), DataError);
  }
}

TEST_CASE("fuse_n_fold") {
  const auto ev = from_beliefs("e", {{FocalSet{"A"}, 0.7}, {FocalSet{"A", "B"}, 0.3}});
  SUBCASE("one copy is the identity") {
    const auto r = fuse_n_fold(ev, 1);
    CHECK(r.conflicts.empty());
    CHECK(r.evidence.assignments()[0].mass.belief() == doctest::Approx(0.7));
  }
  SUBCASE("certainty stays certain") {
    OrdinalEvidence certain("c", {{FocalSet{"X"}, {1.0, 0.0}}});
    const auto r = fuse_n_fold(certain, 2);
    CHECK(r.evidence.assignments()[0].mass.belief() == doctest::Approx(1.0));
    CHECK(r.conflicts.size() == 1);
  }
  SUBCASE("the app1 average keeps {C} on top, confirmed independently") {
    const auto report = run_pipeline(fixture("app1").evidence_set);
    const auto folded = fuse_n_fold(report.averaged, 4);
    CHECK(top_set(to_classic(folded.evidence)) == FocalSet{"C"});

    // independent check: classical fold of the averaged beliefs
    const auto labels = std::vector<std::string>{"C", "F", "S"};
    auto masks = qtest::masks_of(report.averaged, labels);
    auto acc = masks;
    for (int i = 0; i < 3; ++i) acc = qtest::dempster_masks(acc, masks);
    std::uint64_t best = 0;
    double best_mass = -1.0;
    for (const auto& [m, v] : acc) {
      if (v > best_mass) { best = m; best_mass = v; }
    }
    CHECK(qtest::set_from_mask(best, labels) == FocalSet{"C"});
  }
  SUBCASE("bad copy count") {
    CHECK_THROWS_AS(fuse_n_fold(ev, 0), DataError);
  }
}

TEST_CASE("quantum masses are not additive") {
  const QuantumMass a{0.5, 0.0};
  const QuantumMass b{0.5, std::numbers::pi / 2};
  const double joint = std::abs(a.belief_phasor() + b.belief_phasor());
  const double separate = std::abs(a.belief_phasor()) + std::abs(b.belief_phasor());
  CHECK(joint == doctest::Approx(0.25 * std::numbers::sqrt2).epsilon(1e-12));
  CHECK(separate == doctest::Approx(0.5));
  CHECK(joint != separate);
}

TEST_CASE("normalized stages conserve mass") {
  std::mt19937_64 rng(53);
  int done = 0;
  while (done < 100) {
    const std::size_t hypotheses = 2 + rng() % 4;
    const auto labels = qtest::frame_labels(hypotheses);
    std::vector<Hypothesis> hs;
    for (const auto& l : labels) hs.push_back({l});
    std::vector<OrdinalEvidence> evs;
    const std::size_t n = 2 + rng() % 3;
    for (std::size_t i = 0; i < n; ++i) {
      evs.push_back(qtest::random_evidence("e" + std::to_string(i), labels, rng, false));
    }
    const EvidenceSet es(Frame(hs), evs);
    try {
      const auto report = run_pipeline(es);
      ++done;

      double wsum = 0.0;
      for (double w : report.weights) wsum += w;
      CHECK(wsum == doctest::Approx(1.0).epsilon(1e-9));
      for (const auto& mod : report.modified) {
        CHECK(mod.belief_sum() == doctest::Approx(1.0).epsilon(1e-9));
      }
      CHECK(report.averaged.belief_sum() == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(report.combined.belief_sum() == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(report.baseline.belief_sum() == doctest::Approx(1.0).epsilon(1e-9));

      double classic_sum = 0.0;
      for (const auto& [set, mass] : report.combined_classic) {
        CHECK(mass >= 0.0);
        CHECK(mass <= 1.0 + 1e-12);
        classic_sum += mass;
      }
      CHECK(classic_sum == doctest::Approx(1.0).epsilon(1e-9));
    } catch (const TotalConflictError&) {
      // heavily conflicting draw; take another
    }
  }
}

TEST_CASE("run_pipeline on two identical evidences") {
  const auto ev = from_beliefs("e1", {{FocalSet{"A"}, 0.5},
                                      {FocalSet{"B"}, 0.3},
                                      {FocalSet{"A", "B"}, 0.2}},
                               0.4);
  OrdinalEvidence ev2("e2", ev.assignments());
  const EvidenceSet es(Frame({{"A"}, {"B"}}), {ev, ev2});
  const auto report = run_pipeline(es);

  CHECK(report.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(report.weights[1] == doctest::Approx(0.5).epsilon(1e-12));
  // degenerate distance matrices fall back to uniform, with a note
  bool noted = false;
  for (const auto& n : report.notes) noted = noted || n.find("degenerate") != std::string::npos;
  CHECK(noted);

  const auto expected = ordinal_reweight(ev);
  REQUIRE(report.averaged.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(report.averaged.assignments()[i].set == expected.assignments()[i].set);
    CHECK(report.averaged.assignments()[i].mass.belief() ==
          doctest::Approx(expected.assignments()[i].mass.belief()).epsilon(1e-12));
    CHECK(report.averaged.assignments()[i].mass.phase ==
          doctest::Approx(expected.assignments()[i].mass.phase).epsilon(1e-12));
  }
}
