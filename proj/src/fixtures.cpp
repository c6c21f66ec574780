#include "qev/fixtures.hpp"

#include <array>
#include <map>

namespace qev {

namespace {

using Row = std::vector<std::pair<FocalSet, double>>;

OrdinalEvidence ev(std::string id,
                   std::vector<std::tuple<FocalSet, double, double>> rows) {
  std::vector<Assignment> assignments;
  assignments.reserve(rows.size());
  for (auto& [set, amplitude, phase] : rows) {
    assignments.push_back({std::move(set), {amplitude, phase}});
  }
  return {std::move(id), std::move(assignments)};
}

PairwiseMatrix table(MatrixKind kind, std::size_t n, std::vector<double> upper) {
  return PairwiseMatrix::from_upper(kind, n, upper, /*normalized=*/true);
}

CaseStudy make_app1() {
  const FocalSet C{"C"}, F{"F"}, S{"S"}, CS{"C", "S"};
  EvidenceSet es(
      Frame({{"C"}, {"F"}, {"S"}}),
      {
          ev("Evidence1", {{C, 0.7416, 0.4882}, {F, 0.4472, 0.3165}, {S, 0.3873, 0.3410}, {CS, 0.3162, 0.1988}}),
          ev("Evidence2", {{F, 0.6708, 0.6476}, {C, 0.5000, 0.3176}, {CS, 0.4123, 0.6307}, {S, 0.3607, 0.6077}}),
          ev("Evidence3", {{F, 0.7280, 0.5774}, {C, 0.3873, 0.3561}, {S, 0.3162, 0.5099}, {CS, 0.4690, 0.6408}}),
          ev("Evidence4", {{CS, 0.8062, 0.4527}, {S, 0.3606, 0.4007}, {C, 0.2828, 0.4942}, {F, 0.3742, 0.4735}}),
      });
  return CaseStudy{
      "app1",
      std::move(es),
      kDefaultMassTolerance,
      table(MatrixKind::Distance, 4,
            {0.180431287, 0.179981299, 0.150345454, 0.159564419, 0.209037016, 0.120640525}),
      table(MatrixKind::Distance, 4,
            {0.138404579, 0.163484138, 0.210720747, 0.117352038, 0.170080205, 0.199958292}),
      table(MatrixKind::Similarity, 4,
            {0.221107846, 0.169240021, 0.149963075, 0.176609694, 0.142552885, 0.140526479}),
      table(MatrixKind::Similarity, 4,
            {0.181458539, 0.176105299, 0.191831419, 0.190480753, 0.171415843, 0.088708148}),
      {0.2724, 0.2709, 0.2354, 0.2212},
      Row{{C, 0.9854}, {F, 0.0137}, {S, 0.0003}, {CS, 0.0005}},
      Row{{C, 0.9822}, {F, 0.0109}, {S, 0.0023}, {CS, 0.0045}},
      C,
      std::nullopt,
  };
}

CaseStudy make_app2() {
  const FocalSet AS{"AS"}, BS{"BS"}, ABS{"AS", "BS"}, NO{"NO"};
  EvidenceSet es(
      Frame({{"AS"}, {"BS"}, {"NO"}}),
      {
          ev("Evidence1", {{AS, 0.8124, 1.1726}, {BS, 0.2646, 1.4496}, {ABS, 0.4359, 1.5387}, {NO, 0.2828, 1.0243}}),
          ev("Evidence2", {{BS, 0.7550, 1.3396}, {AS, 0.4796, 0.4907}, {ABS, 0.4123, 1.2475}, {NO, 0.1732, 1.4783}}),
          ev("Evidence3", {{ABS, 0.1000, 1.2451}, {BS, 0.1732, 0.4360}, {AS, 0.9539, 0.9225}, {NO, 0.2236, 1.4317}}),
          ev("Evidence4", {{NO, 0.5196, 1.5361}, {ABS, 0.200, 1.3541}, {BS, 0.5744, 1.0070}, {AS, 0.6000, 1.0720}}),
      });
  return CaseStudy{
      "app2",
      std::move(es),
      kDefaultMassTolerance,
      table(MatrixKind::Distance, 4, {0.1912, 0.1773, 0.1656, 0.1375, 0.1728, 0.1556}),
      table(MatrixKind::Distance, 4, {0.2055, 0.2042, 0.1524, 0.1624, 0.1590, 0.1165}),
      table(MatrixKind::Similarity, 4, {0.0909, 0.1484, 0.1492, 0.2039, 0.1913, 0.2163}),
      table(MatrixKind::Similarity, 4, {0.1541, 0.1571, 0.1697, 0.1733, 0.1669, 0.1790}),
      {0.2173, 0.2451, 0.2695, 0.2681},
      Row{{AS, 0.7885}, {BS, 0.2112}, {ABS, 0.0002}, {NO, 0.0002}},
      Row{{AS, 0.8696}, {BS, 0.1296}, {ABS, 0.0002}, {NO, 0.0006}},
      AS,
      std::nullopt,
  };
}

CaseStudy make_app3() {
  const FocalSet S{"S"}, M{"M"}, E{"E"}, SM{"SM"}, ME{"ME"};
  EvidenceSet es(
      Frame({{"S"}, {"M"}, {"E"}, {"SM"}, {"ME"}}),
      {
          ev("Evidence1", {{S, 0.5000, 1.1196}, {M, 0.3874, 0.5798}, {E, 0.5830, 1.3477}, {SM, 0.3317, 1.2866}, {ME, 0.3873, 1.4491}}),
          ev("Evidence2", {{E, 0.4796, 1.1702}, {SM, 0.4123, 1.4809}, {ME, 0.3873, 1.2312}, {M, 0.4583, 1.1719}, {S, 0.4899, 1.3296}}),
          ev("Evidence3", {{SM, 0.3742, 1.2330}, {S, 0.4123, 1.3032}, {M, 0.4359, 0.7049}, {ME, 0.4899, 1.5075}, {E, 0.5099, 1.3473}}),
          ev("Evidence4", {{ME, 0.4243, 1.4360}, {E, 0.5568, 1.1665}, {S, 0.4796, 1.2017}, {M, 0.4123, 0.0798}, {SM, 0.3317, 1.4681}}),
          ev("Evidence5", {{M, 0.5196, 0.8901}, {ME, 0.4472, 1.4969}, {E, 0.4123, 1.3183}, {S, 0.4359, 0.5483}, {SM, 0.4123, 1.5069}}),
      });
  return CaseStudy{
      "app3",
      std::move(es),
      kDefaultMassTolerance,
      table(MatrixKind::Distance, 5,
            {0.095222009, 0.061335424, 0.128291791, 0.08803936, 0.065130772, 0.072923152,
             0.092479968, 0.09135496, 0.18540361, 0.119818954}),
      table(MatrixKind::Distance, 5,
            {0.083689353, 0.026769203, 0.043637639, 0.108407669, 0.066969002, 0.181357579,
             0.122602905, 0.074733965, 0.103655864, 0.188176822}),
      table(MatrixKind::Similarity, 5,
            {0.096500067, 0.12415855, 0.104560777, 0.100928249, 0.096621301, 0.103247208,
             0.095194423, 0.085874652, 0.106825599, 0.086089173}),
      table(MatrixKind::Similarity, 5,
            {0.103190835, 0.113738589, 0.111304902, 0.098754391, 0.105804526, 0.091261514,
             0.098198746, 0.105285393, 0.084351484, 0.088109621}),
      {0.2133, 0.1975, 0.2057, 0.1939, 0.1896},
      Row{{M, 0.1253}, {S, 0.1368}, {E, 0.6485}, {SM, 0.0099}, {ME, 0.0794}},
      Row{{M, 0.1588}, {S, 0.2231}, {E, 0.2130}, {SM, 0.1812}, {ME, 0.2238}},
      E,
      0.25,
  };
}

CaseStudy make_app4() {
  const FocalSet Fir{"Fir"}, Sec{"Sec"}, Thi{"Thi"}, Fou{"Fou"}, Fif{"Fif"};
  EvidenceSet es(
      Frame({{"Fir"}, {"Sec"}, {"Thi"}, {"Fou"}, {"Fif"}}),
      {
          ev("SM", {{Fir, 0.5568, 1.3462}, {Sec, 0.5916, 0.2446}, {Thi, 0.3316, 1.4590}, {Fif, 0.3606, 1.5181}, {Fou, 0.3162, 1.3896}}),
          ev("RD", {{Sec, 0.300, 1.4639}, {Fir, 0.4123, 1.5417}, {Fou, 0.5831, 1.2588}, {Fif, 0.5100, 0.3383}, {Thi, 0.3741, 1.1815}}),
          ev("ProD", {{Thi, 0.3742, 1.5120}, {Sec, 0.5385, 1.1540}, {Fir, 0.4359, 0.6650}, {Fif, 0.4583, 1.5402}, {Fou, 0.4123, 1.5441}}),
          ev("AD", {{Thi, 0.3606, 1.4764}, {Sec, 0.6245, 0.5603}, {Fou, 0.4796, 0.9135}, {Fir, 0.400, 1.5383}, {Fif, 0.300, 1.4807}}),
          ev("PerD", {{Fou, 0.5196, 0.2961}, {Fif, 0.4123, 1.0891}, {Fir, 0.4359, 1.3086}, {Sec, 0.4123, 1.5344}, {Thi, 0.5196, 0.2961}}),
      });
  return CaseStudy{
      "app4",
      std::move(es),
      // PerD repeats the {Fou} value on {Thi}; its beliefs sum to ~1.07, so
      // this fixture validates loosely and carries the violation as a note.
      1e-2,
      table(MatrixKind::Distance, 5,
            {0.0477, 0.0874, 0.0867, 0.0773, 0.0829, 0.0973, 0.0530, 0.0730, 0.2892, 0.1055}),
      table(MatrixKind::Distance, 5,
            {0.0604, 0.1111, 0.1263, 0.1047, 0.1057, 0.1358, 0.0357, 0.0841, 0.1174, 0.1188}),
      table(MatrixKind::Similarity, 5,
            {0.1030, 0.0862, 0.0943, 0.0988, 0.0942, 0.0899, 0.1248, 0.1191, 0.1014, 0.0884}),
      table(MatrixKind::Similarity, 5,
            {0.1104, 0.1000, 0.0984, 0.1019, 0.1011, 0.0962, 0.1126, 0.1047, 0.0774, 0.0972}),
      {0.1982, 0.2080, 0.1960, 0.1971, 0.2006},
      Row{{Fir, 0.2963}, {Sec, 0.6665}, {Thi, 0.0034}, {Fou, 0.0133}, {Fif, 0.0205}},
      Row{{Fir, 0.5477}, {Sec, 0.4018}, {Thi, 0.0214}, {Fou, 0.0142}, {Fif, 0.0148}},
      std::nullopt,
      std::nullopt,
  };
}

const std::map<std::string, CaseStudy>& all_fixtures() {
  static const std::map<std::string, CaseStudy> fixtures = [] {
    std::map<std::string, CaseStudy> m;
    m.emplace("app1", make_app1());
    m.emplace("app2", make_app2());
    m.emplace("app3", make_app3());
    m.emplace("app4", make_app4());
    return m;
  }();
  return fixtures;
}

}  // namespace

const std::vector<std::string>& fixture_ids() {
  static const std::vector<std::string> ids = {"app1", "app2", "app3", "app4"};
  return ids;
}

bool has_fixture(const std::string& id) { return all_fixtures().count(id) > 0; }

const CaseStudy& fixture(const std::string& id) {
  const auto& m = all_fixtures();
  auto it = m.find(id);
  if (it == m.end()) throw DataError("unknown fixture '" + id + "'");
  return it->second;
}

}  // namespace qev
