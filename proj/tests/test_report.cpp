#include "doctest.h"
#include "regcoal/modcat.hpp"
#include "regcoal/report.hpp"

using namespace regcoal;

TEST_CASE("theorem report JSON round-trips byte for byte") {
  ReportOptions o;
  o.include_negative_controls = true;
  o.n_max = 4;
  const TheoremReport r = theorem_report(make_spectrum(Family::g, 3), 2, 3, o);
  const std::string text = canonical_dump(to_json(r));
  CHECK(canonical_dump(nlohmann::json::parse(text)) == text);
  const TheoremReport back = theorem_report_from_json(nlohmann::json::parse(text));
  CHECK(canonical_dump(to_json(back)) == text);
  CHECK(back.cells.size() == r.cells.size());

  const auto j = nlohmann::json::parse(text);
  const auto& cell = j.at("cells").at(0);
  for (const char* key : {"spectrum", "l", "m", "n", "condition", "verdict", "witness", "min_valuation"})
    CHECK(cell.contains(key));
  CHECK(cell.at("spectrum") == "g(3)");
}

TEST_CASE("infinite valuations serialize as null") {
  TheoremReport r{"k(3)", 3, 1, 1, {}, {}};
  r.cells.push_back({1, 2, 0, "congruence", Verdict::Holds, std::nullopt, std::nullopt, false});
  const auto j = to_json(r);
  CHECK(j["cells"][0]["min_valuation"].is_null());
  CHECK(to_tsv(r) ==
        "spectrum\tl\tm\tn\tcondition\tverdict\twitness\tmin_valuation\tcontrol\n"
        "k(3)\t1\t2\t0\tcongruence\tholds\t\tinf\tno\n");
}

TEST_CASE("exact rationals stay strings") {
  MatrixQ m(1, 2);
  m(0, 0) = Rational(-2, 6);
  m(0, 1) = 5;
  CHECK(to_json(m).dump() == R"([["-1/3","5"]])");
}

TEST_CASE("other reports") {
  const auto eq = to_json(verify_eq71(4));
  CHECK(eq["passed"] == true);
  CHECK(eq["rows"].size() == 4);
  const auto reg = to_json(verify_regularity(*make_spectrum(Family::ko2, 2).tables, 4));
  CHECK(reg["passed"] == true);
  CHECK(reg["checks"].size() == 6);
  const auto p = to_json(check_prop76(make_spectrum(Family::k2, 2), make_spectrum(Family::ko2, 2), 1, 1));
  CHECK(p["mismatches"].empty());
}

TEST_CASE("modules serialize exactly") {
  const SpectrumSpec k3 = make_spectrum(Family::k_p, 3);
  const FGModule m = direct_sum(character_module(*k3.tables, 3), reduce_mod(regular_module(*k3.tables, 2), 1));
  const nlohmann::json j = to_json(m);
  CHECK(module_from_json(nlohmann::json::parse(j.dump())) == m);
  nlohmann::json broken = j;
  broken["action"][0].erase(0);
  CHECK_THROWS(module_from_json(broken));
}
