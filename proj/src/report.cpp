#include "regcoal/report.hpp"

#include <sstream>
#include <stdexcept>

namespace regcoal {

namespace {

nlohmann::json optional_long(const std::optional<long>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

std::optional<long> read_optional(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long>();
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::Holds;
  if (s == "holds_up_to_bound") return Verdict::HoldsUpToBound;
  if (s == "fails") return Verdict::Fails;
  throw std::invalid_argument("unknown verdict: " + s);
}

std::string show(const std::optional<long>& v, const char* none) { return v ? std::to_string(*v) : none; }

}  // namespace

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json to_json(const VectorQ& v) {
  nlohmann::json out = nlohmann::json::array();
  for (long i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

nlohmann::json to_json(const MatrixQ& m) {
  nlohmann::json out = nlohmann::json::array();
  for (long i = 0; i < m.rows(); ++i) out.push_back(to_json(VectorQ(m.row(i).transpose())));
  return out;
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"condition", r.condition},         {"verdict", to_string(r.verdict)}, {"witness", optional_long(r.witness)},
          {"min_valuation", optional_long(r.min_valuation)}, {"checked", r.checked}, {"detail", r.detail}};
}

nlohmann::json to_json(const ReportCell& c, const std::string& spectrum) {
  return {{"spectrum", spectrum},
          {"l", c.l},
          {"m", c.m},
          {"n", c.n},
          {"condition", c.condition},
          {"verdict", to_string(c.verdict)},
          {"witness", optional_long(c.witness)},
          {"min_valuation", optional_long(c.min_valuation)},
          {"control", c.control}};
}

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells) cells.push_back(to_json(c, r.spectrum));
  return {{"spectrum", r.spectrum},
          {"prime", r.prime},
          {"l_max", r.l_max},
          {"sample", r.sample},
          {"options",
           {{"n_max", r.options.n_max},
            {"precision", r.options.precision},
            {"bound", r.options.bound},
            {"include_negative_controls", r.options.include_negative_controls},
            {"all_indices", r.options.all_indices}}},
          {"summary",
           {{"cells", r.cells.size()},
            {"failures", r.failures(false)},
            {"control_failures", r.failures(true)},
            {"hypotheses_hold", r.hypotheses_hold()}}},
          {"cells", cells}};
}

TheoremReport theorem_report_from_json(const nlohmann::json& j) {
  TheoremReport r;
  r.spectrum = j.at("spectrum").get<std::string>();
  r.prime = j.at("prime").get<long>();
  r.l_max = j.at("l_max").get<long>();
  r.sample = j.at("sample").get<long>();
  const auto& o = j.at("options");
  r.options.n_max = o.at("n_max").get<long>();
  r.options.precision = o.at("precision").get<long>();
  r.options.bound = o.at("bound").get<long>();
  r.options.include_negative_controls = o.at("include_negative_controls").get<bool>();
  r.options.all_indices = o.at("all_indices").get<bool>();
  for (const auto& c : j.at("cells")) {
    r.cells.push_back({c.at("l").get<long>(), c.at("m").get<long>(), c.at("n").get<long>(),
                       c.at("condition").get<std::string>(), verdict_from_string(c.at("verdict").get<std::string>()),
                       read_optional(c.at("witness")), read_optional(c.at("min_valuation")),
                       c.at("control").get<bool>()});
  }
  return r;
}

std::string to_tsv(const TheoremReport& r) {
  std::ostringstream out;
  out << "spectrum\tl\tm\tn\tcondition\tverdict\twitness\tmin_valuation\tcontrol\n";
  for (const auto& c : r.cells)
    out << r.spectrum << '\t' << c.l << '\t' << c.m << '\t' << c.n << '\t' << c.condition << '\t'
        << to_string(c.verdict) << '\t' << show(c.witness, "") << '\t' << show(c.min_valuation, "inf") << '\t'
        << (c.control ? "yes" : "no") << '\n';
  return out.str();
}

std::string to_pretty(const TheoremReport& r) {
  std::ostringstream out;
  out << r.spectrum << ", l <= " << r.l_max << ", first " << r.sample << " elements of N_l\n";
  long current_l = 0;
  for (const auto& c : r.cells) {
    if (c.l != current_l) {
      current_l = c.l;
      out << "l = " << c.l << '\n';
    }
    out << "  " << (c.control ? "control " : "") << c.condition << " m=" << c.m << " n=" << c.n << ": "
        << to_string(c.verdict);
    if (c.witness) out << " (witness " << *c.witness << ")";
    out << ", min nu = " << show(c.min_valuation, "inf") << '\n';
  }
  out << r.failures(false) << " failing cells, " << r.failures(true) << " failing controls, " << r.cells.size()
      << " cells\n";
  return out.str();
}

nlohmann::json to_json(const RegularityReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"counterexample", c.counterexample}});
  return {{"coalgebra", r.coalgebra}, {"bound", r.bound}, {"passed", r.passed()}, {"checks", checks}};
}

nlohmann::json to_json(const Prop76Report& r) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& c : r.mismatches)
    mismatches.push_back({{"i", c.i},
                          {"j", c.j},
                          {"m", c.m},
                          {"formula", c.formula},
                          {"expected", to_string(c.expected)},
                          {"actual", to_string(c.actual)}});
  return {{"m_max", r.m_max},
          {"cells_checked", r.cells_checked},
          {"mismatches", mismatches},
          {"bridge_failures", r.bridge_failures},
          {"passed", r.passed()}};
}

nlohmann::json to_json(const Eq71Report& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) rows.push_back({{"i", row.i}, {"direct", row.direct}, {"closed_form", row.closed_form}});
  return {{"rows", rows}, {"passed", r.passed()}};
}

}  // namespace regcoal
