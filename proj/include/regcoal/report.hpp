#pragma once

#include <string>

#include "json.hpp"

#include "regcoal/checker.hpp"
#include "regcoal/coalgebra.hpp"

namespace regcoal {

/// Sorted keys, two-space indent, trailing newline. Rationals are already
/// "num/den" strings, so parse-then-dump reproduces the bytes.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const ReportCell& c, const std::string& spectrum);
nlohmann::json to_json(const TheoremReport& r);
TheoremReport theorem_report_from_json(const nlohmann::json& j);
/// One cell per row, header first.
std::string to_tsv(const TheoremReport& r);
std::string to_pretty(const TheoremReport& r);

nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const Prop76Report& r);
nlohmann::json to_json(const Eq71Report& r);

nlohmann::json to_json(const VectorQ& v);
nlohmann::json to_json(const MatrixQ& m);

}  // namespace regcoal
