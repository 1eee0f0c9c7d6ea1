#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regcoal/exact.hpp"
#include "regcoal/spectra.hpp"

namespace regcoal {

enum class Verdict { Holds, HoldsUpToBound, Fails };

std::string to_string(Verdict v);

/// Outcome of one hypothesis check.
///
/// `witness` is the first counterexample index (j for unit conditions, i for
/// congruence/Gamma cells); `min_valuation` is the least valuation observed,
/// empty when every value was zero (+infinity).
struct CheckResult {
  std::string condition;
  Verdict verdict = Verdict::Holds;
  std::optional<long> witness;
  std::optional<long> min_valuation;
  /// Period of beta^{jr} mod p (unit), or the bound used (coalgebra side).
  long checked = 0;
  std::string detail;

  [[nodiscard]] bool holds() const { return verdict != Verdict::Fails; }
};

/// 1 - a_{n-m} is a unit: theta_{n-m}(beta^{jr}, (z_i)) = 0 mod p for every j,
/// decided over one period of beta^{jr} mod p. K(2)/k(2) use the
/// coalgebra-side Lambda test up to `bound`.
CheckResult check_unit_condition(const SpectrumSpec& spec, long m, long n, long bound = 24);

/// a_m a_n = a_{m+n} mod p^l via nu_p(z_{n-i} - z_{m+n-i}) >= l, 0 <= i < n.
/// When `precision` > 0 the verdict is cross-checked against the first
/// `precision` expansion coefficients of theta_m theta_n - theta_{m+n};
/// a disagreement throws std::logic_error.
CheckResult check_congruence_condition(const SpectrumSpec& spec, long m, long n, long l, long precision = 0);

/// Lambda and Gamma access for the coalgebra-side conditions; tests swap in
/// corrupted tables.
struct StructureConstants {
  long prime;
  std::function<VectorQ(long)> lambda;
  std::function<MatrixQ(long)> gamma;

  static StructureConstants of(const CoeffTables& tables);
};

struct CoalgebraConditions {
  /// p | Lambda_{n-m}^j for every slot j <= bound (only when m < n).
  std::optional<CheckResult> lambda_divisibility;
  /// Gamma_{m,n}^{m+n} = 1 and p^l | Gamma_{m,n}^i for i != m+n, i <= bound.
  CheckResult gamma_congruence;

  [[nodiscard]] bool holds() const;
};

CoalgebraConditions check_coalgebra_conditions(const StructureConstants& sc, long m, long n, long l, long bound);
CoalgebraConditions check_coalgebra_conditions(const SpectrumSpec& spec, long m, long n, long l, long bound);

/// Lemma identity theta_{m+n} = theta_m theta_n + sum_i (z_{n-i} - z_{m+n-i})
/// (theta_n / theta_{n-i}) theta_{m+n-i-1}, as exact polynomials.
bool theta_product_identity(const ZSequence& z, long m, long n);

struct Prop76Cell {
  long i, j, m;
  std::string formula;  // "even" (2i,2j) or "odd" (2i,2j+1)
  Rational expected;
  Rational actual;
};

struct Prop76Report {
  long m_max = 0;
  long cells_checked = 0;
  std::vector<Prop76Cell> mismatches;
  /// m values where w f_{2m} = 3^m f_{2m} - 2 3^m f_{2m+1} failed.
  std::vector<long> bridge_failures;

  [[nodiscard]] bool passed() const { return mismatches.empty() && bridge_failures.empty(); }
};

/// Gamma transfer formulas between K_0(k)_(2) and KO_0(ko)_(2) for
/// i, j, m <= m_max, plus the bridge identity for m <= bridge_max.
Prop76Report check_prop76(const SpectrumSpec& k2, const SpectrumSpec& ko2, long m_max, long bridge_max = 8);

struct Eq71Row {
  long i;
  long direct;
  long closed_form;
};

struct Eq71Report {
  std::vector<Eq71Row> rows;
  [[nodiscard]] bool passed() const;
};

/// nu_2(3^i - 1) = 1 (i odd), 2 + nu_2(i) (i even), for 1 <= i <= i_max.
Eq71Report verify_eq71(long i_max);

struct ReportCell {
  long l = 0;
  long m = 0;
  long n = 0;
  std::string condition;
  Verdict verdict = Verdict::Holds;
  std::optional<long> witness;
  std::optional<long> min_valuation;
  bool control = false;
};

struct ReportOptions {
  /// n ranges over 0..n_max for the congruence condition.
  long n_max = 12;
  /// Expansion precision for the congruence cross-check (0 disables it).
  long precision = 16;
  /// Index bound for coalgebra-side (bounded) checks.
  long bound = 24;
  bool include_negative_controls = false;
  /// Replace every N_l by {n >= 1} (a negative control for the whole table).
  bool all_indices = false;
};

struct TheoremReport {
  std::string spectrum;
  long prime = 0;
  long l_max = 0;
  long sample = 0;
  ReportOptions options;
  std::vector<ReportCell> cells;

  /// True iff every cell holds (controls included).
  [[nodiscard]] bool all_hold() const;
  /// True iff every non-control cell holds.
  [[nodiscard]] bool hypotheses_hold() const;
  [[nodiscard]] long failures(bool controls) const;
};

/// For each l <= l_max and the first `sample` elements m of N_l: unit
/// condition for pairs m < n inside that sample, congruence for n <= n_max.
/// Negative controls use the first `sample` positive integers outside N_l.
TheoremReport theorem_report(const SpectrumSpec& spec, long l_max, long sample, const ReportOptions& options = {});

}  // namespace regcoal
