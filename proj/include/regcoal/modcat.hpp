#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "regcoal/coalgebra.hpp"
#include "regcoal/exact.hpp"
#include "regcoal/spectra.hpp"

namespace regcoal {

/// A discrete A-module, finitely generated over Z_(p), presented on generators
/// x_0..x_{d-1}: the first `free_rank` are free, the rest are cyclic of order
/// torsion_orders[t]. Column g of action[n] is a_n x_g; a_n acts as zero for
/// n >= annihilation_level() = action.size().
struct FGModule {
  long prime = 0;
  long free_rank = 0;
  std::vector<Integer> torsion_orders;
  std::vector<MatrixQ> action;

  [[nodiscard]] long dimension() const { return free_rank + static_cast<long>(torsion_orders.size()); }
  [[nodiscard]] long annihilation_level() const { return static_cast<long>(action.size()); }
  /// Order of generator h, or empty for a free generator.
  [[nodiscard]] std::optional<Integer> order(long h) const;
  /// a_n as a matrix, zero past the annihilation level.
  [[nodiscard]] MatrixQ matrix(long n) const;
  /// Entrywise equality of column images, torsion rows compared modulo their order.
  [[nodiscard]] bool same_image(const MatrixQ& a, const MatrixQ& b) const;

  friend bool operator==(const FGModule&, const FGModule&) = default;
};

struct ModuleVerdict {
  bool valid = true;
  /// "shape", "integrality", "torsion_block", "unit" or "product".
  std::string relation;
  /// For "product": the relation a_i a_j = sum_n Gamma^n_{ij} a_n that failed.
  std::optional<long> i, j;
  /// Offending matrix entry (row, column).
  std::optional<long> row, column;
  std::string detail;
};

/// Checks the presentation exactly: shapes, p-local integrality, that torsion
/// generators map into torsion with well-defined images, that the unit of A
/// acts as the identity, and every product relation for i, j < K.
ModuleVerdict validate_module(const FGModule& m, const CoeffTables& tables);

class InvalidModule : public std::invalid_argument {
 public:
  explicit InvalidModule(const ModuleVerdict& v)
      : std::invalid_argument("invalid module: " + v.relation + (v.detail.empty() ? "" : " (" + v.detail + ")")),
        verdict(v) {}
  ModuleVerdict verdict;
};

/// rho(x_g) = sum_h x_h (x) coaction[h][g], coaction[h][g] = sum_{n<K} (a_n)_{hg} c_n.
struct Comodule {
  long prime = 0;
  long free_rank = 0;
  std::vector<Integer> torsion_orders;
  std::vector<std::vector<LaurentPoly>> coaction;
  bool counit_ok = false;
  bool coassociative = false;
};

/// Refuses invalid modules with InvalidModule. The counit and coassociativity
/// checks are recomputed from the polynomials, not from the input matrices.
Comodule to_comodule(const FGModule& m, const CoeffTables& tables);

/// a x = sum_i <a, c_i> x_i applied to the coaction: recovers a_0..a_{K-1}.
std::vector<MatrixQ> action_from_comodule(const Comodule& c, const CoeffTables& tables, long level);

struct AnnihilatorSearch {
  /// First m in N_s with a_m T = 0.
  std::optional<long> witness;
  /// First m < n in N_s with a_m and a_n equal on T, if met before the witness.
  std::optional<std::pair<long, long>> pigeonhole;
  long searched = 0;
  std::string message;
};

/// Walks the first `bound` elements of N_s looking for a_m acting as zero on
/// the torsion part. Throws std::invalid_argument unless p^s kills the torsion.
AnnihilatorSearch torsion_annihilator(const FGModule& m, const IndexSet& n_s, long s, long bound = 64);
AnnihilatorSearch torsion_annihilator(const FGModule& m, const SpectrumSpec& spec, long s, long bound = 64);

// Constructors for test and demo modules.

/// a_0 = unit, everything else zero (the action through A/A_1).
FGModule trivial_module(const CoeffTables& tables, long rank);
/// Rank one, a acting by <a, w^e>; level is the last slot with a nonzero coordinate plus one.
FGModule character_module(const CoeffTables& tables, long w_exponent);
/// The subcomodule spanned by c_0..c_{level-1} of C, as an A-module.
FGModule regular_module(const CoeffTables& tables, long level);
FGModule direct_sum(const FGModule& a, const FGModule& b);
/// Free part only: a_n -> u a_n u^{-1}, u invertible over Z_(p).
FGModule conjugate(const FGModule& m, const MatrixQ& u);
/// The free part reduced modulo p^e: every free generator becomes cyclic of order p^e.
FGModule reduce_mod(const FGModule& m, long e);

nlohmann::json to_json(const FGModule& m);
FGModule module_from_json(const nlohmann::json& j);

}  // namespace regcoal
