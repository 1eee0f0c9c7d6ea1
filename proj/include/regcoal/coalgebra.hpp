#pragma once

#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regcoal/exact.hpp"
#include "regcoal/laurent.hpp"

namespace regcoal {

/// Thrown when a basis generator violates the degree/window shape.
class RegularityError : public std::runtime_error {
 public:
  explicit RegularityError(const std::string& what) : std::runtime_error("not a regular basis: " + what) {}
};

/// Slot s of the monomial order: connective bases add w^{sr} at step s,
/// periodic bases add the exponents 0, 1, -1, 2, -2, ... (times r).
long slot_exponent(bool periodic, long slot);
/// Inverse of slot_exponent. Throws std::domain_error for k < 0 in the connective case.
long slot_of_exponent(bool periodic, long k);

/// A regular coalgebra C inside Q[w^r] (or D = C[w^-r] inside Q[w^r, w^-r]
/// when periodic), described by its ground ring, step r and basis generator.
class CoalgebraSpec {
 public:
  using Generator = std::function<LaurentPoly(long)>;

  CoalgebraSpec(std::string name, GroundRing ring, long step, bool periodic, Generator basis);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const GroundRing& ring() const { return ring_; }
  [[nodiscard]] long step() const { return step_; }
  [[nodiscard]] bool periodic() const { return periodic_; }
  [[nodiscard]] LaurentPoly basis(long n) const { return basis_(n); }

  /// Power of w carried by slot s: step * slot_exponent(periodic, s).
  [[nodiscard]] long w_exponent(long slot) const { return step_ * slot_exponent(periodic_, slot); }
  /// Slot of the monomial w^e; throws std::domain_error if e is not a slot exponent.
  [[nodiscard]] long slot_of_w_exponent(long e) const;

 private:
  std::string name_;
  GroundRing ring_;
  long step_;
  bool periodic_;
  Generator basis_;
};

/// c_n = (1/D_n) sum_s lambda_s w_s over slots s <= n, with D_n > 0 and
/// gcd(lambda_0, ..., lambda_n, D_n) = 1.
struct MonomialCoords {
  Integer denominator;
  std::vector<Integer> lambda;
};

/// Memoized lambda/D, Lambda and Gamma tables of a regular coalgebra.
///
/// Tables are append-only; a row is computed at most once and is published
/// under the lock, so readers never observe a partial row. References
/// returned by the accessors stay valid for the lifetime of the tables.
class CoeffTables {
 public:
  explicit CoeffTables(CoalgebraSpec spec);

  CoeffTables(const CoeffTables&) = delete;
  CoeffTables& operator=(const CoeffTables&) = delete;

  [[nodiscard]] const CoalgebraSpec& spec() const { return spec_; }
  [[nodiscard]] const GroundRing& ring() const { return spec_.ring(); }

  /// Basis polynomial c_n, validated against the regular shape.
  [[nodiscard]] const LaurentPoly& basis(long n) const;
  [[nodiscard]] const MonomialCoords& monomial_coords(long n) const;
  /// Lambda^k: coordinates of the slot-k monomial in c_0..c_k.
  [[nodiscard]] const VectorQ& lambda_coords(long k) const;
  /// Gamma^n: (n+1)x(n+1) matrix with Delta(c_n) = sum Gamma_{ij} c_i (x) c_j.
  [[nodiscard]] const MatrixQ& gamma(long n) const;
  /// eps(c_n) = c_n(1).
  [[nodiscard]] Rational counit(long n) const { return basis(n).eval(1); }

 private:
  void fill_basis(long n) const;
  void fill_lambda(long k) const;
  void fill_gamma(long n) const;

  CoalgebraSpec spec_;
  mutable std::recursive_mutex mutex_;
  mutable std::deque<LaurentPoly> basis_;
  mutable std::deque<MonomialCoords> coords_;
  mutable std::deque<VectorQ> lambda_;
  mutable std::deque<MatrixQ> gamma_;
};

/// Normalized (D_n, lambda^n) for a single polynomial already known to live in
/// slots 0..n. Exposed for tests.
MonomialCoords normalize_coords(const std::vector<Rational>& slot_coefficients);

/// Coordinates of an arbitrary polynomial in the basis c_0, c_1, ...
/// Throws std::domain_error if f has exponents outside the slot lattice.
VectorQ basis_coordinates(const LaurentPoly& f, const CoeffTables& tables);

/// First index whose entry is not in the ground ring, if any.
std::optional<long> first_nonintegral(const VectorQ& v, const GroundRing& ring);

/// Independent Gamma^n: solves M^T Gamma M = diag(lambda / D) in the monomial
/// tensor basis by a generic LU, straight from the basis polynomials.
MatrixQ gamma_oracle(const CoalgebraSpec& spec, long n);

struct RegularityCheck {
  std::string name;
  bool passed = true;
  std::string counterexample;
};

struct RegularityReport {
  std::string coalgebra;
  long bound = 0;
  std::vector<RegularityCheck> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const RegularityCheck& check(const std::string& name) const;
};

/// Checks shape, Lambda and Gamma integrality, Lambda_i^i lambda_i^i = D_i,
/// Gamma_{n,i}^i = Lambda_n^i and the counit identities for indices <= bound.
RegularityReport verify_regularity(const CoeffTables& tables, long bound);

/// The binomial-coefficient coalgebra of integer-valued polynomials over Z.
CoalgebraSpec binomial_coalgebra(std::optional<long> prime = std::nullopt);

}  // namespace regcoal
