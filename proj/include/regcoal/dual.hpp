#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regcoal/coalgebra.hpp"
#include "regcoal/exact.hpp"
#include "regcoal/laurent.hpp"

namespace regcoal {

/// The coset sum_{n<N} r_n a_n + A_N in the dual algebra A = C*, where a_n is
/// dual to c_n. Precision N is the length of the coefficient vector.
class DualElement {
 public:
  explicit DualElement(VectorQ coeffs);

  /// a_n at the given precision.
  static DualElement basis(long n, long precision);
  static DualElement constant(const Rational& c, const CoeffTables& tables, long precision);
  /// The unit of A: the counit eps, i.e. coefficients c_n(1).
  static DualElement one(const CoeffTables& tables, long precision) { return constant(1, tables, precision); }

  [[nodiscard]] long precision() const { return static_cast<long>(coeffs_.size()); }
  [[nodiscard]] const VectorQ& coeffs() const { return coeffs_; }
  [[nodiscard]] const Rational& operator[](long n) const { return coeffs_(n); }
  [[nodiscard]] DualElement truncated(long precision) const;
  /// Throws std::domain_error unless every coefficient lies in the ground ring.
  void require_integral(const GroundRing& ring) const;

  friend DualElement operator+(const DualElement& a, const DualElement& b);
  friend DualElement operator-(const DualElement& a, const DualElement& b);
  friend DualElement operator*(const Rational& s, const DualElement& a);
  friend bool operator==(const DualElement& a, const DualElement& b);

 private:
  VectorQ coeffs_;
};

/// P(Psi^beta) for a polynomial P in one formal variable X; Psi^beta is the
/// evaluation functional f(w) -> f(beta) and Psi^a Psi^b = Psi^{ab}.
struct AdamsPoly {
  Rational beta;
  LaurentPoly poly;

  static AdamsPoly psi(const Rational& beta) { return {beta, LaurentPoly::variable()}; }
  static AdamsPoly constant(const Rational& beta, const Rational& c) { return {beta, LaurentPoly(c)}; }

  friend AdamsPoly operator*(const AdamsPoly& a, const AdamsPoly& b);
  friend AdamsPoly operator+(const AdamsPoly& a, const AdamsPoly& b);
  friend AdamsPoly operator-(const AdamsPoly& a, const AdamsPoly& b);
};

/// <P(Psi^beta), f> = sum_k f_k P(beta^k).
Rational pair(const AdamsPoly& a, const LaurentPoly& f);

/// sum_n r_n (coefficient of c_n in f). Throws InsufficientPrecision when f
/// needs coefficients past the element's precision.
Rational pair(const DualElement& a, const LaurentPoly& f, const CoeffTables& tables);

class InsufficientPrecision : public std::domain_error {
 public:
  InsufficientPrecision() : std::domain_error("insufficient precision") {}
};

class NotInAlgebra : public std::domain_error {
 public:
  explicit NotInAlgebra(long n)
      : std::domain_error("element not in A over R: coefficient " + std::to_string(n) + " is not integral"),
        index(n) {}
  long index;
};

/// Coefficients r_n = <a, c_n> for n < precision, each required to lie in R.
DualElement expand(const AdamsPoly& a, const CoeffTables& tables, long precision);

/// Product modulo A_N, N the smaller precision:
/// coefficient n = sum_{i,j<=n} Gamma^n_{ij} r_i s_j.
DualElement multiply(const DualElement& a, const DualElement& b, const CoeffTables& tables);

/// <a, w_j> for each monomial slot j < precision.
VectorQ monomial_pairings(const DualElement& a, const CoeffTables& tables);

struct UnitVerdict {
  enum class Kind { Unit, UnitUpToPrecision, NonUnit };
  Kind kind = Kind::UnitUpToPrecision;
  /// Precision for truncated verdicts, period of beta^{jr} mod p for exact ones.
  long checked = 0;
  /// Witness slot and its w-exponent when kind == NonUnit.
  std::optional<long> witness_slot;
  std::optional<long> witness_exponent;
  /// <a, w^{jr}> mod p for one period (exact mode) or the pairings (truncated mode).
  std::vector<Rational> evidence;

  [[nodiscard]] bool is_unit() const { return kind != Kind::NonUnit; }
};

/// Precision-bounded verdict: checks <a, w_j> in R^x for every slot j < N.
UnitVerdict is_unit(const DualElement& a, const CoeffTables& tables);

/// Exact verdict for all j (j in Z when periodic) using periodicity of
/// beta^{jr} mod p. Needs integer beta prime to p and a prime ground ring.
UnitVerdict is_unit(const AdamsPoly& a, const CoeffTables& tables);

class NotInvertible : public std::domain_error {
 public:
  NotInvertible(long step, long w_exponent, const Rational& pivot)
      : std::domain_error("not invertible at step " + std::to_string(step) + " (pivot " + to_string(pivot) + ")"),
        step(step),
        w_exponent(w_exponent),
        pivot(pivot) {}
  long step;
  long w_exponent;
  Rational pivot;
};

/// s with a*s = 1 mod A_N, built one coefficient at a time; each step divides
/// by the pivot <a, w_i> = sum_k r_k Gamma_{k,i}^i, which must be a unit of R.
DualElement invert(const DualElement& a, const CoeffTables& tables, long precision);

/// Largest n <= precision with r_0 = ... = r_{n-1} = 0.
long ideal_index(const DualElement& a);

}  // namespace regcoal
