#include "regcoal/dual.hpp"

#include <algorithm>

namespace regcoal {

DualElement::DualElement(VectorQ coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 1) throw std::invalid_argument("precision must be at least 1");
}

DualElement DualElement::basis(long n, long precision) {
  if (n < 0 || n >= precision) throw std::out_of_range("basis index outside precision");
  VectorQ v = VectorQ::Zero(precision);
  v(n) = 1;
  return DualElement(std::move(v));
}

DualElement DualElement::constant(const Rational& c, const CoeffTables& tables, long precision) {
  VectorQ v(precision);
  for (long n = 0; n < precision; ++n) v(n) = c * tables.counit(n);
  return DualElement(std::move(v));
}

DualElement DualElement::truncated(long precision) const {
  if (precision > this->precision()) throw InsufficientPrecision();
  return DualElement(coeffs_.head(precision));
}

void DualElement::require_integral(const GroundRing& ring) const {
  if (auto bad = first_nonintegral(coeffs_, ring)) throw NotInAlgebra(*bad);
}

DualElement operator+(const DualElement& a, const DualElement& b) {
  const long n = std::min(a.precision(), b.precision());
  return DualElement(a.coeffs_.head(n) + b.coeffs_.head(n));
}

DualElement operator-(const DualElement& a, const DualElement& b) {
  const long n = std::min(a.precision(), b.precision());
  return DualElement(a.coeffs_.head(n) - b.coeffs_.head(n));
}

DualElement operator*(const Rational& s, const DualElement& a) { return DualElement(s * a.coeffs_); }

bool operator==(const DualElement& a, const DualElement& b) {
  return a.precision() == b.precision() && a.coeffs_ == b.coeffs_;
}

namespace {

void require_same_beta(const AdamsPoly& a, const AdamsPoly& b) {
  if (a.beta != b.beta) throw std::invalid_argument("Adams polynomials with different beta");
}

}  // namespace

AdamsPoly operator*(const AdamsPoly& a, const AdamsPoly& b) {
  require_same_beta(a, b);
  return {a.beta, a.poly * b.poly};
}

AdamsPoly operator+(const AdamsPoly& a, const AdamsPoly& b) {
  require_same_beta(a, b);
  return {a.beta, a.poly + b.poly};
}

AdamsPoly operator-(const AdamsPoly& a, const AdamsPoly& b) {
  require_same_beta(a, b);
  return {a.beta, a.poly - b.poly};
}

Rational pair(const AdamsPoly& a, const LaurentPoly& f) {
  Rational out = 0;
  for (const auto& [k, c] : f.terms()) out += c * a.poly.eval(power(a.beta, k));
  return out;
}

Rational pair(const DualElement& a, const LaurentPoly& f, const CoeffTables& tables) {
  const VectorQ coords = basis_coordinates(f, tables);
  for (Eigen::Index n = a.precision(); n < coords.size(); ++n)
    if (coords(n) != 0) throw InsufficientPrecision();
  const long n = std::min<long>(a.precision(), coords.size());
  return a.coeffs().head(n).dot(coords.head(n));
}

DualElement expand(const AdamsPoly& a, const CoeffTables& tables, long precision) {
  VectorQ v(precision);
  for (long n = 0; n < precision; ++n) {
    v(n) = pair(a, tables.basis(n));
    if (!tables.ring().contains(v(n))) throw NotInAlgebra(n);
  }
  return DualElement(std::move(v));
}

DualElement multiply(const DualElement& a, const DualElement& b, const CoeffTables& tables) {
  const long precision = std::min(a.precision(), b.precision());
  VectorQ out(precision);
  for (long n = 0; n < precision; ++n) {
    const MatrixQ& g = tables.gamma(n);
    out(n) = a.coeffs().head(n + 1).dot(g * b.coeffs().head(n + 1));
  }
  return DualElement(std::move(out));
}

VectorQ monomial_pairings(const DualElement& a, const CoeffTables& tables) {
  VectorQ out(a.precision());
  for (long j = 0; j < a.precision(); ++j) out(j) = a.coeffs().head(j + 1).dot(tables.lambda_coords(j));
  return out;
}

UnitVerdict is_unit(const DualElement& a, const CoeffTables& tables) {
  UnitVerdict verdict;
  verdict.checked = a.precision();
  const VectorQ values = monomial_pairings(a, tables);
  for (long j = 0; j < values.size(); ++j) {
    verdict.evidence.push_back(values(j));
    if (!tables.ring().is_unit(values(j)) && !verdict.witness_slot) {
      verdict.kind = UnitVerdict::Kind::NonUnit;
      verdict.witness_slot = j;
      verdict.witness_exponent = tables.spec().w_exponent(j);
    }
  }
  return verdict;
}

UnitVerdict is_unit(const AdamsPoly& a, const CoeffTables& tables) {
  const auto& ring = tables.ring();
  if (!ring.prime) throw std::domain_error("periodicity unavailable over Z");
  const long p = *ring.prime;
  if (mp::denominator(a.beta) != 1 || mp::numerator(a.beta) % p == 0)
    throw std::domain_error("periodicity unavailable: beta must be an integer prime to p");
  for (const auto& [e, c] : a.poly.terms()) {
    if (e < 0) throw std::domain_error("Adams polynomial with negative powers");
    if (!ring.contains(c)) throw std::domain_error("Adams polynomial coefficients must be p-local integers");
  }
  const long r = tables.spec().step();
  const Integer beta_r = power(mp::numerator(a.beta), static_cast<unsigned long>(r));
  const long period = multiplicative_order(beta_r, Integer(p));

  UnitVerdict verdict;
  verdict.kind = UnitVerdict::Kind::Unit;
  verdict.checked = period;
  for (long j = 0; j < period; ++j) {
    const Rational value = a.poly.eval(power(Rational(beta_r), j));
    verdict.evidence.emplace_back(residue(value, p));
    if (!is_p_local_unit(p, value) && !verdict.witness_slot) {
      verdict.kind = UnitVerdict::Kind::NonUnit;
      verdict.witness_slot = slot_of_exponent(tables.spec().periodic(), j);
      verdict.witness_exponent = j * r;
    }
  }
  return verdict;
}

DualElement invert(const DualElement& a, const CoeffTables& tables, long precision) {
  if (precision > a.precision()) throw InsufficientPrecision();
  const auto& ring = tables.ring();
  const VectorQ r = a.coeffs().head(precision);
  VectorQ s = VectorQ::Zero(precision);
  for (long i = 0; i < precision; ++i) {
    const MatrixQ& g = tables.gamma(i);
    const Rational pivot = r.head(i + 1).dot(g.col(i));
    if (!ring.is_unit(pivot)) throw NotInvertible(i, tables.spec().w_exponent(i), pivot);
    const Rational partial = r.head(i + 1).dot(g * s.head(i + 1));
    s(i) = (tables.counit(i) - partial) / pivot;
  }
  return DualElement(std::move(s));
}

long ideal_index(const DualElement& a) {
  long n = 0;
  while (n < a.precision() && a[n] == 0) ++n;
  return n;
}

}  // namespace regcoal
