#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "regcoal/exact.hpp"

namespace regcoal {

/// Finitely supported Laurent polynomial in one variable over Q.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class LaurentPoly {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(long exponent, const Rational& coefficient = 1);
  static LaurentPoly variable() { return monomial(1); }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Highest / lowest exponent present. Throw std::domain_error on zero.
  [[nodiscard]] long degree() const;
  [[nodiscard]] long low_degree() const;
  [[nodiscard]] Rational coeff(long exponent) const;

  /// Exact evaluation. Throws std::domain_error("pole at zero") for x = 0
  /// when negative exponents are present.
  [[nodiscard]] Rational eval(const Rational& x) const;

  /// f(w^r).
  [[nodiscard]] LaurentPoly compose_power(long r) const;
  /// w^k f(w).
  [[nodiscard]] LaurentPoly shifted(long k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(long s, LaurentPoly a) { return a *= Rational(s); }
  friend LaurentPoly operator*(LaurentPoly a, long s) { return a *= Rational(s); }
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  void add_term(long exponent, const Rational& coefficient);

  Terms terms_;
};

LaurentPoly pow(const LaurentPoly& f, unsigned n);

class NotDivisible : public std::domain_error {
 public:
  NotDivisible() : std::domain_error("not divisible") {}
};

/// Quotient h with g*h == f in Q[w, 1/w]; throws NotDivisible otherwise.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);

std::string to_string(const LaurentPoly& f, std::string_view variable = "w");

/// Index -> rational sequence (z_i)_{i >= 1}, evaluated lazily and memoized.
/// Copies share the cache; concurrent access is safe.
class ZSequence {
 public:
  using Generator = std::function<Rational(long)>;

  explicit ZSequence(Generator generator);

  /// z_i, i >= 1.
  [[nodiscard]] Rational operator()(long i) const;

  /// z_i = q^(i-1).
  static ZSequence geometric(const Rational& q);
  /// z_i = q^((-1)^i floor(i/2)), i.e. exponents 0, 1, -1, 2, -2, ...
  static ZSequence alternating(const Rational& q);
  /// z_i = values[i-1]; indices past the end throw std::out_of_range.
  static ZSequence from_values(std::vector<Rational> values);

 private:
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// (-1)^i floor(i/2).
long alternating_exponent(long i);

/// prod_{i=1}^n (X - z_i).
LaurentPoly theta(long n, const ZSequence& z);
/// Same product evaluated at a point, without expanding.
Rational theta_at(long n, const ZSequence& z, const Rational& x);
/// theta(n, (q^{(-1)^i floor(i/2)})).
LaurentPoly big_theta(long n, const Rational& q);

}  // namespace regcoal
