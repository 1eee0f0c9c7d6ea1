#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace regcoal {

namespace mp = boost::multiprecision;

// Expression templates are disabled so the types behave as plain values
// inside Eigen kernels.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

/// p-adic valuation of a nonzero integer. Throws std::domain_error on zero.
long nu(long p, const Integer& x);

/// p-adic valuation of a nonzero rational: nu(numerator) - nu(denominator).
long nu(long p, const Rational& x);

/// True iff p does not divide the reduced denominator.
bool is_p_local_integer(long p, const Rational& x);

/// True iff x is nonzero with nu(p, x) == 0.
bool is_p_local_unit(long p, const Rational& x);

bool is_prime(long n);

/// Order of a in (Z/modulus)^x. Throws std::invalid_argument unless gcd(a, modulus) == 1.
long multiplicative_order(const Integer& a, const Integer& modulus);

/// True iff q generates (Z/p^2)^x. Undefined for p == 2.
bool check_primitive_root(long p, long q);

/// Least positive q that is primitive mod p^2 (odd p).
long least_primitive_root(long p);

/// Residue of a p-local rational modulo `modulus` (a power of p), in [0, modulus).
Integer residue(const Rational& x, const Integer& modulus);

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational power(const Rational& base, long exponent);
Integer power(const Integer& base, unsigned long exponent);

/// Canonical exact rendering: "n" for integers, "num/den" otherwise.
std::string to_string(const Rational& x);

/// Parses "n", "-n", "num/den". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Ground ring R: Z when `prime` is empty, otherwise the p-local integers.
struct GroundRing {
  std::optional<long> prime;

  [[nodiscard]] bool contains(const Rational& x) const;
  [[nodiscard]] bool is_unit(const Rational& x) const;
  /// Largest e with p^e | x (x in R); for R = Z this is not meaningful and
  /// the function throws std::logic_error.
  [[nodiscard]] long valuation(const Rational& x) const;
  [[nodiscard]] std::string name() const;
};

/// A rational number carried together with a distinguished prime.
class PAdicRational {
 public:
  PAdicRational(Rational value, long prime);

  [[nodiscard]] const Rational& value() const { return value_; }
  [[nodiscard]] long prime() const { return prime_; }

  [[nodiscard]] long valuation() const { return nu(prime_, value_); }
  [[nodiscard]] bool is_integral() const { return is_p_local_integer(prime_, value_); }
  [[nodiscard]] bool is_unit() const { return is_p_local_unit(prime_, value_); }

  friend PAdicRational operator+(const PAdicRational& a, const PAdicRational& b);
  friend PAdicRational operator-(const PAdicRational& a, const PAdicRational& b);
  friend PAdicRational operator*(const PAdicRational& a, const PAdicRational& b);
  friend PAdicRational operator/(const PAdicRational& a, const PAdicRational& b);
  friend bool operator==(const PAdicRational& a, const PAdicRational& b) = default;

 private:
  Rational value_;
  long prime_;
};

}  // namespace regcoal
