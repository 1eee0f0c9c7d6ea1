#include "regcoal/exact.hpp"

#include <cctype>
#include <stdexcept>

#include <gmp.h>

namespace regcoal {

namespace {

long remove_factor(long p, const Integer& x) {
  if (x == 0) throw std::domain_error("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation needs a prime p >= 2");
  mpz_t rest, prime;
  mpz_init(rest);
  mpz_init_set_si(prime, p);
  const long count = static_cast<long>(mpz_remove(rest, x.backend().data(), prime));
  mpz_clear(rest);
  mpz_clear(prime);
  return count;
}

void check_same_prime(const PAdicRational& a, const PAdicRational& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("mixed primes in PAdicRational arithmetic");
}

}  // namespace

long nu(long p, const Integer& x) { return remove_factor(p, x); }

long nu(long p, const Rational& x) {
  if (x == 0) throw std::domain_error("valuation of zero");
  return remove_factor(p, mp::numerator(x)) - remove_factor(p, mp::denominator(x));
}

bool is_p_local_integer(long p, const Rational& x) { return mp::denominator(x) % p != 0; }

bool is_p_local_unit(long p, const Rational& x) { return x != 0 && nu(p, x) == 0; }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long multiplicative_order(const Integer& a, const Integer& modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  Integer base = a % modulus;
  if (base < 0) base += modulus;
  if (mp::gcd(base, modulus) != 1) throw std::invalid_argument("element is not invertible modulo n");
  if (modulus == 1) return 1;
  Integer x = base;
  long order = 1;
  while (x != 1) {
    x = (x * base) % modulus;
    ++order;
  }
  return order;
}

bool check_primitive_root(long p, long q) {
  if (p == 2) throw std::invalid_argument("primitive root mod p^2 undefined for p = 2");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (q % p == 0) throw std::invalid_argument("q must not be divisible by p");
  const Integer p2 = Integer(p) * p;
  return multiplicative_order(Integer(q), p2) == p * (p - 1);
}

long least_primitive_root(long p) {
  for (long q = 2;; ++q)
    if (q % p != 0 && check_primitive_root(p, q)) return q;
}

Integer residue(const Rational& x, const Integer& modulus) {
  Integer den = mp::denominator(x) % modulus;
  Integer inverse;
  if (mpz_invert(inverse.backend().data(), den.backend().data(), modulus.backend().data()) == 0) {
    if (modulus == 1) return 0;
    throw std::domain_error("residue of a non-local rational");
  }
  Integer r = (mp::numerator(x) % modulus) * inverse % modulus;
  if (r < 0) r += modulus;
  return r;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.backend().data(), base.backend().data(), exponent);
  return out;
}

Rational power(const Rational& base, long exponent) {
  if (exponent >= 0) {
    return Rational(power(mp::numerator(base), static_cast<unsigned long>(exponent)),
                    power(mp::denominator(base), static_cast<unsigned long>(exponent)));
  }
  if (base == 0) throw std::domain_error("negative power of zero");
  const auto e = static_cast<unsigned long>(-exponent);
  return Rational(power(mp::denominator(base), e), power(mp::numerator(base), e));
}

std::string to_string(const Rational& x) { return x.str(); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer literal");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational: " + std::string(s));
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

bool GroundRing::contains(const Rational& x) const {
  return prime ? is_p_local_integer(*prime, x) : mp::denominator(x) == 1;
}

bool GroundRing::is_unit(const Rational& x) const {
  return prime ? is_p_local_unit(*prime, x) : (x == 1 || x == -1);
}

long GroundRing::valuation(const Rational& x) const {
  if (!prime) throw std::logic_error("valuation needs a prime ground ring");
  return nu(*prime, x);
}

std::string GroundRing::name() const { return prime ? "Z_(" + std::to_string(*prime) + ")" : "Z"; }

PAdicRational::PAdicRational(Rational value, long prime) : value_(std::move(value)), prime_(prime) {
  if (!is_prime(prime)) throw std::invalid_argument("PAdicRational needs a prime");
}

PAdicRational operator+(const PAdicRational& a, const PAdicRational& b) {
  check_same_prime(a, b);
  return {a.value_ + b.value_, a.prime_};
}
PAdicRational operator-(const PAdicRational& a, const PAdicRational& b) {
  check_same_prime(a, b);
  return {a.value_ - b.value_, a.prime_};
}
PAdicRational operator*(const PAdicRational& a, const PAdicRational& b) {
  check_same_prime(a, b);
  return {a.value_ * b.value_, a.prime_};
}
PAdicRational operator/(const PAdicRational& a, const PAdicRational& b) {
  check_same_prime(a, b);
  if (b.value_ == 0) throw std::domain_error("division by zero");
  return {a.value_ / b.value_, a.prime_};
}

}  // namespace regcoal
