#include "regcoal/laurent.hpp"

#include <deque>
#include <mutex>
#include <sstream>

namespace regcoal {

LaurentPoly::LaurentPoly(const Rational& constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(long exponent, const Rational& coefficient) {
  LaurentPoly f;
  f.add_term(exponent, coefficient);
  return f;
}

void LaurentPoly::add_term(long exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

long LaurentPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.rbegin()->first;
}

long LaurentPoly::low_degree() const {
  if (terms_.empty()) throw std::domain_error("low degree of zero polynomial");
  return terms_.begin()->first;
}

Rational LaurentPoly::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (terms_.empty()) return 0;
  if (x == 0) {
    if (low_degree() < 0) throw std::domain_error("pole at zero");
    return coeff(0);
  }
  // Horner from the top exponent down, then rescale by x^low.
  const long low = low_degree();
  Rational acc = 0;
  long current = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= power(x, current - it->first);
    acc += it->second;
    current = it->first;
  }
  return acc * power(x, low);
}

LaurentPoly LaurentPoly::compose_power(long r) const {
  if (r == 0) throw std::invalid_argument("compose_power needs r != 0");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e * r, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }

LaurentPoly pow(const LaurentPoly& f, unsigned n) {
  LaurentPoly out = 1;
  for (unsigned i = 0; i < n; ++i) out *= f;
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.is_zero()) return {};
  // Normalize both to polynomials with nonzero constant term, then long division.
  const long shift = f.low_degree() - g.low_degree();
  LaurentPoly rem = f.shifted(-f.low_degree());
  const LaurentPoly divisor = g.shifted(-g.low_degree());
  const long dg = divisor.degree();
  const Rational lead = divisor.coeff(dg);
  LaurentPoly quotient;
  while (!rem.is_zero() && rem.degree() >= dg) {
    const long e = rem.degree() - dg;
    const Rational c = rem.coeff(rem.degree()) / lead;
    quotient += LaurentPoly::monomial(e, c);
    rem -= divisor.shifted(e) * c;
  }
  if (!rem.is_zero()) throw NotDivisible();
  return quotient.shifted(shift);
}

std::string to_string(const LaurentPoly& f, std::string_view variable) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational magnitude = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (e == 0) {
      out << to_string(magnitude);
      continue;
    }
    if (!unit) out << to_string(magnitude) << "*";
    out << variable;
    if (e != 1) out << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return out.str();
}

struct ZSequence::Cache {
  Generator generator;
  mutable std::mutex mutex;
  std::deque<Rational> values;  // values[i-1] = z_i
};

ZSequence::ZSequence(Generator generator) : cache_(std::make_shared<Cache>()) {
  cache_->generator = std::move(generator);
}

Rational ZSequence::operator()(long i) const {
  if (i < 1) throw std::out_of_range("z-sequence index starts at 1");
  std::lock_guard lock(cache_->mutex);
  while (static_cast<long>(cache_->values.size()) < i)
    cache_->values.push_back(cache_->generator(static_cast<long>(cache_->values.size()) + 1));
  return cache_->values[static_cast<std::size_t>(i - 1)];
}

ZSequence ZSequence::geometric(const Rational& q) {
  return ZSequence([q](long i) { return power(q, i - 1); });
}

ZSequence ZSequence::alternating(const Rational& q) {
  return ZSequence([q](long i) { return power(q, alternating_exponent(i)); });
}

ZSequence ZSequence::from_values(std::vector<Rational> values) {
  return ZSequence([values = std::move(values)](long i) {
    if (i > static_cast<long>(values.size())) throw std::out_of_range("z-sequence too short");
    return values[static_cast<std::size_t>(i - 1)];
  });
}

long alternating_exponent(long i) { return (i % 2 == 0 ? 1 : -1) * (i / 2); }

LaurentPoly theta(long n, const ZSequence& z) {
  LaurentPoly out = 1;
  const LaurentPoly x = LaurentPoly::variable();
  for (long i = 1; i <= n; ++i) out *= x - LaurentPoly(z(i));
  return out;
}

Rational theta_at(long n, const ZSequence& z, const Rational& x) {
  Rational out = 1;
  for (long i = 1; i <= n; ++i) {
    const Rational factor = x - z(i);
    if (factor == 0) return 0;
    out *= factor;
  }
  return out;
}

LaurentPoly big_theta(long n, const Rational& q) { return theta(n, ZSequence::alternating(q)); }

}  // namespace regcoal
