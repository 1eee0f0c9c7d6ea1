#include "regcoal/spectra.hpp"

#include <limits>
#include <regex>
#include <stdexcept>

namespace regcoal {

namespace {

long checked_power(long base, long exponent) {
  long out = 1;
  for (long i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<long>::max() / base) throw std::overflow_error("N_l divisor overflows");
    out *= base;
  }
  return out;
}

/// theta_n(w^r; Q) / theta_n(Q^n; Q)
LaurentPoly theta_basis(long n, long r, const Rational& q_base) {
  const ZSequence z = ZSequence::geometric(q_base);
  return theta(n, z).compose_power(r) * (Rational(1) / theta_at(n, z, power(q_base, n)));
}

/// Q^{n floor(n/2)} w^{-floor(n/2) r} c_n: the unit rescaling makes
/// Theta_n(Psi^beta; Q) exactly dual to this basis.
LaurentPoly periodic_theta_basis(long n, long r, const Rational& q_base) {
  return theta_basis(n, r, q_base).shifted(-(n / 2) * r) * power(q_base, n * (n / 2));
}

}  // namespace

LaurentPoly ko2_basis(long n) { return theta_basis(n, 2, 9); }

LaurentPoly k2_basis(long n) {
  const long m = n / 2;
  const LaurentPoly h = ko2_basis(m);
  if (n % 2 == 0) return h;
  const Rational three_m = power(Rational(3), m);
  return (LaurentPoly(three_m) - LaurentPoly::variable()) * h * (Rational(1) / (2 * three_m));
}

bool is_two_local(Family family) {
  return family == Family::KO2 || family == Family::ko2 || family == Family::K2 || family == Family::k2;
}

std::string family_name(Family family, long prime) {
  switch (family) {
    case Family::K_p: return "K(" + std::to_string(prime) + ")";
    case Family::k_p: return "k(" + std::to_string(prime) + ")";
    case Family::G: return "G(" + std::to_string(prime) + ")";
    case Family::g: return "g(" + std::to_string(prime) + ")";
    case Family::KO2: return "KO(2)";
    case Family::ko2: return "ko(2)";
    case Family::K2: return "K(2)";
    case Family::k2: return "k(2)";
  }
  throw std::logic_error("unknown family");
}

std::string SpectrumSpec::name() const { return family_name(family, prime); }

SpectrumSpec make_spectrum(Family family, long prime, std::optional<long> q) {
  SpectrumSpec spec{family, prime, 0, 0, 1, false, std::nullopt, nullptr};
  CoalgebraSpec::Generator generator;

  if (is_two_local(family)) {
    if (prime != 2) throw std::invalid_argument(family_name(family, 2) + " is 2-local; got p = " + std::to_string(prime));
    if (q && *q != 3) throw std::invalid_argument("the 2-local spectra use beta = 3");
    spec.beta = 3;
    spec.theta_base = 9;
    switch (family) {
      case Family::ko2:
        spec.step = 2;
        spec.z = ZSequence::geometric(9);
        generator = [](long n) { return ko2_basis(n); };
        break;
      case Family::KO2:
        spec.step = 2;
        spec.periodic = true;
        spec.z = ZSequence::alternating(9);
        generator = [](long n) { return periodic_theta_basis(n, 2, 9); };
        break;
      case Family::k2:
        generator = [](long n) { return k2_basis(n); };
        break;
      default:  // K2
        spec.periodic = true;
        generator = [](long n) {
          // Unit rescaling so that Delta(F_{m+n}) has coefficient exactly 1 on F_m (x) F_n for even m.
          const long h = n / 2;
          const Rational unit = power(Rational(3), h * h) * ((h * (n % 2)) % 2 ? -1 : 1);
          return k2_basis(n).shifted(-h) * unit;
        };
        break;
    }
  } else {
    if (prime == 2 && (family == Family::K_p || family == Family::k_p))
      return make_spectrum(family == Family::K_p ? Family::K2 : Family::k2, 2, q);
    if (prime < 3 || !is_prime(prime))
      throw std::invalid_argument(family_name(family, prime) + " needs an odd prime, got " + std::to_string(prime));
    const long chosen = q.value_or(least_primitive_root(prime));
    if (chosen % prime == 0 || !check_primitive_root(prime, chosen))
      throw std::invalid_argument("q = " + std::to_string(chosen) + " is not primitive mod " +
                                  std::to_string(prime * prime));
    spec.beta = chosen;
    const bool adams_summand = family == Family::G || family == Family::g;
    spec.step = adams_summand ? prime - 1 : 1;
    spec.theta_base = power(Rational(chosen), spec.step);
    spec.periodic = family == Family::K_p || family == Family::G;
    spec.z = spec.periodic ? ZSequence::alternating(spec.theta_base) : ZSequence::geometric(spec.theta_base);
    const long r = spec.step;
    const Rational base = spec.theta_base;
    if (spec.periodic)
      generator = [r, base](long n) { return periodic_theta_basis(n, r, base); };
    else
      generator = [r, base](long n) { return theta_basis(n, r, base); };
  }

  spec.tables = std::make_shared<const CoeffTables>(
      CoalgebraSpec(spec.name(), GroundRing{prime}, spec.step, spec.periodic, std::move(generator)));
  return spec;
}

SpectrumSpec make_spectrum(std::string_view name, std::optional<long> prime, std::optional<long> q) {
  static const std::regex pattern(R"(^(K|k|KO|ko|G|g)(?:\((\d+)\))?$)");
  std::match_results<std::string_view::const_iterator> match;
  if (!std::regex_match(name.begin(), name.end(), match, pattern))
    throw std::invalid_argument("unknown spectrum name: " + std::string(name));
  const std::string head = match[1].str();
  std::optional<long> given;
  if (match[2].matched) given = std::stol(match[2].str());
  if (given && prime && *given != *prime)
    throw std::invalid_argument("prime in name and --p disagree");
  const long p = given.value_or(prime.value_or(head == "KO" || head == "ko" ? 2 : 3));
  if ((head == "K" || head == "k") && !given && !prime)
    throw std::invalid_argument("spectrum name needs a prime, e.g. \"" + head + "(3)\"");
  Family family;
  if (head == "K") family = p == 2 ? Family::K2 : Family::K_p;
  else if (head == "k") family = p == 2 ? Family::k2 : Family::k_p;
  else if (head == "KO") family = Family::KO2;
  else if (head == "ko") family = Family::ko2;
  else if (head == "G") family = Family::G;
  else family = Family::g;
  return make_spectrum(family, p, q);
}

AdamsPoly dual_theta_basis(const SpectrumSpec& spec, long n) {
  if (!spec.theta_form())
    throw std::domain_error("no theta-form dual basis for " + spec.name() + "; use coalgebra-side checks");
  return {Rational(spec.beta), theta(n, *spec.z)};
}

IndexSet::IndexSet(long minimum, long divisor) : minimum_(minimum), divisor_(divisor) {
  if (divisor_ < 1) throw std::invalid_argument("divisor must be positive");
}

long IndexSet::next_after(long n) const {
  long candidate = std::max(n + 1, minimum_);
  const long rem = candidate % divisor_;
  if (rem != 0) candidate += divisor_ - rem;
  return candidate;
}

std::vector<long> IndexSet::first(long count) const {
  std::vector<long> out;
  long n = minimum_ - 1;
  for (long i = 0; i < count; ++i) out.push_back(n = next_after(n));
  return out;
}

IndexSet n_l(const SpectrumSpec& spec, long l) {
  if (l < 1) throw std::invalid_argument("l must be positive");
  const long p = spec.prime;
  switch (spec.family) {
    case Family::K_p: return {p - 1, 2 * checked_power(p, l - 1) * (p - 1)};
    case Family::k_p: return {p - 1, checked_power(p, l - 1) * (p - 1)};
    case Family::G: return {1, 2 * checked_power(p, l - 1)};
    case Family::g: return {1, checked_power(p, l - 1)};
    case Family::KO2: return {1, l <= 2 ? 2 : checked_power(2, l - 2)};
    case Family::K2: return {1, l <= 2 ? 4 : checked_power(2, l - 1)};
    case Family::ko2: return {1, l <= 2 ? 1 : checked_power(2, l - 3)};
    case Family::k2: return {1, l <= 2 ? 2 : checked_power(2, l - 2)};
  }
  throw std::logic_error("unknown family");
}

}  // namespace regcoal
