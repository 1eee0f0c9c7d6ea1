#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regcoal/coalgebra.hpp"
#include "regcoal/dual.hpp"
#include "regcoal/laurent.hpp"

namespace regcoal {

/// The eight K-theory examples.
enum class Family { K_p, k_p, G, g, KO2, ko2, K2, k2 };

/// One spectrum: ground prime, Adams index beta, step r, the coalgebra of
/// degree zero cooperations and (when available) the theta-form dual basis.
struct SpectrumSpec {
  Family family;
  long prime;
  /// Adams index beta (q for the odd-prime families, 3 at p = 2).
  long beta;
  /// Q in theta_n(X; Q): q, q^(p-1) or 9. Equals beta^step.
  Rational theta_base;
  long step;
  bool periodic;
  /// z-sequence of the theta-form topological basis; empty for K(2), k(2).
  std::optional<ZSequence> z;
  std::shared_ptr<const CoeffTables> tables;

  [[nodiscard]] bool theta_form() const { return z.has_value(); }
  [[nodiscard]] const CoalgebraSpec& coalgebra() const { return tables->spec(); }
  /// Canonical name: "K(3)", "k(5)", "G(3)", "g(5)", "KO(2)", "ko(2)", "K(2)", "k(2)".
  [[nodiscard]] std::string name() const;
};

std::string family_name(Family family, long prime);
bool is_two_local(Family family);

/// Validates the prime/q combination and builds the spectrum. For odd-prime
/// families q defaults to the least primitive root mod p^2.
/// Throws std::invalid_argument on a bad name/prime/q combination.
SpectrumSpec make_spectrum(Family family, long prime, std::optional<long> q = std::nullopt);

/// Parses a canonical name ("k(3)", "KO(2)", "G", ...). For "G"/"g" the
/// prime comes from `prime` (default 3); "G(5)" is also accepted.
SpectrumSpec make_spectrum(std::string_view name, std::optional<long> prime = std::nullopt,
                           std::optional<long> q = std::nullopt);

/// theta_n(Psi^beta; (z_i)) -- dual to the coalgebra basis.
/// Throws std::domain_error for K(2), k(2).
AdamsPoly dual_theta_basis(const SpectrumSpec& spec, long n);

/// f^{(2)}_n, the basis of K_0(k)_(2).
LaurentPoly k2_basis(long n);
/// h_n = theta_n(w^2; 9) / theta_n(9^n; 9).
LaurentPoly ko2_basis(long n);

/// {n >= minimum : divisor | n}, enumerated in increasing order.
class IndexSet {
 public:
  IndexSet(long minimum, long divisor);

  [[nodiscard]] long minimum() const { return minimum_; }
  [[nodiscard]] long divisor() const { return divisor_; }
  [[nodiscard]] bool contains(long n) const { return n >= minimum_ && n % divisor_ == 0; }
  /// Least element strictly greater than n.
  [[nodiscard]] long next_after(long n) const;
  [[nodiscard]] std::vector<long> first(long count) const;

 private:
  long minimum_;
  long divisor_;
};

/// The index set N_l for the given spectrum and l >= 1.
/// K(2) and k(2) use twice the KO(2) and ko(2) divisors: their index 2m carries the real index m.
IndexSet n_l(const SpectrumSpec& spec, long l);

}  // namespace regcoal
