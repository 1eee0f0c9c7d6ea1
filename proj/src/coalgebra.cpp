#include "regcoal/coalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace regcoal {

long slot_exponent(bool periodic, long slot) {
  if (slot < 0) throw std::out_of_range("negative slot");
  if (!periodic) return slot;
  return slot % 2 == 1 ? (slot + 1) / 2 : -(slot / 2);
}

long slot_of_exponent(bool periodic, long k) {
  if (!periodic) {
    if (k < 0) throw std::domain_error("negative exponent in a connective coalgebra");
    return k;
  }
  return k > 0 ? 2 * k - 1 : -2 * k;
}

CoalgebraSpec::CoalgebraSpec(std::string name, GroundRing ring, long step, bool periodic, Generator basis)
    : name_(std::move(name)), ring_(ring), step_(step), periodic_(periodic), basis_(std::move(basis)) {
  if (step_ < 1) throw std::invalid_argument("coalgebra step r must be positive");
  if (ring_.prime && !is_prime(*ring_.prime)) throw std::invalid_argument("ground ring prime is not prime");
}

long CoalgebraSpec::slot_of_w_exponent(long e) const {
  if (e % step_ != 0) throw std::domain_error("exponent " + std::to_string(e) + " not a multiple of the step");
  return slot_of_exponent(periodic_, e / step_);
}

MonomialCoords normalize_coords(const std::vector<Rational>& slot_coefficients) {
  Integer lcm = 1;
  for (const auto& c : slot_coefficients)
    if (c != 0) lcm = mp::lcm(lcm, mp::denominator(c));
  std::vector<Integer> scaled;
  scaled.reserve(slot_coefficients.size());
  Integer g = lcm;
  for (const auto& c : slot_coefficients) {
    Rational s = c * lcm;
    scaled.push_back(mp::numerator(s));
    g = mp::gcd(g, scaled.back());
  }
  MonomialCoords out{lcm / g, {}};
  out.lambda.reserve(scaled.size());
  for (auto& a : scaled) out.lambda.push_back(a / g);
  return out;
}

CoeffTables::CoeffTables(CoalgebraSpec spec) : spec_(std::move(spec)) {}

void CoeffTables::fill_basis(long n) const {
  while (static_cast<long>(basis_.size()) <= n) {
    const long index = static_cast<long>(basis_.size());
    LaurentPoly c = spec_.basis(index);
    if (index == 0 && c != LaurentPoly(1)) throw RegularityError("c_0 must be 1");
    std::vector<Rational> slots(static_cast<std::size_t>(index + 1), Rational(0));
    for (const auto& [e, coefficient] : c.terms()) {
      long slot = 0;
      try {
        slot = spec_.slot_of_w_exponent(e);
      } catch (const std::domain_error&) {
        throw RegularityError("c_" + std::to_string(index) + " has exponent " + std::to_string(e) +
                              " outside the monomial lattice");
      }
      if (slot > index)
        throw RegularityError("c_" + std::to_string(index) + " has exponent " + std::to_string(e) +
                              " outside its window");
      slots[static_cast<std::size_t>(slot)] = coefficient;
    }
    if (slots.back() == 0)
      throw RegularityError("c_" + std::to_string(index) + " does not reach exponent " +
                            std::to_string(spec_.w_exponent(index)));
    coords_.push_back(normalize_coords(slots));
    basis_.push_back(std::move(c));
  }
}

void CoeffTables::fill_lambda(long k) const {
  fill_basis(k);
  while (static_cast<long>(lambda_.size()) <= k) {
    const long index = static_cast<long>(lambda_.size());
    const auto& coords = coords_[static_cast<std::size_t>(index)];
    const Rational pivot(coords.lambda.back());
    if (pivot == 0) throw std::domain_error("basis is not a basis");
    // w_k = (D_k/lambda_k) c_k - sum_{s<k} (lambda_s/lambda_k) w_s
    VectorQ row = VectorQ::Zero(index + 1);
    row(index) = Rational(coords.denominator) / pivot;
    for (long s = 0; s < index; ++s) {
      const Integer& ls = coords.lambda[static_cast<std::size_t>(s)];
      if (ls == 0) continue;
      row.head(s + 1) -= (Rational(ls) / pivot) * lambda_[static_cast<std::size_t>(s)];
    }
    lambda_.push_back(std::move(row));
  }
}

void CoeffTables::fill_gamma(long n) const {
  fill_lambda(n);
  while (static_cast<long>(gamma_.size()) <= n) {
    const long index = static_cast<long>(gamma_.size());
    const auto& coords = coords_[static_cast<std::size_t>(index)];
    MatrixQ g = MatrixQ::Zero(index + 1, index + 1);
    for (long k = 0; k <= index; ++k) {
      const Integer& lk = coords.lambda[static_cast<std::size_t>(k)];
      if (lk == 0) continue;
      const VectorQ& col = lambda_[static_cast<std::size_t>(k)];
      g.topLeftCorner(k + 1, k + 1) += (Rational(lk) / Rational(coords.denominator)) * (col * col.transpose());
    }
    gamma_.push_back(std::move(g));
  }
}

const LaurentPoly& CoeffTables::basis(long n) const {
  if (n < 0) throw std::out_of_range("negative basis index");
  std::lock_guard lock(mutex_);
  fill_basis(n);
  return basis_[static_cast<std::size_t>(n)];
}

const MonomialCoords& CoeffTables::monomial_coords(long n) const {
  if (n < 0) throw std::out_of_range("negative basis index");
  std::lock_guard lock(mutex_);
  fill_basis(n);
  return coords_[static_cast<std::size_t>(n)];
}

const VectorQ& CoeffTables::lambda_coords(long k) const {
  if (k < 0) throw std::out_of_range("negative slot");
  std::lock_guard lock(mutex_);
  fill_lambda(k);
  return lambda_[static_cast<std::size_t>(k)];
}

const MatrixQ& CoeffTables::gamma(long n) const {
  if (n < 0) throw std::out_of_range("negative basis index");
  std::lock_guard lock(mutex_);
  fill_gamma(n);
  return gamma_[static_cast<std::size_t>(n)];
}

VectorQ basis_coordinates(const LaurentPoly& f, const CoeffTables& tables) {
  long top = 0;
  for (const auto& [e, c] : f.terms()) top = std::max(top, tables.spec().slot_of_w_exponent(e));
  VectorQ out = VectorQ::Zero(top + 1);
  for (const auto& [e, c] : f.terms()) {
    const long slot = tables.spec().slot_of_w_exponent(e);
    out.head(slot + 1) += c * tables.lambda_coords(slot);
  }
  return out;
}

std::optional<long> first_nonintegral(const VectorQ& v, const GroundRing& ring) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!ring.contains(v(i))) return static_cast<long>(i);
  return std::nullopt;
}

MatrixQ gamma_oracle(const CoalgebraSpec& spec, long n) {
  MatrixQ m = MatrixQ::Zero(n + 1, n + 1);
  for (long i = 0; i <= n; ++i) {
    const LaurentPoly c_i = spec.basis(i);
    for (const auto& [e, c] : c_i.terms()) {
      const long slot = spec.slot_of_w_exponent(e);
      if (slot > n) throw RegularityError("basis polynomial leaves the oracle window");
      m(i, slot) = c;
    }
  }
  MatrixQ t = MatrixQ::Zero(n + 1, n + 1);
  for (long s = 0; s <= n; ++s) t(s, s) = m(n, s);
  // Gamma = M^{-T} T M^{-1}
  const MatrixQ mt = m.transpose();
  auto lu = mt.fullPivLu();
  if (!lu.isInvertible()) throw std::domain_error("basis is not a basis");
  const MatrixQ x = lu.solve(t);
  return lu.solve(MatrixQ(x.transpose())).transpose();
}

bool RegularityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const RegularityCheck& RegularityReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no regularity check named " + name);
}

RegularityReport verify_regularity(const CoeffTables& tables, long bound) {
  RegularityReport report{tables.spec().name(), bound, {}};
  const auto& ring = tables.ring();
  RegularityCheck shape{"shape", true, {}}, lambda_int{"lambda_integrality", true, {}}, gamma_int{"gamma_integrality", true, {}},
      diagonal{"diagonal_identity", true, {}}, transfer{"gamma_lambda_identity", true, {}}, counit{"counit", true, {}};
  auto fail = [](RegularityCheck& check, const std::string& where) {
    if (!check.passed) return;
    check.passed = false;
    check.counterexample = where;
  };

  long valid = -1;
  for (long n = 0; n <= bound; ++n) {
    try {
      (void)tables.basis(n);
      valid = n;
    } catch (const RegularityError& e) {
      fail(shape, "n=" + std::to_string(n) + ": " + e.what());
      break;
    }
  }

  std::vector<Rational> eps;
  for (long n = 0; n <= valid; ++n) eps.push_back(tables.counit(n));

  for (long n = 0; n <= valid; ++n) {
    const VectorQ& big_lambda = tables.lambda_coords(n);
    if (auto bad = first_nonintegral(big_lambda, ring))
      fail(lambda_int, "k=" + std::to_string(n) + ", n=" + std::to_string(*bad) + ": Lambda=" +
                           to_string(big_lambda(*bad)));

    const auto& coords = tables.monomial_coords(n);
    if (big_lambda(n) * Rational(coords.lambda.back()) != Rational(coords.denominator))
      fail(diagonal, "i=" + std::to_string(n));

    const MatrixQ& g = tables.gamma(n);
    for (long i = 0; i <= n && gamma_int.passed; ++i)
      for (long j = 0; j <= n; ++j)
        if (!ring.contains(g(i, j))) {
          fail(gamma_int, "n=" + std::to_string(n) + ", (i,j)=(" + std::to_string(i) + "," + std::to_string(j) +
                              "): Gamma=" + to_string(g(i, j)));
          break;
        }

    for (long k = 0; k <= n; ++k)
      if (g(k, n) != big_lambda(k))
        fail(transfer, "Gamma_{" + std::to_string(k) + "," + std::to_string(n) + "}^" + std::to_string(n));

    for (long j = 0; j <= n; ++j) {
      Rational left = 0, right = 0;
      for (long i = 0; i <= n; ++i) {
        left += eps[static_cast<std::size_t>(i)] * g(i, j);
        right += eps[static_cast<std::size_t>(i)] * g(j, i);
      }
      const Rational expected = j == n ? 1 : 0;
      if (left != expected || right != expected)
        fail(counit, "n=" + std::to_string(n) + ", j=" + std::to_string(j));
    }
  }
  report.checks = {shape, lambda_int, gamma_int, diagonal, transfer, counit};
  return report;
}

CoalgebraSpec binomial_coalgebra(std::optional<long> prime) {
  return CoalgebraSpec("binomial", GroundRing{prime}, 1, false, [](long n) {
    LaurentPoly c = 1;
    for (long i = 0; i < n; ++i) c *= LaurentPoly::variable() - LaurentPoly(i);
    Rational factorial = 1;
    for (long i = 2; i <= n; ++i) factorial *= i;
    return c * (Rational(1) / factorial);
  });
}

}  // namespace regcoal
