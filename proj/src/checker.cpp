#include "regcoal/checker.hpp"

#include <algorithm>
#include <stdexcept>

namespace regcoal {

namespace {

/// min(current, v) where an empty optional stands for +infinity.
void lower(std::optional<long>& current, long v) {
  if (!current || v < *current) current = v;
}

CheckResult coalgebra_unit(const StructureConstants& sc, long m, long n, long bound) {
  CheckResult out{"lambda_divisibility", Verdict::HoldsUpToBound, std::nullopt, std::nullopt, bound, {}};
  const long d = n - m;
  for (long j = d; j <= bound; ++j) {
    const Rational value = sc.lambda(j)(d);
    if (value == 0) continue;
    const long v = nu(sc.prime, value);
    lower(out.min_valuation, v);
    if (v < 1 && !out.witness) {
      out.verdict = Verdict::Fails;
      out.witness = j;
      out.detail = "Lambda_" + std::to_string(d) + "^" + std::to_string(j) + " = " + to_string(value);
    }
  }
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::HoldsUpToBound: return "holds_up_to_bound";
    case Verdict::Fails: return "fails";
  }
  return "?";
}

StructureConstants StructureConstants::of(const CoeffTables& tables) {
  if (!tables.ring().prime) throw std::domain_error("coalgebra conditions need a prime ground ring");
  return {*tables.ring().prime, [&tables](long k) { return tables.lambda_coords(k); },
          [&tables](long n) { return tables.gamma(n); }};
}

bool CoalgebraConditions::holds() const {
  return gamma_congruence.holds() && (!lambda_divisibility || lambda_divisibility->holds());
}

CoalgebraConditions check_coalgebra_conditions(const StructureConstants& sc, long m, long n, long l, long bound) {
  if (m < 0 || n < 0) throw std::invalid_argument("indices must be non-negative");
  if (bound < m + n) throw std::invalid_argument("bound must be at least m + n");
  CoalgebraConditions out{std::nullopt, {"gamma_congruence", Verdict::HoldsUpToBound, std::nullopt, std::nullopt, bound, {}}};
  if (m < n) out.lambda_divisibility = coalgebra_unit(sc, m, n, bound);

  auto& gc = out.gamma_congruence;
  auto fail = [&gc](long i, const std::string& why) {
    if (gc.witness) return;
    gc.verdict = Verdict::Fails;
    gc.witness = i;
    gc.detail = why;
  };
  for (long i = std::max(m, n); i <= bound; ++i) {
    const Rational value = sc.gamma(i)(m, n);
    const std::string cell = "Gamma_{" + std::to_string(m) + "," + std::to_string(n) + "}^" + std::to_string(i) +
                             " = " + to_string(value);
    if (i == m + n) {
      if (value != 1) fail(i, cell);
      continue;
    }
    if (value == 0) continue;
    const long v = nu(sc.prime, value);
    lower(gc.min_valuation, v);
    if (v < l) fail(i, cell);
  }
  return out;
}

CoalgebraConditions check_coalgebra_conditions(const SpectrumSpec& spec, long m, long n, long l, long bound) {
  return check_coalgebra_conditions(StructureConstants::of(*spec.tables), m, n, l, bound);
}

CheckResult check_unit_condition(const SpectrumSpec& spec, long m, long n, long bound) {
  if (m < 0 || m >= n) throw std::invalid_argument("unit condition needs 0 <= m < n");
  if (!spec.theta_form()) return coalgebra_unit(StructureConstants::of(*spec.tables), m, n, std::max(bound, n - m));

  const long p = spec.prime;
  const long d = n - m;
  const Integer beta_r = power(Integer(spec.beta), static_cast<unsigned long>(spec.step));
  const long period = multiplicative_order(beta_r, Integer(p));
  CheckResult out{"unit", Verdict::Holds, std::nullopt, std::nullopt, period, {}};
  for (long j = 0; j < period; ++j) {
    // nu_p(theta_d(x)) = sum_i nu_p(x - z_i); a vanishing factor makes it +infinity.
    const Rational x = power(Rational(beta_r), j);
    long total = 0;
    bool vanishes = false;
    for (long i = 1; i <= d; ++i) {
      const Rational factor = x - (*spec.z)(i);
      if (factor == 0) {
        vanishes = true;
        break;
      }
      total += nu(p, factor);
    }
    if (vanishes) continue;
    lower(out.min_valuation, total);
    if (total < 1 && !out.witness) {
      out.verdict = Verdict::Fails;
      out.witness = j;
      out.detail = "theta_" + std::to_string(d) + "(beta^" + std::to_string(j * spec.step) + ") is a p-local unit";
    }
  }
  return out;
}

CheckResult check_congruence_condition(const SpectrumSpec& spec, long m, long n, long l, long precision) {
  if (m < 0 || n < 0 || l < 1) throw std::invalid_argument("congruence condition needs m, n >= 0 and l >= 1");
  if (!spec.theta_form()) {
    auto c = check_coalgebra_conditions(spec, m, n, l, m + n + 4).gamma_congruence;
    return c;
  }
  const long p = spec.prime;
  const ZSequence& z = *spec.z;
  CheckResult out{"congruence", Verdict::Holds, std::nullopt, std::nullopt, 0, {}};
  for (long i = 0; i < n; ++i) {
    const Rational diff = z(n - i) - z(m + n - i);
    if (diff == 0) continue;
    const long v = nu(p, diff);
    lower(out.min_valuation, v);
    if (v < l && !out.witness) {
      out.verdict = Verdict::Fails;
      out.witness = i;
      out.detail = "nu_p(z_" + std::to_string(n - i) + " - z_" + std::to_string(m + n - i) + ") = " + std::to_string(v);
    }
  }

  if (precision > 0) {
    // Coefficients of theta_m theta_n - theta_{m+n} in the dual basis, by pairing
    // with c_k through its monomial expansion.
    const auto& tables = *spec.tables;
    const Rational beta(spec.beta);
    for (long k = 0; k < precision; ++k) {
      const auto& coords = tables.monomial_coords(k);
      Rational coefficient = 0;
      for (long s = 0; s <= k; ++s) {
        const Integer& lambda = coords.lambda[static_cast<std::size_t>(s)];
        if (lambda == 0) continue;
        const Rational x = power(beta, tables.spec().w_exponent(s));
        coefficient += Rational(lambda) * (theta_at(m, z, x) * theta_at(n, z, x) - theta_at(m + n, z, x));
      }
      coefficient /= Rational(coords.denominator);
      if (coefficient != 0 && nu(p, coefficient) < l && out.holds())
        throw std::logic_error("congruence routes disagree at coefficient " + std::to_string(k));
    }
    out.checked = precision;
  }
  return out;
}

bool theta_product_identity(const ZSequence& z, long m, long n) {
  LaurentPoly rhs = theta(m, z) * theta(n, z);
  const LaurentPoly theta_n = theta(n, z);
  for (long i = 0; i < n; ++i) {
    const LaurentPoly tail = exact_divide(theta_n, theta(n - i, z));
    rhs += (z(n - i) - z(m + n - i)) * (tail * theta(m + n - i - 1, z));
  }
  return rhs == theta(m + n, z);
}

Prop76Report check_prop76(const SpectrumSpec& k2, const SpectrumSpec& ko2, long m_max, long bridge_max) {
  if (k2.family != Family::k2 || ko2.family != Family::ko2)
    throw std::invalid_argument("check_prop76 needs the k(2) and ko(2) spectra");
  Prop76Report report;
  report.m_max = m_max;
  auto entry = [](const MatrixQ& g, long i, long j) {
    return (i < g.rows() && j < g.cols()) ? g(i, j) : Rational(0);
  };
  for (long m = 0; m <= m_max; ++m) {
    const MatrixQ& gk = k2.tables->gamma(2 * m + 1);
    const MatrixQ& gko = ko2.tables->gamma(m);
    for (long i = 0; i <= m_max; ++i)
      for (long j = 0; j <= m_max; ++j) {
        const Rational base = entry(gko, i, j);
        const Rational three = power(Rational(3), i + j - m);
        const Rational even = (1 - three) / 2 * base;
        const Rational odd = three * base;
        const Rational actual_even = entry(gk, 2 * i, 2 * j);
        const Rational actual_odd = entry(gk, 2 * i, 2 * j + 1);
        report.cells_checked += 2;
        if (actual_even != even) report.mismatches.push_back({i, j, m, "even", even, actual_even});
        if (actual_odd != odd) report.mismatches.push_back({i, j, m, "odd", odd, actual_odd});
      }
  }
  for (long m = 0; m <= bridge_max; ++m) {
    const Rational three_m = power(Rational(3), m);
    const LaurentPoly lhs = LaurentPoly::variable() * k2_basis(2 * m);
    const LaurentPoly rhs = three_m * k2_basis(2 * m) - (2 * three_m) * k2_basis(2 * m + 1);
    if (lhs != rhs) report.bridge_failures.push_back(m);
  }
  return report;
}

bool Eq71Report::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const Eq71Row& r) { return r.direct == r.closed_form; });
}

Eq71Report verify_eq71(long i_max) {
  if (i_max < 1) throw std::invalid_argument("i_max must be at least 1");
  Eq71Report report;
  for (long i = 1; i <= i_max; ++i) {
    const long direct = nu(2, power(Integer(3), static_cast<unsigned long>(i)) - 1);
    const long closed = i % 2 == 1 ? 1 : 2 + nu(2, Integer(i));
    report.rows.push_back({i, direct, closed});
  }
  return report;
}

bool TheoremReport::all_hold() const {
  return std::all_of(cells.begin(), cells.end(), [](const ReportCell& c) { return c.verdict != Verdict::Fails; });
}

bool TheoremReport::hypotheses_hold() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const ReportCell& c) { return c.control || c.verdict != Verdict::Fails; });
}

long TheoremReport::failures(bool controls) const {
  return std::count_if(cells.begin(), cells.end(), [controls](const ReportCell& c) {
    return c.control == controls && c.verdict == Verdict::Fails;
  });
}

TheoremReport theorem_report(const SpectrumSpec& spec, long l_max, long sample, const ReportOptions& options) {
  if (l_max < 1 || sample < 1) throw std::invalid_argument("l_max and sample must be positive");
  TheoremReport report{spec.name(), spec.prime, l_max, sample, options, {}};

  auto add = [&report](long l, long m, long n, const CheckResult& r, bool control) {
    report.cells.push_back({l, m, n, r.condition, r.verdict, r.witness, r.min_valuation, control});
  };
  auto congruence = [&](long l, long m, long n, bool control) {
    if (spec.theta_form()) {
      add(l, m, n, check_congruence_condition(spec, m, n, l, options.precision), control);
    } else {
      const long bound = std::max(options.bound, m + n);
      add(l, m, n, check_coalgebra_conditions(spec, m, n, l, bound).gamma_congruence, control);
    }
  };

  for (long l = 1; l <= l_max; ++l) {
    const IndexSet set = options.all_indices ? IndexSet(1, 1) : n_l(spec, l);
    const std::vector<long> ms = set.first(sample);
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = a + 1; b < ms.size(); ++b)
        add(l, ms[a], ms[b], check_unit_condition(spec, ms[a], ms[b], options.bound), false);
    for (long m : ms)
      for (long n = 0; n <= options.n_max; ++n) congruence(l, m, n, false);

    if (!options.include_negative_controls) continue;
    std::vector<long> outside;
    for (long c = 1; c <= ms.back() + set.divisor() && static_cast<long>(outside.size()) < sample; ++c)
      if (!set.contains(c)) outside.push_back(c);
    for (long c : outside) {
      add(l, 0, c, check_unit_condition(spec, 0, c, options.bound), true);
      for (long n = 0; n <= options.n_max; ++n) congruence(l, c, n, true);
    }
  }
  return report;
}

}  // namespace regcoal
