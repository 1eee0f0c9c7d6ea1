#include "doctest.h"
#include "regcoal/checker.hpp"

using namespace regcoal;

namespace {

std::vector<SpectrumSpec> theta_specs() {
  return {make_spectrum(Family::K_p, 3), make_spectrum(Family::K_p, 5), make_spectrum(Family::k_p, 3),
          make_spectrum(Family::k_p, 5), make_spectrum(Family::G, 3),   make_spectrum(Family::G, 5),
          make_spectrum(Family::g, 3),   make_spectrum(Family::g, 5),   make_spectrum(Family::KO2, 2),
          make_spectrum(Family::ko2, 2)};
}

/// Unit condition decided over j in [-3P, 3P) straight from theta_at.
bool unit_condition_over_three_periods(const SpectrumSpec& s, long m, long n) {
  const Integer br = power(Integer(s.beta), static_cast<unsigned long>(s.step));
  const long period = multiplicative_order(br, Integer(s.prime));
  const long lo = s.periodic ? -3 * period : 0;
  for (long j = lo; j < 3 * period; ++j) {
    const Rational v = theta_at(n - m, *s.z, power(Rational(br), j));
    if (v != 0 && nu(s.prime, v) < 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("unit condition examples") {
  const SpectrumSpec k3 = make_spectrum(Family::k_p, 3, 2);
  CHECK(check_unit_condition(k3, 2, 4).verdict == Verdict::Holds);
  const auto fail = check_unit_condition(k3, 0, 1);
  CHECK(fail.verdict == Verdict::Fails);
  CHECK(fail.witness == 1);
  CHECK(check_unit_condition(make_spectrum(Family::KO2, 2), 2, 4).verdict == Verdict::Holds);
  CHECK_THROWS_AS(check_unit_condition(k3, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(check_unit_condition(k3, 5, 4), std::invalid_argument);
}

TEST_CASE("unit condition is periodic in j") {
  for (const auto& s : theta_specs())
    for (long m = 0; m <= 3; ++m)
      for (long n = m + 1; n <= 7; ++n) {
        CAPTURE(s.name());
        CAPTURE(m);
        CAPTURE(n);
        CHECK(check_unit_condition(s, m, n).holds() == unit_condition_over_three_periods(s, m, n));
      }
}

TEST_CASE("congruence condition examples") {
  const SpectrumSpec k3 = make_spectrum(Family::k_p, 3, 2);
  const auto r = check_congruence_condition(k3, 2, 1, 1);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.min_valuation == 1);

  const auto K = check_congruence_condition(make_spectrum(Family::K_p, 3, 2), 12, 1, 2);
  CHECK(K.verdict == Verdict::Holds);
  CHECK(K.min_valuation == 2);

  const auto ko = check_congruence_condition(make_spectrum(Family::ko2, 2), 2, 1, 5);
  CHECK(ko.verdict == Verdict::Fails);
  CHECK(ko.min_valuation == 4);
  CHECK(ko.witness == 0);

  const auto empty = check_congruence_condition(k3, 2, 0, 3);
  CHECK(empty.verdict == Verdict::Holds);
  CHECK_FALSE(empty.min_valuation.has_value());
}

TEST_CASE("valuation route agrees with the expansion route") {
  for (const auto& s : theta_specs())
    for (long l = 1; l <= 3; ++l)
      for (long m : n_l(s, l).first(2))
        for (long n = 0; n <= 4; ++n) {
          CAPTURE(s.name());
          CHECK_NOTHROW(check_congruence_condition(s, m, n, l, 20));
        }
}

TEST_CASE("congruence verdicts match products in A") {
  // a_m a_n - a_{m+n} computed with Gamma, an independent route from the z-differences.
  for (const auto& s : {make_spectrum(Family::k_p, 3), make_spectrum(Family::KO2, 2), make_spectrum(Family::G, 3)}) {
    const auto& t = *s.tables;
    const long prec = 10;
    for (long l = 1; l <= 2; ++l)
      for (long m : n_l(s, l).first(2))
        for (long n = 0; n <= 3; ++n) {
          const auto am = expand(dual_theta_basis(s, m), t, prec);
          const auto an = expand(dual_theta_basis(s, n), t, prec);
          const auto amn = expand(dual_theta_basis(s, m + n), t, prec);
          const auto diff = multiply(am, an, t) - amn;
          bool divisible = true;
          for (long k = 0; k < prec; ++k)
            if (diff[k] != 0 && nu(s.prime, diff[k]) < l) divisible = false;
          if (check_congruence_condition(s, m, n, l).holds()) CHECK(divisible);
        }
  }
}

TEST_CASE("coalgebra-side conditions") {
  const SpectrumSpec k2 = make_spectrum(Family::k2, 2);
  for (long l = 1; l <= 3; ++l)
    for (long m : n_l(k2, l).first(3))
      for (long n = 0; n <= 4; ++n) {
        if (m + n > 20) continue;
        const auto c = check_coalgebra_conditions(k2, m, n, l, 20);
        CHECK(c.gamma_congruence.verdict == Verdict::HoldsUpToBound);
      }
  const auto unit = check_coalgebra_conditions(k2, 2, 4, 1, 20);
  REQUIRE(unit.lambda_divisibility.has_value());
  CHECK(unit.lambda_divisibility->holds());

  const SpectrumSpec k3 = make_spectrum(Family::k_p, 3);
  // m = 0 never meets the Lambda condition (Lambda^1_1 = 1); only the Gamma side is meaningful.
  for (long n = 0; n <= 6; ++n) CHECK(check_coalgebra_conditions(k3, 0, n, 4, 12).gamma_congruence.holds());
  CHECK_THROWS_AS(check_coalgebra_conditions(k3, 3, 4, 1, 6), std::invalid_argument);

  auto sc = StructureConstants::of(*k2.tables);
  const auto base = sc.gamma;
  sc.gamma = [base](long i) {
    MatrixQ g = base(i);
    if (i == 5) g(2, 3) = 2;
    return g;
  };
  const auto broken = check_coalgebra_conditions(sc, 2, 3, 1, 10);
  CHECK(broken.gamma_congruence.verdict == Verdict::Fails);
  CHECK(broken.gamma_congruence.witness == 5);
}

TEST_CASE("theta product identity") {
  for (const auto& z : {ZSequence::geometric(2), ZSequence::alternating(9), ZSequence::geometric(16),
                        ZSequence::from_values({1, 3, -2, Rational(1, 5), 7, 0, 11, 4, -6, 2, 9, 13, 8, 5, -1, 3})})
    for (long m = 0; m <= 8; ++m)
      for (long n = 0; n <= 8; ++n) CHECK(theta_product_identity(z, m, n));
}

TEST_CASE("Gamma transfer between k(2) and ko(2)") {
  const auto r = check_prop76(make_spectrum(Family::k2, 2), make_spectrum(Family::ko2, 2), 6);
  CHECK(r.passed());
  CHECK(r.cells_checked == 2 * 7 * 7 * 7);
  const SpectrumSpec k2 = make_spectrum(Family::k2, 2);
  CHECK(k2.tables->gamma(1)(0, 1) == 1);
  CHECK(k2.tables->gamma(1)(0, 0) == 0);
  CHECK_THROWS_AS(check_prop76(make_spectrum(Family::ko2, 2), make_spectrum(Family::k2, 2), 2), std::invalid_argument);
}

TEST_CASE("2-adic valuation of 3^i - 1") {
  const auto r = verify_eq71(64);
  CHECK(r.passed());
  CHECK(r.rows[0].direct == 1);
  CHECK(r.rows[5].direct == 3);
  CHECK(r.rows[3].direct == 4);
  CHECK_THROWS_AS(verify_eq71(0), std::invalid_argument);
}

TEST_CASE("theorem reports") {
  const auto k3 = theorem_report(make_spectrum(Family::k_p, 3), 3, 5);
  CHECK(k3.all_hold());
  const auto KO = theorem_report(make_spectrum(Family::KO2, 2), 3, 5);
  CHECK(KO.all_hold());

  ReportOptions controls;
  controls.include_negative_controls = true;
  const auto k3c = theorem_report(make_spectrum(Family::k_p, 3), 1, 5, controls);
  CHECK(k3c.hypotheses_hold());
  CHECK(k3c.failures(true) > 0);

  // Every z-difference for KO(2) is 9^a - 9^b, with 2-adic valuation at least 3,
  // so dropping N_l costs nothing until l = 4.
  ReportOptions all;
  all.all_indices = true;
  const auto ko_all = theorem_report(make_spectrum(Family::KO2, 2), 4, 5, all);
  CHECK(ko_all.failures(false) > 0);
  for (const auto& c : ko_all.cells)
    if (c.verdict == Verdict::Fails) CHECK(c.l == 4);

  const auto k2 = theorem_report(make_spectrum(Family::K2, 2), 3, 3);
  CHECK(k2.all_hold());
}
