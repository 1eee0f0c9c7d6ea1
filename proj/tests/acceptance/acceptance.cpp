// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "regcoal/checker.hpp"
#include "regcoal/dual.hpp"
#include "regcoal/modcat.hpp"
#include "regcoal/spectra.hpp"

using namespace regcoal;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<SpectrumSpec> theta_specs() {
  std::vector<SpectrumSpec> out;
  for (Family f : {Family::K_p, Family::k_p, Family::G, Family::g})
    for (long p : {3L, 5L}) out.push_back(make_spectrum(f, p));
  out.push_back(make_spectrum(Family::KO2, 2));
  out.push_back(make_spectrum(Family::ko2, 2));
  return out;
}

std::vector<SpectrumSpec> all_specs() {
  auto out = theta_specs();
  out.push_back(make_spectrum(Family::K2, 2));
  out.push_back(make_spectrum(Family::k2, 2));
  return out;
}

DualElement random_local(std::mt19937_64& rng, long p, long precision, long scale = 1) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
  VectorQ v(precision);
  for (long n = 0; n < precision; ++n) {
    long d = den(rng);
    while (d % p == 0) d = den(rng);
    v(n) = Rational(num(rng) * scale, d);
  }
  return DualElement(v);
}

bool criterion1(std::ostream& log) {
  const auto t0 = Clock::now();
  bool ok = true;
  for (const auto& s : all_specs()) {
    const auto r = verify_regularity(*s.tables, 24);
    if (!r.passed()) {
      ok = false;
      for (const auto& c : r.checks)
        if (!c.passed) log << "    " << s.name() << " " << c.name << ": " << c.counterexample << '\n';
    }
  }
  const double t = seconds_since(t0);
  log << "    12 spectra to index 24 in " << t << " s\n";
  return ok && t < 60;
}

bool criterion2(std::ostream& log) {
  bool ok = true;
  for (const auto& s : theta_specs())
    for (long n = 0; n <= 16; ++n)
      if (expand(dual_theta_basis(s, n), *s.tables, 17) != DualElement::basis(n, 17)) {
        log << "    " << s.name() << ": theta_" << n << " is not dual to c_" << n << '\n';
        ok = false;
      }
  return ok;
}

bool criterion3(std::ostream& log) {
  const auto r = verify_eq71(64);
  for (const auto& row : r.rows)
    if (row.direct != row.closed_form) log << "    i=" << row.i << '\n';
  return r.passed() && r.rows.size() == 64;
}

bool criterion4(std::ostream& log) {
  bool ok = true;
  for (const auto& s : theta_specs())
    for (long m = 0; m <= 8; ++m)
      for (long n = 0; n <= 8; ++n)
        if (!theta_product_identity(*s.z, m, n)) {
          log << "    " << s.name() << " m=" << m << " n=" << n << '\n';
          ok = false;
        }
  return ok;
}

bool criterion5(std::ostream& log) {
  bool ok = true;
  ReportOptions o;
  o.n_max = 12;
  o.include_negative_controls = true;
  for (const auto& s : theta_specs()) {
    const TheoremReport r = theorem_report(s, 3, 5, o);
    long main_cells = 0;
    for (const auto& c : r.cells) main_cells += !c.control;
    long control_failures = r.failures(true);
    std::string where = "l <= 3";
    if (control_failures == 0) {
      // Out-of-N_l indices can still satisfy the conditions for small l; push
      // the adversarial controls one level further.
      const TheoremReport deeper = theorem_report(s, 4, 5, o);
      control_failures = deeper.failures(true);
      where = "l = 4 (none at l <= 3)";
    }
    log << "    " << s.name() << ": " << main_cells << " cells, " << r.failures(false) << " failing; "
        << control_failures << " failing controls at " << where << '\n';
    ok = ok && r.hypotheses_hold() && main_cells > 0 && control_failures > 0;
  }
  return ok;
}

bool criterion6(std::ostream& log) {
  const auto r = check_prop76(make_spectrum(Family::k2, 2), make_spectrum(Family::ko2, 2), 6, 8);
  log << "    " << r.cells_checked << " cells, " << r.mismatches.size() << " mismatches, " << r.bridge_failures.size()
      << " bridge failures\n";
  return r.passed();
}

bool criterion7(std::ostream& log) {
  const long prec = 12;
  std::mt19937_64 rng(7);
  bool ok = true;
  long count = 0;
  for (const auto& s : {make_spectrum(Family::k_p, 3), make_spectrum(Family::KO2, 2)}) {
    const auto& t = *s.tables;
    for (long k = 0; k < 10; ++k) {
      // Psi^(beta^k) times 1 + p x: the pairings with every w_j are units.
      const auto psi = expand(AdamsPoly::psi(power(Rational(s.beta), k)), t, prec);
      const auto perturb = DualElement::one(t, prec) + random_local(rng, s.prime, prec, s.prime);
      const auto u = multiply(psi, perturb, t);
      const auto v = invert(u, t, prec);
      v.require_integral(t.ring());
      if (multiply(u, v, t) != DualElement::one(t, prec)) {
        log << "    " << s.name() << " unit " << k << " failed the roundtrip\n";
        ok = false;
      }
      ++count;
    }
  }
  const SpectrumSpec k3 = make_spectrum(Family::k_p, 3, 2);
  const auto bad = DualElement::one(*k3.tables, prec) - DualElement::basis(1, prec);
  bool rejected = false;
  try {
    (void)invert(bad, *k3.tables, prec);
  } catch (const NotInvertible& e) {
    rejected = e.step == 1;
  }
  const auto exact = is_unit(AdamsPoly::constant(2, 1) - dual_theta_basis(k3, 1), *k3.tables);
  log << "    " << count << " units inverted; 1 - a_1 rejected at step 1: " << (rejected ? "yes" : "no")
      << ", exact witness j = " << (exact.witness_exponent ? std::to_string(*exact.witness_exponent) : "none") << '\n';
  return ok && count == 20 && rejected && exact.witness_exponent == 1;
}

bool criterion8(std::ostream& log) {
  std::mt19937_64 rng(8);
  const std::vector<SpectrumSpec> specs{make_spectrum(Family::k_p, 3), make_spectrum(Family::KO2, 2),
                                        make_spectrum(Family::K_p, 5), make_spectrum(Family::k2, 2)};
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& s = specs[trial % specs.size()];
    const auto& t = *s.tables;
    const long prec = 1 + trial % 12;
    const auto a = random_local(rng, s.prime, prec), b = random_local(rng, s.prime, prec),
               c = random_local(rng, s.prime, prec);
    const auto one = DualElement::one(t, prec);
    if (multiply(multiply(a, b, t), c, t) != multiply(a, multiply(b, c, t), t) || multiply(one, a, t) != a ||
        multiply(a, one, t) != a) {
      log << "    trial " << trial << " on " << s.name() << '\n';
      ok = false;
    }
  }
  return ok;
}

bool criterion9(std::ostream& log) {
  bool ok = true;
  long modules = 0, torsion = 0;
  for (const auto& s : {make_spectrum(Family::k_p, 3), make_spectrum(Family::KO2, 2)}) {
    const auto& t = *s.tables;
    MatrixQ u = MatrixQ::Identity(5, 5);
    u(0, 2) = 1;
    u(3, 1) = -1;
    const std::vector<FGModule> list{
        trivial_module(t, 2),
        character_module(t, 2 * s.step),
        regular_module(t, 4),
        conjugate(direct_sum(character_module(t, s.step), regular_module(t, 4)), u),
        reduce_mod(character_module(t, 3 * s.step), 2),
        direct_sum(character_module(t, s.step), reduce_mod(regular_module(t, 3), 1)),
    };
    for (const auto& m : list) {
      ++modules;
      const auto v = validate_module(m, t);
      if (!v.valid) {
        log << "    " << s.name() << " module " << modules << " invalid: " << v.relation << " " << v.detail << '\n';
        ok = false;
        continue;
      }
      const Comodule c = to_comodule(m, t);
      if (!c.counit_ok || !c.coassociative || action_from_comodule(c, t, m.annihilation_level()) != m.action) {
        log << "    " << s.name() << " module " << modules << " failed the roundtrip\n";
        ok = false;
      }
      if (m.torsion_orders.empty()) continue;
      ++torsion;
      long e = 0;
      for (const Integer& o : m.torsion_orders) e = std::max(e, nu(s.prime, Rational(o)));
      const auto w = torsion_annihilator(m, s, e, 10);
      if (!w.witness) {
        log << "    " << s.name() << " module " << modules << ": " << w.message << '\n';
        ok = false;
      }
    }
  }
  log << "    " << modules << " modules, " << torsion << " with torsion\n";
  return ok && modules >= 10 && torsion > 0;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::ostream&)>>> criteria{
      {"1 regularity of all eight families to index 24", criterion1},
      {"2 theta basis duality for n, m <= 16", criterion2},
      {"3 nu_2(3^i - 1) closed form for i <= 64", criterion3},
      {"4 theta product identity for m, n <= 8", criterion4},
      {"5 unit and congruence conditions on N_l, with negative controls", criterion5},
      {"6 Gamma transfer k(2) <-> ko(2) and the bridge identity", criterion6},
      {"7 inversion of 20 units; 1 - a_1 rejected", criterion7},
      {"8 associativity and unit on 100 random triples", criterion8},
      {"9 module/comodule roundtrip and torsion witnesses", criterion9},
  };
  const auto t0 = Clock::now();
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    std::ostringstream log;
    bool ok = false;
    try {
      ok = run(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << '\n';
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << '\n' << log.str();
    failed += !ok;
  }
  std::cout << (failed ? "FAILED " : "all passed ") << "in " << seconds_since(t0) << " s\n";
  return failed ? 1 : 0;
}
