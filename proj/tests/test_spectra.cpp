#include "doctest.h"
#include "regcoal/spectra.hpp"

using namespace regcoal;

namespace {

const LaurentPoly w = LaurentPoly::variable();

const Family all_families[] = {Family::K_p, Family::k_p, Family::G,   Family::g,
                               Family::KO2, Family::ko2, Family::K2, Family::k2};

SpectrumSpec any_prime(Family f) { return make_spectrum(f, is_two_local(f) ? 2 : 3); }

}  // namespace

TEST_CASE("basis families") {
  const SpectrumSpec k3 = make_spectrum(Family::k_p, 3, 2);
  CHECK(k3.tables->basis(0) == LaurentPoly(1));
  CHECK(k3.tables->basis(1) == w - 1);
  CHECK(k3.tables->basis(2) == Rational(1, 6) * (w - 1) * (w - 2));
  CHECK(ko2_basis(1) == Rational(1, 8) * (pow(w, 2) - 1));
  CHECK(make_spectrum(Family::ko2, 2).tables->basis(1) == ko2_basis(1));
  CHECK(k2_basis(1) == Rational(1, 2) * (LaurentPoly(1) - w));
  CHECK_THROWS_AS(make_spectrum(Family::k_p, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_spectrum(Family::KO2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_spectrum(Family::ko2, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_spectrum(Family::G, 9), std::invalid_argument);
}

TEST_CASE("defaults and names") {
  CHECK(make_spectrum(Family::K_p, 7).beta == 3);
  CHECK(make_spectrum("k(3)").name() == "k(3)");
  CHECK(make_spectrum("G", 5).name() == "G(5)");
  CHECK(make_spectrum("g").prime == 3);
  CHECK(make_spectrum("KO").family == Family::KO2);
  CHECK(make_spectrum("K(2)").family == Family::K2);
  CHECK(make_spectrum("k", 2).family == Family::k2);
  CHECK_THROWS_AS(make_spectrum("L(3)"), std::invalid_argument);
  CHECK_THROWS_AS(make_spectrum("K"), std::invalid_argument);
  CHECK_THROWS_AS(make_spectrum("k(3)", 5), std::invalid_argument);
  CHECK(make_spectrum(Family::G, 5).theta_base == 16);
  CHECK(make_spectrum(Family::G, 5).step == 4);
}

TEST_CASE("dual theta basis") {
  const SpectrumSpec k3 = make_spectrum(Family::k_p, 3, 2);
  const AdamsPoly t2 = dual_theta_basis(k3, 2);
  CHECK(t2.beta == 2);
  CHECK(t2.poly == (w - 1) * (w - 2));
  const AdamsPoly ko3 = dual_theta_basis(make_spectrum(Family::KO2, 2), 3);
  CHECK(ko3.beta == 3);
  CHECK(ko3.poly == (w - 1) * (w - Rational(1, 9)) * (w - 9));
  CHECK_THROWS_AS(dual_theta_basis(make_spectrum(Family::K2, 2), 1), std::domain_error);
  CHECK_THROWS_AS(dual_theta_basis(make_spectrum(Family::k2, 2), 0), std::domain_error);
}

TEST_CASE("duality of the theta basis") {
  for (Family f : {Family::K_p, Family::k_p, Family::G, Family::g, Family::KO2, Family::ko2}) {
    const SpectrumSpec s = any_prime(f);
    for (long n = 0; n <= 10; ++n) {
      CAPTURE(s.name());
      CAPTURE(n);
      CHECK(expand(dual_theta_basis(s, n), *s.tables, 11) == DualElement::basis(n, 11));
    }
  }
}

TEST_CASE("2-local complex bases are regular") {
  for (Family f : {Family::K2, Family::k2}) {
    const SpectrumSpec s = make_spectrum(f, 2);
    CHECK(verify_regularity(*s.tables, 12).passed());
  }
}

TEST_CASE("bridge identity for k(2)") {
  for (long m = 0; m <= 8; ++m) {
    const Rational t = power(Rational(3), m);
    CHECK(w * k2_basis(2 * m) == t * k2_basis(2 * m) - 2 * t * k2_basis(2 * m + 1));
  }
}

TEST_CASE("index sets") {
  CHECK(n_l(make_spectrum(Family::K_p, 3), 2).first(3) == std::vector<long>{12, 24, 36});
  CHECK(n_l(make_spectrum(Family::ko2, 2), 1).first(3) == std::vector<long>{1, 2, 3});
  CHECK(n_l(make_spectrum(Family::g, 3), 3).first(3) == std::vector<long>{9, 18, 27});
  CHECK(n_l(make_spectrum(Family::k_p, 5), 1).first(2) == std::vector<long>{4, 8});
  CHECK(n_l(make_spectrum(Family::k2, 2), 4).first(2) == std::vector<long>{4, 8});
  CHECK(n_l(make_spectrum(Family::K2, 2), 3).first(2) == std::vector<long>{4, 8});
  CHECK(n_l(make_spectrum(Family::ko2, 2), 5).first(2) == std::vector<long>{4, 8});
  CHECK(n_l(make_spectrum(Family::G, 5), 1).first(2) == std::vector<long>{2, 4});
  CHECK_THROWS_AS(n_l(make_spectrum(Family::g, 3), 0), std::invalid_argument);

  const IndexSet s(5, 4);
  CHECK(s.next_after(0) == 8);
  CHECK(s.next_after(8) == 12);
  CHECK_FALSE(s.contains(4));
}

TEST_CASE("N_l shrinks as l grows") {
  for (Family f : all_families)
    for (long p : {2L, 3L, 5L}) {
      if (is_two_local(f) != (p == 2)) continue;
      const SpectrumSpec s = make_spectrum(f, p);
      for (long l = 1; l <= 5; ++l) {
        const IndexSet outer = n_l(s, l);
        for (long n : n_l(s, l + 1).first(50)) CHECK(outer.contains(n));
      }
    }
}
