#include <random>

#include "doctest.h"
#include "regcoal/exact.hpp"

using namespace regcoal;

TEST_CASE("valuations") {
  CHECK(nu(2, Rational(8)) == 3);
  CHECK(nu(2, Rational(728)) == 3);
  CHECK(nu(3, Rational(5, 6)) == -1);
  CHECK(nu(5, Rational(-250, 7)) == 3);
  CHECK_THROWS_AS(nu(3, Rational(0)), std::domain_error);
}

TEST_CASE("p-local units and integers") {
  CHECK(is_p_local_unit(3, 2));
  CHECK_FALSE(is_p_local_unit(3, 6));
  CHECK_FALSE(is_p_local_unit(2, Rational(1 - 9)));
  CHECK(is_p_local_unit(3, Rational(2, 5)));
  CHECK(is_p_local_integer(3, Rational(7, 2)));
  CHECK_FALSE(is_p_local_integer(3, Rational(1, 3)));
  CHECK_FALSE(is_p_local_unit(3, 0));
  CHECK(is_p_local_integer(3, 0));
}

TEST_CASE("primitive roots") {
  CHECK(check_primitive_root(3, 2));
  CHECK(check_primitive_root(5, 2));
  CHECK_FALSE(check_primitive_root(3, 8));
  CHECK_FALSE(check_primitive_root(3, 4));
  CHECK(multiplicative_order(Integer(2), Integer(9)) == 6);
  CHECK(multiplicative_order(Integer(2), Integer(25)) == 20);
  CHECK(least_primitive_root(3) == 2);
  CHECK(least_primitive_root(7) == 3);
  // 14 generates (Z/29)^x but 14^28 = 1 mod 29^2.
  CHECK_FALSE(check_primitive_root(29, 14));
  CHECK(least_primitive_root(29) == 2);
  CHECK_THROWS_AS(check_primitive_root(2, 3), std::invalid_argument);
}

TEST_CASE("residues and parsing") {
  CHECK(residue(Rational(1, 2), Integer(9)) == 5);
  CHECK(residue(Rational(-1), Integer(9)) == 8);
  CHECK_THROWS(residue(Rational(1, 3), Integer(9)));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(to_string(Rational(-4, 6)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("ground rings") {
  GroundRing z3{3};
  CHECK(z3.contains(Rational(1, 2)));
  CHECK_FALSE(z3.contains(Rational(1, 3)));
  CHECK(z3.is_unit(Rational(2)));
  GroundRing z{};
  CHECK_FALSE(z.contains(Rational(1, 2)));
  CHECK(z.is_unit(-1));
  CHECK_FALSE(z.is_unit(2));
}

TEST_CASE("p-adic rationals") {
  PAdicRational a(Rational(9, 2), 3), b(Rational(1, 3), 3);
  CHECK((a * b).valuation() == 1);
  CHECK((a / b).value() == Rational(27, 2));
  CHECK_FALSE(b.is_integral());
  CHECK_THROWS(a + PAdicRational(1, 5));
}

TEST_CASE("valuation laws on random rationals") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
  auto draw = [&] {
    long n = 0;
    while (n == 0) n = num(rng);
    return Rational(n, den(rng));
  };
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int t = 0; t < 300; ++t) {
      const Rational x = draw(), y = draw();
      CHECK(nu(p, x * y) == nu(p, x) + nu(p, y));
      if (x + y != 0) {
        const long vx = nu(p, x), vy = nu(p, y), vs = nu(p, x + y);
        CHECK(vs >= std::min(vx, vy));
        if (vx != vy) CHECK(vs == std::min(vx, vy));
      }
      if (is_p_local_unit(p, x) && is_p_local_unit(p, y)) CHECK(is_p_local_unit(p, x * y));
    }
  }
}
