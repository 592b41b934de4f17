#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sct/cyclotomic.hpp"
#include "sct/rational.hpp"

using namespace sct;

TEST_CASE("rational canonical form") {
  CHECK(rat_canon(2, 4) == rat_canon(1, 2));
  CHECK(rat_canon(2, 4).num() == 1);
  CHECK(rat_canon(2, 4).den() == 2);
  CHECK(rat_canon(-3, -6) == rat_canon(1, 2));
  CHECK(rat_canon(3, -6).num() == -1);
  CHECK(rat_canon(0, 7).num() == 0);
  CHECK(rat_canon(0, 7).den() == 1);
  CHECK_THROWS_AS(rat_canon(1, 0), std::invalid_argument);
  CHECK(Rational::parse("-22/8") == rat_canon(-11, 4));
  CHECK(Rational::parse("7").is_integer());
  CHECK(rat_canon(-11, 4).str() == "-11/4");
}

TEST_CASE("theta is the fixed nontrivial additive character") {
  CHECK(theta(2, 0) == Cyclotomic::from_rational(2, Rational(1)));
  CHECK(theta(2, 1) == Cyclotomic::from_rational(2, Rational(-1)));
  CHECK(theta(5, 2) * theta(5, 3) == Cyclotomic::from_rational(5, Rational(1)));

  for (int p : {2, 3, 5, 7}) {
    Cyclotomic sum(p);
    for (int t = 0; t < p; ++t) sum += theta(p, t);
    CHECK(sum.is_zero());
    for (int s = 0; s < p; ++s)
      for (int t = 0; t < p; ++t) CHECK(theta(p, s + t) == theta(p, s) * theta(p, t));
  }
}

TEST_CASE("multiplication reduces via the minimal polynomial") {
  // zeta_3^2 = -1 - zeta_3
  Cyclotomic z3 = Cyclotomic::root_power(3, 1);
  Cyclotomic sq = z3 * z3;
  CHECK(sq.coeff(0) == Rational(-1));
  CHECK(sq.coeff(1) == Rational(-1));
  CHECK(sq == Cyclotomic::root_power(3, 2));

  Cyclotomic m1 = Cyclotomic::root_power(2, 1);
  CHECK(m1 * m1 == Cyclotomic::from_rational(2, Rational(1)));

  CHECK(Cyclotomic::root_power(5, 2) * Cyclotomic::root_power(5, 3) ==
        Cyclotomic::root_power(5, 0));
}

TEST_CASE("conjugation") {
  CHECK(Cyclotomic::from_rational(2, Rational(-1)).conj() ==
        Cyclotomic::from_rational(2, Rational(-1)));
  // conj(zeta_3) = zeta_3^2 = -1 - zeta_3
  CHECK(Cyclotomic::root_power(3, 1).conj() == Cyclotomic::root_power(3, 2));
  // conj(1 + zeta_3) = 1 + zeta_3^2 = -zeta_3
  Cyclotomic one_plus_z = Cyclotomic::from_rational(3, Rational(1)) +
                          Cyclotomic::root_power(3, 1);
  CHECK(one_plus_z.conj() == -Cyclotomic::root_power(3, 1));
}

namespace {

Cyclotomic random_cyclo(int p, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  Cyclotomic x(p);
  for (int k = 0; k + 1 < p; ++k)
    x += Cyclotomic::root_power(p, k).scaled(
        Rational(BigInt(num(rng)), BigInt(den(rng))));
  return x;
}

}  // namespace

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(20240711);
  for (int p : {2, 3, 5, 7}) {
    Cyclotomic one = Cyclotomic::from_rational(p, Rational(1));
    for (int trial = 0; trial < 40; ++trial) {
      Cyclotomic a = random_cyclo(p, rng);
      Cyclotomic b = random_cyclo(p, rng);
      Cyclotomic c = random_cyclo(p, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * one == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a.conj().conj() == a);
    }
  }
}

TEST_CASE("mismatched primes are rejected") {
  CHECK_THROWS_AS(Cyclotomic(2) * Cyclotomic(3), std::invalid_argument);
  CHECK_THROWS_AS(Cyclotomic(2) + Cyclotomic(5), std::invalid_argument);
}

TEST_CASE("rational detection and extraction") {
  Cyclotomic z = Cyclotomic::root_power(5, 1);
  CHECK(!z.is_rational());
  CHECK_THROWS_AS(z.rational_part(), std::invalid_argument);
  // z * z^4 = 1 is rational even though the factors are not.
  CHECK((z * Cyclotomic::root_power(5, 4)).rational_part() == Rational(1));
  // The full sum of nontrivial fifth roots of unity is -1.
  Cyclotomic s(5);
  for (int k = 1; k < 5; ++k) s += Cyclotomic::root_power(5, k);
  CHECK(s.rational_part() == Rational(-1));
}
