#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "sct/superchar.hpp"

using namespace sct;

namespace {

Poset example_poset() {
  return Poset::from_covers(5, {{1, 2}, {2, 3}, {3, 4}, {0, 3}});
}

FMatrix nil(int n, int p, std::initializer_list<std::tuple<int, int, int>> entries) {
  FMatrix m(n, p);
  for (auto [i, j, v] : entries) m.set(i, j, v);
  return m;
}

Cyclotomic rat(int p, long long v) {
  return Cyclotomic::from_rational(p, Rational(v));
}

}  // namespace

TEST_CASE("superclass counts follow the Bell numbers over F_2") {
  CHECK(Theory(Poset::total(2), 2).num_classes() == 2);
  CHECK(Theory(Poset::total(3), 2).num_classes() == 5);
  CHECK(Theory(Poset::total(4), 2).num_classes() == 15);
  CHECK(Theory(Poset::total(5), 2).num_classes() == 52);
  CHECK(Theory(Poset::total(6), 2).num_classes() == 203);
}

TEST_CASE("labeled partition counts for p = 3") {
  // sum over set partitions of 2^{#arcs}: 1 + 3*2 + 4 = 11 on three points.
  Theory t3(Poset::total(3), 3);
  CHECK(t3.num_classes() == 11);
  CHECK(t3.num_chars() == 11);
}

TEST_CASE("degenerate antichain gives the trivial theory") {
  Theory t(Poset::antichain(4), 5);
  CHECK(t.order() == 1);
  CHECK(t.num_classes() == 1);
  CHECK(t.num_chars() == 1);
  CHECK(t.value(0, 0) == rat(5, 1));
}

TEST_CASE("hand-checked orbits in U_3(F_2)") {
  Theory t(Poset::total(3), 2);

  SUBCASE("identity orbit is the zero matrix alone") {
    Orbit orb = t.superclass_orbit(FMatrix::identity(3, 2));
    CHECK(orb.size() == 1);
    CHECK(orb.rep.is_zero());
  }
  SUBCASE("e13 is central: singleton superclass, dual orbit of size 4") {
    FMatrix e13 = nil(3, 2, {{0, 2, 1}});
    CHECK(t.superclass_orbit(e13.to_group()).size() == 1);
    Orbit dual = t.dual_orbit_of(e13);
    CHECK(dual.size() == 4);
    CHECK(t.left_orbit_of(e13).size() == 2);
    std::set<uint64_t> expect;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        expect.insert(t.key_of(nil(3, 2, {{0, 2, 1}, {0, 1, a}, {1, 2, b}})));
    CHECK(std::set<uint64_t>(dual.keys.begin(), dual.keys.end()) == expect);
  }
  SUBCASE("e12 orbit picks up the e13 corner") {
    Orbit orb = t.superclass_orbit(nil(3, 2, {{0, 1, 1}}).to_group());
    CHECK(orb.size() == 2);
    CHECK(orb.rep == nil(3, 2, {{0, 1, 1}}));
  }
  SUBCASE("the zero functional is a fixed point of the dual action") {
    Orbit orb = t.dual_orbit_of(FMatrix(3, 2));
    CHECK(orb.size() == 1);
    CHECK(orb.rep.is_zero());
  }
}

TEST_CASE("character table of U_2(F_2)") {
  Theory t(Poset::total(2), 2);
  REQUIRE(t.num_classes() == 2);
  REQUIRE(t.num_chars() == 2);
  // Classes ordered identity first; rows ordered zero functional first.
  CHECK(t.value(0, 0) == rat(2, 1));
  CHECK(t.value(0, 1) == rat(2, 1));
  CHECK(t.value(1, 0) == rat(2, 1));
  CHECK(t.value(1, 1) == rat(2, -1));
}

TEST_CASE("character table of U_3(F_2)") {
  Theory t(Poset::total(3), 2);
  REQUIRE(t.num_chars() == 5);

  SUBCASE("degrees are the left orbit sizes: four linear and one of degree 2") {
    std::multiset<std::string> degrees;
    for (int r = 0; r < 5; ++r) {
      CHECK(t.value(r, 0) == rat(2, int(t.left_orbit_size(r))));
      degrees.insert(t.degree(r).str());
    }
    CHECK(degrees == std::multiset<std::string>{"1", "1", "1", "1", "2"});
  }

  SUBCASE("the degree-2 character vanishes off the center") {
    int r = t.char_of_nil(nil(3, 2, {{0, 2, 1}}));
    CHECK(t.degree(r) == Rational(2));
    FMatrix u12 = nil(3, 2, {{0, 1, 1}}).to_group();
    CHECK(t.value_at(r, u12).is_zero());
    FMatrix u13 = nil(3, 2, {{0, 2, 1}}).to_group();
    CHECK(t.value_at(r, u13) == rat(2, -2));
    // Its norm is 1: this supercharacter is a single irreducible character.
    auto row = t.character_row(r);
    CHECK(t.inner_product(row, row) == rat(2, 1));
  }

  SUBCASE("distinct supercharacters are orthogonal, all ten pairs") {
    for (int r = 0; r < 5; ++r)
      for (int s = r + 1; s < 5; ++s)
        CHECK(t.inner_product(t.character_row(r), t.character_row(s)).is_zero());
  }

  SUBCASE("trivial character row is identically 1 and has norm 1") {
    int r0 = t.char_of_nil(FMatrix(3, 2));
    for (int c = 0; c < t.num_classes(); ++c) CHECK(t.value(r0, c) == rat(2, 1));
    CHECK(t.inner_product(t.trivial_character(), t.trivial_character()) ==
          rat(2, 1));
  }
}

TEST_CASE("decomposition in the supercharacter basis") {
  Theory t(Poset::total(3), 2);

  SUBCASE("a supercharacter decomposes as itself") {
    for (int r = 0; r < t.num_chars(); ++r) {
      auto coeffs = t.decompose(t.character_row(r));
      for (int s = 0; s < t.num_chars(); ++s)
        CHECK(coeffs[size_t(s)] == (r == s ? Rational(1) : Rational(0)));
    }
  }

  SUBCASE("regular character splits with positive weights") {
    auto coeffs = t.decompose(t.regular_character());
    Rational total(0);
    for (int r = 0; r < t.num_chars(); ++r) {
      CHECK(coeffs[size_t(r)] > Rational(0));
      total += coeffs[size_t(r)] * t.degree(r);
    }
    CHECK(total == Rational(8));
    // The degree-2 supercharacter has norm 1, so it soaks up coefficient 2.
    int r = t.char_of_nil(nil(3, 2, {{0, 2, 1}}));
    CHECK(coeffs[size_t(r)] == Rational(2));
  }
}

TEST_CASE("supercharacter theory axioms validate") {
  for (int n = 2; n <= 4; ++n) {
    auto rep = Theory(Poset::total(n), 2).validate_axioms();
    INFO("U_" << n << "(F_2): ", rep.failures.empty() ? "" : rep.failures[0]);
    CHECK(rep.all_pass());
  }
  CHECK(Theory(Poset::total(3), 3).validate_axioms().all_pass());
  CHECK(Theory(Poset::total(4), 3).validate_axioms().all_pass());
  CHECK(Theory(example_poset(), 2).validate_axioms().all_pass());
  CHECK(Theory(Poset::chain_um(4, 2), 3).validate_axioms().all_pass());
}

TEST_CASE("the example poset's printed superclass") {
  Theory t(example_poset(), 2);
  FMatrix v = nil(5, 2, {{0, 3, 1}, {1, 3, 1}, {3, 4, 1}});
  Orbit orb = t.superclass_orbit(v.to_group());
  // The family fixes entries (1,4), (2,4), (4,5) and ranges over the three
  // free column-5 slots.
  std::set<uint64_t> expect;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        expect.insert(t.key_of(nil(5, 2,
                                   {{0, 3, 1},
                                    {1, 3, 1},
                                    {3, 4, 1},
                                    {0, 4, a},
                                    {1, 4, b},
                                    {2, 4, c}})));
  CHECK(std::set<uint64_t>(orb.keys.begin(), orb.keys.end()) == expect);
  CHECK(orb.rep == v);
}

TEST_CASE("the example poset's printed dual orbit") {
  Theory t(example_poset(), 2);
  FMatrix lambda = nil(5, 2, {{0, 4, 1}, {1, 4, 1}});
  Orbit orb = t.dual_orbit_of(lambda);
  std::set<uint64_t> expect;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          expect.insert(t.key_of(nil(5, 2,
                                     {{0, 4, 1},
                                      {1, 4, 1},
                                      {0, 3, a},
                                      {1, 3, a},
                                      {1, 2, b},
                                      {2, 3, a * c},
                                      {2, 4, c},
                                      {3, 4, d}})));
  CHECK(std::set<uint64_t>(orb.keys.begin(), orb.keys.end()) == expect);
  CHECK(orb.rep == lambda);
}

TEST_CASE("dual action closure matches the defining functional identity") {
  std::mt19937 rng(424242);
  for (int p : {2, 3}) {
    Theory t(Poset::total(4), p);
    auto elems = enumerate_group(Poset::total(4), p, Budget{});
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    for (int trial = 0; trial < 25; ++trial) {
      FMatrix u = elems[pick(rng)];
      FMatrix v = elems[pick(rng)];
      FMatrix lambda = elems[pick(rng)].to_offset();
      FMatrix moved = t.dual_act(u, lambda, v);
      // Stays in the generator-closure orbit.
      CHECK(t.char_of_nil(moved) == t.char_of_nil(lambda));
      // (u lambda v)(x - 1) = lambda(u^{-1} (x - 1) v^{-1}) for all x.
      FMatrix ui = group_inv(u), vi = group_inv(v);
      for (int probe = 0; probe < 8; ++probe) {
        FMatrix x = elems[pick(rng)].to_offset();
        int lhs = moved.pairing(x);
        int rhs = lambda.pairing(mat_mul(mat_mul(ui, x), vi));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("both orbit-sum conventions give the same table as a set") {
  for (int p : {2, 3}) {
    Theory t(Poset::total(3), p);
    // Summing over U(lambda)U instead of U(-lambda)U conjugates each row, so
    // the set of rows must be unchanged.
    std::set<std::string> rows, conj_rows;
    for (int r = 0; r < t.num_chars(); ++r) {
      std::string plain, conj;
      for (int c = 0; c < t.num_classes(); ++c) {
        plain += t.value(r, c).str() + ";";
        conj += t.value(r, c).conj().str() + ";";
      }
      rows.insert(plain);
      conj_rows.insert(conj);
    }
    CHECK(rows == conj_rows);
  }
}

TEST_CASE("values are constant on superclasses and depend only on the orbit") {
  Theory t(Poset::total(4), 3);
  for (int r : {0, t.num_chars() / 2, t.num_chars() - 1}) {
    for (int c = 0; c < t.num_classes(); ++c) {
      const auto& keys = t.superclass(c).keys;
      for (size_t k = 0; k < keys.size(); k += 3) {
        FMatrix u = t.nil_of(keys[k]).to_group();
        CHECK(t.value_at(r, u) == t.value(r, c));
      }
    }
  }
}

TEST_CASE("composite characteristics are rejected") {
  CHECK_THROWS_AS(Theory(Poset::total(2), 4), std::invalid_argument);
  CHECK_THROWS_AS(Theory(Poset::total(2), 1), std::invalid_argument);
  CHECK_NOTHROW(Theory(Poset::total(2), 7));
}

TEST_CASE("class and character lookups reject foreign matrices") {
  Theory t(Poset::last_column(4), 2);
  FMatrix bad = nil(4, 2, {{0, 3, 1}});
  CHECK_THROWS_AS(t.class_of_nil(bad), std::invalid_argument);
  CHECK_THROWS_AS(t.char_of_nil(bad), std::invalid_argument);
}
