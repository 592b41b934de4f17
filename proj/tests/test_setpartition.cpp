#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sct/induction.hpp"
#include "sct/setpartition.hpp"

using namespace sct;

namespace {

SetPartition sp(const std::string& text, int p = 2) {
  return SetPartition::parse(text, p);
}

// Mirror i -> n+1-i; transports the left product to the right product.
SetPartition reversed(const SetPartition& part) {
  SetPartition out(part.n(), part.prime());
  for (const auto& a : part.arcs())
    out.add_arc(part.n() - 1 - a.dst, part.n() - 1 - a.src, a.label);
  return out;
}

Combination reversed(const Combination& comb) {
  Combination out(comb.n(), comb.prime());
  for (const auto& [part, c] : comb.terms()) out.add(reversed(part), c);
  return out;
}

}  // namespace

TEST_CASE("parsing and formatting round trip") {
  SetPartition a = sp("1~2~4|3");
  CHECK(a.n() == 4);
  CHECK(a.arcs() == std::vector<SetPartition::Arc>{{0, 1, 1}, {1, 3, 1}});
  CHECK(a.format() == "1~2~4|3");

  SetPartition b = sp("3~5|2|1~(2)4~6", 3);
  CHECK(b.arcs() ==
        std::vector<SetPartition::Arc>{{0, 3, 2}, {2, 4, 1}, {3, 5, 1}});
  CHECK(b.format() == "1~(2)4~6|2|3~5");
  // The label may also trail the head of the arc.
  CHECK(sp("1~4(2)~6|2|3~5", 3) == b);

  CHECK(sp("1|2|3").num_arcs() == 0);
  CHECK(sp("1").format() == "1");
  CHECK(SetPartition::parse(sp("1~(2)3|2", 3).format(), 3) == sp("1~(2)3|2", 3));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(sp("1~2|2~3"), std::invalid_argument);   // duplicate 2
  CHECK_THROWS_AS(sp("1~3"), std::invalid_argument);       // missing 2
  CHECK_THROWS_AS(sp("1~(0)2", 3), std::invalid_argument); // label 0
  CHECK_THROWS_AS(sp("1~(3)2", 3), std::invalid_argument); // label = p
  CHECK_THROWS_AS(sp("2~1"), std::invalid_argument);       // decreasing arc
  CHECK_THROWS_AS(sp("1~~2"), std::invalid_argument);
  CHECK_THROWS_AS(sp(""), std::invalid_argument);
}

TEST_CASE("matrix correspondence") {
  SetPartition a = sp("1~2~4|3");
  FMatrix m = a.to_matrix();
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 3) == 1);
  CHECK(SetPartition::from_matrix(m) == a);

  CHECK(SetPartition::from_matrix(FMatrix(3, 2)) == sp("1|2|3"));

  FMatrix e13(3, 3);
  e13.set(0, 2, 2);
  CHECK(SetPartition::from_matrix(e13).format() == "1~(2)3|2");

  FMatrix bad(3, 2);
  bad.set(0, 1, 1);
  bad.set(0, 2, 1);
  CHECK_THROWS_AS(SetPartition::from_matrix(bad), std::invalid_argument);
}

TEST_CASE("enumeration counts agree with the dual orbit counts") {
  CHECK(enumerate_partitions(3, 2).size() == 5);
  CHECK(enumerate_partitions(3, 3).size() == 11);
  CHECK(enumerate_partitions(1, 7).size() == 1);
  for (auto [n, p] : {std::pair{2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}, {4, 3}}) {
    auto parts = enumerate_partitions(n, p);
    std::set<std::string> distinct;
    for (const auto& part : parts) distinct.insert(part.format());
    CHECK(distinct.size() == parts.size());
    CHECK(parts.size() == size_t(Theory(Poset::total(n), p).num_chars()));
  }
}

TEST_CASE("right product base and small cases") {
  Pieri eng;
  SUBCASE("inserting at the scan end is a no-op") {
    SetPartition mu = sp("1~2|3");
    CHECK(eng.right(mu, 2, 2) == Combination::single(mu));
  }
  SUBCASE("adding 3 to the empty partition of {1,2}") {
    Combination got = eng.right(sp("1|2|3"), 0, 2);
    Combination want(3, 2);
    want.add(sp("1|2|3"), Rational(1));
    want.add(sp("1|2~3"), Rational(1));
    want.add(sp("1~3|2"), Rational(1));
    CHECK(got == want);
  }
  SUBCASE("coefficients stay nonnegative integers") {
    for (const auto& mu : enumerate_partitions(5, 2)) {
      Combination comb = eng.right(mu.extended_to(6), 0, 5);
      for (const auto& [part, c] : comb.terms()) {
        CHECK(c.is_integer());
        CHECK(c > Rational(0));
      }
    }
  }
}

TEST_CASE("the printed seven-element expansion") {
  Pieri eng;
  Combination got = eng.right(sp("1~4~6|2|3~5|7"), 0, 6);
  Combination want(7, 2);
  want.add(sp("1~4~6|2|3~5|7"), Rational(1));
  want.add(sp("1~4~6~7|2|3~5"), Rational(1));
  want.add(sp("1~4~6|2~7|3~5"), Rational(1));
  want.add(sp("1~4~6|2|3~5~7"), Rational(1));
  want.add(sp("1~7|2|3~5|4~6"), Rational(2));
  want.add(sp("1~7|2~4~6|3~5"), Rational(1));
  want.add(sp("1~4~7|2|3~5|6"), Rational(1));
  want.add(sp("1~4~7|2|3~5~6"), Rational(1));
  want.add(sp("1~4~6|2|3~7|5"), Rational(2));
  CHECK(got == want);
  CHECK(got.size() == 9);
}

TEST_CASE("left product mirrors the right product") {
  Pieri eng;
  SUBCASE("base case") {
    SetPartition mu = sp("1|2~3");
    CHECK(eng.left(0, 0, mu) == Combination::single(mu));
  }
  SUBCASE("{1} *_3 {2~3}") {
    Combination got = eng.left(0, 2, sp("1|2~3"));
    Combination want(3, 2);
    want.add(sp("1|2~3"), Rational(1));
    want.add(sp("1~2~3"), Rational(1));
    want.add(sp("1~3|2"), Rational(1));
    CHECK(got == want);
  }
  SUBCASE("index reversal identity on all diagrams, q = 2 and 3") {
    for (int p : {2, 3}) {
      for (const auto& mu : enumerate_partitions(4, p)) {
        SetPartition lifted = mu.extended_to(5);
        // {j} *_l mu with the insert at the bottom mirrors mu' *_i {k}.
        Combination left = eng.left(0, 4, reversed(lifted));
        Combination right = eng.right(lifted, 0, 4);
        CHECK(reversed(left) == right);
      }
    }
  }
}

TEST_CASE("iterated combinatorial induction") {
  SUBCASE("m = n is the singleton combination") {
    CHECK(induce_combinatorial(sp("1~2"), 2) == Combination::single(sp("1~2")));
  }
  SUBCASE("1~2 induced into U_3") {
    Combination got = induce_combinatorial(sp("1~2"), 3);
    Combination want(3, 2);
    want.add(sp("1~2|3"), Rational(1));
    want.add(sp("1~2~3"), Rational(1));
    want.add(sp("1~3|2"), Rational(1));
    CHECK(got == want);
  }
  SUBCASE("oracle equivalence with brute-force induction at n = 3") {
    for (int p : {2, 3}) {
      Embedding e(Poset::last_column(3), Poset::total(3), p);
      Theory& G = e.super();
      Theory& H = e.sub();
      for (const auto& mu : enumerate_partitions(2, p)) {
        auto f = H.character_row(H.char_of_nil(mu.extended_to(3).to_matrix()));
        PointFunction ind = e.induce(f);
        REQUIRE(ind.is_superclass_function);
        Theory::ClassFunction on_c;
        for (int c = 0; c < G.num_classes(); ++c)
          on_c.push_back(ind.by_key[size_t(G.superclass(c).keys[0])]);
        auto brute = G.decompose(on_c);
        Combination comb = induce_combinatorial(mu, 3);
        for (int r = 0; r < G.num_chars(); ++r)
          CHECK(brute[size_t(r)] ==
                comb.coeff(SetPartition::from_matrix(G.char_rep(r))));
      }
    }
  }
  SUBCASE("degree identity guards the fold") {
    Combination comb = induce_combinatorial(sp("1~4~6|2|3~5"), 7);
    Rational total(0);
    for (const auto& [part, c] : comb.terms()) {
      Rational deg(1);
      for (int k = 0; k < part.dim_exponent(); ++k) deg *= Rational(2);
      total += c * deg;
    }
    CHECK(total == Rational(16 * 64));  // 2^dim(mu) * |U_7| / |U_6|
  }
}

TEST_CASE("combinatorial restriction") {
  SUBCASE("isolated last element just drops") {
    Combination got = restrict_combinatorial(sp("1~2|3"));
    CHECK(got == Combination::single(sp("1~2")));
  }
  SUBCASE("restriction of the degree-2 character of U_3") {
    Combination got = restrict_combinatorial(sp("1~3|2"));
    Combination want(2, 2);
    want.add(sp("1|2"), Rational(1));
    want.add(sp("1~2"), Rational(1));
    CHECK(got == want);
  }
  SUBCASE("matches brute-force restriction for all of S_4(2)") {
    Embedding e(Poset::last_column(4), Poset::total(4), 2);
    Theory& G = e.super();
    Theory& H = e.sub();
    for (const auto& lambda : enumerate_partitions(4, 2)) {
      auto res = e.restrict_down(G.character_row(G.char_of_nil(lambda.to_matrix())));
      auto brute = H.decompose(res);
      Combination comb = restrict_combinatorial(lambda);
      std::vector<Rational> expected(size_t(H.num_chars()), Rational(0));
      for (const auto& [part, c] : comb.terms())
        expected[size_t(H.char_of_nil(part.extended_to(4).to_matrix()))] += c;
      CHECK(brute == expected);
    }
  }
}

TEST_CASE("first-row induction differs from last-column induction") {
  SUBCASE("base case n = 2") {
    Combination got = induce_first_row(sp("1|2"));
    Combination want(2, 2);
    want.add(sp("1|2"), Rational(1));
    want.add(sp("1~2"), Rational(1));
    CHECK(got == want);
  }
  SUBCASE("matches brute force for the first-row embedding at n = 3") {
    Embedding e(Poset::first_row(3), Poset::total(3), 2);
    Theory& G = e.super();
    Theory& H = e.sub();
    // mu = all singletons of {2,3}: the trivial character of the subgroup.
    PointFunction ind = e.induce(H.trivial_character());
    REQUIRE(ind.is_superclass_function);
    Theory::ClassFunction on_c;
    for (int c = 0; c < G.num_classes(); ++c)
      on_c.push_back(ind.by_key[size_t(G.superclass(c).keys[0])]);
    auto brute = G.decompose(on_c);
    Combination comb = induce_first_row(sp("1|2|3"));
    for (int r = 0; r < G.num_chars(); ++r)
      CHECK(brute[size_t(r)] ==
            comb.coeff(SetPartition::from_matrix(G.char_rep(r))));
  }
  SUBCASE("the two embeddings induce different combinations at n = 3") {
    // Last-column induction of the empty partition of {1,2} versus first-row
    // induction of the empty partition of {2,3}.
    Combination last = induce_combinatorial(sp("1|2"), 3);
    Combination first = induce_first_row(sp("1|2|3"));
    CHECK(last != first);
    CHECK(last.coeff(sp("1|2~3")) == Rational(1));
    CHECK(first.coeff(sp("1|2~3")) == Rational(0));
    CHECK(first.coeff(sp("1~2|3")) == Rational(1));
    CHECK(last.coeff(sp("1~2|3")) == Rational(0));
  }
}

TEST_CASE("left minimal functionals") {
  SUBCASE("no arcs over one point: every functional on n_2 qualifies") {
    for (int p : {2, 3}) {
      auto set = left_minimal_set(sp("1", p), p);
      CHECK(set.size() == size_t(p));
    }
  }
  SUBCASE("1~2 has the three induced constituents") {
    auto set = left_minimal_set(sp("1~2"), 2);
    CHECK(set.size() == 3);
    Theory G(Poset::total(3), 2);
    Combination comb = induce_combinatorial(sp("1~2"), 3);
    Combination from_set(3, 2);
    for (const auto& lam : set)
      from_set.add(SetPartition::from_matrix(G.char_rep(G.char_of_nil(lam))),
                   Rational(1));
    CHECK(from_set == comb);
  }
  SUBCASE("the sum of left-minimal supercharacters is the induced character") {
    for (int p : {2, 3}) {
      Theory G(Poset::total(3), p);
      for (const auto& mu : enumerate_partitions(2, p)) {
        Combination comb = induce_combinatorial(mu, 3);
        Combination from_set(3, p);
        for (const auto& lam : left_minimal_set(mu, p))
          from_set.add(SetPartition::from_matrix(G.char_rep(G.char_of_nil(lam))),
                       Rational(1));
        CHECK(from_set == comb);
      }
    }
  }
  SUBCASE("counting identity: q^{n-1} |U_{n-1} mu| functionals restrict into the orbit") {
    for (int n : {3, 4}) {
      Theory H(Poset::total(n - 1), 2);
      Theory G(Poset::total(n), 2);
      for (const auto& mu : enumerate_partitions(n - 1, 2)) {
        FMatrix mu_mat = mu.to_matrix();
        auto mu_orbit = H.left_orbit_of(mu_mat);
        uint64_t count = 0;
        for (uint64_t k = 0; k < G.order(); ++k) {
          FMatrix lam = G.nil_of(k);
          FMatrix res(n - 1, 2);
          for (int i = 0; i + 1 < n; ++i)
            for (int j = i + 1; j + 1 < n; ++j) res.set(i, j, lam.at(i, j));
          uint64_t rk = H.key_of(res);
          if (std::find(mu_orbit.begin(), mu_orbit.end(), rk) != mu_orbit.end())
            ++count;
        }
        uint64_t expect = (uint64_t(1) << (n - 1)) * mu_orbit.size();
        CHECK(count == expect);
      }
    }
  }
}

TEST_CASE("left minimality predicate agrees with the semantic construction") {
  for (int n : {2, 3, 4}) {
    Theory G(Poset::total(n), 2);
    for (const auto& mu : enumerate_partitions(n - 1, 2)) {
      auto set = left_minimal_set(mu, 2);
      std::set<uint64_t> member_keys;
      for (const auto& lam : set) member_keys.insert(G.key_of(lam));
      FMatrix mu_mat = mu.to_matrix();
      for (uint64_t k = 0; k < G.order(); ++k) {
        FMatrix lam = G.nil_of(k);
        bool restricts = true;
        for (int i = 0; i + 1 < n && restricts; ++i)
          for (int j = i + 1; j + 1 < n && restricts; ++j)
            restricts = (lam.at(i, j) == mu_mat.at(i, j));
        if (!restricts) continue;
        CHECK(is_left_minimal(lam, mu) == (member_keys.count(k) > 0));
      }
    }
  }
  SUBCASE("embedding with an empty last column is always left minimal") {
    SetPartition mu = sp("1~2|3");
    CHECK(is_left_minimal(mu.extended_to(4).to_matrix(), mu));
  }
}
