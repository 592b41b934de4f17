#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sct/induction.hpp"

using namespace sct;

// The OpenMP paths must reproduce the serial reference bit for bit: the
// parallel reductions are integer count merges and independent rows, so the
// results are order-insensitive.

TEST_CASE("character tables agree between serial and parallel builds") {
  for (auto [spec, p] : {std::pair{std::string("total:5"), 2},
                         {std::string("total:4"), 3},
                         {std::string("chain-Um:5:2"), 2}}) {
    Poset P = Poset::parse_spec(spec);
    Theory serial(P, p, Budget{}, /*parallel=*/false);
    Theory parallel(P, p, Budget{}, /*parallel=*/true);
    REQUIRE(serial.num_classes() == parallel.num_classes());
    REQUIRE(serial.num_chars() == parallel.num_chars());
    for (int r = 0; r < serial.num_chars(); ++r) {
      CHECK(serial.char_rep(r) == parallel.char_rep(r));
      for (int c = 0; c < serial.num_classes(); ++c)
        CHECK(serial.value(r, c) == parallel.value(r, c));
    }
  }
}

TEST_CASE("superinduction counts agree between serial and parallel kernels") {
  for (auto [sub, super] :
       {std::pair{Poset::last_column(4), Poset::total(4)},
        std::pair{Poset::product(2, 2), Poset::total(4)}}) {
    Embedding serial(sub, super, 2, Budget{}, /*parallel=*/false);
    Embedding parallel(sub, super, 2, Budget{}, /*parallel=*/true);
    CHECK(serial.sind_class_counts() == parallel.sind_class_counts());
    CHECK(serial.ind_element_counts() == parallel.ind_element_counts());
    for (int r = 0; r < serial.sub().num_chars(); ++r) {
      auto f = serial.sub().character_row(r);
      CHECK(serial.superinduce(f) == parallel.superinduce(f));
    }
  }
}
