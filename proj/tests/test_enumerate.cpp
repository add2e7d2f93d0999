#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coopkit/enumerate.hpp"

using namespace coopkit;

TEST_CASE("hoops of size up to two") {
  auto hoops = enumerate_hoops(2);
  REQUIRE(hoops.size() == 2);  // trivial and the Boolean chain
  CHECK(hoops[0].size == 1);
  CHECK(hoops[1].size == 2);
  CHECK(canonical_key(hoops[1]) == canonical_key(make_boolean()));
}

TEST_CASE("hoops of size up to three include both chains") {
  auto hoops = enumerate_hoops(3);
  auto has = [&](const FiniteAlgebra& a) {
    auto key = canonical_key(a);
    return std::any_of(hoops.begin(), hoops.end(),
                       [&](const FiniteAlgebra& h) { return canonical_key(h) == key; });
  };
  CHECK(has(make_lukasiewicz_chain(3)));
  CHECK(has(make_goedel_chain(3)));
  for (const auto& h : hoops)
    CHECK(check_laws(h, LawMode::exhaustive(), {Law::cwc}).all_pass());
}

TEST_CASE("enumeration output is canonical and class-correct") {
  auto pocrims = enumerate_algebras(3, AlgebraClass::Pocrim);
  auto hoops = enumerate_hoops(3);
  CHECK(pocrims.size() >= hoops.size());
  for (const auto& p : pocrims) {
    CHECK(check_laws(p, LawMode::exhaustive(), laws_for_class(AlgebraClass::Pocrim))
              .all_pass());
    CHECK(canonical_key(p) == canonical_key(p));  // stable
  }
  // no duplicates up to isomorphism
  std::vector<std::vector<int>> keys;
  for (const auto& p : pocrims) keys.push_back(canonical_key(p));
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("idempotent enumeration satisfies cwc automatically") {
  for (const auto& a : enumerate_algebras(3, AlgebraClass::IdempotentPocrim)) {
    CHECK(check_laws(a, LawMode::exhaustive(), {Law::idem, Law::cwc}).all_pass());
  }
}

TEST_CASE("no nontrivial coops among raw tables of size two") {
  CHECK(count_small_coops(2) == 0);
}
