#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coopkit/laws.hpp"
#include "coopkit/models.hpp"

using namespace coopkit;

TEST_CASE("dense standard models satisfy their law sets") {
  auto capped = DyadicModel::capped(Dyadic(1));
  auto rep = check_laws(capped, LawMode::sampled(1000, 42),
                        laws_for_class(AlgebraClass::InvolutiveCoop));
  CHECK(rep.all_pass());
  auto rep_csd = check_laws(capped, LawMode::sampled(1000, 42), {Law::csd});
  CHECK(rep_csd.all_pass());

  auto unbounded = RationalModel::unbounded();
  CHECK(check_laws(unbounded, LawMode::sampled(1000, 42), laws_for_class(AlgebraClass::Coop))
            .all_pass());
}

TEST_CASE("the two-element idempotent chain is a Boolean hoop") {
  FiniteAlgebra b = make_boolean();
  auto rep = check_laws(b, LawMode::exhaustive(),
                        {Law::cwc, Law::idem, Law::ann, Law::inv});
  CHECK(rep.all_pass());
  CHECK(check_laws(b, LawMode::exhaustive(),
                   laws_for_class(AlgebraClass::InvolutiveIdempotentPocrim))
            .all_pass());
}

TEST_CASE("law failures carry re-verifiable witnesses") {
  // Lukasiewicz 3-chain with a bogus halving table
  FiniteAlgebra l3 = make_lukasiewicz_chain(3);
  l3.half_table = std::vector<int>{0, 0, 1};
  auto rep = check_laws(l3, LawMode::exhaustive(), {Law::h});
  auto* h = rep.find(Law::h);
  REQUIRE(h != nullptr);
  CHECK(!h->pass);
  REQUIRE(h->witness.size() == 1);
  int x = h->witness[0];
  CHECK(l3.half(x) != l3.imp(l3.half(x), x));  // the witness really violates [h]

  // broken associativity
  FiniteAlgebra broken = make_goedel_chain(3);
  broken.plus[1][2] = broken.plus[2][1] = 0;
  auto rep2 = check_laws(broken, LawMode::exhaustive(), {Law::m1, Law::o4});
  CHECK(!rep2.all_pass());
  for (const auto& c : rep2.checks) {
    if (c.pass || c.witness.empty()) continue;
    if (c.law == Law::m1) {
      int a = c.witness[0], b = c.witness[1], d = c.witness[2];
      CHECK(broken.plus[broken.plus[a][b]][d] != broken.plus[a][broken.plus[b][d]]);
    }
  }
}

TEST_CASE("laws needing missing structure fail without a witness") {
  auto unbounded = DyadicModel::unbounded();
  auto rep = check_laws(unbounded, LawMode::sampled(10, 1), {Law::ann, Law::inv});
  for (const auto& c : rep.checks) {
    CHECK(!c.pass);
    CHECK(c.witness.empty());
  }
  FiniteAlgebra no_half = make_lukasiewicz_chain(3);
  CHECK(!check_laws(no_half, LawMode::exhaustive(), {Law::h}).all_pass());
}

TEST_CASE("annihilator detection on undesignated tables") {
  FiniteAlgebra l3 = make_lukasiewicz_chain(3);
  l3.one.reset();
  CHECK(find_annihilator(l3) == 2);
  CHECK(check_laws(l3, LawMode::exhaustive(), {Law::ann, Law::inv}).all_pass());
}

TEST_CASE("exhaustive mode rejects dense models") {
  CHECK_THROWS_AS(check_laws(DyadicModel::unbounded(), LawMode::exhaustive(), {Law::m2}),
                  std::invalid_argument);
}

TEST_CASE("class law tables") {
  CHECK(laws_for_class(AlgebraClass::Pocrim).size() == 9);
  CHECK(parse_class("idempotent-hoop") == AlgebraClass::IdempotentPocrim);
  CHECK(class_uses_dense_models(AlgebraClass::Coop));
  CHECK(!class_uses_dense_models(AlgebraClass::Hoop));
  CHECK_THROWS_AS(parse_class("ring"), std::invalid_argument);
}
