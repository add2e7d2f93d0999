#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coopkit/enumerate.hpp"
#include "coopkit/hoop_lab.hpp"
#include "coopkit/laws.hpp"

using namespace coopkit;

TEST_CASE("generated ideals") {
  FiniteAlgebra l3 = make_lukasiewicz_chain(3);
  CHECK(generate_ideal(l3, {1}).elements == std::vector<int>{0, 1, 2});  // 1/2 generates all
  FiniteAlgebra g3 = make_goedel_chain(3);
  CHECK(generate_ideal(g3, {1}).elements == std::vector<int>{0, 1});
  CHECK(generate_ideal(g3, {}).elements == std::vector<int>{0});
}

TEST_CASE("complete ideal lists") {
  CHECK(all_ideals(make_boolean()).size() == 2);
  CHECK(all_ideals(make_lukasiewicz_chain(3)).size() == 2);
  CHECK(all_ideals(make_goedel_chain(3)).size() == 3);
}

TEST_CASE("quotients by ideals") {
  FiniteAlgebra g3 = make_goedel_chain(3);
  auto ideals = all_ideals(g3);
  auto mid = std::find_if(ideals.begin(), ideals.end(),
                          [](const Ideal& i) { return i.elements.size() == 2; });
  REQUIRE(mid != ideals.end());
  auto [q, proj] = quotient_by_ideal(g3, *mid);
  CHECK(q.size == 2);
  CHECK(canonical_key(q) == canonical_key(make_boolean()));
  // ker(projection) = I
  std::vector<int> kernel;
  for (int x = 0; x < g3.size; ++x)
    if (proj[x] == q.zero) kernel.push_back(x);
  CHECK(kernel == mid->elements);

  auto [same, _] = quotient_by_ideal(g3, Ideal{{0}});
  CHECK(canonical_key(same) == canonical_key(g3));
  auto [trivial, __] = quotient_by_ideal(g3, Ideal{{0, 1, 2}});
  CHECK(trivial.size == 1);
}

TEST_CASE("classification of the desk examples") {
  auto l3 = classify(make_lukasiewicz_chain(3));
  CHECK(l3.simple);
  CHECK(l3.archimedean);
  CHECK(l3.linear);
  CHECK(l3.depths == std::vector<int>{0, 2, 1});

  auto g3 = classify(make_goedel_chain(3));
  CHECK(!g3.simple);
  CHECK(!g3.archimedean);  // a + a = a stays below the top
  CHECK(g3.linear);

  auto triv = classify(make_trivial());
  CHECK(!triv.simple);
  CHECK(triv.linear);
}

TEST_CASE("monolith and the support/fixed split") {
  FiniteAlgebra g3 = make_goedel_chain(3);
  auto dec = monolith_and_decomposition(g3);
  REQUIRE(dec.has_value());
  CHECK(dec->monolith.elements == std::vector<int>{0, 1});
  CHECK(dec->support == std::vector<int>{0, 1});
  CHECK(dec->fixed == std::vector<int>{0, 2});
  CHECK(dec->all_properties_hold());

  FiniteAlgebra l3 = make_lukasiewicz_chain(3);
  auto simple_dec = monolith_and_decomposition(l3);
  REQUIRE(simple_dec.has_value());
  CHECK(simple_dec->monolith.elements == std::vector<int>{0, 1, 2});
  CHECK(simple_dec->fixed == std::vector<int>{0});
  CHECK(simple_dec->support == std::vector<int>{0, 1, 2});
  CHECK(simple_dec->all_properties_hold());

  // two incomparable minimal ideals: not subdirectly irreducible
  FiniteAlgebra square = product_algebra(make_boolean(), make_boolean());
  CHECK(!monolith_and_decomposition(square).has_value());

  FiniteAlgebra broken = make_goedel_chain(3);
  broken.plus[1][2] = broken.plus[2][1] = 0;
  CHECK_THROWS_AS(monolith_and_decomposition(broken), NotAHoop);
}

TEST_CASE("congruences match ideals on small hoops") {
  for (const auto& h : enumerate_hoops(3)) {
    CAPTURE(h.size);
    CHECK(count_congruences(h) == static_cast<long long>(all_ideals(h).size()));
  }
}

TEST_CASE("congruence extension property spot checks") {
  for (const auto& h : enumerate_hoops(3)) {
    for (const auto& carrier : all_subalgebras(h)) {
      FiniteAlgebra c = restrict_to(h, carrier);
      for (const auto& ideal_c : all_ideals(c)) {
        std::vector<int> original;
        for (int x : ideal_c.elements) original.push_back(carrier[x]);
        Ideal extended = generate_ideal(h, original);
        std::vector<int> back;
        for (int x : extended.elements)
          if (std::binary_search(carrier.begin(), carrier.end(), x)) back.push_back(x);
        CHECK(back == original);
      }
    }
  }
}

TEST_CASE("simple hoops satisfy the stabilizer dichotomy") {
  // y = x -> y forces x = 0 or y = 0 on simple hoops
  for (const auto& h : enumerate_hoops(4)) {
    if (!classify(h).simple) continue;
    for (int x = 0; x < h.size; ++x)
      for (int y = 0; y < h.size; ++y)
        if (h.imp_table[x][y] == y) CHECK((x == h.zero || y == h.zero));
  }
}

TEST_CASE("implicative stabilizers are ideals") {
  for (const auto& h : enumerate_hoops(3)) {
    for (int x = 0; x < h.size; ++x) CHECK(is_ideal(h, implicative_stabilizer(h, x)));
  }
}
