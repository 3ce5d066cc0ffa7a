#include <catch2/catch_amalgamated.hpp>

#include "catkit/fin.hpp"

using namespace catkit;

TEST_CASE("compose_maps follows tables", "[fin]") {
  FinMap f{2, 2, {1, 0}};
  FinMap g{2, 2, {1, 0}};
  CHECK(compose_maps(g, f) == identity_map(2));

  FinMap h{3, 2, {0, 1, 1}};
  CHECK(compose_maps(identity_map(2), h) == h);
  CHECK(compose_maps(h, identity_map(3)) == h);
}

TEST_CASE("compose_maps rejects mismatched shapes", "[fin]") {
  FinMap f{2, 3, {0, 1}};
  FinMap g{2, 2, {0, 1}};
  CHECK_THROWS_AS(compose_maps(g, f), DomainMismatch);
}

TEST_CASE("is_bijection", "[fin]") {
  CHECK(is_bijection(identity_map(3)));
  CHECK_FALSE(is_bijection(FinMap{2, 2, {0, 0}}));
  CHECK(is_bijection(FinMap{3, 3, {2, 0, 1}}));
  CHECK_FALSE(is_bijection(FinMap{2, 3, {0, 1}}));
}

TEST_CASE("invert_map", "[fin]") {
  CHECK(invert_map(identity_map(4)) == identity_map(4));

  FinMap f{3, 3, {2, 0, 1}};
  FinMap g = invert_map(f);
  CHECK(g.table == std::vector<int>{1, 2, 0});
  CHECK(compose_maps(g, f) == identity_map(3));
  CHECK(compose_maps(f, g) == identity_map(3));

  CHECK_THROWS_AS(invert_map(FinMap{2, 2, {0, 0}}), NotBijective);
}

TEST_CASE("invert_map is an involution on all small bijections", "[fin]") {
  for (int n = 0; n <= 4; ++n)
    for (const FinMap& p : enumerate_permutations(n))
      CHECK(invert_map(invert_map(p)) == p);
}

TEST_CASE("enumerate_maps counts and order", "[fin]") {
  CHECK(enumerate_maps(Fin{0}, Fin{5}).size() == 1);
  CHECK(enumerate_maps(Fin{2}, Fin{2}).size() == 4);

  auto maps = enumerate_maps(Fin{3}, Fin{2});
  REQUIRE(maps.size() == 8);
  // lexicographic: [0,0,0] first, [1,1,1] last
  CHECK(maps.front().table == std::vector<int>{0, 0, 0});
  CHECK(maps[1].table == std::vector<int>{0, 0, 1});
  CHECK(maps.back().table == std::vector<int>{1, 1, 1});
  for (size_t i = 0; i + 1 < maps.size(); ++i)
    CHECK(maps[i].table < maps[i + 1].table);
  // all distinct: strictly ascending order implies it

  CHECK(enumerate_maps(Fin{2}, Fin{0}).empty());
  CHECK(enumerate_maps(Fin{0}, Fin{0}).size() == 1);
}

TEST_CASE("map_rank matches enumeration position", "[fin]") {
  auto maps = enumerate_maps(Fin{3}, Fin{3});
  for (size_t i = 0; i < maps.size(); ++i)
    CHECK(map_rank(maps[i]) == static_cast<int>(i));
}

TEST_CASE("enumeration guard trips", "[fin]") {
  long long saved = guard_limit();
  set_guard_limit(10);
  CHECK_THROWS_AS(enumerate_maps(Fin{10}, Fin{10}), EnumerationTooLarge);
  set_guard_limit(saved);
}

TEST_CASE("composition of maps is associative", "[fin]") {
  auto fs = enumerate_maps(Fin{2}, Fin{3});
  auto gs = enumerate_maps(Fin{3}, Fin{2});
  auto hs = enumerate_maps(Fin{2}, Fin{2});
  for (const auto& f : fs)
    for (const auto& g : gs)
      for (const auto& h : hs)
        CHECK(compose_maps(h, compose_maps(g, f)) ==
              compose_maps(compose_maps(h, g), f));
}

TEST_CASE("enumerate_permutations", "[fin]") {
  CHECK(enumerate_permutations(0).size() == 1);
  CHECK(enumerate_permutations(2).size() == 2);
  CHECK(enumerate_permutations(3).size() == 6);
  auto ps = enumerate_permutations(3);
  for (size_t i = 0; i + 1 < ps.size(); ++i)
    CHECK(ps[i].table < ps[i + 1].table);
}
