#include <catch2/catch_amalgamated.hpp>

#include "catkit/fixtures.hpp"
#include "catkit/precat.hpp"

using namespace catkit;
namespace fx = catkit::fixtures;

namespace {

FinGroupoid z2_groupoid() {
  FinGroupoid g;
  g.object_count = 1;
  g.path_size = {{2}};
  g.refl = {0};
  g.concat = {{{Table2{{0, 1}, {1, 0}}}}};
  g.inv = {{{0, 1}}};
  return g;
}

// Brute-force iso counter, independent of iso_set: tries every candidate
// inverse by table evaluation.
int count_isos_oracle(const FinPrecategory& C, ObjId a, ObjId b) {
  int n = 0;
  for (int f = 0; f < C.hom_size[a][b]; ++f) {
    bool has_inverse = false;
    for (int g = 0; g < C.hom_size[b][a]; ++g) {
      if (C.comp[a][b][a][f][g] == C.identity[a] &&
          C.comp[b][a][b][g][f] == C.identity[b])
        has_inverse = true;
    }
    if (has_inverse) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("validators accept the named fixtures", "[precat]") {
  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    CHECK(validate_precategory(cat).ok());
  }
  CHECK(validate_precategory(fx::m3()).ok());
}

TEST_CASE("corrupting a unit entry is caught with the right law", "[precat]") {
  auto C = fx::walking_arrow();
  // comp(f, id_0): entry [id][f] of comp[0][0][1]
  C.comp[0][0][1][0][0] = 1;  // out of range on purpose
  auto rep = validate_precategory(C);
  CHECK_FALSE(rep.ok());
  CHECK(rep.has_law("structure"));

  auto D = fx::z2();
  D.comp[0][0][0][0][1] = 0;  // s o id = id instead of s: breaks unit-right
  auto rep2 = validate_precategory(D);
  CHECK_FALSE(rep2.ok());
  CHECK(rep2.count_law("unit-right") == 1);

  auto E = fx::z2();
  E.comp[0][0][0][1][0] = 0;  // id o s = id instead of s: breaks unit-left
  auto rep3 = validate_precategory(E);
  CHECK_FALSE(rep3.ok());
  CHECK(rep3.count_law("unit-left") == 1);
}

TEST_CASE("z2 associativity holds by table evaluation", "[precat]") {
  auto C = fx::z2();
  // direct oracle over all 8 triples
  for (int f = 0; f < 2; ++f)
    for (int g = 0; g < 2; ++g)
      for (int h = 0; h < 2; ++h) {
        int gf = C.comp[0][0][0][f][g];
        int lhs = C.comp[0][0][0][gf][h];
        int hg = C.comp[0][0][0][g][h];
        int rhs = C.comp[0][0][0][f][hg];
        CHECK(lhs == rhs);
      }
  CHECK(validate_precategory(C).ok());
}

TEST_CASE("iso_witness", "[precat]") {
  auto C = fx::walking_arrow();
  CHECK(iso_witness(C, C.id(0)) == C.id(0));
  CHECK_FALSE(iso_witness(C, MorRef{0, 1, 0}).has_value());

  auto Z = fx::z2();
  MorRef s{0, 0, 1};
  CHECK(iso_witness(Z, s) == s);  // s o s = id
}

TEST_CASE("iso_set", "[precat]") {
  auto D = fx::divposet();
  CHECK(iso_set(D, 0, 1).empty());

  auto Ch = fx::chaotic2();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(iso_set(Ch, a, b).size() == 1);

  auto F = fx::finset3();
  CHECK(iso_set(F, 2, 2).size() == 2);
  CHECK(count_isos_oracle(F, 2, 2) == 2);
  CHECK(iso_set(F, 3, 3).size() == 6);
  CHECK(count_isos_oracle(F, 3, 3) == 6);
  CHECK(iso_set(F, 2, 3).empty());
}

TEST_CASE("idtoiso basics", "[precat]") {
  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    for (int a = 0; a < cat.object_count; ++a)
      CHECK(cat.idtoiso(cat.paths.refl_path(a)) == cat.id(a));
  }
  auto R = with_core_paths(fx::chaotic2());
  REQUIRE(R.paths.path_size[0][1] == 1);
  CHECK(R.idtoiso(PathRef{0, 1, 0}) == MorRef{0, 1, 0});
}

TEST_CASE("idtoiso is functorial on concatenation", "[precat]") {
  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    for (int a = 0; a < cat.object_count; ++a)
      for (int b = 0; b < cat.object_count; ++b)
        for (int c = 0; c < cat.object_count; ++c)
          for (int p = 0; p < cat.paths.path_size[a][b]; ++p)
            for (int q = 0; q < cat.paths.path_size[b][c]; ++q) {
              PathRef pp{a, b, p}, qq{b, c, q};
              CHECK(cat.idtoiso(cat.paths.concat_paths(pp, qq)) ==
                    cat.compose(cat.idtoiso(qq), cat.idtoiso(pp)));
            }
  }
}

TEST_CASE("isotoid", "[precat]") {
  auto D = fx::divposet();
  for (int a = 0; a < 4; ++a)
    CHECK(isotoid(D, D.id(a)) == D.paths.refl_path(a));

  auto F = fx::finset3();
  // the transposition is the non-identity iso at object 2
  auto isos = iso_set(F, 2, 2);
  REQUIRE(isos.size() == 2);
  MorRef transposition =
      isos[0].first == F.id(2) ? isos[1].first : isos[0].first;
  PathRef p = isotoid(F, transposition);
  CHECK(p != F.paths.refl_path(2));
  CHECK(F.idtoiso(p) == transposition);

  CHECK_THROWS_AS(isotoid(fx::chaotic2(), MorRef{0, 1, 0}), NotUnivalent);
  CHECK_THROWS_AS(isotoid(D, MorRef{0, 1, 0}), NotAnIso);
}

TEST_CASE("isotoid reverses concatenation", "[precat]") {
  auto F = fx::finset3();
  // isotoid(f o e) = isotoid(e) . isotoid(f)
  for (auto [e, einv] : iso_set(F, 2, 2))
    for (auto [f, finv] : iso_set(F, 2, 2)) {
      PathRef lhs = isotoid(F, F.compose(f, e));
      PathRef rhs = F.paths.concat_paths(isotoid(F, e), isotoid(F, f));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("transport_hom", "[precat]") {
  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    for (int a = 0; a < cat.object_count; ++a)
      for (int b = 0; b < cat.object_count; ++b)
        for (int f = 0; f < cat.hom_size[a][b]; ++f) {
          MorRef m{a, b, f};
          CHECK(transport_hom(cat, cat.paths.refl_path(a),
                              cat.paths.refl_path(b), m) == m);
        }
  }
}

TEST_CASE("transporting an identity along (p,p) gives an identity",
          "[precat]") {
  auto F = fx::finset3();
  for (int a = 0; a < F.object_count; ++a)
    for (int p = 0; p < F.paths.path_size[a][a]; ++p) {
      PathRef pp{a, a, p};
      CHECK(transport_hom(F, pp, pp, F.id(a)) ==
            F.id(a));
    }
}

TEST_CASE("transport in finset conjugates tables", "[precat]") {
  auto F = fx::finset3();
  // non-iso map [0,0]: 2 -> 2 transported along the transposition path
  auto perms = enumerate_permutations(2);
  REQUIRE(perms[1].table == std::vector<int>{1, 0});
  int swap_path = 1;  // permutations sorted lexicographically: id, swap
  PathRef p{2, 2, swap_path};
  MorRef constant0{2, 2, map_rank(FinMap{2, 2, {0, 0}})};
  MorRef got = transport_hom(F, p, p, constant0);
  // oracle: conjugate the table directly
  FinMap swap{2, 2, {1, 0}};
  FinMap expect = compose_maps(swap, compose_maps(FinMap{2, 2, {0, 0}},
                                                  invert_map(swap)));
  CHECK(got.index == map_rank(expect));
}

TEST_CASE("univalence decisions", "[precat]") {
  auto rep = is_univalent(fx::chaotic2());
  CHECK_FALSE(rep.is_univalent);
  REQUIRE(rep.failures.size() == 2);
  for (const auto& f : rep.failures) {
    CHECK(f.path_count == 0);
    CHECK(f.iso_count == 1);
    CHECK(f.reason == UnivalenceFailure::NotSurjective);
    CHECK(f.a != f.b);
  }

  CHECK(is_univalent(fx::divposet()).is_univalent);
  CHECK(is_univalent(fx::finset3()).is_univalent);
  CHECK(is_univalent(with_core_paths(fx::chaotic2())).is_univalent);
  CHECK_FALSE(is_univalent(fx::z2()).is_univalent);
}

TEST_CASE("univalence failure reports non-injective J", "[precat]") {
  // one object, two paths both sent to the identity
  FinPrecategory C = fx::terminal();
  C.paths = z2_groupoid();
  C.transport = {{{0, 0}}};
  REQUIRE(validate_precategory(C).ok());
  auto rep = is_univalent(C);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].reason == UnivalenceFailure::NotInjective);
  CHECK(rep.failures[0].path_count == 2);
  CHECK(rep.failures[0].iso_count == 1);
}

TEST_CASE("classify", "[precat]") {
  auto d = classify(fx::divposet());
  CHECK(d.strict);
  CHECK(d.gaunt);
  CHECK(d.preorder);

  auto f = classify(fx::finset3());
  CHECK_FALSE(f.strict);
  CHECK_FALSE(f.gaunt);
  CHECK_FALSE(f.preorder);

  auto c = classify(fx::chaotic2());
  CHECK(c.strict);
  CHECK(c.preorder);
  CHECK_FALSE(c.gaunt);
}

TEST_CASE("gaunt three-way equivalence on fixtures", "[precat]") {
  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    bool uni = is_univalent(cat).is_univalent;
    bool strict = classify(cat).strict;
    bool thin_isos = true;
    for (int a = 0; a < cat.object_count; ++a)
      for (int b = 0; b < cat.object_count; ++b)
        if (iso_set(cat, a, b).size() > 1) thin_isos = false;
    CHECK(classify(cat).gaunt == (uni && strict && thin_isos));
  }
}

TEST_CASE("opposite", "[precat]") {
  CHECK(opposite(fx::terminal()) == fx::terminal());

  auto W = opposite(fx::walking_arrow());
  CHECK(W.hom_size[1][0] == 1);
  CHECK(W.hom_size[0][1] == 0);
  CHECK(validate_precategory(W).ok());

  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    CHECK(validate_precategory(opposite(cat)).ok());
    CHECK(opposite(opposite(cat)) == cat);
  }
}

TEST_CASE("product", "[precat]") {
  for (const auto& [name, cat] : fx::all()) {
    if (cat.object_count > 2) continue;  // keep sizes modest
    INFO(name);
    CHECK(product(cat, fx::terminal()) == cat);
    CHECK(validate_precategory(product(cat, fx::walking_arrow())).ok());
  }

  auto W = fx::walking_arrow();
  auto WW = product(W, W);
  CHECK(WW.object_count == 4);
  CHECK(WW.hom_size[0][3] == 1);  // (0,0) -> (1,1)
  long long total = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          total += W.hom_size[a][c] * W.hom_size[b][d];
  CHECK(WW.total_morphisms() == total);
  CHECK(total == 9);
}

TEST_CASE("mk_discrete", "[precat]") {
  CHECK(mk_discrete(discrete_groupoid(1)) == fx::terminal());

  auto D2 = mk_discrete(discrete_groupoid(2));
  CHECK(D2.total_morphisms() == 2);
  CHECK(is_univalent(D2).is_univalent);

  auto BZ2 = mk_discrete(z2_groupoid());
  CHECK(validate_precategory(BZ2).ok());
  CHECK(is_univalent(BZ2).is_univalent);
  CHECK(iso_set(BZ2, 0, 0).size() == 2);
}

TEST_CASE("mk_discrete is always univalent", "[precat]") {
  std::vector<FinGroupoid> gs = {
      discrete_groupoid(0), discrete_groupoid(3), z2_groupoid(),
      product_groupoid(z2_groupoid(), discrete_groupoid(2)),
      with_core_paths(fx::chaotic2()).paths};
  for (const auto& g : gs) {
    auto C = mk_discrete(g);
    CHECK(validate_precategory(C).ok());
    CHECK(is_univalent(C).is_univalent);
  }
}

TEST_CASE("mk_chaotic", "[precat]") {
  CHECK(mk_chaotic(1) == fx::terminal());
  CHECK(validate_precategory(mk_chaotic(2)).ok());
  CHECK_FALSE(is_univalent(mk_chaotic(2)).is_univalent);
  auto empty = mk_chaotic(0);
  CHECK(validate_precategory(empty).ok());
  CHECK(is_univalent(empty).is_univalent);
}

TEST_CASE("mk_preorder", "[precat]") {
  auto D = fx::divposet();
  CHECK(validate_precategory(D).ok());
  CHECK(is_univalent(D).is_univalent);

  std::vector<std::vector<char>> total = {{1, 1}, {1, 1}};
  CHECK(mk_preorder(total) == mk_chaotic(2));

  std::vector<std::vector<char>> norefl = {{0}};
  CHECK_THROWS_AS(mk_preorder(norefl), NotReflexive);
  // 0 <= 1 <= 2 but 0 <= 2 missing
  std::vector<std::vector<char>> notrans = {
      {1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  CHECK_THROWS_AS(mk_preorder(notrans), NotTransitive);
}

TEST_CASE("mk_finset_skeleton", "[precat]") {
  auto F = fx::finset3();
  CHECK(F.object_count == 4);
  CHECK(F.hom_size[2][3] == 9);
  CHECK(F.paths.path_size[2][2] == 2);
  CHECK(F.paths.path_size[3][3] == 6);
  CHECK(F.paths.path_size[2][3] == 0);
  CHECK(validate_precategory(F).ok());
  CHECK(is_univalent(F).is_univalent);
}

TEST_CASE("iso_witness of J(p) is J(p^-1)", "[precat]") {
  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    for (int a = 0; a < cat.object_count; ++a)
      for (int b = 0; b < cat.object_count; ++b)
        for (int p = 0; p < cat.paths.path_size[a][b]; ++p) {
          PathRef pp{a, b, p};
          CHECK(iso_witness(cat, cat.idtoiso(pp)) ==
                cat.idtoiso(cat.paths.inverse(pp)));
        }
  }
}

TEST_CASE("inverses are unique", "[precat]") {
  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    for (int a = 0; a < cat.object_count; ++a)
      for (int b = 0; b < cat.object_count; ++b)
        for (int f = 0; f < cat.hom_size[a][b]; ++f) {
          int inverses = 0;
          for (int g = 0; g < cat.hom_size[b][a]; ++g)
            if (cat.comp[a][b][a][f][g] == cat.identity[a] &&
                cat.comp[b][a][b][g][f] == cat.identity[b])
              ++inverses;
          CHECK(inverses <= 1);
        }
  }
}

TEST_CASE("core paths leave homs untouched and saturate", "[precat]") {
  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    auto R = with_core_paths(cat);
    CHECK(R.hom_size == cat.hom_size);
    CHECK(R.comp == cat.comp);
    CHECK(validate_precategory(R).ok());
    CHECK(is_univalent(R).is_univalent);
  }
}
