#include <catch2/catch_amalgamated.hpp>

#include "catkit/fixtures.hpp"
#include "catkit/functor.hpp"

using namespace catkit;
namespace fx = catkit::fixtures;

namespace {

CatPtr wa() {
  static CatPtr p = wrap(fx::walking_arrow());
  return p;
}
CatPtr ch2() {
  static CatPtr p = wrap(fx::chaotic2());
  return p;
}
CatPtr one() {
  static CatPtr p = wrap(fx::terminal());
  return p;
}
CatPtr z2c() {
  static CatPtr p = wrap(fx::z2());
  return p;
}
CatPtr bz2() {
  static CatPtr p = wrap(mk_discrete(with_core_paths(fx::z2()).paths));
  return p;
}

FinFunctor constant_functor(CatPtr A, CatPtr B, ObjId b) {
  const int n = A->object_count;
  FinFunctor F;
  F.dom = A;
  F.cod = B;
  F.obj_map = constant_map(n, B->object_count, b);
  F.hom_maps.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  F.path_map.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      F.hom_maps[x][y] = constant_map(A->hom_size[x][y],
                                      B->hom_size[b][b], B->identity[b]);
      F.path_map[x][y] =
          constant_map(A->paths.path_size[x][y], B->paths.path_size[b][b],
                       B->paths.refl[b]);
    }
  return F;
}

}  // namespace

TEST_CASE("identity functor validates on all fixtures", "[functor]") {
  for (const auto& [name, cat] : fx::all()) {
    INFO(name);
    CHECK(validate_functor(identity_functor(wrap(cat))).ok());
  }
}

TEST_CASE("structurally impossible functor is rejected", "[functor]") {
  // swapping the walking arrow's objects needs a map into an empty hom
  FinFunctor F;
  F.dom = wa();
  F.cod = wa();
  F.obj_map = FinMap{2, 2, {1, 0}};
  F.hom_maps = {{identity_map(1), FinMap{1, 0, {0}}},
                {FinMap{0, 1, {}}, identity_map(1)}};
  F.path_map = {{identity_map(1), FinMap{0, 0, {}}},
                {FinMap{0, 0, {}}, identity_map(1)}};
  auto rep = validate_functor(F);
  CHECK_FALSE(rep.ok());
  CHECK(rep.has_law("structure"));
}

TEST_CASE("constant functor chaotic(2) -> walking arrow", "[functor]") {
  auto F = constant_functor(ch2(), wa(), 0);
  CHECK(validate_functor(F).ok());
}

TEST_CASE("compose_functors and identities", "[functor]") {
  auto F = constant_functor(ch2(), wa(), 0);
  CHECK(compose_functors(identity_functor(wa()), F) == F);
  CHECK(compose_functors(F, identity_functor(ch2())) == F);
}

TEST_CASE("functor composition is associative as data", "[functor]") {
  auto F = constant_functor(ch2(), wa(), 1);
  auto G = identity_functor(wa());
  auto funcs = enumerate_functors(wa(), wa());
  for (const auto& H : funcs)
    CHECK(compose_functors(H, compose_functors(G, F)) ==
          compose_functors(compose_functors(H, G), F));
}

TEST_CASE("enumerate_functors counts", "[functor]") {
  CHECK(enumerate_functors(wa(), wa()).size() == 3);
  CHECK(enumerate_functors(ch2(), wa()).size() == 2);
  CHECK(enumerate_functors(one(), wa()).size() == 2);
  CHECK(enumerate_functors(z2c(), z2c()).size() == 2);
  // endofunctors of BZ2: paths must follow homs, same two monoid maps
  CHECK(enumerate_functors(bz2(), bz2()).size() == 2);
  // functors from BZ2 to strict Z2 must collapse (J-coherence): only the
  // trivial one survives
  CHECK(enumerate_functors(bz2(), z2c()).size() == 1);
  // strict Z2 to BZ2 keeps both monoid maps
  CHECK(enumerate_functors(z2c(), bz2()).size() == 2);
}

TEST_CASE("enumerated functors all validate, deterministically ordered",
          "[functor]") {
  auto fs1 = enumerate_functors(wa(), wa());
  auto fs2 = enumerate_functors(wa(), wa());
  REQUIRE(fs1.size() == fs2.size());
  for (size_t i = 0; i < fs1.size(); ++i) CHECK(fs1[i] == fs2[i]);
  for (const auto& F : fs1) CHECK(validate_functor(F).ok());
  for (const auto& F : enumerate_functors(z2c(), bz2()))
    CHECK(validate_functor(F).ok());
}

TEST_CASE("validate_nat_trans", "[functor]") {
  auto F = constant_functor(ch2(), wa(), 0);
  auto G = constant_functor(ch2(), wa(), 1);
  CHECK(validate_nat_trans(identity_nat(F)).ok());

  FinNatTrans t;
  t.src = F;
  t.tgt = G;
  t.components = {MorRef{0, 1, 0}, MorRef{0, 1, 0}};
  CHECK(validate_nat_trans(t).ok());
}

TEST_CASE("corrupting a component breaks exactly its squares", "[functor]") {
  auto M = wrap(fx::m3());
  auto idm = identity_functor(M);
  auto t = identity_nat(idm);
  t.components[0] = MorRef{0, 0, 1};  // a is not central
  auto rep = validate_nat_trans(t);
  CHECK_FALSE(rep.ok());
  CHECK(rep.has_law("naturality"));
  // z2 is abelian: the same corruption stays natural there
  auto tz = identity_nat(identity_functor(z2c()));
  tz.components[0] = MorRef{0, 0, 1};
  CHECK(validate_nat_trans(tz).ok());
}

TEST_CASE("enumerate_nat_trans counts", "[functor]") {
  auto consts = enumerate_functors(ch2(), wa());
  REQUIRE(consts.size() == 2);
  CHECK(enumerate_nat_trans(consts[0], consts[1]).size() == 1);
  CHECK(enumerate_nat_trans(consts[1], consts[0]).empty());
  CHECK(enumerate_nat_trans(consts[0], consts[0]).size() == 1);
}

TEST_CASE("vcomp", "[functor]") {
  auto consts = enumerate_functors(ch2(), wa());
  auto gamma = enumerate_nat_trans(consts[0], consts[1])[0];
  CHECK(vcomp(identity_nat(consts[1]), gamma) == gamma);
  CHECK(vcomp(gamma, identity_nat(consts[0])) == gamma);

  // s-component endo-transformation composed with itself is the identity
  auto idz = identity_functor(z2c());
  FinNatTrans s;
  s.src = idz;
  s.tgt = idz;
  s.components = {MorRef{0, 0, 1}};
  REQUIRE(validate_nat_trans(s).ok());
  CHECK(vcomp(s, s) == identity_nat(idz));
}

TEST_CASE("whiskering", "[functor]") {
  auto consts = enumerate_functors(ch2(), wa());
  auto gamma = enumerate_nat_trans(consts[0], consts[1])[0];

  auto idwa = identity_functor(wa());
  CHECK(whisker_left(idwa, gamma).components == gamma.components);
  auto idch = identity_functor(ch2());
  CHECK(whisker_right(gamma, idch) == gamma);

  // whisker_left applies K's hom map entrywise
  for (const auto& K : enumerate_functors(wa(), wa())) {
    auto w = whisker_left(K, gamma);
    CHECK(validate_nat_trans(w).ok());
    for (size_t a = 0; a < gamma.components.size(); ++a)
      CHECK(w.components[a] == K.on(gamma.components[a]));
  }
  // identity transformations whisker to identity transformations
  auto idt = identity_nat(consts[0]);
  CHECK(whisker_left(idwa, idt).components == idt.components);
}

TEST_CASE("interchange law over a fixture family", "[functor]") {
  auto fs = enumerate_functors(ch2(), wa());
  auto gs = enumerate_functors(wa(), wa());
  int checked = 0;
  for (const auto& F : fs)
    for (const auto& G : fs)
      for (const auto& gamma : enumerate_nat_trans(F, G))
        for (const auto& H : gs)
          for (const auto& K : gs)
            for (const auto& delta : enumerate_nat_trans(H, K)) {
              auto res = interchange_check(gamma, delta);
              CHECK(res.holds);
              ++checked;
            }
  CHECK(checked > 0);
}

TEST_CASE("functor category chaotic(2) -> walking arrow", "[functor]") {
  auto FC = functor_category(ch2(), wa());
  REQUIRE(FC.objects.size() == 2);
  CHECK(FC.cat->total_morphisms() == 3);
  CHECK(validate_precategory(*FC.cat).ok());
  // data-isomorphic to the walking arrow: same hom profile
  CHECK(FC.cat->hom_size == fx::walking_arrow().hom_size);
}

TEST_CASE("C^terminal is data-isomorphic to C", "[functor]") {
  for (const auto& [name, cat] : fx::all()) {
    if (cat.object_count > 2) continue;
    INFO(name);
    auto C = wrap(cat);
    auto FC = functor_category(one(), C);
    CHECK(static_cast<int>(FC.objects.size()) == cat.object_count);
    CHECK(FC.cat->total_morphisms() == cat.total_morphisms());
    CHECK(is_univalent(*FC.cat).is_univalent ==
          is_univalent(cat).is_univalent);
  }
}

TEST_CASE("functor categories into univalent targets are univalent",
          "[functor]") {
  std::vector<CatPtr> domains = {one(), wa(), ch2(), z2c()};
  std::vector<CatPtr> univalent_targets = {
      one(), wa(), wrap(fx::divposet()), wrap(with_core_paths(fx::chaotic2())),
      bz2()};
  for (auto& A : domains)
    for (auto& B : univalent_targets) {
      REQUIRE(is_univalent(*B).is_univalent);
      auto FC = functor_category(A, B);
      CHECK(validate_precategory(*FC.cat).ok());
      CHECK(is_univalent(*FC.cat).is_univalent);
    }
}

TEST_CASE("non-univalent target can break functor-category univalence",
          "[functor]") {
  auto FC = functor_category(one(), ch2());
  CHECK_FALSE(is_univalent(*FC.cat).is_univalent);
}

TEST_CASE("J of the functor category matches natural isos pairwise",
          "[functor]") {
  auto B = wrap(with_core_paths(fx::chaotic2()));
  auto FC = functor_category(ch2(), B);
  const FinPrecategory& C = *FC.cat;
  for (int i = 0; i < C.object_count; ++i)
    for (int j = 0; j < C.object_count; ++j) {
      // J image set == natural isomorphisms, and J injective
      std::vector<int> images;
      for (int p = 0; p < C.paths.path_size[i][j]; ++p)
        images.push_back(C.transport[i][j][p]);
      std::sort(images.begin(), images.end());
      CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
      std::vector<int> isos;
      for (int k = 0; k < C.hom_size[i][j]; ++k)
        if (is_iso(C, MorRef{i, j, k})) isos.push_back(k);
      CHECK(images == isos);
    }
}

TEST_CASE("is_nat_iso", "[functor]") {
  auto consts = enumerate_functors(ch2(), wa());
  auto idt = identity_nat(consts[0]);
  CHECK(is_nat_iso(idt));
  auto inv = nat_iso_inverse(idt);
  REQUIRE(inv);
  CHECK(*inv == idt);

  auto gamma = enumerate_nat_trans(consts[0], consts[1])[0];
  CHECK_FALSE(is_nat_iso(gamma));

  // assembled inverse passes validation (the content of natiso)
  auto idz = identity_functor(z2c());
  FinNatTrans s;
  s.src = idz;
  s.tgt = idz;
  s.components = {MorRef{0, 0, 1}};
  auto sinv = nat_iso_inverse(s);
  REQUIRE(sinv);
  CHECK(validate_nat_trans(*sinv).ok());
}

TEST_CASE("curry and uncurry round-trip", "[functor]") {
  // constant functor terminal x terminal -> terminal
  auto P = wrap(product(*one(), *one()));
  auto F = identity_functor(P);
  {
    // F is the identity on the product of terminals, which is terminal
    auto cur = curry_functor(F, one(), one());
    CHECK(validate_functor(cur.fun).ok());
    auto back = uncurry_functor(cur.fun, cur.exponential);
    CHECK(back == F);
  }

  // all functors (walking arrow) x terminal -> walking arrow
  auto WxT = wrap(product(*wa(), *one()));
  for (const auto& F2 : enumerate_functors(WxT, wa())) {
    auto cur = curry_functor(F2, wa(), one());
    CHECK(validate_functor(cur.fun).ok());
    auto back = uncurry_functor(cur.fun, cur.exponential);
    CHECK(back == F2);
  }

  // and with a path-carrying factor: z2 x BZ2 -> BZ2
  auto ZxB = wrap(product(*z2c(), *bz2()));
  for (const auto& F3 : enumerate_functors(ZxB, bz2())) {
    auto cur = curry_functor(F3, z2c(), bz2());
    CHECK(validate_functor(cur.fun).ok());
    auto back = uncurry_functor(cur.fun, cur.exponential);
    CHECK(back == F3);
  }
}

TEST_CASE("curry then uncurry on enumerated G recovers G", "[functor]") {
  auto E = functor_category(one(), wa());
  for (const auto& G : enumerate_functors(wa(), E.cat)) {
    auto F = uncurry_functor(G, E);
    CHECK(validate_functor(F).ok());
    auto cur = curry_functor(F, wa(), one());
    CHECK(cur.fun == G);
  }
}
