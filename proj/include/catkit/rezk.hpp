#pragma once

#include <utility>
#include <vector>

#include "catkit/equiv.hpp"
#include "catkit/presheaf.hpp"

namespace catkit {

// Rezk completion: same objects and homs, path groupoid saturated to the
// core, with the identity-on-data unit functor whose path part is J.
struct RezkCompletion {
  CatPtr completion;  // Chat
  FinFunctor unit;    // I: C -> Chat
};

inline RezkCompletion rezk_completion(CatPtr C) {
  {
    auto rep = validate_precategory(*C);
    if (!rep.ok())
      throw InvalidInput("rezk_completion: input violates " +
                         rep.violations[0].law);
  }
  RezkCompletion out;
  FinPrecategory chat = with_core_paths(*C);
  out.completion = wrap(std::move(chat));
  const FinPrecategory& Chat = *out.completion;
  const FinPrecategory& A = *C;
  const int n = A.object_count;

  FinFunctor I;
  I.dom = C;
  I.cod = out.completion;
  I.obj_map = identity_map(n);
  I.hom_maps.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  I.path_map.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      I.hom_maps[a][b] = identity_map(A.hom_size[a][b]);
      // path p maps to the core path of the iso J(p)
      std::vector<int> t(static_cast<size_t>(A.paths.path_size[a][b]));
      for (int p = 0; p < A.paths.path_size[a][b]; ++p) {
        int mor = A.transport[a][b][p];
        int idx = -1;
        for (int k = 0; k < Chat.paths.path_size[a][b]; ++k)
          if (Chat.transport[a][b][k] == mor) {
            idx = k;
            break;
          }
        if (idx < 0)
          throw CatError("rezk_completion: J image is not an isomorphism");
        t[p] = idx;
      }
      I.path_map[a][b] =
          FinMap{A.paths.path_size[a][b], Chat.paths.path_size[a][b],
                 std::move(t)};
    }
  out.unit = std::move(I);
  return out;
}

// ---------------------------------------------------------------------------
// Cross-check against the presheaf construction

// Yoneda functor corestricted to the image objects, from the Rezk
// completion to the presheaf precategory on {y(a)}.
inline FinFunctor corestricted_yoneda(const RezkCompletion& rc,
                                      const PresheafCategory& PC) {
  CatPtr Chat = rc.completion;
  const FinPrecategory& A = *Chat;
  const int n = A.object_count;
  FinFunctor Y;
  Y.dom = Chat;
  Y.cod = PC.cat;
  Y.obj_map = identity_map(n);
  Y.hom_maps.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  Y.path_map.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  CatPtr base = PC.base;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> h(static_cast<size_t>(A.hom_size[a][b]));
      for (int f = 0; f < A.hom_size[a][b]; ++f) {
        int idx = PC.mor_index(a, b, yoneda_map(base, MorRef{a, b, f}));
        if (idx < 0)
          throw CatError("corestricted_yoneda: y(f) missing from homs");
        h[f] = idx;
      }
      Y.hom_maps[a][b] =
          FinMap{A.hom_size[a][b], PC.cat->hom_size[a][b], std::move(h)};
      // Chat paths are isos of C; their yoneda images are isos of
      // presheaves, i.e. core paths of PC.cat.
      std::vector<int> t(static_cast<size_t>(A.paths.path_size[a][b]));
      for (int p = 0; p < A.paths.path_size[a][b]; ++p) {
        int mor_idx = Y.hom_maps[a][b](A.transport[a][b][p]);
        int idx = -1;
        for (int k = 0; k < PC.cat->paths.path_size[a][b]; ++k)
          if (PC.cat->transport[a][b][k] == mor_idx) {
            idx = k;
            break;
          }
        if (idx < 0)
          throw CatError("corestricted_yoneda: y(iso) is not a core path");
        t[p] = idx;
      }
      Y.path_map[a][b] = FinMap{A.paths.path_size[a][b],
                                PC.cat->paths.path_size[a][b], std::move(t)};
    }
  return Y;
}

// Verifies that the intrinsic Rezk completion is equivalent to the full
// subcategory of representable presheaves, via an adjoint equivalence
// built from the corestricted Yoneda functor.  Tightly guarded.
inline bool rezk_yoneda_crosscheck(CatPtr C) {
  const FinPrecategory& A = *C;
  if (A.object_count > 3) throw EnumerationTooLarge(A.object_count, 3);
  for (int a = 0; a < A.object_count; ++a)
    for (int b = 0; b < A.object_count; ++b)
      if (A.hom_size[a][b] > 3)
        throw EnumerationTooLarge(A.hom_size[a][b], 3);

  auto rc = rezk_completion(C);
  std::vector<FinPresheaf> ys;
  for (int a = 0; a < A.object_count; ++a)
    ys.push_back(yoneda_object(C, a));
  auto PC = presheaf_precategory(C, ys);
  FinFunctor Y = corestricted_yoneda(rc, PC);
  if (!validate_functor(Y).ok()) return false;
  if (!is_univalent(*PC.cat).is_univalent) return false;
  auto weq = is_weak_equivalence(Y);
  if (!weq.holds) return false;
  auto eq = equivalence_from_ffeso(Y, weq.eso);
  return check_adjunction(eq.adj).ok() && is_nat_iso(eq.adj.eta) &&
         is_nat_iso(eq.adj.eps);
}

}  // namespace catkit
