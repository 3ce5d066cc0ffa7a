#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "catkit/functor.hpp"

namespace catkit {

// Contravariant finite-set-valued functor on a base precategory.
// action[a][b][k] is the map carrier(b) -> carrier(a) induced by the k-th
// morphism in hom(a,b).
struct FinPresheaf {
  CatPtr base;
  std::vector<int> carrier;                           // [a]
  std::vector<std::vector<std::vector<FinMap>>> action;  // [a][b][k]

  const FinMap& act(MorRef f) const { return action[f.src][f.tgt][f.index]; }

  bool operator==(const FinPresheaf& o) const {
    return same_cat(base, o.base) && carrier == o.carrier &&
           action == o.action;
  }
};

// Natural family of maps between presheaves over the same base.
struct PresheafMor {
  std::vector<FinMap> components;  // [a]: carrier_P(a) -> carrier_Q(a)
  auto operator<=>(const PresheafMor&) const = default;
};

inline ValidationReport validate_presheaf(const FinPresheaf& P) {
  using detail::add;
  using detail::mor_str;
  ValidationReport r;
  const FinPrecategory& A = *P.base;
  const int n = A.object_count;
  if (static_cast<int>(P.carrier.size()) != n ||
      static_cast<int>(P.action.size()) != n) {
    add(r, "structure", "carrier/action size mismatch");
    return r;
  }
  for (int a = 0; a < n; ++a) {
    if (P.carrier[a] < 0) {
      add(r, "structure", "negative carrier at ", a);
      return r;
    }
    if (static_cast<int>(P.action[a].size()) != n) {
      add(r, "structure", "action inner size mismatch at ", a);
      return r;
    }
    for (int b = 0; b < n; ++b) {
      if (static_cast<int>(P.action[a][b].size()) != A.hom_size[a][b]) {
        add(r, "structure", "action count at (", a, ",", b,
            ") != hom size");
        return r;
      }
      for (const FinMap& m : P.action[a][b])
        if (m.dom != P.carrier[b] || m.cod != P.carrier[a] ||
            !m.well_formed()) {
          add(r, "structure", "action at (", a, ",", b,
              ") is not a map carrier(b) -> carrier(a)");
          return r;
        }
    }
  }
  for (int a = 0; a < n; ++a)
    if (P.act(A.id(a)) != identity_map(P.carrier[a]))
      add(r, "presheaf-unit", "P(1) != 1 at object ", a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int f = 0; f < A.hom_size[a][b]; ++f)
          for (int g = 0; g < A.hom_size[b][c]; ++g) {
            MorRef mf{a, b, f}, mg{b, c, g};
            if (P.act(A.compose(mg, mf)) !=
                compose_maps(P.act(mf), P.act(mg)))
              add(r, "presheaf-comp", "P(g o f) != P(f) o P(g) for f=",
                  mor_str(mf), " g=", mor_str(mg));
          }
  return r;
}

inline ValidationReport validate_presheaf_mor(const FinPresheaf& P,
                                              const FinPresheaf& Q,
                                              const PresheafMor& m) {
  using detail::add;
  using detail::mor_str;
  ValidationReport r;
  const FinPrecategory& A = *P.base;
  const int n = A.object_count;
  if (static_cast<int>(m.components.size()) != n) {
    add(r, "structure", "component count != object count");
    return r;
  }
  for (int a = 0; a < n; ++a) {
    const FinMap& c = m.components[a];
    if (c.dom != P.carrier[a] || c.cod != Q.carrier[a] || !c.well_formed()) {
      add(r, "structure", "component at ", a,
          " is not a map P(a) -> Q(a)");
      return r;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int f = 0; f < A.hom_size[a][b]; ++f) {
        MorRef mf{a, b, f};
        if (compose_maps(m.components[a], P.act(mf)) !=
            compose_maps(Q.act(mf), m.components[b]))
          add(r, "naturality", "c_a o P(f) != Q(f) o c_b for f=",
              mor_str(mf));
      }
  return r;
}

inline PresheafMor identity_presheaf_mor(const FinPresheaf& P) {
  PresheafMor m;
  for (int c : P.carrier) m.components.push_back(identity_map(c));
  return m;
}

inline PresheafMor compose_presheaf_mors(const PresheafMor& g,
                                         const PresheafMor& f) {
  PresheafMor m;
  for (size_t a = 0; a < f.components.size(); ++a)
    m.components.push_back(compose_maps(g.components[a], f.components[a]));
  return m;
}

// ---------------------------------------------------------------------------
// Enumeration of natural maps

namespace detail {

// DFS over component entries with naturality propagation: fixing the image
// of e in P(b) forces the image of P(f)(e) for every f into b.
class PresheafMorSearch {
 public:
  PresheafMorSearch(const FinPresheaf& P, const FinPresheaf& Q,
                    GuardCounter& guard)
      : P_(P), Q_(Q), guard_(guard) {}

  bool run(const std::function<bool(const PresheafMor&)>& sink) {
    const int n = P_.base->object_count;
    comp_.assign(static_cast<size_t>(n), {});
    for (int a = 0; a < n; ++a) {
      if (P_.carrier[a] > 0 && Q_.carrier[a] == 0) return true;
      comp_[a].assign(static_cast<size_t>(P_.carrier[a]), -1);
    }
    sink_ = &sink;
    return branch();
  }

 private:
  bool propagate() {
    const FinPrecategory& A = *P_.base;
    const int n = A.object_count;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int f = 0; f < A.hom_size[a][b]; ++f) {
            MorRef mf{a, b, f};
            for (int e = 0; e < P_.carrier[b]; ++e) {
              if (comp_[b][e] < 0) continue;
              int target = P_.act(mf)(e);
              int value = Q_.act(mf)(comp_[b][e]);
              int& slot = comp_[a][target];
              if (slot < 0) {
                slot = value;
                changed = true;
              } else if (slot != value) {
                return false;
              }
            }
          }
    }
    return true;
  }

  bool branch() {
    guard_.tick();
    const int n = P_.base->object_count;
    for (int a = 0; a < n; ++a)
      for (int e = 0; e < P_.carrier[a]; ++e) {
        if (comp_[a][e] >= 0) continue;
        auto saved = comp_;
        for (int v = 0; v < Q_.carrier[a]; ++v) {
          comp_[a][e] = v;
          if (propagate()) {
            if (!branch()) return false;
          }
          comp_ = saved;
        }
        return true;
      }
    PresheafMor m;
    for (int a = 0; a < n; ++a)
      m.components.push_back(FinMap{P_.carrier[a], Q_.carrier[a], comp_[a]});
    return (*sink_)(m);
  }

  const FinPresheaf& P_;
  const FinPresheaf& Q_;
  GuardCounter& guard_;
  const std::function<bool(const PresheafMor&)>* sink_ = nullptr;
  std::vector<std::vector<int>> comp_;
};

}  // namespace detail

inline std::vector<PresheafMor> enumerate_presheaf_mors(const FinPresheaf& P,
                                                        const FinPresheaf& Q) {
  GuardCounter guard;
  std::vector<PresheafMor> out;
  detail::PresheafMorSearch search(P, Q, guard);
  search.run([&](const PresheafMor& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// All presheaves on A with carriers bounded by max_carrier, deterministic.
inline std::vector<FinPresheaf> enumerate_presheaves(CatPtr A,
                                                     int max_carrier) {
  const FinPrecategory& C = *A;
  const int n = C.object_count;
  GuardCounter guard;
  std::vector<FinPresheaf> out;
  std::vector<int> carrier(static_cast<size_t>(n), 0);
  auto actions_for = [&](const std::vector<int>& car) {
    // odometer over the action tables of non-identity morphisms
    std::vector<MorRef> free;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int f = 0; f < C.hom_size[a][b]; ++f)
          if (!C.is_id(MorRef{a, b, f})) free.push_back(MorRef{a, b, f});
    std::vector<std::vector<FinMap>> choices;
    for (MorRef m : free) {
      choices.push_back(enumerate_maps(Fin{car[m.tgt]}, Fin{car[m.src]}));
      if (choices.back().empty()) return;  // no total action exists
    }
    std::vector<size_t> pick(free.size(), 0);
    for (;;) {
      guard.tick();
      FinPresheaf P;
      P.base = A;
      P.carrier = car;
      P.action.assign(static_cast<size_t>(n),
                      std::vector<std::vector<FinMap>>(static_cast<size_t>(n)));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          P.action[a][b].assign(static_cast<size_t>(C.hom_size[a][b]),
                                FinMap{});
      for (int a = 0; a < n; ++a)
        P.action[a][a][C.identity[a]] = identity_map(car[a]);
      for (size_t i = 0; i < free.size(); ++i)
        P.action[free[i].src][free[i].tgt][free[i].index] =
            choices[i][pick[i]];
      if (validate_presheaf(P).ok()) out.push_back(std::move(P));
      int i = static_cast<int>(free.size()) - 1;
      while (i >= 0 && pick[i] + 1 == choices[i].size()) pick[i--] = 0;
      if (i < 0) break;
      ++pick[i];
    }
  };
  for (;;) {
    actions_for(carrier);
    int i = n - 1;
    while (i >= 0 && carrier[i] == max_carrier) carrier[i--] = 0;
    if (i < 0) break;
    ++carrier[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Yoneda data

// y(a): carrier(x) = hom(x,a), action by precomposition.
inline FinPresheaf yoneda_object(CatPtr A, ObjId a) {
  const FinPrecategory& C = *A;
  const int n = C.object_count;
  FinPresheaf P;
  P.base = A;
  P.carrier.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) P.carrier[x] = C.hom_size[x][a];
  P.action.assign(static_cast<size_t>(n),
                  std::vector<std::vector<FinMap>>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto& row = P.action[x][y];
      row.reserve(static_cast<size_t>(C.hom_size[x][y]));
      for (int f = 0; f < C.hom_size[x][y]; ++f) {
        std::vector<int> t(static_cast<size_t>(C.hom_size[y][a]));
        for (int g = 0; g < C.hom_size[y][a]; ++g)
          t[g] = C.compose(MorRef{y, a, g}, MorRef{x, y, f}).index;
        row.push_back(FinMap{C.hom_size[y][a], C.hom_size[x][a],
                             std::move(t)});
      }
    }
  return P;
}

// y(f): y(a) -> y(b) by postcomposition with f: a -> b.
inline PresheafMor yoneda_map(CatPtr A, MorRef f) {
  const FinPrecategory& C = *A;
  const int n = C.object_count;
  PresheafMor m;
  for (int x = 0; x < n; ++x) {
    std::vector<int> t(static_cast<size_t>(C.hom_size[x][f.src]));
    for (int g = 0; g < C.hom_size[x][f.src]; ++g)
      t[g] = C.compose(f, MorRef{x, f.src, g}).index;
    m.components.push_back(
        FinMap{C.hom_size[x][f.src], C.hom_size[x][f.tgt], std::move(t)});
  }
  return m;
}

// Forward direction of the Yoneda bijection: alpha |-> alpha_a(1_a).
inline int yoneda_forward(CatPtr A, ObjId a, const FinPresheaf& F,
                          const PresheafMor& alpha) {
  (void)F;
  return alpha.components[a](A->identity[a]);
}

// Backward direction: x |-> (f |-> F(f)(x)).
inline PresheafMor yoneda_backward(CatPtr A, ObjId a, const FinPresheaf& F,
                                   int x) {
  const FinPrecategory& C = *A;
  PresheafMor m;
  for (int x0 = 0; x0 < C.object_count; ++x0) {
    std::vector<int> t(static_cast<size_t>(C.hom_size[x0][a]));
    for (int f = 0; f < C.hom_size[x0][a]; ++f)
      t[f] = F.act(MorRef{x0, a, f})(x);
    m.components.push_back(
        FinMap{C.hom_size[x0][a], F.carrier[x0], std::move(t)});
  }
  return m;
}

// ---------------------------------------------------------------------------
// The precategory of an explicit list of presheaves

struct PresheafCategory {
  CatPtr base;  // A
  CatPtr cat;   // the resulting univalent precategory
  std::vector<FinPresheaf> objects;
  std::vector<std::vector<std::vector<PresheafMor>>> homs;  // [i][j][k]

  int object_index(const FinPresheaf& P) const {
    for (size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == P) return static_cast<int>(i);
    return -1;
  }
  int mor_index(int i, int j, const PresheafMor& m) const {
    for (size_t k = 0; k < homs[i][j].size(); ++k)
      if (homs[i][j][k] == m) return static_cast<int>(k);
    return -1;
  }
};

// Full sub-precategory of presheaves spanned by the given objects, with
// core paths, so the result is univalent by construction.
inline PresheafCategory presheaf_precategory(
    CatPtr A, const std::vector<FinPresheaf>& list) {
  PresheafCategory PC;
  PC.base = A;
  PC.objects = list;
  const int n = static_cast<int>(list.size());
  GuardCounter guard;
  PC.homs.assign(static_cast<size_t>(n),
                 std::vector<std::vector<PresheafMor>>(static_cast<size_t>(n)));
  FinPrecategory C;
  C.object_count = n;
  C.hom_size.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PC.homs[i][j] = enumerate_presheaf_mors(list[i], list[j]);
      C.hom_size[i][j] = static_cast<int>(PC.homs[i][j].size());
      guard.tick(C.hom_size[i][j]);
    }
  C.identity.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int k = PC.mor_index(i, i, identity_presheaf_mor(list[i]));
    if (k < 0) throw CatError("presheaf_precategory: identity missing");
    C.identity[i] = k;
  }
  C.comp.assign(n, std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto& tab = C.comp[i][j][k];
        tab.assign(PC.homs[i][j].size(),
                   std::vector<int>(PC.homs[j][k].size(), 0));
        for (size_t f = 0; f < PC.homs[i][j].size(); ++f)
          for (size_t g = 0; g < PC.homs[j][k].size(); ++g) {
            guard.tick();
            int idx = PC.mor_index(
                i, k, compose_presheaf_mors(PC.homs[j][k][g],
                                            PC.homs[i][j][f]));
            if (idx < 0)
              throw CatError("presheaf_precategory: composite not natural");
            tab[f][g] = idx;
          }
      }
  C.paths = discrete_groupoid(n);
  C.transport.assign(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      C.transport[a][b] =
          (a == b) ? std::vector<int>{C.identity[a]} : std::vector<int>{};
  PC.cat = wrap(with_core_paths(C));
  return PC;
}

// ---------------------------------------------------------------------------
// The hom-functor A^op x A -> FinSet skeleton

// hom_A as a functor into the skeleton of finite sets large enough to hold
// every hom-set; (f,f') acts by g |-> f' o g o f.
inline FinFunctor hom_functor(CatPtr A) {
  const FinPrecategory& C = *A;
  int max_hom = 0;
  for (int a = 0; a < C.object_count; ++a)
    for (int b = 0; b < C.object_count; ++b)
      max_hom = std::max(max_hom, C.hom_size[a][b]);
  CatPtr dom = wrap(product(opposite(C), C));
  CatPtr cod = wrap(mk_finset_skeleton(max_hom));
  FinPrecategory Aop = opposite(C);
  ProductIndex pix{Aop, C};
  const FinPrecategory& P = *dom;
  const FinPrecategory& S = *cod;
  FinFunctor H;
  H.dom = dom;
  H.cod = cod;
  const int n = P.object_count;
  std::vector<int> omap(static_cast<size_t>(n));
  for (int a = 0; a < C.object_count; ++a)
    for (int b = 0; b < C.object_count; ++b)
      omap[pix.obj(a, b)] = C.hom_size[a][b];
  H.obj_map = FinMap{n, S.object_count, omap};
  H.hom_maps.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  H.path_map.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      std::vector<int> h(static_cast<size_t>(P.hom_size[s][t]));
      for (int m = 0; m < P.hom_size[s][t]; ++m) {
        auto [fop, f2] = pix.split_mor(MorRef{s, t, m});
        // fop in hom_op(a,a') is f: a' -> a in A
        MorRef f{fop.tgt, fop.src, fop.index};
        std::vector<int> table(static_cast<size_t>(omap[s]));
        for (int g = 0; g < omap[s]; ++g)
          table[g] =
              C.compose(f2, C.compose(MorRef{f.tgt, f2.src, g}, f)).index;
        h[m] = map_rank(FinMap{omap[s], omap[t], std::move(table)});
      }
      H.hom_maps[s][t] = FinMap{P.hom_size[s][t],
                                S.hom_size[omap[s]][omap[t]], std::move(h)};
      std::vector<int> pm(static_cast<size_t>(P.paths.path_size[s][t]));
      for (int m = 0; m < P.paths.path_size[s][t]; ++m) {
        auto [pop, q] = pix.split_path(PathRef{s, t, m});
        // pop lives in the shared path groupoid of A and A^op; the induced
        // map g |-> J(q) o g o J(pop)^-1 is a bijection, i.e. a permutation
        // path in the skeleton
        std::vector<int> table(static_cast<size_t>(omap[s]));
        for (int g = 0; g < omap[s]; ++g)
          table[g] =
              transport_hom(C, pop, q, MorRef{pop.src, q.src, g}).index;
        FinMap perm{omap[s], omap[t], std::move(table)};
        auto perms = enumerate_permutations(omap[s]);
        pm[m] = index_of_permutation(perms, perm).value();
      }
      H.path_map[s][t] = FinMap{P.paths.path_size[s][t],
                                S.paths.path_size[omap[s]][omap[t]],
                                std::move(pm)};
    }
  return H;
}

// ---------------------------------------------------------------------------
// Representability

struct Representation {
  ObjId object = 0;
  PresheafMor iso;      // y(object) -> F
  PresheafMor iso_inv;  // F -> y(object)
};

inline std::optional<PresheafMor> presheaf_mor_inverse(const FinPresheaf& P,
                                                       const FinPresheaf& Q,
                                                       const PresheafMor& m) {
  PresheafMor inv;
  for (const FinMap& c : m.components) {
    if (!is_bijection(c)) return std::nullopt;
    inv.components.push_back(invert_map(c));
  }
  if (!validate_presheaf_mor(Q, P, inv).ok()) return std::nullopt;
  return inv;
}

// Finite search for a representing object; first-found deterministic.
inline std::optional<Representation> is_representable(CatPtr A,
                                                      const FinPresheaf& F) {
  for (ObjId a = 0; a < A->object_count; ++a) {
    FinPresheaf ya = yoneda_object(A, a);
    for (const PresheafMor& m : enumerate_presheaf_mors(ya, F))
      if (auto inv = presheaf_mor_inverse(ya, F, m))
        return Representation{a, m, *inv};
  }
  return std::nullopt;
}

}  // namespace catkit
