#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "catkit/precat.hpp"

namespace catkit {

using CatPtr = std::shared_ptr<const FinPrecategory>;

inline CatPtr wrap(FinPrecategory C) {
  return std::make_shared<const FinPrecategory>(std::move(C));
}

inline bool same_cat(const CatPtr& a, const CatPtr& b) {
  return a == b || *a == *b;
}

// Functor between finite precategories.  The object part is a groupoid
// functor (obj_map plus path_map); hom_maps act on hom-sets.
struct FinFunctor {
  CatPtr dom, cod;
  FinMap obj_map;
  std::vector<std::vector<FinMap>> path_map;  // [a][b]
  std::vector<std::vector<FinMap>> hom_maps;  // [a][b]

  ObjId on(ObjId a) const { return obj_map(a); }
  MorRef on(MorRef f) const {
    return MorRef{on(f.src), on(f.tgt), hom_maps[f.src][f.tgt](f.index)};
  }
  PathRef on(PathRef p) const {
    return PathRef{on(p.src), on(p.tgt), path_map[p.src][p.tgt](p.index)};
  }

  bool operator==(const FinFunctor& o) const {
    return same_cat(dom, o.dom) && same_cat(cod, o.cod) &&
           obj_map == o.obj_map && path_map == o.path_map &&
           hom_maps == o.hom_maps;
  }
};

inline FinFunctor identity_functor(CatPtr C) {
  FinFunctor F;
  F.dom = C;
  F.cod = C;
  const int n = C->object_count;
  F.obj_map = identity_map(n);
  F.path_map.assign(n, std::vector<FinMap>(n));
  F.hom_maps.assign(n, std::vector<FinMap>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      F.path_map[a][b] = identity_map(C->paths.path_size[a][b]);
      F.hom_maps[a][b] = identity_map(C->hom_size[a][b]);
    }
  return F;
}

inline FinFunctor compose_functors(const FinFunctor& G, const FinFunctor& F) {
  if (!same_cat(F.cod, G.dom))
    throw DomainMismatch("compose_functors: F.cod differs from G.dom");
  FinFunctor H;
  H.dom = F.dom;
  H.cod = G.cod;
  H.obj_map = compose_maps(G.obj_map, F.obj_map);
  const int n = F.dom->object_count;
  H.path_map.assign(n, std::vector<FinMap>(n));
  H.hom_maps.assign(n, std::vector<FinMap>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int fa = F.on(a), fb = F.on(b);
      H.path_map[a][b] =
          compose_maps(G.path_map[fa][fb], F.path_map[a][b]);
      H.hom_maps[a][b] =
          compose_maps(G.hom_maps[fa][fb], F.hom_maps[a][b]);
    }
  return H;
}

// Functor laws plus idtoiso preservation, each violation with a witness.
inline ValidationReport validate_functor(const FinFunctor& F) {
  using detail::add;
  using detail::mor_str;
  using detail::path_str;
  ValidationReport r;
  const FinPrecategory& A = *F.dom;
  const FinPrecategory& B = *F.cod;
  const int n = A.object_count;

  if (F.obj_map.dom != n || F.obj_map.cod != B.object_count ||
      !F.obj_map.well_formed()) {
    add(r, "structure", "obj_map is not a map |A| -> |B|");
    return r;
  }
  if (static_cast<int>(F.hom_maps.size()) != n ||
      static_cast<int>(F.path_map.size()) != n) {
    add(r, "structure", "hom_maps/path_map outer size mismatch");
    return r;
  }
  bool shapes_ok = true;
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(F.hom_maps[a].size()) != n ||
        static_cast<int>(F.path_map[a].size()) != n) {
      add(r, "structure", "hom_maps/path_map inner size mismatch at ", a);
      return r;
    }
    for (int b = 0; b < n; ++b) {
      const FinMap& h = F.hom_maps[a][b];
      if (h.dom != A.hom_size[a][b] ||
          h.cod != B.hom_size[F.on(a)][F.on(b)] || !h.well_formed()) {
        add(r, "structure", "hom_map at (", a, ",", b,
            ") is not a map hom(a,b) -> hom(Fa,Fb)");
        shapes_ok = false;
      }
      const FinMap& p = F.path_map[a][b];
      if (p.dom != A.paths.path_size[a][b] ||
          p.cod != B.paths.path_size[F.on(a)][F.on(b)] || !p.well_formed()) {
        add(r, "structure", "path_map at (", a, ",", b,
            ") is not a map paths(a,b) -> paths(Fa,Fb)");
        shapes_ok = false;
      }
    }
  }
  if (!shapes_ok) return r;

  for (int a = 0; a < n; ++a)
    if (F.on(A.id(a)) != B.id(F.on(a)))
      add(r, "F-id", "F(1) != 1 at object ", a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int f = 0; f < A.hom_size[a][b]; ++f)
          for (int g = 0; g < A.hom_size[b][c]; ++g) {
            MorRef mf{a, b, f}, mg{b, c, g};
            if (F.on(A.compose(mg, mf)) != B.compose(F.on(mg), F.on(mf)))
              add(r, "F-comp", "F(g o f) != Fg o Ff for f=", mor_str(mf),
                  " g=", mor_str(mg));
          }
  for (int a = 0; a < n; ++a)
    if (F.on(A.paths.refl_path(a)) != B.paths.refl_path(F.on(a)))
      add(r, "F-path-refl", "F(refl) != refl at object ", a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int p = 0; p < A.paths.path_size[a][b]; ++p)
          for (int q = 0; q < A.paths.path_size[b][c]; ++q) {
            PathRef pp{a, b, p}, qq{b, c, q};
            if (F.on(A.paths.concat_paths(pp, qq)) !=
                B.paths.concat_paths(F.on(pp), F.on(qq)))
              add(r, "F-path-concat", "F(p.q) != F(p).F(q) for p=",
                  path_str(pp), " q=", path_str(qq));
          }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int p = 0; p < A.paths.path_size[a][b]; ++p) {
        PathRef pp{a, b, p};
        if (F.on(A.paths.inverse(pp)) != B.paths.inverse(F.on(pp)))
          add(r, "F-path-inv", "F(p^-1) != F(p)^-1 for p=", path_str(pp));
        if (B.idtoiso(F.on(pp)) != F.on(A.idtoiso(pp)))
          add(r, "F-idtoiso", "J(F(p)) != F(J(p)) for p=", path_str(pp));
      }
  return r;
}

// ---------------------------------------------------------------------------
// Natural transformations

struct FinNatTrans {
  FinFunctor src, tgt;               // parallel functors
  std::vector<MorRef> components;    // [a] in hom(Fa, Ga)

  bool operator==(const FinNatTrans& o) const {
    return src == o.src && tgt == o.tgt && components == o.components;
  }
};

inline FinNatTrans identity_nat(const FinFunctor& F) {
  FinNatTrans t;
  t.src = F;
  t.tgt = F;
  for (int a = 0; a < F.dom->object_count; ++a)
    t.components.push_back(F.cod->id(F.on(a)));
  return t;
}

inline ValidationReport validate_nat_trans(const FinNatTrans& t) {
  using detail::add;
  using detail::mor_str;
  ValidationReport r;
  if (!same_cat(t.src.dom, t.tgt.dom) || !same_cat(t.src.cod, t.tgt.cod)) {
    add(r, "structure", "src and tgt functors are not parallel");
    return r;
  }
  const FinPrecategory& A = *t.src.dom;
  const FinPrecategory& B = *t.src.cod;
  if (static_cast<int>(t.components.size()) != A.object_count) {
    add(r, "structure", "component count != object count");
    return r;
  }
  for (int a = 0; a < A.object_count; ++a) {
    MorRef c = t.components[a];
    if (c.src != t.src.on(a) || c.tgt != t.tgt.on(a) || c.index < 0 ||
        c.index >= B.hom_size[c.src][c.tgt]) {
      add(r, "structure", "component at ", a, " is not in hom(Fa,Ga)");
      return r;
    }
  }
  for (int a = 0; a < A.object_count; ++a)
    for (int b = 0; b < A.object_count; ++b)
      for (int f = 0; f < A.hom_size[a][b]; ++f) {
        MorRef mf{a, b, f};
        if (B.compose(t.tgt.on(mf), t.components[a]) !=
            B.compose(t.components[b], t.src.on(mf)))
          add(r, "naturality", "Gf o c_a != c_b o Ff for f=", mor_str(mf));
      }
  return r;
}

// delta after gamma, componentwise.
inline FinNatTrans vcomp(const FinNatTrans& delta, const FinNatTrans& gamma) {
  if (!(gamma.tgt == delta.src))
    throw DomainMismatch("vcomp: gamma.tgt differs from delta.src");
  FinNatTrans t;
  t.src = gamma.src;
  t.tgt = delta.tgt;
  const FinPrecategory& B = *gamma.src.cod;
  for (size_t a = 0; a < gamma.components.size(); ++a)
    t.components.push_back(
        B.compose(delta.components[a], gamma.components[a]));
  return t;
}

// (K gamma): KF -> KG with components K(gamma_a).
inline FinNatTrans whisker_left(const FinFunctor& K, const FinNatTrans& g) {
  if (!same_cat(g.src.cod, K.dom))
    throw DomainMismatch("whisker_left: K.dom differs from gamma's codomain");
  FinNatTrans t;
  t.src = compose_functors(K, g.src);
  t.tgt = compose_functors(K, g.tgt);
  for (MorRef c : g.components) t.components.push_back(K.on(c));
  return t;
}

// (gamma F): GF -> HF with components gamma_{Fa}.
inline FinNatTrans whisker_right(const FinNatTrans& g, const FinFunctor& F) {
  if (!same_cat(F.cod, g.src.dom))
    throw DomainMismatch("whisker_right: F.cod differs from gamma's domain");
  FinNatTrans t;
  t.src = compose_functors(g.src, F);
  t.tgt = compose_functors(g.tgt, F);
  for (int a = 0; a < F.dom->object_count; ++a)
    t.components.push_back(g.components[F.on(a)]);
  return t;
}

struct InterchangeResult {
  bool holds = false;
  std::vector<MorRef> lhs, rhs;  // components of (dG)(Hg) and (Kg)(dF)
};

// (delta G)(H gamma) = (K gamma)(delta F), checked componentwise.
inline InterchangeResult interchange_check(const FinNatTrans& gamma,
                                           const FinNatTrans& delta) {
  auto lhs = vcomp(whisker_right(delta, gamma.tgt),
                   whisker_left(delta.src, gamma));
  auto rhs = vcomp(whisker_left(delta.tgt, gamma),
                   whisker_right(delta, gamma.src));
  InterchangeResult res;
  res.lhs = lhs.components;
  res.rhs = rhs.components;
  res.holds = lhs.components == rhs.components;
  return res;
}

// Componentwise inverse when every component is an isomorphism.
inline std::optional<FinNatTrans> nat_iso_inverse(const FinNatTrans& g) {
  FinNatTrans inv;
  inv.src = g.tgt;
  inv.tgt = g.src;
  for (MorRef c : g.components) {
    auto w = iso_witness(*g.src.cod, c);
    if (!w) return std::nullopt;
    inv.components.push_back(*w);
  }
  return inv;
}

inline bool is_nat_iso(const FinNatTrans& g) {
  return nat_iso_inverse(g).has_value();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

// Depth-first search over path tables for a functor whose object and hom
// parts are fixed.  refl images are forced, concatenation and inverse
// images are propagated, and idtoiso preservation is checked on every
// assignment.  Yields each valid path_map once, lexicographically.
class PathSearch {
 public:
  PathSearch(const FinPrecategory& A, const FinPrecategory& B,
             const std::vector<int>& omap,
             const std::vector<std::vector<std::vector<int>>>& hom,
             GuardCounter& guard)
      : A_(A), B_(B), omap_(omap), hom_(hom), guard_(guard) {}

  // Returns false if the sink requested a stop.
  bool run(const std::function<
           bool(const std::vector<std::vector<std::vector<int>>>&)>& sink) {
    sink_ = &sink;
    const int n = A_.object_count;
    path_.assign(static_cast<size_t>(n),
                 std::vector<std::vector<int>>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (A_.paths.path_size[a][b] > 0 &&
            B_.paths.path_size[omap_[a]][omap_[b]] == 0)
          return true;
        path_[a][b].assign(static_cast<size_t>(A_.paths.path_size[a][b]), -1);
      }
    for (int a = 0; a < n; ++a) {
      path_[a][a][A_.paths.refl[a]] = B_.paths.refl[omap_[a]];
      if (!coherent(a, a, A_.paths.refl[a])) return true;
    }
    if (!propagate()) return true;
    return branch();
  }

 private:
  // J_B(path(p)) must equal hom(J_A(p)).
  bool coherent(ObjId a, ObjId b, int p) const {
    int img = path_[a][b][p];
    return B_.transport[omap_[a]][omap_[b]][img] ==
           hom_[a][b][A_.transport[a][b][p]];
  }

  bool propagate() {
    const int n = A_.object_count;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int p = 0; p < A_.paths.path_size[a][b]; ++p) {
            if (path_[a][b][p] < 0) continue;
            int pinv = A_.paths.inv[a][b][p];
            int img_inv = B_.paths.inv[omap_[a]][omap_[b]][path_[a][b][p]];
            int& islot = path_[b][a][pinv];
            if (islot < 0) {
              islot = img_inv;
              if (!coherent(b, a, pinv)) return false;
              changed = true;
            } else if (islot != img_inv) {
              return false;
            }
            for (int c = 0; c < n; ++c)
              for (int q = 0; q < A_.paths.path_size[b][c]; ++q) {
                if (path_[b][c][q] < 0) continue;
                int pq = A_.paths.concat[a][b][c][p][q];
                int img = B_.paths.concat[omap_[a]][omap_[b]][omap_[c]]
                                         [path_[a][b][p]][path_[b][c][q]];
                int& slot = path_[a][c][pq];
                if (slot < 0) {
                  slot = img;
                  if (!coherent(a, c, pq)) return false;
                  changed = true;
                } else if (slot != img) {
                  return false;
                }
              }
          }
    }
    return true;
  }

  bool branch() {
    guard_.tick();
    const int n = A_.object_count;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int p = 0; p < A_.paths.path_size[a][b]; ++p) {
          if (path_[a][b][p] >= 0) continue;
          auto saved = path_;
          for (int v = 0; v < B_.paths.path_size[omap_[a]][omap_[b]]; ++v) {
            path_[a][b][p] = v;
            if (coherent(a, b, p) && propagate()) {
              if (!branch()) return false;
            }
            path_ = saved;
          }
          return true;
        }
    return (*sink_)(path_);
  }

  const FinPrecategory& A_;
  const FinPrecategory& B_;
  const std::vector<int>& omap_;
  const std::vector<std::vector<std::vector<int>>>& hom_;
  GuardCounter& guard_;
  const std::function<bool(const std::vector<std::vector<std::vector<int>>>&)>*
      sink_ = nullptr;
  std::vector<std::vector<std::vector<int>>> path_;
};

// Fills hom_maps for a fixed object map by depth-first search.  Identity
// images and composites of assigned entries are propagated before
// branching, so only genuinely free generators fan out.
class FunctorSearch {
 public:
  FunctorSearch(const FinPrecategory& A, const FinPrecategory& B,
                GuardCounter& guard,
                const std::function<bool(const FinFunctor&)>& sink,
                CatPtr domp, CatPtr codp)
      : A_(A), B_(B), guard_(guard), sink_(sink), domp_(domp), codp_(codp) {}

  // Returns false if the sink requested a stop.
  bool run() {
    const int n = A_.object_count;
    std::vector<int> omap(static_cast<size_t>(n), 0);
    if (B_.object_count == 0) {
      if (n == 0) {
        FinFunctor F = assemble(omap, {}, {});
        return sink_(F);
      }
      return true;
    }
    for (;;) {
      guard_.tick();
      if (!try_object_map(omap)) return false;
      int i = n - 1;
      while (i >= 0 && omap[i] == B_.object_count - 1) omap[i--] = 0;
      if (i < 0) return true;
      ++omap[i];
    }
  }

 private:
  struct HomVar {
    ObjId a, b;
    int f;
  };

  bool try_object_map(const std::vector<int>& omap) {
    const int n = A_.object_count;
    omap_ = omap;
    hom_.assign(static_cast<size_t>(n),
                std::vector<std::vector<int>>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (A_.hom_size[a][b] > 0 &&
            B_.hom_size[omap_[a]][omap_[b]] == 0)
          return true;  // no functor with this object map
        hom_[a][b].assign(static_cast<size_t>(A_.hom_size[a][b]), -1);
      }
    for (int a = 0; a < n; ++a)
      hom_[a][a][A_.identity[a]] = B_.identity[omap_[a]];
    if (!propagate_homs()) return true;
    return branch_hom(0);
  }

  // Fixpoint pass over composition constraints; false on conflict.
  bool propagate_homs() {
    const int n = A_.object_count;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int f = 0; f < A_.hom_size[a][b]; ++f) {
              if (hom_[a][b][f] < 0) continue;
              for (int g = 0; g < A_.hom_size[b][c]; ++g) {
                if (hom_[b][c][g] < 0) continue;
                int gf = A_.comp[a][b][c][f][g];
                int img =
                    B_.comp[omap_[a]][omap_[b]][omap_[c]][hom_[a][b][f]]
                           [hom_[b][c][g]];
                int& slot = hom_[a][c][gf];
                if (slot < 0) {
                  slot = img;
                  changed = true;
                } else if (slot != img) {
                  return false;
                }
              }
            }
    }
    return true;
  }

  std::optional<HomVar> first_unassigned_hom() const {
    const int n = A_.object_count;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int f = 0; f < A_.hom_size[a][b]; ++f)
          if (hom_[a][b][f] < 0) return HomVar{a, b, f};
    return std::nullopt;
  }

  bool branch_hom(int depth) {
    guard_.tick();
    auto var = first_unassigned_hom();
    if (!var) return search_paths();
    auto saved = hom_;
    for (int v = 0; v < B_.hom_size[omap_[var->a]][omap_[var->b]]; ++v) {
      hom_[var->a][var->b][var->f] = v;
      if (propagate_homs()) {
        if (!branch_hom(depth + 1)) return false;
      }
      hom_ = saved;
    }
    return true;
  }

  // Path part delegated to PathSearch.
  bool search_paths() {
    PathSearch ps(A_, B_, omap_, hom_, guard_);
    return ps.run([&](const std::vector<std::vector<std::vector<int>>>& path) {
      FinFunctor F = assemble(omap_, hom_, path);
      return sink_(F);
    });
  }

  FinFunctor assemble(const std::vector<int>& omap,
                      const std::vector<std::vector<std::vector<int>>>& hom,
                      const std::vector<std::vector<std::vector<int>>>& path)
      const {
    const int n = A_.object_count;
    FinFunctor F;
    F.dom = domp_;
    F.cod = codp_;
    F.obj_map = FinMap{n, B_.object_count, omap};
    F.hom_maps.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
    F.path_map.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        F.hom_maps[a][b] =
            FinMap{A_.hom_size[a][b], B_.hom_size[omap[a]][omap[b]],
                   n > 0 ? hom[a][b] : std::vector<int>{}};
        F.path_map[a][b] =
            FinMap{A_.paths.path_size[a][b],
                   B_.paths.path_size[omap[a]][omap[b]],
                   n > 0 ? path[a][b] : std::vector<int>{}};
      }
    return F;
  }

  const FinPrecategory& A_;
  const FinPrecategory& B_;
  GuardCounter& guard_;
  const std::function<bool(const FinFunctor&)>& sink_;
  CatPtr domp_, codp_;
  std::vector<int> omap_;
  std::vector<std::vector<std::vector<int>>> hom_;
};

}  // namespace detail

// First valid path_map (lexicographically) for fixed object and hom data,
// or nullopt when no functorial choice of path images exists.
inline std::optional<FinFunctor> complete_paths(const FinFunctor& skeleton) {
  const FinPrecategory& A = *skeleton.dom;
  const FinPrecategory& B = *skeleton.cod;
  const int n = A.object_count;
  std::vector<std::vector<std::vector<int>>> hom(
      static_cast<size_t>(n),
      std::vector<std::vector<int>>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) hom[a][b] = skeleton.hom_maps[a][b].table;
  GuardCounter guard;
  detail::PathSearch ps(A, B, skeleton.obj_map.table, hom, guard);
  std::optional<FinFunctor> out;
  ps.run([&](const std::vector<std::vector<std::vector<int>>>& path) {
    FinFunctor F = skeleton;
    F.path_map.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        F.path_map[a][b] = FinMap{
            A.paths.path_size[a][b],
            B.paths.path_size[F.on(a)][F.on(b)], path[a][b]};
    out = std::move(F);
    return false;  // first solution only
  });
  return out;
}

// Cheap upper bound on the number of functor candidates A -> B before any
// law filtering; saturates at cap+1.  Used to skip hopeless enumerations
// without spending the node guard on them.
inline long long functor_candidate_bound(const FinPrecategory& A,
                                         const FinPrecategory& B,
                                         long long cap) {
  const int n = A.object_count;
  long long omaps = count_maps_capped(n, B.object_count, cap);
  if (omaps > cap) return cap + 1;
  if (B.object_count == 0) return n == 0 ? 1 : 0;
  long long total = 0;
  std::vector<int> omap(static_cast<size_t>(n), 0);
  for (;;) {
    long long per = 1;
    for (int a = 0; a < n && per <= cap; ++a)
      for (int b = 0; b < n && per <= cap; ++b) {
        long long h = count_maps_capped(
            A.hom_size[a][b], B.hom_size[omap[a]][omap[b]], cap);
        long long p = count_maps_capped(
            A.paths.path_size[a][b],
            B.paths.path_size[omap[a]][omap[b]], cap);
        if (h == 0 || p == 0) {
          per = 0;
          break;
        }
        if (per > cap / std::max<long long>(h, 1))
          per = cap + 1;
        else
          per *= h;
        if (per <= cap) {
          if (per > cap / std::max<long long>(p, 1))
            per = cap + 1;
          else
            per *= p;
        }
      }
    total += per;
    if (total > cap) return cap + 1;
    int i = n - 1;
    while (i >= 0 && omap[i] == B.object_count - 1) omap[i--] = 0;
    if (i < 0) break;
    ++omap[i];
  }
  return total;
}

// All functors A -> B: object maps in lexicographic order, then hom and
// path tables lexicographically.  Deterministic across runs.
inline void for_each_functor(CatPtr A, CatPtr B,
                             const std::function<bool(const FinFunctor&)>& fn,
                             GuardCounter& guard) {
  detail::FunctorSearch search(*A, *B, guard, fn, A, B);
  search.run();
}

inline std::vector<FinFunctor> enumerate_functors(CatPtr A, CatPtr B) {
  GuardCounter guard;
  std::vector<FinFunctor> out;
  for_each_functor(
      A, B,
      [&](const FinFunctor& F) {
        out.push_back(F);
        return true;
      },
      guard);
  return out;
}

// All natural transformations F -> G in lexicographic component order.
inline std::vector<FinNatTrans> enumerate_nat_trans(const FinFunctor& F,
                                                    const FinFunctor& G) {
  if (!same_cat(F.dom, G.dom) || !same_cat(F.cod, G.cod))
    throw DomainMismatch("enumerate_nat_trans: functors are not parallel");
  const FinPrecategory& A = *F.dom;
  const FinPrecategory& B = *F.cod;
  const int n = A.object_count;
  GuardCounter guard;
  std::vector<FinNatTrans> out;
  std::vector<int> comp(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    if (B.hom_size[F.on(a)][G.on(a)] == 0) return out;
  if (n == 0) {
    FinNatTrans t;
    t.src = F;
    t.tgt = G;
    out.push_back(t);
    return out;
  }
  for (;;) {
    guard.tick();
    FinNatTrans t;
    t.src = F;
    t.tgt = G;
    for (int a = 0; a < n; ++a)
      t.components.push_back(MorRef{F.on(a), G.on(a), comp[a]});
    if (validate_nat_trans(t).ok()) out.push_back(std::move(t));
    int i = n - 1;
    while (i >= 0 && comp[i] == B.hom_size[F.on(i)][G.on(i)] - 1)
      comp[i--] = 0;
    if (i < 0) break;
    ++comp[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Functor category

// Pointwise path family F = G with the transport coherence that makes it a
// path between functors.
struct FunctorPath {
  std::vector<PathRef> components;  // [a] in paths(Fa, Ga)
  auto operator<=>(const FunctorPath&) const = default;
};

inline bool functor_path_coherent(const FinFunctor& F, const FinFunctor& G,
                                  const FunctorPath& fp) {
  const FinPrecategory& A = *F.dom;
  const FinPrecategory& B = *F.cod;
  for (int a = 0; a < A.object_count; ++a)
    for (int b = 0; b < A.object_count; ++b)
      for (int f = 0; f < A.hom_size[a][b]; ++f) {
        MorRef mf{a, b, f};
        if (transport_hom(B, fp.components[a], fp.components[b], F.on(mf)) !=
            G.on(mf))
          return false;
      }
  return true;
}

// All coherent path families F = G in lexicographic order.
inline std::vector<FunctorPath> enumerate_functor_paths(const FinFunctor& F,
                                                        const FinFunctor& G) {
  const FinPrecategory& A = *F.dom;
  const FinPrecategory& B = *F.cod;
  const int n = A.object_count;
  GuardCounter guard;
  std::vector<FunctorPath> out;
  for (int a = 0; a < n; ++a)
    if (B.paths.path_size[F.on(a)][G.on(a)] == 0) return out;
  if (n == 0) {
    out.push_back(FunctorPath{});
    return out;
  }
  std::vector<int> comp(static_cast<size_t>(n), 0);
  for (;;) {
    guard.tick();
    FunctorPath fp;
    for (int a = 0; a < n; ++a)
      fp.components.push_back(PathRef{F.on(a), G.on(a), comp[a]});
    if (functor_path_coherent(F, G, fp)) out.push_back(std::move(fp));
    int i = n - 1;
    while (i >= 0 && comp[i] == B.paths.path_size[F.on(i)][G.on(i)] - 1)
      comp[i--] = 0;
    if (i < 0) break;
    ++comp[i];
  }
  return out;
}

// The precategory B^A together with the dictionaries from its object,
// morphism and path indices back to functors, transformations and families.
struct FunctorCategory {
  CatPtr dom, cod;  // A, B
  CatPtr cat;       // B^A
  std::vector<FinFunctor> objects;
  std::vector<std::vector<std::vector<FinNatTrans>>> homs;     // [F][G][k]
  std::vector<std::vector<std::vector<FunctorPath>>> fpaths;   // [F][G][p]

  int object_index(const FinFunctor& F) const {
    for (size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == F) return static_cast<int>(i);
    return -1;
  }
  // Lookup by component vector within hom(i,j).
  int hom_index(int i, int j, const std::vector<MorRef>& comps) const {
    for (size_t k = 0; k < homs[i][j].size(); ++k)
      if (homs[i][j][k].components == comps) return static_cast<int>(k);
    return -1;
  }
  int path_index(int i, int j, const FunctorPath& fp) const {
    for (size_t k = 0; k < fpaths[i][j].size(); ++k)
      if (fpaths[i][j][k] == fp) return static_cast<int>(k);
    return -1;
  }
  const FinNatTrans& nat_of(MorRef m) const {
    return homs[m.src][m.tgt][m.index];
  }
};

inline FunctorCategory functor_category(CatPtr A, CatPtr B) {
  FunctorCategory FC;
  FC.dom = A;
  FC.cod = B;
  FC.objects = enumerate_functors(A, B);
  const int n = static_cast<int>(FC.objects.size());
  GuardCounter guard;

  FinPrecategory C;
  C.object_count = n;
  C.hom_size.assign(n, std::vector<int>(n, 0));
  FC.homs.assign(static_cast<size_t>(n),
                 std::vector<std::vector<FinNatTrans>>(static_cast<size_t>(n)));
  FC.fpaths.assign(
      static_cast<size_t>(n),
      std::vector<std::vector<FunctorPath>>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FC.homs[i][j] = enumerate_nat_trans(FC.objects[i], FC.objects[j]);
      FC.fpaths[i][j] =
          enumerate_functor_paths(FC.objects[i], FC.objects[j]);
      C.hom_size[i][j] = static_cast<int>(FC.homs[i][j].size());
      guard.tick(C.hom_size[i][j]);
    }

  C.identity.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int k = FC.hom_index(i, i, identity_nat(FC.objects[i]).components);
    if (k < 0) throw CatError("functor_category: identity missing");
    C.identity[i] = k;
  }
  C.comp.assign(n, std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto& tab = C.comp[i][j][k];
        tab.assign(FC.homs[i][j].size(),
                   std::vector<int>(FC.homs[j][k].size(), 0));
        for (size_t f = 0; f < FC.homs[i][j].size(); ++f)
          for (size_t g = 0; g < FC.homs[j][k].size(); ++g) {
            guard.tick();
            auto v = vcomp(FC.homs[j][k][g], FC.homs[i][j][f]);
            int idx = FC.hom_index(i, k, v.components);
            if (idx < 0)
              throw CatError("functor_category: vcomp left the hom set");
            tab[f][g] = idx;
          }
      }

  FinGroupoid G;
  G.object_count = n;
  G.path_size.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G.path_size[i][j] = static_cast<int>(FC.fpaths[i][j].size());
  G.refl.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    FunctorPath refl;
    const FinFunctor& F = FC.objects[i];
    for (int a = 0; a < A->object_count; ++a)
      refl.components.push_back(B->paths.refl_path(F.on(a)));
    int k = FC.path_index(i, i, refl);
    if (k < 0) throw CatError("functor_category: refl family missing");
    G.refl[i] = k;
  }
  G.concat.assign(n, std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
  G.inv.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& inv = G.inv[i][j];
      inv.resize(FC.fpaths[i][j].size());
      for (size_t p = 0; p < FC.fpaths[i][j].size(); ++p) {
        FunctorPath ip;
        for (PathRef c : FC.fpaths[i][j][p].components)
          ip.components.push_back(B->paths.inverse(c));
        int k = FC.path_index(j, i, ip);
        if (k < 0) throw CatError("functor_category: inverse family missing");
        inv[p] = k;
      }
      for (int k2 = 0; k2 < n; ++k2) {
        auto& tab = G.concat[i][j][k2];
        tab.assign(FC.fpaths[i][j].size(),
                   std::vector<int>(FC.fpaths[j][k2].size(), 0));
        for (size_t p = 0; p < FC.fpaths[i][j].size(); ++p)
          for (size_t q = 0; q < FC.fpaths[j][k2].size(); ++q) {
            guard.tick();
            FunctorPath cp;
            for (int a = 0; a < A->object_count; ++a)
              cp.components.push_back(B->paths.concat_paths(
                  FC.fpaths[i][j][p].components[a],
                  FC.fpaths[j][k2][q].components[a]));
            int idx = FC.path_index(i, k2, cp);
            if (idx < 0)
              throw CatError("functor_category: concat family missing");
            tab[p][q] = idx;
          }
      }
    }
  C.paths = G;

  // J sends a path family to the transformation with components J_B(p_a).
  C.transport.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& t = C.transport[i][j];
      t.resize(FC.fpaths[i][j].size());
      for (size_t p = 0; p < FC.fpaths[i][j].size(); ++p) {
        std::vector<MorRef> comps;
        for (PathRef c : FC.fpaths[i][j][p].components)
          comps.push_back(B->idtoiso(c));
        int idx = FC.hom_index(i, j, comps);
        if (idx < 0)
          throw CatError("functor_category: J image is not natural");
        t[p] = idx;
      }
    }
  FC.cat = wrap(std::move(C));
  return FC;
}

// ---------------------------------------------------------------------------
// Currying

struct CurriedFunctor {
  FunctorCategory exponential;  // C^B
  FinFunctor fun;               // A -> C^B
};

// The functor B -> C picked out by fixing the left argument of F: AxB -> C.
inline FinFunctor fix_left(const FinFunctor& F, CatPtr A, CatPtr B, ObjId a) {
  ProductIndex ix{*A, *B};
  const FinPrecategory& PA = *A;
  const FinPrecategory& PB = *B;
  FinFunctor Fa;
  Fa.dom = B;
  Fa.cod = F.cod;
  const int nb = PB.object_count;
  std::vector<int> omap(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) omap[b] = F.on(ix.obj(a, b));
  Fa.obj_map = FinMap{nb, F.cod->object_count, omap};
  Fa.hom_maps.assign(static_cast<size_t>(nb), std::vector<FinMap>(nb));
  Fa.path_map.assign(static_cast<size_t>(nb), std::vector<FinMap>(nb));
  for (int b0 = 0; b0 < nb; ++b0)
    for (int b1 = 0; b1 < nb; ++b1) {
      std::vector<int> h(static_cast<size_t>(PB.hom_size[b0][b1]));
      for (int g = 0; g < PB.hom_size[b0][b1]; ++g)
        h[g] = F.on(ix.mor(PA.id(a), MorRef{b0, b1, g})).index;
      Fa.hom_maps[b0][b1] =
          FinMap{PB.hom_size[b0][b1],
                 F.cod->hom_size[omap[b0]][omap[b1]], std::move(h)};
      std::vector<int> p(static_cast<size_t>(PB.paths.path_size[b0][b1]));
      for (int q = 0; q < PB.paths.path_size[b0][b1]; ++q)
        p[q] = F.on(ix.path(PA.paths.refl_path(a), PathRef{b0, b1, q})).index;
      Fa.path_map[b0][b1] =
          FinMap{PB.paths.path_size[b0][b1],
                 F.cod->paths.path_size[omap[b0]][omap[b1]], std::move(p)};
    }
  return Fa;
}

inline CurriedFunctor curry_functor(const FinFunctor& F, CatPtr A, CatPtr B) {
  if (!(*F.dom == product(*A, *B)))
    throw DomainMismatch("curry_functor: F.dom is not the product of A and B");
  ProductIndex ix{*A, *B};
  CurriedFunctor out{functor_category(B, F.cod), {}};
  const FunctorCategory& E = out.exponential;
  const FinPrecategory& PA = *A;
  const FinPrecategory& PB = *B;
  FinFunctor& G = out.fun;
  G.dom = A;
  G.cod = E.cat;
  const int na = PA.object_count;
  std::vector<int> omap(static_cast<size_t>(na));
  for (int a = 0; a < na; ++a) {
    int idx = E.object_index(fix_left(F, A, B, a));
    if (idx < 0) throw CatError("curry_functor: slice functor not found");
    omap[a] = idx;
  }
  G.obj_map = FinMap{na, static_cast<int>(E.objects.size()), omap};
  G.hom_maps.assign(static_cast<size_t>(na), std::vector<FinMap>(na));
  G.path_map.assign(static_cast<size_t>(na), std::vector<FinMap>(na));
  for (int a0 = 0; a0 < na; ++a0)
    for (int a1 = 0; a1 < na; ++a1) {
      std::vector<int> h(static_cast<size_t>(PA.hom_size[a0][a1]));
      for (int f = 0; f < PA.hom_size[a0][a1]; ++f) {
        std::vector<MorRef> comps;
        for (int b = 0; b < PB.object_count; ++b)
          comps.push_back(F.on(ix.mor(MorRef{a0, a1, f}, PB.id(b))));
        int idx = E.hom_index(omap[a0], omap[a1], comps);
        if (idx < 0)
          throw CatError("curry_functor: component family not natural");
        h[f] = idx;
      }
      G.hom_maps[a0][a1] =
          FinMap{PA.hom_size[a0][a1],
                 E.cat->hom_size[omap[a0]][omap[a1]], std::move(h)};
      std::vector<int> p(static_cast<size_t>(PA.paths.path_size[a0][a1]));
      for (int q = 0; q < PA.paths.path_size[a0][a1]; ++q) {
        FunctorPath fp;
        for (int b = 0; b < PB.object_count; ++b)
          fp.components.push_back(
              F.on(ix.path(PathRef{a0, a1, q}, PB.paths.refl_path(b))));
        int idx = E.path_index(omap[a0], omap[a1], fp);
        if (idx < 0) throw CatError("curry_functor: path family not coherent");
        p[q] = idx;
      }
      G.path_map[a0][a1] =
          FinMap{PA.paths.path_size[a0][a1],
                 E.cat->paths.path_size[omap[a0]][omap[a1]], std::move(p)};
    }
  return out;
}

inline FinFunctor uncurry_functor(const FinFunctor& G,
                                  const FunctorCategory& exp) {
  if (!same_cat(G.cod, exp.cat))
    throw DomainMismatch("uncurry_functor: G.cod is not the exponential");
  CatPtr A = G.dom;
  CatPtr B = exp.dom;
  CatPtr C = exp.cod;
  FinFunctor F;
  F.dom = wrap(product(*A, *B));
  F.cod = C;
  ProductIndex ix{*A, *B};
  const FinPrecategory& PA = *A;
  const FinPrecategory& PB = *B;
  const int n = F.dom->object_count;
  auto slice = [&](ObjId a) -> const FinFunctor& {
    return exp.objects[G.on(a)];
  };
  std::vector<int> omap(static_cast<size_t>(n));
  for (int a = 0; a < PA.object_count; ++a)
    for (int b = 0; b < PB.object_count; ++b)
      omap[ix.obj(a, b)] = slice(a).on(b);
  F.obj_map = FinMap{n, C->object_count, omap};
  F.hom_maps.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  F.path_map.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      std::vector<int> h(static_cast<size_t>(F.dom->hom_size[s][t]));
      for (int m = 0; m < F.dom->hom_size[s][t]; ++m) {
        auto [f, g] = ix.split_mor(MorRef{s, t, m});
        // G(a')(g) o G(f)_b
        const FinNatTrans& gf = exp.nat_of(
            MorRef{G.on(f.src), G.on(f.tgt),
                   G.hom_maps[f.src][f.tgt](f.index)});
        MorRef val =
            C->compose(slice(f.tgt).on(g), gf.components[g.src]);
        h[m] = val.index;
      }
      F.hom_maps[s][t] = FinMap{
          F.dom->hom_size[s][t], C->hom_size[omap[s]][omap[t]], std::move(h)};
      std::vector<int> pt(
          static_cast<size_t>(F.dom->paths.path_size[s][t]));
      for (int m = 0; m < F.dom->paths.path_size[s][t]; ++m) {
        auto [p, q] = ix.split_path(PathRef{s, t, m});
        const FunctorPath& gp =
            exp.fpaths[G.on(p.src)][G.on(p.tgt)]
                      [G.path_map[p.src][p.tgt](p.index)];
        // G(a).path(q) then (G.path(p))_{b'}
        PathRef val = C->paths.concat_paths(slice(p.src).on(q),
                                            gp.components[q.tgt]);
        pt[m] = val.index;
      }
      F.path_map[s][t] =
          FinMap{F.dom->paths.path_size[s][t],
                 C->paths.path_size[omap[s]][omap[t]], std::move(pt)};
    }
  return F;
}

}  // namespace catkit
