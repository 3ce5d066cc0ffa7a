#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "catkit/functor.hpp"

namespace catkit {

struct InvalidAdjunction : CatError {
  explicit InvalidAdjunction(const std::string& msg) : CatError(msg) {}
};

// F -| G with unit eta: 1_A -> GF and counit eps: FG -> 1_B.
struct Adjunction {
  FinFunctor F, G;
  FinNatTrans eta, eps;
};

struct AdjointEquivalence {
  Adjunction adj;
  std::vector<MorRef> eta_inverses, eps_inverses;
};

// Shapes, naturality of unit and counit, and both triangle identities,
// checked pointwise.
inline ValidationReport check_adjunction(const Adjunction& adj) {
  using detail::add;
  ValidationReport r;
  const FinFunctor& F = adj.F;
  const FinFunctor& G = adj.G;
  if (!same_cat(F.dom, G.cod) || !same_cat(F.cod, G.dom)) {
    add(r, "structure", "F and G are not opposed");
    return r;
  }
  CatPtr A = F.dom;
  CatPtr B = F.cod;
  if (!(adj.eta.src == identity_functor(A)) ||
      !(adj.eta.tgt == compose_functors(G, F))) {
    add(r, "structure", "eta is not 1_A -> GF");
    return r;
  }
  if (!(adj.eps.src == compose_functors(F, G)) ||
      !(adj.eps.tgt == identity_functor(B))) {
    add(r, "structure", "eps is not FG -> 1_B");
    return r;
  }
  for (const auto& v : validate_nat_trans(adj.eta).violations)
    r.violations.push_back(Violation{v.law, "eta: " + v.detail});
  for (const auto& v : validate_nat_trans(adj.eps).violations)
    r.violations.push_back(Violation{v.law, "eps: " + v.detail});
  if (!r.ok()) return r;
  // (eps F)(F eta) = 1_F, at each a: eps_{Fa} o F(eta_a) = 1_{Fa}
  for (int a = 0; a < A->object_count; ++a) {
    MorRef lhs = B->compose(adj.eps.components[F.on(a)],
                            F.on(adj.eta.components[a]));
    if (lhs != B->id(F.on(a)))
      add(r, "triangle-1", "eps_Fa o F(eta_a) != 1 at object ", a);
  }
  // (G eps)(eta G) = 1_G, at each b: G(eps_b) o eta_{Gb} = 1_{Gb}
  for (int b = 0; b < B->object_count; ++b) {
    MorRef lhs = A->compose(G.on(adj.eps.components[b]),
                            adj.eta.components[G.on(b)]);
    if (lhs != A->id(G.on(b)))
      add(r, "triangle-2", "G(eps_b) o eta_Gb != 1 at object ", b);
  }
  return r;
}

// Upgrades quasi-equivalence data (eta, eps natural isos) to an adjoint
// equivalence by replacing the counit with
//   eps'_b = eps_b o F(eta_{Gb})^-1 o (eps_{FGb})^-1.
inline AdjointEquivalence adjointify(const FinFunctor& F, const FinFunctor& G,
                                     const FinNatTrans& eta,
                                     const FinNatTrans& eps) {
  if (!same_cat(F.dom, G.cod) || !same_cat(F.cod, G.dom))
    throw DomainMismatch("adjointify: F and G are not opposed");
  CatPtr A = F.dom;
  CatPtr B = F.cod;
  if (!(eta.src == identity_functor(A)) || !(eta.tgt == compose_functors(G, F)))
    throw DomainMismatch("adjointify: eta is not 1_A -> GF");
  if (!(eps.src == compose_functors(F, G)) || !(eps.tgt == identity_functor(B)))
    throw DomainMismatch("adjointify: eps is not FG -> 1_B");
  if (!validate_nat_trans(eta).ok())
    throw NotANatIso("adjointify: eta is not natural");
  if (!validate_nat_trans(eps).ok())
    throw NotANatIso("adjointify: eps is not natural");
  auto eta_inv = nat_iso_inverse(eta);
  if (!eta_inv) {
    int bad = -1;
    for (size_t a = 0; a < eta.components.size(); ++a)
      if (!is_iso(*A, eta.components[a])) {
        bad = static_cast<int>(a);
        break;
      }
    throw NotANatIso("adjointify: eta component at object " +
                     std::to_string(bad) + " is not an isomorphism");
  }
  auto eps_inv = nat_iso_inverse(eps);
  if (!eps_inv) {
    int bad = -1;
    for (size_t b = 0; b < eps.components.size(); ++b)
      if (!is_iso(*B, eps.components[b])) {
        bad = static_cast<int>(b);
        break;
      }
    throw NotANatIso("adjointify: eps component at object " +
                     std::to_string(bad) + " is not an isomorphism");
  }

  FinNatTrans eps2;
  eps2.src = eps.src;
  eps2.tgt = eps.tgt;
  for (int b = 0; b < B->object_count; ++b) {
    ObjId gb = G.on(b);
    ObjId fgb = F.on(gb);
    // FGb --(eps_{FGb})^-1--> FGFGb --F(eta_{Gb})^-1--> FGb --eps_b--> b
    MorRef step1 = eps_inv->components[fgb];
    MorRef step2 = F.on(eta_inv->components[gb]);
    MorRef val = B->compose(eps.components[b], B->compose(step2, step1));
    eps2.components.push_back(val);
  }

  AdjointEquivalence out;
  out.adj = Adjunction{F, G, eta, eps2};
  out.eta_inverses = eta_inv->components;
  for (MorRef c : eps2.components) {
    auto w = iso_witness(*B, c);
    if (!w)
      throw NotANatIso("adjointify: replaced counit lost invertibility");
    out.eps_inverses.push_back(*w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fully faithful / essentially surjective analysis

struct FFFailure {
  ObjId a = 0, b = 0;
  enum Reason { NotInjective, NotSurjective } reason = NotInjective;
};

struct FFReport {
  bool faithful = true;
  bool full = true;
  std::vector<FFFailure> failures;
  bool fully_faithful() const { return faithful && full; }
};

inline FFReport ff_report(const FinFunctor& F) {
  FFReport rep;
  const FinPrecategory& A = *F.dom;
  for (int a = 0; a < A.object_count; ++a)
    for (int b = 0; b < A.object_count; ++b) {
      const FinMap& h = F.hom_maps[a][b];
      if (!is_injective(h)) {
        rep.faithful = false;
        rep.failures.push_back(FFFailure{a, b, FFFailure::NotInjective});
      }
      if (!is_surjective(h)) {
        rep.full = false;
        rep.failures.push_back(FFFailure{a, b, FFFailure::NotSurjective});
      }
    }
  return rep;
}

// Split essential-surjectivity data: for each object b of the codomain, a
// domain object and an isomorphism F(a) ~ b (with inverse).
struct EsoEntry {
  ObjId a = 0;
  MorRef iso;      // F(a) -> b
  MorRef iso_inv;  // b -> F(a)
};

struct EsoWitness {
  std::vector<std::optional<EsoEntry>> entries;  // [b]
  std::vector<ObjId> unreachable;
  bool total() const { return unreachable.empty(); }
};

// First-found deterministic search: lowest domain object, then lowest iso
// index.  A per-object witness decides mere essential surjectivity.
inline EsoWitness essential_surjectivity_witness(const FinFunctor& F) {
  EsoWitness w;
  const FinPrecategory& A = *F.dom;
  const FinPrecategory& B = *F.cod;
  for (int b = 0; b < B.object_count; ++b) {
    std::optional<EsoEntry> found;
    for (int a = 0; a < A.object_count && !found; ++a) {
      auto isos = iso_set(B, F.on(a), b);
      if (!isos.empty())
        found = EsoEntry{a, isos[0].first, isos[0].second};
    }
    if (!found) w.unreachable.push_back(b);
    w.entries.push_back(found);
  }
  return w;
}

struct WeakEquivalenceReport {
  bool holds = false;
  FFReport ff;
  EsoWitness eso;
};

inline WeakEquivalenceReport is_weak_equivalence(const FinFunctor& F) {
  WeakEquivalenceReport rep;
  rep.ff = ff_report(F);
  rep.eso = essential_surjectivity_witness(F);
  rep.holds = rep.ff.fully_faithful() && rep.eso.total();
  return rep;
}

// ---------------------------------------------------------------------------
// Equivalence from fully faithful + split essentially surjective data

inline int unique_preimage(const FinMap& m, int value) {
  int found = -1;
  for (int i = 0; i < m.dom; ++i)
    if (m(i) == value) {
      if (found >= 0) throw CatError("unique_preimage: map not injective");
      found = i;
    }
  if (found < 0) throw CatError("unique_preimage: map not surjective");
  return found;
}

// The constructive content of "fully faithful + split essentially
// surjective implies equivalence": G is built on objects from the witness,
// on homs by unique preimage of eps^-1 . g . eps, and eta by unique
// preimage of eps_{Fa}^-1.  Path data for G is completed by search; if no
// functorial choice exists the witness was not genuinely split.
inline AdjointEquivalence equivalence_from_ffeso(const FinFunctor& F,
                                                 const EsoWitness& w) {
  const FinPrecategory& A = *F.dom;
  const FinPrecategory& B = *F.cod;
  FFReport ff = ff_report(F);
  if (!ff.fully_faithful())
    throw NotFullyFaithful(
        "equivalence_from_ffeso: F is not fully faithful at pair (" +
        std::to_string(ff.failures[0].a) + "," +
        std::to_string(ff.failures[0].b) + ")");
  if (!w.total()) throw NotEssentiallySurjective(w.unreachable);

  FinFunctor G;
  G.dom = F.cod;
  G.cod = F.dom;
  const int nb = B.object_count;
  std::vector<int> omap(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) omap[b] = w.entries[b]->a;
  G.obj_map = FinMap{nb, A.object_count, omap};
  G.hom_maps.assign(static_cast<size_t>(nb), std::vector<FinMap>(nb));
  for (int b0 = 0; b0 < nb; ++b0)
    for (int b1 = 0; b1 < nb; ++b1) {
      std::vector<int> t(static_cast<size_t>(B.hom_size[b0][b1]));
      for (int g = 0; g < B.hom_size[b0][b1]; ++g) {
        // F(G(g)) = eps_{b1}^-1 o g o eps_{b0}
        MorRef conj = B.compose(
            w.entries[b1]->iso_inv,
            B.compose(MorRef{b0, b1, g}, w.entries[b0]->iso));
        t[g] = unique_preimage(F.hom_maps[omap[b0]][omap[b1]], conj.index);
      }
      G.hom_maps[b0][b1] =
          FinMap{B.hom_size[b0][b1], A.hom_size[omap[b0]][omap[b1]],
                 std::move(t)};
    }
  auto completed = complete_paths(G);
  if (!completed)
    throw NotSplitEssentiallySurjective(
        "equivalence_from_ffeso: witness admits no functorial path data; "
        "F is essentially surjective only in the mere sense");
  G = *completed;

  FinNatTrans eta;
  eta.src = identity_functor(F.dom);
  eta.tgt = compose_functors(G, F);
  for (int a = 0; a < A.object_count; ++a) {
    // F(eta_a) = eps_{Fa}^-1
    MorRef target = w.entries[F.on(a)]->iso_inv;
    int idx = unique_preimage(F.hom_maps[a][G.on(F.on(a))], target.index);
    eta.components.push_back(MorRef{a, G.on(F.on(a)), idx});
  }
  FinNatTrans eps;
  eps.src = compose_functors(F, G);
  eps.tgt = identity_functor(F.cod);
  for (int b = 0; b < nb; ++b) eps.components.push_back(w.entries[b]->iso);

  AdjointEquivalence out;
  out.adj = Adjunction{F, G, eta, eps};
  for (int b = 0; b < nb; ++b)
    out.eps_inverses.push_back(w.entries[b]->iso_inv);
  auto eta_inv = nat_iso_inverse(eta);
  if (!eta_inv)
    throw CatError("equivalence_from_ffeso: unit is not invertible");
  out.eta_inverses = eta_inv->components;
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphisms of precategories

struct PrecatIsoReport {
  bool holds = false;
  FFReport ff;
  // pairs (a,b) where path_map is not a bijection
  std::vector<std::pair<ObjId, ObjId>> path_failures;
  // codomain components with no object in the image
  std::vector<ObjId> unreached_components;
};

// Fully faithful on homs, and an equivalence of path groupoids on objects:
// every path_map bijective and every codomain component reached.  For
// discrete path groupoids this reduces to obj_map being a bijection.
inline PrecatIsoReport is_isomorphism_of_precats(const FinFunctor& F) {
  PrecatIsoReport rep;
  rep.ff = ff_report(F);
  const FinPrecategory& A = *F.dom;
  const FinPrecategory& B = *F.cod;
  for (int a = 0; a < A.object_count; ++a)
    for (int b = 0; b < A.object_count; ++b) {
      const FinMap& p = F.path_map[a][b];
      if (!is_injective(p) || !is_surjective(p))
        rep.path_failures.emplace_back(a, b);
    }
  auto comps = B.paths.components();
  std::vector<char> reached(static_cast<size_t>(B.object_count), 0);
  for (int a = 0; a < A.object_count; ++a) reached[comps[F.on(a)]] = 1;
  for (int b = 0; b < B.object_count; ++b)
    if (comps[b] == b && !reached[b]) rep.unreached_components.push_back(b);
  rep.holds = rep.ff.fully_faithful() && rep.path_failures.empty() &&
              rep.unreached_components.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// Uniqueness of adjoints (the constructive core of adjprop)

struct AdjointUniquenessResult {
  FinNatTrans gamma;  // G -> G'
  FinNatTrans delta;  // G' -> G
  FunctorPath path;   // isotoid of gamma, pointwise
};

// For two adjunction structures on the same F with univalent domain,
// builds gamma = (G' eps)(eta' G) and delta = (G eps')(eta G'), checks they
// are mutually inverse, and returns the path family isotoid(gamma).
inline AdjointUniquenessResult adjoint_uniqueness(const FinFunctor& F,
                                                  const Adjunction& adj1,
                                                  const Adjunction& adj2) {
  const FinPrecategory& A = *F.dom;
  if (!is_univalent(A).is_univalent)
    throw NotUnivalent("adjoint_uniqueness: domain of F is not univalent");
  if (!check_adjunction(adj1).ok() || !(adj1.F == F))
    throw InvalidAdjunction("adjoint_uniqueness: first adjunction invalid");
  if (!check_adjunction(adj2).ok() || !(adj2.F == F))
    throw InvalidAdjunction("adjoint_uniqueness: second adjunction invalid");

  const FinFunctor& G1 = adj1.G;
  const FinFunctor& G2 = adj2.G;
  FinNatTrans gamma = vcomp(whisker_left(G2, adj1.eps),
                            whisker_right(adj2.eta, G1));
  FinNatTrans delta = vcomp(whisker_left(G1, adj2.eps),
                            whisker_right(adj1.eta, G2));
  if (!(vcomp(delta, gamma) == identity_nat(G1)) ||
      !(vcomp(gamma, delta) == identity_nat(G2)))
    throw CatError("adjoint_uniqueness: gamma and delta are not inverse");

  AdjointUniquenessResult out;
  out.gamma = gamma;
  out.delta = delta;
  for (MorRef c : gamma.components) out.path.components.push_back(isotoid(A, c));
  if (!functor_path_coherent(G1, G2, out.path))
    throw CatError("adjoint_uniqueness: isotoid family lost coherence");
  return out;
}

}  // namespace catkit
