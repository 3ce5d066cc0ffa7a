#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "catkit/groupoid.hpp"

namespace catkit {

// Reference to a morphism inside hom(src, tgt) of an owning precategory.
// Morphisms of distinct (src,tgt) pairs never compare equal.
struct MorRef {
  ObjId src = 0;
  ObjId tgt = 0;
  int index = 0;
  auto operator<=>(const MorRef&) const = default;
};

// Finite precategory: objects, hom tables, composition, identities, plus an
// explicit path groupoid on the objects and the structure map J sending each
// path to a morphism (idtoiso as data).
struct FinPrecategory {
  int object_count = 0;
  std::vector<std::vector<int>> hom_size;               // [a][b]
  std::vector<int> identity;                            // [a], in hom(a,a)
  std::vector<std::vector<std::vector<Table2>>> comp;   // [a][b][c][f][g]
  FinGroupoid paths;
  std::vector<std::vector<std::vector<int>>> transport; // [a][b][p] -> hom

  auto operator<=>(const FinPrecategory&) const = default;

  int homs(ObjId a, ObjId b) const { return hom_size[a][b]; }

  MorRef id(ObjId a) const { return MorRef{a, a, identity[a]}; }

  bool is_id(MorRef f) const {
    return f.src == f.tgt && f.index == identity[f.src];
  }

  // g after f.
  MorRef compose(MorRef g, MorRef f) const {
    if (f.tgt != g.src)
      throw DomainMismatch("compose: f.tgt=" + std::to_string(f.tgt) +
                           " but g.src=" + std::to_string(g.src));
    return MorRef{f.src, g.tgt, comp[f.src][f.tgt][g.tgt][f.index][g.index]};
  }

  // J(p), the idtoiso structure map.
  MorRef idtoiso(PathRef p) const {
    return MorRef{p.src, p.tgt, transport[p.src][p.tgt][p.index]};
  }

  std::vector<MorRef> all_homs(ObjId a, ObjId b) const {
    std::vector<MorRef> out;
    for (int k = 0; k < hom_size[a][b]; ++k) out.push_back(MorRef{a, b, k});
    return out;
  }

  long long total_morphisms() const {
    long long n = 0;
    for (ObjId a = 0; a < object_count; ++a)
      for (ObjId b = 0; b < object_count; ++b) n += hom_size[a][b];
    return n;
  }
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string law;     // e.g. "unit-left", "assoc", "J-comp"
  std::string detail;  // witness, index-based
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has_law(const std::string& law) const {
    for (const auto& v : violations)
      if (v.law == law) return true;
    return false;
  }
  int count_law(const std::string& law) const {
    int n = 0;
    for (const auto& v : violations)
      if (v.law == law) ++n;
    return n;
  }
};

namespace detail {

inline std::string mor_str(MorRef f) {
  std::ostringstream os;
  os << "hom(" << f.src << "," << f.tgt << ")[" << f.index << "]";
  return os.str();
}

inline std::string path_str(PathRef p) {
  std::ostringstream os;
  os << "path(" << p.src << "," << p.tgt << ")[" << p.index << "]";
  return os.str();
}

template <typename... Args>
inline void add(ValidationReport& r, const std::string& law, Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  r.violations.push_back(Violation{law, os.str()});
}

}  // namespace detail

// Structural integrity: every table has the declared shape and every entry
// is in range.  Law checks below assume this and are skipped without it.
inline bool check_structure(const FinPrecategory& C, ValidationReport& r) {
  using detail::add;
  const int n = C.object_count;
  bool ok = true;
  auto shape2 = [&](const auto& v, const std::string& what) {
    if (static_cast<int>(v.size()) != n) {
      add(r, "structure", what, ": outer size ", v.size(), " != ", n);
      ok = false;
      return false;
    }
    for (const auto& row : v)
      if (static_cast<int>(row.size()) != n) {
        add(r, "structure", what, ": inner size mismatch");
        ok = false;
        return false;
      }
    return true;
  };
  if (n < 0) {
    add(r, "structure", "negative object count");
    return false;
  }
  if (!shape2(C.hom_size, "hom_size") || !shape2(C.comp, "comp") ||
      !shape2(C.paths.path_size, "path_size") ||
      !shape2(C.paths.concat, "concat") || !shape2(C.paths.inv, "inv") ||
      !shape2(C.transport, "transport"))
    return false;
  if (static_cast<int>(C.identity.size()) != n ||
      static_cast<int>(C.paths.refl.size()) != n) {
    add(r, "structure", "identity/refl vector size mismatch");
    return false;
  }
  if (C.paths.object_count != n) {
    add(r, "structure", "path groupoid object count ", C.paths.object_count,
        " != ", n);
    return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (C.hom_size[a][b] < 0 || C.paths.path_size[a][b] < 0) {
        add(r, "structure", "negative size at (", a, ",", b, ")");
        ok = false;
      }
  if (!ok) return false;
  for (int a = 0; a < n; ++a) {
    if (C.identity[a] < 0 || C.identity[a] >= C.hom_size[a][a]) {
      add(r, "structure", "identity index out of range at object ", a);
      ok = false;
    }
    if (C.paths.refl[a] < 0 || C.paths.refl[a] >= C.paths.path_size[a][a]) {
      add(r, "structure", "refl index out of range at object ", a);
      ok = false;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const auto& tab = C.comp[a][b][c];
        if (static_cast<int>(tab.size()) != C.hom_size[a][b]) {
          add(r, "structure", "comp table shape at (", a, ",", b, ",", c, ")");
          ok = false;
          continue;
        }
        for (const auto& row : tab) {
          if (static_cast<int>(row.size()) != C.hom_size[b][c]) {
            add(r, "structure", "comp row shape at (", a, ",", b, ",", c, ")");
            ok = false;
            continue;
          }
          for (int v : row)
            if (v < 0 || v >= C.hom_size[a][c]) {
              add(r, "structure", "comp entry out of range at (", a, ",", b,
                  ",", c, ")");
              ok = false;
            }
        }
        const auto& ptab = C.paths.concat[a][b][c];
        if (static_cast<int>(ptab.size()) != C.paths.path_size[a][b]) {
          add(r, "structure", "concat table shape at (", a, ",", b, ",", c,
              ")");
          ok = false;
          continue;
        }
        for (const auto& row : ptab) {
          if (static_cast<int>(row.size()) != C.paths.path_size[b][c]) {
            add(r, "structure", "concat row shape at (", a, ",", b, ",", c,
                ")");
            ok = false;
            continue;
          }
          for (int v : row)
            if (v < 0 || v >= C.paths.path_size[a][c]) {
              add(r, "structure", "concat entry out of range at (", a, ",", b,
                  ",", c, ")");
              ok = false;
            }
        }
      }
      const auto& itab = C.paths.inv[a][b];
      if (static_cast<int>(itab.size()) != C.paths.path_size[a][b]) {
        add(r, "structure", "inv table shape at (", a, ",", b, ")");
        ok = false;
      } else {
        for (int v : itab)
          if (v < 0 || v >= C.paths.path_size[b][a]) {
            add(r, "structure", "inv entry out of range at (", a, ",", b, ")");
            ok = false;
          }
      }
      const auto& ttab = C.transport[a][b];
      if (static_cast<int>(ttab.size()) != C.paths.path_size[a][b]) {
        add(r, "structure", "transport table shape at (", a, ",", b, ")");
        ok = false;
      } else {
        for (int v : ttab)
          if (v < 0 || v >= C.hom_size[a][b]) {
            add(r, "structure", "transport entry out of range at (", a, ",",
                b, ")");
            ok = false;
          }
      }
    }
  return ok;
}

// Full law check.  Violations are data, not faults: invalid structures are
// legitimate inputs and every broken law is reported with a witness.
inline ValidationReport validate_precategory(const FinPrecategory& C) {
  using detail::add;
  using detail::mor_str;
  using detail::path_str;
  ValidationReport r;
  if (!check_structure(C, r)) return r;
  const int n = C.object_count;

  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (int f = 0; f < C.hom_size[a][b]; ++f) {
        MorRef m{a, b, f};
        if (C.compose(C.id(b), m) != m)
          add(r, "unit-left", "1 o f != f for f=", mor_str(m));
        if (C.compose(m, C.id(a)) != m)
          add(r, "unit-right", "f o 1 != f for f=", mor_str(m));
      }

  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (ObjId d = 0; d < n; ++d)
          for (int f = 0; f < C.hom_size[a][b]; ++f)
            for (int g = 0; g < C.hom_size[b][c]; ++g)
              for (int h = 0; h < C.hom_size[c][d]; ++h) {
                MorRef mf{a, b, f}, mg{b, c, g}, mh{c, d, h};
                if (C.compose(mh, C.compose(mg, mf)) !=
                    C.compose(C.compose(mh, mg), mf))
                  add(r, "assoc", "h o (g o f) != (h o g) o f for f=",
                      mor_str(mf), " g=", mor_str(mg), " h=", mor_str(mh));
              }

  const auto& G = C.paths;
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (int p = 0; p < G.path_size[a][b]; ++p) {
        PathRef q{a, b, p};
        if (G.concat_paths(G.refl_path(a), q) != q)
          add(r, "path-unit-left", "refl . p != p for p=", path_str(q));
        if (G.concat_paths(q, G.refl_path(b)) != q)
          add(r, "path-unit-right", "p . refl != p for p=", path_str(q));
        if (G.concat_paths(q, G.inverse(q)) != G.refl_path(a))
          add(r, "path-inv", "p . p^-1 != refl for p=", path_str(q));
        if (G.concat_paths(G.inverse(q), q) != G.refl_path(b))
          add(r, "path-inv", "p^-1 . p != refl for p=", path_str(q));
      }
  for (ObjId a = 0; a < n; ++a)
    if (G.inverse(G.refl_path(a)) != G.refl_path(a))
      add(r, "path-inv", "refl^-1 != refl at object ", a);

  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (ObjId d = 0; d < n; ++d)
          for (int p = 0; p < G.path_size[a][b]; ++p)
            for (int q = 0; q < G.path_size[b][c]; ++q)
              for (int s = 0; s < G.path_size[c][d]; ++s) {
                PathRef pp{a, b, p}, qq{b, c, q}, ss{c, d, s};
                if (G.concat_paths(G.concat_paths(pp, qq), ss) !=
                    G.concat_paths(pp, G.concat_paths(qq, ss)))
                  add(r, "path-assoc", "concat not associative at p=",
                      path_str(pp), " q=", path_str(qq), " s=", path_str(ss));
              }

  // J laws: J(refl)=1, J(p.q)=J(q) o J(p), J(p^-1) two-sided inverse of J(p).
  for (ObjId a = 0; a < n; ++a)
    if (C.idtoiso(G.refl_path(a)) != C.id(a))
      add(r, "J-refl", "J(refl) != 1 at object ", a);
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (ObjId c = 0; c < n; ++c)
        for (int p = 0; p < G.path_size[a][b]; ++p)
          for (int q = 0; q < G.path_size[b][c]; ++q) {
            PathRef pp{a, b, p}, qq{b, c, q};
            if (C.idtoiso(G.concat_paths(pp, qq)) !=
                C.compose(C.idtoiso(qq), C.idtoiso(pp)))
              add(r, "J-comp", "J(p.q) != J(q) o J(p) for p=", path_str(pp),
                  " q=", path_str(qq));
          }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      for (int p = 0; p < G.path_size[a][b]; ++p) {
        PathRef pp{a, b, p};
        MorRef j = C.idtoiso(pp);
        MorRef ji = C.idtoiso(G.inverse(pp));
        if (C.compose(ji, j) != C.id(a) || C.compose(j, ji) != C.id(b))
          add(r, "J-iso", "J(p^-1) is not inverse to J(p) for p=",
              path_str(pp));
      }
  return r;
}

// ---------------------------------------------------------------------------
// Isomorphisms

// Two-sided inverse of f, if any.  Inverses are unique in a valid
// precategory; the scan asserts this rather than assuming it.
inline std::optional<MorRef> iso_witness(const FinPrecategory& C, MorRef f) {
  std::optional<MorRef> found;
  for (int g = 0; g < C.hom_size[f.tgt][f.src]; ++g) {
    MorRef mg{f.tgt, f.src, g};
    if (C.compose(mg, f) == C.id(f.src) && C.compose(f, mg) == C.id(f.tgt)) {
      if (found)
        throw CatError("iso_witness: two distinct inverses for " +
                       detail::mor_str(f) + "; input precategory is invalid");
      found = mg;
    }
  }
  return found;
}

// All isomorphisms in hom(a,b), each with its unique inverse, index order.
inline std::vector<std::pair<MorRef, MorRef>> iso_set(const FinPrecategory& C,
                                                      ObjId a, ObjId b) {
  std::vector<std::pair<MorRef, MorRef>> out;
  for (int f = 0; f < C.hom_size[a][b]; ++f) {
    MorRef mf{a, b, f};
    if (auto g = iso_witness(C, mf)) out.emplace_back(mf, *g);
  }
  return out;
}

inline bool is_iso(const FinPrecategory& C, MorRef f) {
  return iso_witness(C, f).has_value();
}

// J(q) o f o J(p)^-1; the transport of f:hom(a,b) along p:a=a', q:b=b'.
inline MorRef transport_hom(const FinPrecategory& C, PathRef p, PathRef q,
                            MorRef f) {
  MorRef jq = C.idtoiso(q);
  MorRef jp_inv = C.idtoiso(C.paths.inverse(p));
  return C.compose(jq, C.compose(f, jp_inv));
}

// ---------------------------------------------------------------------------
// Univalence

struct UnivalenceFailure {
  ObjId a = 0, b = 0;
  int path_count = 0;
  int iso_count = 0;
  enum Reason { NotInjective, NotSurjective } reason = NotInjective;
};

struct UnivalenceReport {
  bool is_univalent = true;
  std::vector<UnivalenceFailure> failures;
};

// Decides Def 3.6's condition pairwise: J_{a,b} must be a bijection from
// paths(a,b) onto the isomorphisms in hom(a,b).
inline UnivalenceReport is_univalent(const FinPrecategory& C) {
  UnivalenceReport rep;
  for (ObjId a = 0; a < C.object_count; ++a)
    for (ObjId b = 0; b < C.object_count; ++b) {
      auto isos = iso_set(C, a, b);
      const int np = C.paths.path_size[a][b];
      std::vector<char> hit(isos.size(), 0);
      bool injective = true;
      std::vector<int> seen;
      for (int p = 0; p < np; ++p) {
        MorRef j = C.idtoiso(PathRef{a, b, p});
        for (int prev : seen)
          if (prev == j.index) injective = false;
        seen.push_back(j.index);
        for (size_t k = 0; k < isos.size(); ++k)
          if (isos[k].first == j) hit[k] = 1;
      }
      bool surjective = true;
      for (char h : hit)
        if (!h) surjective = false;
      if (injective && surjective) continue;
      UnivalenceFailure f;
      f.a = a;
      f.b = b;
      f.path_count = np;
      f.iso_count = static_cast<int>(isos.size());
      f.reason = !injective ? UnivalenceFailure::NotInjective
                            : UnivalenceFailure::NotSurjective;
      rep.failures.push_back(f);
    }
  rep.is_univalent = rep.failures.empty();
  return rep;
}

// idtoiso applied to a path.
inline MorRef idtoiso(const FinPrecategory& C, PathRef p) {
  return C.idtoiso(p);
}

// Inverse of idtoiso; defined only on univalent inputs.
inline PathRef isotoid(const FinPrecategory& C, MorRef f) {
  if (!is_univalent(C).is_univalent)
    throw NotUnivalent("isotoid: precategory is not univalent");
  if (!is_iso(C, f))
    throw NotAnIso("isotoid: " + detail::mor_str(f) +
                   " has no two-sided inverse");
  for (int p = 0; p < C.paths.path_size[f.src][f.tgt]; ++p) {
    PathRef pp{f.src, f.tgt, p};
    if (C.idtoiso(pp) == f) return pp;
  }
  throw NotUnivalent("isotoid: no preimage path despite univalence");
}

// ---------------------------------------------------------------------------
// Classification

struct Classification {
  bool strict = false;    // discrete path groupoid
  bool gaunt = false;     // univalent and strict
  bool preorder = false;  // every hom has at most one element
};

inline Classification classify(const FinPrecategory& C) {
  Classification k;
  k.strict = C.paths.is_discrete();
  k.preorder = true;
  for (ObjId a = 0; a < C.object_count; ++a)
    for (ObjId b = 0; b < C.object_count; ++b)
      if (C.hom_size[a][b] > 1) k.preorder = false;
  k.gaunt = k.strict && is_univalent(C).is_univalent;
  return k;
}

// ---------------------------------------------------------------------------
// Opposite and product

inline FinPrecategory opposite(const FinPrecategory& C) {
  FinPrecategory D;
  const int n = C.object_count;
  D.object_count = n;
  D.identity = C.identity;
  D.paths = C.paths;
  D.hom_size.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) D.hom_size[a][b] = C.hom_size[b][a];
  D.comp.assign(n, std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // f: a->b and g: b->c in D are f: b->a and g: c->b in C;
        // g o_D f = f o_C g.
        auto& tab = D.comp[a][b][c];
        tab.assign(static_cast<size_t>(D.hom_size[a][b]),
                   std::vector<int>(static_cast<size_t>(D.hom_size[b][c]), 0));
        for (int f = 0; f < D.hom_size[a][b]; ++f)
          for (int g = 0; g < D.hom_size[b][c]; ++g)
            tab[f][g] = C.comp[c][b][a][g][f];
      }
  // J_op(p) = J(p^-1), an inverse of J(p) landing in hom_op correctly.
  D.transport.assign(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& t = D.transport[a][b];
      t.resize(static_cast<size_t>(C.paths.path_size[a][b]));
      for (int p = 0; p < C.paths.path_size[a][b]; ++p)
        t[p] = C.transport[b][a][C.paths.inv[a][b][p]];
    }
  return D;
}

inline FinPrecategory product(const FinPrecategory& A,
                              const FinPrecategory& B) {
  FinPrecategory P;
  const int na = A.object_count, nb = B.object_count;
  const int n = na * nb;
  GuardCounter guard;
  P.object_count = n;
  auto obj = [&](int a, int b) { return a * nb + b; };
  P.hom_size.assign(n, std::vector<int>(n, 0));
  for (int a0 = 0; a0 < na; ++a0)
    for (int b0 = 0; b0 < nb; ++b0)
      for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1) {
          guard.tick();
          P.hom_size[obj(a0, b0)][obj(a1, b1)] =
              A.hom_size[a0][a1] * B.hom_size[b0][b1];
        }
  auto mor = [&](int b0, int b1, int f, int g) {
    return f * B.hom_size[b0][b1] + g;
  };
  P.identity.assign(static_cast<size_t>(n), 0);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      P.identity[obj(a, b)] = mor(b, b, A.identity[a], B.identity[b]);
  P.comp.assign(n, std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
  for (int a0 = 0; a0 < na; ++a0)
    for (int b0 = 0; b0 < nb; ++b0)
      for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1)
          for (int a2 = 0; a2 < na; ++a2)
            for (int b2 = 0; b2 < nb; ++b2) {
              int s = obj(a0, b0), m = obj(a1, b1), t = obj(a2, b2);
              auto& tab = P.comp[s][m][t];
              tab.assign(
                  static_cast<size_t>(P.hom_size[s][m]),
                  std::vector<int>(static_cast<size_t>(P.hom_size[m][t]), 0));
              for (int f0 = 0; f0 < A.hom_size[a0][a1]; ++f0)
                for (int g0 = 0; g0 < B.hom_size[b0][b1]; ++g0)
                  for (int f1 = 0; f1 < A.hom_size[a1][a2]; ++f1)
                    for (int g1 = 0; g1 < B.hom_size[b1][b2]; ++g1) {
                      guard.tick();
                      tab[mor(b0, b1, f0, g0)][mor(b1, b2, f1, g1)] =
                          mor(b0, b2, A.comp[a0][a1][a2][f0][f1],
                              B.comp[b0][b1][b2][g0][g1]);
                    }
            }
  P.paths = product_groupoid(A.paths, B.paths);
  auto path = [&](int b0, int b1, int p, int q) {
    return p * B.paths.path_size[b0][b1] + q;
  };
  P.transport.assign(n, std::vector<std::vector<int>>(n));
  for (int a0 = 0; a0 < na; ++a0)
    for (int b0 = 0; b0 < nb; ++b0)
      for (int a1 = 0; a1 < na; ++a1)
        for (int b1 = 0; b1 < nb; ++b1) {
          int s = obj(a0, b0), t = obj(a1, b1);
          auto& tt = P.transport[s][t];
          tt.resize(static_cast<size_t>(P.paths.path_size[s][t]));
          for (int p = 0; p < A.paths.path_size[a0][a1]; ++p)
            for (int q = 0; q < B.paths.path_size[b0][b1]; ++q)
              tt[path(b0, b1, p, q)] =
                  mor(b0, b1, A.transport[a0][a1][p], B.transport[b0][b1][q]);
        }
  return P;
}

// Index arithmetic shared by product(), curry and uncurry.
struct ProductIndex {
  const FinPrecategory& A;
  const FinPrecategory& B;

  ObjId obj(ObjId a, ObjId b) const { return a * B.object_count + b; }
  ObjId left(ObjId ab) const { return ab / B.object_count; }
  ObjId right(ObjId ab) const { return ab % B.object_count; }

  MorRef mor(MorRef f, MorRef g) const {
    return MorRef{obj(f.src, g.src), obj(f.tgt, g.tgt),
                  f.index * B.hom_size[g.src][g.tgt] + g.index};
  }
  std::pair<MorRef, MorRef> split_mor(MorRef fg) const {
    int bs = right(fg.src), bt = right(fg.tgt);
    int width = B.hom_size[bs][bt];
    return {MorRef{left(fg.src), left(fg.tgt), fg.index / width},
            MorRef{bs, bt, fg.index % width}};
  }

  PathRef path(PathRef p, PathRef q) const {
    return PathRef{obj(p.src, q.src), obj(p.tgt, q.tgt),
                   p.index * B.paths.path_size[q.src][q.tgt] + q.index};
  }
  std::pair<PathRef, PathRef> split_path(PathRef pq) const {
    int bs = right(pq.src), bt = right(pq.tgt);
    int width = B.paths.path_size[bs][bt];
    return {PathRef{left(pq.src), left(pq.tgt), pq.index / width},
            PathRef{bs, bt, pq.index % width}};
  }
};

// ---------------------------------------------------------------------------
// Constructors

// The discrete category on a groupoid: homs are the paths, J is the identity.
inline FinPrecategory mk_discrete(const FinGroupoid& G) {
  FinPrecategory C;
  const int n = G.object_count;
  C.object_count = n;
  C.hom_size = G.path_size;
  C.identity = G.refl;
  C.comp = G.concat;
  C.paths = G;
  C.transport.assign(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& t = C.transport[a][b];
      t.resize(static_cast<size_t>(G.path_size[a][b]));
      for (int p = 0; p < G.path_size[a][b]; ++p) t[p] = p;
    }
  return C;
}

// Chaotic (indiscrete) precategory: every hom a singleton, discrete paths.
inline FinPrecategory mk_chaotic(int n) {
  FinPrecategory C;
  C.object_count = n;
  C.hom_size.assign(n, std::vector<int>(n, 1));
  C.identity.assign(static_cast<size_t>(n), 0);
  C.comp.assign(n, std::vector<std::vector<Table2>>(
                       n, std::vector<Table2>(n, Table2{{0}})));
  C.paths = discrete_groupoid(n);
  C.transport.assign(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      C.transport[a][b] = (a == b) ? std::vector<int>{0} : std::vector<int>{};
  return C;
}

// Preorder from a reflexive transitive relation; hom(a,b) is a singleton
// exactly when rel[a][b].
inline FinPrecategory mk_preorder(const std::vector<std::vector<char>>& rel) {
  const int n = static_cast<int>(rel.size());
  for (int a = 0; a < n; ++a)
    if (!rel[a][a]) throw NotReflexive(a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c] && !rel[a][c]) throw NotTransitive(a, b, c);
  FinPrecategory C;
  C.object_count = n;
  C.hom_size.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) C.hom_size[a][b] = rel[a][b] ? 1 : 0;
  C.identity.assign(static_cast<size_t>(n), 0);
  C.comp.assign(n, std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c]) C.comp[a][b][c] = Table2{{0}};
        else C.comp[a][b][c] =
            Table2(static_cast<size_t>(C.hom_size[a][b]),
                   std::vector<int>(static_cast<size_t>(C.hom_size[b][c]), 0));
  C.paths = discrete_groupoid(n);
  C.transport.assign(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      C.transport[a][b] = (a == b) ? std::vector<int>{0} : std::vector<int>{};
  return C;
}

// Skeleton of finite sets up to size N: objects 0..N, hom(m,n) all maps
// m -> n in lexicographic order, paths(n,n) the permutations S_n, J the
// inclusion of a permutation as a morphism.
inline FinPrecategory mk_finset_skeleton(int N) {
  FinPrecategory C;
  const int n = N + 1;
  C.object_count = n;
  GuardCounter guard;
  C.hom_size.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      long long cnt = count_maps_capped(a, b, guard_limit());
      guard.tick(cnt);
      C.hom_size[a][b] = static_cast<int>(cnt);
    }
  C.identity.assign(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a) C.identity[a] = map_rank(identity_map(a));
  C.comp.assign(n, std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto fs = enumerate_maps(Fin{a}, Fin{b});
      for (int c = 0; c < n; ++c) {
        auto gs = enumerate_maps(Fin{b}, Fin{c});
        auto& tab = C.comp[a][b][c];
        tab.assign(fs.size(), std::vector<int>(gs.size(), 0));
        for (size_t fi = 0; fi < fs.size(); ++fi)
          for (size_t gi = 0; gi < gs.size(); ++gi) {
            guard.tick();
            tab[fi][gi] = map_rank(compose_maps(gs[gi], fs[fi]));
          }
      }
    }
  }
  // Path groupoid: S_n at each object, empty across objects.
  FinGroupoid G;
  G.object_count = n;
  G.path_size.assign(n, std::vector<int>(n, 0));
  G.refl.assign(static_cast<size_t>(n), 0);
  G.concat.assign(n, std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
  G.inv.assign(n, std::vector<std::vector<int>>(n));
  std::vector<std::vector<FinMap>> perms(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    perms[a] = enumerate_permutations(a);
    G.path_size[a][a] = static_cast<int>(perms[a].size());
    guard.tick(static_cast<long long>(perms[a].size()));
  }
  for (int a = 0; a < n; ++a) {
    const auto& ps = perms[a];
    G.refl[a] = static_cast<int>(
        index_of_permutation(ps, identity_map(a)).value());
    auto& inv = G.inv[a][a];
    inv.resize(ps.size());
    for (size_t p = 0; p < ps.size(); ++p)
      inv[p] = index_of_permutation(ps, invert_map(ps[p])).value();
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto& tab = G.concat[a][b][c];
        if (a == b && b == c) {
          tab.assign(ps.size(), std::vector<int>(ps.size(), 0));
          for (size_t p = 0; p < ps.size(); ++p)
            for (size_t q = 0; q < ps.size(); ++q)
              tab[p][q] = index_of_permutation(
                              ps, compose_maps(ps[q], ps[p])).value();
        } else {
          tab.assign(static_cast<size_t>(G.path_size[a][b]),
                     std::vector<int>(static_cast<size_t>(G.path_size[b][c]),
                                      0));
        }
      }
  }
  C.paths = G;
  C.transport.assign(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& t = C.transport[a][b];
      t.resize(static_cast<size_t>(G.path_size[a][b]));
      if (a == b)
        for (size_t p = 0; p < perms[a].size(); ++p)
          t[p] = map_rank(perms[a][p]);
    }
  return C;
}

// Core groupoid: paths(a,b) := the isomorphisms of hom(a,b), concatenation
// by composition.  This is the path groupoid of the Rezk completion.
inline FinGroupoid core_groupoid(const FinPrecategory& C) {
  const int n = C.object_count;
  std::vector<std::vector<std::vector<std::pair<MorRef, MorRef>>>> isos(
      static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    isos[a].resize(static_cast<size_t>(n));
    for (int b = 0; b < n; ++b) isos[a][b] = iso_set(C, a, b);
  }
  auto iso_index = [&](MorRef f) {
    const auto& v = isos[f.src][f.tgt];
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k].first == f) return static_cast<int>(k);
    throw CatError("core_groupoid: morphism lost its inverse");
  };
  FinGroupoid G;
  G.object_count = n;
  G.path_size.assign(n, std::vector<int>(n, 0));
  G.refl.assign(static_cast<size_t>(n), 0);
  G.concat.assign(n, std::vector<std::vector<Table2>>(n, std::vector<Table2>(n)));
  G.inv.assign(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      G.path_size[a][b] = static_cast<int>(isos[a][b].size());
  for (int a = 0; a < n; ++a) G.refl[a] = iso_index(C.id(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& inv = G.inv[a][b];
      inv.resize(isos[a][b].size());
      for (size_t p = 0; p < isos[a][b].size(); ++p)
        inv[p] = iso_index(isos[a][b][p].second);
      for (int c = 0; c < n; ++c) {
        auto& tab = G.concat[a][b][c];
        tab.assign(isos[a][b].size(),
                   std::vector<int>(isos[b][c].size(), 0));
        for (size_t p = 0; p < isos[a][b].size(); ++p)
          for (size_t q = 0; q < isos[b][c].size(); ++q)
            tab[p][q] = iso_index(
                C.compose(isos[b][c][q].first, isos[a][b][p].first));
      }
    }
  return G;
}

// Replaces the path groupoid, leaving homs untouched.  J entries are taken
// from the supplied table.
inline FinPrecategory with_paths(const FinPrecategory& C, FinGroupoid G,
                                 std::vector<std::vector<std::vector<int>>> J) {
  FinPrecategory D = C;
  D.paths = std::move(G);
  D.transport = std::move(J);
  return D;
}

inline FinPrecategory with_discrete_paths(const FinPrecategory& C) {
  const int n = C.object_count;
  std::vector<std::vector<std::vector<int>>> J(
      static_cast<size_t>(n), std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a) J[a][a] = {C.identity[a]};
  return with_paths(C, discrete_groupoid(n), std::move(J));
}

inline FinPrecategory with_core_paths(const FinPrecategory& C) {
  auto G = core_groupoid(C);
  const int n = C.object_count;
  std::vector<std::vector<std::vector<int>>> J(
      static_cast<size_t>(n), std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto is = iso_set(C, a, b);
      auto& t = J[a][b];
      t.resize(is.size());
      for (size_t k = 0; k < is.size(); ++k) t[k] = is[k].first.index;
    }
  return with_paths(C, std::move(G), std::move(J));
}

}  // namespace catkit
