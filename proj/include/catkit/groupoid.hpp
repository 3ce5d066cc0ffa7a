#pragma once

#include <string>
#include <vector>

#include "catkit/fin.hpp"

namespace catkit {

using ObjId = int;

// Reference to a path a ~ b inside an owning groupoid.
struct PathRef {
  ObjId src = 0;
  ObjId tgt = 0;
  int index = 0;
  auto operator<=>(const PathRef&) const = default;
};

using Table2 = std::vector<std::vector<int>>;

// Finite groupoid presented by tables; models the identity types of the
// object 1-type.  paths(a,b) are the model's equalities a = b.
struct FinGroupoid {
  int object_count = 0;
  std::vector<std::vector<int>> path_size;                 // [a][b]
  std::vector<int> refl;                                   // [a], in paths(a,a)
  std::vector<std::vector<std::vector<Table2>>> concat;    // [a][b][c][p][q]
  std::vector<std::vector<std::vector<int>>> inv;          // [a][b][p]

  auto operator<=>(const FinGroupoid&) const = default;

  int paths(ObjId a, ObjId b) const { return path_size[a][b]; }

  PathRef refl_path(ObjId a) const { return PathRef{a, a, refl[a]}; }

  // p then q; mirrors path concatenation p . q.
  PathRef concat_paths(PathRef p, PathRef q) const {
    if (p.tgt != q.src)
      throw DomainMismatch("concat_paths: p.tgt=" + std::to_string(p.tgt) +
                           " but q.src=" + std::to_string(q.src));
    return PathRef{p.src, q.tgt, concat[p.src][p.tgt][q.tgt][p.index][q.index]};
  }

  PathRef inverse(PathRef p) const {
    return PathRef{p.tgt, p.src, inv[p.src][p.tgt][p.index]};
  }

  bool is_discrete() const {
    for (ObjId a = 0; a < object_count; ++a)
      for (ObjId b = 0; b < object_count; ++b)
        if (path_size[a][b] != (a == b ? 1 : 0)) return false;
    return true;
  }

  std::vector<PathRef> all_paths(ObjId a, ObjId b) const {
    std::vector<PathRef> out;
    for (int p = 0; p < path_size[a][b]; ++p) out.push_back(PathRef{a, b, p});
    return out;
  }

  // Connected components, labelled by least member.
  std::vector<int> components() const {
    std::vector<int> comp(static_cast<size_t>(object_count), -1);
    for (ObjId a = 0; a < object_count; ++a) {
      if (comp[a] != -1) continue;
      comp[a] = a;
      for (ObjId b = 0; b < object_count; ++b)
        if (comp[b] == -1 && path_size[a][b] > 0) comp[b] = a;
    }
    return comp;
  }
};

inline FinGroupoid discrete_groupoid(int n) {
  FinGroupoid g;
  g.object_count = n;
  g.path_size.assign(n, std::vector<int>(n, 0));
  g.refl.assign(n, 0);
  g.concat.assign(n, std::vector<std::vector<Table2>>(
                         n, std::vector<Table2>(n)));
  g.inv.assign(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a) g.path_size[a][a] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      g.inv[a][b].assign(static_cast<size_t>(g.path_size[a][b]), 0);
      for (int c = 0; c < n; ++c)
        g.concat[a][b][c].assign(
            static_cast<size_t>(g.path_size[a][b]),
            std::vector<int>(static_cast<size_t>(g.path_size[b][c]), 0));
    }
  return g;
}

inline FinGroupoid product_groupoid(const FinGroupoid& g,
                                    const FinGroupoid& h) {
  FinGroupoid out;
  int n = g.object_count * h.object_count;
  out.object_count = n;
  auto obj = [&](int a, int b) { return a * h.object_count + b; };
  out.path_size.assign(n, std::vector<int>(n, 0));
  out.refl.assign(n, 0);
  out.concat.assign(n, std::vector<std::vector<Table2>>(
                           n, std::vector<Table2>(n)));
  out.inv.assign(n, std::vector<std::vector<int>>(n));
  for (int a0 = 0; a0 < g.object_count; ++a0)
    for (int b0 = 0; b0 < h.object_count; ++b0)
      for (int a1 = 0; a1 < g.object_count; ++a1)
        for (int b1 = 0; b1 < h.object_count; ++b1) {
          int s = obj(a0, b0), t = obj(a1, b1);
          out.path_size[s][t] = g.path_size[a0][a1] * h.path_size[b0][b1];
        }
  auto pair_index = [&](int b0, int b1, int p, int q) {
    return p * h.path_size[b0][b1] + q;
  };
  for (int a = 0; a < g.object_count; ++a)
    for (int b = 0; b < h.object_count; ++b)
      out.refl[obj(a, b)] = pair_index(b, b, g.refl[a], h.refl[b]);
  for (int a0 = 0; a0 < g.object_count; ++a0)
    for (int b0 = 0; b0 < h.object_count; ++b0)
      for (int a1 = 0; a1 < g.object_count; ++a1)
        for (int b1 = 0; b1 < h.object_count; ++b1) {
          int s = obj(a0, b0), m = obj(a1, b1);
          // inverses
          auto& invtab = out.inv[s][m];
          invtab.resize(static_cast<size_t>(out.path_size[s][m]));
          for (int p = 0; p < g.path_size[a0][a1]; ++p)
            for (int q = 0; q < h.path_size[b0][b1]; ++q)
              invtab[pair_index(b0, b1, p, q)] =
                  pair_index(b1, b0, g.inv[a0][a1][p], h.inv[b0][b1][q]);
          for (int a2 = 0; a2 < g.object_count; ++a2)
            for (int b2 = 0; b2 < h.object_count; ++b2) {
              int t = obj(a2, b2);
              auto& tab = out.concat[s][m][t];
              tab.assign(static_cast<size_t>(out.path_size[s][m]),
                         std::vector<int>(
                             static_cast<size_t>(out.path_size[m][t]), 0));
              for (int p0 = 0; p0 < g.path_size[a0][a1]; ++p0)
                for (int q0 = 0; q0 < h.path_size[b0][b1]; ++q0)
                  for (int p1 = 0; p1 < g.path_size[a1][a2]; ++p1)
                    for (int q1 = 0; q1 < h.path_size[b1][b2]; ++q1)
                      tab[pair_index(b0, b1, p0, q0)]
                         [pair_index(b1, b2, p1, q1)] =
                             pair_index(b0, b2,
                                        g.concat[a0][a1][a2][p0][p1],
                                        h.concat[b0][b1][b2][q0][q1]);
            }
        }
  return out;
}

}  // namespace catkit
