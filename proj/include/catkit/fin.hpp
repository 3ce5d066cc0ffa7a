#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "catkit/error.hpp"

namespace catkit {

// Canonical finite set {0, ..., size-1}.
struct Fin {
  int size = 0;
  auto operator<=>(const Fin&) const = default;
};

// Total function between canonical finite sets, stored as a lookup table.
struct FinMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> table;  // table[i] < cod for i < dom

  FinMap() = default;
  FinMap(int dom_, int cod_, std::vector<int> table_)
      : dom(dom_), cod(cod_), table(std::move(table_)) {}

  int operator()(int i) const { return table[i]; }
  auto operator<=>(const FinMap&) const = default;

  bool well_formed() const {
    if (dom < 0 || cod < 0 || static_cast<int>(table.size()) != dom)
      return false;
    for (int v : table)
      if (v < 0 || v >= cod) return false;
    return true;
  }
};

inline FinMap identity_map(int n) {
  std::vector<int> t(static_cast<size_t>(n));
  std::iota(t.begin(), t.end(), 0);
  return FinMap{n, n, std::move(t)};
}

inline FinMap constant_map(int dom, int cod, int value) {
  return FinMap{dom, cod, std::vector<int>(static_cast<size_t>(dom), value)};
}

// g after f.
inline FinMap compose_maps(const FinMap& g, const FinMap& f) {
  if (f.cod != g.dom)
    throw DomainMismatch("compose_maps: f.cod=" + std::to_string(f.cod) +
                         " but g.dom=" + std::to_string(g.dom));
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i) t[i] = g.table[f.table[i]];
  return FinMap{f.dom, g.cod, std::move(t)};
}

inline bool is_injective(const FinMap& f) {
  std::vector<char> seen(static_cast<size_t>(f.cod), 0);
  for (int v : f.table) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline bool is_surjective(const FinMap& f) {
  std::vector<char> seen(static_cast<size_t>(f.cod), 0);
  for (int v : f.table) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline bool is_bijection(const FinMap& f) {
  return f.dom == f.cod && is_injective(f);
}

inline FinMap invert_map(const FinMap& f) {
  if (!is_bijection(f))
    throw NotBijective("invert_map: map " + std::to_string(f.dom) + "->" +
                       std::to_string(f.cod) + " is not a bijection");
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i)
    t[f.table[i]] = static_cast<int>(i);
  return FinMap{f.cod, f.dom, std::move(t)};
}

// cod^dom, saturating at limit+1 so guard comparisons stay exact.
inline long long count_maps_capped(int dom, int cod, long long cap) {
  long long n = 1;
  for (int i = 0; i < dom; ++i) {
    if (cod == 0) return dom == 0 ? 1 : 0;
    if (n > cap / std::max(cod, 1)) return cap + 1;
    n *= cod;
  }
  return n;
}

// All maps dom -> cod in lexicographic table order.
inline std::vector<FinMap> enumerate_maps(Fin dom, Fin cod) {
  long long total = count_maps_capped(dom.size, cod.size, guard_limit());
  if (total > guard_limit()) throw EnumerationTooLarge(total, guard_limit());
  std::vector<FinMap> out;
  if (dom.size > 0 && cod.size == 0) return out;
  out.reserve(static_cast<size_t>(total));
  std::vector<int> t(static_cast<size_t>(dom.size), 0);
  for (;;) {
    out.push_back(FinMap{dom.size, cod.size, t});
    int i = dom.size - 1;
    while (i >= 0 && t[i] == cod.size - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

// Walks the same lexicographic order without materializing; the callback
// may return false to stop early.
inline void for_each_map(Fin dom, Fin cod, GuardCounter& guard,
                         const std::function<bool(const FinMap&)>& fn) {
  if (dom.size > 0 && cod.size == 0) return;
  std::vector<int> t(static_cast<size_t>(dom.size), 0);
  for (;;) {
    guard.tick();
    if (!fn(FinMap{dom.size, cod.size, t})) return;
    int i = dom.size - 1;
    while (i >= 0 && t[i] == cod.size - 1) t[i--] = 0;
    if (i < 0) return;
    ++t[i];
  }
}

// Lexicographic rank of a table among all maps with the same dom/cod.
inline int map_rank(const FinMap& f) {
  int r = 0;
  for (int v : f.table) r = r * f.cod + v;
  return r;
}

// All bijections n -> n in lexicographic table order.
inline std::vector<FinMap> enumerate_permutations(int n) {
  std::vector<FinMap> out;
  std::vector<int> t(static_cast<size_t>(n));
  std::iota(t.begin(), t.end(), 0);
  do {
    out.push_back(FinMap{n, n, t});
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

inline std::optional<int> index_of_permutation(
    const std::vector<FinMap>& perms, const FinMap& f) {
  for (size_t i = 0; i < perms.size(); ++i)
    if (perms[i].table == f.table) return static_cast<int>(i);
  return std::nullopt;
}

}  // namespace catkit
