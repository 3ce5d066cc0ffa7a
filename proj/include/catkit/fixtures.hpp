#pragma once

#include <string>
#include <vector>

#include "catkit/precat.hpp"

namespace catkit::fixtures {

// One object, one morphism.
inline FinPrecategory terminal() { return mk_chaotic(1); }

// Two objects 0,1 and a single non-identity arrow 0 -> 1.
inline FinPrecategory walking_arrow() {
  std::vector<std::vector<char>> rel = {{1, 1}, {0, 1}};
  return mk_preorder(rel);
}

inline FinPrecategory chaotic2() { return mk_chaotic(2); }

// Z/2 as a one-object category: hom = {id, s}, s o s = id.
inline FinPrecategory z2() {
  FinPrecategory C;
  C.object_count = 1;
  C.hom_size = {{2}};
  C.identity = {0};
  C.comp = {{{Table2{{0, 1}, {1, 0}}}}};
  C.paths = discrete_groupoid(1);
  C.transport = {{{0}}};
  return C;
}

// Left-zero monoid {1,a,b} with xy = x for x,y non-identity; the smallest
// fixture whose naturality squares can actually break under mutation.
inline FinPrecategory m3() {
  FinPrecategory C;
  C.object_count = 1;
  C.hom_size = {{3}};
  C.identity = {0};
  // indices: 0=1, 1=a, 2=b; table entry [f][g] = g o f ("f then g")
  C.comp = {{{Table2{{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}}}};
  C.paths = discrete_groupoid(1);
  C.transport = {{{0}}};
  return C;
}

// Divisibility order on {1,2,3,6}.
inline FinPrecategory divposet() {
  const int vals[4] = {1, 2, 3, 6};
  std::vector<std::vector<char>> rel(4, std::vector<char>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rel[i][j] = (vals[j] % vals[i] == 0);
  return mk_preorder(rel);
}

inline FinPrecategory finset3() { return mk_finset_skeleton(3); }

struct NamedFixture {
  std::string name;
  FinPrecategory cat;
};

// Stable list used by the harness and the CLI; generators prepend these.
inline std::vector<NamedFixture> all() {
  return {
      {"terminal", terminal()},
      {"walking_arrow", walking_arrow()},
      {"chaotic2", chaotic2()},
      {"z2", z2()},
      {"divposet", divposet()},
      {"finset3", finset3()},
      {"rezk_chaotic2", with_core_paths(chaotic2())},
      {"rezk_z2", with_core_paths(z2())},
  };
}

}  // namespace catkit::fixtures
