#pragma once

#include <string>
#include <vector>

#include "catkit/functor.hpp"
#include "catkit/presheaf.hpp"

namespace catkit {

// Human-readable names for the indices of one precategory.  Names live in
// the front-end layer only; the engine works on canonical indices.
struct NameTable {
  std::vector<std::string> objects;
  std::vector<std::vector<std::vector<std::string>>> morphisms;  // [a][b][k]
  std::vector<std::vector<std::vector<std::string>>> paths;      // [a][b][p]

  auto operator<=>(const NameTable&) const = default;

  const std::string& obj(ObjId a) const { return objects[a]; }
  const std::string& mor(MorRef f) const {
    return morphisms[f.src][f.tgt][f.index];
  }
  const std::string& path(PathRef p) const {
    return paths[p.src][p.tgt][p.index];
  }
};

// Default names: o0.., mN, id(o), refl(o); core-style paths named after a
// transport morphism when J is injective there, else pK.
inline NameTable default_names(const FinPrecategory& C) {
  NameTable t;
  const int n = C.object_count;
  for (int a = 0; a < n; ++a) t.objects.push_back("o" + std::to_string(a));
  t.morphisms.assign(static_cast<size_t>(n),
                     std::vector<std::vector<std::string>>(
                         static_cast<size_t>(n)));
  int counter = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < C.hom_size[a][b]; ++k) {
        if (a == b && k == C.identity[a])
          t.morphisms[a][b].push_back("id(" + t.objects[a] + ")");
        else
          t.morphisms[a][b].push_back("m" + std::to_string(counter++));
      }
  t.paths.assign(static_cast<size_t>(n),
                 std::vector<std::vector<std::string>>(
                     static_cast<size_t>(n)));
  counter = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int p = 0; p < C.paths.path_size[a][b]; ++p) {
        if (a == b && p == C.paths.refl[a])
          t.paths[a][b].push_back("refl(" + t.objects[a] + ")");
        else
          t.paths[a][b].push_back("p" + std::to_string(counter++));
      }
  return t;
}

struct NamedPrecategory {
  std::string name;
  FinPrecategory cat;
  NameTable names;

  bool operator==(const NamedPrecategory& o) const {
    return name == o.name && cat == o.cat && names == o.names;
  }
};

struct NamedFunctor {
  std::string name;
  std::string dom_name, cod_name;
  FinFunctor fun;

  bool operator==(const NamedFunctor& o) const {
    return name == o.name && dom_name == o.dom_name &&
           cod_name == o.cod_name && fun == o.fun;
  }
};

struct NamedPresheaf {
  std::string name;
  std::string base_name;
  FinPresheaf psh;

  bool operator==(const NamedPresheaf& o) const {
    return name == o.name && base_name == o.base_name && psh == o.psh;
  }
};

// Parsed contents of one source (DSL or JSON) file.
struct SourceFile {
  std::vector<NamedPrecategory> precategories;
  std::vector<NamedFunctor> functors;
  std::vector<NamedPresheaf> presheaves;

  const NamedPrecategory* find_precategory(const std::string& n) const {
    for (const auto& p : precategories)
      if (p.name == n) return &p;
    return nullptr;
  }
  const NamedFunctor* find_functor(const std::string& n) const {
    for (const auto& f : functors)
      if (f.name == n) return &f;
    return nullptr;
  }
  const NamedPresheaf* find_presheaf(const std::string& n) const {
    for (const auto& p : presheaves)
      if (p.name == n) return &p;
    return nullptr;
  }

  bool operator==(const SourceFile& o) const {
    return precategories == o.precategories && functors == o.functors &&
           presheaves == o.presheaves;
  }
};

}  // namespace catkit
