#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catkit/names.hpp"

namespace catkit {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// JSON export

namespace detail {

inline ordered_json precategory_to_json(const NamedPrecategory& item) {
  const FinPrecategory& C = item.cat;
  ordered_json j;
  j["name"] = item.name;
  j["objects"] = item.names.objects;
  j["homs"] = item.names.morphisms;
  j["identity"] = C.identity;
  j["comp"] = C.comp;
  ordered_json paths;
  paths["names"] = item.names.paths;
  paths["refl"] = C.paths.refl;
  paths["concat"] = C.paths.concat;
  paths["inv"] = C.paths.inv;
  paths["transport"] = C.transport;
  j["paths"] = paths;
  return j;
}

inline ordered_json functor_to_json(const NamedFunctor& item) {
  ordered_json j;
  j["name"] = item.name;
  j["dom"] = item.dom_name;
  j["cod"] = item.cod_name;
  j["obj_map"] = item.fun.obj_map.table;
  ordered_json homs = ordered_json::array();
  for (const auto& row : item.fun.hom_maps) {
    ordered_json r = ordered_json::array();
    for (const auto& m : row) r.push_back(m.table);
    homs.push_back(r);
  }
  j["hom_maps"] = homs;
  ordered_json paths = ordered_json::array();
  for (const auto& row : item.fun.path_map) {
    ordered_json r = ordered_json::array();
    for (const auto& m : row) r.push_back(m.table);
    paths.push_back(r);
  }
  j["path_maps"] = paths;
  return j;
}

inline ordered_json presheaf_to_json(const NamedPresheaf& item) {
  ordered_json j;
  j["name"] = item.name;
  j["base"] = item.base_name;
  j["carriers"] = item.psh.carrier;
  ordered_json acts = ordered_json::array();
  for (const auto& row : item.psh.action) {
    ordered_json r = ordered_json::array();
    for (const auto& cell : row) {
      ordered_json c = ordered_json::array();
      for (const auto& m : cell) c.push_back(m.table);
      r.push_back(c);
    }
    acts.push_back(r);
  }
  j["actions"] = acts;
  return j;
}

}  // namespace detail

inline std::string export_json(const SourceFile& file) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["precategories"] = ordered_json::array();
  for (const auto& p : file.precategories)
    j["precategories"].push_back(detail::precategory_to_json(p));
  j["functors"] = ordered_json::array();
  for (const auto& f : file.functors)
    j["functors"].push_back(detail::functor_to_json(f));
  j["presheaves"] = ordered_json::array();
  for (const auto& p : file.presheaves)
    j["presheaves"].push_back(detail::presheaf_to_json(p));
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// JSON import

namespace detail {

template <typename T>
T get_field(const ordered_json& j, const char* key) {
  if (!j.contains(key))
    throw InvalidInput(std::string("json: missing field '") + key + "'");
  return j.at(key).get<T>();
}

inline NamedPrecategory precategory_from_json(const ordered_json& j) {
  NamedPrecategory item;
  item.name = get_field<std::string>(j, "name");
  item.names.objects = get_field<std::vector<std::string>>(j, "objects");
  item.names.morphisms =
      get_field<std::vector<std::vector<std::vector<std::string>>>>(j,
                                                                    "homs");
  FinPrecategory& C = item.cat;
  C.object_count = static_cast<int>(item.names.objects.size());
  const int n = C.object_count;
  if (static_cast<int>(item.names.morphisms.size()) != n)
    throw InvalidInput("json: homs outer size != object count");
  C.hom_size.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(item.names.morphisms[a].size()) != n)
      throw InvalidInput("json: homs inner size != object count");
    for (int b = 0; b < n; ++b)
      C.hom_size[a][b] = static_cast<int>(item.names.morphisms[a][b].size());
  }
  C.identity = get_field<std::vector<int>>(j, "identity");
  C.comp =
      get_field<std::vector<std::vector<std::vector<Table2>>>>(j, "comp");
  if (!j.contains("paths")) throw InvalidInput("json: missing field 'paths'");
  const auto& jp = j.at("paths");
  item.names.paths =
      get_field<std::vector<std::vector<std::vector<std::string>>>>(jp,
                                                                    "names");
  FinGroupoid& G = C.paths;
  G.object_count = n;
  if (static_cast<int>(item.names.paths.size()) != n)
    throw InvalidInput("json: path names outer size != object count");
  G.path_size.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(item.names.paths[a].size()) != n)
      throw InvalidInput("json: path names inner size != object count");
    for (int b = 0; b < n; ++b)
      G.path_size[a][b] = static_cast<int>(item.names.paths[a][b].size());
  }
  G.refl = get_field<std::vector<int>>(jp, "refl");
  G.concat =
      get_field<std::vector<std::vector<std::vector<Table2>>>>(jp, "concat");
  G.inv = get_field<std::vector<std::vector<std::vector<int>>>>(jp, "inv");
  C.transport =
      get_field<std::vector<std::vector<std::vector<int>>>>(jp, "transport");
  ValidationReport rep;
  if (!check_structure(C, rep))
    throw InvalidInput("json: precategory '" + item.name +
                       "' is structurally malformed: " +
                       rep.violations[0].detail);
  return item;
}

inline FinMap map_from_table(std::vector<int> table, int dom, int cod) {
  if (static_cast<int>(table.size()) != dom)
    throw InvalidInput("json: map table length mismatch");
  FinMap m{dom, cod, std::move(table)};
  if (!m.well_formed()) throw InvalidInput("json: map entry out of range");
  return m;
}

inline NamedFunctor functor_from_json(const ordered_json& j,
                                      const SourceFile& file) {
  NamedFunctor item;
  item.name = get_field<std::string>(j, "name");
  item.dom_name = get_field<std::string>(j, "dom");
  item.cod_name = get_field<std::string>(j, "cod");
  const NamedPrecategory* dom = file.find_precategory(item.dom_name);
  const NamedPrecategory* cod = file.find_precategory(item.cod_name);
  if (!dom || !cod)
    throw InvalidInput("json: functor '" + item.name +
                       "' references an unknown precategory");
  FinFunctor& F = item.fun;
  F.dom = wrap(dom->cat);
  F.cod = wrap(cod->cat);
  const int n = dom->cat.object_count;
  F.obj_map = map_from_table(get_field<std::vector<int>>(j, "obj_map"), n,
                             cod->cat.object_count);
  auto homs = get_field<std::vector<std::vector<std::vector<int>>>>(
      j, "hom_maps");
  auto paths = get_field<std::vector<std::vector<std::vector<int>>>>(
      j, "path_maps");
  if (static_cast<int>(homs.size()) != n ||
      static_cast<int>(paths.size()) != n)
    throw InvalidInput("json: functor table outer size mismatch");
  F.hom_maps.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  F.path_map.assign(static_cast<size_t>(n), std::vector<FinMap>(n));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(homs[a].size()) != n ||
        static_cast<int>(paths[a].size()) != n)
      throw InvalidInput("json: functor table inner size mismatch");
    for (int b = 0; b < n; ++b) {
      int fa = F.obj_map(a), fb = F.obj_map(b);
      F.hom_maps[a][b] =
          map_from_table(homs[a][b], dom->cat.hom_size[a][b],
                         cod->cat.hom_size[fa][fb]);
      F.path_map[a][b] =
          map_from_table(paths[a][b], dom->cat.paths.path_size[a][b],
                         cod->cat.paths.path_size[fa][fb]);
    }
  }
  return item;
}

inline NamedPresheaf presheaf_from_json(const ordered_json& j,
                                        const SourceFile& file) {
  NamedPresheaf item;
  item.name = get_field<std::string>(j, "name");
  item.base_name = get_field<std::string>(j, "base");
  const NamedPrecategory* base = file.find_precategory(item.base_name);
  if (!base)
    throw InvalidInput("json: presheaf '" + item.name +
                       "' references an unknown precategory");
  FinPresheaf& P = item.psh;
  P.base = wrap(base->cat);
  P.carrier = get_field<std::vector<int>>(j, "carriers");
  const int n = base->cat.object_count;
  if (static_cast<int>(P.carrier.size()) != n)
    throw InvalidInput("json: presheaf carrier count mismatch");
  auto acts = get_field<
      std::vector<std::vector<std::vector<std::vector<int>>>>>(j, "actions");
  if (static_cast<int>(acts.size()) != n)
    throw InvalidInput("json: presheaf action outer size mismatch");
  P.action.assign(static_cast<size_t>(n),
                  std::vector<std::vector<FinMap>>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(acts[a].size()) != n)
      throw InvalidInput("json: presheaf action inner size mismatch");
    for (int b = 0; b < n; ++b) {
      if (static_cast<int>(acts[a][b].size()) != base->cat.hom_size[a][b])
        throw InvalidInput("json: presheaf action count != hom size");
      for (auto& tab : acts[a][b])
        P.action[a][b].push_back(
            map_from_table(tab, P.carrier[b], P.carrier[a]));
    }
  }
  return item;
}

}  // namespace detail

inline SourceFile parse_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("json: ") + e.what());
  }
  if (!j.contains("schema_version") ||
      j.at("schema_version").get<int>() != kSchemaVersion)
    throw InvalidInput("json: missing or unsupported schema_version");
  SourceFile file;
  if (j.contains("precategories"))
    for (const auto& jp : j.at("precategories"))
      file.precategories.push_back(detail::precategory_from_json(jp));
  if (j.contains("functors"))
    for (const auto& jf : j.at("functors"))
      file.functors.push_back(detail::functor_from_json(jf, file));
  if (j.contains("presheaves"))
    for (const auto& jp : j.at("presheaves"))
      file.presheaves.push_back(detail::presheaf_from_json(jp, file));
  return file;
}

// ---------------------------------------------------------------------------
// DOT export

// Objects as nodes, non-identity morphisms as labelled edges (isomorphisms
// in blue), non-refl paths as dashed edges.
inline std::string export_dot(const NamedPrecategory& item) {
  const FinPrecategory& C = item.cat;
  std::ostringstream os;
  os << "digraph \"" << item.name << "\" {\n";
  for (int a = 0; a < C.object_count; ++a)
    os << "  \"" << item.names.objects[a] << "\";\n";
  for (int a = 0; a < C.object_count; ++a)
    for (int b = 0; b < C.object_count; ++b)
      for (int k = 0; k < C.hom_size[a][b]; ++k) {
        MorRef f{a, b, k};
        if (C.is_id(f)) continue;
        os << "  \"" << item.names.objects[a] << "\" -> \""
           << item.names.objects[b] << "\" [label=\"" << item.names.mor(f)
           << "\"";
        if (is_iso(C, f)) os << ", color=blue";
        os << "];\n";
      }
  for (int a = 0; a < C.object_count; ++a)
    for (int b = 0; b < C.object_count; ++b)
      for (int p = 0; p < C.paths.path_size[a][b]; ++p) {
        PathRef pp{a, b, p};
        if (a == b && p == C.paths.refl[a]) continue;
        os << "  \"" << item.names.objects[a] << "\" -> \""
           << item.names.objects[b] << "\" [label=\""
           << item.names.path(pp)
           << "\", style=dashed, constraint=false];\n";
      }
  os << "}\n";
  return os.str();
}

}  // namespace catkit
