#include <catch2/catch_amalgamated.hpp>

#include "catkit/dsl.hpp"
#include "catkit/fixtures.hpp"
#include "catkit/serialize.hpp"

using namespace catkit;
namespace fx = catkit::fixtures;

namespace {

SourceFile fixture_file() {
  SourceFile file;
  for (const auto& [name, cat] : fx::all())
    file.precategories.push_back(
        NamedPrecategory{name, cat, default_names(cat)});
  // a functor and a presheaf for coverage
  auto wa = wrap(fx::walking_arrow());
  file.functors.push_back(NamedFunctor{
      "idwa", "walking_arrow", "walking_arrow", identity_functor(wa)});
  file.presheaves.push_back(
      NamedPresheaf{"y1", "walking_arrow", yoneda_object(wa, 1)});
  return file;
}

}  // namespace

TEST_CASE("json round-trip is the identity on all fixtures", "[serialize]") {
  auto file = fixture_file();
  auto text = export_json(file);
  auto back = parse_json(text);
  CHECK(back == file);
  // and the re-export is byte-identical
  CHECK(export_json(back) == text);
}

TEST_CASE("json carries the schema version", "[serialize]") {
  auto text = export_json(SourceFile{});
  auto j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK_THROWS_AS(parse_json("{}"), InvalidInput);
  CHECK_THROWS_AS(parse_json("{\"schema_version\": 99}"), InvalidInput);
  CHECK_THROWS_AS(parse_json("not json"), InvalidInput);
}

TEST_CASE("json import rejects malformed tables", "[serialize]") {
  SourceFile file;
  file.precategories.push_back(NamedPrecategory{
      "t", fx::terminal(), default_names(fx::terminal())});
  auto j = nlohmann::ordered_json::parse(export_json(file));
  j["precategories"][0]["identity"][0] = 7;
  CHECK_THROWS_AS(parse_json(j.dump()), InvalidInput);
  auto j2 = nlohmann::ordered_json::parse(export_json(file));
  j2["precategories"][0]["comp"][0][0][0][0][0] = 3;
  CHECK_THROWS_AS(parse_json(j2.dump()), InvalidInput);
}

TEST_CASE("dot export shapes", "[serialize]") {
  NamedPrecategory term{"terminal", fx::terminal(),
                        default_names(fx::terminal())};
  auto dot = export_dot(term);
  CHECK(dot.find("digraph") != std::string::npos);
  // one node, zero edges
  CHECK(dot.find("->") == std::string::npos);

  NamedPrecategory wa{"wa", fx::walking_arrow(),
                      default_names(fx::walking_arrow())};
  auto dotw = export_dot(wa);
  // exactly one solid edge, no iso styling, no dashed paths
  CHECK(dotw.find("->") != std::string::npos);
  CHECK(dotw.find("color=blue") == std::string::npos);
  CHECK(dotw.find("dashed") == std::string::npos);

  NamedPrecategory r{"rch2", with_core_paths(fx::chaotic2()),
                     default_names(with_core_paths(fx::chaotic2()))};
  auto dotr = export_dot(r);
  CHECK(dotr.find("color=blue") != std::string::npos);
  CHECK(dotr.find("dashed") != std::string::npos);
}

TEST_CASE("dot export is deterministic", "[serialize]") {
  NamedPrecategory z{"z2", fx::z2(), default_names(fx::z2())};
  CHECK(export_dot(z) == export_dot(z));
}

TEST_CASE("json round-trip through the dsl front end", "[serialize]") {
  auto file = dsl::parse_dsl(R"(
    precategory ch2 {
      objects: a, b;
      hom a b: f;
      hom b a: g;
      compose g . f = id(a);
      compose f . g = id(b);
      paths core;
    }
    functor F : ch2 -> ch2 {
      obj a => b;
      obj b => a;
      mor f => g;
      mor g => f;
      path iso(f) => iso(g);
      path iso(g) => iso(f);
    }
  )");
  auto back = parse_json(export_json(file));
  CHECK(back == file);
  CHECK(validate_functor(back.functors[0].fun).ok());
}
