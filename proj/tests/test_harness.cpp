#include <catch2/catch_amalgamated.hpp>

#include "catkit/harness.hpp"

using namespace catkit;
using namespace catkit::harness;
namespace fx = catkit::fixtures;

TEST_CASE("generator at (1,1,1) yields exactly the terminal category",
          "[harness]") {
  GenBounds b;
  b.max_objects = 1;
  b.max_hom_size = 1;
  b.max_path_size = 1;
  auto out = generate_precategories(b);
  REQUIRE(out.size() == 1);
  CHECK(out[0] == fx::terminal());
}

TEST_CASE("generator at (1,2,2) includes both 2-element monoids",
          "[harness]") {
  GenBounds b;
  b.max_objects = 1;
  b.max_hom_size = 2;
  b.max_path_size = 2;
  auto out = generate_precategories(b);
  // the two monoids as strict one-object precategories
  int monoids = 0;
  bool saw_z2 = false, saw_idem = false;
  for (const auto& C : out) {
    if (C.object_count == 1 && C.hom_size[0][0] == 2 &&
        C.paths.is_discrete()) {
      ++monoids;
      if (C == fx::z2()) saw_z2 = true;
      if (C.comp[0][0][0][1][1] == 1) saw_idem = true;
    }
  }
  CHECK(monoids == 2);
  CHECK(saw_z2);
  CHECK(saw_idem);
}

TEST_CASE("generated instances validate and arrive deterministically",
          "[harness]") {
  GenBounds b;
  auto out1 = generate_precategories(b);
  auto out2 = generate_precategories(b);
  REQUIRE(out1.size() == out2.size());
  for (size_t i = 0; i < out1.size(); ++i) CHECK(out1[i] == out2[i]);
  for (const auto& C : out1) {
    CHECK(validate_precategory(C).ok());
    CHECK(C.object_count <= 2);
  }
  // named fixtures that fit the bounds come first
  CHECK(out1[0] == fx::terminal());
  CHECK(out1[1] == fx::walking_arrow());
  // and there is real variety
  CHECK(out1.size() > 20);
  int univalent = 0, nonunivalent = 0, with_paths = 0;
  for (const auto& C : out1) {
    if (is_univalent(C).is_univalent)
      ++univalent;
    else
      ++nonunivalent;
    if (!C.paths.is_discrete()) ++with_paths;
  }
  CHECK(univalent > 0);
  CHECK(nonunivalent > 0);
  CHECK(with_paths > 0);
}

TEST_CASE("precomposition flagship counts", "[harness]") {
  auto one = wrap(fx::terminal());
  auto ch2 = wrap(fx::chaotic2());
  auto wa = wrap(fx::walking_arrow());
  auto H = enumerate_functors(ch2, one)[0];
  auto rep = check_precomposition(H, wa);
  CHECK(rep.report.ok());
  CHECK(rep.source_objects == 2);
  CHECK(rep.target_objects == 2);
  CHECK(rep.source_morphisms == 3);
  CHECK(rep.target_morphisms == 3);
  CHECK(rep.iso);
}

TEST_CASE("identity precomposition is an isomorphism", "[harness]") {
  auto wa = wrap(fx::walking_arrow());
  auto rep = check_precomposition(identity_functor(wa), wa);
  CHECK(rep.report.ok());
  CHECK(rep.iso);
}

TEST_CASE("final theorem counterexample counts 2 vs 4", "[harness]") {
  auto ch2 = wrap(fx::chaotic2());
  auto rc = rezk_completion(ch2);
  auto rep = check_precomposition(rc.unit, ch2);
  CHECK(rep.report.ok());  // C is not univalent: no implication is violated
  CHECK(rep.h_weq);
  CHECK_FALSE(rep.c_univalent);
  CHECK_FALSE(rep.iso);
  CHECK(rep.source_objects == 2);
  CHECK(rep.target_objects == 4);
}

TEST_CASE("univalence characterization on fixtures", "[harness]") {
  CHECK(check_univalence_characterization(wrap(fx::terminal())).ok());
  CHECK(check_univalence_characterization(wrap(fx::walking_arrow())).ok());
  CHECK(check_univalence_characterization(wrap(fx::chaotic2())).ok());
  CHECK(check_univalence_characterization(wrap(fx::z2())).ok());
  CHECK(check_univalence_characterization(wrap(fx::divposet())).ok());
}

TEST_CASE("theorem suite passes at small bounds", "[harness]") {
  GenBounds b;
  b.max_objects = 1;
  b.max_hom_size = 2;
  b.max_path_size = 2;
  auto reports = run_theorem_suite(b);
  REQUIRE(reports.size() == 10);
  for (const auto& r : reports) {
    INFO(r.theorem);
    CHECK(r.ok());
    CHECK(r.instances > 0);
  }
}

TEST_CASE("theorem suite reports are deterministic", "[harness]") {
  GenBounds b;
  b.max_objects = 1;
  b.max_hom_size = 1;
  b.max_path_size = 1;
  auto r1 = run_theorem_suite(b);
  auto r2 = run_theorem_suite(b);
  REQUIRE(r1.size() == r2.size());
  for (size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].theorem == r2[i].theorem);
    CHECK(r1[i].instances == r2[i].instances);
    CHECK(r1[i].failures == r2[i].failures);
    CHECK(r1[i].skips == r2[i].skips);
    CHECK(r1[i].details == r2[i].details);
  }
}
