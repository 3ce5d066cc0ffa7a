#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "catkit/equiv.hpp"
#include "catkit/fixtures.hpp"
#include "catkit/rezk.hpp"
#include "catkit/serialize.hpp"

namespace catkit::harness {

struct GenBounds {
  int max_objects = 2;
  int max_hom_size = 2;
  int max_path_size = 2;
  long long guard_limit = 1'000'000;
  unsigned seed = 0;  // recorded in reports; enumeration is exhaustive
};

struct TheoremReport {
  std::string theorem;
  long long instances = 0;
  std::vector<std::string> failures;  // serialized counterexamples
  std::vector<std::string> skips;     // guard skips
  std::vector<std::string> details;   // informational lines, deterministic
  long long wall_ms = 0;
  bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string serialize_instance(const std::string& label,
                                      const FinPrecategory& C) {
  SourceFile f;
  f.precategories.push_back(NamedPrecategory{label, C, default_names(C)});
  return export_json(f);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Depth-first enumeration of composition tables for a fixed hom-size
// matrix with the identity pinned at index 0.  Unit-law entries are
// prefilled; every fully determined associativity triple is checked after
// each assignment.
class CompTableSearch {
 public:
  CompTableSearch(std::vector<std::vector<int>> hom_size, GuardCounter& guard)
      : h_(std::move(hom_size)),
        n_(static_cast<int>(h_.size())),
        guard_(guard) {}

  void run(const std::function<void(const FinPrecategory&)>& sink) {
    sink_ = &sink;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (h_[a][b] > 0 && h_[b][c] > 0 && h_[a][c] == 0)
            return;  // a composable pair with nowhere to land
    comp_.assign(n_, std::vector<std::vector<Table2>>(
                         n_, std::vector<Table2>(n_)));
    filled_.assign(n_, std::vector<std::vector<Table2>>(
                           n_, std::vector<Table2>(n_)));
    free_.clear();
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c) {
          comp_[a][b][c].assign(static_cast<size_t>(h_[a][b]),
                                std::vector<int>(
                                    static_cast<size_t>(h_[b][c]), 0));
          filled_[a][b][c].assign(static_cast<size_t>(h_[a][b]),
                                  std::vector<int>(
                                      static_cast<size_t>(h_[b][c]), 0));
        }
    for (int a = 0; a < n_; ++a)
      for (int c = 0; c < n_; ++c)
        for (int f = 0; f < h_[a][c]; ++f) {
          set(a, a, c, 0, f, f);  // f o id
          set(a, c, c, f, 0, f);  // id o f
        }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          for (int f = 0; f < h_[a][b]; ++f)
            for (int g = 0; g < h_[b][c]; ++g) {
              if (a == b && f == 0) continue;
              if (b == c && g == 0) continue;
              free_.push_back({a, b, c, f, g});
            }
    branch(0);
  }

 private:
  struct Entry {
    int a, b, c, f, g;
  };

  void set(int a, int b, int c, int f, int g, int v) {
    comp_[a][b][c][f][g] = v;
    filled_[a][b][c][f][g] = 1;
  }

  // Associativity over all triples whose four lookups are determined.
  bool consistent() const {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          for (int d = 0; d < n_; ++d)
            for (int f = 0; f < h_[a][b]; ++f)
              for (int g = 0; g < h_[b][c]; ++g)
                for (int e = 0; e < h_[c][d]; ++e) {
                  if (!filled_[a][b][c][f][g]) continue;
                  if (!filled_[b][c][d][g][e]) continue;
                  int gf = comp_[a][b][c][f][g];
                  int eg = comp_[b][c][d][g][e];
                  if (!filled_[a][c][d][gf][e]) continue;
                  if (!filled_[a][b][d][f][eg]) continue;
                  if (comp_[a][c][d][gf][e] != comp_[a][b][d][f][eg])
                    return false;
                }
    return true;
  }

  void branch(size_t i) {
    guard_.tick();
    if (i == free_.size()) {
      emit();
      return;
    }
    const Entry& e = free_[i];
    for (int v = 0; v < h_[e.a][e.c]; ++v) {
      set(e.a, e.b, e.c, e.f, e.g, v);
      if (consistent()) branch(i + 1);
      filled_[e.a][e.b][e.c][e.f][e.g] = 0;
    }
  }

  void emit() {
    FinPrecategory C;
    C.object_count = n_;
    C.hom_size = h_;
    C.identity.assign(static_cast<size_t>(n_), 0);
    C.comp = comp_;
    C.paths = discrete_groupoid(n_);
    C.transport.assign(n_, std::vector<std::vector<int>>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        C.transport[a][b] = (a == b) ? std::vector<int>{0}
                                     : std::vector<int>{};
    (*sink_)(C);
  }

  std::vector<std::vector<int>> h_;
  int n_;
  GuardCounter& guard_;
  const std::function<void(const FinPrecategory&)>* sink_ = nullptr;
  std::vector<std::vector<std::vector<Table2>>> comp_, filled_;
  std::vector<Entry> free_;
};

}  // namespace detail

// Deterministic stream of valid precategories within the bounds: the named
// fixtures that fit come first, then enumerated composition tables (hom
// matrices lexicographic, identity at index 0), each in a discrete-path
// and, when different and within the path bound, a core-path variant.
inline std::vector<FinPrecategory> generate_precategories(
    const GenBounds& b) {
  GuardCounter guard(b.guard_limit);
  std::vector<FinPrecategory> out;
  auto fits = [&](const FinPrecategory& C) {
    if (C.object_count > b.max_objects) return false;
    for (int x = 0; x < C.object_count; ++x)
      for (int y = 0; y < C.object_count; ++y) {
        if (C.hom_size[x][y] > b.max_hom_size) return false;
        if (C.paths.path_size[x][y] > b.max_path_size) return false;
      }
    return true;
  };
  auto push_unique = [&](const FinPrecategory& C) {
    for (const auto& seen : out)
      if (seen == C) return;
    out.push_back(C);
  };
  for (const auto& [name, cat] : fixtures::all())
    if (fits(cat)) push_unique(cat);

  for (int n = 1; n <= b.max_objects; ++n) {
    // hom matrices in lexicographic order, diagonal at least 1
    std::vector<int> cells(static_cast<size_t>(n * n), 0);
    for (int a = 0; a < n; ++a) cells[a * n + a] = 1;
    auto advance = [&]() {
      int i = n * n - 1;
      while (i >= 0) {
        int lo = (i / n == i % n) ? 1 : 0;
        if (cells[i] < b.max_hom_size) {
          ++cells[i];
          return true;
        }
        cells[i] = lo;
        --i;
      }
      return false;
    };
    for (;;) {
      guard.tick();
      std::vector<std::vector<int>> h(n, std::vector<int>(n, 0));
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) h[a][c] = cells[a * n + c];
      detail::CompTableSearch search(h, guard);
      search.run([&](const FinPrecategory& C) {
        push_unique(C);
        auto cored = with_core_paths(C);
        if (!(cored == C) && fits(cored)) push_unique(cored);
      });
      if (!advance()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Precomposition

struct Precomposition {
  FunctorCategory source;  // C^B
  FunctorCategory target;  // C^A
  FinFunctor fun;          // (- o H)
};

inline Precomposition precomposition_functor(const FinFunctor& H, CatPtr C) {
  Precomposition out{functor_category(H.cod, C), functor_category(H.dom, C),
                     {}};
  const FunctorCategory& CB = out.source;
  const FunctorCategory& CA = out.target;
  FinFunctor& P = out.fun;
  P.dom = CB.cat;
  P.cod = CA.cat;
  const int nb = static_cast<int>(CB.objects.size());
  std::vector<int> omap(static_cast<size_t>(nb));
  for (int i = 0; i < nb; ++i) {
    int idx = CA.object_index(compose_functors(CB.objects[i], H));
    if (idx < 0)
      throw CatError("precomposition: composite functor not enumerated");
    omap[i] = idx;
  }
  P.obj_map = FinMap{nb, static_cast<int>(CA.objects.size()), omap};
  P.hom_maps.assign(static_cast<size_t>(nb), std::vector<FinMap>(nb));
  P.path_map.assign(static_cast<size_t>(nb), std::vector<FinMap>(nb));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      std::vector<int> hm(CB.homs[i][j].size());
      for (size_t k = 0; k < CB.homs[i][j].size(); ++k) {
        auto whiskered = whisker_right(CB.homs[i][j][k], H);
        int idx = CA.hom_index(omap[i], omap[j], whiskered.components);
        if (idx < 0)
          throw CatError("precomposition: whiskered transformation missing");
        hm[k] = static_cast<int>(idx);
      }
      P.hom_maps[i][j] =
          FinMap{static_cast<int>(CB.homs[i][j].size()),
                 CA.cat->hom_size[omap[i]][omap[j]], std::move(hm)};
      std::vector<int> pm(CB.fpaths[i][j].size());
      for (size_t k = 0; k < CB.fpaths[i][j].size(); ++k) {
        FunctorPath image;
        for (int a = 0; a < H.dom->object_count; ++a)
          image.components.push_back(
              CB.fpaths[i][j][k].components[H.on(a)]);
        int idx = CA.path_index(omap[i], omap[j], image);
        if (idx < 0)
          throw CatError("precomposition: whiskered path family missing");
        pm[k] = idx;
      }
      P.path_map[i][j] =
          FinMap{static_cast<int>(CB.fpaths[i][j].size()),
                 CA.cat->paths.path_size[omap[i]][omap[j]], std::move(pm)};
    }
  return out;
}

struct PrecompositionReport {
  TheoremReport report;
  int source_objects = 0;       // |C^B|
  int target_objects = 0;       // |C^A|
  long long source_morphisms = 0;
  long long target_morphisms = 0;
  bool h_eso = false, h_full = false, h_weq = false;
  bool c_univalent = false;
  bool faithful = false, full = false, iso = false;
};

// Builds both functor categories and the precomposition functor, then
// checks the implications: H eso => faithful; H eso and full => fully
// faithful; H a weak equivalence into a univalent C => isomorphism.
inline PrecompositionReport check_precomposition(const FinFunctor& H,
                                                 CatPtr C) {
  detail::Stopwatch clock;
  PrecompositionReport rep;
  rep.report.theorem = "precomposition";
  auto pre = precomposition_functor(H, C);
  rep.source_objects = static_cast<int>(pre.source.objects.size());
  rep.target_objects = static_cast<int>(pre.target.objects.size());
  rep.source_morphisms = pre.source.cat->total_morphisms();
  rep.target_morphisms = pre.target.cat->total_morphisms();
  rep.report.instances = 1;

  if (!validate_functor(pre.fun).ok())
    rep.report.failures.push_back(
        "precomposition functor fails validation");

  auto hff = ff_report(H);
  rep.h_eso = essential_surjectivity_witness(H).total();
  rep.h_full = hff.full;
  rep.h_weq = hff.fully_faithful() && rep.h_eso;
  rep.c_univalent = is_univalent(*C).is_univalent;

  auto pff = ff_report(pre.fun);
  rep.faithful = pff.faithful;
  rep.full = pff.full;
  rep.iso = is_isomorphism_of_precats(pre.fun).holds;

  std::ostringstream counts;
  counts << "source objects=" << rep.source_objects
         << " morphisms=" << rep.source_morphisms
         << "; target objects=" << rep.target_objects
         << " morphisms=" << rep.target_morphisms;
  rep.report.details.push_back(counts.str());

  if (rep.h_eso && !rep.faithful)
    rep.report.failures.push_back(
        "H essentially surjective but precomposition not faithful; " +
        counts.str());
  if (rep.h_eso && rep.h_full && !pff.fully_faithful())
    rep.report.failures.push_back(
        "H essentially surjective and full but precomposition not fully "
        "faithful; " +
        counts.str());
  if (rep.h_weq && rep.c_univalent && !rep.iso)
    rep.report.failures.push_back(
        "H a weak equivalence and C univalent but precomposition is not an "
        "isomorphism of precategories; " +
        counts.str());
  rep.report.wall_ms = clock.ms();
  return rep;
}

// Final theorem instance: C univalent iff precomposition with its Rezk
// unit is an isomorphism of precategories.
inline TheoremReport check_univalence_characterization(CatPtr C) {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "univalence-characterization";
  rep.instances = 1;
  auto rc = rezk_completion(C);
  auto pre = check_precomposition(rc.unit, C);
  bool univalent = is_univalent(*C).is_univalent;
  for (const auto& d : pre.report.details) rep.details.push_back(d);
  for (const auto& f : pre.report.failures) rep.failures.push_back(f);
  if (univalent != pre.iso) {
    std::ostringstream os;
    os << "univalence (" << (univalent ? "yes" : "no")
       << ") disagrees with precomposition-iso (" << (pre.iso ? "yes" : "no")
       << "): functors from completion=" << pre.source_objects
       << " vs functors from C=" << pre.target_objects << "\n"
       << detail::serialize_instance("counterexample", *C);
    rep.failures.push_back(os.str());
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Theorem suites

namespace detail {

inline CatPtr fixture_ptr(const char* name) {
  for (auto& [n, cat] : fixtures::all())
    if (n == name) return wrap(cat);
  throw CatError(std::string("unknown fixture ") + name);
}

template <typename Fn>
void for_each_quasi_equivalence(CatPtr A, CatPtr B, Fn&& fn) {
  for (const auto& F : enumerate_functors(A, B))
    for (const auto& G : enumerate_functors(B, A)) {
      auto GF = compose_functors(G, F);
      auto FG = compose_functors(F, G);
      for (const auto& eta : enumerate_nat_trans(identity_functor(A), GF)) {
        if (!is_nat_iso(eta)) continue;
        for (const auto& eps :
             enumerate_nat_trans(FG, identity_functor(B))) {
          if (!is_nat_iso(eps)) continue;
          fn(F, G, eta, eps);
        }
      }
    }
}

}  // namespace detail

// Thm 4.5 instances: B^A univalent whenever B is; J bijectivity pairwise
// is exactly what is_univalent checks.  Includes the negative instance for
// a non-univalent target.
inline TheoremReport suite_functor_cat(
    const std::vector<FinPrecategory>& instances) {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "functor-cat-univalence";
  std::vector<CatPtr> targets;
  for (const auto& [name, cat] : fixtures::all())
    if (is_univalent(cat).is_univalent) targets.push_back(wrap(cat));
  for (const auto& inst : instances) {
    CatPtr A = wrap(inst);
    for (const auto& B : targets) {
      long long bound = functor_candidate_bound(*A, *B, guard_limit());
      if (bound > guard_limit()) {
        rep.skips.push_back("guard: functor space bound exceeds " +
                            std::to_string(guard_limit()));
        continue;
      }
      try {
        auto FC = functor_category(A, B);
        ++rep.instances;
        if (!validate_precategory(*FC.cat).ok())
          rep.failures.push_back(
              "functor category fails validation\n" +
              detail::serialize_instance("domain", *A));
        if (!is_univalent(*FC.cat).is_univalent)
          rep.failures.push_back(
              "functor category into univalent target not univalent\n" +
              detail::serialize_instance("domain", *A) +
              detail::serialize_instance("target", *B));
      } catch (const EnumerationTooLarge& e) {
        rep.skips.push_back(std::string("guard: ") + e.what());
      }
    }
  }
  // existence half: some A with non-univalent B gives a non-univalent B^A
  {
    auto FC = functor_category(detail::fixture_ptr("terminal"),
                               detail::fixture_ptr("chaotic2"));
    ++rep.instances;
    if (is_univalent(*FC.cat).is_univalent)
      rep.failures.push_back(
          "chaotic2^terminal unexpectedly univalent");
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// Lemma 4.8 over enumerated transformation pairs on fixture triples.
inline TheoremReport suite_interchange() {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "interchange";
  auto one = detail::fixture_ptr("terminal");
  auto wa = detail::fixture_ptr("walking_arrow");
  auto ch2 = detail::fixture_ptr("chaotic2");
  auto z2 = detail::fixture_ptr("z2");
  auto bz2 = wrap(mk_discrete(with_core_paths(fixtures::z2()).paths));
  std::vector<std::array<CatPtr, 3>> triples = {
      {ch2, wa, wa}, {z2, z2, z2}, {wa, wa, wa}, {one, bz2, bz2}};
  for (auto& [A, B, C] : triples) {
    auto fs = enumerate_functors(A, B);
    auto gs = enumerate_functors(B, C);
    for (const auto& F : fs)
      for (const auto& G : fs)
        for (const auto& gamma : enumerate_nat_trans(F, G))
          for (const auto& H : gs)
            for (const auto& K : gs)
              for (const auto& delta : enumerate_nat_trans(H, K)) {
                ++rep.instances;
                if (!interchange_check(gamma, delta).holds)
                  rep.failures.push_back("interchange fails");
              }
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// Adjointification repairs every enumerated quasi-equivalence.
inline TheoremReport suite_adjointification() {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "adjointification";
  auto one = detail::fixture_ptr("terminal");
  auto wa = detail::fixture_ptr("walking_arrow");
  auto ch2 = detail::fixture_ptr("chaotic2");
  auto z2 = detail::fixture_ptr("z2");
  auto rch2 = detail::fixture_ptr("rezk_chaotic2");
  auto bz2 = wrap(mk_discrete(with_core_paths(fixtures::z2()).paths));
  std::vector<std::pair<CatPtr, CatPtr>> pairs = {
      {ch2, one}, {one, ch2}, {z2, z2},     {wa, wa},
      {bz2, bz2}, {rch2, one}, {rch2, rch2}};
  for (auto& [A, B] : pairs)
    detail::for_each_quasi_equivalence(
        A, B,
        [&](const FinFunctor& F, const FinFunctor& G, const FinNatTrans& eta,
            const FinNatTrans& eps) {
          ++rep.instances;
          auto eq = adjointify(F, G, eta, eps);
          auto check = check_adjunction(eq.adj);
          if (!check.ok())
            rep.failures.push_back(
                "adjointify output violates " + check.violations[0].law);
          if (!(eq.adj.eta == eta))
            rep.failures.push_back("adjointify altered the unit");
        });
  rep.wall_ms = clock.ms();
  return rep;
}

// ct:ffeso: round-trips recover (G0, eps); the construction succeeds
// exactly when some adjoint-equivalence structure exists.
inline TheoremReport suite_ffeso(
    const std::vector<FinPrecategory>& instances) {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "ffeso";
  auto one = detail::fixture_ptr("terminal");
  auto wa = detail::fixture_ptr("walking_arrow");
  auto ch2 = detail::fixture_ptr("chaotic2");
  auto z2 = detail::fixture_ptr("z2");
  auto rch2 = detail::fixture_ptr("rezk_chaotic2");
  auto bz2 = wrap(mk_discrete(with_core_paths(fixtures::z2()).paths));

  // direction 1 -> 2 -> 1: extract the witness carried by an equivalence,
  // rebuild, compare
  std::vector<std::pair<CatPtr, CatPtr>> pairs = {
      {ch2, one}, {one, ch2}, {z2, z2}, {wa, wa}, {bz2, bz2}, {rch2, rch2}};
  for (auto& [A, B] : pairs)
    detail::for_each_quasi_equivalence(
        A, B,
        [&](const FinFunctor& F, const FinFunctor& G, const FinNatTrans& eta,
            const FinNatTrans& eps) {
          ++rep.instances;
          auto eq = adjointify(F, G, eta, eps);
          EsoWitness w;
          for (int b = 0; b < B->object_count; ++b)
            w.entries.push_back(EsoEntry{eq.adj.G.on(b),
                                         eq.adj.eps.components[b],
                                         eq.eps_inverses[b]});
          try {
            auto eq2 = equivalence_from_ffeso(F, w);
            if (!(eq2.adj.G.obj_map == eq.adj.G.obj_map) ||
                !(eq2.adj.G.hom_maps == eq.adj.G.hom_maps) ||
                !(eq2.adj.eps == eq.adj.eps))
              rep.failures.push_back("round-trip lost (G0, eps) data");
            if (!check_adjunction(eq2.adj).ok())
              rep.failures.push_back("round-trip output invalid");
          } catch (const CatError& e) {
            rep.failures.push_back(std::string("round-trip threw: ") +
                                   e.what());
          }
        });

  // decision soundness on generated instances: construction succeeds iff
  // an adjoint equivalence exists at all
  for (const auto& inst : instances) {
    CatPtr X = wrap(inst);
    for (CatPtr Y : {X, one}) {
      std::vector<FinFunctor> fs;
      try {
        GuardScope tight(100'000);
        fs = enumerate_functors(X, Y);
      } catch (const EnumerationTooLarge& e) {
        rep.skips.push_back(std::string("guard: ") + e.what());
        continue;
      }
      for (const auto& F : fs) {
        if (!ff_report(F).fully_faithful()) continue;
        auto w = essential_surjectivity_witness(F);
        if (!w.total()) continue;
        ++rep.instances;
        bool built = false;
        try {
          auto eq = equivalence_from_ffeso(F, w);
          built = true;
          if (!check_adjunction(eq.adj).ok())
            rep.failures.push_back(
                "ffeso output violates the adjunction laws\n" +
                detail::serialize_instance("domain", *X));
        } catch (const NotSplitEssentiallySurjective&) {
          built = false;
        }
        if (!built) {
          // verify by brute force that no equivalence structure exists
          bool exists = false;
          detail::for_each_quasi_equivalence(
              X, Y,
              [&](const FinFunctor& F2, const FinFunctor&, const FinNatTrans&,
                  const FinNatTrans&) {
                if (F2 == F) exists = true;
              });
          if (exists)
            rep.failures.push_back(
                "construction failed although an equivalence exists\n" +
                detail::serialize_instance("domain", *X));
        }
      }
    }
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// Thm 7.4 on the walking arrow and the divisibility poset against every
// presheaf with carriers at most 2, plus naturality of the bijection.
inline TheoremReport suite_yoneda_lemma() {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "yoneda-lemma";
  for (const char* name : {"walking_arrow", "divposet"}) {
    CatPtr A = detail::fixture_ptr(name);
    const FinPrecategory& C = *A;
    for (const auto& F : enumerate_presheaves(A, 2)) {
      for (int a = 0; a < C.object_count; ++a) {
        ++rep.instances;
        auto ya = yoneda_object(A, a);
        for (int x = 0; x < F.carrier[a]; ++x) {
          auto alpha = yoneda_backward(A, a, F, x);
          if (!validate_presheaf_mor(ya, F, alpha).ok())
            rep.failures.push_back("backward image not natural");
          if (yoneda_forward(A, a, F, alpha) != x)
            rep.failures.push_back("forward(backward(x)) != x");
        }
        for (const auto& alpha : enumerate_presheaf_mors(ya, F))
          if (!(yoneda_backward(A, a, F, yoneda_forward(A, a, F, alpha)) ==
                alpha))
            rep.failures.push_back("backward(forward(alpha)) != alpha");
      }
    }
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// Cor 7.5: the corestricted Yoneda embedding is fully faithful on every
// fixture: Nat(y a, y b) is exactly the image of hom(a,b).
inline TheoremReport suite_yoneda_embedding() {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "yoneda-embedding";
  for (const auto& [name, cat] : fixtures::all()) {
    CatPtr A = wrap(cat);
    const FinPrecategory& C = *A;
    for (int a = 0; a < C.object_count; ++a)
      for (int b = 0; b < C.object_count; ++b) {
        ++rep.instances;
        auto ya = yoneda_object(A, a);
        auto yb = yoneda_object(A, b);
        auto nat = enumerate_presheaf_mors(ya, yb);
        std::vector<PresheafMor> images;
        for (int f = 0; f < C.hom_size[a][b]; ++f)
          images.push_back(yoneda_map(A, MorRef{a, b, f}));
        bool faithful = true;
        for (size_t i = 0; i < images.size(); ++i)
          for (size_t j = i + 1; j < images.size(); ++j)
            if (images[i] == images[j]) faithful = false;
        bool full = images.size() == nat.size();
        for (const auto& m : nat) {
          bool found = false;
          for (const auto& img : images)
            if (img == m) found = true;
          if (!found) full = false;
        }
        if (!faithful || !full)
          rep.failures.push_back("yoneda embedding not fully faithful on " +
                                 name + " at pair (" + std::to_string(a) +
                                 "," + std::to_string(b) + ")");
      }
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// Lemmas 8.1, 8.2 and Thm 8.3 on curated instances.
inline TheoremReport suite_precomposition() {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "precomposition";
  auto one = detail::fixture_ptr("terminal");
  auto wa = detail::fixture_ptr("walking_arrow");
  auto ch2 = detail::fixture_ptr("chaotic2");
  auto z2 = detail::fixture_ptr("z2");
  auto dvp = detail::fixture_ptr("divposet");
  auto bz2 = wrap(mk_discrete(with_core_paths(fixtures::z2()).paths));

  auto merge = [&](const PrecompositionReport& r) {
    rep.instances += 1;
    for (const auto& f : r.report.failures) rep.failures.push_back(f);
    for (const auto& d : r.report.details) rep.details.push_back(d);
  };

  // Thm 8.3 flagship: H: chaotic2 -> terminal against the walking arrow
  {
    auto H = enumerate_functors(ch2, one)[0];
    auto r = check_precomposition(H, wa);
    merge(r);
    if (!(r.source_objects == 2 && r.target_objects == 2 &&
          r.source_morphisms == 3 && r.target_morphisms == 3))
      rep.failures.push_back("expected 2 objects / 3 morphisms on both "
                             "sides of (- o H): " +
                             rep.details.back());
    if (!r.iso)
      rep.failures.push_back(
          "precomposition along chaotic2 -> terminal is not an iso");
  }
  // identity precomposition is an isomorphism
  {
    auto r = check_precomposition(identity_functor(wa), wa);
    merge(r);
    if (!r.iso)
      rep.failures.push_back("precomposition along identity not an iso");
  }
  // eso+full but unfaithful H: z2 -> terminal, Lemma 8.2 still applies
  {
    auto H = enumerate_functors(z2, one)[0];
    auto r = check_precomposition(H, wa);
    merge(r);
    if (!(r.h_eso && r.h_full))
      rep.failures.push_back("z2 -> terminal should be eso and full");
    if (!(r.faithful && r.full))
      rep.failures.push_back(
          "precomposition along eso+full H not fully faithful");
  }
  // weak equivalences with path-carrying codomain: rezk units
  for (CatPtr C : {wa, bz2}) {
    auto rc = rezk_completion(z2);
    auto r = check_precomposition(rc.unit, C);
    merge(r);
    if (is_univalent(*C).is_univalent && !r.iso)
      rep.failures.push_back(
          "precomposition along a rezk unit into a univalent target is "
          "not an iso");
  }
  // the final-theorem counterexample: non-univalent C sees its own unit
  {
    auto rc = rezk_completion(ch2);
    auto r = check_precomposition(rc.unit, ch2);
    merge(r);
    if (r.iso)
      rep.failures.push_back(
          "non-univalent chaotic2 should not see its unit as an iso");
    if (!(r.source_objects == 2 && r.target_objects == 4))
      rep.failures.push_back(
          "expected 2 vs 4 functors in the chaotic2 counterexample, got " +
          std::to_string(r.source_objects) + " vs " +
          std::to_string(r.target_objects));
  }
  (void)dvp;
  rep.wall_ms = clock.ms();
  return rep;
}

// Thm 8.4 guarantees on every generated instance.
inline TheoremReport suite_rezk(
    const std::vector<FinPrecategory>& instances) {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "rezk-completion";
  for (const auto& inst : instances) {
    ++rep.instances;
    CatPtr C = wrap(inst);
    auto rc = rezk_completion(C);
    if (!is_univalent(*rc.completion).is_univalent)
      rep.failures.push_back("completion not univalent\n" +
                             detail::serialize_instance("input", inst));
    if (!validate_functor(rc.unit).ok())
      rep.failures.push_back("unit not a functor\n" +
                             detail::serialize_instance("input", inst));
    if (!is_weak_equivalence(rc.unit).holds)
      rep.failures.push_back("unit not a weak equivalence\n" +
                             detail::serialize_instance("input", inst));
    bool unit_iso = is_isomorphism_of_precats(rc.unit).holds;
    if (unit_iso != is_univalent(inst).is_univalent)
      rep.failures.push_back(
          "unit iso-ness disagrees with input univalence\n" +
          detail::serialize_instance("input", inst));
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// Cross-check of the intrinsic completion against the presheaf
// construction on the small named fixtures.
inline TheoremReport suite_rezk_yoneda() {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "rezk-yoneda-crosscheck";
  for (const char* name :
       {"terminal", "walking_arrow", "chaotic2", "z2"}) {
    ++rep.instances;
    if (!rezk_yoneda_crosscheck(detail::fixture_ptr(name)))
      rep.failures.push_back(std::string("crosscheck failed on ") + name);
  }
  rep.wall_ms = clock.ms();
  return rep;
}

// Final theorem over every generated instance, guarded per instance.
inline TheoremReport suite_univalence_characterization(
    const std::vector<FinPrecategory>& instances) {
  detail::Stopwatch clock;
  TheoremReport rep;
  rep.theorem = "univalence-characterization";
  for (const auto& inst : instances) {
    CatPtr C = wrap(inst);
    auto chat = with_core_paths(inst);
    long long cap = guard_limit();
    if (functor_candidate_bound(chat, inst, cap) > cap ||
        functor_candidate_bound(inst, inst, cap) > cap) {
      rep.skips.push_back("guard: functor space bound exceeds " +
                          std::to_string(cap));
      continue;
    }
    try {
      auto r = check_univalence_characterization(C);
      ++rep.instances;
      for (const auto& f : r.failures) rep.failures.push_back(f);
    } catch (const EnumerationTooLarge& e) {
      rep.skips.push_back(std::string("guard: ") + e.what());
    }
  }
  rep.wall_ms = clock.ms();
  return rep;
}

inline std::vector<TheoremReport> run_theorem_suite(const GenBounds& b) {
  GuardScope scope(b.guard_limit);
  auto instances = generate_precategories(b);
  std::vector<TheoremReport> reports;
  reports.push_back(suite_functor_cat(instances));
  reports.push_back(suite_interchange());
  reports.push_back(suite_adjointification());
  reports.push_back(suite_ffeso(instances));
  reports.push_back(suite_yoneda_lemma());
  reports.push_back(suite_yoneda_embedding());
  reports.push_back(suite_precomposition());
  reports.push_back(suite_rezk(instances));
  reports.push_back(suite_rezk_yoneda());
  reports.push_back(suite_univalence_characterization(instances));
  return reports;
}

inline ordered_json reports_to_json(const std::vector<TheoremReport>& reps,
                                    const GenBounds& b) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  ordered_json bounds;
  bounds["max_objects"] = b.max_objects;
  bounds["max_hom_size"] = b.max_hom_size;
  bounds["max_path_size"] = b.max_path_size;
  bounds["guard_limit"] = b.guard_limit;
  bounds["seed"] = b.seed;
  out["bounds"] = bounds;
  out["reports"] = ordered_json::array();
  for (const auto& r : reps) {
    ordered_json j;
    j["theorem"] = r.theorem;
    j["instances"] = r.instances;
    j["failures"] = r.failures;
    j["skips"] = r.skips;
    j["details"] = r.details;
    j["wall_ms"] = r.wall_ms;
    out["reports"].push_back(j);
  }
  return out;
}

}  // namespace catkit::harness
