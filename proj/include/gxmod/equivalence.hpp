#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gxmod/enumerate.hpp"
#include "gxmod/io.hpp"

namespace gxmod {

struct EquivalenceOptions {
  /// Cap on the number of morphisms collected in each category.
  std::size_t max_morphisms = 200000;
  /// Cap on composable pairs checked for the composition law in each category.
  std::size_t max_composable_pairs = 2000000;
  /// Also search exhaustively for a covering isomorphism c -> F(G(c)).
  bool exhaustive_witnesses = true;

  /// Defaults, with max_morphisms taken from GXMOD_MAX_MORPHISMS when set.
  static EquivalenceOptions from_env() {
    EquivalenceOptions o;
    if (const char* v = std::getenv("GXMOD_MAX_MORPHISMS")) {
      char* end = nullptr;
      const unsigned long long n = std::strtoull(v, &end, 10);
      if (end != v && *end == '\0' && n > 0) o.max_morphisms = static_cast<std::size_t>(n);
    }
    return o;
  }
};

template <class M>
struct MorphismEntry {
  std::size_t source;
  std::size_t target;
  M map;
};

struct CheckCount {
  std::size_t passed = 0;
  std::size_t failed = 0;

  void record(bool ok) { ok ? ++passed : ++failed; }
  std::size_t total() const noexcept { return passed + failed; }
};

struct CoveringRoundtrip {
  std::size_t covering;
  /// Index of covering_to_lifting(c) in the lifting list.
  std::optional<std::size_t> lifting;
  /// <f, 1> : c -> F(G(c)) verified as a covering isomorphism.
  CoveringMorphism witness;
  bool witness_valid = false;
  /// Result of the exhaustive search, when it was run.
  std::optional<bool> exhaustive_found;
};

/// Result of checking the equivalence between the coverings and the liftings
/// of one base over a search pool. F maps liftings to coverings, G coverings
/// to liftings.
struct EquivalenceReport {
  GXMod base;
  std::size_t order_bound = 0;

  std::vector<Lifting> liftings;
  std::vector<Covering> coverings;
  std::vector<MorphismEntry<LiftingMorphism>> lifting_morphisms;
  std::vector<MorphismEntry<CoveringMorphism>> covering_morphisms;

  /// F(l) as an index into `coverings` (nullopt when not enumerated).
  std::vector<std::optional<std::size_t>> lifting_to_covering;
  /// G(c) as an index into `liftings`.
  std::vector<std::optional<std::size_t>> covering_to_lifting;

  CheckCount objects_valid;
  CheckCount roundtrip_lifting;
  std::vector<CoveringRoundtrip> roundtrip_covering;
  CheckCount morphism_images;
  CheckCount morphism_roundtrip;
  CheckCount identity_law;
  CheckCount composition_law;
  CheckCount naturality;

  /// Maps X -> X' that are Gwa morphisms with omega' f = omega but break
  /// f phi = phi'; they are not morphisms of the lifting category.
  std::size_t excluded_lifting_maps = 0;

  bool natural_lifting_found = false;
  bool image_lifting_found = false;
  bool truncated = false;
  /// Why the pool is too small to hold every lifting the base requires.
  std::vector<std::string> missing;
  /// One line per failed check.
  std::vector<std::string> failures;

  bool roundtrip_lifting_exact() const noexcept {
    return roundtrip_lifting.failed == 0 && roundtrip_lifting.passed == liftings.size();
  }
  bool incomplete() const noexcept { return !missing.empty() || truncated; }
  bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

template <class T>
std::optional<std::size_t> position(const std::vector<T>& v, const T& x) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == x) return i;
  }
  return std::nullopt;
}

/// Homomorphism lists between pool groups, computed on first use.
class HomCache {
 public:
  const std::vector<Hom>& get(const GroupTable& a, const GroupTable& b) {
    auto key = std::pair{std::vector<Elem>(a.table().begin(), a.table().end()),
                         std::vector<Elem>(b.table().begin(), b.table().end())};
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), homomorphisms(a, b)).first;
    return it->second;
  }

 private:
  std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, std::vector<Hom>> cache_;
};

template <class M, class Compose, class Fail>
void check_composition(const std::vector<MorphismEntry<M>>& ms, std::size_t n_objects,
                       std::size_t cap, bool& truncated, CheckCount& count, Compose&& law,
                       Fail&& fail) {
  std::vector<std::vector<std::size_t>> out_of(n_objects);
  for (std::size_t i = 0; i < ms.size(); ++i) out_of[ms[i].source].push_back(i);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j : out_of[ms[i].target]) {
      if (seen++ >= cap) {
        truncated = true;
        return;
      }
      const bool ok = law(ms[i], ms[j]);
      count.record(ok);
      if (!ok) fail(i, j);
    }
  }
}

}  // namespace detail

/// Enumerates both categories over `pool`, applies both functors to every
/// object and morphism, and records each check.
inline EquivalenceReport verify_equivalence(const GXMod& base, const SearchPool& pool,
                                            const EquivalenceOptions& opt = {}) {
  EquivalenceReport r;
  r.base = base;
  r.order_bound = pool.order_bound;
  auto fail = [&](std::string s) { r.failures.push_back(std::move(s)); };

  // Completeness of the pool.
  const Lifting nat = natural_lifting(base);
  const Lifting img = image_lifting(base);
  if (!pool.covers(nat.X.group)) {
    r.missing.push_back("natural lifting needs a group of order " +
                        std::to_string(nat.X.order()) + " isomorphic to A/ker alpha");
  }
  if (!pool.covers(img.X.group)) {
    r.missing.push_back("image lifting needs a group of order " + std::to_string(img.X.order()) +
                        " isomorphic to alpha(A)");
  }

  r.liftings = enumerate_liftings(base, pool);
  r.coverings = enumerate_coverings(base, pool);
  for (const Lifting& l : r.liftings) {
    if (!r.natural_lifting_found && find_lifting_isomorphism(l, nat)) r.natural_lifting_found = true;
    if (!r.image_lifting_found && find_lifting_isomorphism(l, img)) r.image_lifting_found = true;
  }
  if (pool.covers(nat.X.group) && !r.natural_lifting_found) {
    fail("natural lifting not among the enumerated liftings");
  }
  if (pool.covers(img.X.group) && !r.image_lifting_found) {
    fail("image lifting not among the enumerated liftings");
  }

  // Objects: F then G is the identity on liftings.
  for (std::size_t i = 0; i < r.liftings.size(); ++i) {
    const Lifting& l = r.liftings[i];
    const bool valid = is_lifting(l);
    r.objects_valid.record(valid);
    if (!valid) fail("lifting " + std::to_string(i) + " fails validate_lifting");
    const Covering c = lifting_to_covering(l);
    r.lifting_to_covering.push_back(detail::position(r.coverings, c));
    if (!r.lifting_to_covering.back()) {
      fail("F(lifting " + std::to_string(i) + ") is not an enumerated covering");
    }
    const bool back = covering_to_lifting(c) == l;
    r.roundtrip_lifting.record(back);
    if (!back) fail("G(F(lifting " + std::to_string(i) + ")) differs from the lifting");
  }

  // Objects: G then F is isomorphic to the identity on coverings.
  for (std::size_t i = 0; i < r.coverings.size(); ++i) {
    const Covering& c = r.coverings[i];
    const bool valid = is_covering(c);
    r.objects_valid.record(valid);
    if (!valid) fail("covering " + std::to_string(i) + " fails validate_covering");
    const Lifting l = covering_to_lifting(c);
    r.covering_to_lifting.push_back(detail::position(r.liftings, l));
    if (!r.covering_to_lifting.back()) {
      fail("G(covering " + std::to_string(i) + ") is not an enumerated lifting");
    }
    const Covering back = lifting_to_covering(l);
    CoveringRoundtrip rt{i, r.covering_to_lifting.back(), covering_roundtrip_witness(c), false,
                         std::nullopt};
    rt.witness_valid = is_covering_morphism(c, back, rt.witness) &&
                       is_bijective(rt.witness.f, back.total.A.order()) &&
                       is_bijective(rt.witness.g, back.total.B.order());
    if (!rt.witness_valid) fail("no round-trip witness for covering " + std::to_string(i));
    if (opt.exhaustive_witnesses) {
      rt.exhaustive_found = find_covering_isomorphism(c, back).has_value();
      if (!*rt.exhaustive_found) {
        fail("exhaustive search finds no isomorphism for covering " + std::to_string(i));
      }
    }
    r.roundtrip_covering.push_back(std::move(rt));
  }

  // Morphism sets.
  detail::HomCache homs;
  bool full = false;
  for (std::size_t i = 0; i < r.liftings.size() && !full; ++i) {
    for (std::size_t j = 0; j < r.liftings.size() && !full; ++j) {
      const Lifting& a = r.liftings[i];
      const Lifting& b = r.liftings[j];
      for (const Hom& f : homs.get(a.X.group, b.X.group)) {
        LiftingMorphism m{f};
        if (!preserves_action(f, a.X, b.X) || !commutes_over_base(a, b, m)) continue;
        if (compose(f, a.phi) != b.phi) {
          ++r.excluded_lifting_maps;
          continue;
        }
        if (r.lifting_morphisms.size() >= opt.max_morphisms) {
          full = true;
          break;
        }
        r.lifting_morphisms.push_back({i, j, std::move(m)});
      }
    }
  }
  r.truncated = full;
  full = false;
  for (std::size_t i = 0; i < r.coverings.size() && !full; ++i) {
    for (std::size_t j = 0; j < r.coverings.size() && !full; ++j) {
      const Covering& a = r.coverings[i];
      const Covering& b = r.coverings[j];
      for (auto& m : covering_morphisms(a, b, homs.get(a.total.B.group, b.total.B.group))) {
        if (r.covering_morphisms.size() >= opt.max_morphisms) {
          full = true;
          break;
        }
        r.covering_morphisms.push_back({i, j, std::move(m)});
      }
    }
  }
  r.truncated = r.truncated || full;

  // Functors on morphisms.
  for (const auto& e : r.lifting_morphisms) {
    const Lifting& a = r.liftings[e.source];
    const Lifting& b = r.liftings[e.target];
    const Covering fa = lifting_to_covering(a), fb = lifting_to_covering(b);
    const CoveringMorphism fm = functor_on_lifting_morphism(a, b, e.map);
    const bool ok = is_covering_morphism(fa, fb, fm);
    r.morphism_images.record(ok);
    if (!ok) {
      fail("F fails on lifting morphism " + std::to_string(e.source) + " -> " +
           std::to_string(e.target));
    }
    const bool back = functor_on_covering_morphism(fa, fb, fm) == e.map;
    r.morphism_roundtrip.record(back);
    if (!back) fail("G(F(m)) != m for a lifting morphism");
  }
  for (const auto& e : r.covering_morphisms) {
    const Covering& a = r.coverings[e.source];
    const Covering& b = r.coverings[e.target];
    const Lifting ga = covering_to_lifting(a), gb = covering_to_lifting(b);
    const LiftingMorphism gm = functor_on_covering_morphism(a, b, e.map);
    const bool ok = is_lifting_morphism(ga, gb, gm);
    r.morphism_images.record(ok);
    if (!ok) {
      fail("G fails on covering morphism " + std::to_string(e.source) + " -> " +
           std::to_string(e.target));
    }
    // Naturality of <f, 1> : c -> F(G(c)).
    const CoveringMorphism fgm = functor_on_lifting_morphism(ga, gb, gm);
    const bool square = compose(fgm, covering_roundtrip_witness(a)) ==
                        compose(covering_roundtrip_witness(b), e.map);
    r.naturality.record(square);
    if (!square) {
      fail("naturality square fails on covering morphism " + std::to_string(e.source) + " -> " +
           std::to_string(e.target));
    }
  }

  // Functor laws.
  for (std::size_t i = 0; i < r.liftings.size(); ++i) {
    const Lifting& l = r.liftings[i];
    const bool ok = functor_on_lifting_morphism(l, l, identity_lifting_morphism(l)) ==
                    identity_covering_morphism(lifting_to_covering(l));
    r.identity_law.record(ok);
    if (!ok) fail("F does not preserve the identity of lifting " + std::to_string(i));
  }
  for (std::size_t i = 0; i < r.coverings.size(); ++i) {
    const Covering& c = r.coverings[i];
    const bool ok = functor_on_covering_morphism(c, c, identity_covering_morphism(c)) ==
                    identity_lifting_morphism(covering_to_lifting(c));
    r.identity_law.record(ok);
    if (!ok) fail("G does not preserve the identity of covering " + std::to_string(i));
  }
  detail::check_composition(
      r.lifting_morphisms, r.liftings.size(), opt.max_composable_pairs, r.truncated,
      r.composition_law,
      [&](const auto& m1, const auto& m2) {
        const Lifting& a = r.liftings[m1.source];
        const Lifting& b = r.liftings[m1.target];
        const Lifting& c = r.liftings[m2.target];
        const LiftingMorphism both = compose(m2.map, m1.map);
        return is_lifting_morphism(a, c, both) &&
               functor_on_lifting_morphism(a, c, both) ==
                   compose(functor_on_lifting_morphism(b, c, m2.map),
                           functor_on_lifting_morphism(a, b, m1.map));
      },
      [&](std::size_t i, std::size_t j) {
        fail("F breaks composition on lifting morphisms " + std::to_string(i) + ", " +
             std::to_string(j));
      });
  detail::check_composition(
      r.covering_morphisms, r.coverings.size(), opt.max_composable_pairs, r.truncated,
      r.composition_law,
      [&](const auto& m1, const auto& m2) {
        const Covering& a = r.coverings[m1.source];
        const Covering& b = r.coverings[m1.target];
        const Covering& c = r.coverings[m2.target];
        const CoveringMorphism both = compose(m2.map, m1.map);
        return is_covering_morphism(a, c, both) &&
               functor_on_covering_morphism(a, c, both) ==
                   compose(functor_on_covering_morphism(b, c, m2.map),
                           functor_on_covering_morphism(a, b, m1.map));
      },
      [&](std::size_t i, std::size_t j) {
        fail("G breaks composition on covering morphisms " + std::to_string(i) + ", " +
             std::to_string(j));
      });
  return r;
}

namespace detail {

inline json count_json(const CheckCount& c) {
  return {{"passed", c.passed}, {"failed", c.failed}};
}

inline json optional_index(const std::optional<std::size_t>& i) {
  return i ? json(*i) : json(nullptr);
}

}  // namespace detail

/// Objects are listed without repeating the base.
inline json to_json(const EquivalenceReport& r) {
  json liftings = json::array();
  for (const auto& l : r.liftings) {
    liftings.push_back({{"X", to_json(l.X)}, {"phi", l.phi.map}, {"omega", l.omega.map}});
  }
  json coverings = json::array();
  for (const auto& c : r.coverings) {
    coverings.push_back({{"A", to_json(c.total.A)},
                         {"B", to_json(c.total.B)},
                         {"alpha", c.total.alpha.map},
                         {"action", detail::rows(c.total.action.table(), c.total.A.order())},
                         {"f", c.f.map},
                         {"g", c.g.map}});
  }
  json lm = json::array();
  for (const auto& e : r.lifting_morphisms) {
    lm.push_back({{"source", e.source}, {"target", e.target}, {"f", e.map.f.map}});
  }
  json cm = json::array();
  for (const auto& e : r.covering_morphisms) {
    cm.push_back({{"source", e.source}, {"target", e.target}, {"f", e.map.f.map}, {"g", e.map.g.map}});
  }
  json l2c = json::array(), c2l = json::array();
  for (const auto& i : r.lifting_to_covering) l2c.push_back(detail::optional_index(i));
  for (const auto& i : r.covering_to_lifting) c2l.push_back(detail::optional_index(i));
  json witnesses = json::array();
  for (const auto& w : r.roundtrip_covering) {
    json x = {{"covering", w.covering},
              {"lifting", detail::optional_index(w.lifting)},
              {"f", w.witness.f.map},
              {"g", w.witness.g.map},
              {"valid", w.witness_valid}};
    if (w.exhaustive_found) x["exhaustive_found"] = *w.exhaustive_found;
    witnesses.push_back(std::move(x));
  }
  return {
      {"kind", "equivalence_report"},
      {"base", to_json(r.base)},
      {"order_bound", r.order_bound},
      {"liftings", liftings},
      {"coverings", coverings},
      {"lifting_morphisms", lm},
      {"covering_morphisms", cm},
      {"functor_images", {{"lifting_to_covering", l2c}, {"covering_to_lifting", c2l}}},
      {"roundtrip_lifting_exact", r.roundtrip_lifting_exact()},
      {"roundtrip_covering_iso_witnesses", witnesses},
      {"checks",
       {{"objects_valid", detail::count_json(r.objects_valid)},
        {"roundtrip_lifting", detail::count_json(r.roundtrip_lifting)},
        {"morphism_images", detail::count_json(r.morphism_images)},
        {"morphism_roundtrip", detail::count_json(r.morphism_roundtrip)},
        {"identity_law", detail::count_json(r.identity_law)},
        {"composition_law", detail::count_json(r.composition_law)},
        {"naturality", detail::count_json(r.naturality)}}},
      {"excluded_lifting_maps", r.excluded_lifting_maps},
      {"natural_lifting_found", r.natural_lifting_found},
      {"image_lifting_found", r.image_lifting_found},
      {"truncated", r.truncated},
      {"incomplete", r.incomplete()},
      {"missing", r.missing},
      {"failures", r.failures},
      {"ok", r.ok()},
  };
}

}  // namespace gxmod
