#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

#include "gxmod/cat1.hpp"
#include "gxmod/cover_lift.hpp"

namespace gxmod {

namespace detail {

/// Generators chosen greedily (largest element order first) plus a spanning
/// tree of the right Cayley graph: element tree_order[i] = parent * gens[via].
struct CayleySkeleton {
  std::vector<Elem> gens;
  std::vector<Elem> tree_order;
  std::vector<Elem> parent;
  std::vector<std::size_t> via;
};

inline CayleySkeleton cayley_skeleton(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<Elem> candidates(n);
  for (Elem i = 0; i < n; ++i) candidates[i] = i;
  std::stable_sort(candidates.begin(), candidates.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  CayleySkeleton s;
  Subgroup span = trivial_subgroup(g);
  for (Elem c : candidates) {
    if (span.size() == n) break;
    if (!span.contains(c)) {
      s.gens.push_back(c);
      span = generated_subgroup(g, s.gens);
    }
  }
  s.parent.assign(n, 0);
  s.via.assign(n, 0);
  std::vector<bool> seen(n, false);
  s.tree_order.push_back(g.identity());
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < s.tree_order.size(); ++i) {
    const Elem x = s.tree_order[i];
    for (std::size_t k = 0; k < s.gens.size(); ++k) {
      const Elem y = g.op(x, s.gens[k]);
      if (!seen[y]) {
        seen[y] = true;
        s.parent[y] = x;
        s.via[y] = k;
        s.tree_order.push_back(y);
      }
    }
  }
  return s;
}

/// Runs `fn` on every index in [0, count) across hardware threads and returns
/// the results in index order, so output never depends on scheduling.
template <class Fn>
auto ordered_parallel_map(std::size_t count, Fn fn) -> std::vector<std::invoke_result_t<Fn, std::size_t>> {
  using R = std::invoke_result_t<Fn, std::size_t>;
  std::vector<R> out(count);
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace detail

/// Calls `fn(const Hom&)` for every homomorphism src -> tgt, in lexicographic
/// order of the generator images. If `fn` returns bool, false stops the search.
template <class Fn>
void for_each_hom(const GroupTable& src, const GroupTable& tgt, Fn&& fn) {
  const detail::CayleySkeleton sk = detail::cayley_skeleton(src);
  const std::size_t k = sk.gens.size();
  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t ord = src.element_order(sk.gens[i]);
    for (Elem y = 0; y < tgt.order(); ++y) {
      if (ord % tgt.element_order(y) == 0) candidates[i].push_back(y);
    }
  }
  std::vector<Elem> img(k);
  Hom h{std::vector<Elem>(src.order())};
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    if (depth < k) {
      for (Elem y : candidates[depth]) {
        img[depth] = y;
        rec(depth + 1);
        if (stop) return;
      }
      return;
    }
    h.map[src.identity()] = tgt.identity();
    for (std::size_t i = 1; i < sk.tree_order.size(); ++i) {
      const Elem y = sk.tree_order[i];
      h.map[y] = tgt.op(h.map[sk.parent[y]], img[sk.via[y]]);
    }
    for (Elem x = 0; x < src.order(); ++x) {
      for (std::size_t s = 0; s < k; ++s) {
        if (h.map[src.op(x, sk.gens[s])] != tgt.op(h.map[x], img[s])) return;
      }
    }
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const Hom&>, bool>) {
      if (!fn(static_cast<const Hom&>(h))) stop = true;
    } else {
      fn(static_cast<const Hom&>(h));
    }
  };
  rec(0);
}

inline std::vector<Hom> homomorphisms(const GroupTable& src, const GroupTable& tgt) {
  std::vector<Hom> out;
  for_each_hom(src, tgt, [&](const Hom& h) { out.push_back(h); });
  return out;
}

inline std::vector<Hom> isomorphisms(const GroupTable& src, const GroupTable& tgt) {
  std::vector<Hom> out;
  if (src.order() != tgt.order()) return out;
  for_each_hom(src, tgt, [&](const Hom& h) {
    if (is_bijective(h, tgt.order())) out.push_back(h);
  });
  return out;
}

inline std::vector<Hom> automorphisms(const GroupTable& g) { return isomorphisms(g, g); }

inline std::vector<Hom> gwa_morphisms(const GwaObject& src, const GwaObject& tgt) {
  std::vector<Hom> out;
  for_each_hom(src.group, tgt.group, [&](const Hom& h) {
    if (preserves_action(h, src, tgt)) out.push_back(h);
  });
  return out;
}

inline std::vector<Hom> gwa_isomorphisms(const GwaObject& src, const GwaObject& tgt) {
  std::vector<Hom> out;
  for (auto& h : isomorphisms(src.group, tgt.group)) {
    if (preserves_action(h, src, tgt)) out.push_back(std::move(h));
  }
  return out;
}

inline bool are_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  bool found = false;
  for_each_hom(a, b, [&](const Hom& h) {
    found = is_bijective(h, b.order());
    return !found;
  });
  return found;
}

/// Aut(G) as a group table; element i is `elements[i]`, 0 is the identity map
/// and op(i, j) = elements[i] ∘ elements[j].
struct AutomorphismGroup {
  GroupTable group;
  std::vector<Hom> elements;
};

inline AutomorphismGroup automorphism_group(const GroupTable& g) {
  std::vector<Hom> autos = automorphisms(g);
  const Hom id = Hom::identity(g.order());
  std::sort(autos.begin(), autos.end());
  auto it = std::find(autos.begin(), autos.end(), id);
  std::rotate(autos.begin(), it, it + 1);
  const std::size_t n = autos.size();
  std::vector<Elem> op(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      const Hom c = compose(autos[i], autos[j]);
      op[i * n + j] = static_cast<Elem>(std::find(autos.begin(), autos.end(), c) - autos.begin());
    }
  }
  return {GroupTable("Aut(" + g.name() + ")", n, std::move(op)), std::move(autos)};
}

/// Every action of `actor` on `space` by automorphisms, one per homomorphism
/// actor -> Aut(space), sorted by table.
inline std::vector<ExtAction> enumerate_ext_actions(const GroupTable& actor,
                                                    const GroupTable& space) {
  const AutomorphismGroup aut = automorphism_group(space);
  std::vector<ExtAction> out;
  for_each_hom(actor, aut.group, [&](const Hom& rho) {
    std::vector<Hom> rows;
    rows.reserve(actor.order());
    for (Elem b = 0; b < actor.order(); ++b) rows.push_back(aut.elements[rho(b)]);
    out.push_back(ExtAction::from_rows(rows, space.order()));
  });
  std::sort(out.begin(), out.end(), [](const ExtAction& a, const ExtAction& b) {
    return std::lexicographical_compare(a.table().begin(), a.table().end(), b.table().begin(),
                                        b.table().end());
  });
  return out;
}

inline std::vector<ExtAction> enumerate_ext_actions(const GwaObject& actor,
                                                    const GwaObject& space) {
  return enumerate_ext_actions(actor.group, space.group);
}

/// Every self-action of `g` by automorphisms, sorted by table.
inline std::vector<SelfAction> enumerate_self_actions(const GroupTable& g) {
  std::vector<SelfAction> out;
  for (const auto& a : enumerate_ext_actions(g, g)) {
    out.emplace_back(g.order(), std::vector<Elem>(a.table().begin(), a.table().end()));
  }
  return out;
}

inline std::vector<GwaObject> enumerate_gwa_objects(const GroupTable& g) {
  std::vector<GwaObject> out;
  for (auto& a : enumerate_self_actions(g)) out.emplace_back(g, std::move(a));
  return out;
}

/// Every (alpha, action) making (A, B, alpha) a generalized crossed module,
/// ordered by alpha then action table.
inline std::vector<GXMod> enumerate_gxmods(const GwaObject& a, const GwaObject& b) {
  const std::vector<ExtAction> actions = enumerate_ext_actions(b.group, a.group);
  std::vector<GXMod> out;
  for (const Hom& alpha : homomorphisms(a.group, b.group)) {
    for (const ExtAction& act : actions) {
      GXMod x{a, b, alpha, act};
      if (satisfies_gxmod_conditions(x)) out.push_back(std::move(x));
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// Search pools
// ----------------------------------------------------------------------------

/// Largest order covered by the built-in catalogue of small groups.
inline constexpr std::size_t kMaxPoolOrder = 8;

/// One group per isomorphism class, orders 1..max_order (max_order <= 8).
inline std::vector<GroupTable> small_groups(std::size_t max_order) {
  if (max_order > kMaxPoolOrder) {
    throw PreconditionError("pool-bound", "the group catalogue covers orders up to 8");
  }
  const GroupTable z2 = cyclic_group(2);
  std::vector<GroupTable> all{trivial_group(),
                              z2,
                              cyclic_group(3),
                              cyclic_group(4),
                              direct_product(z2, z2),
                              cyclic_group(5),
                              cyclic_group(6),
                              symmetric_group_3(),
                              cyclic_group(7),
                              cyclic_group(8),
                              direct_product(cyclic_group(4), z2),
                              direct_product(direct_product(z2, z2), z2),
                              dihedral_group(4),
                              quaternion_group()};
  std::vector<GroupTable> out;
  for (auto& g : all) {
    if (g.order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

/// The finite range of groups that liftings and coverings draw from.
struct SearchPool {
  std::vector<GroupTable> groups;
  std::size_t order_bound = 8;

  static SearchPool up_to(std::size_t bound) {
    if (bound == 0) throw PreconditionError("pool-bound", "order bound must be at least 1");
    return {small_groups(bound), bound};
  }

  /// Index of the pool group equal (as a table) to `g`, if any.
  std::optional<std::size_t> index_of(const GroupTable& g) const {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i] == g) return i;
    }
    return std::nullopt;
  }

  /// Whether some pool group is isomorphic to `g`.
  bool covers(const GroupTable& g) const {
    return std::any_of(groups.begin(), groups.end(),
                       [&](const GroupTable& p) { return are_isomorphic(p, g); });
  }
};

/// Every lifting (X, phi, omega) of `base` with X a pool group under any
/// self-action, omega a Gwa morphism, and omega phi = alpha. Ordered by pool
/// group, self-action, omega, phi.
inline std::vector<Lifting> enumerate_liftings(const GXMod& base, const SearchPool& pool) {
  auto per_group = detail::ordered_parallel_map(pool.groups.size(), [&](std::size_t i) {
    const GroupTable& xg = pool.groups[i];
    std::vector<Lifting> found;
    const std::vector<Hom> omegas = homomorphisms(xg, base.B.group);
    const std::vector<Hom> phis = homomorphisms(base.A.group, xg);
    for (const GwaObject& X : enumerate_gwa_objects(xg)) {
      for (const Hom& omega : omegas) {
        if (!preserves_action(omega, X, base.B)) continue;
        for (const Hom& phi : phis) {
          if (compose(omega, phi) != base.alpha) continue;
          if (lifting_criterion(base, X, phi, omega)) found.push_back({base, X, phi, omega});
        }
      }
    }
    return found;
  });
  std::vector<Lifting> out;
  for (auto& v : per_group) std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

/// Every covering <f, g> : (A~, B~, alpha~) -> base where A~ is the group of A
/// carrying the self-action that makes f a Gwa isomorphism, f ranges over
/// Aut(A), and B~ is a pool group under any self-action. The action of B~ on
/// A~ is forced by equivariance: b~·a~ = f^-1(g(b~)·f(a~)).
inline std::vector<Covering> enumerate_coverings(const GXMod& base, const SearchPool& pool) {
  const std::vector<Hom> fs = automorphisms(base.A.group);
  const std::size_t na = base.A.order();
  auto per_task = detail::ordered_parallel_map(fs.size() * pool.groups.size(), [&](std::size_t task) {
    const Hom& f = fs[task / pool.groups.size()];
    const GroupTable& bg = pool.groups[task % pool.groups.size()];
    const Hom f_inv = inverse(f);
    const GwaObject a_tilde(base.A.group, pullback_action(base.A, f));
    const Hom alpha_f = compose(base.alpha, f);
    const std::vector<Hom> gs = homomorphisms(bg, base.B.group);
    const std::vector<Hom> alphas = homomorphisms(base.A.group, bg);
    std::vector<Covering> found;
    for (const GwaObject& b_tilde : enumerate_gwa_objects(bg)) {
      for (const Hom& g : gs) {
        if (!preserves_action(g, b_tilde, base.B)) continue;
        std::vector<Elem> act(bg.order() * na);
        for (Elem b = 0; b < bg.order(); ++b) {
          for (Elem a = 0; a < na; ++a) act[b * na + a] = f_inv(base.act(g(b), f(a)));
        }
        const ExtAction action(bg.order(), na, std::move(act));
        for (const Hom& alpha : alphas) {
          if (compose(g, alpha) != alpha_f) continue;
          Covering c{GXMod{a_tilde, b_tilde, alpha, action}, base, f, g};
          if (satisfies_gxmod_conditions(c.total)) found.push_back(std::move(c));
        }
      }
    }
    return found;
  });
  std::vector<Covering> out;
  for (auto& v : per_task) std::move(v.begin(), v.end(), std::back_inserter(out));
  return out;
}

// ----------------------------------------------------------------------------
// Morphism sets and brute-force searches
// ----------------------------------------------------------------------------

inline std::vector<LiftingMorphism> lifting_morphisms(const Lifting& src, const Lifting& tgt,
                                                      const std::vector<Hom>& candidates) {
  std::vector<LiftingMorphism> out;
  for (const Hom& f : candidates) {
    LiftingMorphism m{f};
    if (is_lifting_morphism(src, tgt, m)) out.push_back(std::move(m));
  }
  return out;
}

inline std::vector<LiftingMorphism> lifting_morphisms(const Lifting& src, const Lifting& tgt) {
  return lifting_morphisms(src, tgt, homomorphisms(src.X.group, tgt.X.group));
}

/// The f component is forced to be f'^-1 f~, so only g is searched.
inline std::vector<CoveringMorphism> covering_morphisms(const Covering& src, const Covering& tgt,
                                                        const std::vector<Hom>& g_candidates) {
  std::vector<CoveringMorphism> out;
  const Hom f = compose(inverse(tgt.f), src.f);
  for (const Hom& g : g_candidates) {
    CoveringMorphism m{f, g};
    if (is_covering_morphism(src, tgt, m)) out.push_back(std::move(m));
  }
  return out;
}

inline std::vector<CoveringMorphism> covering_morphisms(const Covering& src, const Covering& tgt) {
  return covering_morphisms(src, tgt, homomorphisms(src.total.B.group, tgt.total.B.group));
}

inline std::vector<GXModMorphism> gxmod_morphisms(const GXMod& src, const GXMod& tgt) {
  std::vector<GXModMorphism> out;
  const std::vector<Hom> gs = homomorphisms(src.B.group, tgt.B.group);
  for (const Hom& f : homomorphisms(src.A.group, tgt.A.group)) {
    for (const Hom& g : gs) {
      GXModMorphism m{f, g};
      if (is_gxmod_morphism(src, tgt, m)) out.push_back(std::move(m));
    }
  }
  return out;
}

inline std::optional<GXModMorphism> find_gxmod_isomorphism(const GXMod& x, const GXMod& y) {
  const std::vector<Hom> gs = isomorphisms(x.B.group, y.B.group);
  for (const Hom& f : isomorphisms(x.A.group, y.A.group)) {
    for (const Hom& g : gs) {
      GXModMorphism m{f, g};
      if (is_gxmod_morphism(x, y, m)) return m;
    }
  }
  return std::nullopt;
}

/// Isomorphism of coverings found by exhaustive search over (f, g) pairs of
/// group isomorphisms.
inline std::optional<CoveringMorphism> find_covering_isomorphism(const Covering& x,
                                                                 const Covering& y) {
  if (!(x.base == y.base)) return std::nullopt;
  const std::vector<Hom> gs = isomorphisms(x.total.B.group, y.total.B.group);
  for (const Hom& f : isomorphisms(x.total.A.group, y.total.A.group)) {
    for (const Hom& g : gs) {
      CoveringMorphism m{f, g};
      if (is_covering_morphism(x, y, m)) return m;
    }
  }
  return std::nullopt;
}

inline std::optional<LiftingMorphism> find_lifting_isomorphism(const Lifting& x, const Lifting& y) {
  if (!(x.base == y.base)) return std::nullopt;
  for (const Hom& f : isomorphisms(x.X.group, y.X.group)) {
    LiftingMorphism m{f};
    if (is_lifting_morphism(x, y, m)) return m;
  }
  return std::nullopt;
}

/// Exhaustive search for <f', g'> : src -> c.total with <f~, g~><f', g'> = m.
inline std::optional<GXModMorphism> search_factorization(const GXMod& src, const GXModMorphism& m,
                                                         const Covering& c) {
  const std::vector<Hom> gs = homomorphisms(src.B.group, c.total.B.group);
  for (const Hom& f : homomorphisms(src.A.group, c.total.A.group)) {
    if (compose(c.f, f) != m.f) continue;
    for (const Hom& g : gs) {
      GXModMorphism cand{f, g};
      if (compose(c.g, g) == m.g && is_gxmod_morphism(src, c.total, cand)) return cand;
    }
  }
  return std::nullopt;
}

/// Exhaustive search for g~ with <f, g~> : src -> (A, X, phi) a morphism and
/// omega g~ = g.
inline std::optional<GXModMorphism> search_extension(const GXMod& src, const GXModMorphism& m,
                                                     const Lifting& l) {
  const GXMod lifted = lifted_gxmod(l);
  for (const Hom& g : homomorphisms(src.B.group, l.X.group)) {
    GXModMorphism cand{m.f, g};
    if (compose(l.omega, g) == m.g && is_gxmod_morphism(src, lifted, cand)) return cand;
  }
  return std::nullopt;
}

// ----------------------------------------------------------------------------
// Generalized cat¹-groups
// ----------------------------------------------------------------------------

/// Every (s, t) on G. Pairs are filtered on st = t, ts = s before the kernel
/// condition; s and t are then idempotent, so only idempotent Gwa
/// endomorphisms are paired.
inline std::vector<GCat1> enumerate_gcat1(const GwaObject& g) {
  std::vector<Hom> idem;
  for (Hom& e : gwa_morphisms(g, g)) {
    if (compose(e, e) == e) idem.push_back(std::move(e));
  }
  std::vector<GCat1> out;
  for (const Hom& s : idem) {
    for (const Hom& t : idem) {
      if (compose(s, t) != t || compose(t, s) != s) continue;
      GCat1 c{g, s, t};
      if (kernel_condition_holds(c)) out.push_back(std::move(c));
    }
  }
  return out;
}

inline std::vector<GCat1Morphism> gcat1_morphisms(const GCat1& src, const GCat1& tgt,
                                                  const std::vector<Hom>& candidates) {
  std::vector<GCat1Morphism> out;
  for (const Hom& f : candidates) {
    if (compose(f, src.s) == compose(tgt.s, f) && compose(f, src.t) == compose(tgt.t, f) &&
        preserves_action(f, src.G, tgt.G)) {
      out.push_back({f});
    }
  }
  return out;
}

}  // namespace gxmod
