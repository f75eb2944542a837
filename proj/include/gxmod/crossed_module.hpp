#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gxmod/gwa.hpp"

namespace gxmod {

/// Action of a group B on a group A, act(b, a) = b·a.
class ExtAction {
 public:
  ExtAction() = default;

  ExtAction(std::size_t actor_order, std::size_t space_order, std::vector<Elem> table)
      : actor_order_(actor_order), space_order_(space_order), table_(std::move(table)) {
    if (table_.size() != actor_order_ * space_order_) {
      throw StructuralError("action table must have |B|*|A| entries");
    }
    for (Elem v : table_) {
      if (v >= space_order_) throw StructuralError("action entry out of range");
    }
  }

  static ExtAction trivial(std::size_t actor_order, std::size_t space_order) {
    std::vector<Elem> t(actor_order * space_order);
    for (std::size_t b = 0; b < actor_order; ++b) {
      for (Elem a = 0; a < space_order; ++a) t[b * space_order + a] = a;
    }
    return ExtAction(actor_order, space_order, std::move(t));
  }

  /// Row b is the map a -> b·a.
  static ExtAction from_rows(const std::vector<Hom>& rows, std::size_t space_order) {
    std::vector<Elem> t;
    t.reserve(rows.size() * space_order);
    for (const auto& r : rows) t.insert(t.end(), r.map.begin(), r.map.end());
    return ExtAction(rows.size(), space_order, std::move(t));
  }

  Elem operator()(Elem b, Elem a) const { return table_[b * space_order_ + a]; }
  std::size_t actor_order() const noexcept { return actor_order_; }
  std::size_t space_order() const noexcept { return space_order_; }
  std::span<const Elem> table() const noexcept { return table_; }

  Hom row(Elem b) const {
    return Hom{std::vector<Elem>(table_.begin() + b * space_order_,
                                 table_.begin() + (b + 1) * space_order_)};
  }

  friend bool operator==(const ExtAction&, const ExtAction&) = default;

 private:
  std::size_t actor_order_ = 1;
  std::size_t space_order_ = 1;
  std::vector<Elem> table_{0};
};

inline std::string dot(Elem b, Elem a) { return std::to_string(b) + "·" + std::to_string(a); }

/// Group action by automorphisms.
inline ValidationReport validate_ext_action(const ExtAction& act, const GroupTable& actor,
                                            const GroupTable& space,
                                            std::size_t cap = ValidationReport::kDefaultCap) {
  if (act.actor_order() != actor.order() || act.space_order() != space.order()) {
    throw StructuralError("action table shape does not match the groups");
  }
  ValidationReport r(cap);
  for (Elem a = 0; a < space.order(); ++a) {
    if (act(actor.identity(), a) != a) r.add("identity", {a}, dot(actor.identity(), a) + " != a");
  }
  for (Elem b1 = 0; b1 < actor.order(); ++b1) {
    for (Elem b2 = 0; b2 < actor.order(); ++b2) {
      const Elem b12 = actor.op(b1, b2);
      for (Elem a = 0; a < space.order(); ++a) {
        if (act(b12, a) != act(b1, act(b2, a))) {
          r.add("compatibility", {b1, b2, a},
                "(" + std::to_string(b1) + " + " + std::to_string(b2) + ")·" +
                    std::to_string(a) + " != " + std::to_string(b1) + "·(" + dot(b2, a) + ")");
        }
      }
    }
  }
  for (Elem b = 0; b < actor.order(); ++b) {
    for (Elem a1 = 0; a1 < space.order(); ++a1) {
      for (Elem a2 = 0; a2 < space.order(); ++a2) {
        if (act(b, space.op(a1, a2)) != space.op(act(b, a1), act(b, a2))) {
          r.add("automorphism", {b, a1, a2},
                std::to_string(b) + "·(" + std::to_string(a1) + " + " + std::to_string(a2) +
                    ") != " + dot(b, a1) + " + " + dot(b, a2));
        }
      }
    }
  }
  return r;
}

/// A generalized crossed module (A, B, alpha) with B acting on A.
struct GXMod {
  GwaObject A;
  GwaObject B;
  Hom alpha;
  ExtAction action;

  Elem act(Elem b, Elem a) const { return action(b, a); }

  friend bool operator==(const GXMod&, const GXMod&) = default;
};

inline void check_gxmod_shape(const GXMod& x) {
  check_hom_shape(x.A.group, x.B.group, x.alpha);
  if (x.action.actor_order() != x.B.order() || x.action.space_order() != x.A.order()) {
    throw StructuralError("action table shape does not match (A, B)");
  }
}

/// alpha(b·a) = ^b alpha(a) and alpha(a)·a1 = ^a a1, without building a report.
inline bool satisfies_gxmod_conditions(const GXMod& x) {
  for (Elem b = 0; b < x.B.order(); ++b) {
    for (Elem a = 0; a < x.A.order(); ++a) {
      if (x.alpha(x.act(b, a)) != x.B.act(b, x.alpha(a))) return false;
    }
  }
  for (Elem a = 0; a < x.A.order(); ++a) {
    const Elem b = x.alpha(a);
    for (Elem a1 = 0; a1 < x.A.order(); ++a1) {
      if (x.act(b, a1) != x.A.act(a, a1)) return false;
    }
  }
  return true;
}

/// Component validity (A, B in Gwa, alpha a homomorphism, B acting on A by
/// automorphisms) followed by the two defining conditions:
///   equivariance  alpha(b·a) = ^b alpha(a), witness (a, b)
///   peiffer       alpha(a)·a1 = ^a a1,      witness (a, a1)
inline ValidationReport validate_gxmod(const GXMod& x,
                                       std::size_t cap = ValidationReport::kDefaultCap) {
  check_gxmod_shape(x);
  ValidationReport r(cap);
  r.merge(validate_gwa(x.A, cap), "A");
  r.merge(validate_gwa(x.B, cap), "B");
  r.merge(validate_hom(x.A.group, x.B.group, x.alpha, cap), "alpha");
  r.merge(validate_ext_action(x.action, x.B.group, x.A.group, cap), "action");
  for (Elem a = 0; a < x.A.order(); ++a) {
    for (Elem b = 0; b < x.B.order(); ++b) {
      const Elem lhs = x.alpha(x.act(b, a));
      const Elem rhs = x.B.act(b, x.alpha(a));
      if (lhs != rhs) {
        r.add("equivariance", {a, b},
              "alpha(" + dot(b, a) + ") = " + std::to_string(lhs) + " but " +
                  sup(b, "alpha(" + std::to_string(a) + ")") + " = " + std::to_string(rhs));
      }
    }
  }
  for (Elem a = 0; a < x.A.order(); ++a) {
    for (Elem a1 = 0; a1 < x.A.order(); ++a1) {
      const Elem lhs = x.act(x.alpha(a), a1);
      const Elem rhs = x.A.act(a, a1);
      if (lhs != rhs) {
        r.add("peiffer", {a, a1},
              "alpha(" + std::to_string(a) + ")·" + std::to_string(a1) + " = " +
                  std::to_string(lhs) + " but " + sup(a, std::to_string(a1)) + " = " +
                  std::to_string(rhs));
      }
    }
  }
  return r;
}

/// Morphism <f, g> : (A, B, alpha) -> (A', B', alpha').
struct GXModMorphism {
  Hom f;
  Hom g;

  friend bool operator==(const GXModMorphism&, const GXModMorphism&) = default;
  friend auto operator<=>(const GXModMorphism&, const GXModMorphism&) = default;
};

/// outer ∘ inner, componentwise.
inline GXModMorphism compose(const GXModMorphism& outer, const GXModMorphism& inner) {
  return {compose(outer.f, inner.f), compose(outer.g, inner.g)};
}

inline GXModMorphism identity_morphism(const GXMod& x) {
  return {Hom::identity(x.A.order()), Hom::identity(x.B.order())};
}

/// g alpha = alpha' f and f(b·a) = g(b)·f(a), with f and g Gwa morphisms.
inline ValidationReport validate_gxmod_morphism(const GXMod& src, const GXMod& tgt,
                                                const GXModMorphism& m,
                                                std::size_t cap = ValidationReport::kDefaultCap) {
  ValidationReport r(cap);
  r.merge(validate_gwa_morphism(m.f, src.A, tgt.A, cap), "f");
  r.merge(validate_gwa_morphism(m.g, src.B, tgt.B, cap), "g");
  for (Elem a = 0; a < src.A.order(); ++a) {
    if (m.g(src.alpha(a)) != tgt.alpha(m.f(a))) {
      r.add("square", {a}, "g(alpha(a)) != alpha'(f(a)) at a = " + std::to_string(a));
    }
  }
  for (Elem a = 0; a < src.A.order(); ++a) {
    for (Elem b = 0; b < src.B.order(); ++b) {
      if (m.f(src.act(b, a)) != tgt.act(m.g(b), m.f(a))) {
        r.add("equivariance", {a, b},
              "f(" + dot(b, a) + ") != g(" + std::to_string(b) + ")·f(" + std::to_string(a) + ")");
      }
    }
  }
  return r;
}

/// Fast form of validate_gxmod_morphism for search loops.
inline bool is_gxmod_morphism(const GXMod& src, const GXMod& tgt, const GXModMorphism& m) {
  if (m.f.map.size() != src.A.order() || m.g.map.size() != src.B.order()) return false;
  for (Elem a = 0; a < src.A.order(); ++a) {
    if (m.f(a) >= tgt.A.order() || m.g(src.alpha(a)) != tgt.alpha(m.f(a))) return false;
  }
  for (Elem b = 0; b < src.B.order(); ++b) {
    if (m.g(b) >= tgt.B.order()) return false;
    for (Elem a = 0; a < src.A.order(); ++a) {
      if (m.f(src.act(b, a)) != tgt.act(m.g(b), m.f(a))) return false;
    }
  }
  return is_gwa_morphism(m.f, src.A, tgt.A) && is_gwa_morphism(m.g, src.B, tgt.B);
}

inline bool is_isomorphism(const GXMod& src, const GXMod& tgt, const GXModMorphism& m) {
  return src.A.order() == tgt.A.order() && src.B.order() == tgt.B.order() &&
         is_bijective(m.f, tgt.A.order()) && is_bijective(m.g, tgt.B.order()) &&
         is_gxmod_morphism(src, tgt, m);
}

/// alpha(^a a1) = ^alpha(a) alpha(a1): alpha is itself a Gwa morphism.
inline bool check_alpha_gwa_morphism(const GXMod& x) { return preserves_action(x.alpha, x.A, x.B); }

inline bool is_aspherical(const GXMod& x) { return kernel(x.alpha, x.B.group).size() == 1; }

inline bool is_simply_connected(const GXMod& x) { return is_surjective(x.alpha, x.B.order()); }

/// (H, G, inclusion) for a subgroup H closed under the self-action of G; G
/// acts on H through its self-action.
inline GXMod from_invariant_subgroup(const GwaObject& g, const Subgroup& h, std::string name = {}) {
  if (!validate_subgroup(g.group, h).ok()) throw StructuralError("not a subgroup");
  if (name.empty()) name = g.name() + "_sub";
  EmbeddedGwa e = restrict_to_subobject(g, h, std::move(name));
  const std::size_t k = h.size();
  std::vector<Elem> act(g.order() * k);
  for (Elem b = 0; b < g.order(); ++b) {
    for (Elem i = 0; i < k; ++i) act[b * k + i] = h.index_of(g.act(b, h.members[i]));
  }
  return GXMod{std::move(e.object), g, std::move(e.inclusion),
               ExtAction(g.order(), k, std::move(act))};
}

/// (ker alpha, A, inclusion).
inline GXMod kernel_gxmod(const GXMod& x) {
  return from_invariant_subgroup(x.A, kernel(x.alpha, x.B.group), "ker");
}

/// (alpha(A), B, inclusion).
inline GXMod image_gxmod(const GXMod& x) {
  return from_invariant_subgroup(x.B, image(x.alpha), "im");
}

/// ^k a = a for every k in ker alpha.
inline bool check_kernel_acts_trivially(const GXMod& x) {
  for (Elem k : kernel(x.alpha, x.B.group).members) {
    for (Elem a = 0; a < x.A.order(); ++a) {
      if (x.A.act(k, a) != a) return false;
    }
  }
  return true;
}

/// A transported crossed module with the isomorphisms relating it to the
/// input: `forward` runs input -> object, `backward` object -> input.
struct Transported {
  GXMod object;
  GXModMorphism forward;
  GXModMorphism backward;
};

/// (A, B', f alpha) with b'·a = f^-1(b')·a, for a Gwa isomorphism f: B -> B'.
inline Transported transport_codomain(const GXMod& x, const GwaObject& new_b, const Hom& f) {
  require_gwa_isomorphism(f, x.B, new_b, "f");
  const Hom f_inv = inverse(f);
  const std::size_t na = x.A.order();
  std::vector<Elem> act(new_b.order() * na);
  for (Elem b = 0; b < new_b.order(); ++b) {
    for (Elem a = 0; a < na; ++a) act[b * na + a] = x.act(f_inv(b), a);
  }
  GXMod y{x.A, new_b, compose(f, x.alpha), ExtAction(new_b.order(), na, std::move(act))};
  return {std::move(y), {Hom::identity(na), f}, {Hom::identity(na), f_inv}};
}

/// (A', B, alpha g) with b·a' = g^-1(b·g(a')), for a Gwa isomorphism g: A' -> A.
inline Transported transport_domain(const GXMod& x, const GwaObject& new_a, const Hom& g) {
  require_gwa_isomorphism(g, new_a, x.A, "g");
  const Hom g_inv = inverse(g);
  const std::size_t na = new_a.order();
  std::vector<Elem> act(x.B.order() * na);
  for (Elem b = 0; b < x.B.order(); ++b) {
    for (Elem a = 0; a < na; ++a) act[b * na + a] = g_inv(x.act(b, g(a)));
  }
  GXMod y{new_a, x.B, compose(x.alpha, g), ExtAction(x.B.order(), na, std::move(act))};
  const std::size_t nb = x.B.order();
  return {std::move(y), {g_inv, Hom::identity(nb)}, {g, Hom::identity(nb)}};
}

/// The four mutually isomorphic crossed modules obtained from x by moving B
/// along f, A along g, or both.
struct TransportSquare {
  Transported codomain;  // (A, B', f alpha)
  Transported domain;    // (A', B, alpha g)
  Transported both;      // (A', B', f alpha g)
};

/// Both transports at once: gamma = f alpha g and b'·a' = g^-1(f^-1(b')·g(a')).
inline TransportSquare transport_both(const GXMod& x, const GwaObject& new_b, const Hom& f,
                                      const GwaObject& new_a, const Hom& g) {
  require_gwa_isomorphism(f, x.B, new_b, "f");
  require_gwa_isomorphism(g, new_a, x.A, "g");
  const Hom f_inv = inverse(f);
  const Hom g_inv = inverse(g);
  const std::size_t na = new_a.order();
  std::vector<Elem> act(new_b.order() * na);
  for (Elem b = 0; b < new_b.order(); ++b) {
    for (Elem a = 0; a < na; ++a) act[b * na + a] = g_inv(x.act(f_inv(b), g(a)));
  }
  GXMod y{new_a, new_b, compose(f, compose(x.alpha, g)),
          ExtAction(new_b.order(), na, std::move(act))};
  Transported both{std::move(y), {g_inv, f}, {g, f_inv}};
  return {transport_codomain(x, new_b, f), transport_domain(x, new_a, g), std::move(both)};
}

}  // namespace gxmod
