#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gxmod/group.hpp"

namespace gxmod {

/// Action of a group on itself, act(g, h) = ^g h.
class SelfAction {
 public:
  SelfAction() = default;

  SelfAction(std::size_t order, std::vector<Elem> table) : order_(order), table_(std::move(table)) {
    if (table_.size() != order_ * order_) {
      throw StructuralError("self-action table must have order*order entries");
    }
    for (Elem v : table_) {
      if (v >= order_) throw StructuralError("self-action entry out of range");
    }
  }

  static SelfAction trivial(std::size_t order) {
    std::vector<Elem> t(order * order);
    for (Elem g = 0; g < order; ++g) {
      for (Elem h = 0; h < order; ++h) t[g * order + h] = h;
    }
    return SelfAction(order, std::move(t));
  }

  /// ^g h = g + h - g.
  static SelfAction conjugation(const GroupTable& grp) {
    const std::size_t n = grp.order();
    std::vector<Elem> t(n * n);
    for (Elem g = 0; g < n; ++g) {
      for (Elem h = 0; h < n; ++h) t[g * n + h] = grp.op(grp.op(g, h), grp.inv(g));
    }
    return SelfAction(n, std::move(t));
  }

  /// Row g is the map h -> ^g h.
  static SelfAction from_rows(const std::vector<Hom>& rows) {
    const std::size_t n = rows.size();
    std::vector<Elem> t;
    t.reserve(n * n);
    for (const auto& r : rows) t.insert(t.end(), r.map.begin(), r.map.end());
    return SelfAction(n, std::move(t));
  }

  Elem operator()(Elem g, Elem h) const { return table_[g * order_ + h]; }
  std::size_t order() const noexcept { return order_; }
  std::span<const Elem> table() const noexcept { return table_; }

  Hom row(Elem g) const {
    return Hom{std::vector<Elem>(table_.begin() + g * order_, table_.begin() + (g + 1) * order_)};
  }

  friend bool operator==(const SelfAction&, const SelfAction&) = default;

 private:
  std::size_t order_ = 1;
  std::vector<Elem> table_{0};
};

/// A group with an action on itself (an object of Gwa).
struct GwaObject {
  GroupTable group;
  SelfAction action;

  GwaObject() = default;
  explicit GwaObject(GroupTable g) : group(std::move(g)), action(SelfAction::trivial(group.order())) {}
  GwaObject(GroupTable g, SelfAction a) : group(std::move(g)), action(std::move(a)) {
    if (action.order() != group.order()) {
      throw StructuralError("self-action size does not match the group order");
    }
  }

  std::size_t order() const noexcept { return group.order(); }
  const std::string& name() const noexcept { return group.name(); }
  Elem act(Elem g, Elem h) const { return action(g, h); }

  friend bool operator==(const GwaObject& a, const GwaObject& b) {
    return a.group == b.group && a.action == b.action;
  }
};

inline std::string sup(Elem g, const std::string& h) { return "^" + std::to_string(g) + " " + h; }

/// Group laws, identity law, compatibility ^(g1 + g2) h = ^g1 (^g2 h), and
/// action by automorphisms ^g (h1 + h2) = ^g h1 + ^g h2.
inline ValidationReport validate_gwa(const GwaObject& x,
                                     std::size_t cap = ValidationReport::kDefaultCap) {
  ValidationReport r(cap);
  const GroupTable& g = x.group;
  r.merge(validate_group(g, cap), "group");
  const std::size_t n = g.order();
  for (Elem h = 0; h < n; ++h) {
    if (x.act(g.identity(), h) != h) {
      r.add("identity", {h}, sup(g.identity(), std::to_string(h)) + " != " + std::to_string(h));
    }
  }
  for (Elem g1 = 0; g1 < n; ++g1) {
    for (Elem g2 = 0; g2 < n; ++g2) {
      const Elem g12 = g.op(g1, g2);
      for (Elem h = 0; h < n; ++h) {
        const Elem lhs = x.act(g12, h);
        const Elem rhs = x.act(g1, x.act(g2, h));
        if (lhs != rhs) {
          r.add("compatibility", {g1, g2, h},
                "^(" + std::to_string(g1) + " + " + std::to_string(g2) + ") " +
                    std::to_string(h) + " = " + std::to_string(lhs) + " but " +
                    sup(g1, "(" + sup(g2, std::to_string(h)) + ")") + " = " + std::to_string(rhs));
        }
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem h1 = 0; h1 < n; ++h1) {
      for (Elem h2 = 0; h2 < n; ++h2) {
        const Elem lhs = x.act(a, g.op(h1, h2));
        const Elem rhs = g.op(x.act(a, h1), x.act(a, h2));
        if (lhs != rhs) {
          r.add("automorphism", {a, h1, h2},
                sup(a, "(" + std::to_string(h1) + " + " + std::to_string(h2) + ")") + " = " +
                    std::to_string(lhs) + " but " + sup(a, std::to_string(h1)) + " + " +
                    sup(a, std::to_string(h2)) + " = " + std::to_string(rhs));
        }
      }
    }
  }
  return r;
}

/// f(^g g1) = ^f(g) f(g1) for a group homomorphism f.
inline ValidationReport validate_gwa_morphism(const Hom& f, const GwaObject& src,
                                              const GwaObject& tgt,
                                              std::size_t cap = ValidationReport::kDefaultCap) {
  ValidationReport r = validate_hom(src.group, tgt.group, f, cap);
  for (Elem g = 0; g < src.order(); ++g) {
    for (Elem g1 = 0; g1 < src.order(); ++g1) {
      if (f(src.act(g, g1)) != tgt.act(f(g), f(g1))) {
        r.add("action", {g, g1},
              "f(" + sup(g, std::to_string(g1)) + ") != " +
                  sup(f(g), std::to_string(f(g1))));
      }
    }
  }
  return r;
}

inline bool preserves_action(const Hom& f, const GwaObject& src, const GwaObject& tgt) {
  for (Elem g = 0; g < src.order(); ++g) {
    for (Elem g1 = 0; g1 < src.order(); ++g1) {
      if (f(src.act(g, g1)) != tgt.act(f(g), f(g1))) return false;
    }
  }
  return true;
}

inline bool is_gwa_morphism(const Hom& f, const GwaObject& src, const GwaObject& tgt) {
  return is_hom(src.group, tgt.group, f) && preserves_action(f, src, tgt);
}

inline bool is_gwa_isomorphism(const Hom& f, const GwaObject& src, const GwaObject& tgt) {
  return src.order() == tgt.order() && is_gwa_morphism(f, src, tgt) &&
         is_bijective(f, tgt.order());
}

/// Throws PreconditionError unless f is a Gwa isomorphism src -> tgt.
inline void require_gwa_isomorphism(const Hom& f, const GwaObject& src, const GwaObject& tgt,
                                    const char* what) {
  check_hom_shape(src.group, tgt.group, f);
  if (!is_gwa_isomorphism(f, src, tgt)) {
    throw PreconditionError("gwa-isomorphism", std::string(what) + " is not an isomorphism in Gwa");
  }
}

/// A pair (g, n) with ^g n outside `h`, if any.
inline std::optional<std::pair<Elem, Elem>> subobject_witness(const Subgroup& h,
                                                              const GwaObject& g) {
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem m : h.members) {
      if (!h.contains(g.act(x, m))) return std::pair{x, m};
    }
  }
  return std::nullopt;
}

/// Closed under the action of all of G on itself.
inline bool is_subobject(const Subgroup& h, const GwaObject& g) {
  return !subobject_witness(h, g).has_value();
}

struct IdealReport {
  bool normal = true;      // g + n - g in N
  bool invariant = true;   // ^g n in N
  bool absorbing = true;   // ^n g - g in N
  std::optional<std::pair<Elem, Elem>> normal_witness, invariant_witness, absorbing_witness;

  bool is_ideal() const noexcept { return normal && invariant && absorbing; }
  explicit operator bool() const noexcept { return is_ideal(); }

  /// Name of the first failed condition, empty for an ideal.
  std::string failed_condition() const {
    if (!normal) return "normal";
    if (!invariant) return "invariant";
    if (!absorbing) return "absorbing";
    return {};
  }
};

inline IdealReport is_ideal(const Subgroup& n, const GwaObject& g) {
  if (!validate_subgroup(g.group, n).ok()) throw StructuralError("not a subgroup");
  const GroupTable& grp = g.group;
  IdealReport r;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem m : n.members) {
      if (r.normal && !n.contains(grp.op(grp.op(x, m), grp.inv(x)))) {
        r.normal = false;
        r.normal_witness = std::pair{x, m};
      }
      if (r.invariant && !n.contains(g.act(x, m))) {
        r.invariant = false;
        r.invariant_witness = std::pair{x, m};
      }
      if (r.absorbing && !n.contains(grp.op(g.act(m, x), grp.inv(x)))) {
        r.absorbing = false;
        r.absorbing_witness = std::pair{m, x};
      }
    }
  }
  return r;
}

struct QuotientGwa {
  GwaObject object;
  Hom projection;
};

/// G/N with ^(g + N)(g1 + N) = (^g g1) + N.
inline QuotientGwa quotient_gwa(const GwaObject& g, const Subgroup& n) {
  const IdealReport ideal = is_ideal(n, g);
  if (!ideal) {
    throw PreconditionError(ideal.failed_condition(),
                            "subgroup is not an ideal: condition '" + ideal.failed_condition() +
                                "' fails");
  }
  QuotientGroup q = quotient_group(g.group, n, g.name() + "/N");
  const std::size_t k = q.group.order();
  std::vector<Elem> act(k * k);
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) {
      act[i * k + j] = q.projection(g.act(q.representatives[i], q.representatives[j]));
    }
  }
  return {GwaObject(std::move(q.group), SelfAction(k, std::move(act))), std::move(q.projection)};
}

struct EmbeddedGwa {
  GwaObject object;
  Hom inclusion;
};

/// A subobject as a standalone Gwa object with the restricted self-action.
inline EmbeddedGwa restrict_to_subobject(const GwaObject& g, const Subgroup& h, std::string name) {
  if (auto w = subobject_witness(h, g)) {
    throw PreconditionError("subobject", "^" + std::to_string(w->first) + " " +
                                             std::to_string(w->second) +
                                             " leaves the subgroup");
  }
  SubgroupEmbedding e = embed_subgroup(g.group, h, std::move(name));
  const std::size_t k = h.size();
  std::vector<Elem> act(k * k);
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) act[i * k + j] = h.index_of(g.act(h.members[i], h.members[j]));
  }
  return {GwaObject(std::move(e.group), SelfAction(k, std::move(act))), std::move(e.inclusion)};
}

/// H acting on itself through the self-action of G, for a subgroup H with
/// ^h h' in H whenever h, h' are in H. Weaker than being a subobject.
inline EmbeddedGwa restrict_to_subgroup(const GwaObject& g, const Subgroup& h, std::string name) {
  for (Elem x : h.members) {
    for (Elem m : h.members) {
      if (!h.contains(g.act(x, m))) {
        throw PreconditionError("self-closed", "^" + std::to_string(x) + " " + std::to_string(m) +
                                                   " leaves the subgroup");
      }
    }
  }
  SubgroupEmbedding e = embed_subgroup(g.group, h, std::move(name));
  const std::size_t k = h.size();
  std::vector<Elem> act(k * k);
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) act[i * k + j] = h.index_of(g.act(h.members[i], h.members[j]));
  }
  return {GwaObject(std::move(e.group), SelfAction(k, std::move(act))), std::move(e.inclusion)};
}

inline bool is_conjugation(const GwaObject& g) {
  return g.action == SelfAction::conjugation(g.group);
}

/// Relabels elements of a Gwa object; new index of old x is perm[x].
inline GwaObject relabel(const GwaObject& g, const Hom& perm) {
  const std::size_t n = g.order();
  const Hom back = inverse(perm);
  std::vector<Elem> act(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) act[a * n + b] = perm(g.act(back(a), back(b)));
  }
  return GwaObject(relabel(g.group, perm), SelfAction(n, std::move(act)));
}

/// Self-action pulled back along a bijection f: S -> G, ^x y = f^-1(^f(x) f(y)),
/// which makes f a Gwa isomorphism onto `g`.
inline SelfAction pullback_action(const GwaObject& g, const Hom& f) {
  const std::size_t n = g.order();
  const Hom back = inverse(f);
  std::vector<Elem> act(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) act[x * n + y] = back(g.act(f(x), f(y)));
  }
  return SelfAction(n, std::move(act));
}

}  // namespace gxmod
