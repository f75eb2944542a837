#pragma once

#include <string>

#include "gxmod/crossed_module.hpp"

namespace gxmod {

/// A generalized cat¹-group (G, s, t).
struct GCat1 {
  GwaObject G;
  Hom s;
  Hom t;

  friend bool operator==(const GCat1&, const GCat1&) = default;
};

struct GCat1Morphism {
  Hom f;

  friend bool operator==(const GCat1Morphism&, const GCat1Morphism&) = default;
};

/// s and t are Gwa endomorphisms with st = t and ts = s, and ^y x = x for
/// x in ker s, y in ker t.
inline ValidationReport validate_gcat1(const GCat1& c,
                                       std::size_t cap = ValidationReport::kDefaultCap) {
  ValidationReport r(cap);
  const GwaObject& g = c.G;
  r.merge(validate_gwa(g, cap), "G");
  r.merge(validate_gwa_morphism(c.s, g, g, cap), "s");
  r.merge(validate_gwa_morphism(c.t, g, g, cap), "t");
  for (Elem x = 0; x < g.order(); ++x) {
    if (c.s(c.t(x)) != c.t(x)) r.add("st", {x}, "s(t(g)) != t(g) at g = " + std::to_string(x));
    if (c.t(c.s(x)) != c.s(x)) r.add("ts", {x}, "t(s(g)) != s(g) at g = " + std::to_string(x));
  }
  const Subgroup ks = kernel(c.s, g.group);
  const Subgroup kt = kernel(c.t, g.group);
  for (Elem x : ks.members) {
    for (Elem y : kt.members) {
      if (g.act(y, x) != x) {
        r.add("kernels", {x, y},
              sup(y, std::to_string(x)) + " = " + std::to_string(g.act(y, x)) +
                  " with x in ker s, y in ker t");
      }
    }
  }
  return r;
}

inline ValidationReport validate_gcat1_morphism(const GCat1& src, const GCat1& tgt,
                                                const GCat1Morphism& m) {
  ValidationReport r = validate_gwa_morphism(m.f, src.G, tgt.G);
  for (Elem x = 0; x < src.G.order(); ++x) {
    if (m.f(src.s(x)) != tgt.s(m.f(x))) r.add("fs", {x}, "f(s(g)) != s'(f(g))");
    if (m.f(src.t(x)) != tgt.t(m.f(x))) r.add("ft", {x}, "f(t(g)) != t'(f(g))");
  }
  return r;
}

/// Elementwise commutation of ker s with ker t.
inline bool kernels_commute(const GCat1& c) {
  const GroupTable& grp = c.G.group;
  const Subgroup ks = kernel(c.s, grp);
  const Subgroup kt = kernel(c.t, grp);
  for (Elem x : ks.members) {
    for (Elem y : kt.members) {
      if (grp.op(x, y) != grp.op(y, x)) return false;
    }
  }
  return true;
}

inline bool kernel_condition_holds(const GCat1& c) {
  const Subgroup ks = kernel(c.s, c.G.group);
  const Subgroup kt = kernel(c.t, c.G.group);
  for (Elem x : ks.members) {
    for (Elem y : kt.members) {
      if (c.G.act(y, x) != x) return false;
    }
  }
  return true;
}

/// True when the self-action is conjugation, i.e. c is an ordinary cat¹-group.
/// In that case the kernel condition must coincide with [ker s, ker t] = 0.
inline bool check_ordinary_cat1(const GCat1& c) {
  if (!is_conjugation(c.G)) return false;
  if (kernel_condition_holds(c) != kernels_commute(c)) {
    throw std::logic_error("kernel condition disagrees with commutation under conjugation");
  }
  return true;
}

namespace detail {

inline Hom restrict_between(const Hom& f, const Subgroup& from, const Subgroup& to,
                            const char* what) {
  Hom r;
  r.map.reserve(from.size());
  for (Elem x : from.members) {
    const Elem y = f(x);
    if (!to.contains(y)) {
      throw PreconditionError(what, std::string(what) + ": image of " + std::to_string(x) +
                                        " leaves the target subgroup");
    }
    r.map.push_back(to.index_of(y));
  }
  return r;
}

}  // namespace detail

/// (ker s, im s, t restricted to ker s), with im s acting on ker s through the
/// self-action of G.
inline GXMod cat1_to_gxmod(const GCat1& c) {
  const GwaObject& g = c.G;
  const Subgroup ks = kernel(c.s, g.group);
  const Subgroup is = image(c.s);
  EmbeddedGwa k = restrict_to_subobject(g, ks, "ker_s");
  // im s is closed under its own elements only: ^s(x) s(y) = s(^x y).
  EmbeddedGwa i = restrict_to_subgroup(g, is, "im_s");
  Hom tbar = detail::restrict_between(c.t, ks, is, "t(ker s) in im s");
  std::vector<Elem> act(is.size() * ks.size());
  for (Elem x = 0; x < is.size(); ++x) {
    for (Elem y = 0; y < ks.size(); ++y) {
      const Elem v = g.act(is.members[x], ks.members[y]);
      if (!ks.contains(v)) throw PreconditionError("ker s invariant", "^x g leaves ker s");
      act[x * ks.size() + y] = ks.index_of(v);
    }
  }
  return GXMod{std::move(k.object), std::move(i.object), std::move(tbar),
               ExtAction(is.size(), ks.size(), std::move(act))};
}

/// <f|ker s, f|im s> between the crossed modules of source and target.
inline GXModMorphism cat1_functor_on_morphism(const GCat1& src, const GCat1& tgt,
                                              const GCat1Morphism& m) {
  const Subgroup ks = kernel(src.s, src.G.group), ks2 = kernel(tgt.s, tgt.G.group);
  const Subgroup is = image(src.s), is2 = image(tgt.s);
  return {detail::restrict_between(m.f, ks, ks2, "f(ker s) in ker s'"),
          detail::restrict_between(m.f, is, is2, "f(im s) in im s'")};
}

}  // namespace gxmod
