#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "gxmod/crossed_module.hpp"

namespace gxmod {

// ----------------------------------------------------------------------------
// Coverings
// ----------------------------------------------------------------------------

/// A covering morphism <f, g> : total -> base whose first component is an
/// isomorphism.
struct Covering {
  GXMod total;
  GXMod base;
  Hom f;
  Hom g;

  friend bool operator==(const Covering&, const Covering&) = default;
};

/// Morphism between two coverings of the same base.
struct CoveringMorphism {
  Hom f;
  Hom g;

  friend bool operator==(const CoveringMorphism&, const CoveringMorphism&) = default;
  friend auto operator<=>(const CoveringMorphism&, const CoveringMorphism&) = default;
};

/// An element of a kernel whose image escapes the subgroup a criterion asks for.
struct KernelWitness {
  Elem element;
  Elem image;
};

inline ValidationReport validate_covering(const Covering& c) {
  ValidationReport r;
  r.merge(validate_gxmod(c.total), "total");
  r.merge(validate_gxmod(c.base), "base");
  r.merge(validate_gxmod_morphism(c.total, c.base, {c.f, c.g}), "morphism");
  if (!is_bijective(c.f, c.base.A.order())) {
    r.add("bijective", {}, "f is not an isomorphism");
  }
  return r;
}

inline bool is_covering(const Covering& c) {
  return c.total.A.order() == c.base.A.order() && is_bijective(c.f, c.base.A.order()) &&
         is_gxmod_morphism(c.total, c.base, {c.f, c.g});
}

inline Covering identity_covering(const GXMod& x) {
  return {x, x, Hom::identity(x.A.order()), Hom::identity(x.B.order())};
}

inline ValidationReport validate_covering_morphism(const Covering& src, const Covering& tgt,
                                                   const CoveringMorphism& m) {
  if (!(src.base == tgt.base)) throw StructuralError("coverings have different bases");
  ValidationReport r;
  r.merge(validate_gxmod_morphism(src.total, tgt.total, {m.f, m.g}), "morphism");
  for (Elem a = 0; a < src.total.A.order(); ++a) {
    if (tgt.f(m.f(a)) != src.f(a)) r.add("commutes.f", {a}, "f' f != f~");
  }
  for (Elem b = 0; b < src.total.B.order(); ++b) {
    if (tgt.g(m.g(b)) != src.g(b)) r.add("commutes.g", {b}, "g' g != g~");
  }
  return r;
}

inline bool is_covering_morphism(const Covering& src, const Covering& tgt,
                                 const CoveringMorphism& m) {
  return compose(tgt.f, m.f) == src.f && compose(tgt.g, m.g) == src.g &&
         is_gxmod_morphism(src.total, tgt.total, {m.f, m.g});
}

inline CoveringMorphism identity_covering_morphism(const Covering& c) {
  return {Hom::identity(c.total.A.order()), Hom::identity(c.total.B.order())};
}

inline CoveringMorphism compose(const CoveringMorphism& outer, const CoveringMorphism& inner) {
  return {compose(outer.f, inner.f), compose(outer.g, inner.g)};
}

/// f(ker alpha~) inside ker alpha; nullopt when it holds.
inline std::optional<KernelWitness> covering_kernel_check(const Covering& c) {
  const Subgroup kb = kernel(c.base.alpha, c.base.B.group);
  for (Elem x : kernel(c.total.alpha, c.total.B.group).members) {
    if (!kb.contains(c.f(x))) return KernelWitness{x, c.f(x)};
  }
  return std::nullopt;
}

/// outer ∘ inner where inner covers outer's total.
inline Covering compose_coverings(const Covering& outer, const Covering& inner) {
  if (!(inner.base == outer.total)) {
    throw StructuralError("inner covering does not cover the outer covering's total");
  }
  return {inner.total, outer.base, compose(outer.f, inner.f), compose(outer.g, inner.g)};
}

/// <f, k g h^-1> : (A~, C~, h alpha~) -> (A, C, k alpha) for Gwa isomorphisms
/// h: B~ -> C~ and k: B -> C.
inline Covering covering_transport(const Covering& c, const GwaObject& total_b, const Hom& h,
                                   const GwaObject& base_b, const Hom& k) {
  Transported t = transport_codomain(c.total, total_b, h);
  Transported b = transport_codomain(c.base, base_b, k);
  return {std::move(t.object), std::move(b.object), c.f, compose(k, compose(c.g, inverse(h)))};
}

/// A morphism of coverings read as a covering of the target's total.
inline Covering morphism_between_coverings(const Covering& src, const Covering& tgt,
                                           const CoveringMorphism& m) {
  if (!is_bijective(m.f, tgt.total.A.order())) {
    throw PreconditionError("covering-morphism", "f component is not bijective");
  }
  return {src.total, tgt.total, m.f, m.g};
}

/// Factors <f, g> : (C, D, gamma) -> base through the covering c when
/// f(ker gamma) lies in f~(ker alpha~). Otherwise returns an element of ker
/// gamma whose image escapes.
inline std::variant<GXModMorphism, KernelWitness> factor_through_covering(
    const GXMod& src, const GXModMorphism& m, const Covering& c) {
  if (!is_simply_connected(src)) {
    throw PreconditionError("simply-connected", "source crossed module is not simply connected");
  }
  const Subgroup allowed = image_of(c.f, kernel(c.total.alpha, c.total.B.group));
  for (Elem x : kernel(src.alpha, src.B.group).members) {
    if (!allowed.contains(m.f(x))) return KernelWitness{x, m.f(x)};
  }
  const Hom f_prime = compose(inverse(c.f), m.f);
  constexpr Elem kUnset = ~Elem{0};
  Hom g_prime{std::vector<Elem>(src.B.order(), kUnset)};
  for (Elem x = 0; x < src.A.order(); ++x) {
    const Elem d = src.alpha(x);
    const Elem v = c.total.alpha(f_prime(x));
    if (g_prime.map[d] == kUnset) {
      g_prime.map[d] = v;
    } else if (g_prime.map[d] != v) {
      throw std::logic_error("g' depends on the choice of preimage");
    }
  }
  return GXModMorphism{f_prime, g_prime};
}

// ----------------------------------------------------------------------------
// Liftings
// ----------------------------------------------------------------------------

/// A factorization alpha = omega phi through a Gwa object X such that
/// (A, X, phi) is a crossed module under x·a = omega(x)·a.
struct Lifting {
  GXMod base;
  GwaObject X;
  Hom phi;
  Hom omega;

  friend bool operator==(const Lifting&, const Lifting&) = default;
};

/// (A, X, phi) with X acting on A through omega.
inline GXMod lifted_gxmod(const GXMod& base, const GwaObject& X, const Hom& phi, const Hom& omega) {
  check_hom_shape(base.A.group, X.group, phi);
  check_hom_shape(X.group, base.B.group, omega);
  const std::size_t na = base.A.order();
  std::vector<Elem> act(X.order() * na);
  for (Elem x = 0; x < X.order(); ++x) {
    for (Elem a = 0; a < na; ++a) act[x * na + a] = base.act(omega(x), a);
  }
  return GXMod{base.A, X, phi, ExtAction(X.order(), na, std::move(act))};
}

inline GXMod lifted_gxmod(const Lifting& l) { return lifted_gxmod(l.base, l.X, l.phi, l.omega); }

/// omega phi = alpha, omega a Gwa morphism, and (A, X, phi) a crossed module.
inline ValidationReport validate_lifting(const Lifting& l) {
  ValidationReport r;
  r.merge(validate_gwa_morphism(l.omega, l.X, l.base.B), "omega");
  r.merge(validate_gxmod(lifted_gxmod(l)), "lifted");
  for (Elem a = 0; a < l.base.A.order(); ++a) {
    if (l.omega(l.phi(a)) != l.base.alpha(a)) {
      r.add("factorization", {a}, "omega(phi(a)) != alpha(a) at a = " + std::to_string(a));
    }
  }
  return r;
}

inline bool is_lifting(const Lifting& l) {
  return compose(l.omega, l.phi) == l.base.alpha && is_gwa_morphism(l.omega, l.X, l.base.B) &&
         is_hom(l.base.A.group, l.X.group, l.phi) && satisfies_gxmod_conditions(lifted_gxmod(l));
}

struct CriterionResult {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// Given omega phi = alpha, (A, X, phi) is a crossed module exactly when
/// phi(x·a) = ^x phi(a). The witness is (x, a).
inline CriterionResult lifting_criterion(const GXMod& base, const GwaObject& X, const Hom& phi,
                                         const Hom& omega) {
  check_hom_shape(base.A.group, X.group, phi);
  check_hom_shape(X.group, base.B.group, omega);
  if (compose(omega, phi) != base.alpha) {
    throw PreconditionError("factorization", "omega phi != alpha");
  }
  for (Elem x = 0; x < X.order(); ++x) {
    for (Elem a = 0; a < base.A.order(); ++a) {
      if (phi(base.act(omega(x), a)) != X.act(x, phi(a))) return {false, std::pair{x, a}};
    }
  }
  return {};
}

/// <1_A, omega> : (A, X, phi) -> (A, B, alpha).
inline GXModMorphism lifting_to_base_morphism(const Lifting& l) {
  if (!is_subset(kernel(l.phi, l.X.group), kernel(l.base.alpha, l.base.B.group))) {
    throw std::logic_error("ker phi is not contained in ker alpha");
  }
  return {Hom::identity(l.base.A.order()), l.omega};
}

/// (A, A/N, projection) over omega(a + N) = alpha(a), for an ideal N inside
/// ker alpha.
inline Lifting quotient_lifting(const GXMod& x, const Subgroup& n) {
  const IdealReport ideal = is_ideal(n, x.A);
  if (!ideal) {
    throw PreconditionError(ideal.failed_condition(),
                            "N is not an ideal: condition '" + ideal.failed_condition() + "' fails");
  }
  if (!is_subset(n, kernel(x.alpha, x.B.group))) {
    throw PreconditionError("kernel", "N not contained in kernel");
  }
  QuotientGwa q = quotient_gwa(x.A, n);
  Hom omega{std::vector<Elem>(q.object.order(), x.B.group.identity())};
  for (Elem a = 0; a < x.A.order(); ++a) omega.map[q.projection(a)] = x.alpha(a);
  return {x, std::move(q.object), std::move(q.projection), std::move(omega)};
}

/// The lifting through A/ker alpha.
inline Lifting natural_lifting(const GXMod& x) {
  return quotient_lifting(x, kernel(x.alpha, x.B.group));
}

/// (A, alpha(A), alpha) over the inclusion alpha(A) -> B.
inline Lifting image_lifting(const GXMod& x) {
  const Subgroup im = image(x.alpha);
  EmbeddedGwa e = restrict_to_subobject(x.B, im, "im_alpha");
  Hom phi;
  phi.map.reserve(x.A.order());
  for (Elem a = 0; a < x.A.order(); ++a) phi.map.push_back(im.index_of(x.alpha(a)));
  return {x, std::move(e.object), std::move(phi), std::move(e.inclusion)};
}

/// (A, B, alpha) over 1_B.
inline Lifting self_lifting(const GXMod& x) {
  return {x, x.B, x.alpha, Hom::identity(x.B.order())};
}

/// (A, X', f phi) over g omega f^-1, a lifting of (A, B', g alpha).
inline Lifting lifting_transport(const Lifting& l, const GwaObject& new_x, const Hom& f,
                                 const GwaObject& new_b, const Hom& g) {
  require_gwa_isomorphism(f, l.X, new_x, "f");
  Transported base = transport_codomain(l.base, new_b, g);
  return {std::move(base.object), new_x, compose(f, l.phi),
          compose(g, compose(l.omega, inverse(f)))};
}

/// A lifting of a lifting, read as a lifting of the outer base over
/// omega omega'.
inline Lifting compose_liftings(const Lifting& outer, const Lifting& inner) {
  if (!(inner.base == lifted_gxmod(outer))) {
    throw StructuralError("inner lifting is not a lifting of the outer lifted crossed module");
  }
  return {outer.base, inner.X, inner.phi, compose(outer.omega, inner.omega)};
}

/// Morphism f : X -> X' between liftings of the same base.
struct LiftingMorphism {
  Hom f;

  friend bool operator==(const LiftingMorphism&, const LiftingMorphism&) = default;
  friend auto operator<=>(const LiftingMorphism&, const LiftingMorphism&) = default;
};

inline LiftingMorphism identity_lifting_morphism(const Lifting& l) {
  return {Hom::identity(l.X.order())};
}

inline LiftingMorphism compose(const LiftingMorphism& outer, const LiftingMorphism& inner) {
  return {compose(outer.f, inner.f)};
}

/// Laws:
///   f           f is a Gwa morphism X -> X'
///   over-base   omega' f = omega
///   under-A     f phi = phi'
/// A morphism of the lifting category satisfies all three. The first two
/// alone are what the monomorphism lemma starts from.
inline ValidationReport validate_lifting_morphism(const Lifting& src, const Lifting& tgt,
                                                  const LiftingMorphism& m) {
  if (!(src.base == tgt.base)) throw StructuralError("liftings have different bases");
  ValidationReport r;
  r.merge(validate_gwa_morphism(m.f, src.X, tgt.X), "f");
  for (Elem x = 0; x < src.X.order(); ++x) {
    if (tgt.omega(m.f(x)) != src.omega(x)) r.add("over-base", {x}, "omega'(f(x)) != omega(x)");
  }
  for (Elem a = 0; a < src.base.A.order(); ++a) {
    if (m.f(src.phi(a)) != tgt.phi(a)) r.add("under-A", {a}, "f(phi(a)) != phi'(a)");
  }
  return r;
}

inline bool commutes_over_base(const Lifting& src, const Lifting& tgt, const LiftingMorphism& m) {
  return compose(tgt.omega, m.f) == src.omega && is_gwa_morphism(m.f, src.X, tgt.X);
}

inline bool is_lifting_morphism(const Lifting& src, const Lifting& tgt, const LiftingMorphism& m) {
  return commutes_over_base(src, tgt, m) && compose(m.f, src.phi) == tgt.phi;
}

/// If omega' is injective, (A, X, phi) is a lifting of (A, X', phi') over f.
/// Returns nullopt when omega' is not injective: no claim is made then.
inline std::optional<Lifting> lifting_morphism_as_lifting(const Lifting& src, const Lifting& tgt,
                                                          const LiftingMorphism& m) {
  if (!commutes_over_base(src, tgt, m)) {
    throw PreconditionError("lifting-morphism", "f is not a Gwa morphism with omega' f = omega");
  }
  if (!is_injective(tgt.omega)) return std::nullopt;
  if (compose(m.f, src.phi) != tgt.phi) {
    throw std::logic_error("f phi != phi' although omega' is injective");
  }
  return Lifting{lifted_gxmod(tgt), src.X, src.phi, m.f};
}

/// Lifts <f, g> : (A~, B~, alpha~) -> base to <f, g~> into (A, X, phi) with
/// omega g~ = g when f(ker alpha~) lies in ker phi. Otherwise returns an
/// element of ker alpha~ whose image escapes ker phi.
inline std::variant<GXModMorphism, KernelWitness> extend_morphism_through_lifting(
    const GXMod& src, const GXModMorphism& m, const Lifting& l) {
  if (!is_simply_connected(src)) {
    throw PreconditionError("simply-connected", "source crossed module is not simply connected");
  }
  const Subgroup kphi = kernel(l.phi, l.X.group);
  for (Elem x : kernel(src.alpha, src.B.group).members) {
    if (!kphi.contains(m.f(x))) return KernelWitness{x, m.f(x)};
  }
  constexpr Elem kUnset = ~Elem{0};
  Hom g_tilde{std::vector<Elem>(src.B.order(), kUnset)};
  for (Elem a = 0; a < src.A.order(); ++a) {
    const Elem b = src.alpha(a);
    const Elem v = l.phi(m.f(a));
    if (g_tilde.map[b] == kUnset) {
      g_tilde.map[b] = v;
    } else if (g_tilde.map[b] != v) {
      throw std::logic_error("g~ depends on the choice of preimage");
    }
  }
  return GXModMorphism{m.f, g_tilde};
}

// ----------------------------------------------------------------------------
// The two functors between coverings and liftings
// ----------------------------------------------------------------------------

/// <1_A, omega> : (A, X, phi) -> (A, B, alpha).
inline Covering lifting_to_covering(const Lifting& l) {
  return {lifted_gxmod(l), l.base, Hom::identity(l.base.A.order()), l.omega};
}

/// (A, B~, alpha~ f^-1) over g.
inline Lifting covering_to_lifting(const Covering& c) {
  return {c.base, c.total.B, compose(c.total.alpha, inverse(c.f)), c.g};
}

/// <1_A, f> between the coverings of two liftings.
inline CoveringMorphism functor_on_lifting_morphism(const Lifting& src, const Lifting&,
                                                    const LiftingMorphism& m) {
  return {Hom::identity(src.base.A.order()), m.f};
}

/// The B~ component of a covering morphism.
inline LiftingMorphism functor_on_covering_morphism(const Covering&, const Covering&,
                                                    const CoveringMorphism& m) {
  return {m.g};
}

/// <f, 1> : c -> lifting_to_covering(covering_to_lifting(c)), an isomorphism
/// of coverings.
inline CoveringMorphism covering_roundtrip_witness(const Covering& c) {
  return {c.f, Hom::identity(c.total.B.order())};
}

}  // namespace gxmod
