#include <catch_amalgamated.hpp>

#include "gxmod/enumerate.hpp"
#include "gxmod/fixtures.hpp"

using namespace gxmod;
using fixtures::gx1;
using fixtures::gx3;

namespace {

const Hom kInv4{{0, 3, 2, 1}};

/// <g, 1> : (A, B, alpha g) -> x for a Gwa automorphism g of A, as a covering.
Covering relabelled_cover(const GXMod& x, const Hom& g) {
  const GwaObject moved(x.A.group, pullback_action(x.A, g));
  const Transported t = transport_domain(x, moved, g);
  return {t.object, x, t.backward.f, t.backward.g};
}

/// The base crossed modules the property tests sweep, with their pool bound.
std::vector<std::pair<GXMod, std::size_t>> bases() {
  return {{gx1(), 4}, {gx3(), 4}, {fixtures::a3_s3(), 6}};
}

std::vector<Elem> kernel_image(const Hom& f, const Subgroup& k) { return image_of(f, k).members; }

}  // namespace

TEST_CASE("validate_covering examples") {
  CHECK(validate_covering(identity_covering(gx3())).ok());
  CHECK(validate_covering(identity_covering(fixtures::a3_s3())).ok());
  CHECK(validate_covering(relabelled_cover(gx3(), kInv4)).ok());
  CHECK(validate_covering(lifting_to_covering(natural_lifting(gx3()))).ok());
}

TEST_CASE("a morphism with non-injective f is not a covering") {
  const GXMod total{fixtures::z2(), fixtures::z2(), Hom::constant(2, 0), ExtAction::trivial(2, 2)};
  const GXMod one{GwaObject(trivial_group()), GwaObject(trivial_group()), Hom::constant(1, 0),
                  ExtAction::trivial(1, 1)};
  const Covering c{total, one, Hom::constant(2, 0), Hom::constant(2, 0)};
  const ValidationReport r = validate_covering(c);
  REQUIRE_FALSE(r.ok());
  CHECK(r.has("bijective"));
  CHECK(r.total() == 1);
}

TEST_CASE("covering kernel check") {
  CHECK_FALSE(covering_kernel_check(identity_covering(gx3())).has_value());
  for (const auto& [base, bound] : bases()) {
    for (const Covering& c : enumerate_coverings(base, SearchPool::up_to(bound))) {
      REQUIRE_FALSE(covering_kernel_check(c).has_value());
      // f restricted to ker alpha~ lands in ker alpha.
      const Subgroup kb = kernel(base.alpha, base.B.group);
      for (Elem x : kernel(c.total.alpha, c.total.B.group).members) REQUIRE(kb.contains(c.f(x)));
      if (is_aspherical(base)) REQUIRE(is_aspherical(c.total));
    }
  }
}

TEST_CASE("compose_coverings") {
  const Covering c = relabelled_cover(gx3(), kInv4);
  CHECK(compose_coverings(identity_covering(gx3()), c) == c);
  CHECK(compose_coverings(c, identity_covering(c.total)) == c);

  const Covering d = relabelled_cover(c.total, kInv4);
  const Covering both = compose_coverings(c, d);
  CHECK(validate_covering(both).ok());
  CHECK(both.f == Hom::identity(4));  // inversion twice
  CHECK_THROWS_AS(compose_coverings(identity_covering(gx1()), c), StructuralError);
}

TEST_CASE("covering_transport") {
  const Covering c = identity_covering(fixtures::a3_s3());
  CHECK(covering_transport(c, c.total.B, Hom::identity(6), c.base.B, Hom::identity(6)) == c);

  const Hom conj = c.base.B.action.row(3);
  const Covering t = covering_transport(c, c.total.B, conj, c.base.B, Hom::identity(6));
  CHECK(validate_covering(t).ok());
  CHECK(t.f == c.f);
  const Covering u = covering_transport(c, c.total.B, conj, c.base.B, conj);
  CHECK(validate_covering(u).ok());
  CHECK(u.g == Hom::identity(6));
}

TEST_CASE("a covering morphism is itself a covering") {
  const Covering id = identity_covering(gx3());
  const Covering m = morphism_between_coverings(id, id, identity_covering_morphism(id));
  CHECK(m == identity_covering(gx3()));

  const auto cs = enumerate_coverings(gx1(), SearchPool::up_to(4));
  std::size_t seen = 0;
  for (const Covering& a : cs) {
    for (const Covering& b : cs) {
      for (const CoveringMorphism& h : covering_morphisms(a, b)) {
        REQUIRE(validate_covering(morphism_between_coverings(a, b, h)).ok());
        ++seen;
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("factoring a morphism through a covering") {
  SECTION("a covering factors through itself") {
    const Covering c = relabelled_cover(gx3(), kInv4);
    const auto r = factor_through_covering(c.total, {c.f, c.g}, c);
    REQUIRE(std::holds_alternative<GXModMorphism>(r));
    CHECK(std::get<GXModMorphism>(r) == identity_morphism(c.total));
  }
  SECTION("GX3 onto GX1 through the natural covering of GX1") {
    const GXModMorphism m{Hom{{0, 1, 0, 1}}, Hom::identity(2)};
    // ker alpha of GX3 is {0, 2}, which m.f sends to 0, inside f~(ker alpha~) = {0}.
    const auto r = factor_through_covering(gx3(), m, identity_covering(gx1()));
    REQUIRE(std::holds_alternative<GXModMorphism>(r));
    CHECK(std::get<GXModMorphism>(r) == m);
  }
  SECTION("the identity of GX3 does not factor through a cover with trivial kernel") {
    const Covering c = lifting_to_covering(quotient_lifting(gx3(), Subgroup{{0}}));
    REQUIRE(kernel(c.total.alpha, c.total.B.group).members == std::vector<Elem>{0});
    const auto r = factor_through_covering(gx3(), identity_morphism(gx3()), c);
    REQUIRE(std::holds_alternative<KernelWitness>(r));
    CHECK(std::get<KernelWitness>(r).element == 2);
    CHECK(std::get<KernelWitness>(r).image == 2);
    CHECK_FALSE(search_factorization(gx3(), identity_morphism(gx3()), c).has_value());
  }
  SECTION("non simply connected source is refused") {
    const GXMod x = fixtures::a3_s3();
    CHECK_THROWS_AS(factor_through_covering(x, identity_morphism(x), identity_covering(x)),
                    PreconditionError);
  }
}

TEST_CASE("factorization agrees with exhaustive search") {
  for (const auto& [base, bound] : bases()) {
    const auto covers = enumerate_coverings(base, SearchPool::up_to(bound));
    std::size_t yes = 0, no = 0;
    for (const Covering& s : covers) {
      if (!is_simply_connected(s.total)) continue;
      for (const GXModMorphism& m : gxmod_morphisms(s.total, base)) {
        for (const Covering& c : covers) {
          const auto got = factor_through_covering(s.total, m, c);
          const auto brute = search_factorization(s.total, m, c);
          REQUIRE(std::holds_alternative<GXModMorphism>(got) == brute.has_value());
          if (brute) {
            const GXModMorphism& h = std::get<GXModMorphism>(got);
            REQUIRE(is_gxmod_morphism(s.total, c.total, h));
            REQUIRE(compose(GXModMorphism{c.f, c.g}, h) == m);
            ++yes;
          } else {
            const KernelWitness w = std::get<KernelWitness>(got);
            REQUIRE(kernel(s.total.alpha, s.total.B.group).contains(w.element));
            ++no;
          }
        }
      }
    }
    CHECK(yes > 0);
    if (!is_aspherical(base)) CHECK(no > 0);
  }
}

TEST_CASE("simply connected coverings are isomorphic iff their kernels have the same image") {
  for (const auto& [base, bound] : bases()) {
    std::vector<Covering> sc;
    for (auto& c : enumerate_coverings(base, SearchPool::up_to(bound))) {
      if (is_simply_connected(c.total)) sc.push_back(std::move(c));
    }
    for (const Covering& a : sc) {
      for (const Covering& b : sc) {
        const bool same = kernel_image(a.f, kernel(a.total.alpha, a.total.B.group)) ==
                          kernel_image(b.f, kernel(b.total.alpha, b.total.B.group));
        REQUIRE(find_covering_isomorphism(a, b).has_value() == same);
      }
    }
  }
}

TEST_CASE("validate_lifting examples") {
  CHECK(validate_lifting(natural_lifting(gx3())).ok());
  CHECK(validate_lifting(image_lifting(gx3())).ok());
  CHECK(validate_lifting(self_lifting(gx3())).ok());
  CHECK(validate_lifting(image_lifting(fixtures::a3_s3())).ok());
  CHECK(image_lifting(gx3()).X.name() == "im_alpha");
}

TEST_CASE("lifting criterion catches a broken equivariance") {
  // X = Z4 with the trivial self-action, phi = 1, omega = mod 2: omega is a
  // Gwa morphism and omega phi = alpha, but x·a uses inversion for odd x.
  const GXMod base = gx3();
  const GwaObject X(cyclic_group(4));
  const Hom phi = Hom::identity(4), omega{{0, 1, 0, 1}};
  REQUIRE(is_gwa_morphism(omega, X, base.B));

  std::optional<std::pair<Elem, Elem>> expected;
  for (Elem x = 0; x < 4 && !expected; ++x)
    for (Elem a = 0; a < 4 && !expected; ++a)
      if (phi(base.act(omega(x), a)) != X.act(x, phi(a))) expected = std::pair{x, a};
  REQUIRE(expected == std::pair<Elem, Elem>{1, 1});

  const CriterionResult r = lifting_criterion(base, X, phi, omega);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == expected);
  CHECK_FALSE(validate_lifting({base, X, phi, omega}).ok());

  CHECK_THROWS_AS(lifting_criterion(base, X, phi, Hom::constant(4, 0)), PreconditionError);
}

TEST_CASE("the criterion decides validity on every factorization") {
  std::size_t yes = 0, no = 0;
  for (const auto& [base, bound] : bases()) {
    for (const GroupTable& xg : small_groups(bound)) {
      for (const GwaObject& X : enumerate_gwa_objects(xg)) {
        for (const Hom& omega : gwa_morphisms(X, base.B)) {
          for (const Hom& phi : homomorphisms(base.A.group, xg)) {
            if (compose(omega, phi) != base.alpha) continue;
            const bool crit = lifting_criterion(base, X, phi, omega).holds;
            REQUIRE(crit == validate_lifting({base, X, phi, omega}).ok());
            ++(crit ? yes : no);
          }
        }
      }
    }
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("lifting_to_base_morphism") {
  const Lifting n = natural_lifting(gx3());
  const GXModMorphism m = lifting_to_base_morphism(n);
  CHECK(validate_gxmod_morphism(lifted_gxmod(n), gx3(), m).ok());
  for (Elem a = 0; a < 4; ++a) CHECK(m.g(n.phi(a)) == gx3().alpha(a));

  CHECK(lifting_to_base_morphism(self_lifting(gx3())) == identity_morphism(gx3()));
  const Lifting i = image_lifting(fixtures::a3_s3());
  CHECK(lifting_to_base_morphism(i).g.map == std::vector<Elem>{0, 4, 5});
}

TEST_CASE("quotient liftings") {
  const Lifting whole = quotient_lifting(gx3(), Subgroup{{0}});
  CHECK(whole.X.order() == 4);
  CHECK(whole.phi == Hom::identity(4));
  CHECK(whole.omega == gx3().alpha);

  const Lifting half = quotient_lifting(gx3(), Subgroup{{0, 2}});
  CHECK(half == natural_lifting(gx3()));
  CHECK(half.X.order() == 2);
  CHECK(kernel(half.phi, half.X.group).members == std::vector<Elem>{0, 2});

  // Aspherical: the only N inside ker alpha is trivial.
  const GXMod a = fixtures::a3_s3();
  CHECK(natural_lifting(a).X.order() == 3);
  try {
    quotient_lifting(a, Subgroup{{0, 1, 2}});
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.condition() == "kernel");
    CHECK(std::string(e.what()).find("N not contained in kernel") != std::string::npos);
  }

  const GXMod z8 = fixtures::z8_mod2();
  CHECK_THROWS_AS(quotient_lifting(z8, Subgroup{{0, 1, 2, 3, 4, 5, 6, 7}}), PreconditionError);
  for (const Subgroup& n : {Subgroup{{0}}, Subgroup{{0, 4}}, Subgroup{{0, 2, 4, 6}}}) {
    const Lifting l = quotient_lifting(z8, n);
    CHECK(validate_lifting(l).ok());
    CHECK(l.X.order() == 8 / n.members.size());
  }
}

TEST_CASE("lifting_transport") {
  const Lifting l = natural_lifting(fixtures::a3_s3());
  CHECK(lifting_transport(l, l.X, Hom::identity(l.X.order()), l.base.B, Hom::identity(6)) == l);

  const Hom swap{{0, 2, 1}};
  REQUIRE(is_gwa_isomorphism(swap, l.X, l.X));
  const Lifting t = lifting_transport(l, l.X, swap, l.base.B, Hom::identity(6));
  CHECK(validate_lifting(t).ok());
  CHECK(t.phi == compose(swap, l.phi));

  const Hom conj = l.base.B.action.row(3);
  const Lifting u = lifting_transport(l, l.X, Hom::identity(3), l.base.B, conj);
  CHECK(validate_lifting(u).ok());
  CHECK(u.omega == compose(conj, l.omega));
}

TEST_CASE("compose_liftings") {
  const Lifting n = natural_lifting(gx3());
  CHECK(compose_liftings(n, self_lifting(lifted_gxmod(n))) == n);

  const Lifting inner = quotient_lifting(gx3(), Subgroup{{0}});
  CHECK(compose_liftings(self_lifting(gx3()), inner) == inner);

  // Z8 -> Z8/<2> over Z2, then Z8 -> Z8/<4> over Z8/<2>.
  const GXMod z8 = fixtures::z8_mod2();
  const Lifting outer = quotient_lifting(z8, Subgroup{{0, 2, 4, 6}});
  const Lifting second = quotient_lifting(lifted_gxmod(outer), Subgroup{{0, 4}});
  const Lifting both = compose_liftings(outer, second);
  CHECK(validate_lifting(both).ok());
  CHECK(both.base == z8);
  CHECK(both.X.order() == 4);
  CHECK(kernel(both.phi, both.X.group).members == std::vector<Elem>{0, 4});
  CHECK_THROWS_AS(compose_liftings(outer, n), StructuralError);
}

TEST_CASE("lifting morphisms read as liftings") {
  const GXMod z8 = fixtures::z8_mod2();
  const Lifting l1 = quotient_lifting(z8, Subgroup{{0, 4}});
  const Lifting l2 = quotient_lifting(z8, Subgroup{{0, 2, 4, 6}});
  Hom f{std::vector<Elem>(4, 0)};
  for (Elem a = 0; a < 8; ++a) f.map[l1.phi(a)] = l2.phi(a);
  const LiftingMorphism m{f};
  REQUIRE(is_lifting_morphism(l1, l2, m));
  REQUIRE(is_injective(l2.omega));

  const auto as_lifting = lifting_morphism_as_lifting(l1, l2, m);
  REQUIRE(as_lifting.has_value());
  CHECK(validate_lifting(*as_lifting).ok());
  CHECK(as_lifting->base == lifted_gxmod(l2));

  // omega' = Z4 -> Z2 is not injective: no claim.
  const Lifting whole = quotient_lifting(z8, Subgroup{{0}});
  CHECK_FALSE(lifting_morphism_as_lifting(whole, l1, {l1.phi}).has_value());

  const auto id = lifting_morphism_as_lifting(l2, l2, identity_lifting_morphism(l2));
  REQUIRE(id.has_value());
  CHECK(*id == self_lifting(lifted_gxmod(l2)));
}

TEST_CASE("lifting morphisms need f phi = phi'") {
  // On (Z2, Z2, 0) the identity of X = Z2 commutes over the base, but the
  // liftings phi = 0 and phi' = 1 differ.
  const GXMod base{fixtures::z2(), fixtures::z2(), Hom::constant(2, 0), ExtAction::trivial(2, 2)};
  const Lifting a{base, fixtures::z2(), Hom::constant(2, 0), Hom::constant(2, 0)};
  const Lifting b{base, fixtures::z2(), Hom::identity(2), Hom::constant(2, 0)};
  REQUIRE(validate_lifting(a).ok());
  REQUIRE(validate_lifting(b).ok());
  const LiftingMorphism id{Hom::identity(2)};
  CHECK(commutes_over_base(a, b, id));
  CHECK_FALSE(is_lifting_morphism(a, b, id));
  CHECK(validate_lifting_morphism(a, b, id).has("under-A"));
}

TEST_CASE("extending a morphism through a lifting") {
  SECTION("identity through the self lifting") {
    const auto r = extend_morphism_through_lifting(gx1(), identity_morphism(gx1()), self_lifting(gx1()));
    REQUIRE(std::holds_alternative<GXModMorphism>(r));
    CHECK(std::get<GXModMorphism>(r) == identity_morphism(gx1()));
  }
  SECTION("identity of GX3 extends through its natural lifting") {
    const auto r = extend_morphism_through_lifting(gx3(), identity_morphism(gx3()), natural_lifting(gx3()));
    REQUIRE(std::holds_alternative<GXModMorphism>(r));
    CHECK(search_extension(gx3(), identity_morphism(gx3()), natural_lifting(gx3())).has_value());
  }
  SECTION("identity of GX3 through the lifting by A fails on ker alpha") {
    const Lifting whole = quotient_lifting(gx3(), Subgroup{{0}});
    const auto r = extend_morphism_through_lifting(gx3(), identity_morphism(gx3()), whole);
    REQUIRE(std::holds_alternative<KernelWitness>(r));
    CHECK(std::get<KernelWitness>(r).element == 2);
    CHECK_FALSE(search_extension(gx3(), identity_morphism(gx3()), whole).has_value());
  }
  SECTION("agreement with exhaustive search") {
    for (const auto& [base, bound] : bases()) {
      const auto pool = SearchPool::up_to(bound);
      const auto lifts = enumerate_liftings(base, pool);
      std::vector<GXMod> sources;
      for (const Covering& c : enumerate_coverings(base, pool)) {
        if (is_simply_connected(c.total) &&
            std::find(sources.begin(), sources.end(), c.total) == sources.end()) {
          sources.push_back(c.total);
        }
      }
      std::size_t yes = 0;
      for (const GXMod& s : sources) {
        for (const GXModMorphism& m : gxmod_morphisms(s, base)) {
          for (const Lifting& l : lifts) {
            const auto got = extend_morphism_through_lifting(s, m, l);
            const auto brute = search_extension(s, m, l);
            REQUIRE(std::holds_alternative<GXModMorphism>(got) == brute.has_value());
            if (brute) {
              const GXModMorphism& h = std::get<GXModMorphism>(got);
              REQUIRE(is_gxmod_morphism(s, lifted_gxmod(l), h));
              REQUIRE(compose(l.omega, h.g) == m.g);
              ++yes;
            }
          }
        }
      }
      CHECK(yes > 0);
    }
  }
}

TEST_CASE("simply connected liftings are isomorphic iff ker phi agree") {
  for (const auto& [base, bound] : bases()) {
    std::vector<Lifting> sc;
    for (auto& l : enumerate_liftings(base, SearchPool::up_to(bound))) {
      if (is_simply_connected(lifted_gxmod(l))) sc.push_back(std::move(l));
    }
    REQUIRE_FALSE(sc.empty());
    for (const Lifting& a : sc) {
      for (const Lifting& b : sc) {
        const bool same = kernel(a.phi, a.X.group) == kernel(b.phi, b.X.group);
        REQUIRE(find_lifting_isomorphism(a, b).has_value() == same);
      }
    }
  }
}

TEST_CASE("every enumerated lifting has ker phi inside ker alpha") {
  for (const auto& [base, bound] : bases()) {
    const Subgroup ka = kernel(base.alpha, base.B.group);
    for (const Lifting& l : enumerate_liftings(base, SearchPool::up_to(bound))) {
      REQUIRE(validate_lifting(l).ok());
      REQUIRE(is_subset(kernel(l.phi, l.X.group), ka));
      REQUIRE(validate_gxmod_morphism(lifted_gxmod(l), base, lifting_to_base_morphism(l)).ok());
    }
  }
}

TEST_CASE("the two functors") {
  SECTION("objects") {
    const Lifting n = natural_lifting(gx3());
    const Covering c = lifting_to_covering(n);
    CHECK(c.f == Hom::identity(4));
    CHECK(c.g == n.omega);
    CHECK(c.total == lifted_gxmod(n));
    CHECK(covering_to_lifting(c) == n);

    CHECK(lifting_to_covering(self_lifting(gx3())) == identity_covering(gx3()));
    CHECK(covering_to_lifting(identity_covering(gx3())) == self_lifting(gx3()));
    CHECK(lifting_to_covering(image_lifting(fixtures::a3_s3())).g.map == std::vector<Elem>{0, 4, 5});
  }
  SECTION("a relabelled cover") {
    const Covering c = relabelled_cover(gx3(), kInv4);
    const Lifting l = covering_to_lifting(c);
    CHECK(validate_lifting(l).ok());
    CHECK(l.phi == compose(c.total.alpha, inverse(c.f)));
    const Covering back = lifting_to_covering(l);
    const CoveringMorphism w = covering_roundtrip_witness(c);
    CHECK(is_covering_morphism(c, back, w));
    CHECK(is_bijective(w.f, 4));
  }
  SECTION("morphisms") {
    const auto lifts = enumerate_liftings(gx3(), SearchPool::up_to(4));
    for (const Lifting& a : lifts) {
      for (const Lifting& b : lifts) {
        for (const LiftingMorphism& m : lifting_morphisms(a, b)) {
          const CoveringMorphism cm = functor_on_lifting_morphism(a, b, m);
          REQUIRE(is_covering_morphism(lifting_to_covering(a), lifting_to_covering(b), cm));
          REQUIRE(functor_on_covering_morphism(lifting_to_covering(a), lifting_to_covering(b), cm) == m);
        }
      }
    }
  }
}
