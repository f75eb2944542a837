#include <catch_amalgamated.hpp>

#include "gxmod/enumerate.hpp"
#include "gxmod/fixtures.hpp"

using namespace gxmod;
using fixtures::gx1;
using fixtures::gx3;

namespace {

std::vector<GwaObject> gwa_pool(std::size_t bound) {
  std::vector<GwaObject> out;
  for (const auto& g : small_groups(bound)) {
    for (auto& x : enumerate_gwa_objects(g)) out.push_back(std::move(x));
  }
  return out;
}

/// Every generalized crossed module on Gwa objects of order <= bound.
std::vector<GXMod> gxmod_pool(std::size_t bound) {
  const auto objects = gwa_pool(bound);
  std::vector<GXMod> out;
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      for (auto& x : enumerate_gxmods(a, b)) out.push_back(std::move(x));
    }
  }
  return out;
}

GXMod trivial_actions(const Hom& alpha, std::size_t na, std::size_t nb) {
  return GXMod{GwaObject(cyclic_group(na)), GwaObject(cyclic_group(nb)), alpha,
               ExtAction::trivial(nb, na)};
}

}  // namespace

TEST_CASE("validate_gxmod examples") {
  CHECK(validate_gxmod(fixtures::a3_s3()).ok());
  CHECK(validate_gxmod(trivial_actions(Hom{{0, 1, 0, 1}}, 4, 2)).ok());
  CHECK(validate_gxmod(trivial_actions(Hom::constant(4, 0), 4, 2)).ok());
  CHECK(validate_gxmod(gx3()).ok());
  CHECK(validate_gxmod(gx1()).ok());
}

TEST_CASE("a corrupted action entry is caught with its witness") {
  GXMod x = gx3();
  std::vector<Elem> act(x.action.table().begin(), x.action.table().end());
  act[1 * 4 + 1] = 1;  // 1·1 should be 3
  x.action = ExtAction(2, 4, act);
  const ValidationReport r = validate_gxmod(x);
  REQUIRE_FALSE(r.ok());
  // Peiffer: alpha(1)·1 = 1·1 = 1 but ^1 1 = 3.
  REQUIRE(r.has("peiffer"));
  CHECK(r.find("peiffer")->witness == std::vector<Elem>{1, 1});
}

TEST_CASE("validate_gxmod_morphism examples") {
  CHECK(validate_gxmod_morphism(gx3(), gx3(), identity_morphism(gx3())).ok());
  CHECK(validate_gxmod_morphism(gx3(), gx1(), {Hom{{0, 1, 0, 1}}, Hom::identity(2)}).ok());
  const ValidationReport r =
      validate_gxmod_morphism(gx3(), gx1(), {Hom{{0, 1, 0, 1}}, Hom::constant(2, 0)});
  CHECK(r.has("square"));
}

TEST_CASE("alpha is a Gwa morphism, kernel acts trivially") {
  for (const GXMod& x : {gx1(), gx3(), fixtures::a3_s3(), fixtures::z8_mod2()}) {
    CHECK(check_alpha_gwa_morphism(x));
    CHECK(check_kernel_acts_trivially(x));
  }
}

TEST_CASE("aspherical and simply connected") {
  CHECK(is_aspherical(fixtures::a3_s3()));
  CHECK_FALSE(is_simply_connected(fixtures::a3_s3()));
  CHECK_FALSE(is_aspherical(gx3()));
  CHECK(is_simply_connected(gx3()));
  CHECK(is_aspherical(gx1()));
  CHECK(is_simply_connected(gx1()));
}

TEST_CASE("kernel_gxmod") {
  const GXMod k = kernel_gxmod(gx3());
  CHECK(k.A.order() == 2);
  CHECK(k.B == gx3().A);
  CHECK(k.alpha.map == std::vector<Elem>{0, 2});
  CHECK(validate_gxmod(k).ok());
  CHECK(is_aspherical(k));

  const GXMod ka = kernel_gxmod(fixtures::a3_s3());
  CHECK(ka.A.order() == 1);
  CHECK(ka.B == fixtures::a3_s3().A);

  const GXMod kz = kernel_gxmod(trivial_actions(Hom::constant(2, 0), 2, 2));
  CHECK(kz.A.order() == 2);
  CHECK(kz.alpha == Hom::identity(2));
  CHECK(validate_gxmod(kz).ok());
}

TEST_CASE("image_gxmod") {
  const GXMod i = image_gxmod(gx3());
  CHECK(i.A == fixtures::z2());
  CHECK(i.B == fixtures::z2());
  CHECK(i.alpha == Hom::identity(2));
  CHECK(i.action == ExtAction::trivial(2, 2));

  CHECK(image_gxmod(fixtures::a3_s3()) == fixtures::a3_s3());

  const GXMod z = image_gxmod(trivial_actions(Hom::constant(4, 0), 4, 2));
  CHECK(z.A.order() == 1);
  CHECK(z.B.order() == 2);
  CHECK(validate_gxmod(z).ok());
}

TEST_CASE("from_invariant_subgroup") {
  const GXMod a = from_invariant_subgroup(fixtures::s3_conjugation(), fixtures::a3_in_s3());
  CHECK(validate_gxmod(a).ok());
  CHECK(is_aspherical(a));
  const GXMod e = from_invariant_subgroup(fixtures::s3_conjugation(), Subgroup{{0}});
  CHECK(e.A.order() == 1);
  CHECK(validate_gxmod(e).ok());
  CHECK(validate_gxmod(from_invariant_subgroup(fixtures::z4_parity_inversion(), Subgroup{{0, 2}})).ok());
  CHECK_THROWS_AS(from_invariant_subgroup(fixtures::s3_conjugation(), Subgroup{{0, 3}}),
                  PreconditionError);
}

TEST_CASE("transport along isomorphisms") {
  SECTION("identity maps change nothing") {
    CHECK(transport_codomain(gx3(), gx3().B, Hom::identity(2)).object == gx3());
    CHECK(transport_domain(gx3(), gx3().A, Hom::identity(4)).object == gx3());
    CHECK(transport_both(gx3(), gx3().B, Hom::identity(2), gx3().A, Hom::identity(4)).both.object ==
          gx3());
    CHECK(transport_domain(gx1(), gx1().A, Hom::identity(2)).object == gx1());
  }
  SECTION("conjugation by (12) on (A3, S3, incl)") {
    const GXMod x = fixtures::a3_s3();
    const Hom f = x.B.action.row(3);
    const Transported t = transport_codomain(x, x.B, f);
    CHECK(validate_gxmod(t.object).ok());
    CHECK(is_isomorphism(x, t.object, t.forward));
    CHECK(is_isomorphism(t.object, x, t.backward));
  }
  SECTION("inversion on GX3") {
    const Hom inv{{0, 3, 2, 1}};
    const Transported t = transport_domain(gx3(), gx3().A, inv);
    CHECK(validate_gxmod(t.object).ok());
    CHECK(is_isomorphism(gx3(), t.object, t.forward));
    CHECK(is_isomorphism(t.object, gx3(), t.backward));

    const TransportSquare sq = transport_both(gx3(), gx3().B, Hom::identity(2), gx3().A, inv);
    CHECK(validate_gxmod(sq.both.object).ok());
    CHECK(is_isomorphism(gx3(), sq.both.object, sq.both.forward));
  }
  SECTION("the two transports commute") {
    const GXMod x = fixtures::a3_s3();
    const Hom f = x.B.action.row(3);
    const Hom g{{0, 2, 1}};  // the automorphism of A3 swapping the 3-cycles
    REQUIRE(is_gwa_isomorphism(g, x.A, x.A));
    const GXMod cd = transport_codomain(transport_domain(x, x.A, g).object, x.B, f).object;
    const GXMod dc = transport_domain(transport_codomain(x, x.B, f).object, x.A, g).object;
    CHECK(cd == dc);
    CHECK(cd == transport_both(x, x.B, f, x.A, g).both.object);
  }
  SECTION("non-isomorphisms are rejected") {
    CHECK_THROWS_AS(transport_codomain(gx3(), gx3().B, Hom::constant(2, 0)), PreconditionError);
  }
}

TEST_CASE("lemmas over every crossed module on groups of order <= 6") {
  const auto pool = gxmod_pool(6);
  REQUIRE(pool.size() > 100);
  for (const GXMod& x : pool) {
    REQUIRE(check_alpha_gwa_morphism(x));
    REQUIRE(check_kernel_acts_trivially(x));
    REQUIRE(validate_gxmod(kernel_gxmod(x)).ok());
    const GXMod im = image_gxmod(x);
    REQUIRE(validate_gxmod(im).ok());
    REQUIRE(is_aspherical(im));
  }
}

TEST_CASE("transport there and back is exact on every crossed module of order <= 4") {
  for (const GXMod& x : gxmod_pool(4)) {
    for (const Hom& f : automorphisms(x.B.group)) {
      const GwaObject moved(x.B.group, pullback_action(x.B, inverse(f)));
      const Transported there = transport_codomain(x, moved, f);
      REQUIRE(validate_gxmod(there.object).ok());
      REQUIRE(transport_codomain(there.object, x.B, inverse(f)).object == x);
    }
    for (const Hom& g : automorphisms(x.A.group)) {
      const GwaObject moved(x.A.group, pullback_action(x.A, g));
      const Transported there = transport_domain(x, moved, g);
      REQUIRE(validate_gxmod(there.object).ok());
      REQUIRE(transport_domain(there.object, x.A, inverse(g)).object == x);
    }
  }
}

TEST_CASE("composites of crossed module morphisms are morphisms") {
  std::vector<GXMod> objects;
  const std::vector<GwaObject> small = {GwaObject(trivial_group()), fixtures::z2(),
                                        GwaObject(cyclic_group(4)), fixtures::z4_parity_inversion()};
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (auto& x : enumerate_gxmods(a, b)) objects.push_back(std::move(x));
    }
  }
  std::size_t checked = 0;
  for (const auto& x : objects) {
    for (const auto& y : objects) {
      const auto xy = gxmod_morphisms(x, y);
      if (xy.empty()) continue;
      for (const auto& z : objects) {
        for (const auto& n : gxmod_morphisms(y, z)) {
          for (const auto& m : xy) {
            REQUIRE(validate_gxmod_morphism(x, z, compose(n, m)).ok());
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}
