#include <catch_amalgamated.hpp>

#include "gxmod/enumerate.hpp"
#include "oracles.hpp"

using namespace gxmod;

namespace {

oracle::Table raw(const GroupTable& g) { return {g.table().begin(), g.table().end()}; }

GroupTable corrupted_z4() {
  const GroupTable z4 = cyclic_group(4);
  std::vector<Elem> op(z4.table().begin(), z4.table().end());
  op[1 * 4 + 1] = 3;
  return GroupTable("Z4'", 4, op);
}

}  // namespace

TEST_CASE("validate_group on small tables") {
  CHECK(validate_group(trivial_group()).ok());
  CHECK(validate_group(cyclic_group(4)).ok());
  for (const auto& g : small_groups(8)) {
    INFO(g.name());
    CHECK(validate_group(g).ok());
  }
}

TEST_CASE("corrupted Z4 reports the first failing triple") {
  const GroupTable bad = corrupted_z4();
  const ValidationReport r = validate_group(bad);
  REQUIRE_FALSE(r.ok());
  const Violation* v = r.find("associativity");
  REQUIRE(v != nullptr);

  // Frozen from the triple-loop oracle, which also rules out (1, 1, 1).
  const auto w = oracle::associativity_witness(raw(bad), 4);
  REQUIRE(w.has_value());
  CHECK(*w == std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{1, 1, 2});
  CHECK(v->witness == std::vector<Elem>{1, 1, 2});
}

TEST_CASE("report caps witnesses per law but counts all of them") {
  const GroupTable bad = corrupted_z4();
  const ValidationReport capped = validate_group(bad, 1);
  const ValidationReport full = validate_group(bad, 1000);
  CHECK(capped.total() == full.total());
  std::size_t assoc = 0;
  for (const auto& v : capped.violations()) assoc += v.law == "associativity";
  CHECK(assoc == 1);
}

TEST_CASE("identity is normalized and inverses are derived") {
  const GroupTable s3 = symmetric_group_3();
  CHECK(s3.identity() == 0);
  for (Elem g = 0; g < 6; ++g) CHECK(s3.op(g, s3.inv(g)) == 0);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.element_order(4) == 3);
  CHECK(s3.element_order(1) == 2);
}

TEST_CASE("malformed tables are structural errors") {
  CHECK_THROWS_AS(GroupTable("x", 2, {0, 1, 1}), StructuralError);
  CHECK_THROWS_AS(GroupTable("x", 2, {0, 1, 1, 2}), StructuralError);
}

TEST_CASE("homomorphism checks") {
  const GroupTable z2 = cyclic_group(2), z4 = cyclic_group(4);
  CHECK(validate_hom(z4, z2, Hom{{0, 1, 0, 1}}).ok());
  // Z2 -> Z4 with 1 -> 1 is not a homomorphism: 1 + 1 = 0 but 1 + 1 = 2 in Z4.
  const ValidationReport r = validate_hom(z2, z4, Hom{{0, 1}});
  CHECK(r.has("homomorphism"));
  CHECK_THROWS_AS(validate_hom(z2, z4, Hom{{0, 7}}), StructuralError);
}

TEST_CASE("kernel and image") {
  const GroupTable z2 = cyclic_group(2), z4 = cyclic_group(4);
  CHECK(kernel(Hom::identity(4), z4).members == std::vector<Elem>{0});
  const Hom mod2{{0, 1, 0, 1}};
  CHECK(kernel(mod2, z2).members == std::vector<Elem>{0, 2});
  CHECK(image(mod2).members == std::vector<Elem>{0, 1});
  CHECK(image(Hom::constant(4, 0)).members == std::vector<Elem>{0});
}

TEST_CASE("kernels and images of every hom between small groups are subgroups") {
  const auto groups = small_groups(8);
  for (const auto& a : groups) {
    for (const auto& b : groups) {
      for (const Hom& h : homomorphisms(a, b)) {
        REQUIRE(validate_subgroup(a, kernel(h, b)).ok());
        REQUIRE(validate_subgroup(b, image(h)).ok());
        REQUIRE(is_normal(a, kernel(h, b)));
      }
    }
  }
}

TEST_CASE("for_each_hom agrees with a raw map search") {
  const auto groups = small_groups(6);
  for (const auto& a : groups) {
    for (const auto& b : groups) {
      INFO(a.name() << " -> " << b.name());
      const std::vector<oracle::Map> expected = oracle::homs(raw(a), a.order(), raw(b), b.order());
      std::vector<Hom> got = homomorphisms(a, b);
      std::vector<oracle::Map> got_maps;
      for (auto& h : got) got_maps.push_back(h.map);
      std::sort(got_maps.begin(), got_maps.end());
      REQUIRE(got_maps == expected);
    }
  }
}

TEST_CASE("quotient group labels cosets by their least member") {
  const GroupTable z4 = cyclic_group(4);
  const QuotientGroup q = quotient_group(z4, Subgroup{{0, 2}}, "Z4/2");
  CHECK(q.group.order() == 2);
  CHECK(q.projection.map == std::vector<Elem>{0, 1, 0, 1});
  CHECK(q.representatives == std::vector<Elem>{0, 1});
  CHECK(validate_group(q.group).ok());
  CHECK_THROWS_AS(quotient_group(symmetric_group_3(), Subgroup{{0, 1}}, "x"), PreconditionError);
}

TEST_CASE("catalogue has one group per isomorphism class up to order 8") {
  const auto groups = small_groups(8);
  CHECK(groups.size() == 14);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      CHECK_FALSE(are_isomorphic(groups[i], groups[j]));
    }
  }
  CHECK_THROWS_AS(small_groups(9), PreconditionError);
}
