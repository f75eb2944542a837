#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gxmod/io.hpp"

namespace gxmod::fixtures {

/// Z2 acting trivially on itself.
inline GwaObject z2() { return GwaObject(cyclic_group(2)); }

/// Z4 with ^g h = h for g even and -h for g odd.
inline GwaObject z4_parity_inversion() {
  const GroupTable z4 = cyclic_group(4);
  std::vector<Elem> act(16);
  for (Elem g = 0; g < 4; ++g) {
    for (Elem h = 0; h < 4; ++h) act[g * 4 + h] = g % 2 == 0 ? h : z4.inv(h);
  }
  return GwaObject(z4, SelfAction(4, std::move(act)));
}

inline GwaObject s3_conjugation() {
  const GroupTable s3 = symmetric_group_3();
  return GwaObject(s3, SelfAction::conjugation(s3));
}

/// A3 = {0, 4, 5} inside symmetric_group_3().
inline Subgroup a3_in_s3() { return Subgroup{{0, 4, 5}}; }

/// (Z2, Z2, identity) with trivial actions.
inline GXMod gx1() { return GXMod{z2(), z2(), Hom::identity(2), ExtAction::trivial(2, 2)}; }

/// (Z4 with parity-inversion, Z2, reduction mod 2), where 1 in Z2 acts on Z4
/// by inversion.
inline GXMod gx3() {
  const GwaObject a = z4_parity_inversion();
  std::vector<Elem> act(8);
  for (Elem b = 0; b < 2; ++b) {
    for (Elem x = 0; x < 4; ++x) act[b * 4 + x] = b == 0 ? x : a.group.inv(x);
  }
  return GXMod{a, z2(), Hom{{0, 1, 0, 1}}, ExtAction(2, 4, std::move(act))};
}

/// (A3, S3, inclusion) with conjugation actions.
inline GXMod a3_s3() { return from_invariant_subgroup(s3_conjugation(), a3_in_s3(), "A3"); }

/// (Z8, Z2, reduction mod 2), all actions trivial.
inline GXMod z8_mod2() {
  std::vector<Elem> alpha(8);
  for (Elem a = 0; a < 8; ++a) alpha[a] = a % 2;
  return GXMod{GwaObject(cyclic_group(8)), z2(), Hom{std::move(alpha)}, ExtAction::trivial(2, 8)};
}

/// (G, 1, 1) on Z4 with the trivial self-action.
inline GCat1 cat1_identity() {
  return {GwaObject(cyclic_group(4)), Hom::identity(4), Hom::identity(4)};
}

/// (Z2, 0, 0).
inline GCat1 cat1_zero() { return {z2(), Hom::constant(2, 0), Hom::constant(2, 0)}; }

/// Z2 x Z2 with s = t = (x, y) -> (x, 0).
inline GCat1 cat1_projection() {
  GwaObject v4(direct_product(cyclic_group(2), cyclic_group(2)));
  return {v4, Hom{{0, 0, 2, 2}}, Hom{{0, 0, 2, 2}}};
}

/// S3 under conjugation with s = t the sign map onto {e, (01)}.
inline GCat1 cat1_s3_sign() {
  const Hom sign{{0, 1, 1, 1, 0, 0}};
  return {s3_conjugation(), sign, sign};
}

struct Named {
  std::string name;
  AnyObject object;
};

/// The shipped fixture set; every entry passes its validator.
inline std::vector<Named> all() {
  const GroupTable z2g = cyclic_group(2);
  return {
      {"trivial", trivial_group()},
      {"z2", z2g},
      {"z3", cyclic_group(3)},
      {"z4", cyclic_group(4)},
      {"z2xz2", direct_product(z2g, z2g)},
      {"s3", symmetric_group_3()},
      {"z8", cyclic_group(8)},
      {"z4_parity_inversion", z4_parity_inversion()},
      {"s3_conjugation", s3_conjugation()},
      {"gx1", gx1()},
      {"gx3", gx3()},
      {"a3_s3", a3_s3()},
      {"z8_mod2", z8_mod2()},
      {"cat1_identity", cat1_identity()},
      {"cat1_zero", cat1_zero()},
      {"cat1_projection", cat1_projection()},
      {"cat1_s3_sign", cat1_s3_sign()},
      {"covering_gx3_identity", identity_covering(gx3())},
      {"covering_gx3_natural", lifting_to_covering(natural_lifting(gx3()))},
      {"lifting_gx3_natural", natural_lifting(gx3())},
      {"lifting_a3_s3_self", self_lifting(a3_s3())},
  };
}

inline json to_json(const AnyObject& o) {
  return std::visit([](const auto& x) { return gxmod::to_json(x); }, o);
}

/// Writes every fixture as <dir>/<name>.json and returns the paths written.
inline std::vector<std::string> write_all(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (const auto& f : all()) {
    const std::string path = (std::filesystem::path(dir) / (f.name + ".json")).string();
    write_json_file(path, to_json(f.object));
    paths.push_back(path);
  }
  return paths;
}

}  // namespace gxmod::fixtures
