// Small tour of the library on GX3 = (Z4 with parity-inversion, Z2, mod 2).

#include <iostream>

#include "gxmod.hpp"

using namespace gxmod;

namespace {

void show(const char* label, const ValidationReport& r) {
  std::cout << label << ": " << (r.ok() ? "valid" : "INVALID") << "\n";
  for (const auto& v : r.violations()) {
    std::cout << "  " << v.law << ": " << v.detail << "\n";
  }
}

void print_map(const char* label, const Hom& h) {
  std::cout << label << " = [";
  for (std::size_t i = 0; i < h.map.size(); ++i) std::cout << (i ? ", " : "") << h.map[i];
  std::cout << "]\n";
}

}  // namespace

int main() {
  const GXMod x = fixtures::gx3();
  show("GX3", validate_gxmod(x));
  std::cout << "aspherical " << is_aspherical(x) << ", simply connected " << is_simply_connected(x)
            << "\n";

  const GXMod k = kernel_gxmod(x);
  print_map("ker alpha -> A", k.alpha);

  // Liftings through A / ker alpha and through A itself.
  const Lifting nat = natural_lifting(x);
  show("natural lifting", validate_lifting(nat));
  print_map("  phi", nat.phi);
  print_map("  omega", nat.omega);

  const Lifting whole = quotient_lifting(x, Subgroup{{0}});
  show("lifting through A", validate_lifting(whole));

  // A table that breaks equivariance: X = Z4 with the trivial self-action.
  const CriterionResult c =
      lifting_criterion(x, GwaObject(cyclic_group(4)), Hom::identity(4), x.alpha);
  if (!c) {
    std::cout << "Z4 (trivial) is not a lifting: fails at x = " << c.witness->first
              << ", a = " << c.witness->second << "\n";
  }

  // Round trip through the covering category.
  const Covering cov = lifting_to_covering(nat);
  show("covering of the natural lifting", validate_covering(cov));
  std::cout << "back to the same lifting: " << (covering_to_lifting(cov) == nat) << "\n";

  try {
    quotient_lifting(fixtures::a3_s3(), Subgroup{{0, 1, 2}});
  } catch (const PreconditionError& e) {
    std::cout << "quotient of (A3, S3, incl) by A3: " << e.what() << "\n";
  }

  const SearchPool pool = SearchPool::up_to(4);
  const EquivalenceReport r = verify_equivalence(x, pool);
  std::cout << r.liftings.size() << " liftings, " << r.coverings.size() << " coverings over groups of order <= "
            << pool.order_bound << "; " << (r.ok() ? "equivalence checks pass" : "equivalence checks FAIL")
            << "\n";
  return r.ok() ? 0 : 1;
}
