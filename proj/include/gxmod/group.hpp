#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gxmod/report.hpp"

namespace gxmod {

/// A finite group given by its Cayley table. Elements are 0..order-1.
///
/// Construction only checks the shape of the table; the group axioms are
/// checked by validate_group so that broken tables can be reported on.
class GroupTable {
 public:
  /// The one-element group.
  GroupTable() : GroupTable("1", 1, {0}) {}

  /// Derives the identity and inverse tables from `op`. When the table has no
  /// two-sided identity the identity falls back to 0; missing inverses fall
  /// back to the identity. Both are then reported by validate_group.
  GroupTable(std::string name, std::size_t order, std::vector<Elem> op)
      : name_(std::move(name)), order_(order), op_(std::move(op)) {
    check_shape();
    identity_ = find_identity();
    inv_.resize(order_, identity_);
    for (Elem g = 0; g < order_; ++g) {
      for (Elem h = 0; h < order_; ++h) {
        if (this->op(g, h) == identity_ && this->op(h, g) == identity_) {
          inv_[g] = h;
          break;
        }
      }
    }
  }

  GroupTable(std::string name, std::size_t order, std::vector<Elem> op, Elem identity,
             std::vector<Elem> inv)
      : name_(std::move(name)), order_(order), op_(std::move(op)), identity_(identity),
        inv_(std::move(inv)) {
    check_shape();
    if (identity_ >= order_) throw StructuralError("identity index out of range");
    if (inv_.size() != order_) throw StructuralError("inverse table has wrong length");
    for (Elem v : inv_) {
      if (v >= order_) throw StructuralError("inverse table entry out of range");
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  Elem op(Elem a, Elem b) const { return op_[a * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  std::span<const Elem> table() const noexcept { return op_; }

  /// g^k for k >= 0.
  Elem pow(Elem g, std::size_t k) const {
    Elem r = identity_;
    for (std::size_t i = 0; i < k; ++i) r = op(r, g);
    return r;
  }

  std::size_t element_order(Elem g) const {
    std::size_t k = 1;
    for (Elem x = g; x != identity_; x = op(x, g)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (Elem a = 0; a < order_; ++a) {
      for (Elem b = a + 1; b < order_; ++b) {
        if (op(a, b) != op(b, a)) return false;
      }
    }
    return true;
  }

  GroupTable renamed(std::string name) const {
    GroupTable copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  /// Table equality; names are labels and do not take part.
  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.op_ == b.op_ && a.identity_ == b.identity_;
  }

 private:
  void check_shape() const {
    if (order_ == 0) throw StructuralError("group order must be positive");
    if (op_.size() != order_ * order_) {
      throw StructuralError("operation table must have order*order entries, got " +
                            std::to_string(op_.size()));
    }
    for (std::size_t i = 0; i < op_.size(); ++i) {
      if (op_[i] >= order_) {
        throw StructuralError("operation table entry (" + std::to_string(i / order_) + ", " +
                              std::to_string(i % order_) + ") = " + std::to_string(op_[i]) +
                              " is out of range");
      }
    }
  }

  Elem find_identity() const {
    for (Elem e = 0; e < order_; ++e) {
      bool ok = true;
      for (Elem g = 0; g < order_ && ok; ++g) ok = op(e, g) == g && op(g, e) == g;
      if (ok) return e;
    }
    return 0;
  }

  std::string name_;
  std::size_t order_ = 1;
  std::vector<Elem> op_;
  Elem identity_ = 0;
  std::vector<Elem> inv_;
};

/// Checks identity, inverse and associativity laws. Witnesses are reported in
/// additive notation, `a + b` for op(a, b).
inline ValidationReport validate_group(const GroupTable& t,
                                       std::size_t cap = ValidationReport::kDefaultCap) {
  ValidationReport r(cap);
  const std::size_t n = t.order();
  const Elem e = t.identity();
  for (Elem g = 0; g < n; ++g) {
    if (t.op(e, g) != g || t.op(g, e) != g) {
      r.add("identity", {g}, "0 + g = g + 0 = g fails for g = " + std::to_string(g));
    }
  }
  for (Elem g = 0; g < n; ++g) {
    const Elem h = t.inv(g);
    if (t.op(g, h) != e || t.op(h, g) != e) {
      r.add("inverse", {g}, std::to_string(g) + " + (-" + std::to_string(g) + ") != 0");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = t.op(a, b);
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = t.op(ab, c);
        const Elem rhs = t.op(a, t.op(b, c));
        if (lhs != rhs) {
          r.add("associativity", {a, b, c},
                "(" + std::to_string(a) + " + " + std::to_string(b) + ") + " + std::to_string(c) +
                    " = " + std::to_string(lhs) + " but " + std::to_string(a) + " + (" +
                    std::to_string(b) + " + " + std::to_string(c) + ") = " + std::to_string(rhs));
        }
      }
    }
  }
  return r;
}

/// A map between element indices. Which groups it runs between is supplied by
/// the caller, the way permutations do not carry their domain.
struct Hom {
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  std::size_t source_order() const noexcept { return map.size(); }

  static Hom identity(std::size_t n) {
    Hom h;
    h.map.resize(n);
    for (Elem i = 0; i < n; ++i) h.map[i] = i;
    return h;
  }

  static Hom constant(std::size_t n, Elem value) { return Hom{std::vector<Elem>(n, value)}; }

  friend bool operator==(const Hom&, const Hom&) = default;
  friend auto operator<=>(const Hom&, const Hom&) = default;
};

/// outer ∘ inner.
inline Hom compose(const Hom& outer, const Hom& inner) {
  Hom r;
  r.map.reserve(inner.map.size());
  for (Elem x : inner.map) {
    if (x >= outer.map.size()) throw StructuralError("composition of mismatched maps");
    r.map.push_back(outer.map[x]);
  }
  return r;
}

inline bool is_injective(const Hom& h) {
  std::vector<Elem> v = h.map;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline bool is_surjective(const Hom& h, std::size_t target_order) {
  std::vector<bool> hit(target_order, false);
  for (Elem x : h.map) {
    if (x < target_order) hit[x] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

inline bool is_bijective(const Hom& h, std::size_t target_order) {
  return h.map.size() == target_order && is_surjective(h, target_order);
}

inline Hom inverse(const Hom& h) {
  if (!is_bijective(h, h.map.size())) throw PreconditionError("bijective", "map is not invertible");
  Hom r;
  r.map.resize(h.map.size());
  for (Elem x = 0; x < h.map.size(); ++x) r.map[h.map[x]] = x;
  return r;
}

inline void check_hom_shape(const GroupTable& src, const GroupTable& tgt, const Hom& h) {
  if (h.map.size() != src.order()) {
    throw StructuralError("map length " + std::to_string(h.map.size()) +
                          " does not match source order " + std::to_string(src.order()));
  }
  for (Elem x : h.map) {
    if (x >= tgt.order()) throw StructuralError("map entry out of range of the target group");
  }
}

inline ValidationReport validate_hom(const GroupTable& src, const GroupTable& tgt, const Hom& h,
                                     std::size_t cap = ValidationReport::kDefaultCap) {
  check_hom_shape(src, tgt, h);
  ValidationReport r(cap);
  if (h(src.identity()) != tgt.identity()) {
    r.add("identity", {src.identity()}, "f(0) != 0");
  }
  for (Elem a = 0; a < src.order(); ++a) {
    for (Elem b = 0; b < src.order(); ++b) {
      if (h(src.op(a, b)) != tgt.op(h(a), h(b))) {
        r.add("homomorphism", {a, b},
              "f(" + std::to_string(a) + " + " + std::to_string(b) + ") != f(" +
                  std::to_string(a) + ") + f(" + std::to_string(b) + ")");
      }
    }
  }
  return r;
}

inline bool is_hom(const GroupTable& src, const GroupTable& tgt, const Hom& h) {
  if (h.map.size() != src.order()) return false;
  for (Elem x : h.map) {
    if (x >= tgt.order()) return false;
  }
  for (Elem a = 0; a < src.order(); ++a) {
    for (Elem b = 0; b < src.order(); ++b) {
      if (h(src.op(a, b)) != tgt.op(h(a), h(b))) return false;
    }
  }
  return true;
}

/// A subset of a group, kept sorted. Which group it lives in is implicit.
struct Subgroup {
  std::vector<Elem> members;

  static Subgroup of(std::vector<Elem> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return Subgroup{std::move(elems)};
  }

  bool contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }
  std::size_t size() const noexcept { return members.size(); }

  /// Position of `x` in `members`.
  Elem index_of(Elem x) const {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    return static_cast<Elem>(it - members.begin());
  }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

inline bool is_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

inline Subgroup whole_group(const GroupTable& g) {
  return Subgroup{Hom::identity(g.order()).map};
}

inline Subgroup trivial_subgroup(const GroupTable& g) { return Subgroup{{g.identity()}}; }

inline ValidationReport validate_subgroup(const GroupTable& g, const Subgroup& h) {
  for (Elem x : h.members) {
    if (x >= g.order()) throw StructuralError("subgroup member out of range");
  }
  if (!std::is_sorted(h.members.begin(), h.members.end()) ||
      std::adjacent_find(h.members.begin(), h.members.end()) != h.members.end()) {
    throw StructuralError("subgroup members must be sorted and distinct");
  }
  ValidationReport r;
  if (!h.contains(g.identity())) r.add("identity", {g.identity()}, "0 is not a member");
  for (Elem a : h.members) {
    if (!h.contains(g.inv(a))) r.add("inverse", {a}, "-a is not a member");
    for (Elem b : h.members) {
      if (!h.contains(g.op(a, b))) r.add("closure", {a, b}, "a + b is not a member");
    }
  }
  return r;
}

/// Smallest subgroup containing `gens`.
inline Subgroup generated_subgroup(const GroupTable& g, const std::vector<Elem>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> queue{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.op(queue[i], s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return Subgroup::of(std::move(queue));
}

inline Subgroup kernel(const Hom& f, const GroupTable& target) {
  std::vector<Elem> k;
  for (Elem x = 0; x < f.map.size(); ++x) {
    if (f(x) == target.identity()) k.push_back(x);
  }
  return Subgroup{std::move(k)};
}

inline Subgroup image(const Hom& f) { return Subgroup::of(f.map); }

/// f(S) for a subset S of the source.
inline Subgroup image_of(const Hom& f, const Subgroup& s) {
  std::vector<Elem> v;
  v.reserve(s.size());
  for (Elem x : s.members) v.push_back(f(x));
  return Subgroup::of(std::move(v));
}

inline bool is_normal(const GroupTable& g, const Subgroup& n) {
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem m : n.members) {
      if (!n.contains(g.op(g.op(x, m), g.inv(x)))) return false;
    }
  }
  return true;
}

/// A subgroup re-indexed as a standalone table: element i is `members[i]`.
struct SubgroupEmbedding {
  GroupTable group;
  Hom inclusion;
};

inline SubgroupEmbedding embed_subgroup(const GroupTable& g, const Subgroup& h, std::string name) {
  const std::size_t k = h.size();
  std::vector<Elem> op(k * k);
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) {
      const Elem prod = g.op(h.members[i], h.members[j]);
      if (!h.contains(prod)) throw PreconditionError("subgroup", "subset is not closed under op");
      op[i * k + j] = h.index_of(prod);
    }
  }
  return {GroupTable(std::move(name), k, std::move(op)), Hom{h.members}};
}

/// G/N on cosets, each coset labelled by its smallest member; cosets are
/// numbered in increasing order of that label.
struct QuotientGroup {
  GroupTable group;
  Hom projection;
  std::vector<Elem> representatives;
};

inline QuotientGroup quotient_group(const GroupTable& g, const Subgroup& n, std::string name) {
  if (!is_normal(g, n)) throw PreconditionError("normal", "subgroup is not normal");
  std::vector<Elem> rep_of(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Elem best = x;
    for (Elem m : n.members) best = std::min(best, g.op(x, m));
    rep_of[x] = best;
  }
  std::vector<Elem> reps = rep_of;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  auto index = [&](Elem rep) {
    return static_cast<Elem>(std::lower_bound(reps.begin(), reps.end(), rep) - reps.begin());
  };
  Hom proj;
  proj.map.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) proj.map[x] = index(rep_of[x]);
  const std::size_t k = reps.size();
  std::vector<Elem> op(k * k);
  for (Elem i = 0; i < k; ++i) {
    for (Elem j = 0; j < k; ++j) op[i * k + j] = proj(g.op(reps[i], reps[j]));
  }
  return {GroupTable(std::move(name), k, std::move(op)), std::move(proj), std::move(reps)};
}

/// Relabels elements: new index of old element x is perm[x].
inline GroupTable relabel(const GroupTable& g, const Hom& perm) {
  const std::size_t n = g.order();
  const Hom back = inverse(perm);
  std::vector<Elem> op(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) op[a * n + b] = perm(g.op(back(a), back(b)));
  }
  return GroupTable(g.name(), n, std::move(op));
}

/// Permutation moving the identity to index 0 by swapping it with 0.
inline Hom identity_first(const GroupTable& g) {
  Hom p = Hom::identity(g.order());
  std::swap(p.map[0], p.map[g.identity()]);
  return p;
}

// ----------------------------------------------------------------------------
// Standard groups
// ----------------------------------------------------------------------------

inline GroupTable trivial_group() { return GroupTable(); }

inline GroupTable cyclic_group(std::size_t n) {
  std::vector<Elem> op(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) op[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return GroupTable("Z" + std::to_string(n), n, std::move(op));
}

/// (g, h) is element g * |H| + h.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<Elem> op(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      op[a * n + b] = static_cast<Elem>(g.op(a / m, b / m) * m + h.op(a % m, b % m));
    }
  }
  return GroupTable(g.name() + "x" + h.name(), n, std::move(op));
}

using Permutation = std::vector<Elem>;

/// Closure of `gens` under composition, identity first, then in breadth-first
/// order. op(p, q) = p ∘ q, so q acts first.
inline GroupTable permutation_group(std::string name, const std::vector<Permutation>& gens,
                                    std::vector<Permutation>* elements_out = nullptr) {
  if (gens.empty()) return GroupTable(std::move(name), 1, {0});
  const std::size_t points = gens.front().size();
  auto compose_perm = [](const Permutation& p, const Permutation& q) {
    Permutation r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<Permutation> elems{Hom::identity(points).map};
  std::map<Permutation, Elem> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Permutation p = compose_perm(elems[i], s);
      if (!index.count(p)) {
        index.emplace(p, static_cast<Elem>(elems.size()));
        elems.push_back(std::move(p));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> op(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) op[a * n + b] = index.at(compose_perm(elems[a], elems[b]));
  }
  if (elements_out) *elements_out = elems;
  return GroupTable(std::move(name), n, std::move(op));
}

/// S3 on points {0,1,2}: 0 = e, 1 = (0 1), 2 = (0 2), 3 = (1 2), 4 = (0 1 2),
/// 5 = (0 2 1).
inline GroupTable symmetric_group_3() {
  const std::vector<Permutation> elems{{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                       {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<Elem> op(36);
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) {
      Permutation r(3);
      for (std::size_t i = 0; i < 3; ++i) r[i] = elems[a][elems[b][i]];
      op[a * 6 + b] = static_cast<Elem>(std::find(elems.begin(), elems.end(), r) - elems.begin());
    }
  }
  return GroupTable("S3", 6, std::move(op));
}

/// Dihedral group of order 2n acting on the vertices of an n-gon.
inline GroupTable dihedral_group(std::size_t n) {
  Permutation rot(n), refl(n);
  for (Elem i = 0; i < n; ++i) {
    rot[i] = static_cast<Elem>((i + 1) % n);
    refl[i] = static_cast<Elem>((n - i) % n);
  }
  return permutation_group("D" + std::to_string(n), {rot, refl});
}

/// Q8 with 0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k.
inline GroupTable quaternion_group() {
  // unit product table over {1, i, j, k}: sign and unit
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<Elem> op(64);
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) {
      const int ua = static_cast<int>(a / 2), ub = static_cast<int>(b / 2);
      int sign = kSign[ua][ub] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      op[a * 8 + b] = static_cast<Elem>(kUnit[ua][ub] * 2 + (sign < 0 ? 1 : 0));
    }
  }
  return GroupTable("Q8", 8, std::move(op));
}

}  // namespace gxmod
