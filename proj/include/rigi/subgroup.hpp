#pragma once

// Finitely generated subgroups Gamma' of a symmetry group, described by a
// generator list, and the two integer invariants of the rigidity counts:
//
//   teich_restricted  — dimension of the space of deformations of the
//                       translation representation that respect the subgroup
//                       (restricted Teichmueller dimension),
//   cent_dim          — dimension of the subgroup's centralizer inside the
//                       Euclidean isometries acting on such representations.
//
// Both depend only on coarse features of Gamma': whether it contains a
// rotation, and the rank of its translation lattice
// Lambda(Gamma') = Gamma' ∩ translations.

#include <stdexcept>
#include <vector>

#include "group.hpp"

namespace rigi {

struct SubgroupDescription {
  GroupTag tag;
  std::vector<GroupElement> generators;

  bool is_trivial() const {
    for (const auto& g : generators)
      if (!g.is_identity()) return false;
    return true;
  }
  // Subgroup contains a non-translation element iff some generator has one:
  // rotation parts compose additively mod k.
  bool contains_rotation() const {
    for (const auto& g : generators)
      if (g.r != 0) return true;
    return false;
  }
};

namespace detail {

inline int64_t gcd64(int64_t a, int64_t b) {
  while (b) { int64_t t = a % b; a = b; b = t; }
  return a < 0 ? -a : a;
}

// A word u in the generators whose rotation part is d = gcd(k, r_1, ..., r_s),
// found by brute force over small exponent combinations (k <= 6, few
// generators with nonzero rotation part, so the search space is tiny).
inline GroupElement word_with_rotation_part(const GroupTag& tag,
                                            const std::vector<GroupElement>& rot_gens,
                                            int d) {
  int k = tag.rotation_order();
  std::vector<int> exps(rot_gens.size(), 0);
  while (true) {
    int64_t sum = 0;
    for (size_t i = 0; i < rot_gens.size(); ++i) sum += (int64_t)exps[i] * rot_gens[i].r;
    if (((sum % k) + k) % k == (d % k)) {
      GroupElement w = identity(tag);
      for (size_t i = 0; i < rot_gens.size(); ++i)
        w = compose(w, power(rot_gens[i], exps[i]));
      return w;
    }
    size_t i = 0;
    while (i < exps.size() && exps[i] == k - 1) exps[i++] = 0;
    if (i == exps.size()) throw std::logic_error("no word with required rotation part");
    ++exps[i];
  }
}

}  // namespace detail

/*
 * Generators of Lambda(Gamma') = Gamma' ∩ (translation subgroup), via the
 * Reidemeister–Schreier rewriting for the index-q inclusion
 * Lambda(Gamma') <= Gamma':
 *
 *   d = gcd(k, rotation parts of the generators); the rotation-part image is
 *   the cyclic group <d> of order q = k/d, with coset transversal
 *   {u^0, u^1, ..., u^(q-1)} for any word u of rotation part d. The Schreier
 *   generators  u^i * g * u^(-j),  with j chosen so the product is a pure
 *   translation, generate the kernel exactly. Generators that are already
 *   translations pass through unchanged (d = k, q = 1 when no rotations).
 */
inline SubgroupDescription translation_subgroup(const SubgroupDescription& sub) {
  const GroupTag& tag = sub.tag;
  switch (tag.kind) {
    case GroupKind::Z2:
    case GroupKind::Z:
      return sub;  // everything is a translation already
    case GroupKind::Cyclic:
    case GroupKind::Reflection:
      return {tag, {}};  // no translations exist
    case GroupKind::Gamma: break;
  }

  int k = tag.k;
  std::vector<GroupElement> gens;
  for (const auto& g : sub.generators)
    if (!g.is_identity()) gens.push_back(g);

  int64_t d = k;
  std::vector<GroupElement> rot_gens;
  for (const auto& g : gens)
    if (g.r != 0) {
      d = detail::gcd64(d, g.r);
      rot_gens.push_back(g);
    }
  int q = k / (int)d;

  GroupElement u = q == 1 ? identity(tag)
                          : detail::word_with_rotation_part(tag, rot_gens, (int)d);

  std::vector<GroupElement> out;
  auto push_unique = [&](const GroupElement& w) {
    if (w.is_identity()) return;
    for (const auto& o : out)
      if (o == w) return;
    out.push_back(w);
  };

  std::vector<GroupElement> u_pow(q + 1, identity(tag));
  for (int i = 1; i <= q; ++i) u_pow[i] = compose(u_pow[i - 1], u);

  for (int i = 0; i < q; ++i) {
    for (const auto& g : gens) {
      int j = (int)(((int64_t)i * d + g.r) % k / d);
      GroupElement w = compose(compose(u_pow[i], g), invert(u_pow[j]));
      if (w.r != 0) throw std::logic_error("Schreier generator is not a translation");
      push_unique(w);
    }
  }
  return {tag, out};
}

inline int translation_rank(const SubgroupDescription& lambda) {
  std::vector<Vec2> ts;
  for (const auto& g : lambda.generators) {
    if (g.r != 0) throw std::invalid_argument("translation_rank: non-translation generator");
    ts.push_back(g.t);
  }
  return lattice_rank(ts);
}

// Restricted Teichmueller dimension of the ambient group relative to the
// translation lattice `lambda` (which must consist of translations only).
inline int teich_restricted(const GroupTag& tag, const SubgroupDescription& lambda) {
  int rank = translation_rank(lambda);  // validates purity
  switch (tag.kind) {
    case GroupKind::Z2: return rank >= 1 ? 2 * rank - 1 : 0;
    case GroupKind::Z: return rank;  // 0 or 1
    case GroupKind::Cyclic:
    case GroupKind::Reflection: return 0;
    case GroupKind::Gamma:
      if (tag.k == 2) return rank >= 1 ? 2 * rank - 1 : 0;
      return rank >= 1 ? 1 : 0;  // k = 3, 4, 6: scale only
  }
  return 0;
}

// Dimension of the centralizer of the subgroup among euclidean motions:
// 3 for the trivial subgroup (full isometry group), 2 when only translations
// occur (translations centralize translations), 1 when rotations occur but no
// translations (rotations about the fixed point), 0 for a mix.
inline int cent_dim(const SubgroupDescription& sub) {
  switch (sub.tag.kind) {
    case GroupKind::Z2:
    case GroupKind::Z:
      return sub.is_trivial() ? 3 : 2;
    case GroupKind::Cyclic:
    case GroupKind::Reflection:
      return sub.is_trivial() ? 3 : 1;
    case GroupKind::Gamma: {
      if (sub.is_trivial()) return 3;
      bool rot = sub.contains_rotation();
      if (!rot) return 2;
      bool lambda_nontrivial = !translation_subgroup(sub).is_trivial();
      return lambda_nontrivial ? 0 : 1;
    }
  }
  return 0;
}

}  // namespace rigi
