#include <catch2/catch_amalgamated.hpp>

#include "rigi/fp61.hpp"
#include "rigi/group.hpp"
#include "rigi/subgroup.hpp"

using namespace rigi;

namespace {

GroupElement el(const GroupTag& tag, int64_t x, int64_t y, int r = 0) {
  return GroupElement{tag, {x, y}, r};
}

bool same(const GroupElement& a, const GroupElement& b) {
  return a.t == b.t && a.r == b.r;
}

GroupElement random_element(const GroupTag& tag, SplitMix64& rng) {
  GroupElement x{tag, {0, 0}, 0};
  if (tag.kind == GroupKind::Z2 || tag.kind == GroupKind::Gamma) {
    x.t = {int64_t(rng.range(-5, 5)), int64_t(rng.range(-5, 5))};
  } else if (tag.kind == GroupKind::Z) {
    x.t = {int64_t(rng.range(-5, 5)), 0};
  }
  if (tag.kind == GroupKind::Cyclic || tag.kind == GroupKind::Reflection ||
      tag.kind == GroupKind::Gamma)
    x.r = (int)rng.below(uint64_t(tag.k));
  return x;
}

}  // namespace

TEST_CASE("rotation matrices have exact order k") {
  for (int k : {2, 3, 4, 6}) {
    Mat2 acc = rotation_matrix(k);
    for (int j = 1; j < k; ++j) {
      INFO("k=" << k << " power " << j);
      bool is_id = acc[0] == 1 && acc[1] == 0 && acc[2] == 0 && acc[3] == 1;
      REQUIRE_FALSE(is_id);
      acc = mat_mul(acc, rotation_matrix(k));
    }
    REQUIRE(acc[0] == 1);
    REQUIRE(acc[1] == 0);
    REQUIRE(acc[2] == 0);
    REQUIRE(acc[3] == 1);
  }
}

TEST_CASE("compose: worked examples") {
  GroupTag z2{GroupKind::Z2, 0};
  CHECK(same(compose(el(z2, 1, 0), el(z2, 0, 1)), el(z2, 1, 1)));

  GroupTag g4{GroupKind::Gamma, 4};
  // rotation part 1 acts by [[0,-1],[1,0]] on the second translation
  CHECK(same(compose(el(g4, 1, 0, 1), el(g4, 1, 0, 0)), el(g4, 1, 1, 1)));

  GroupTag g2{GroupKind::Gamma, 2};
  CHECK(compose(el(g2, 0, 0, 1), el(g2, 0, 0, 1)).is_identity());
}

TEST_CASE("invert: worked examples") {
  GroupTag z2{GroupKind::Z2, 0};
  CHECK(same(invert(el(z2, 2, -1)), el(z2, -2, 1)));

  GroupTag g3{GroupKind::Gamma, 3};
  GroupElement a = el(g3, 1, 0, 1);
  CHECK(compose(a, invert(a)).is_identity());
  CHECK(invert(a).r == 2);

  GroupTag c5{GroupKind::Cyclic, 5};
  CHECK(invert(el(c5, 0, 0, 2)).r == 3);
}

TEST_CASE("compose rejects mismatched tags") {
  GroupTag z2{GroupKind::Z2, 0};
  GroupTag c3{GroupKind::Cyclic, 3};
  REQUIRE_THROWS(compose(el(z2, 1, 0), el(c3, 0, 0, 1)));
}

TEST_CASE("group axioms on random triples") {
  std::vector<GroupTag> tags{{GroupKind::Z2, 0},     {GroupKind::Z, 0},
                             {GroupKind::Cyclic, 4}, {GroupKind::Reflection, 2},
                             {GroupKind::Gamma, 3},  {GroupKind::Gamma, 6}};
  SplitMix64 rng(0x9a0e5);
  for (const auto& tag : tags) {
    for (int it = 0; it < 10000; ++it) {
      GroupElement a = random_element(tag, rng), b = random_element(tag, rng),
                   c = random_element(tag, rng);
      REQUIRE(same(compose(compose(a, b), c), compose(a, compose(b, c))));
      REQUIRE(same(compose(a, identity(tag)), a));
      REQUIRE(same(compose(identity(tag), a), a));
      REQUIRE(compose(a, invert(a)).is_identity());
      REQUIRE(compose(invert(a), a).is_identity());
    }
  }
}

TEST_CASE("lattice_rank basics") {
  CHECK(lattice_rank({}) == 0);
  CHECK(lattice_rank({{1, 0}, {2, 0}}) == 1);
  CHECK(lattice_rank({{1, 0}, {1, 1}}) == 2);
  CHECK(lattice_rank({{0, 0}}) == 0);
  CHECK(lattice_rank({{-3, 6}, {1, -2}}) == 1);
}

TEST_CASE("translation_subgroup: worked examples") {
  GroupTag g2{GroupKind::Gamma, 2};
  SubgroupDescription two_rotations{g2, {el(g2, 0, 0, 1), el(g2, 1, 0, 1)}};
  SubgroupDescription lam = translation_subgroup(two_rotations);
  for (const auto& x : lam.generators) CHECK(x.r == 0);
  CHECK(translation_rank(lam) == 1);

  GroupTag g3{GroupKind::Gamma, 3};
  SubgroupDescription one_rotation{g3, {el(g3, 0, 0, 1)}};
  CHECK(translation_subgroup(one_rotation).is_trivial());

  GroupTag z2{GroupKind::Z2, 0};
  SubgroupDescription trans{z2, {el(z2, 1, 0)}};
  SubgroupDescription same_set = translation_subgroup(trans);
  REQUIRE(same_set.generators.size() == 1);
  CHECK(same(same_set.generators[0], el(z2, 1, 0)));
}

TEST_CASE("translation_subgroup output is rotation-free, rank conjugation-invariant") {
  SplitMix64 rng(0x77aa);
  for (int k : {2, 3, 4, 6}) {
    GroupTag tag{GroupKind::Gamma, k};
    for (int it = 0; it < 200; ++it) {
      std::vector<GroupElement> gens;
      int sz = 1 + (int)rng.below(2);
      for (int i = 0; i < sz; ++i) {
        GroupElement x{tag,
                       {int64_t(rng.range(-2, 2)), int64_t(rng.range(-2, 2))},
                       (int)rng.below(uint64_t(k))};
        gens.push_back(x);
      }
      SubgroupDescription sub{tag, gens};
      SubgroupDescription lam = translation_subgroup(sub);
      for (const auto& x : lam.generators) REQUIRE(x.r == 0);

      GroupElement h = random_element(tag, rng);
      std::vector<GroupElement> conj;
      for (const auto& x : gens) conj.push_back(compose(compose(h, x), invert(h)));
      SubgroupDescription lam2 = translation_subgroup({tag, conj});
      REQUIRE(translation_rank(lam) == translation_rank(lam2));
    }
  }
}

TEST_CASE("teich_restricted: worked examples") {
  GroupTag z2{GroupKind::Z2, 0};
  CHECK(teich_restricted(z2, {z2, {el(z2, 1, 0), el(z2, 0, 1)}}) == 3);
  CHECK(teich_restricted(z2, {z2, {el(z2, 2, 0)}}) == 1);
  CHECK(teich_restricted(z2, {z2, {}}) == 0);

  GroupTag g3{GroupKind::Gamma, 3};
  CHECK(teich_restricted(g3, {g3, {el(g3, 1, 0)}}) == 1);
  CHECK(teich_restricted(g3, {g3, {}}) == 0);

  GroupTag g2{GroupKind::Gamma, 2};
  CHECK(teich_restricted(g2, {g2, {el(g2, 1, 0), el(g2, 0, 1)}}) == 3);
  CHECK(teich_restricted(g2, {g2, {el(g2, 1, 0)}}) == 1);

  GroupTag z{GroupKind::Z, 0};
  CHECK(teich_restricted(z, {z, {el(z, 1, 0)}}) == 1);
  CHECK(teich_restricted(z, {z, {}}) == 0);

  GroupTag c3{GroupKind::Cyclic, 3};
  CHECK(teich_restricted(c3, {c3, {}}) == 0);
  GroupTag refl{GroupKind::Reflection, 2};
  CHECK(teich_restricted(refl, {refl, {}}) == 0);
}

TEST_CASE("teich_restricted rejects non-translation input") {
  GroupTag g3{GroupKind::Gamma, 3};
  REQUIRE_THROWS(teich_restricted(g3, {g3, {el(g3, 0, 0, 1)}}));
}

TEST_CASE("cent_dim: worked examples") {
  GroupTag z2{GroupKind::Z2, 0};
  CHECK(cent_dim({z2, {}}) == 3);
  CHECK(cent_dim({z2, {el(z2, 0, 0)}}) == 3);
  CHECK(cent_dim({z2, {el(z2, 1, 0)}}) == 2);

  GroupTag g4{GroupKind::Gamma, 4};
  CHECK(cent_dim({g4, {el(g4, 0, 0, 1), el(g4, 1, 0)}}) == 0);
  CHECK(cent_dim({g4, {el(g4, 1, 0)}}) == 2);
  CHECK(cent_dim({g4, {el(g4, 0, 0, 1)}}) == 1);
  CHECK(cent_dim({g4, {}}) == 3);

  GroupTag c3{GroupKind::Cyclic, 3};
  CHECK(cent_dim({c3, {el(c3, 0, 0, 1)}}) == 1);
  CHECK(cent_dim({c3, {}}) == 3);

  GroupTag refl{GroupKind::Reflection, 2};
  CHECK(cent_dim({refl, {el(refl, 0, 0, 1)}}) == 1);

  GroupTag z{GroupKind::Z, 0};
  CHECK(cent_dim({z, {el(z, 2, 0)}}) == 2);
}

TEST_CASE("element ordering is lexicographic in (t, r)") {
  GroupTag g4{GroupKind::Gamma, 4};
  CHECK(element_less(el(g4, -1, 5, 3), el(g4, 0, 0, 0)));
  CHECK(element_less(el(g4, 0, 0, 1), el(g4, 0, 1, 0)));
  CHECK(element_less(el(g4, 0, 0, 1), el(g4, 0, 0, 2)));
  CHECK_FALSE(element_less(el(g4, 0, 0, 1), el(g4, 0, 0, 1)));
}

TEST_CASE("power matches repeated composition") {
  GroupTag g6{GroupKind::Gamma, 6};
  GroupElement a = el(g6, 1, -1, 1);
  GroupElement acc = identity(g6);
  for (int e = 0; e <= 8; ++e) {
    CHECK(same(power(a, e), acc));
    acc = compose(acc, a);
  }
  CHECK(same(power(a, -3), invert(power(a, 3))));
  CHECK(power(a, 6).is_identity());  // order-6 rotation with trivial lattice part
}

TEST_CASE("tag validation") {
  REQUIRE_THROWS(validate_tag(GroupTag{GroupKind::Gamma, 5}));
  REQUIRE_THROWS(validate_tag(GroupTag{GroupKind::Cyclic, 1}));
  REQUIRE_NOTHROW(validate_tag(GroupTag{GroupKind::Cyclic, 5}));
  REQUIRE_NOTHROW(validate_tag(GroupTag{GroupKind::Gamma, 6}));
}
