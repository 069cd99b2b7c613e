#include <catch2/catch_amalgamated.hpp>

#include <optional>

#include "rigi/corpus.hpp"
#include "rigi/pebble.hpp"
#include "rigi/sparsity.hpp"

using namespace rigi;

namespace {

const GroupTag kZ2{GroupKind::Z2, 0};
const GroupTag kZ{GroupKind::Z, 0};

ColoredGraph make(const GroupTag& tag, int n,
                  std::vector<std::tuple<int, int, int64_t, int64_t, int>> edges) {
  ColoredGraph g;
  g.tag = tag;
  g.n = n;
  for (auto [u, v, x, y, r] : edges) g.edges.push_back({u, v, {tag, {x, y}, r}});
  return g;
}

uint32_t full_mask(const ColoredGraph& g) { return (uint32_t(1) << g.m()) - 1; }

}  // namespace

TEST_CASE("f_general: worked examples") {
  ColoredGraph loop = make(kZ2, 1, {{0, 0, 1, 0, 0}});
  CHECK(f_general(loop, 0b1) == 1);  // 2 + 1 - 2

  CHECK(f_general(loop, 0) == 0);  // empty subset

  ColoredGraph tri = make(kZ2, 3, {{0, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {0, 2, 0, 0, 0}});
  CHECK(f_general(tri, 0b111) == 3);  // 6 + 0 - 3, the Maxwell-Laman bound
}

TEST_CASE("f_z2 and g_z2 closed forms") {
  CHECK(f_z2(1, 2, 0, 1) == 3);
  CHECK(f_z2(3, 0, 1, 0) == 3);
  CHECK(g_z2(3, 0, 1) == 3);
  CHECK(f_z2(2, 2, 0, 2) == 3);
  CHECK(g_z2(2, 2, 2) == 3);
}

TEST_CASE("check_family: worked examples") {
  ColoredGraph tight =
      make(kZ2, 1, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 1, 0}});
  SparsityReport rep = check_family(tight, {Family::ColoredLaman});
  CHECK(rep.verdict == Verdict::Tight);

  ColoredGraph bad = make(kZ2, 1, {{0, 0, 1, 0, 0}, {0, 0, 2, 0, 0}});
  rep = check_family(bad, {Family::ColoredLaman});
  REQUIRE(rep.verdict == Verdict::Violating);
  CHECK(rep.witness_mask == 0b11);  // both collinear loops: rank 1, bound 1 < 2
  CHECK(rep.witness_bound == 1);

  GroupTag c3{GroupKind::Cyclic, 3};
  ColoredGraph cone = make(c3, 1, {{0, 0, 0, 0, 1}});
  CHECK(check_family(cone, {Family::ConeLaman}).verdict == Verdict::Tight);
}

TEST_CASE("kl family: textbook examples") {
  // K4 under (2,3): violating, unique circuit = all of K4
  ColoredGraph k4 = make(kZ2, 4,
                         {{0, 1, 0, 0, 0},
                          {0, 2, 0, 0, 0},
                          {0, 3, 0, 0, 0},
                          {1, 2, 0, 0, 0},
                          {1, 3, 0, 0, 0},
                          {2, 3, 0, 0, 0}});
  CHECK(check_family(k4, {Family::KL, 2, 3}).verdict == Verdict::Violating);
  std::vector<uint32_t> circuits = kl_circuits(k4, 2, 3);
  REQUIRE(circuits.size() == 1);
  CHECK(circuits[0] == full_mask(k4));

  ColoredGraph tri = make(kZ2, 3, {{0, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {0, 2, 0, 0, 0}});
  CHECK(check_family(tri, {Family::KL, 2, 3}).verdict == Verdict::Tight);
  CHECK(check_family(tri, {Family::KL, 2, 2}).verdict == Verdict::Sparse);
}

TEST_CASE("circuits_22_structure: worked examples") {
  ColoredGraph loop = make(kZ2, 1, {{0, 0, 0, 0, 0}});
  Circuits22 s = circuits_22_structure(loop);
  CHECK(s.spanning_22);
  REQUIRE(s.circuits.size() == 1);
  CHECK(s.circuits[0] == 0b1);

  // two loops joined by a path with a doubled edge: n=3, m=5, (2,1)-tight
  ColoredGraph two = make(kZ2, 3,
                          {{0, 0, 0, 0, 0},
                           {2, 2, 0, 0, 0},
                           {0, 1, 0, 0, 0},
                           {0, 1, 0, 0, 0},
                           {1, 2, 0, 0, 0}});
  s = circuits_22_structure(two);
  CHECK_FALSE(s.spanning_22);
  REQUIRE(s.circuits.size() == 2);
  CHECK(s.circuits[0] == 0b00001);
  CHECK(s.circuits[1] == 0b00010);

  ColoredGraph not21 = make(kZ2, 2, {{0, 1, 0, 0, 0}});
  REQUIRE_THROWS(circuits_22_structure(not21));
}

TEST_CASE("cylinder_vs_cone: worked examples") {
  ColoredGraph loops12 = make(kZ, 1, {{0, 0, 1, 0, 0}, {0, 0, 2, 0, 0}});
  CylinderConeCheck d = cylinder_vs_cone_detail(loops12);
  CHECK(d.agree());
  CHECK_FALSE(d.cylinder_tight);

  ColoredGraph loop1 = make(kZ, 1, {{0, 0, 1, 0, 0}});
  d = cylinder_vs_cone_detail(loop1);
  CHECK(d.agree());
  CHECK(d.cylinder_tight);
  CHECK(d.cone_tight);
  CHECK(d.spanning_22);
  CHECK(cylinder_vs_cone(loop1));

  ColoredGraph triple =
      make(kZ, 2, {{0, 1, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}});
  CHECK(cylinder_vs_cone_detail(triple).agree());
}

TEST_CASE("unit_area_characterization: worked examples") {
  ColoredGraph two = make(kZ2, 1, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
  UnitAreaCheck d = unit_area_characterization_detail(two);
  CHECK(d.agree());
  CHECK(d.characterization);
  CHECK(unit_area_characterization(two));

  ColoredGraph three =
      make(kZ2, 1, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 1, 0}});
  CHECK_FALSE(unit_area_characterization(three));

  ColoredGraph tri = make(kZ2, 3, {{0, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {0, 2, 0, 0, 0}});
  CHECK_FALSE(unit_area_characterization(tri));
}

TEST_CASE("ross_loop_equivalence: worked examples") {
  ColoredGraph bare = make(kZ2, 1, {});
  RossCheck d = ross_loop_equivalence_detail(bare);
  CHECK(d.all_agree());
  CHECK(d.ross_tight);
  CHECK(ross_loop_equivalence(bare));

  ColoredGraph loop = make(kZ2, 1, {{0, 0, 1, 0, 0}});
  d = ross_loop_equivalence_detail(loop);
  CHECK(d.all_agree());
  CHECK_FALSE(d.ross_tight);

  ColoredGraph par = make(kZ2, 2, {{0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}});
  d = ross_loop_equivalence_detail(par);
  CHECK(d.all_agree());
  CHECK(d.ross_tight);

  ColoredGraph empty;
  empty.tag = kZ2;
  empty.n = 0;
  REQUIRE_THROWS(ross_loop_equivalence_detail(empty));
}

TEST_CASE("rank2_tight_subgraph: worked examples") {
  ColoredGraph three =
      make(kZ2, 1, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 1, 0}});
  auto found = rank2_tight_subgraph(three);
  REQUIRE(found.has_value());
  CHECK(*found == 0b111);

  CHECK_FALSE(rank2_tight_subgraph(make(kZ2, 1, {{0, 0, 1, 0, 0}})).has_value());
  CHECK_FALSE(
      rank2_tight_subgraph(make(kZ2, 1, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}})).has_value());
}

TEST_CASE("tight counts per family") {
  CHECK(tight_count({Family::ColoredLaman}, kZ2, 4) == 9);
  CHECK(tight_count({Family::CylinderLaman}, kZ, 4) == 7);
  CHECK(tight_count({Family::ConeLaman}, {GroupKind::Cyclic, 3}, 4) == 7);
  CHECK(tight_count({Family::Ross}, kZ2, 4) == 6);
  CHECK(tight_count({Family::UnitAreaLaman}, kZ2, 4) == 8);
  CHECK(tight_count({Family::GammaLaman}, {GroupKind::Gamma, 2}, 4) == 11);
  CHECK(tight_count({Family::GammaLaman}, {GroupKind::Gamma, 3}, 4) == 9);
  CHECK(tight_count({Family::KL, 2, 1}, kZ2, 4) == 7);
}

TEST_CASE("family/tag mismatch is rejected") {
  ColoredGraph zgraph = make(kZ, 1, {{0, 0, 1, 0, 0}});
  REQUIRE_THROWS(check_family(zgraph, {Family::ColoredLaman}));
  ColoredGraph z2graph = make(kZ2, 1, {{0, 0, 1, 0, 0}});
  REQUIRE_THROWS(check_family(z2graph, {Family::CylinderLaman}));
}

TEST_CASE("pebble game matches brute force on random plain graphs") {
  SplitMix64 rng(0x9e37);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + (int)rng.below(5);
    int m = (int)rng.below(8);
    ColoredGraph g;
    g.tag = kZ2;
    g.n = n;
    std::vector<PlainEdge> plain;
    for (int i = 0; i < m; ++i) {
      int u = (int)rng.below(uint64_t(n)), v = (int)rng.below(uint64_t(n));
      g.edges.push_back({std::min(u, v), std::max(u, v), {kZ2, {0, 0}, 0}});
      plain.push_back({std::min(u, v), std::max(u, v)});
    }
    SubsetScanner sc(g);
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 3}, {2, 2}, {2, 1}}) {
      bool brute = true;
      for (uint32_t mask = 1; mask < (uint32_t(1) << m) && brute; ++mask) {
        SubgraphCounts c = sc.plain_counts(mask);
        // plain (k,l)-sparsity compares every subset against k n' - l
        if (c.m_prime > int64_t(k) * c.n_prime - l) brute = false;
      }
      REQUIRE(pebble_sparse(n, plain, k, l) == brute);
    }
  }
}

TEST_CASE("colored-Laman on trivially-colored graphs reduces to plain (2,3)") {
  SplitMix64 rng(0x1234);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + (int)rng.below(5);
    int m = (int)rng.below(8);
    ColoredGraph g;
    g.tag = kZ2;
    g.n = n;
    std::vector<PlainEdge> plain;
    for (int i = 0; i < m; ++i) {
      int u = (int)rng.below(uint64_t(n)), v = (int)rng.below(uint64_t(n));
      g.edges.push_back({u, v, {kZ2, {0, 0}, 0}});
      plain.push_back({u, v});
    }
    REQUIRE(family_sparse(g, {Family::ColoredLaman}) == pebble_sparse(n, plain, 2, 3));
  }
}

TEST_CASE("removing an edge preserves sparsity") {
  SplitMix64 rng(0xfeed);
  int kept = 0;
  for (int it = 0; it < 400 && kept < 80; ++it) {
    int n = 1 + (int)rng.below(3);
    int m = 1 + (int)rng.below(6);
    ColoredGraph g = random_graph(kZ2, n, m, 1, rng);
    if (!family_sparse(g, {Family::ColoredLaman})) continue;
    ++kept;
    ColoredGraph h = g;
    h.edges.erase(h.edges.begin() + (int)rng.below(uint64_t(h.m())));
    REQUIRE(family_sparse(h, {Family::ColoredLaman}));
  }
  REQUIRE(kept > 10);
}

TEST_CASE("violating witness re-evaluates to a violation") {
  SplitMix64 rng(0xdead);
  int seen = 0;
  for (int it = 0; it < 400 && seen < 50; ++it) {
    ColoredGraph g = random_graph(kZ2, 2, 4 + (int)rng.below(2), 1, rng);
    SparsityReport rep = check_family(g, {Family::ColoredLaman});
    if (rep.verdict != Verdict::Violating) continue;
    ++seen;
    SubsetScanner sc(g);
    SubgraphCounts c = sc.counts(rep.witness_mask);
    REQUIRE(c.m_prime > family_bound(c, {Family::ColoredLaman}));
    REQUIRE(family_bound(c, {Family::ColoredLaman}) == rep.witness_bound);
  }
  REQUIRE(seen > 5);
}

TEST_CASE("f_general specializations agree with tag-specific bounds") {
  SplitMix64 rng(0xaa55);
  // Z: bound is 2n' + rank - 2*comps (cylinder count)
  for (int it = 0; it < 100; ++it) {
    ColoredGraph g = random_graph(kZ, 1 + (int)rng.below(3), (int)rng.below(6), 2, rng);
    if (g.m() == 0) continue;
    SubsetScanner sc(g);
    uint32_t mask = (uint32_t)rng.below(uint64_t(1) << g.m());
    if (!mask) continue;
    SubgraphCounts c = sc.counts(mask);
    REQUIRE(f_general(g, mask) == family_bound(c, {Family::CylinderLaman}));
  }
  // Z/kZ: bound is 2n' - 3c0 - c_rot (cone count)
  GroupTag c5{GroupKind::Cyclic, 5};
  for (int it = 0; it < 100; ++it) {
    ColoredGraph g = random_graph(c5, 1 + (int)rng.below(3), (int)rng.below(6), 0, rng);
    if (g.m() == 0) continue;
    SubsetScanner sc(g);
    uint32_t mask = (uint32_t)rng.below(uint64_t(1) << g.m());
    if (!mask) continue;
    SubgraphCounts c = sc.counts(mask);
    REQUIRE(f_general(g, mask) == family_bound(c, {Family::ConeLaman}));
  }
}
