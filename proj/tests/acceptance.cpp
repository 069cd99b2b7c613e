// Acceptance gate: ten independent checks, one result line each on stdout,
// nonzero exit if any check fails. Each check pins its corpus, its seed, and
// a wall-clock budget; failing reports are dumped as JSON on stderr for
// replay.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "rigi/verify.hpp"

using namespace rigi;

namespace {

constexpr uint64_t kSeed = kDefaultSeed;
constexpr int kTrials = 3;

const GroupTag kZ2Tag{GroupKind::Z2, 0};

// visit every multiset of candidate edges of size <= max_m, no dedup
void raw_multisets(const GroupTag& tag, int n, const std::vector<Edge>& cands,
                   int max_m, const GraphSink& sink) {
  ColoredGraph g;
  g.tag = tag;
  g.n = n;
  for (int m = 0; m <= max_m; ++m) {
    g.edges.resize(m);
    for_each_multiset((int)cands.size(), m, [&](const std::vector<int>& idx) {
      for (int i = 0; i < m; ++i) g.edges[i] = cands[idx[i]];
      sink(g);
    });
  }
}

// n = 3 over the {0,1}^2 color box, m <= 7: all 24 candidate edges kept,
// including loops whose color inverse falls outside the box
GraphStream tier_unit_box() {
  return [](const GraphSink& sink) {
    std::vector<GroupElement> colors;
    for (int64_t x = 0; x <= 1; ++x)
      for (int64_t y = 0; y <= 1; ++y) colors.push_back({kZ2Tag, {x, y}, 0});
    std::vector<Edge> cands;
    for (int u = 0; u < 3; ++u)
      for (const auto& c : colors) cands.push_back({u, u, c});
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v)
        for (const auto& c : colors) cands.push_back({u, v, c});
    raw_multisets(kZ2Tag, 3, cands, 7, sink);
  };
}

// n = 3 over the full [-1,1]^2 box, m <= 4
GraphStream tier_small_m() {
  return [](const GraphSink& sink) {
    std::vector<Edge> cands = edge_candidates(kZ2Tag, 3, 1);
    raw_multisets(kZ2Tag, 3, cands, 4, sink);
  };
}

// n = 3 over the full [-1,1]^2 box, m <= 7, seeded random draws
GraphStream tier_random(int count) {
  return [count](const GraphSink& sink) {
    SplitMix64 rng(SplitMix64(kSeed).split(0x7143));
    for (int i = 0; i < count; ++i)
      sink(random_graph(kZ2Tag, 3, (int)rng.below(8), 1, rng));
  };
}

GraphStream cylinder_corpus() {
  return [](const GraphSink& sink) {
    CorpusSpec spec;
    spec.tag = {GroupKind::Z, 0};
    spec.max_n = 3;
    spec.max_m = 5;
    spec.color_bound = 2;
    for_each_corpus_graph(spec, sink);
  };
}

GraphStream chain(std::vector<GraphStream> parts) {
  return [parts = std::move(parts)](const GraphSink& sink) {
    for (const auto& p : parts) p(sink);
  };
}

struct Outcome {
  bool pass = true;
  int64_t cases = 0;
  int64_t failures = 0;
  double secs = 0;
  std::string detail;
};

void fold(Outcome& o, const VerificationReport& r) {
  o.cases += r.tested;
  o.failures += r.failure_count;
  o.secs += r.seconds;
  if (!r.ok()) {
    o.pass = false;
    o.detail += " [" + r.id + ": " + std::to_string(r.failure_count) + " failures]";
    std::fprintf(stderr, "%s\n", verification_report_to_json(r).dump().c_str());
  }
}

int finish(int id, const char* what, Outcome o, double limit) {
  if (o.secs > limit) {
    o.pass = false;
    o.detail += " [over time budget]";
  }
  std::printf("criterion %2d: %s  %-58s cases %-9lld failures %-4lld %7.1fs / %.0fs%s\n",
              id, o.pass ? "PASS" : "FAIL", what, (long long)o.cases,
              (long long)o.failures, o.secs, limit, o.detail.c_str());
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

}  // namespace

int main() {
  int failed = 0;

  // The exhaustive small tier is reused by most checks; build it once.
  CorpusSpec small;
  small.tag = kZ2Tag;
  small.max_n = 2;
  small.max_m = 5;
  small.color_bound = 1;
  std::vector<ColoredGraph> t1 = corpus(small);

  // 1. translation-lattice and centralizer dimension tables, exhaustively
  //    over generator sets with coordinates in [-2,2]
  {
    Outcome o;
    fold(o, verify_teich_cent_tables());
    failed += finish(1, "symmetry-group dimension tables (teich/cent)", o, 1);
  }

  // 2. the two sparsity counts accept exactly the same graphs
  {
    Outcome o;
    fold(o, verify_z2_sparsity_equiv(
                chain({stream_of(t1), tier_unit_box(), tier_small_m(), tier_random(100000)})));
    failed += finish(2, "two-sided sparsity count equivalence over Z^2 corpus", o, 60);
  }

  // 3. fixed-lattice tightness == tightness after pinning loops, both
  //    combinatorially and through the rank oracle
  {
    Outcome o;
    fold(o, verify_ross_by_adding(
                chain({stream_of(t1), tier_unit_box(), tier_small_m(), tier_random(100000)})));
    fold(o, verify_fixed_lattice_2(
                chain({stream_of(t1), tier_small_m(), tier_random(100000)}), kTrials, kSeed));
    failed += finish(3, "loop-pinning equivalence, combinatorial and oracle", o, 300);
  }

  // 4. oracle rigid verdict == spanning-tight verdict, all five variants,
  //    >= 500 graphs each
  {
    Outcome o;
    struct Part {
      const char* id;
      GraphStream stream;
      Variant variant;
      FamilyTag fam;
    };
    std::vector<Part> parts;
    parts.push_back({"oracle-periodic", stream_of(t1), Variant::Periodic,
                     {Family::ColoredLaman}});
    parts.push_back({"oracle-cylinder", cylinder_corpus(), Variant::Cylinder,
                     {Family::CylinderLaman}});
    parts.push_back({"oracle-fixed-lattice", stream_of(t1), Variant::FixedLattice,
                     {Family::Ross}});
    parts.push_back({"oracle-unit-area", stream_of(t1), Variant::UnitArea,
                     {Family::UnitAreaLaman}});
    parts.push_back({"oracle-fixed-angle", stream_of(t1), Variant::FixedAngle,
                     {Family::UnitAreaLaman}});
    for (const auto& p : parts) {
      VerificationReport r =
          verify_oracle_family(p.id, p.stream, p.variant, p.fam, kTrials, kSeed);
      if (r.tested < 500) {
        o.pass = false;
        o.detail += std::string(" [") + p.id + ": only " +
                    std::to_string(r.tested) + " graphs]";
      }
      fold(o, r);
    }
    failed += finish(4, "oracle rigidity matches spanning-tight (5 variants)", o, 600);
  }

  // 5. cone tightness == finite-cover sparsity at prime k, and the k = 2
  //    equivalence must provably break on a concrete graph
  {
    Outcome o;
    fold(o, verify_cone_lift(3, 3));
    fold(o, verify_cone_lift(5, 3));
    VerificationReport k2 = verify_cone_lift_k2_counterexample(2);
    fold(o, k2);
    if (k2.extra == 1) o.detail += " [k=2 counterexample found]";
    failed += finish(5, "cone tightness via finite cover (k=3,5; k=2 breaks)", o, 60);
  }

  // 6. cylinder tightness == reduced large-k cone tightness + (2,2)-spanning
  {
    Outcome o;
    fold(o, verify_cone_v_cylinder(3, 2));
    failed += finish(6, "cylinder tightness via large-k cone reduction", o, 60);
  }

  // 7. (2,2)-circuit structure of every (2,1)-tight graph up to n = 5
  {
    Outcome o;
    fold(o, verify_circuit_structure2(5));
    failed += finish(7, "(2,2)-circuit structure of (2,1)-tight graphs", o, 60);
  }

  // 8. numerical lattice-fixing == presence of a rank-2 tight block
  {
    Outcome o;
    fold(o, verify_lattice_fix_rk2(
                chain({stream_of(t1), tier_small_m(), tier_random(100000)}), kTrials, kSeed));
    failed += finish(8, "lattice fixing matches rank-2 tight block presence", o, 300);
  }

  // 9. transported area-preserving motions break the area row for generic A
  //    (>= 99/100), and keep it exactly for orthogonal-like and identity A
  {
    Outcome o;
    VerificationReport r = verify_unit_area_affine(100, kSeed);
    fold(o, r);
    if (r.extra < 99) {
      o.pass = false;
      o.detail += " [only " + std::to_string(r.extra) + "/100 random-A nonzero]";
    }
    failed += finish(9, "area row breaks under generic affine transport", o, 60);
  }

  // 10. scaling all colors by q: invariant rank and rigidity, q^2 component
  //     growth in the windowed cover
  {
    Outcome o;
    std::vector<ColoredGraph> picked;
    {
      std::vector<const ColoredGraph*> pool;
      for (const auto& g : t1)
        if (g.m() >= 1) pool.push_back(&g);
      for (int i = 0; i < 50 && !pool.empty(); ++i)
        picked.push_back(*pool[(size_t)i * pool.size() / 50]);
    }
    fold(o, verify_q_multiplication(stream_of(picked), {2, 3}, kTrials, kSeed));
    if (picked.size() != 50) {
      o.pass = false;
      o.detail += " [picked " + std::to_string(picked.size()) + " graphs]";
    }
    failed += finish(10, "color scaling: invariants and q^2 cover growth", o, 120);
  }

  std::printf("%s\n", failed == 0 ? "acceptance: ALL PASS" : "acceptance: FAILURES");
  return failed == 0 ? 0 : 1;
}
