// rigi: command-line front end for symmetry-colored graph rigidity.
//
// Subcommands: invariants, check, oracle, lift, gen, verify.
// All I/O is JSON on stdin/stdout or --input/--output paths.
// Exit codes: 0 success/sparse/tight, 2 violating/counterexample, 1 usage or
// input error. RIGI_SEED overrides the default seed; --seed overrides both.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rigi/corpus.hpp"
#include "rigi/json_io.hpp"
#include "rigi/lift.hpp"
#include "rigi/rigidity.hpp"
#include "rigi/sparsity.hpp"
#include "rigi/verify.hpp"

namespace {

using namespace rigi;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text << "\n";
}

uint64_t env_seed() {
  if (const char* e = std::getenv("RIGI_SEED")) return std::strtoull(e, nullptr, 0);
  return kDefaultSeed;
}

Family parse_family(const std::string& name) {
  if (name == "colored-laman") return Family::ColoredLaman;
  if (name == "cylinder-laman") return Family::CylinderLaman;
  if (name == "cone-laman") return Family::ConeLaman;
  if (name == "ross") return Family::Ross;
  if (name == "unit-area-laman") return Family::UnitAreaLaman;
  if (name == "gamma-laman") return Family::GammaLaman;
  if (name == "kl") return Family::KL;
  throw CLI::ValidationError("--family", "unknown family: " + name);
}

int cmd_invariants(const std::string& input, const std::string& output) {
  ColoredGraph g = parse_graph(slurp(input));
  json comps = json::array();
  int cent_sum = 0;
  for (const auto& cr : rho_image(g)) {
    SubgroupDescription sub{g.tag, cr.generators};
    json gens = json::array();
    for (const auto& x : cr.generators) gens.push_back(element_to_json(x));
    int cent = cent_dim(sub);
    cent_sum += cent;
    comps.push_back(json{{"vertices", cr.vertices},
                         {"rho_generators", gens},
                         {"translation_rank", translation_rank(translation_subgroup(sub))},
                         {"cent_dim", cent}});
  }
  SubgroupDescription lambda = graph_translation_subgroup(g);
  int teich = teich_restricted(g.tag, lambda);
  int64_t bound = 2 * int64_t(g.n) + teich - cent_sum;
  json out{{"group", {{"tag", g.tag.name()}}},
           {"n", g.n},
           {"m", g.m()},
           {"components", comps},
           {"lambda_rank", translation_rank(lambda)},
           {"teich", teich},
           {"cent_sum", cent_sum},
           {"maxwell", {{"m", g.m()}, {"bound", bound}, {"at_most_bound", g.m() <= bound}}}};
  emit(output, out.dump(2));
  return 0;
}

int cmd_check(const std::string& input, const std::string& output,
              const std::string& family, int k, int l, int max_edges) {
  ColoredGraph g = parse_graph(slurp(input));
  FamilyTag fam{parse_family(family), k, l};
  SparsityReport rep = check_family(g, fam, max_edges);
  emit(output, sparsity_report_to_json(rep).dump(2));
  return rep.verdict == Verdict::Violating ? 2 : 0;
}

int cmd_oracle(const std::string& input, const std::string& output,
               const std::string& variant, int trials, uint64_t seed, bool exact) {
  ColoredGraph g = parse_graph(slurp(input));
  Variant v = parse_variant(variant);
  OracleResult res = exact ? generic_corank_exact(g, v, trials, seed)
                           : generic_corank(g, v, trials, seed);
  emit(output, oracle_result_to_json(res).dump(2));
  return 0;
}

int cmd_lift(const std::string& input, const std::string& output, bool finite,
             const std::string& box) {
  ColoredGraph g = parse_graph(slurp(input));
  LiftGraph lg;
  if (finite) {
    lg = lift_finite(g);
  } else {
    int64_t b[4];
    char comma;
    std::istringstream ss(box);
    if (!(ss >> b[0] >> comma >> b[1] >> comma >> b[2] >> comma >> b[3]))
      throw std::runtime_error("--box expects x0,x1,y0,y1");
    lg = lift_window(g, b[0], b[1], b[2], b[3]);
  }
  emit(output, lift_to_json(lg).dump(2));
  return 0;
}

int cmd_gen(const std::string& output, const std::string& group, int max_n, int max_m,
            int color_bound, bool random_mode, int64_t count, uint64_t seed) {
  if (max_m > 22) throw std::runtime_error("--max-m too large (limit 22)");
  CorpusSpec spec;
  spec.tag = GroupTag::parse(group);
  spec.max_n = max_n;
  spec.max_m = max_m;
  spec.color_bound = color_bound;
  spec.exhaustive = !random_mode;
  spec.count = count;
  spec.seed = seed;
  json header{
      {"corpus",
       {{"group", spec.tag.name()},
        {"max_n", spec.max_n},
        {"max_m", spec.max_m},
        {"color_bound", spec.color_bound},
        {"mode", spec.exhaustive ? "exhaustive" : "random"},
        {"count", spec.count},
        {"seed", spec.seed}}},
      {"canonicalization",
       "exhaustive mode deduplicates by the sorted normalized edge list "
       "(loops and reversed edges use the lexicographically smaller color "
       "orientation) minimized over all vertex relabelings, n <= 8"}};
  std::ostringstream out;
  out << header.dump() << "\n";
  for_each_corpus_graph(spec, [&](const ColoredGraph& g) { out << print_graph(g) << "\n"; });
  std::string text = out.str();
  text.pop_back();  // emit() appends the final newline
  emit(output, text);
  return 0;
}

std::vector<ColoredGraph> build_corpus(const GroupTag& tag, int max_n, int max_m,
                                       int color_bound, int64_t count, uint64_t seed) {
  CorpusSpec spec;
  spec.tag = tag;
  spec.max_n = max_n;
  spec.max_m = max_m;
  spec.color_bound = color_bound;
  spec.exhaustive = count <= 0;
  spec.count = count;
  spec.seed = seed;
  return corpus(spec);
}

int cmd_verify(const std::string& output, const std::string& prop, int max_n, int max_m,
               int color_bound, int64_t count, int k, int trials, uint64_t seed,
               int want) {
  GroupTag z2{GroupKind::Z2, 0};
  GroupTag z{GroupKind::Z, 0};
  auto z2_corpus = [&](int def_n, int def_m_extra) {
    int n = max_n > 0 ? max_n : def_n;
    int m = max_m > 0 ? max_m : 2 * n + def_m_extra;
    return build_corpus(z2, n, m, color_bound, count, seed);
  };
  VerificationReport rep;
  if (prop == "teich-cent-tables") {
    rep = verify_teich_cent_tables();
  } else if (prop == "z2-sparsity-equiv") {
    std::vector<ColoredGraph> c = z2_corpus(2, 1);
    rep = verify_z2_sparsity_equiv(stream_of(c));
  } else if (prop == "ross-by-adding") {
    std::vector<ColoredGraph> c = z2_corpus(2, 1);
    rep = verify_ross_by_adding(stream_of(c));
  } else if (prop == "fixed-lattice-2") {
    std::vector<ColoredGraph> c = z2_corpus(2, 1);
    rep = verify_fixed_lattice_2(stream_of(c), trials, seed);
  } else if (prop == "oracle-colored-laman") {
    std::vector<ColoredGraph> c = z2_corpus(2, 1);
    rep = verify_oracle_family(prop, stream_of(c), Variant::Periodic,
                               {Family::ColoredLaman}, trials, seed);
  } else if (prop == "oracle-cylinder") {
    int n = max_n > 0 ? max_n : 2;
    int m = max_m > 0 ? max_m : 2 * n;
    std::vector<ColoredGraph> c = build_corpus(z, n, m, color_bound, count, seed);
    rep = verify_oracle_family(prop, stream_of(c), Variant::Cylinder,
                               {Family::CylinderLaman}, trials, seed);
  } else if (prop == "oracle-fixed-lattice") {
    std::vector<ColoredGraph> c = z2_corpus(2, 0);
    rep = verify_oracle_family(prop, stream_of(c), Variant::FixedLattice, {Family::Ross},
                               trials, seed);
  } else if (prop == "oracle-unit-area") {
    std::vector<ColoredGraph> c = z2_corpus(2, 1);
    rep = verify_oracle_family(prop, stream_of(c), Variant::UnitArea,
                               {Family::UnitAreaLaman}, trials, seed);
  } else if (prop == "oracle-fixed-angle") {
    std::vector<ColoredGraph> c = z2_corpus(2, 1);
    rep = verify_oracle_family(prop, stream_of(c), Variant::FixedAngle,
                               {Family::UnitAreaLaman}, trials, seed);
  } else if (prop == "cone-lift") {
    rep = verify_cone_lift(k > 0 ? k : 3, max_n > 0 ? max_n : 3);
  } else if (prop == "cone-lift-k2-counterexample") {
    rep = verify_cone_lift_k2_counterexample(max_n > 0 ? max_n : 2);
  } else if (prop == "cone-v-cylinder") {
    rep = verify_cone_v_cylinder(max_n > 0 ? max_n : 2, color_bound);
  } else if (prop == "circuit-structure2") {
    rep = verify_circuit_structure2(max_n > 0 ? max_n : 4);
  } else if (prop == "lattice-fix-rk2") {
    std::vector<ColoredGraph> c = z2_corpus(2, 1);
    rep = verify_lattice_fix_rk2(stream_of(c), trials, seed);
  } else if (prop == "unit-area-circuit") {
    std::vector<ColoredGraph> c = z2_corpus(2, 1);
    rep = verify_unit_area_circuit(stream_of(c));
  } else if (prop == "unit-area-affine") {
    rep = verify_unit_area_affine(want, seed);
  } else if (prop == "q-multiplication") {
    std::vector<ColoredGraph> all = z2_corpus(2, 1), picked;
    std::vector<const ColoredGraph*> pool;
    for (const auto& g : all)
      if (g.m() >= 1) pool.push_back(&g);
    int target = std::min<int>(50, (int)pool.size());
    for (int i = 0; i < target; ++i)
      picked.push_back(*pool[size_t(i) * (pool.size() - 1) / std::max(1, target - 1)]);
    rep = verify_q_multiplication(stream_of(picked), {2, 3}, trials, seed);
  } else {
    throw CLI::ValidationError("--prop", "unknown proposition id: " + prop);
  }
  emit(output, verification_report_to_json(rep).dump(2));
  return rep.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetry-colored graph rigidity toolkit"};
  app.require_subcommand(1);

  std::string input, output;
  uint64_t seed = env_seed();
  int trials = 3;

  auto* inv = app.add_subcommand("invariants", "report per-component rho generators, "
                                               "translation ranks, cent dimensions, teich "
                                               "value and the Maxwell count");
  inv->add_option("--input,-i", input, "graph JSON path (default stdin)");
  inv->add_option("--output,-o", output, "output path (default stdout)");

  auto* chk = app.add_subcommand("check", "decide membership in a sparsity family");
  std::string family;
  int kl_k = 2, kl_l = 3, max_edges = 22;
  chk->add_option("--family,-f", family,
                  "colored-laman | cylinder-laman | cone-laman | ross | "
                  "unit-area-laman | gamma-laman | kl")
      ->required();
  chk->add_option("--input,-i", input, "graph JSON path (default stdin)");
  chk->add_option("--output,-o", output, "output path (default stdout)");
  chk->add_option("--k", kl_k, "k for the kl family");
  chk->add_option("--l", kl_l, "l for the kl family");
  chk->add_option("--max-edges", max_edges, "guard for the exponential subset scan");

  auto* orc = app.add_subcommand("oracle", "randomized generic rank / rigidity verdict");
  std::string variant;
  bool exact = false;
  orc->add_option("--variant,-v", variant,
                  "periodic | fixed-lattice | cylinder | unit-area | fixed-angle")
      ->required();
  orc->add_option("--input,-i", input, "graph JSON path (default stdin)");
  orc->add_option("--output,-o", output, "output path (default stdout)");
  orc->add_option("--trials,-t", trials, "rank trials (max over trials)");
  orc->add_option("--seed,-s", seed, "master seed (default RIGI_SEED or built-in)");
  orc->add_flag("--exact", exact, "integer realization + exact rational rank");

  auto* lft = app.add_subcommand("lift", "materialize a finite or windowed lift "
                                         "(plain graph, colors stripped)");
  bool finite = false;
  std::string box;
  lft->add_option("--input,-i", input, "graph JSON path (default stdin)");
  lft->add_option("--output,-o", output, "output path (default stdout)");
  auto* kflag = lft->add_flag("--k", finite, "finite lift of order k (cyclic/reflection)");
  auto* boxopt = lft->add_option("--box", box, "window x0,x1,y0,y1 (Z^2 only)");
  kflag->excludes(boxopt);
  boxopt->excludes(kflag);

  auto* gen = app.add_subcommand("gen", "emit a deterministic graph corpus as JSON lines");
  std::string group = "Z2";
  int max_n = 0, max_m = 0, color_bound = 1;
  int64_t count = 0;
  gen->add_option("--group,-g", group, "Z2 | Z | C<k> | Refl | Gamma<k>");
  gen->add_option("--max-n", max_n, "maximum vertex count");
  gen->add_option("--max-m", max_m, "maximum edge count");
  gen->add_option("--color-bound", color_bound, "translation coordinate box bound");
  auto* cnt = gen->add_option("--count", count, "random mode: number of graphs");
  gen->add_option("--seed,-s", seed, "master seed (default RIGI_SEED or built-in)");
  gen->add_option("--output,-o", output, "output path (default stdout)");

  auto* ver = app.add_subcommand("verify", "run one proposition check over a corpus");
  std::string prop;
  int ver_k = 0, want = 100;
  ver->add_option("--prop,-p", prop,
                  "teich-cent-tables | z2-sparsity-equiv | ross-by-adding | "
                  "fixed-lattice-2 | oracle-colored-laman | oracle-cylinder | "
                  "oracle-fixed-lattice | oracle-unit-area | oracle-fixed-angle | "
                  "cone-lift | cone-lift-k2-counterexample | cone-v-cylinder | "
                  "circuit-structure2 | lattice-fix-rk2 | unit-area-circuit | "
                  "unit-area-affine | q-multiplication")
      ->required();
  ver->add_option("--max-n", max_n, "corpus vertex bound (0 = per-prop default)");
  ver->add_option("--max-m", max_m, "corpus edge bound (0 = per-prop default)");
  ver->add_option("--color-bound", color_bound, "corpus color box bound");
  ver->add_option("--count", count, "random corpus of this size instead of exhaustive");
  ver->add_option("--k", ver_k, "cone order for cone-lift");
  ver->add_option("--trials,-t", trials, "oracle rank trials");
  ver->add_option("--seed,-s", seed, "master seed (default RIGI_SEED or built-in)");
  ver->add_option("--want", want, "sample count for unit-area-affine");
  ver->add_option("--output,-o", output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (*inv) return cmd_invariants(input, output);
    if (*chk) return cmd_check(input, output, family, kl_k, kl_l, max_edges);
    if (*orc) return cmd_oracle(input, output, variant, trials, seed, exact);
    if (*lft) {
      if (!finite && box.empty())
        throw CLI::RequiredError("lift needs --k or --box");
      return cmd_lift(input, output, finite, box);
    }
    if (*gen) {
      if (max_n <= 0 || (cnt->count() == 0 && max_m <= 0))
        throw CLI::ValidationError("gen", "--max-n (and --max-m for exhaustive mode) "
                                          "must be positive");
      return cmd_gen(output, group, max_n, max_m, color_bound, cnt->count() > 0, count,
                     seed);
    }
    if (*ver)
      return cmd_verify(output, prop, max_n, max_m, color_bound, count, ver_k, trials,
                        seed, want);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
