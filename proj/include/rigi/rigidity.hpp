#pragma once

// Generic-rank rigidity oracle. Builds the rigidity matrix of a colored graph
// at a randomly sampled realization over F_p (p = 2^61 - 1), computes exact
// rank, and decides rigid/flexible by comparing the corank with the variant's
// trivial-motion dimension. Five matrix variants share one row convention:
//
//   lattice L = [[a, b], [c, d]], rows are the images of the two generators:
//   G1 = (a, b), G2 = (c, d). Columns: vertex i -> 2i, 2i+1; then lattice
//   columns in the order (a, b, c, d) (cylinder keeps only (a, b);
//   fixed-lattice keeps none). Edge row for (i, j, gamma):
//     eta = p_j + gamma^1 G1 + gamma^2 G2 - p_i
//     -eta in the i columns, +eta in the j columns (loops cancel there),
//     gamma^1 eta in the (a, b) columns, gamma^2 eta in the (c, d) columns.
//
//   unit-area appends the row (d, -c, -b, a) on the lattice columns (the
//   derivative of det L in the (a, b, c, d) coordinates); fixed-angle appends
//   (-b(c^2+d^2), a(c^2+d^2), d(a^2+b^2), -c(a^2+b^2)) — the derivative of
//   the angle between G1 and G2 with the positive norm denominators and a
//   det(L) factor cleared, which never changes the row's span because the
//   sampler rejects L with det L = 0, a^2+b^2 = 0, or c^2+d^2 = 0.
//
// Trivial-motion dimensions are fixed per variant: 3 for periodic, cylinder,
// unit-area and fixed-angle (two translations and one rotation; the area and
// angle rows both annihilate the rotation (-b, a, -d, c)), 2 for
// fixed-lattice (translations only). The same row builder runs over exact
// big-integer arithmetic as a slow cross-check of the field computation.

#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "colored_graph.hpp"
#include "fp61.hpp"
#include "sparsity.hpp"

namespace rigi {

enum class Variant : uint8_t { Periodic, FixedLattice, Cylinder, UnitArea, FixedAngle };

inline std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Periodic: return "periodic";
    case Variant::FixedLattice: return "fixed-lattice";
    case Variant::Cylinder: return "cylinder";
    case Variant::UnitArea: return "unit-area";
    case Variant::FixedAngle: return "fixed-angle";
  }
  return "?";
}

inline Variant parse_variant(const std::string& s) {
  if (s == "periodic") return Variant::Periodic;
  if (s == "fixed-lattice") return Variant::FixedLattice;
  if (s == "cylinder") return Variant::Cylinder;
  if (s == "unit-area") return Variant::UnitArea;
  if (s == "fixed-angle") return Variant::FixedAngle;
  throw std::invalid_argument("unknown oracle variant: " + s);
}

inline int lattice_column_count(Variant v) {
  switch (v) {
    case Variant::FixedLattice: return 0;
    case Variant::Cylinder: return 2;
    default: return 4;
  }
}

inline int extra_row_count(Variant v) {
  return v == Variant::UnitArea || v == Variant::FixedAngle ? 1 : 0;
}

inline int trivial_motion_dim(Variant v) {
  return v == Variant::FixedLattice ? 2 : 3;
}

inline void validate_variant(Variant v, const GroupTag& tag) {
  if (v == Variant::Cylinder) {
    if (tag.kind != GroupKind::Z)
      throw std::invalid_argument("cylinder variant requires a Z-colored graph");
  } else if (tag.kind != GroupKind::Z2) {
    throw std::invalid_argument(variant_name(v) + " variant requires a Z2-colored graph");
  }
}

template <class S>
struct RealizationT {
  std::vector<std::array<S, 2>> points;
  std::array<S, 4> lattice{};  // a, b, c, d
};
using Realization = RealizationT<uint64_t>;

// Scalar rings the row builder runs over: the 61-bit prime field, and exact
// integers for the cross-check mode.
struct FieldOps {
  using S = uint64_t;
  static S from_int(int64_t v) { return fp_from(v); }
  static S add(S a, S b) { return fp_add(a, b); }
  static S sub(S a, S b) { return fp_sub(a, b); }
  static S mul(S a, S b) { return fp_mul(a, b); }
};
struct ExactOps {
  using S = boost::multiprecision::cpp_int;
  static S from_int(int64_t v) { return S(v); }
  static S add(const S& a, const S& b) { return a + b; }
  static S sub(const S& a, const S& b) { return a - b; }
  static S mul(const S& a, const S& b) { return a * b; }
};

// eta = p_j + gamma^1 G1 + gamma^2 G2 - p_i (Z colors act as (c, 0)).
template <class Ops>
std::array<typename Ops::S, 2> edge_vector_t(
    const RealizationT<typename Ops::S>& real, const Edge& e) {
  using S = typename Ops::S;
  S g1 = Ops::from_int(e.color.t[0]);
  S g2 = Ops::from_int(e.color.t[1]);
  const auto& pi = real.points.at(e.u);
  const auto& pj = real.points.at(e.v);
  const auto& L = real.lattice;
  S x = Ops::sub(Ops::add(pj[0], Ops::add(Ops::mul(g1, L[0]), Ops::mul(g2, L[2]))), pi[0]);
  S y = Ops::sub(Ops::add(pj[1], Ops::add(Ops::mul(g1, L[1]), Ops::mul(g2, L[3]))), pi[1]);
  return {x, y};
}

inline std::array<uint64_t, 2> edge_vector(const Realization& real, const Edge& e) {
  if (e.color.tag.kind != GroupKind::Z2 && e.color.tag.kind != GroupKind::Z)
    throw std::invalid_argument("edge_vector requires a Z2 or Z color");
  return edge_vector_t<FieldOps>(real, e);
}

template <class Ops>
std::vector<std::vector<typename Ops::S>> matrix_rows(
    const ColoredGraph& g, const RealizationT<typename Ops::S>& real, Variant v) {
  using S = typename Ops::S;
  validate_variant(v, g.tag);
  const int n = g.n;
  const int lat = lattice_column_count(v);
  const int cols = 2 * n + lat;
  const auto& L = real.lattice;
  std::vector<std::vector<S>> rows;
  rows.reserve(g.edges.size() + extra_row_count(v));
  for (const auto& e : g.edges) {
    auto eta = edge_vector_t<Ops>(real, e);
    std::vector<S> row(cols, Ops::from_int(0));
    row[2 * e.u] = Ops::sub(row[2 * e.u], eta[0]);
    row[2 * e.u + 1] = Ops::sub(row[2 * e.u + 1], eta[1]);
    row[2 * e.v] = Ops::add(row[2 * e.v], eta[0]);
    row[2 * e.v + 1] = Ops::add(row[2 * e.v + 1], eta[1]);
    if (lat >= 2) {
      S g1 = Ops::from_int(e.color.t[0]);
      row[2 * n] = Ops::mul(g1, eta[0]);
      row[2 * n + 1] = Ops::mul(g1, eta[1]);
    }
    if (lat == 4) {
      S g2 = Ops::from_int(e.color.t[1]);
      row[2 * n + 2] = Ops::mul(g2, eta[0]);
      row[2 * n + 3] = Ops::mul(g2, eta[1]);
    }
    rows.push_back(std::move(row));
  }
  if (v == Variant::UnitArea) {
    std::vector<S> row(cols, Ops::from_int(0));
    row[2 * n] = L[3];                                    // d
    row[2 * n + 1] = Ops::sub(Ops::from_int(0), L[2]);    // -c
    row[2 * n + 2] = Ops::sub(Ops::from_int(0), L[1]);    // -b
    row[2 * n + 3] = L[0];                                // a
    rows.push_back(std::move(row));
  } else if (v == Variant::FixedAngle) {
    S n1 = Ops::add(Ops::mul(L[0], L[0]), Ops::mul(L[1], L[1]));  // a^2 + b^2
    S n2 = Ops::add(Ops::mul(L[2], L[2]), Ops::mul(L[3], L[3]));  // c^2 + d^2
    std::vector<S> row(cols, Ops::from_int(0));
    row[2 * n] = Ops::sub(Ops::from_int(0), Ops::mul(L[1], n2));      // -b(c^2+d^2)
    row[2 * n + 1] = Ops::mul(L[0], n2);                              //  a(c^2+d^2)
    row[2 * n + 2] = Ops::mul(L[3], n1);                              //  d(a^2+b^2)
    row[2 * n + 3] = Ops::sub(Ops::from_int(0), Ops::mul(L[2], n1));  // -c(a^2+b^2)
    rows.push_back(std::move(row));
  }
  return rows;
}

inline FpMatrix build_matrix(const ColoredGraph& g, const Realization& real, Variant v) {
  auto rows = matrix_rows<FieldOps>(g, real, v);
  FpMatrix m((int)rows.size(), 2 * g.n + lattice_column_count(v));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

// Uniform field realization; L resampled until det L != 0 (all variants) and,
// for fixed-angle, until both generator norms are nonzero in the field.
inline Realization sample_realization(SplitMix64& rng, int n, Variant v) {
  Realization real;
  real.points.resize(n);
  for (auto& p : real.points) { p[0] = rng.fp(); p[1] = rng.fp(); }
  for (;;) {
    for (auto& x : real.lattice) x = rng.fp();
    const auto& L = real.lattice;
    if (fp_sub(fp_mul(L[0], L[3]), fp_mul(L[1], L[2])) == 0) continue;
    if (v == Variant::FixedAngle &&
        (fp_add(fp_mul(L[0], L[0]), fp_mul(L[1], L[1])) == 0 ||
         fp_add(fp_mul(L[2], L[2]), fp_mul(L[3], L[3])) == 0))
      continue;
    break;
  }
  return real;
}

struct OracleResult {
  Variant variant = Variant::Periodic;
  int rows = 0, cols = 0;
  int trivial_dim = 0;
  int rank = 0, corank = 0, dof = 0;
  int trials = 0;
  uint64_t seed = 0;
  uint64_t modulus = P61;  // 0 marks the exact-integer mode
  bool rigid = false;
};

inline constexpr uint64_t kDefaultSeed = 0x5eed2026u;

/*
 * Max-over-trials generic rank. Each trial draws its own stream from the
 * master seed by a fixed splitting rule, so the result is a deterministic
 * function of (graph, variant, trials, seed) and trials can only refine the
 * verdict upward.
 */
inline OracleResult generic_corank(const ColoredGraph& g, Variant v, int trials = 3,
                                   uint64_t seed = kDefaultSeed) {
  validate_variant(v, g.tag);
  g.validate();
  if (g.n < 1) throw std::invalid_argument("oracle requires at least one vertex");
  if (trials < 1) throw std::invalid_argument("oracle requires trials >= 1");
  OracleResult out;
  out.variant = v;
  out.rows = g.m() + extra_row_count(v);
  out.cols = 2 * g.n + lattice_column_count(v);
  out.trivial_dim = trivial_motion_dim(v);
  out.trials = trials;
  out.seed = seed;
  SplitMix64 master(seed);
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(master.split((uint64_t)t));
    Realization real = sample_realization(rng, g.n, v);
    FpMatrix m = build_matrix(g, real, v);
    int rk = m.rank();
    if (rk > out.rank) out.rank = rk;
  }
  out.corank = out.cols - out.rank;
  out.dof = out.corank - out.trivial_dim;
  out.rigid = out.corank == out.trivial_dim;
  return out;
}

// Fraction-free (Bareiss) rank of an integer matrix; exact.
inline int integer_rank(std::vector<std::vector<boost::multiprecision::cpp_int>> m) {
  using boost::multiprecision::cpp_int;
  const int rows = (int)m.size();
  if (rows == 0) return 0;
  const int cols = (int)m[0].size();
  cpp_int prev = 1;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int r = rk; r < rows; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rk]);
    for (int r = rk + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j)
        m[r][j] = (m[rk][c] * m[r][j] - m[r][c] * m[rk][j]) / prev;
      m[r][c] = 0;
    }
    prev = m[rk][c];
    ++rk;
  }
  return rk;
}

// Exact-integer twin of generic_corank: small random integer realizations,
// Bareiss elimination over arbitrary-precision integers. Slow; cross-check.
inline OracleResult generic_corank_exact(const ColoredGraph& g, Variant v, int trials = 3,
                                         uint64_t seed = kDefaultSeed) {
  using boost::multiprecision::cpp_int;
  validate_variant(v, g.tag);
  g.validate();
  if (g.n < 1) throw std::invalid_argument("oracle requires at least one vertex");
  if (trials < 1) throw std::invalid_argument("oracle requires trials >= 1");
  OracleResult out;
  out.variant = v;
  out.rows = g.m() + extra_row_count(v);
  out.cols = 2 * g.n + lattice_column_count(v);
  out.trivial_dim = trivial_motion_dim(v);
  out.trials = trials;
  out.seed = seed;
  out.modulus = 0;
  constexpr int64_t B = 1 << 20;
  SplitMix64 master(seed);
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(master.split((uint64_t)t));
    RealizationT<cpp_int> real;
    real.points.resize(g.n);
    for (auto& p : real.points) { p[0] = rng.range(-B, B); p[1] = rng.range(-B, B); }
    for (;;) {
      int64_t a = rng.range(-B, B), b = rng.range(-B, B);
      int64_t c = rng.range(-B, B), d = rng.range(-B, B);
      if (a * d - b * c == 0) continue;
      if (v == Variant::FixedAngle && (a * a + b * b == 0 || c * c + d * d == 0)) continue;
      real.lattice = {cpp_int(a), cpp_int(b), cpp_int(c), cpp_int(d)};
      break;
    }
    int rk = integer_rank(matrix_rows<ExactOps>(g, real, v));
    if (rk > out.rank) out.rank = rk;
  }
  out.corank = out.cols - out.rank;
  out.dof = out.corank - out.trivial_dim;
  out.rigid = out.corank == out.trivial_dim;
  return out;
}

// Directions spanned by rank-1 rho-images of edge subsets, as primitive
// integer vectors (unique up to sign, normalized to lexicographically
// positive).
inline std::vector<Vec2> rank1_directions(const ColoredGraph& g) {
  if (g.m() > 22) throw std::invalid_argument("rank1_directions: too many edges");
  SubsetScanner sc(g);
  std::vector<Vec2> dirs;
  const uint32_t limit = uint32_t(1) << g.m();
  for (uint32_t mask = 1; mask < limit; ++mask) {
    SubgraphCounts c = sc.counts(mask);
    if (c.lambda_rank != 1) continue;
    Vec2 d = c.lambda_dir;
    int64_t gg = detail::gcd64(d[0] < 0 ? -d[0] : d[0], d[1] < 0 ? -d[1] : d[1]);
    if (gg) { d[0] /= gg; d[1] /= gg; }
    if (d[0] < 0 || (d[0] == 0 && d[1] < 0)) { d[0] = -d[0]; d[1] = -d[1]; }
    if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(d);
  }
  return dirs;
}

/*
 * Does a generic framework on g determine the lattice representation up to
 * rotation? Adds one self-loop whose color is sampled to be linearly
 * independent of every rank-1 rho-image direction of g, and reports whether
 * the new row is already dependent (rank unchanged). Loop rows live entirely
 * in the lattice columns, so the attachment vertex is irrelevant; vertex 0 is
 * used. Same seed for both ranks: the realization sampling never reads the
 * edge list, so the augmented matrix is the base matrix plus one row.
 */
inline bool lattice_fixing_test_with_dirs(const ColoredGraph& g,
                                          const std::vector<Vec2>& dirs, int trials,
                                          uint64_t seed) {
  if (g.tag.kind != GroupKind::Z2)
    throw std::invalid_argument("lattice_fixing_test requires a Z2-colored graph");
  g.validate();
  if (g.n < 1) throw std::invalid_argument("lattice_fixing_test requires a vertex");
  SplitMix64 rng(SplitMix64(seed).split(0x10f1));
  int64_t bound = 4;
  Vec2 eta{0, 0};
  for (int attempt = 1;; ++attempt) {
    eta = {rng.range(-bound, bound), rng.range(-bound, bound)};
    bool ok = eta[0] != 0 || eta[1] != 0;
    for (const auto& d : dirs)
      if (ok && d[0] * eta[1] - d[1] * eta[0] == 0) ok = false;
    if (ok) break;
    if (attempt % 32 == 0) bound *= 2;
  }
  int base = generic_corank(g, Variant::Periodic, trials, seed).rank;
  ColoredGraph aug = add_loops(g, 0, {GroupElement{g.tag, eta, 0}});
  int with_loop = generic_corank(aug, Variant::Periodic, trials, seed).rank;
  return with_loop == base;
}

inline bool lattice_fixing_test(const ColoredGraph& g, int trials = 3,
                                uint64_t seed = kDefaultSeed) {
  return lattice_fixing_test_with_dirs(g, rank1_directions(g), trials, seed);
}

/*
 * Rigidity is an affine invariant for the variants without an area/angle row:
 * transforming a sampled realization by an invertible A (points p -> A p,
 * generator images G -> A G) must not change the rank. Checked per trial on
 * the same sampled realization.
 */
inline bool affine_invariance_check(const ColoredGraph& g, Variant v,
                                    const std::array<uint64_t, 4>& A, int trials = 1,
                                    uint64_t seed = kDefaultSeed) {
  if (v == Variant::UnitArea || v == Variant::FixedAngle)
    throw std::invalid_argument("area/angle constraints are not affinely invariant");
  validate_variant(v, g.tag);
  if (fp_sub(fp_mul(A[0], A[3]), fp_mul(A[1], A[2])) == 0)
    throw std::invalid_argument("affine_invariance_check: singular A");
  auto map = [&](uint64_t x, uint64_t y) -> std::array<uint64_t, 2> {
    return {fp_add(fp_mul(A[0], x), fp_mul(A[1], y)),
            fp_add(fp_mul(A[2], x), fp_mul(A[3], y))};
  };
  SplitMix64 master(seed);
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(master.split((uint64_t)t));
    Realization real = sample_realization(rng, g.n, v);
    Realization moved;
    moved.points.reserve(g.n);
    for (const auto& p : real.points) moved.points.push_back(map(p[0], p[1]));
    auto G1 = map(real.lattice[0], real.lattice[1]);
    auto G2 = map(real.lattice[2], real.lattice[3]);
    moved.lattice = {G1[0], G1[1], G2[0], G2[1]};
    if (build_matrix(g, real, v).rank() != build_matrix(g, moved, v).rank())
      return false;
  }
  return true;
}

struct AffineAreaCheck {
  bool hypothesis = false;        // nontrivial area-preserving kernel motion at L = id
  bool random_nonzero = false;    // transported motion breaks the area row, generic A
  bool orthogonal_zero = false;   // rotation-like A keeps it (columns equal, orthogonal)
  bool identity_zero = false;
  uint64_t lambda = 0, mu = 0, nu = 0;
  uint64_t lhs_random = 0;
};

/*
 * At a realization with L = identity, an area-preserving kernel motion has a
 * traceless lattice part M = [[lambda, mu], [nu, -lambda]]. Transporting the
 * motion by A (M' = A* M with A* the inverse transpose) and plugging into the
 * area row gives det(A)^{-1} (lambda (d^2+b^2-a^2-c^2) - (mu+nu)(ab+cd)):
 * generically nonzero unless M acts trivially on the lattice, i.e. unless
 * lambda = mu+nu = 0, and exactly zero whenever A's columns have equal length
 * and are orthogonal. `hypothesis` is false when every area-preserving kernel
 * motion is trivial (then no such M exists and nothing is checked).
 */
inline AffineAreaCheck area_row_breaks_under_affine(const ColoredGraph& g,
                                                    uint64_t seed = kDefaultSeed) {
  if (g.tag.kind != GroupKind::Z2)
    throw std::invalid_argument("area_row_breaks_under_affine requires a Z2-colored graph");
  g.validate();
  if (g.n < 1 || g.m() != 2 * g.n)
    throw std::invalid_argument("area_row_breaks_under_affine expects m = 2n");
  AffineAreaCheck out;
  SplitMix64 rng(seed);
  Realization real;
  real.points.resize(g.n);
  for (auto& p : real.points) { p[0] = rng.fp(); p[1] = rng.fp(); }
  real.lattice = {1, 0, 0, 1};
  FpMatrix m = build_matrix(g, real, Variant::Periodic);
  auto kernel = m.kernel();
  const int n2 = 2 * g.n;
  auto trace = [&](const std::vector<uint64_t>& w) { return fp_add(w[n2], w[n2 + 3]); };
  // restrict the kernel to traceless lattice parts
  int piv = -1;
  for (int i = 0; i < (int)kernel.size(); ++i)
    if (trace(kernel[i]) != 0) { piv = i; break; }
  std::vector<std::vector<uint64_t>> traceless;
  for (int i = 0; i < (int)kernel.size(); ++i) {
    if (i == piv) continue;
    std::vector<uint64_t> w = kernel[i];
    if (piv >= 0 && trace(w) != 0) {
      uint64_t f = fp_mul(trace(w), fp_inv(trace(kernel[piv])));
      for (size_t j = 0; j < w.size(); ++j)
        w[j] = fp_sub(w[j], fp_mul(f, kernel[piv][j]));
    }
    traceless.push_back(std::move(w));
  }
  // pick one acting nontrivially on the lattice: (lambda, mu+nu) != (0, 0)
  const std::vector<uint64_t>* motion = nullptr;
  for (const auto& w : traceless)
    if (w[n2] != 0 || fp_add(w[n2 + 1], w[n2 + 2]) != 0) { motion = &w; break; }
  if (!motion) return out;
  out.hypothesis = true;
  out.lambda = (*motion)[n2];
  out.mu = (*motion)[n2 + 1];
  out.nu = (*motion)[n2 + 2];
  auto lhs = [&](uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    uint64_t det = fp_sub(fp_mul(a, d), fp_mul(b, c));
    uint64_t len = fp_sub(fp_add(fp_mul(d, d), fp_mul(b, b)),
                          fp_add(fp_mul(a, a), fp_mul(c, c)));
    uint64_t dot = fp_add(fp_mul(a, b), fp_mul(c, d));
    uint64_t raw = fp_sub(fp_mul(out.lambda, len),
                          fp_mul(fp_add(out.mu, out.nu), dot));
    return fp_mul(fp_inv(det), raw);
  };
  uint64_t a, b, c, d;
  do {
    a = rng.fp(); b = rng.fp(); c = rng.fp(); d = rng.fp();
  } while (fp_sub(fp_mul(a, d), fp_mul(b, c)) == 0);
  out.lhs_random = lhs(a, b, c, d);
  out.random_nonzero = out.lhs_random != 0;
  uint64_t x, y;
  do { x = rng.fp(); y = rng.fp(); } while (fp_add(fp_mul(x, x), fp_mul(y, y)) == 0);
  out.orthogonal_zero = lhs(x, fp_neg(y), y, x) == 0;
  out.identity_zero = lhs(1, 0, 0, 1) == 0;
  return out;
}

}  // namespace rigi
