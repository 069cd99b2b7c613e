#pragma once

// Crystallographic-flavoured symmetry groups for planar frameworks:
//
//   Z2      = Z^2                     (free abelian rank 2; torus translations)
//   Z       = Z                      (cylinder translations; stored as (x, 0))
//   Cyclic  = Z/kZ, k >= 2            (rotation about a point)
//   Refl    = Z/2                    (a single reflection)
//   Gamma   = Z^2 x| Z/kZ, k in {2,3,4,6}  (wallpaper-style semidirect product)
//
// Elements are pairs (t, r): an integer translation part and a rotation part
// r in Z/k. For Gamma the rotation acts on translations through the integer
// matrix M_k of order k (the action of a 2pi/k rotation on a suitable basis
// of the invariant lattice):
//
//   M_2 = [-1  0]   M_3 = [0 -1]   M_4 = [0 -1]   M_6 = [0 -1]
//         [ 0 -1]         [1 -1]         [1  0]         [1  1]
//
// Composition: (t1, r1) * (t2, r2) = (t1 + M^r1 t2, r1 + r2 mod k).

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigi {

enum class GroupKind : uint8_t { Z2, Z, Cyclic, Reflection, Gamma };

struct GroupTag {
  GroupKind kind = GroupKind::Z2;
  int k = 0;  // order of the rotation part; meaningful for Cyclic (>=2) and Gamma (2,3,4,6)

  bool operator==(const GroupTag&) const = default;

  bool has_rotation_part() const {
    return kind == GroupKind::Cyclic || kind == GroupKind::Reflection || kind == GroupKind::Gamma;
  }
  bool is_abelian() const { return kind != GroupKind::Gamma; }
  int rotation_order() const {
    switch (kind) {
      case GroupKind::Cyclic: return k;
      case GroupKind::Reflection: return 2;
      case GroupKind::Gamma: return k;
      default: return 1;
    }
  }
  std::string name() const {
    switch (kind) {
      case GroupKind::Z2: return "Z2";
      case GroupKind::Z: return "Z";
      case GroupKind::Cyclic: return "C" + std::to_string(k);
      case GroupKind::Reflection: return "Refl";
      case GroupKind::Gamma: return "Gamma" + std::to_string(k);
    }
    return "?";
  }
  static GroupTag parse(const std::string& s) {
    if (s == "Z2") return {GroupKind::Z2, 0};
    if (s == "Z") return {GroupKind::Z, 0};
    if (s == "Refl") return {GroupKind::Reflection, 2};
    auto num = [&](size_t off) {
      int v = std::stoi(s.substr(off));
      return v;
    };
    if (s.size() > 1 && s[0] == 'C') {
      int k = num(1);
      if (k < 2) throw std::invalid_argument("cyclic tag needs k >= 2: " + s);
      return {GroupKind::Cyclic, k};
    }
    if (s.rfind("Gamma", 0) == 0) {
      int k = num(5);
      if (k != 2 && k != 3 && k != 4 && k != 6)
        throw std::invalid_argument("Gamma tag needs k in {2,3,4,6}: " + s);
      return {GroupKind::Gamma, k};
    }
    throw std::invalid_argument("unknown group tag: " + s);
  }
};

inline void validate_tag(const GroupTag& t) {
  switch (t.kind) {
    case GroupKind::Cyclic:
      if (t.k < 2) throw std::invalid_argument("cyclic group needs k >= 2");
      break;
    case GroupKind::Gamma:
      if (t.k != 2 && t.k != 3 && t.k != 4 && t.k != 6)
        throw std::invalid_argument("Gamma group needs k in {2,3,4,6}");
      break;
    default: break;
  }
}

using Mat2 = std::array<int64_t, 4>;  // row-major [[a,b],[c,d]]
using Vec2 = std::array<int64_t, 2>;

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}
inline Vec2 mat_apply(const Mat2& m, const Vec2& v) {
  return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

// Order-k integer rotation matrix; see header comment.
inline Mat2 rotation_matrix(int k) {
  switch (k) {
    case 2: return {-1, 0, 0, -1};
    case 3: return {0, -1, 1, -1};
    case 4: return {0, -1, 1, 0};
    case 6: return {0, -1, 1, 1};
  }
  throw std::invalid_argument("rotation matrix defined for k in {2,3,4,6}");
}

inline Mat2 rotation_power(int k, int r) {
  r %= k;
  if (r < 0) r += k;
  Mat2 m{1, 0, 0, 1};
  Mat2 base = rotation_matrix(k);
  for (int i = 0; i < r; ++i) m = mat_mul(m, base);
  return m;
}

struct GroupElement {
  GroupTag tag;
  Vec2 t{0, 0};
  int r = 0;

  bool operator==(const GroupElement&) const = default;
  bool is_identity() const { return t[0] == 0 && t[1] == 0 && r == 0; }
};

inline GroupElement identity(const GroupTag& tag) { return {tag, {0, 0}, 0}; }

inline void validate_element(const GroupElement& g) {
  validate_tag(g.tag);
  int k = g.tag.rotation_order();
  switch (g.tag.kind) {
    case GroupKind::Z2:
      if (g.r != 0) throw std::invalid_argument("Z2 element has no rotation part");
      break;
    case GroupKind::Z:
      if (g.r != 0 || g.t[1] != 0)
        throw std::invalid_argument("Z element must be (x, 0) with r = 0");
      break;
    case GroupKind::Cyclic:
    case GroupKind::Reflection:
      if (g.t[0] != 0 || g.t[1] != 0)
        throw std::invalid_argument("finite group element has no translation part");
      if (g.r < 0 || g.r >= k) throw std::invalid_argument("rotation part out of range");
      break;
    case GroupKind::Gamma:
      if (g.r < 0 || g.r >= k) throw std::invalid_argument("rotation part out of range");
      break;
  }
}

inline GroupElement compose(const GroupElement& x, const GroupElement& y) {
  if (!(x.tag == y.tag)) throw std::invalid_argument("compose: mismatched group tags");
  GroupElement out{x.tag, {0, 0}, 0};
  switch (x.tag.kind) {
    case GroupKind::Z2:
    case GroupKind::Z:
      out.t = {x.t[0] + y.t[0], x.t[1] + y.t[1]};
      break;
    case GroupKind::Cyclic:
    case GroupKind::Reflection:
      out.r = (x.r + y.r) % x.tag.rotation_order();
      break;
    case GroupKind::Gamma: {
      Vec2 rot = mat_apply(rotation_power(x.tag.k, x.r), y.t);
      out.t = {x.t[0] + rot[0], x.t[1] + rot[1]};
      out.r = (x.r + y.r) % x.tag.k;
      break;
    }
  }
  return out;
}

inline GroupElement invert(const GroupElement& x) {
  GroupElement out{x.tag, {0, 0}, 0};
  int k = x.tag.rotation_order();
  switch (x.tag.kind) {
    case GroupKind::Z2:
    case GroupKind::Z:
      out.t = {-x.t[0], -x.t[1]};
      break;
    case GroupKind::Cyclic:
    case GroupKind::Reflection:
      out.r = (k - x.r) % k;
      break;
    case GroupKind::Gamma: {
      out.r = (k - x.r) % k;
      Vec2 v = mat_apply(rotation_power(k, out.r), x.t);
      out.t = {-v[0], -v[1]};
      break;
    }
  }
  return out;
}

inline GroupElement power(const GroupElement& x, int64_t e) {
  GroupElement base = e < 0 ? invert(x) : x;
  int64_t n = e < 0 ? -e : e;
  GroupElement acc = identity(x.tag);
  for (int64_t i = 0; i < n; ++i) acc = compose(acc, base);
  return acc;
}

// Rank (0, 1 or 2) of the lattice spanned by integer vectors. Two columns,
// so no elimination needed: rank 2 iff some pair has nonzero cross product.
inline int lattice_rank(const std::vector<Vec2>& vs) {
  const Vec2* first = nullptr;
  for (const auto& v : vs) {
    if (v[0] == 0 && v[1] == 0) continue;
    if (!first) { first = &v; continue; }
    __int128 cross = (__int128)(*first)[0] * v[1] - (__int128)(*first)[1] * v[0];
    if (cross != 0) return 2;
  }
  return first ? 1 : 0;
}

// Lexicographic key used for canonical forms.
inline bool element_less(const GroupElement& a, const GroupElement& b) {
  if (a.t[0] != b.t[0]) return a.t[0] < b.t[0];
  if (a.t[1] != b.t[1]) return a.t[1] < b.t[1];
  return a.r < b.r;
}

}  // namespace rigi
