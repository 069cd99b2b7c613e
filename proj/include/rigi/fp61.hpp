#pragma once

// Arithmetic in F_p for p = 2^61 - 1 (Mersenne prime), plus a small
// deterministic RNG. Generic rank computations sample matrix entries from
// this field; 61-bit modulus keeps products inside __int128 and makes the
// Schwartz-Zippel failure probability (~ deg/p) negligible for the matrix
// sizes that occur here.

#include <cstdint>
#include <vector>

namespace rigi {

inline constexpr uint64_t P61 = (uint64_t(1) << 61) - 1;

inline uint64_t fp_add(uint64_t a, uint64_t b) {
  uint64_t s = a + b;
  return s >= P61 ? s - P61 : s;
}

inline uint64_t fp_sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + P61 - b; }

inline uint64_t fp_neg(uint64_t a) { return a == 0 ? 0 : P61 - a; }

inline uint64_t fp_mul(uint64_t a, uint64_t b) {
  unsigned __int128 t = (unsigned __int128)a * b;
  uint64_t lo = (uint64_t)(t & P61);
  uint64_t hi = (uint64_t)(t >> 61);
  uint64_t s = lo + hi;
  return s >= P61 ? s - P61 : s;
}

inline uint64_t fp_pow(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = fp_mul(r, a);
    a = fp_mul(a, a);
    e >>= 1;
  }
  return r;
}

inline uint64_t fp_inv(uint64_t a) { return fp_pow(a, P61 - 2); }

// Map a signed integer into F_p.
inline uint64_t fp_from(int64_t v) {
  int64_t m = v % (int64_t)P61;
  if (m < 0) m += (int64_t)P61;
  return (uint64_t)m;
}

// splitmix64: tiny, well-mixed, identical on every platform. All randomness
// in the library flows from one seed through this.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n) by rejection (n << 2^64, bias negligible but rejected anyway).
  uint64_t below(uint64_t n) {
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do { x = next(); } while (x >= lim);
    return x % n;
  }
  int64_t range(int64_t lo, int64_t hi) {  // inclusive
    return lo + (int64_t)below((uint64_t)(hi - lo + 1));
  }
  uint64_t fp() {  // uniform field element
    uint64_t x;
    do { x = next() >> 3; } while (x >= P61);
    return x;
  }
  uint64_t fp_nonzero() {
    uint64_t x;
    do { x = fp(); } while (x == 0);
    return x;
  }
  // Derive an independent child seed; used to give each trial its own stream.
  uint64_t split(uint64_t salt) {
    SplitMix64 s(state ^ (salt * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL));
    return s.next();
  }
};

// Dense row-major matrix over F_p with Gaussian elimination.
struct FpMatrix {
  int rows = 0, cols = 0;
  std::vector<uint64_t> a;  // rows*cols

  FpMatrix() = default;
  FpMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  uint64_t& at(int r, int c) { return a[(size_t)r * cols + c]; }
  uint64_t at(int r, int c) const { return a[(size_t)r * cols + c]; }

  int rank() const {
    FpMatrix m = *this;
    int rk = 0;
    for (int c = 0; c < m.cols && rk < m.rows; ++c) {
      int piv = -1;
      for (int r = rk; r < m.rows; ++r)
        if (m.at(r, c) != 0) { piv = r; break; }
      if (piv < 0) continue;
      if (piv != rk)
        for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rk, j));
      uint64_t inv = fp_inv(m.at(rk, c));
      for (int r = rk + 1; r < m.rows; ++r) {
        uint64_t f = m.at(r, c);
        if (!f) continue;
        f = fp_mul(f, inv);
        for (int j = c; j < m.cols; ++j)
          m.at(r, j) = fp_sub(m.at(r, j), fp_mul(f, m.at(rk, j)));
      }
      ++rk;
    }
    return rk;
  }

  // Basis of the right kernel (column vectors), via RREF.
  std::vector<std::vector<uint64_t>> kernel() const {
    FpMatrix m = *this;
    std::vector<int> pivot_col;
    int rk = 0;
    for (int c = 0; c < m.cols && rk < m.rows; ++c) {
      int piv = -1;
      for (int r = rk; r < m.rows; ++r)
        if (m.at(r, c) != 0) { piv = r; break; }
      if (piv < 0) continue;
      if (piv != rk)
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rk, j));
      uint64_t inv = fp_inv(m.at(rk, c));
      for (int j = 0; j < m.cols; ++j) m.at(rk, j) = fp_mul(m.at(rk, j), inv);
      for (int r = 0; r < m.rows; ++r) {
        if (r == rk) continue;
        uint64_t f = m.at(r, c);
        if (!f) continue;
        for (int j = 0; j < m.cols; ++j)
          m.at(r, j) = fp_sub(m.at(r, j), fp_mul(f, m.at(rk, j)));
      }
      pivot_col.push_back(c);
      ++rk;
    }
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<uint64_t>> basis;
    for (int free = 0; free < m.cols; ++free) {
      if (is_pivot[free]) continue;
      std::vector<uint64_t> v(m.cols, 0);
      v[free] = 1;
      for (int i = 0; i < rk; ++i)
        v[pivot_col[i]] = fp_neg(m.at(i, free));
      basis.push_back(std::move(v));
    }
    return basis;
  }
};

}  // namespace rigi
