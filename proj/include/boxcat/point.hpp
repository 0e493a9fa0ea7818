#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "boxcat/errors.hpp"

namespace boxcat {

// A point of the cube [1]^n is a bit vector packed into a word.
// Coordinate i (1-based) lives at bit i-1, so enumerating masks 0,1,2,...
// walks the points in binary counting order with coordinate 1 flipping
// fastest.  Textual I/O prints coordinate 1 first.
using PointMask = std::uint32_t;

constexpr int kMaxArity = 31;

inline PointMask full_mask(int n) {
  return n == 0 ? 0u : (PointMask(~0u) >> (32 - n));
}

inline bool point_leq(PointMask a, PointMask b) { return (a & ~b) == 0; }

inline int popcount(PointMask x) { return std::popcount(x); }

inline bool get_bit(PointMask x, int coord /*1-based*/) {
  return (x >> (coord - 1)) & 1u;
}

inline std::string point_string(PointMask x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

// Lexicographic order on coordinate sequences (coordinate 1 compared first).
// Distinct from numeric mask order: (1,0) > (0,1) lexicographically even
// though mask 1 < mask 2.
inline bool lex_point_less(PointMask a, PointMask b, int n) {
  for (int i = 0; i < n; ++i) {
    unsigned ab = (a >> i) & 1u, bb = (b >> i) & 1u;
    if (ab != bb) return ab < bb;
  }
  return false;
}

struct Point {
  int n = 0;
  PointMask bits = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// An interval [lo, hi] of [1]^n.  Endpoints must be comparable.
struct Interval {
  Point lo;
  Point hi;

  int rank() const { return popcount(lo.bits ^ hi.bits); }
  bool contains(PointMask x) const {
    return point_leq(lo.bits, x) && point_leq(x, hi.bits);
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline Interval make_interval(Point lo, Point hi) {
  if (lo.n != hi.n)
    fail("ArityMismatch", "interval endpoints live in different cubes");
  if (!point_leq(lo.bits, hi.bits))
    fail("IncomparableEndpoints",
         "interval endpoints are incomparable: lo=" + point_string(lo.bits, lo.n) +
             " hi=" + point_string(hi.bits, hi.n));
  return Interval{lo, hi};
}

// A permutation g of {1..m}, stored 0-based: img[j] = g(j+1)-1.
// Acting on a point, g moves the value in coordinate j to coordinate g(j).
struct Permutation {
  std::vector<int> img;

  int size() const { return static_cast<int>(img.size()); }

  static Permutation identity(int m) {
    Permutation g;
    g.img.resize(static_cast<std::size_t>(m));
    std::iota(g.img.begin(), g.img.end(), 0);
    return g;
  }

  static Permutation from_one_line(const std::vector<int>& one_based) {
    Permutation g;
    g.img.reserve(one_based.size());
    std::vector<char> seen(one_based.size(), 0);
    for (int v : one_based) {
      if (v < 1 || v > static_cast<int>(one_based.size()) || seen[v - 1])
        fail("BadArgument", "not a permutation in one-line notation");
      seen[v - 1] = 1;
      g.img.push_back(v - 1);
    }
    return g;
  }

  std::vector<int> to_one_line() const {
    std::vector<int> out;
    out.reserve(img.size());
    for (int v : img) out.push_back(v + 1);
    return out;
  }

  Permutation inverse() const {
    Permutation h;
    h.img.resize(img.size());
    for (std::size_t j = 0; j < img.size(); ++j)
      h.img[static_cast<std::size_t>(img[j])] = static_cast<int>(j);
    return h;
  }

  // this after other: (g*h)(j) = g(h(j)).
  Permutation after(const Permutation& other) const {
    Permutation r;
    r.img.resize(img.size());
    for (std::size_t j = 0; j < img.size(); ++j)
      r.img[j] = img[static_cast<std::size_t>(other.img[j])];
    return r;
  }

  PointMask apply_point(PointMask x) const {
    PointMask y = 0;
    for (std::size_t j = 0; j < img.size(); ++j)
      if ((x >> j) & 1u) y |= PointMask(1) << img[j];
    return y;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

inline std::vector<Permutation> all_permutations(int m) {
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Permutation> out;
  // std::next_permutation enumerates in lexicographic one-line order.
  do {
    Permutation g;
    g.img = idx;
    out.push_back(std::move(g));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace boxcat
