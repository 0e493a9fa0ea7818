#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "boxcat/point.hpp"

namespace boxcat {

// Compare two variable sets (bit masks) as sorted index lists, shorter
// prefix first.  {1,3} < {2} because the lists [1,3] and [2] compare that
// way; this is the order used for canonical serialization throughout.
inline bool lex_mask_less(PointMask a, PointMask b) {
  while (a != 0 && b != 0) {
    PointMask la = a & (~a + 1), lb = b & (~b + 1);
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return a == 0 && b != 0;
}

inline std::vector<int> mask_to_indices(PointMask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

inline PointMask indices_to_mask(const std::vector<int>& idx, int arity) {
  PointMask m = 0;
  for (int i : idx) {
    if (i < 1 || i > arity) fail("BadArgument", "variable index out of range");
    m |= PointMask(1) << (i - 1);
  }
  return m;
}

// A monotone Boolean function [1]^m -> [1], stored as the antichain of its
// minimal true points.  The empty antichain is the constant 0 and the
// antichain containing only the empty set is the constant 1.  This form is
// canonical: two functions are equal iff their antichains are equal.
struct MonotoneBoolFn {
  int m = 0;
  std::vector<PointMask> ac;  // pairwise incomparable, sorted by lex_mask_less

  static MonotoneBoolFn const_false(int arity) { return MonotoneBoolFn{arity, {}}; }
  static MonotoneBoolFn const_true(int arity) { return MonotoneBoolFn{arity, {0}}; }
  static MonotoneBoolFn var(int arity, int i) {
    return MonotoneBoolFn{arity, {PointMask(1) << (i - 1)}};
  }

  bool eval(PointMask x) const {
    for (PointMask s : ac)
      if ((s & ~x) == 0) return true;
    return false;
  }

  bool is_const_false() const { return ac.empty(); }
  bool is_const_true() const { return ac.size() == 1 && ac[0] == 0; }
  bool is_constant() const { return is_const_false() || is_const_true(); }

  // Union of the antichain members.  For a canonical antichain this is
  // exactly the set of variables the function depends on: dropping a
  // variable from a minimal true point flips the value.
  PointMask support() const {
    PointMask s = 0;
    for (PointMask a : ac) s |= a;
    return s;
  }

  friend bool operator==(const MonotoneBoolFn&, const MonotoneBoolFn&) = default;
};

inline bool mbf_less(const MonotoneBoolFn& a, const MonotoneBoolFn& b) {
  if (a.m != b.m) return a.m < b.m;
  std::size_t k = std::min(a.ac.size(), b.ac.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (a.ac[i] != b.ac[i]) return lex_mask_less(a.ac[i], b.ac[i]);
  }
  return a.ac.size() < b.ac.size();
}

// Discard members that contain another member, dedupe, sort.  Accepts any
// generating family of sets and returns the canonical antichain of the
// monotone function x -> "some member is contained in x".
inline MonotoneBoolFn canonicalize(int arity, std::vector<PointMask> members) {
  std::vector<PointMask> keep;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      PointMask a = members[j], b = members[i];
      if ((a & ~b) == 0 && (a != b || j < i)) {  // a subset of b; ties keep first
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(members[i]);
  }
  std::sort(keep.begin(), keep.end(), lex_mask_less);
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return MonotoneBoolFn{arity, std::move(keep)};
}

inline MonotoneBoolFn mbf_meet(const MonotoneBoolFn& f, const MonotoneBoolFn& g) {
  std::vector<PointMask> members;
  members.reserve(f.ac.size() * g.ac.size());
  for (PointMask a : f.ac)
    for (PointMask b : g.ac) members.push_back(a | b);
  return canonicalize(f.m, std::move(members));
}

inline MonotoneBoolFn mbf_join(const MonotoneBoolFn& f, const MonotoneBoolFn& g) {
  std::vector<PointMask> members = f.ac;
  members.insert(members.end(), g.ac.begin(), g.ac.end());
  return canonicalize(f.m, std::move(members));
}

// Substitute inner[i-1] for variable i of outer.  All inner functions share
// the arity given by `arity` and no variable shifting happens; this is the
// composition step used both for morphism composition and, after shifting,
// for operadic substitution.  The arity is explicit because the inner list
// is empty when the outer function is 0-ary.
inline MonotoneBoolFn mbf_substitute(const MonotoneBoolFn& outer,
                                     const std::vector<MonotoneBoolFn>& inner,
                                     int arity) {
  if (static_cast<int>(inner.size()) != outer.m)
    fail("ArityMismatch", "substitution needs one inner function per variable");
  for (const auto& f : inner)
    if (f.m != arity) fail("ArityMismatch", "inner functions have mixed arities");
  MonotoneBoolFn acc = MonotoneBoolFn::const_false(arity);
  for (PointMask s : outer.ac) {
    MonotoneBoolFn term = MonotoneBoolFn::const_true(arity);
    for (int i : mask_to_indices(s)) term = mbf_meet(term, inner[static_cast<std::size_t>(i - 1)]);
    acc = mbf_join(acc, term);
  }
  return acc;
}

// Reinterpret in a wider cube, variables shifted up by `offset`.
inline MonotoneBoolFn mbf_shift(const MonotoneBoolFn& f, int offset, int new_arity) {
  MonotoneBoolFn out{new_arity, f.ac};
  for (PointMask& s : out.ac) s <<= offset;
  std::sort(out.ac.begin(), out.ac.end(), lex_mask_less);
  return out;
}

// Rename variables via old index -> varmap[old-1] (1-based targets).
inline MonotoneBoolFn mbf_remap(const MonotoneBoolFn& f, const std::vector<int>& varmap,
                                int new_arity) {
  std::vector<PointMask> members;
  members.reserve(f.ac.size());
  for (PointMask s : f.ac) {
    PointMask t = 0;
    for (int i : mask_to_indices(s))
      t |= PointMask(1) << (varmap[static_cast<std::size_t>(i - 1)] - 1);
    members.push_back(t);
  }
  return canonicalize(new_arity, std::move(members));
}

// All monotone functions [1]^m -> [1] by depth-first antichain search,
// returned sorted in the canonical order.  The counts are the Dedekind
// numbers 2, 3, 6, 20, 168, 7581 for m = 0..5; anything wider is refused.
inline std::vector<MonotoneBoolFn> enumerate_mbf(int m) {
  if (m < 0 || m > 5)
    fail("SizeExceeded", "exhaustive monotone enumeration supports arity 0..5");
  std::vector<PointMask> masks;
  for (PointMask s = 0; s < (PointMask(1) << m); ++s) masks.push_back(s);
  std::sort(masks.begin(), masks.end(), lex_mask_less);

  std::vector<MonotoneBoolFn> out;
  std::vector<PointMask> chosen;
  auto dfs = [&](auto&& self, std::size_t next) -> void {
    std::vector<PointMask> sorted = chosen;
    std::sort(sorted.begin(), sorted.end(), lex_mask_less);
    out.push_back(MonotoneBoolFn{m, std::move(sorted)});
    for (std::size_t i = next; i < masks.size(); ++i) {
      PointMask cand = masks[i];
      bool ok = true;
      for (PointMask s : chosen) {
        if ((s & ~cand) == 0 || (cand & ~s) == 0) {  // comparable
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(cand);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), mbf_less);
  return out;
}

}  // namespace boxcat
