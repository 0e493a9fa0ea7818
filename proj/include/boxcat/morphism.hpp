#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boxcat/mbf.hpp"
#include "boxcat/point.hpp"

namespace boxcat {

// A monotone map [1]^m -> [1]^n, one canonical monotone Boolean function per
// target coordinate.  Monotonicity is built into the representation; whether
// the map also preserves intervals is a property (see is_interval_preserving).
struct CubeMorphism {
  int m = 0;
  int n = 0;
  std::vector<MonotoneBoolFn> coords;

  static CubeMorphism identity(int k) {
    CubeMorphism f{k, k, {}};
    f.coords.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) f.coords.push_back(MonotoneBoolFn::var(k, i));
    return f;
  }

  PointMask eval(PointMask x) const {
    PointMask y = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i].eval(x)) y |= PointMask(1) << i;
    return y;
  }

  friend bool operator==(const CubeMorphism&, const CubeMorphism&) = default;
};

inline bool morphism_less(const CubeMorphism& a, const CubeMorphism& b) {
  if (a.m != b.m) return a.m < b.m;
  if (a.n != b.n) return a.n < b.n;
  for (int i = 0; i < a.n; ++i) {
    const auto& fa = a.coords[static_cast<std::size_t>(i)];
    const auto& fb = b.coords[static_cast<std::size_t>(i)];
    if (!(fa == fb)) return mbf_less(fa, fb);
  }
  return false;
}

struct MorphismLess {
  bool operator()(const CubeMorphism& a, const CubeMorphism& b) const {
    return morphism_less(a, b);
  }
};

// An arbitrary function [1]^m -> [1]^n as an explicit truth table indexed by
// source mask.  This is the only representation that can hold non-monotone
// maps such as coordinate reversal.
struct RawMap {
  int m = 0;
  int n = 0;
  std::vector<PointMask> table;  // size 2^m

  PointMask eval(PointMask x) const { return table[x]; }

  friend bool operator==(const RawMap&, const RawMap&) = default;
};

inline RawMap to_raw(const CubeMorphism& f) {
  RawMap r{f.m, f.n, {}};
  r.table.resize(std::size_t(1) << f.m);
  for (PointMask x = 0; x < (PointMask(1) << f.m); ++x) r.table[x] = f.eval(x);
  return r;
}

// First monotonicity violation in binary counting order: a point x and a
// coordinate direction whose flip decreases some output bit.
struct MonotonicityWitness {
  PointMask x = 0;
  PointMask y = 0;  // x with one extra bit
  int coordinate = 0;  // 1-based output coordinate that drops
};

inline std::optional<MonotonicityWitness> monotonicity_witness(const RawMap& f) {
  for (PointMask x = 0; x < (PointMask(1) << f.m); ++x) {
    for (int b = 0; b < f.m; ++b) {
      if ((x >> b) & 1u) continue;
      PointMask y = x | (PointMask(1) << b);
      PointMask drop = f.table[x] & ~f.table[y];
      if (drop != 0) {
        int coord = mask_to_indices(drop & (~drop + 1))[0];
        return MonotonicityWitness{x, y, coord};
      }
    }
  }
  return std::nullopt;
}

// Convert a truth table into canonical form, solving for the antichain of
// minimal true points of each coordinate.  Non-monotone input is an error
// carrying the offending pair of points.
inline CubeMorphism from_table(const RawMap& f) {
  if (f.table.size() != (std::size_t(1) << f.m))
    fail("BadArgument", "table size does not match arity");
  for (PointMask y : f.table)
    if ((y & ~full_mask(f.n)) != 0) fail("BadArgument", "table entry outside target cube");
  if (auto w = monotonicity_witness(f)) {
    fail("NotMonotone",
         "not monotone at " + point_string(w->x, f.m) + " <= " + point_string(w->y, f.m) +
             " in coordinate " + std::to_string(w->coordinate),
         "{\"x\":\"" + point_string(w->x, f.m) + "\",\"y\":\"" + point_string(w->y, f.m) +
             "\",\"coordinate\":" + std::to_string(w->coordinate) + "}");
  }
  CubeMorphism out{f.m, f.n, {}};
  out.coords.reserve(static_cast<std::size_t>(f.n));
  for (int c = 0; c < f.n; ++c) {
    std::vector<PointMask> minimal;
    for (PointMask x = 0; x < (PointMask(1) << f.m); ++x) {
      if (!((f.table[x] >> c) & 1u)) continue;
      bool is_minimal = true;
      for (int b = 0; b < f.m && is_minimal; ++b)
        if ((x >> b) & 1u && ((f.table[x ^ (PointMask(1) << b)] >> c) & 1u)) is_minimal = false;
      if (is_minimal) minimal.push_back(x);
    }
    out.coords.push_back(canonicalize(f.m, std::move(minimal)));
  }
  return out;
}

inline PointMask essential_support(const MonotoneBoolFn& f) { return f.support(); }

inline CubeMorphism compose(const CubeMorphism& psi, const CubeMorphism& phi) {
  if (psi.m != phi.n)
    fail("ArityMismatch", "compose: outer expects arity " + std::to_string(psi.m) +
                              ", inner produces " + std::to_string(phi.n));
  CubeMorphism out{phi.m, psi.n, {}};
  out.coords.reserve(static_cast<std::size_t>(psi.n));
  for (const auto& c : psi.coords) out.coords.push_back(mbf_substitute(c, phi.coords, phi.m));
  return out;
}

inline CubeMorphism tensor(const CubeMorphism& f, const CubeMorphism& g) {
  CubeMorphism out{f.m + g.m, f.n + g.n, {}};
  out.coords.reserve(static_cast<std::size_t>(out.n));
  for (const auto& c : f.coords) out.coords.push_back(mbf_shift(c, 0, out.m));
  for (const auto& c : g.coords) out.coords.push_back(mbf_shift(c, f.m, out.m));
  return out;
}

// (phi g)(x) = phi(g applied to x): each antichain member S becomes g^{-1}(S).
inline CubeMorphism act_permutation(const CubeMorphism& phi, const Permutation& g) {
  if (g.size() != phi.m) fail("ArityMismatch", "permutation size does not match arity");
  Permutation ginv = g.inverse();
  std::vector<int> varmap(static_cast<std::size_t>(phi.m));
  for (int i = 0; i < phi.m; ++i) varmap[static_cast<std::size_t>(i)] = ginv.img[static_cast<std::size_t>(i)] + 1;
  CubeMorphism out{phi.m, phi.n, {}};
  out.coords.reserve(phi.coords.size());
  for (const auto& c : phi.coords) out.coords.push_back(mbf_remap(c, varmap, phi.m));
  return out;
}

// The morphism x -> g.apply_point(x): coordinate g(j) reads variable j.
inline CubeMorphism permutation_morphism(const Permutation& g) {
  Permutation ginv = g.inverse();
  CubeMorphism out{g.size(), g.size(), {}};
  out.coords.reserve(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i)
    out.coords.push_back(MonotoneBoolFn::var(g.size(), ginv.img[static_cast<std::size_t>(i)] + 1));
  return out;
}

inline std::optional<Permutation> as_permutation(const CubeMorphism& f) {
  if (f.m != f.n) return std::nullopt;
  Permutation ginv;
  ginv.img.resize(static_cast<std::size_t>(f.m));
  std::vector<char> used(static_cast<std::size_t>(f.m), 0);
  for (int i = 0; i < f.n; ++i) {
    const auto& c = f.coords[static_cast<std::size_t>(i)];
    if (c.ac.size() != 1 || popcount(c.ac[0]) != 1) return std::nullopt;
    int j = mask_to_indices(c.ac[0])[0] - 1;
    if (used[static_cast<std::size_t>(j)]) return std::nullopt;
    used[static_cast<std::size_t>(j)] = 1;
    ginv.img[static_cast<std::size_t>(i)] = j;
  }
  return ginv.inverse();
}

inline bool is_surjective(const CubeMorphism& f) {
  if (f.n > f.m) return false;
  std::vector<char> hit(std::size_t(1) << f.n, 0);
  PointMask count = 0;
  for (PointMask x = 0; x < (PointMask(1) << f.m); ++x) {
    PointMask y = f.eval(x);
    if (!hit[y]) {
      hit[y] = 1;
      if (++count == (PointMask(1) << f.n)) return true;
    }
  }
  return false;
}

inline bool is_injective(const CubeMorphism& f) {
  if (f.m > f.n) return false;
  std::vector<char> hit(std::size_t(1) << f.n, 0);
  for (PointMask x = 0; x < (PointMask(1) << f.m); ++x) {
    PointMask y = f.eval(x);
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

// Fast interval-preservation test: the coordinate functions must have
// pairwise disjoint essential supports.  oracle_interval_check below decides
// the same property by enumerating every interval; the two are proven equal
// by exhaustive comparison in the test suite.
inline bool is_interval_preserving(const CubeMorphism& f) {
  PointMask used = 0;
  for (const auto& c : f.coords) {
    PointMask s = c.support();
    if ((s & used) != 0) return false;
    used |= s;
  }
  return true;
}

inline std::optional<std::array<int, 3>> overlap_witness(const CubeMorphism& f) {
  // Returns {coord_i, coord_j, shared_variable}, all 1-based.
  for (int i = 0; i < f.n; ++i)
    for (int j = i + 1; j < f.n; ++j) {
      PointMask shared = f.coords[static_cast<std::size_t>(i)].support() &
                         f.coords[static_cast<std::size_t>(j)].support();
      if (shared != 0) return std::array<int, 3>{i + 1, j + 1, mask_to_indices(shared & (~shared + 1))[0]};
    }
  return std::nullopt;
}

// Brute-force arbiter: walk all 3^m intervals of the source cube and check
// that the image of each equals the interval spanned by its endpoint images.
inline bool oracle_interval_check(const CubeMorphism& f) {
  if (f.m > 12) fail("SizeExceeded", "oracle_interval_check supports arity up to 12");
  std::vector<PointMask> image;
  for (PointMask lo = 0; lo < (PointMask(1) << f.m); ++lo) {
    PointMask rest = full_mask(f.m) & ~lo;
    PointMask free = rest;
    while (true) {  // all submasks of rest, including 0
      PointMask tlo = f.eval(lo), thi = f.eval(lo | free);
      image.clear();
      PointMask sub = free;
      while (true) {
        image.push_back(f.eval(lo | sub));
        if (sub == 0) break;
        sub = (sub - 1) & free;
      }
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      PointMask diff = tlo ^ thi;
      if (image.size() != (std::size_t(1) << popcount(diff))) return false;
      for (PointMask y : image)
        if ((tlo & ~y) != 0 || (y & ~thi) != 0) return false;
      if (free == 0) break;
      free = (free - 1) & rest;
    }
  }
  return true;
}

enum class VariantTag {
  MONOTONE,
  BOXPLUS,
  MEET_VARIANT,
  JOIN_VARIANT,
  LATTICE_VARIANT,
  DELTA1_STAR,
  NONE,
};

inline const char* variant_name(VariantTag t) {
  switch (t) {
    case VariantTag::MONOTONE: return "MONOTONE";
    case VariantTag::BOXPLUS: return "BOXPLUS";
    case VariantTag::MEET_VARIANT: return "MEET_VARIANT";
    case VariantTag::JOIN_VARIANT: return "JOIN_VARIANT";
    case VariantTag::LATTICE_VARIANT: return "LATTICE_VARIANT";
    case VariantTag::DELTA1_STAR: return "DELTA1_STAR";
    case VariantTag::NONE: return "NONE";
  }
  return "NONE";
}

inline std::optional<VariantTag> variant_from_name(const std::string& s) {
  for (VariantTag t : {VariantTag::MONOTONE, VariantTag::BOXPLUS, VariantTag::MEET_VARIANT,
                       VariantTag::JOIN_VARIANT, VariantTag::LATTICE_VARIANT,
                       VariantTag::DELTA1_STAR, VariantTag::NONE})
    if (s == variant_name(t)) return t;
  return std::nullopt;
}

namespace detail {

inline bool coord_is_meet(const MonotoneBoolFn& c) { return c.ac.size() <= 1; }

inline bool coord_is_join(const MonotoneBoolFn& c) {
  for (PointMask s : c.ac)
    if (popcount(s) > 1) return false;
  return true;
}

inline bool coord_is_lattice(const MonotoneBoolFn& c) {
  return coord_is_meet(c) && coord_is_join(c);
}

inline bool vars_strictly_increasing(const CubeMorphism& f) {
  int last = 0;
  for (const auto& c : f.coords) {
    if (c.is_constant()) continue;
    int v = mask_to_indices(c.ac[0])[0];
    if (v <= last) return false;
    last = v;
  }
  return true;
}

}  // namespace detail

// Tags are cumulative along the chain MONOTONE > BOXPLUS > MEET/JOIN >
// LATTICE > DELTA1_STAR; the closed-form tests below match the sub-monoidal
// categories generated by the corresponding generator families.
inline std::vector<VariantTag> classify(const CubeMorphism& f) {
  std::vector<VariantTag> tags{VariantTag::MONOTONE};
  if (!is_interval_preserving(f)) return tags;
  tags.push_back(VariantTag::BOXPLUS);
  bool meet = true, join = true;
  for (const auto& c : f.coords) {
    meet = meet && detail::coord_is_meet(c);
    join = join && detail::coord_is_join(c);
  }
  if (meet) tags.push_back(VariantTag::MEET_VARIANT);
  if (join) tags.push_back(VariantTag::JOIN_VARIANT);
  if (meet && join) {
    tags.push_back(VariantTag::LATTICE_VARIANT);
    if (detail::vars_strictly_increasing(f)) tags.push_back(VariantTag::DELTA1_STAR);
  }
  return tags;
}

inline std::vector<VariantTag> classify(const RawMap& f) {
  if (monotonicity_witness(f)) return {VariantTag::NONE};
  return classify(from_table(f));
}

// Every morphism [1]^m -> [1]^n in the named variant, in canonical order.
// Deterministic: coordinate candidates are generated sorted and the
// coordinate tuples are emitted in odometer order over them.
inline std::vector<CubeMorphism> enumerate_hom(int m, int n, VariantTag tag) {
  if (tag == VariantTag::NONE) fail("BadArgument", "cannot enumerate the NONE variant");
  std::vector<MonotoneBoolFn> all = enumerate_mbf(m);
  std::vector<MonotoneBoolFn> candidates;
  for (const auto& f : all) {
    bool ok = true;
    switch (tag) {
      case VariantTag::MONOTONE:
      case VariantTag::BOXPLUS: break;
      case VariantTag::MEET_VARIANT: ok = detail::coord_is_meet(f); break;
      case VariantTag::JOIN_VARIANT: ok = detail::coord_is_join(f); break;
      case VariantTag::LATTICE_VARIANT:
      case VariantTag::DELTA1_STAR: ok = detail::coord_is_lattice(f); break;
      default: break;
    }
    if (ok) candidates.push_back(f);
  }
  bool disjoint = tag != VariantTag::MONOTONE;
  bool increasing = tag == VariantTag::DELTA1_STAR;

  std::vector<CubeMorphism> out;
  std::vector<MonotoneBoolFn> chosen;
  auto dfs = [&](auto&& self, PointMask used, int last_var) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      out.push_back(CubeMorphism{m, n, chosen});
      return;
    }
    for (const auto& c : candidates) {
      PointMask s = c.support();
      if (disjoint && (s & used) != 0) continue;
      if (increasing && !c.is_constant()) {
        int v = mask_to_indices(c.ac[0])[0];
        if (v <= last_var) continue;
      }
      chosen.push_back(c);
      self(self, used | s, (increasing && !c.is_constant()) ? mask_to_indices(c.ac[0])[0] : last_var);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

enum class GeneratorKind {
  sigma,        // [1] -> [0]
  delta_minus,  // [0] -> [1], picks 0
  delta_plus,   // [0] -> [1], picks 1
  tau,          // swap two coordinates
  gamma_minus,  // binary min
  gamma_plus,   // binary max
  diag,         // x -> (x, x)
  reverse,      // x -> 1 - x (not monotone; returned as RawMap)
};

inline CubeMorphism basic_generator(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::sigma: return CubeMorphism{1, 0, {}};
    case GeneratorKind::delta_minus: return CubeMorphism{0, 1, {MonotoneBoolFn::const_false(0)}};
    case GeneratorKind::delta_plus: return CubeMorphism{0, 1, {MonotoneBoolFn::const_true(0)}};
    case GeneratorKind::tau:
      return CubeMorphism{2, 2, {MonotoneBoolFn::var(2, 2), MonotoneBoolFn::var(2, 1)}};
    case GeneratorKind::gamma_minus: return CubeMorphism{2, 1, {MonotoneBoolFn{2, {0b11}}}};
    case GeneratorKind::gamma_plus: return CubeMorphism{2, 1, {MonotoneBoolFn{2, {0b01, 0b10}}}};
    case GeneratorKind::diag:
      return CubeMorphism{1, 2, {MonotoneBoolFn::var(1, 1), MonotoneBoolFn::var(1, 1)}};
    case GeneratorKind::reverse: break;
  }
  fail("BadArgument", "reverse has no monotone form; use named_generator");
}

// id^(i-1) (x) kind (x) id^(n-i), 1 <= i <= n.  For reverse the result is a
// truth table since the map is not monotone.
inline std::variant<CubeMorphism, RawMap> named_generator(GeneratorKind kind, int i, int n) {
  if (i < 1 || i > n) fail("BadArgument", "generator position out of range");
  if (kind == GeneratorKind::reverse) {
    RawMap r{n, n, {}};
    r.table.resize(std::size_t(1) << n);
    for (PointMask x = 0; x < (PointMask(1) << n); ++x)
      r.table[x] = x ^ (PointMask(1) << (i - 1));
    return r;
  }
  CubeMorphism mid = basic_generator(kind);
  return tensor(tensor(CubeMorphism::identity(i - 1), mid), CubeMorphism::identity(n - i));
}

}  // namespace boxcat
