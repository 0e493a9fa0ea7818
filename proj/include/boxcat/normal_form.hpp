#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "boxcat/morphism.hpp"

namespace boxcat {

// phi * g = factors[0] (x) ... (x) factors[n-1] (x) drop^dropped, where g is
// the canonical coset representative sending the i-th consecutive block
// order-preservingly onto the sorted essential support of coordinate i and
// the tail onto the unused variables in increasing order.
struct Decomposition {
  std::vector<int> blocks;
  Permutation g;
  std::vector<MonotoneBoolFn> factors;  // factor i has arity blocks[i]
  int dropped = 0;
};

inline Decomposition decompose(const CubeMorphism& phi) {
  if (auto w = overlap_witness(phi)) {
    auto [ci, cj, v] = *w;
    fail("NotBoxplus",
         "coordinates " + std::to_string(ci) + " and " + std::to_string(cj) +
             " share variable " + std::to_string(v),
         "{\"coordinates\":[" + std::to_string(ci) + "," + std::to_string(cj) +
             "],\"variable\":" + std::to_string(v) + "}");
  }
  Decomposition d;
  d.g.img.assign(static_cast<std::size_t>(phi.m), -1);
  PointMask used = 0;
  int pos = 0;  // 0-based position within the domain of the tensor form
  for (const auto& c : phi.coords) {
    std::vector<int> support = mask_to_indices(c.support());
    d.blocks.push_back(static_cast<int>(support.size()));
    std::vector<int> varmap(static_cast<std::size_t>(phi.m), 0);
    for (std::size_t r = 0; r < support.size(); ++r) {
      d.g.img[static_cast<std::size_t>(pos)] = support[r] - 1;
      varmap[static_cast<std::size_t>(support[r] - 1)] = static_cast<int>(r) + 1;
      ++pos;
    }
    d.factors.push_back(mbf_remap(c, varmap, static_cast<int>(support.size())));
    used |= c.support();
  }
  for (int v = 1; v <= phi.m; ++v) {
    if ((used >> (v - 1)) & 1u) continue;
    d.g.img[static_cast<std::size_t>(pos)] = v - 1;
    ++pos;
    ++d.dropped;
  }
  return d;
}

inline CubeMorphism recompose(const Decomposition& d) {
  int m = d.g.size();
  int n = static_cast<int>(d.factors.size());
  CubeMorphism tens{m, n, {}};
  int offset = 0;
  for (int i = 0; i < n; ++i) {
    tens.coords.push_back(mbf_shift(d.factors[static_cast<std::size_t>(i)], offset, m));
    offset += d.blocks[static_cast<std::size_t>(i)];
  }
  return act_permutation(tens, d.g.inverse());
}

// Does phi * g split as a tensor along consecutive blocks of the given
// sizes, each factor depending on its whole block?  Used by the uniqueness
// tests to find every permutation satisfying the decomposition equation.
inline bool permutation_fits_blocks(const CubeMorphism& phi, const Permutation& g,
                                    const std::vector<int>& blocks) {
  CubeMorphism moved = act_permutation(phi, g);
  int offset = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    PointMask want = full_mask(blocks[i]) << offset;
    if (moved.coords[i].support() != want) return false;
    offset += blocks[i];
  }
  return true;
}

// One coface [1]^(a-1) -> [1]^a inserting the given constant at `position`.
struct Coface {
  bool positive = false;
  int position = 1;  // 1-based target coordinate
  int ambient = 1;   // arity of the target cube
};

// A composite of cofaces applied left to right, each raising the ambient
// arity by one.
using CofaceWord = std::vector<Coface>;

inline CubeMorphism coface_morphism(const Coface& c) {
  CubeMorphism f{c.ambient - 1, c.ambient, {}};
  for (int i = 1; i <= c.ambient; ++i) {
    if (i < c.position)
      f.coords.push_back(MonotoneBoolFn::var(f.m, i));
    else if (i == c.position)
      f.coords.push_back(c.positive ? MonotoneBoolFn::const_true(f.m)
                                    : MonotoneBoolFn::const_false(f.m));
    else
      f.coords.push_back(MonotoneBoolFn::var(f.m, i - 1));
  }
  return f;
}

inline CubeMorphism eval_coface_word(const CofaceWord& word, int start_arity) {
  CubeMorphism acc = CubeMorphism::identity(start_arity);
  for (const Coface& c : word) {
    if (c.ambient != acc.n + 1)
      fail("BadArgument", "coface word has inconsistent ambient arities");
    acc = compose(coface_morphism(c), acc);
  }
  return acc;
}

// Injective morphism [1]^rank -> [1]^n with the given interval as image,
// written as a coface word inserting the frozen coordinates in increasing
// order.
inline CofaceWord interval_inclusion(const Interval& iv) {
  CofaceWord word;
  PointMask varying = iv.lo.bits ^ iv.hi.bits;
  // Insert frozen coordinates in increasing order; coordinate c lands at its
  // index within the coordinates present once it joins (the varying ones
  // plus the frozen ones already inserted, which all lie below c).
  std::vector<int> current = mask_to_indices(varying);
  int ambient = iv.rank();
  for (int c = 1; c <= iv.lo.n; ++c) {
    if ((varying >> (c - 1)) & 1u) continue;
    auto it = std::upper_bound(current.begin(), current.end(), c);
    int position = static_cast<int>(it - current.begin()) + 1;
    current.insert(it, c);
    ++ambient;
    word.push_back(Coface{get_bit(iv.lo.bits, c), position, ambient});
  }
  return word;
}

struct Factorization {
  CubeMorphism epi;    // [1]^m -> [1]^rank, surjective
  CofaceWord mono;     // evaluates to an injective [1]^rank -> [1]^n
  Interval image;
};

// Split phi into the surjection onto its image followed by the coface
// inclusion of the image.  The image of an interval-preserving map is the
// interval spanned by the images of the extremes.
inline Factorization epi_mono_factorize(const CubeMorphism& phi) {
  if (!is_interval_preserving(phi)) {
    auto w = overlap_witness(phi);
    fail("NotBoxplus", "map does not preserve intervals",
         w ? "{\"coordinates\":[" + std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) +
                 "],\"variable\":" + std::to_string((*w)[2]) + "}"
           : "");
  }
  PointMask tlo = phi.eval(0), thi = phi.eval(full_mask(phi.m));
  Interval image = make_interval(Point{phi.n, tlo}, Point{phi.n, thi});
  Factorization f{CubeMorphism{phi.m, image.rank(), {}}, interval_inclusion(image), image};
  for (int c = 1; c <= phi.n; ++c)
    if (get_bit(tlo ^ thi, c)) f.epi.coords.push_back(phi.coords[static_cast<std::size_t>(c - 1)]);
  return f;
}

namespace detail {

// Preferred section endpoints of a surjection [1]^mm -> [1]: the
// lexicographically greatest maximal preimage of 0, then the
// lexicographically least minimal preimage of 1 above it.  The second always
// covers the first.
inline std::pair<PointMask, PointMask> section_edge(const MonotoneBoolFn& f) {
  int mm = f.m;
  PointMask top = full_mask(mm);
  std::optional<PointMask> lo;
  for (PointMask x = 0; x <= top; ++x) {
    if (f.eval(x)) {
      if (x == top) break;
      continue;
    }
    bool maximal = true;
    for (int b = 0; b < mm && maximal; ++b)
      if (!((x >> b) & 1u) && !f.eval(x | (PointMask(1) << b))) maximal = false;
    if (!maximal) continue;
    if (!lo || lex_point_less(*lo, x, mm)) lo = x;
    if (x == top) break;
  }
  if (!lo) fail("NotSurjective", "coordinate function never takes the value 0");
  std::optional<PointMask> hi;
  for (PointMask y = 0; y <= top; ++y) {
    if (!f.eval(y) || !point_leq(*lo, y)) {
      if (y == top) break;
      continue;
    }
    bool minimal = true;
    for (int b = 0; b < mm && minimal; ++b) {
      PointMask bit = PointMask(1) << b;
      if ((y & bit) && !(*lo & bit) && f.eval(y ^ bit)) minimal = false;
    }
    if (minimal && (!hi || lex_point_less(y, *hi, mm))) hi = y;
    if (y == top) break;
  }
  if (!hi) fail("NotSurjective", "coordinate function never takes the value 1 above the chosen 0");
  if (popcount(*lo ^ *hi) != 1)
    fail("Internal", "section endpoints do not form an edge");
  return {*lo, *hi};
}

}  // namespace detail

// A section of a surjective interval-preserving map, built blockwise from
// the preferred edge of each tensor factor; dropped coordinates are filled
// with 0.  The result satisfies pi . s = id and is itself
// interval-preserving.
inline CubeMorphism construct_section(const CubeMorphism& pi) {
  if (!is_surjective(pi)) fail("NotSurjective", "construct_section needs a surjection");
  Decomposition d = decompose(pi);
  CubeMorphism s{pi.n, pi.m, {}};
  s.coords.assign(static_cast<std::size_t>(pi.m), MonotoneBoolFn::const_false(pi.n));
  int offset = 0;
  for (int i = 0; i < static_cast<int>(d.blocks.size()); ++i) {
    auto [lo, hi] = detail::section_edge(d.factors[static_cast<std::size_t>(i)]);
    PointMask moving = lo ^ hi;
    for (int r = 0; r < d.blocks[static_cast<std::size_t>(i)]; ++r) {
      int target = d.g.img[static_cast<std::size_t>(offset + r)];  // 0-based coordinate of the domain of pi
      PointMask bit = PointMask(1) << r;
      if (moving & bit)
        s.coords[static_cast<std::size_t>(target)] = MonotoneBoolFn::var(pi.n, i + 1);
      else if (lo & bit)
        s.coords[static_cast<std::size_t>(target)] = MonotoneBoolFn::const_true(pi.n);
      // else stays constant 0
    }
    offset += d.blocks[static_cast<std::size_t>(i)];
  }
  // dropped tail coordinates keep the constant-0 fill
  return s;
}

// All interval-preserving sections of pi, by filtering the hom-set of
// candidate right inverses.  Exhaustive, so the source arity is capped.
inline std::vector<CubeMorphism> sections_of(const CubeMorphism& pi, int max_arity = 5) {
  if (pi.m > max_arity) fail("SizeExceeded", "sections_of arity cap exceeded");
  std::vector<CubeMorphism> out;
  CubeMorphism id = CubeMorphism::identity(pi.n);
  for (const auto& s : enumerate_hom(pi.n, pi.m, VariantTag::BOXPLUS))
    if (compose(pi, s) == id) out.push_back(s);
  return out;
}

// Witness that a non-monotone map contains a coordinate reversal: an edge of
// the source on which some output coordinate strictly drops.  Precomposing
// with the edge inclusion and postcomposing with that coordinate's
// projection gives exactly the reversal map.
struct ReversalWitness {
  CofaceWord pre;   // [1] -> [1]^m onto the offending edge
  int coordinate;   // 1-based output coordinate to project onto
  PointMask x, y;   // the edge, x covered by y
};

inline ReversalWitness extract_reversal(const RawMap& f) {
  auto w = monotonicity_witness(f);
  if (!w) fail("BadArgument", "map is monotone; no reversal to extract");
  Interval edge = make_interval(Point{f.m, w->x}, Point{f.m, w->y});
  return ReversalWitness{interval_inclusion(edge), w->coordinate, w->x, w->y};
}

// Witness that a monotone map fails to preserve intervals: an edge whose
// endpoint images differ in at least two coordinates.  Restricting to the
// edge, retracting onto the spanned target interval and projecting to its
// first two directions yields the doubling map x -> (x, x).
struct DiagonalWitness {
  CofaceWord pre;            // [1] -> [1]^m onto the offending edge
  CubeMorphism retraction;   // [1]^n -> [1]^rank, projection onto the spanned interval
  CubeMorphism to_square;    // [1]^rank -> [1]^2, first two directions
  PointMask x, y;
};

inline DiagonalWitness extract_diagonal(const CubeMorphism& phi) {
  for (PointMask x = 0; x < (PointMask(1) << phi.m); ++x) {
    for (int b = 0; b < phi.m; ++b) {
      if ((x >> b) & 1u) continue;
      PointMask y = x | (PointMask(1) << b);
      PointMask diff = phi.eval(x) ^ phi.eval(y);
      if (popcount(diff) < 2) continue;
      Interval edge = make_interval(Point{phi.m, x}, Point{phi.m, y});
      std::vector<int> dirs = mask_to_indices(diff);
      CubeMorphism retraction{phi.n, static_cast<int>(dirs.size()), {}};
      for (int v : dirs) retraction.coords.push_back(MonotoneBoolFn::var(phi.n, v));
      CubeMorphism to_square{retraction.n, 2,
                             {MonotoneBoolFn::var(retraction.n, 1), MonotoneBoolFn::var(retraction.n, 2)}};
      return DiagonalWitness{interval_inclusion(edge), retraction, to_square, x, y};
    }
  }
  fail("BadArgument", "map sends every edge onto an interval; no doubling to extract");
}

}  // namespace boxcat
