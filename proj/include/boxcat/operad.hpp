#pragma once

#include <vector>

#include "boxcat/mbf.hpp"

namespace boxcat {

// The n-th free distributive lattice, realized as monotone Boolean
// functions of n variables in antichain form.  With or without the two
// constants these are exactly the hom-sets into the interval, and
// substitution makes the family an operad.
using OperadElement = MonotoneBoolFn;

inline OperadElement op_generator(int n, int i) { return MonotoneBoolFn::var(n, i); }

inline OperadElement op_meet(const OperadElement& f, const OperadElement& g) {
  if (f.m != g.m) fail("ArityMismatch", "meet of elements of different arities");
  return mbf_meet(f, g);
}

inline OperadElement op_join(const OperadElement& f, const OperadElement& g) {
  if (f.m != g.m) fail("ArityMismatch", "join of elements of different arities");
  return mbf_join(f, g);
}

// Operadic substitution: plug inner[i-1] into variable i of the outer
// element, with the inner variable blocks shifted to be disjoint.  The
// result has arity equal to the sum of the inner arities.
inline OperadElement substitute(const OperadElement& outer,
                                const std::vector<OperadElement>& inner) {
  if (static_cast<int>(inner.size()) != outer.m)
    fail("ArityMismatch", "substitution needs one inner element per variable");
  int total = 0;
  for (const auto& f : inner) total += f.m;
  if (total > kMaxArity) fail("SizeExceeded", "substitution result arity too large");
  std::vector<MonotoneBoolFn> shifted;
  shifted.reserve(inner.size());
  int offset = 0;
  for (const auto& f : inner) {
    shifted.push_back(mbf_shift(f, offset, total));
    offset += f.m;
  }
  return mbf_substitute(outer, shifted, total);
}

// All elements of the free distributive lattice on n generators; set
// with_bounds to include the empty meet and empty join (the constants).
inline std::vector<OperadElement> enumerate_fdl(int n, bool with_bounds) {
  std::vector<OperadElement> all = enumerate_mbf(n);
  if (with_bounds) return all;
  std::vector<OperadElement> out;
  out.reserve(all.size());
  for (const auto& f : all)
    if (!f.is_constant()) out.push_back(f);
  return out;
}

}  // namespace boxcat
