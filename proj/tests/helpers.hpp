#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "boxcat/boxcat.hpp"

namespace testutil {

// Antichain literal: mk(2, {{1,2}}) is the conjunction x1 ^ x2.
inline boxcat::MonotoneBoolFn mk(int arity, std::vector<std::vector<int>> members) {
  std::vector<boxcat::PointMask> masks;
  masks.reserve(members.size());
  for (const auto& v : members) masks.push_back(boxcat::indices_to_mask(v, arity));
  return boxcat::canonicalize(arity, std::move(masks));
}

inline boxcat::CubeMorphism mkmap(int m, std::vector<boxcat::MonotoneBoolFn> coords) {
  return boxcat::CubeMorphism{m, static_cast<int>(coords.size()), std::move(coords)};
}

inline std::vector<boxcat::Permutation> all_permutations(int m) {
  std::vector<boxcat::Permutation> out;
  std::vector<int> one(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) one[static_cast<std::size_t>(i)] = i + 1;
  do out.push_back(boxcat::Permutation::from_one_line(one));
  while (std::next_permutation(one.begin(), one.end()));
  return out;
}

// Permutations preserving each block of the partition (blocks, then the
// dropped tail) setwise.
inline std::vector<boxcat::Permutation> block_permutations(const std::vector<int>& blocks,
                                                          int dropped, int m) {
  std::vector<int> ends;
  int off = 0;
  for (int b : blocks) {
    off += b;
    ends.push_back(off);
  }
  ends.push_back(off + dropped);
  std::vector<boxcat::Permutation> out;
  for (const auto& g : all_permutations(m)) {
    bool ok = true;
    int lo = 0;
    for (int e : ends) {
      for (int j = lo; j < e && ok; ++j) ok = g.img[static_cast<std::size_t>(j)] >= lo && g.img[static_cast<std::size_t>(j)] < e;
      if (!ok) break;
      lo = e;
    }
    if (ok) out.push_back(g);
  }
  return out;
}

inline boxcat::MonotoneBoolFn random_mbf(std::mt19937& rng, int arity) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<boxcat::PointMask> mask(0, (boxcat::PointMask(1) << arity) - 1);
  std::vector<boxcat::PointMask> members;
  int c = count(rng);
  for (int i = 0; i < c; ++i) members.push_back(mask(rng));
  return boxcat::canonicalize(arity, std::move(members));
}

inline boxcat::CubeMorphism random_monotone_map(std::mt19937& rng, int m, int n) {
  std::vector<boxcat::MonotoneBoolFn> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) coords.push_back(random_mbf(rng, m));
  return boxcat::CubeMorphism{m, n, std::move(coords)};
}

}  // namespace testutil
