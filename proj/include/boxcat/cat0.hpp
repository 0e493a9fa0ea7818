#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "boxcat/complex.hpp"
#include "boxcat/poset.hpp"

namespace boxcat {

// Greatest lower bound of two elements, if it exists.
inline std::optional<int> meet_of(const FinPoset& p, int x, int y) {
  std::vector<int> lower;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(z, x) && p.leq(z, y)) lower.push_back(z);
  for (int g : lower) {
    bool greatest = true;
    for (int z : lower)
      if (!p.leq(z, g)) {
        greatest = false;
        break;
      }
    if (greatest) return g;
  }
  return std::nullopt;
}

// Least upper bound of a family of elements, if it exists.
inline std::optional<int> sup_of(const FinPoset& p, const std::vector<int>& xs) {
  std::vector<int> upper;
  for (int z = 0; z < p.size(); ++z) {
    bool above = true;
    for (int x : xs)
      if (!p.leq(x, z)) {
        above = false;
        break;
      }
    if (above) upper.push_back(z);
  }
  for (int s : upper) {
    bool least = true;
    for (int z : upper)
      if (!p.leq(s, z)) {
        least = false;
        break;
      }
    if (least) return s;
  }
  return std::nullopt;
}

// Outcome of the distributivity check.  When ok is false, `family` and `y`
// name the counterexample: sup(family) exists, but sup{x ∧ y : x ∈ family}
// either does not exist (sup_missing) or differs from sup(family) ∧ y.
struct DistributivityCheck {
  bool ok = true;
  std::vector<int> family;
  int y = -1;
  bool sup_missing = false;
  int expected = -1;  // sup(family) ∧ y
  int actual = -1;    // sup of the meets, when it exists
};

// A meet-semilattice is distributive when for every family {x_1..x_k} whose
// supremum exists and every y, the supremum of {x_i ∧ y} exists and equals
// (sup x_i) ∧ y.  Binary meets are required up front (NotMeetSemilattice).
//
// Only antichain families of size >= 2 are enumerated: replacing a family
// by its maximal elements changes neither side of the condition (both sets
// have the same upper bounds), and a family whose maximal elements form a
// singleton passes vacuously.
inline DistributivityCheck is_distributive_meet_semilattice(const FinPoset& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (!meet_of(p, x, y))
        fail("NotMeetSemilattice", "no meet of " + p.name(x) + " and " + p.name(y),
             "{\"x\":\"" + p.name(x) + "\",\"y\":\"" + p.name(y) + "\"}");

  std::vector<int> family;
  DistributivityCheck result;
  auto check_family = [&]() -> bool {  // true when a counterexample was found
    auto s = sup_of(p, family);
    if (!s) return false;
    for (int y = 0; y < p.size(); ++y) {
      std::vector<int> meets;
      meets.reserve(family.size());
      for (int x : family) meets.push_back(*meet_of(p, x, y));
      int expected = *meet_of(p, *s, y);
      auto t = sup_of(p, meets);
      if (t && *t == expected) continue;
      result.ok = false;
      result.family = family;
      result.y = y;
      result.sup_missing = !t.has_value();
      result.expected = expected;
      result.actual = t ? *t : -1;
      return true;
    }
    return false;
  };
  auto dfs = [&](auto&& self, int start) -> bool {
    if (family.size() >= 2 && check_family()) return true;
    for (int e = start; e < p.size(); ++e) {
      bool incomparable = true;
      for (int x : family)
        if (p.leq(x, e) || p.leq(e, x)) {
          incomparable = false;
          break;
        }
      if (!incomparable) continue;
      family.push_back(e);
      if (self(self, e + 1)) return true;
      family.pop_back();
    }
    return false;
  };
  dfs(dfs, 0);
  return result;
}

// A set of pairwise-adjacent link vertices (edge cells at `vertex`) that
// spans no cell of the complex.
struct FlagWitness {
  int vertex = -1;              // base poset element id
  std::vector<int> edge_cells;  // cell indices, ascending
};

struct CurvatureCheck {
  bool ok = true;
  std::optional<FlagWitness> witness;
};

// Gromov's link condition: for each vertex v, the link has the edges at v
// as vertices and the (d+1)-cells at v as d-simplices, and the complex is
// nonpositively curved when every such link is flag, i.e. every set of
// pairwise-adjacent link vertices spans a simplex.  Vertices are scanned in
// ascending element id and cliques in ascending cell id, so the reported
// witness is the lowest one.
inline CurvatureCheck is_nonpositively_curved(const CubeComplex& cx) {
  std::map<std::pair<int, int>, int> cell_index;
  for (std::size_t i = 0; i < cx.cells.size(); ++i)
    cell_index[{cx.cells[i].lo, cx.cells[i].hi}] = static_cast<int>(i);

  for (const auto& vcell : cx.cells) {
    if (vcell.rank != 0) continue;
    int v = vcell.lo;

    std::vector<int> link;  // edge cells at v, ascending cell index
    for (std::size_t c = 0; c < cx.cells.size(); ++c)
      if (cx.cells[c].rank == 1 && (cx.cells[c].lo == v || cx.cells[c].hi == v))
        link.push_back(static_cast<int>(c));

    // link simplices: each rank-r cell through v contributes the (r-1)-simplex
    // of its r edge directions at v
    std::vector<std::set<std::vector<int>>> spanned;
    for (const auto& cell : cx.cells) {
      if (cell.rank < 1) continue;
      int pos = -1;
      for (std::size_t s = 0; s < cell.members.size(); ++s)
        if (cell.members[s] == v) {
          pos = static_cast<int>(s);
          break;
        }
      if (pos < 0) continue;
      std::vector<int> simplex;
      for (int a = 0; a < cell.rank; ++a) {
        PointMask bit = PointMask(1) << a;
        int u = cell.members[static_cast<PointMask>(pos) ^ bit];
        auto ends = (static_cast<PointMask>(pos) & bit) ? std::pair{u, v} : std::pair{v, u};
        auto it = cell_index.find(ends);
        if (it == cell_index.end()) fail("Internal", "edge of a cell is missing from the complex");
        simplex.push_back(it->second);
      }
      std::sort(simplex.begin(), simplex.end());
      if (static_cast<std::size_t>(cell.rank) > spanned.size()) spanned.resize(cell.rank);
      spanned[static_cast<std::size_t>(cell.rank) - 1].insert(std::move(simplex));
    }

    auto adjacent = [&](int e, int f) {
      std::vector<int> pair{std::min(e, f), std::max(e, f)};
      return spanned.size() > 1 && spanned[1].count(pair) > 0;
    };

    std::vector<int> clique;
    auto dfs = [&](auto&& self, std::size_t start) -> bool {
      if (clique.size() >= 3) {
        std::size_t d = clique.size() - 1;
        if (spanned.size() <= d || spanned[d].count(clique) == 0) return true;
      }
      for (std::size_t i = start; i < link.size(); ++i) {
        bool joined = true;
        for (int e : clique)
          if (!adjacent(e, link[i])) {
            joined = false;
            break;
          }
        if (!joined) continue;
        clique.push_back(link[i]);
        if (self(self, i + 1)) return true;
        clique.pop_back();
      }
      return false;
    };
    if (dfs(dfs, 0)) return CurvatureCheck{false, FlagWitness{v, clique}};
  }
  return CurvatureCheck{};
}

}  // namespace boxcat
