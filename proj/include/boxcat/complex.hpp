#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boxcat/morphism.hpp"
#include "boxcat/poset.hpp"

namespace boxcat {

// A Boolean interval [lo, hi] of a poset: an interval order-isomorphic to a
// powerset lattice.  `atoms` are the immediate successors of lo within the
// interval; `members` maps each subset of atoms (as a bit mask) to the
// element it corresponds to under the isomorphism.
struct BoolInterval {
  int lo = 0;
  int hi = 0;
  int rank = 0;
  std::vector<int> atoms;
  std::vector<int> members;  // indexed by atom subset mask, size 2^rank
};

// Decide whether [lo, hi] is Boolean by building the atom map and checking
// it is an order-isomorphism onto the powerset of the atoms.
inline std::optional<BoolInterval> boolean_interval(const FinPoset& p, int lo, int hi) {
  if (!p.leq(lo, hi)) return std::nullopt;
  std::vector<int> members;
  for (int y = 0; y < p.size(); ++y)
    if (p.leq(lo, y) && p.leq(y, hi)) members.push_back(y);
  std::vector<int> atoms;
  for (int y : members) {
    if (y == lo) continue;
    bool immediate = true;  // nothing strictly between lo and y inside the interval
    for (int z : members)
      if (z != lo && z != y && p.lt(z, y)) {
        immediate = false;
        break;
      }
    if (immediate) atoms.push_back(y);
  }
  int rank = static_cast<int>(atoms.size());
  if (rank > 20) return std::nullopt;
  if (members.size() != (std::size_t(1) << rank)) return std::nullopt;
  BoolInterval iv{lo, hi, rank, atoms, std::vector<int>(std::size_t(1) << rank, -1)};
  std::vector<PointMask> member_mask(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    PointMask mask = 0;
    for (int a = 0; a < rank; ++a)
      if (p.leq(atoms[static_cast<std::size_t>(a)], members[i])) mask |= PointMask(1) << a;
    member_mask[i] = mask;
    if (iv.members[mask] != -1) return std::nullopt;  // not injective
    iv.members[mask] = members[i];
  }
  // injective onto all 2^rank subsets; check the inverse is monotone too
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if ((member_mask[i] & ~member_mask[j]) == 0 && !p.leq(members[i], members[j]))
        return std::nullopt;
  return iv;
}

inline std::vector<BoolInterval> boolean_intervals(const FinPoset& p) {
  std::vector<BoolInterval> out;
  for (int lo = 0; lo < p.size(); ++lo)
    for (int hi = 0; hi < p.size(); ++hi)
      if (auto iv = boolean_interval(p, lo, hi)) out.push_back(std::move(*iv));
  return out;
}

struct Facet {
  int cell = 0;      // index of the facet cell
  int dir = 0;       // 1-based atom direction within the parent cell
  bool hi_side = false;
};

// The cubical complex of all Boolean intervals of a poset.  Cells are
// sorted by (rank, lo, hi), so the rank-0 cells come first in element id
// order and cell index equals element id there.  Incidence lists the 2r
// facets of each rank-r cell.
struct CubeComplex {
  FinPoset base;
  std::vector<BoolInterval> cells;
  std::vector<std::vector<Facet>> incidence;

  std::vector<std::size_t> rank_counts() const {
    std::vector<std::size_t> counts;
    for (const auto& c : cells) {
      if (static_cast<std::size_t>(c.rank) >= counts.size()) counts.resize(static_cast<std::size_t>(c.rank) + 1, 0);
      ++counts[static_cast<std::size_t>(c.rank)];
    }
    return counts;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (const auto& c : cells) chi += (c.rank % 2 == 0) ? 1 : -1;
    return chi;
  }
};

namespace detail {

inline void build_incidence(CubeComplex& cx) {
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < cx.cells.size(); ++i)
    index[{cx.cells[i].lo, cx.cells[i].hi}] = static_cast<int>(i);
  cx.incidence.assign(cx.cells.size(), {});
  for (std::size_t i = 0; i < cx.cells.size(); ++i) {
    const BoolInterval& c = cx.cells[i];
    PointMask full = full_mask(c.rank);
    for (int a = 1; a <= c.rank; ++a) {
      PointMask bit = PointMask(1) << (a - 1);
      int lo_facet_hi = c.members[full & ~bit];
      int hi_facet_lo = c.members[bit];
      auto lo_it = index.find({c.lo, lo_facet_hi});
      auto hi_it = index.find({hi_facet_lo, c.hi});
      if (lo_it == index.end() || hi_it == index.end())
        fail("Internal", "facet of a Boolean interval is missing from the complex");
      cx.incidence[i].push_back(Facet{lo_it->second, a, false});
      cx.incidence[i].push_back(Facet{hi_it->second, a, true});
    }
  }
}

}  // namespace detail

inline CubeComplex boolean_complex(const FinPoset& p) {
  CubeComplex cx;
  cx.base = p;
  cx.cells = boolean_intervals(p);
  std::sort(cx.cells.begin(), cx.cells.end(), [](const BoolInterval& a, const BoolInterval& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  detail::build_incidence(cx);
  return cx;
}

// Keep only the cells of rank at most d.  Facets of surviving cells always
// survive, so incidence just needs reindexing.
inline CubeComplex truncate(const CubeComplex& cx, int d) {
  CubeComplex out;
  out.base = cx.base;
  for (const auto& c : cx.cells)
    if (c.rank <= d) out.cells.push_back(c);
  detail::build_incidence(out);
  return out;
}

// The (k+1)-fold edgewise subdivision of the cube [1]^n: the Boolean
// complex of the poset of monotone (k+1)-tuples of cube points.  Rank-d
// cells number C(n,d) (k+1)^d (k+2)^(n-d).
inline CubeComplex subdivide_representable(int n, int k) {
  if (n < 0 || n > 4 || k < 0 || k > 3)
    fail("SizeExceeded", "subdivide_representable supports n <= 4 and k <= 3");
  FunctionPoset fp = function_poset(cube_poset(n), k);
  return boolean_complex(fp.poset);
}

// Vertex part of the counit of the 3-fold subdivision: a vertex of
// sd_3 [1]^n is a monotone triple of points, and the counit evaluates it at
// the middle index.
inline std::vector<PointMask> counit_vertex_map(int n) {
  FunctionPoset fp = function_poset(cube_poset(n), 2);
  std::vector<PointMask> out;
  out.reserve(fp.tuples.size());
  for (const auto& t : fp.tuples) out.push_back(static_cast<PointMask>(t[1]));
  return out;
}

// A map between posets by element ids.
struct PosetMap {
  std::vector<int> image;  // image[i] = target id of source element i

  int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
};

struct InducedCheck {
  bool ok = true;
  std::string reason;
  int witness_lo = -1;  // offending source interval, -1 when ok
  int witness_hi = -1;
};

namespace detail {

// Corestrict f to the Boolean interval `src`, landing in `dst`, and express
// it in atom coordinates as a truth table.
inline RawMap corestrict(const FinPoset& p2, const PosetMap& f, const BoolInterval& src,
                         const BoolInterval& dst) {
  RawMap r{src.rank, dst.rank, {}};
  r.table.resize(std::size_t(1) << src.rank);
  for (PointMask s = 0; s < (PointMask(1) << src.rank); ++s) {
    int target = f(src.members[s]);
    PointMask t = 0;
    for (int a = 0; a < dst.rank; ++a)
      if (p2.leq(dst.atoms[static_cast<std::size_t>(a)], target)) t |= PointMask(1) << a;
    if (dst.members[t] != target) fail("Internal", "corestriction left the target interval");
    r.table[s] = t;
  }
  return r;
}

}  // namespace detail

// Does the poset map induce a map of Boolean complexes for the given
// variant?  For the interval-preserving variant and its sub-variants each
// Boolean interval must map onto a Boolean interval and the corestriction,
// read through atom coordinates, must carry the variant's tag.  For the
// unrestricted monotone variant the image only needs to land inside some
// Boolean interval.
inline InducedCheck induces_map(const FinPoset& p1, const FinPoset& p2, const PosetMap& f,
                                VariantTag tag) {
  if (static_cast<int>(f.image.size()) != p1.size())
    fail("ArityMismatch", "poset map size does not match source poset");
  for (int i = 0; i < p1.size(); ++i)
    if (f(i) < 0 || f(i) >= p2.size()) fail("BadArgument", "poset map image out of range");
  for (int i = 0; i < p1.size(); ++i)
    for (int j = 0; j < p1.size(); ++j)
      if (p1.leq(i, j) && !p2.leq(f(i), f(j)))
        return InducedCheck{false, "not monotone", i, j};

  std::vector<BoolInterval> src_intervals = boolean_intervals(p1);
  std::vector<BoolInterval> dst_intervals = boolean_intervals(p2);
  auto find_dst = [&](int lo, int hi) -> const BoolInterval* {
    for (const auto& iv : dst_intervals)
      if (iv.lo == lo && iv.hi == hi) return &iv;
    return nullptr;
  };

  for (const auto& src : src_intervals) {
    if (tag == VariantTag::MONOTONE) {
      // into: the image set must sit inside some Boolean interval
      bool found = false;
      for (const auto& dst : dst_intervals) {
        bool inside = true;
        for (PointMask s = 0; s < (PointMask(1) << src.rank) && inside; ++s) {
          int y = f(src.members[s]);
          inside = p2.leq(dst.lo, y) && p2.leq(y, dst.hi);
        }
        if (inside) {
          found = true;
          break;
        }
      }
      if (!found)
        return InducedCheck{false, "image of an interval fits no Boolean interval", src.lo, src.hi};
      continue;
    }
    const BoolInterval* dst = find_dst(f(src.lo), f(src.hi));
    if (!dst)
      return InducedCheck{false, "endpoint images span no Boolean interval", src.lo, src.hi};
    // onto: every member of the target interval must be hit
    std::vector<char> hit(std::size_t(1) << dst->rank, 0);
    RawMap core = detail::corestrict(p2, f, src, *dst);
    for (PointMask s = 0; s < (PointMask(1) << src.rank); ++s) hit[core.table[s]] = 1;
    for (std::size_t t = 0; t < hit.size(); ++t)
      if (!hit[t]) return InducedCheck{false, "image misses part of the target interval", src.lo, src.hi};
    std::vector<VariantTag> tags = classify(core);
    if (std::find(tags.begin(), tags.end(), tag) == tags.end())
      return InducedCheck{false, std::string("corestriction is not ") + variant_name(tag), src.lo,
                          src.hi};
  }
  return InducedCheck{};
}

// The subdivision action of a cube map on vertices: apply it to each entry
// of the monotone tuple.  No interval-preservation assumption; validity is
// the caller's question (see induced_subdivision_map).
struct SubdivisionMap {
  FunctionPoset source;
  FunctionPoset target;
  PosetMap map;
};

inline SubdivisionMap subdivision_vertex_map(const CubeMorphism& phi, int k) {
  SubdivisionMap sm{function_poset(cube_poset(phi.m), k), function_poset(cube_poset(phi.n), k), {}};
  sm.map.image.reserve(sm.source.tuples.size());
  for (const auto& t : sm.source.tuples) {
    std::vector<int> image_tuple;
    image_tuple.reserve(t.size());
    for (int e : t) image_tuple.push_back(static_cast<int>(phi.eval(static_cast<PointMask>(e))));
    sm.map.image.push_back(sm.target.index_of(image_tuple));
  }
  return sm;
}

// Functoriality of subdivision for interval-preserving maps: the vertex
// action extends to the Boolean complexes.  Verified on the nose via
// induces_map.
inline SubdivisionMap induced_subdivision_map(const CubeMorphism& phi, int k) {
  if (!is_interval_preserving(phi)) {
    auto w = overlap_witness(phi);
    fail("NotBoxplus", "subdivision is functorial only for interval-preserving maps",
         w ? "{\"coordinates\":[" + std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) +
                 "],\"variable\":" + std::to_string((*w)[2]) + "}"
           : "");
  }
  SubdivisionMap sm = subdivision_vertex_map(phi, k);
  InducedCheck chk = induces_map(sm.source.poset, sm.target.poset, sm.map, VariantTag::BOXPLUS);
  if (!chk.ok) fail("Internal", "subdivision action failed to induce: " + chk.reason);
  return sm;
}

// A simplicial complex with vertices identified with poset element ids.
// simplices[d] lists each d-simplex as its sorted vertex id tuple.
struct SimplicialComplex {
  std::vector<int> vertex_ids;
  std::vector<std::string> vertex_names;
  std::vector<std::vector<std::vector<int>>> simplices;  // by dimension

  int dim() const { return static_cast<int>(simplices.size()) - 1; }

  std::size_t count(int d) const {
    return d < 0 || d >= static_cast<int>(simplices.size())
               ? 0
               : simplices[static_cast<std::size_t>(d)].size();
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t d = 0; d < simplices.size(); ++d) {
      long long c = static_cast<long long>(simplices[d].size());
      chi += (d % 2 == 0) ? c : -c;
    }
    return chi;
  }
};

// Triangulate a cubical complex by chains: the d-simplices are the strictly
// increasing (d+1)-chains of base elements lying inside a single cell,
// stored in ascending order of the base poset.  Element ids need not be a
// linear extension, so chains grow by order, not by id.
inline SimplicialComplex triangulate(const CubeComplex& cx) {
  std::vector<std::set<std::vector<int>>> chains;
  for (const auto& cell : cx.cells) {
    std::vector<int> members(cell.members.begin(), cell.members.end());
    std::sort(members.begin(), members.end());
    std::vector<int> chain;
    auto dfs = [&](auto&& self) -> void {
      if (!chain.empty()) {
        std::size_t d = chain.size() - 1;
        if (d >= chains.size()) chains.resize(d + 1);
        chains[d].insert(chain);
      }
      for (int y : members) {
        if (!chain.empty() && !cx.base.lt(chain.back(), y)) continue;
        chain.push_back(y);
        self(self);
        chain.pop_back();
      }
    };
    dfs(dfs);
  }
  SimplicialComplex sc;
  for (const auto& cell : cx.cells)
    if (cell.rank == 0) {
      sc.vertex_ids.push_back(cell.lo);
      sc.vertex_names.push_back(cx.base.name(cell.lo));
    }
  sc.simplices.reserve(chains.size());
  for (auto& level : chains)
    sc.simplices.emplace_back(level.begin(), level.end());
  return sc;
}

}  // namespace boxcat
