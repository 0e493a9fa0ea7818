#pragma once

#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "boxcat/complex.hpp"
#include "boxcat/homology.hpp"
#include "boxcat/morphism.hpp"
#include "boxcat/normal_form.hpp"
#include "boxcat/poset.hpp"

namespace boxcat::io {

using nlohmann::json;

// All indices in the JSON formats are 1-based: coordinates, variables,
// permutation one-line entries, poset element ids, cell ids, vertex ids.
// Points are coordinate arrays with coordinate 1 first.

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) fail("ParseError", what);
}

inline int get_int(const json& j, const char* key, int lo, int hi) {
  require(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  require(v.is_number_integer(), std::string("field \"") + key + "\" must be an integer");
  long long x = v.get<long long>();
  require(x >= lo && x <= hi, std::string("field \"") + key + "\" out of range");
  return static_cast<int>(x);
}

}  // namespace detail

inline json point_to_json(PointMask x, int n) {
  json a = json::array();
  for (int i = 1; i <= n; ++i) a.push_back(get_bit(x, i) ? 1 : 0);
  return a;
}

inline PointMask point_from_json(const json& j, int n) {
  detail::require(j.is_array() && static_cast<int>(j.size()) == n,
                  "point must be an array of " + std::to_string(n) + " bits");
  PointMask x = 0;
  for (int i = 0; i < n; ++i) {
    const json& b = j.at(static_cast<std::size_t>(i));
    detail::require(b.is_number_integer() && (b == 0 || b == 1), "point entries must be 0 or 1");
    if (b == 1) x |= PointMask(1) << i;
  }
  return x;
}

// {"antichain":[[1,3],[2]]} lists each minimal true point as its set of
// 1-based variable indices.
inline json antichain_to_json(const MonotoneBoolFn& f) {
  json members = json::array();
  for (PointMask s : f.ac) {
    json one = json::array();
    for (int v : mask_to_indices(s)) one.push_back(v);
    members.push_back(std::move(one));
  }
  return json{{"antichain", std::move(members)}};
}

inline MonotoneBoolFn antichain_from_json(const json& j, int arity) {
  detail::require(j.is_object() && j.contains("antichain"), "missing field \"antichain\"");
  const json& a = j.at("antichain");
  detail::require(a.is_array(), "\"antichain\" must be an array of variable lists");
  std::vector<PointMask> members;
  for (const json& one : a) {
    detail::require(one.is_array(), "antichain members must be arrays of variable indices");
    PointMask s = 0;
    for (const json& v : one) {
      detail::require(v.is_number_integer() && v >= 1 && v <= arity,
                      "variable index out of range 1.." + std::to_string(arity));
      s |= PointMask(1) << (v.get<int>() - 1);
    }
    members.push_back(s);
  }
  return canonicalize(arity, std::move(members));
}

inline json morphism_to_json(const CubeMorphism& f) {
  json coords = json::array();
  for (const auto& c : f.coords) coords.push_back(antichain_to_json(c));
  return json{{"m", f.m}, {"n", f.n}, {"coords", std::move(coords)}};
}

inline CubeMorphism morphism_from_json(const json& j) {
  int m = detail::get_int(j, "m", 0, kMaxArity);
  int n = detail::get_int(j, "n", 0, kMaxArity);
  detail::require(j.contains("coords") && j.at("coords").is_array() &&
                      static_cast<int>(j.at("coords").size()) == n,
                  "\"coords\" must list one antichain per output coordinate");
  CubeMorphism f{m, n, {}};
  for (const json& c : j.at("coords")) f.coords.push_back(antichain_from_json(c, m));
  return f;
}

// {"m":1,"n":1,"table":[[1],[0]]} lists target points in source order,
// sources enumerated by binary counting with coordinate 1 least significant.
inline json raw_to_json(const RawMap& f) {
  json table = json::array();
  for (PointMask x = 0; x < (PointMask(1) << f.m); ++x)
    table.push_back(point_to_json(f.table[x], f.n));
  return json{{"m", f.m}, {"n", f.n}, {"table", std::move(table)}};
}

inline RawMap raw_from_json(const json& j) {
  int m = detail::get_int(j, "m", 0, 20);
  int n = detail::get_int(j, "n", 0, kMaxArity);
  detail::require(j.contains("table") && j.at("table").is_array() &&
                      j.at("table").size() == (std::size_t(1) << m),
                  "\"table\" must list 2^m target points");
  RawMap r{m, n, {}};
  r.table.reserve(std::size_t(1) << m);
  for (const json& p : j.at("table")) r.table.push_back(point_from_json(p, n));
  return r;
}

using AnyMap = std::variant<CubeMorphism, RawMap>;

inline AnyMap map_from_json(const json& j) {
  detail::require(j.is_object(), "a map must be a JSON object");
  if (j.contains("coords")) return morphism_from_json(j);
  if (j.contains("table")) return raw_from_json(j);
  fail("ParseError", "a map needs either \"coords\" or \"table\"");
}

// Any readable map as a morphism; raw tables go through the monotonicity
// check and minimal-point extraction.
inline CubeMorphism morphism_from_any(const AnyMap& any) {
  if (std::holds_alternative<CubeMorphism>(any)) return std::get<CubeMorphism>(any);
  return from_table(std::get<RawMap>(any));
}

inline json decomposition_to_json(const Decomposition& d) {
  json factors = json::array();
  for (const auto& f : d.factors) factors.push_back(antichain_to_json(f));
  return json{{"blocks", d.blocks},
              {"g", d.g.to_one_line()},
              {"factors", std::move(factors)},
              {"dropped", d.dropped}};
}

inline Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  detail::require(j.is_object() && j.contains("blocks") && j.at("blocks").is_array(),
                  "missing field \"blocks\"");
  for (const json& b : j.at("blocks")) {
    detail::require(b.is_number_integer() && b >= 0 && b <= kMaxArity, "bad block size");
    d.blocks.push_back(b.get<int>());
  }
  detail::require(j.contains("g") && j.at("g").is_array(), "missing field \"g\"");
  std::vector<int> one_line;
  for (const json& v : j.at("g")) {
    detail::require(v.is_number_integer(), "\"g\" must be one-line permutation notation");
    one_line.push_back(v.get<int>());
  }
  d.g = Permutation::from_one_line(one_line);
  d.dropped = detail::get_int(j, "dropped", 0, kMaxArity);
  detail::require(j.contains("factors") && j.at("factors").is_array() &&
                      j.at("factors").size() == d.blocks.size(),
                  "\"factors\" must list one antichain per block");
  int total = d.dropped;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    d.factors.push_back(antichain_from_json(j.at("factors").at(i), d.blocks[i]));
    total += d.blocks[i];
  }
  detail::require(total == d.g.size(), "blocks and dropped must add up to the permutation size");
  return d;
}

inline json poset_to_json(const FinPoset& p) {
  json covers = json::array();
  for (auto [i, j] : p.cover_pairs())
    covers.push_back(json::array({p.name(i), p.name(j)}));
  return json{{"elements", p.names()}, {"covers", std::move(covers)}};
}

// Accepts {"elements", "covers": [[nameA,nameB],...]} or
// {"elements", "leq": [[i,j],...]} with 1-based element indices.
inline FinPoset poset_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("elements") && j.at("elements").is_array(),
                  "missing field \"elements\"");
  std::vector<std::string> names;
  for (const json& e : j.at("elements")) {
    detail::require(e.is_string(), "element names must be strings");
    names.push_back(e.get<std::string>());
  }
  int n = static_cast<int>(names.size());
  std::map<std::string, int> by_name;
  for (int i = 0; i < n; ++i) by_name[names[static_cast<std::size_t>(i)]] = i;
  detail::require(static_cast<int>(by_name.size()) == n, "duplicate element names");

  std::vector<std::pair<int, int>> pairs;
  auto read_pairs = [&](const json& arr, bool by_names) {
    detail::require(arr.is_array(), "relation must be an array of pairs");
    for (const json& pr : arr) {
      detail::require(pr.is_array() && pr.size() == 2, "relation entries must be pairs");
      if (by_names) {
        detail::require(pr.at(0).is_string() && pr.at(1).is_string(),
                        "cover pairs must name elements");
        auto a = by_name.find(pr.at(0).get<std::string>());
        auto b = by_name.find(pr.at(1).get<std::string>());
        detail::require(a != by_name.end() && b != by_name.end(), "unknown element name in covers");
        pairs.emplace_back(a->second, b->second);
      } else {
        detail::require(pr.at(0).is_number_integer() && pr.at(1).is_number_integer() &&
                            pr.at(0) >= 1 && pr.at(0) <= n && pr.at(1) >= 1 && pr.at(1) <= n,
                        "leq pairs must be 1-based element indices");
        pairs.emplace_back(pr.at(0).get<int>() - 1, pr.at(1).get<int>() - 1);
      }
    }
  };
  if (j.contains("covers")) {
    read_pairs(j.at("covers"), true);
    return FinPoset::from_covers(std::move(names), pairs);
  }
  if (j.contains("leq")) {
    read_pairs(j.at("leq"), false);
    return FinPoset::from_leq(std::move(names), pairs);
  }
  fail("ParseError", "a poset needs either \"covers\" or \"leq\"");
}

inline json complex_to_json(const CubeComplex& cx) {
  json cells = json::array();
  for (const auto& c : cx.cells)
    cells.push_back(json{{"lo", c.lo + 1}, {"hi", c.hi + 1}, {"rank", c.rank}});
  json incidence = json::array();
  for (const auto& facets : cx.incidence) {
    json fs = json::array();
    for (const Facet& f : facets)
      fs.push_back(json{{"facet", f.cell + 1}, {"dir", f.dir}, {"side", f.hi_side ? "hi" : "lo"}});
    incidence.push_back(std::move(fs));
  }
  return json{{"poset", poset_to_json(cx.base)},
              {"cells", std::move(cells)},
              {"incidence", std::move(incidence)}};
}

// Rebuilds the complex from its poset and cell list; each cell must be a
// Boolean interval and the listed cells must be closed under facets.
// Incidence is recomputed, so a stored incidence block is not trusted.
inline CubeComplex complex_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("poset") && j.contains("cells"),
                  "a complex needs \"poset\" and \"cells\"");
  CubeComplex cx;
  cx.base = poset_from_json(j.at("poset"));
  detail::require(j.at("cells").is_array(), "\"cells\" must be an array");
  std::set<std::pair<int, int>> listed;
  for (const json& c : j.at("cells")) {
    int lo = detail::get_int(c, "lo", 1, cx.base.size()) - 1;
    int hi = detail::get_int(c, "hi", 1, cx.base.size()) - 1;
    auto iv = boolean_interval(cx.base, lo, hi);
    detail::require(iv.has_value(), "cell [" + cx.base.name(lo) + ", " + cx.base.name(hi) +
                                        "] is not a Boolean interval");
    if (c.contains("rank"))
      detail::require(detail::get_int(c, "rank", 0, 31) == iv->rank, "cell rank mismatch");
    detail::require(listed.insert({lo, hi}).second, "duplicate cell");
    cx.cells.push_back(std::move(*iv));
  }
  for (const auto& cell : cx.cells) {
    PointMask full = full_mask(cell.rank);
    for (int a = 0; a < cell.rank; ++a) {
      PointMask bit = PointMask(1) << a;
      detail::require(listed.count({cell.lo, cell.members[full & ~bit]}) > 0 &&
                          listed.count({cell.members[bit], cell.hi}) > 0,
                      "cell list is not closed under facets");
    }
  }
  boxcat::detail::build_incidence(cx);
  return cx;
}

// {"vertices":[names...],"simplices":{"0":[[1],...],"1":[[1,2],...]}} with
// 1-based indices into the vertex list.
inline json simplicial_to_json(const SimplicialComplex& sc) {
  std::map<int, int> position;  // vertex id -> 1-based position
  for (std::size_t i = 0; i < sc.vertex_ids.size(); ++i)
    position[sc.vertex_ids[i]] = static_cast<int>(i) + 1;
  json simplices = json::object();
  for (std::size_t d = 0; d < sc.simplices.size(); ++d) {
    json level = json::array();
    for (const auto& s : sc.simplices[d]) {
      json tuple = json::array();
      for (int v : s) {
        auto it = position.find(v);
        if (it == position.end()) fail("Internal", "simplex vertex missing from the vertex list");
        tuple.push_back(it->second);
      }
      level.push_back(std::move(tuple));
    }
    simplices[std::to_string(d)] = std::move(level);
  }
  return json{{"vertices", sc.vertex_names}, {"simplices", std::move(simplices)}};
}

inline SimplicialComplex simplicial_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("vertices") && j.at("vertices").is_array(),
                  "missing field \"vertices\"");
  SimplicialComplex sc;
  for (const json& v : j.at("vertices")) {
    detail::require(v.is_string(), "vertex names must be strings");
    sc.vertex_ids.push_back(static_cast<int>(sc.vertex_ids.size()));
    sc.vertex_names.push_back(v.get<std::string>());
  }
  detail::require(j.contains("simplices") && j.at("simplices").is_object(),
                  "missing field \"simplices\"");
  int v_count = static_cast<int>(sc.vertex_ids.size());
  for (const auto& [key, level] : j.at("simplices").items()) {
    int d = -1;
    try {
      d = std::stoi(key);
    } catch (const std::exception&) {
      fail("ParseError", "simplex degrees must be numeric strings");
    }
    detail::require(d >= 0 && d <= 31, "simplex degree out of range");
    detail::require(level.is_array(), "each simplex level must be an array");
    if (static_cast<std::size_t>(d) >= sc.simplices.size()) sc.simplices.resize(static_cast<std::size_t>(d) + 1);
    for (const json& s : level) {
      detail::require(s.is_array() && static_cast<int>(s.size()) == d + 1,
                      "a degree-" + std::to_string(d) + " simplex needs " + std::to_string(d + 1) +
                          " vertices");
      std::vector<int> tuple;
      for (const json& v : s) {
        detail::require(v.is_number_integer() && v >= 1 && v <= v_count,
                        "simplex vertex index out of range");
        tuple.push_back(v.get<int>() - 1);
      }
      sc.simplices[static_cast<std::size_t>(d)].push_back(std::move(tuple));
    }
  }
  return sc;
}

inline json homology_to_json(const std::vector<HomologyGroup>& groups) {
  json out = json::array();
  for (const auto& g : groups) {
    json torsion = json::array();
    for (const BigInt& t : g.torsion) {
      if (t <= std::numeric_limits<long long>::max())
        torsion.push_back(static_cast<long long>(t));
      else
        torsion.push_back(t.str());
    }
    out.push_back(json{{"degree", g.degree}, {"betti", g.betti}, {"torsion", std::move(torsion)}});
  }
  return json{{"homology", std::move(out)}};
}

}  // namespace boxcat::io
