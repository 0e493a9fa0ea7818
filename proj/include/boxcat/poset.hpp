#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "boxcat/point.hpp"

namespace boxcat {

// A finite poset over named elements, with the full order relation stored
// as a dense matrix.  Construction validates reflexivity (taken for
// granted: it is added), antisymmetry and transitivity.
class FinPoset {
public:
  FinPoset() = default;

  static FinPoset from_leq(std::vector<std::string> names,
                           const std::vector<std::pair<int, int>>& leq_pairs) {
    FinPoset p;
    p.init(std::move(names));
    for (auto [i, j] : leq_pairs) {
      p.check_index(i);
      p.check_index(j);
      p.rel_[p.at(i, j)] = 1;
    }
    for (int i = 0; i < p.n_; ++i) p.rel_[p.at(i, i)] = 1;
    p.validate();
    return p;
  }

  static FinPoset from_covers(std::vector<std::string> names,
                              const std::vector<std::pair<int, int>>& covers) {
    FinPoset p;
    p.init(std::move(names));
    for (auto [i, j] : covers) {
      p.check_index(i);
      p.check_index(j);
      if (i == j) fail("InvalidPoset", "cover relation contains a loop");
      p.rel_[p.at(i, j)] = 1;
    }
    // transitive closure
    for (int k = 0; k < p.n_; ++k)
      for (int i = 0; i < p.n_; ++i) {
        if (!p.rel_[p.at(i, k)]) continue;
        for (int j = 0; j < p.n_; ++j)
          if (p.rel_[p.at(k, j)]) p.rel_[p.at(i, j)] = 1;
      }
    for (int i = 0; i < p.n_; ++i) {
      if (p.rel_[p.at(i, i)])
        fail("InvalidPoset", "cover relation has a cycle through " + p.names_[static_cast<std::size_t>(i)]);
      p.rel_[p.at(i, i)] = 1;
    }
    p.validate();
    return p;
  }

  int size() const { return n_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(int i, int j) const { return rel_[at(i, j)] != 0; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }

  bool covers(int i, int j) const {  // j covers i
    if (!lt(i, j)) return false;
    for (int k = 0; k < n_; ++k)
      if (lt(i, k) && lt(k, j)) return false;
    return true;
  }

  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (covers(i, j)) out.emplace_back(i, j);
    return out;
  }

  int index_of(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
      if (names_[static_cast<std::size_t>(i)] == name) return i;
    fail("BadArgument", "unknown element name: " + name);
  }

private:
  void init(std::vector<std::string> names) {
    names_ = std::move(names);
    n_ = static_cast<int>(names_.size());
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("InvalidPoset", "duplicate element names");
    rel_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  }

  void check_index(int i) const {
    if (i < 0 || i >= n_) fail("InvalidPoset", "element index out of range");
  }

  std::size_t at(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  void validate() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i != j && leq(i, j) && leq(j, i))
          fail("InvalidPoset", "antisymmetry fails between " + names_[static_cast<std::size_t>(i)] +
                                   " and " + names_[static_cast<std::size_t>(j)]);
        if (!leq(i, j)) continue;
        for (int k = 0; k < n_; ++k)
          if (leq(j, k) && !leq(i, k))
            fail("InvalidPoset", "transitivity fails at " + names_[static_cast<std::size_t>(i)] + " <= " +
                                     names_[static_cast<std::size_t>(j)] + " <= " + names_[static_cast<std::size_t>(k)]);
      }
  }

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> rel_;
};

// The Boolean lattice [1]^n as a poset; element ids are the point masks, so
// ids walk the points in binary counting order and names print coordinate 1
// first.
inline FinPoset cube_poset(int n) {
  if (n < 0 || n > 16) fail("SizeExceeded", "cube_poset supports dimension 0..16");
  std::vector<std::string> names;
  names.reserve(std::size_t(1) << n);
  for (PointMask x = 0; x < (PointMask(1) << n); ++x) names.push_back(point_string(x, n));
  std::vector<std::pair<int, int>> leq;
  for (PointMask x = 0; x < (PointMask(1) << n); ++x)
    for (PointMask y = 0; y < (PointMask(1) << n); ++y)
      if (point_leq(x, y)) leq.emplace_back(static_cast<int>(x), static_cast<int>(y));
  return FinPoset::from_leq(std::move(names), leq);
}

inline FinPoset chain_poset(int k) {  // k elements 0 < 1 < ... < k-1
  if (k < 0) fail("BadArgument", "chain length must be nonnegative");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> leq;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) leq.emplace_back(i, j);
  return FinPoset::from_leq(std::move(names), leq);
}

inline FinPoset product_poset(const FinPoset& p, const FinPoset& q) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(p.size()) * static_cast<std::size_t>(q.size()));
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < q.size(); ++b) names.push_back("(" + p.name(a) + "," + q.name(b) + ")");
  auto id = [&](int a, int b) { return a * q.size() + b; };
  std::vector<std::pair<int, int>> leq;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      for (int c = 0; c < p.size(); ++c)
        for (int d = 0; d < q.size(); ++d)
          if (p.leq(a, c) && q.leq(b, d)) leq.emplace_back(id(a, b), id(c, d));
  return FinPoset::from_leq(std::move(names), leq);
}

// The poset of monotone (k+1)-tuples p_0 <= ... <= p_k in P, ordered
// pointwise.  Tuples are enumerated depth-first in lexicographic id order
// and that enumeration fixes the element ids.
struct FunctionPoset {
  FinPoset poset;
  std::vector<std::vector<int>> tuples;

  int index_of(const std::vector<int>& tuple) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
    if (it == tuples.end() || *it != tuple) fail("BadArgument", "tuple not in function poset");
    return static_cast<int>(it - tuples.begin());
  }
};

inline FunctionPoset function_poset(const FinPoset& p, int k) {
  if (k < 0) fail("BadArgument", "tuple length must be nonnegative");
  FunctionPoset fp;
  std::vector<int> tuple;
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(tuple.size()) == k + 1) {
      fp.tuples.push_back(tuple);
      return;
    }
    for (int e = 0; e < p.size(); ++e) {
      if (!tuple.empty() && !p.leq(tuple.back(), e)) continue;
      tuple.push_back(e);
      self(self);
      tuple.pop_back();
    }
  };
  dfs(dfs);
  std::vector<std::string> names;
  names.reserve(fp.tuples.size());
  for (const auto& t : fp.tuples) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += "|";
      s += p.name(t[i]);
    }
    names.push_back(std::move(s));
  }
  std::vector<std::pair<int, int>> leq;
  for (std::size_t a = 0; a < fp.tuples.size(); ++a)
    for (std::size_t b = 0; b < fp.tuples.size(); ++b) {
      bool le = true;
      for (std::size_t i = 0; i <= static_cast<std::size_t>(k) && le; ++i)
        le = p.leq(fp.tuples[a][i], fp.tuples[b][i]);
      if (le) leq.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  fp.poset = FinPoset::from_leq(std::move(names), leq);
  return fp;
}

}  // namespace boxcat
