#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "boxcat/complex.hpp"
#include "boxcat/errors.hpp"

namespace boxcat {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries, so elimination
// never overflows no matter how the pivots grow.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

  BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
  const BigInt& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
  }
};

// Boundary maps of a simplicial complex.  boundary[d] sends d-chains to
// (d-1)-chains for d >= 1; boundary[0] is the zero map out of 0-chains.
// ranks[d] counts the d-simplices.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundary;

  int dim() const { return static_cast<int>(ranks.size()) - 1; }
};

// Build the alternating-sign boundary matrices.  Simplex tuples are
// canonicalized to ascending vertex id, faces are found by lookup, and a
// face absent from the complex is an error.  Column order follows the
// listing order of the input; the homology downstream does not depend on
// it.
inline ChainComplex boundary_matrices(const SimplicialComplex& sc) {
  ChainComplex cc;
  int dim = sc.dim();
  if (dim < 0) return cc;

  std::vector<std::vector<std::vector<int>>> sorted(static_cast<std::size_t>(dim) + 1);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(dim) + 1);
  for (int d = 0; d <= dim; ++d) {
    for (const auto& s : sc.simplices[static_cast<std::size_t>(d)]) {
      std::vector<int> t = s;
      std::sort(t.begin(), t.end());
      if (static_cast<int>(t.size()) != d + 1 ||
          std::adjacent_find(t.begin(), t.end()) != t.end())
        fail("NotFaceClosed", "malformed simplex in degree " + std::to_string(d));
      if (!index[static_cast<std::size_t>(d)].emplace(t, static_cast<int>(sorted[static_cast<std::size_t>(d)].size())).second)
        fail("NotFaceClosed", "duplicate simplex in degree " + std::to_string(d));
      sorted[static_cast<std::size_t>(d)].push_back(std::move(t));
    }
    cc.ranks.push_back(sorted[static_cast<std::size_t>(d)].size());
  }

  cc.boundary.emplace_back(0, static_cast<int>(cc.ranks[0]));
  for (int d = 1; d <= dim; ++d) {
    IntMatrix m(static_cast<int>(cc.ranks[static_cast<std::size_t>(d) - 1]),
                static_cast<int>(cc.ranks[static_cast<std::size_t>(d)]));
    for (std::size_t col = 0; col < sorted[static_cast<std::size_t>(d)].size(); ++col) {
      const auto& t = sorted[static_cast<std::size_t>(d)][col];
      for (std::size_t j = 0; j < t.size(); ++j) {
        std::vector<int> face;
        face.reserve(t.size() - 1);
        for (std::size_t i = 0; i < t.size(); ++i)
          if (i != j) face.push_back(t[i]);
        auto it = index[static_cast<std::size_t>(d) - 1].find(face);
        if (it == index[static_cast<std::size_t>(d) - 1].end())
          fail("NotFaceClosed", "missing face of a simplex in degree " + std::to_string(d));
        m.at(it->second, static_cast<int>(col)) += (j % 2 == 0) ? 1 : -1;
      }
    }
    cc.boundary.push_back(std::move(m));
  }

  for (int d = 2; d <= dim; ++d) {
    const IntMatrix& a = cc.boundary[static_cast<std::size_t>(d) - 1];
    const IntMatrix& b = cc.boundary[static_cast<std::size_t>(d)];
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < b.cols; ++j) {
        BigInt acc = 0;
        for (int k = 0; k < a.cols; ++k) acc += a.at(i, k) * b.at(k, j);
        if (acc != 0) fail("Internal", "boundary of boundary is nonzero");
      }
  }
  return cc;
}

struct SmithForm {
  std::vector<BigInt> divisors;  // d_1 | d_2 | ..., all positive
  int rank = 0;
};

// Smith normal form by repeated pivoting on a least-magnitude entry.  Row
// and column operations are integer-elementary, so the divisors are the
// elementary divisors of the input.
inline SmithForm smith_normal_form(IntMatrix m) {
  SmithForm out;
  int t = 0;
  while (t < m.rows && t < m.cols) {
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi < 0 || abs(m.at(i, j)) < abs(m.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    if (pi != t)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    if (pj != t)
      for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    bool clean = true;
    for (int i = t + 1; i < m.rows; ++i) {
      BigInt q = m.at(i, t) / m.at(t, t);
      if (q != 0)
        for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
      if (m.at(i, t) != 0) clean = false;  // remainder survives, pivot will shrink
    }
    for (int j = t + 1; j < m.cols; ++j) {
      BigInt q = m.at(t, j) / m.at(t, t);
      if (q != 0)
        for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // repeat with the smaller pivot

    // enforce the divisibility chain before moving on
    bool divides = true;
    for (int i = t + 1; i < m.rows && divides; ++i)
      for (int j = t + 1; j < m.cols && divides; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          for (int c = t; c < m.cols; ++c) m.at(t, c) += m.at(i, c);
          divides = false;
        }
    if (!divides) continue;
    ++t;
  }
  out.rank = t;
  for (int i = 0; i < t; ++i) {
    BigInt d = m.at(i, i);
    if (d < 0) d = -d;
    out.divisors.push_back(d);
  }
  return out;
}

struct HomologyGroup {
  int degree = 0;
  long long betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

// Integer homology from the boundary maps: in degree d the kernel of the
// outgoing boundary modulo the image of the incoming one has free rank
// n_d - rank d_d - rank d_{d+1}, with torsion given by the elementary
// divisors of d_{d+1} exceeding 1.
inline std::vector<HomologyGroup> homology(const ChainComplex& cc) {
  std::vector<HomologyGroup> out;
  int dim = cc.dim();
  std::vector<SmithForm> snf;
  snf.reserve(static_cast<std::size_t>(dim) + 1);
  for (int d = 0; d <= dim; ++d) snf.push_back(smith_normal_form(cc.boundary[static_cast<std::size_t>(d)]));
  for (int d = 0; d <= dim; ++d) {
    HomologyGroup g;
    g.degree = d;
    long long kernel = static_cast<long long>(cc.ranks[static_cast<std::size_t>(d)]) - snf[static_cast<std::size_t>(d)].rank;
    long long image = d + 1 <= dim ? snf[static_cast<std::size_t>(d) + 1].rank : 0;
    g.betti = kernel - image;
    if (d + 1 <= dim)
      for (const BigInt& v : snf[static_cast<std::size_t>(d) + 1].divisors)
        if (v > 1) g.torsion.push_back(v);
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<HomologyGroup> homology(const SimplicialComplex& sc) {
  return homology(boundary_matrices(sc));
}

// Reduced Betti numbers: the degree-0 count drops by one on a nonempty
// complex, everything else is unchanged.
inline bool reduced_homology_trivial(const std::vector<HomologyGroup>& groups, int degree) {
  for (const auto& g : groups)
    if (g.degree == degree) {
      long long betti = g.betti - (degree == 0 ? 1 : 0);
      return betti == 0 && g.torsion.empty();
    }
  return true;  // no simplices in that degree at all
}

}  // namespace boxcat
