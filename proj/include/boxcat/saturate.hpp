#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "boxcat/normal_form.hpp"

namespace boxcat {

using HomKey = std::pair<int, int>;  // (source arity, target arity)
using HomSet = std::set<CubeMorphism, MorphismLess>;

// Closure of a generating set of morphisms under composition and tensor,
// restricted to cubes of dimension at most maxdim.  Identities are always
// present.  The bound is part of the result: hom-sets between larger cubes
// are simply absent, and compositions that would pass through a larger cube
// are never formed.
struct Saturation {
  int maxdim = 0;
  std::map<HomKey, HomSet> homs;

  bool contains(const CubeMorphism& f) const {
    auto it = homs.find({f.m, f.n});
    return it != homs.end() && it->second.count(f) > 0;
  }

  const HomSet& hom(int m, int n) const {
    static const HomSet empty;
    auto it = homs.find({m, n});
    return it == homs.end() ? empty : it->second;
  }

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [k, v] : homs) t += v.size();
    return t;
  }
};

inline Saturation saturate(const std::vector<CubeMorphism>& generators, int maxdim) {
  if (maxdim < 0 || maxdim > 6) fail("SizeExceeded", "saturation bound must be between 0 and 6");
  Saturation s;
  s.maxdim = maxdim;
  for (int d = 0; d <= maxdim; ++d) s.homs[{d, d}].insert(CubeMorphism::identity(d));
  std::vector<CubeMorphism> fresh;
  for (const auto& g : generators) {
    if (g.m > maxdim || g.n > maxdim)
      fail("BadArgument", "generator exceeds the saturation bound");
    if (s.homs[{g.m, g.n}].insert(g).second) fresh.push_back(g);
  }
  for (int d = 0; d <= maxdim; ++d) fresh.push_back(CubeMorphism::identity(d));

  while (!fresh.empty()) {
    std::vector<CubeMorphism> next;
    auto offer = [&](const CubeMorphism& f) {
      if (s.homs[{f.m, f.n}].insert(f).second) next.push_back(f);
    };
    for (const auto& f : fresh) {
      // compositions with everything present, on both sides
      for (const auto& [key, hs] : s.homs) {
        if (key.first == f.n)
          for (const auto& g : hs) offer(compose(g, f));
        if (key.second == f.m)
          for (const auto& g : hs) offer(compose(f, g));
        // tensors within the bound, on both sides
        if (key.first + f.m <= maxdim && key.second + f.n <= maxdim)
          for (const auto& g : hs) {
            offer(tensor(f, g));
            offer(tensor(g, f));
          }
      }
    }
    fresh = std::move(next);
  }
  return s;
}

inline std::vector<CubeMorphism> delta1_generators() {
  return {basic_generator(GeneratorKind::sigma), basic_generator(GeneratorKind::delta_minus),
          basic_generator(GeneratorKind::delta_plus)};
}

// All monotone surjections [1]^k -> [1] for 1 <= k <= maxdim.
inline std::vector<CubeMorphism> surjection_generators(int maxdim) {
  std::vector<CubeMorphism> out;
  for (int k = 1; k <= maxdim; ++k)
    for (const auto& f : enumerate_hom(k, 1, VariantTag::MONOTONE))
      if (is_surjective(f)) out.push_back(f);
  return out;
}

// Hom-sets of the named variant computed directly from the closed-form
// predicates, for comparison against saturation closures.
inline std::map<HomKey, HomSet> predicate_homsets(VariantTag tag, int maxdim) {
  std::map<HomKey, HomSet> out;
  for (int m = 0; m <= maxdim; ++m)
    for (int n = 0; n <= maxdim; ++n) {
      HomSet hs;
      for (const auto& f : enumerate_hom(m, n, tag)) hs.insert(f);
      out[{m, n}] = std::move(hs);
    }
  return out;
}

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // witness description, empty when passing
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string describe(const CubeMorphism& f) {
  std::string s = "{\"m\":" + std::to_string(f.m) + ",\"n\":" + std::to_string(f.n) + ",\"coords\":[";
  for (int i = 0; i < f.n; ++i) {
    if (i) s += ",";
    s += "{\"antichain\":[";
    const auto& ac = f.coords[static_cast<std::size_t>(i)].ac;
    for (std::size_t j = 0; j < ac.size(); ++j) {
      if (j) s += ",";
      s += "[";
      auto idx = mask_to_indices(ac[j]);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(idx[k]);
      }
      s += "]";
    }
    s += "]}";
  }
  s += "]}";
  return s;
}

// Every factorization of phi into a surjection onto some cube followed by an
// injection, both drawn from the given hom family.
struct EpiMonoPair {
  CubeMorphism epi, mono;
};

inline std::vector<EpiMonoPair> all_factorizations(const CubeMorphism& phi,
                                                   const std::map<HomKey, HomSet>& homs) {
  std::vector<EpiMonoPair> out;
  for (const auto& [key, hs] : homs) {
    if (key.first != phi.m) continue;
    int k = key.second;
    auto mit = homs.find({k, phi.n});
    if (mit == homs.end()) continue;
    for (const auto& e : hs) {
      if (!is_surjective(e)) continue;
      for (const auto& mu : mit->second) {
        if (!is_injective(mu)) continue;
        if (compose(mu, e) == phi) out.push_back({e, mu});
      }
    }
  }
  return out;
}

}  // namespace detail

// The generalized Reedy / Eilenberg-Zilber property suite over the
// interval-preserving hom-sets within the given bound:
//   (a) epi-mono factorizations exist and are unique up to a coordinate
//       permutation of the middle cube,
//   (b) bijective morphisms are coordinate permutations,
//   (c) surjections do not raise and injections do not lower dimension,
//   (d) no nonidentity isomorphism fixes a surjection by postcomposition,
//   (e) every surjection splits, with the constructed section verified,
//   (f) surjections with equal section sets agree up to a coordinate
//       permutation of the target (sources up to 3, targets up to 2).
// Failures are reported, never thrown.
inline VerifyReport verify_reedy_ez(int maxdim) {
  if (maxdim < 0 || maxdim > 3) fail("SizeExceeded", "verify_reedy_ez bound must be 0..3");
  VerifyReport report;
  std::map<HomKey, HomSet> homs = predicate_homsets(VariantTag::BOXPLUS, maxdim);

  CheckResult fact{"factorization-exists-unique", true, ""};
  for (const auto& [key, hs] : homs)
    for (const auto& phi : hs) {
      auto pairs = detail::all_factorizations(phi, homs);
      if (pairs.empty()) {
        fact.pass = false;
        fact.detail = "no factorization for " + detail::describe(phi);
        break;
      }
      for (std::size_t i = 1; i < pairs.size() && fact.pass; ++i) {
        if (pairs[i].epi.n != pairs[0].epi.n) {
          fact.pass = false;
          fact.detail = "factorizations through different ranks for " + detail::describe(phi);
          break;
        }
        bool related = false;
        for (const auto& h : all_permutations(pairs[0].epi.n)) {
          CubeMorphism hp = permutation_morphism(h);
          if (compose(hp, pairs[0].epi) == pairs[i].epi &&
              compose(pairs[0].mono, permutation_morphism(h.inverse())) == pairs[i].mono) {
            related = true;
            break;
          }
        }
        if (!related) {
          fact.pass = false;
          fact.detail = "factorizations of " + detail::describe(phi) +
                        " not related by a middle permutation";
        }
      }
      if (!fact.pass) break;
    }
  report.checks.push_back(fact);

  CheckResult bij{"bijective-is-permutation", true, ""};
  for (const auto& [key, hs] : homs) {
    if (key.first != key.second) continue;
    for (const auto& phi : hs)
      if (is_surjective(phi) && is_injective(phi) && !as_permutation(phi)) {
        bij.pass = false;
        bij.detail = detail::describe(phi);
      }
  }
  report.checks.push_back(bij);

  CheckResult deg{"degree-monotonicity", true, ""};
  for (const auto& [key, hs] : homs)
    for (const auto& phi : hs) {
      if (is_surjective(phi) && phi.m < phi.n) {
        deg.pass = false;
        deg.detail = "surjection raising dimension: " + detail::describe(phi);
      }
      if (is_injective(phi) && phi.m > phi.n) {
        deg.pass = false;
        deg.detail = "injection lowering dimension: " + detail::describe(phi);
      }
    }
  report.checks.push_back(deg);

  CheckResult rigid{"iso-rigidity-on-surjections", true, ""};
  for (const auto& [key, hs] : homs)
    for (const auto& zeta : hs) {
      if (!is_surjective(zeta)) continue;
      for (const auto& h : all_permutations(zeta.n)) {
        CubeMorphism gamma = permutation_morphism(h);
        if (compose(gamma, zeta) == zeta && !(gamma == CubeMorphism::identity(zeta.n))) {
          rigid.pass = false;
          rigid.detail = "nonidentity permutation fixes " + detail::describe(zeta);
        }
      }
    }
  report.checks.push_back(rigid);

  CheckResult split{"surjections-split", true, ""};
  for (const auto& [key, hs] : homs)
    for (const auto& zeta : hs) {
      if (!is_surjective(zeta)) continue;
      CubeMorphism s = construct_section(zeta);
      if (!(compose(zeta, s) == CubeMorphism::identity(zeta.n)) || !is_interval_preserving(s)) {
        split.pass = false;
        split.detail = "bad section for " + detail::describe(zeta);
      }
    }
  report.checks.push_back(split);

  CheckResult determ{"section-determinacy", true, ""};
  for (int m = 0; m <= std::min(maxdim, 3); ++m)
    for (int n = 0; n <= std::min(maxdim, 2); ++n) {
      std::vector<CubeMorphism> surjections;
      for (const auto& phi : homs[{m, n}])
        if (is_surjective(phi)) surjections.push_back(phi);
      std::vector<std::vector<CubeMorphism>> secs;
      secs.reserve(surjections.size());
      for (const auto& phi : surjections) secs.push_back(sections_of(phi));
      for (std::size_t i = 0; i < surjections.size(); ++i)
        for (std::size_t j = i + 1; j < surjections.size(); ++j) {
          if (secs[i] != secs[j]) continue;
          bool related = false;
          for (const auto& h : all_permutations(n))
            if (compose(permutation_morphism(h), surjections[i]) == surjections[j]) {
              related = true;
              break;
            }
          if (!related) {
            determ.pass = false;
            determ.detail = "equal section sets, unrelated surjections: " +
                            detail::describe(surjections[i]) + " vs " +
                            detail::describe(surjections[j]);
          }
        }
    }
  report.checks.push_back(determ);

  return report;
}

// Negative control: adjoining the doubling map to the generators yields,
// with the lattice operations, the whole monotone category, and there the
// factorization property collapses.  The pairing of the two coconnections
// x -> (x1 ^ x2, x1 v x2) has a three-element image, which no surjection
// onto a cube followed by an injection can produce (injective images of
// cubes have power-of-two size).  The doubling map matters: every
// interval-preserving map factors, so the failures all use it.  Returns
// the monotone morphisms within the bound admitting no factorization.
struct NegativeControl {
  std::map<HomKey, HomSet> homs;
  std::vector<CubeMorphism> unfactorable;
};

inline NegativeControl negative_control(int maxdim = 2) {
  NegativeControl nc;
  nc.homs = predicate_homsets(VariantTag::MONOTONE, maxdim);
  for (const auto& [key, hs] : nc.homs)
    for (const auto& phi : hs)
      if (detail::all_factorizations(phi, nc.homs).empty())
        nc.unfactorable.push_back(phi);
  return nc;
}

}  // namespace boxcat
