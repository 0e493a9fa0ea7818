#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace boxcat;
using testutil::mk;
using testutil::mkmap;

namespace {

bool homs_equal(const std::map<HomKey, HomSet>& a, const std::map<HomKey, HomSet>& b) {
  // compare only nonempty hom-sets so bookkeeping of untouched keys is moot
  auto strip = [](const std::map<HomKey, HomSet>& m) {
    std::map<HomKey, HomSet> out;
    for (const auto& [k, v] : m)
      if (!v.empty()) out[k] = v;
    return out;
  };
  return strip(a) == strip(b);
}

std::vector<CubeMorphism> with_tau(std::vector<CubeMorphism> gens) {
  gens.push_back(basic_generator(GeneratorKind::tau));
  return gens;
}

}  // namespace

TEST_CASE("closure of the substitution generators") {
  Saturation s = saturate(delta1_generators(), 3);
  CHECK(homs_equal(s.homs, predicate_homsets(VariantTag::DELTA1_STAR, 3)));
  CHECK(s.hom(2, 2).size() == 13);
  CHECK(s.hom(3, 3).size() == 63);
}

TEST_CASE("closure with the swap gives the lattice variant") {
  Saturation s = saturate(with_tau(delta1_generators()), 3);
  CHECK(homs_equal(s.homs, predicate_homsets(VariantTag::LATTICE_VARIANT, 3)));
  CHECK(s.hom(2, 2).size() == 14);
}

TEST_CASE("closure with the min connection gives the meet variant") {
  auto gens = with_tau(delta1_generators());
  gens.push_back(basic_generator(GeneratorKind::gamma_minus));
  Saturation s = saturate(gens, 3);
  CHECK(homs_equal(s.homs, predicate_homsets(VariantTag::MEET_VARIANT, 3)));
  CHECK(s.hom(2, 2).size() == 18);
  CHECK(s.contains(basic_generator(GeneratorKind::gamma_minus)));
  CHECK_FALSE(s.contains(basic_generator(GeneratorKind::gamma_plus)));
}

TEST_CASE("closure with the max connection gives the join variant") {
  auto gens = with_tau(delta1_generators());
  gens.push_back(basic_generator(GeneratorKind::gamma_plus));
  Saturation s = saturate(gens, 3);
  CHECK(homs_equal(s.homs, predicate_homsets(VariantTag::JOIN_VARIANT, 3)));
  CHECK_FALSE(s.contains(basic_generator(GeneratorKind::gamma_minus)));
}

TEST_CASE("surjections onto the interval generate everything") {
  auto gens = with_tau(delta1_generators());
  for (const auto& f : surjection_generators(3)) gens.push_back(f);
  Saturation s = saturate(gens, 3);
  CHECK(homs_equal(s.homs, predicate_homsets(VariantTag::BOXPLUS, 3)));
  CHECK(s.hom(2, 2).size() == 22);
  CHECK(s.hom(3, 3).size() == 338);
  CubeMorphism median = mkmap(3, {mk(3, {{1, 2}, {1, 3}, {2, 3}})});
  CHECK(s.contains(median));
}

TEST_CASE("closures are monotone in the generator set and stay inside the category") {
  Saturation small = saturate(with_tau(delta1_generators()), 3);
  auto gens = with_tau(delta1_generators());
  gens.push_back(basic_generator(GeneratorKind::gamma_minus));
  Saturation big = saturate(gens, 3);
  for (const auto& [key, hs] : small.homs)
    for (const auto& f : hs) {
      CHECK(big.contains(f));
      CHECK(is_interval_preserving(f));
    }
}

TEST_CASE("shape axioms hold on the interval-preserving hom-sets") {
  VerifyReport r2 = verify_reedy_ez(2);
  CHECK(r2.all_pass());
  VerifyReport r3 = verify_reedy_ez(3);
  CHECK(r3.all_pass());
  REQUIRE(r3.checks.size() == 6);
  std::set<std::string> names;
  for (const auto& c : r3.checks) {
    names.insert(c.name);
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
  CHECK(names == std::set<std::string>{"factorization-exists-unique", "bijective-is-permutation",
                                       "degree-monotonicity", "iso-rigidity-on-surjections",
                                       "surjections-split", "section-determinacy"});
}

TEST_CASE("adjoining the doubling map breaks factorization") {
  NegativeControl nc = negative_control();

  SECTION("the min-by-max pairing is among the reported failures") {
    CubeMorphism pairing = mkmap(2, {mk(2, {{1, 2}}), mk(2, {{1}, {2}})});
    CHECK(std::count(nc.unfactorable.begin(), nc.unfactorable.end(), pairing) == 1);
  }
  SECTION("exactly the maps onto a three-element chain fail") {
    CHECK(nc.unfactorable.size() == 10);
    for (const auto& f : nc.unfactorable) {
      std::set<PointMask> image;
      for (PointMask x = 0; x < (PointMask(1) << f.m); ++x) image.insert(f.eval(x));
      // a surjection onto a cube followed by an injection has an image of
      // size a power of two; three-point images are out of reach
      CHECK(image.size() == 3);
      CHECK_FALSE(is_interval_preserving(CubeMorphism{f.m, f.n, f.coords}));
    }
  }
  SECTION("interval-preserving maps always factor") {
    for (const auto& f : nc.unfactorable)
      CHECK(std::count_if(nc.unfactorable.begin(), nc.unfactorable.end(),
                          [&](const CubeMorphism& g) { return g == f; }) == 1);
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (const auto& f : enumerate_hom(m, n, VariantTag::BOXPLUS))
          CHECK(std::count(nc.unfactorable.begin(), nc.unfactorable.end(), f) == 0);
  }
}
