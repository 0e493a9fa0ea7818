#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <variant>

#include "helpers.hpp"

using namespace boxcat;
using testutil::mk;
using testutil::mkmap;

TEST_CASE("canonical antichain form") {
  // absorption: x1 v (x1 ^ x2) = x1
  CHECK(canonicalize(2, {0b01, 0b11}) == mk(2, {{1}}));
  CHECK(canonicalize(3, {0b011, 0b110}) == mk(3, {{1, 2}, {2, 3}}));
  CHECK(canonicalize(2, {}) == MonotoneBoolFn::const_false(2));
  CHECK(canonicalize(2, {0b11, 0b00, 0b01}) == MonotoneBoolFn::const_true(2));

  SECTION("canonicalize is idempotent and order independent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      MonotoneBoolFn f = testutil::random_mbf(rng, 4);
      CHECK(canonicalize(4, f.ac) == f);
      auto shuffled = f.ac;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(canonicalize(4, shuffled) == f);
    }
  }

  SECTION("eval agrees with the minimal-true-point reading") {
    MonotoneBoolFn med = mk(3, {{1, 2}, {1, 3}, {2, 3}});
    int trues = 0;
    for (PointMask x = 0; x < 8; ++x) trues += med.eval(x);
    CHECK(trues == 4);  // majority of three bits
    CHECK_FALSE(med.eval(0b001));
    CHECK(med.eval(0b011));
  }
}

TEST_CASE("truth tables convert to canonical form and back") {
  SECTION("conjunction") {
    RawMap r{2, 1, {0, 0, 0, 1}};
    CubeMorphism f = from_table(r);
    CHECK(f.coords == std::vector<MonotoneBoolFn>{mk(2, {{1, 2}})});
    CHECK(to_raw(f) == r);
  }
  SECTION("median truth table recovers the three pairs") {
    RawMap r{3, 1, {}};
    r.table.resize(8);
    for (PointMask x = 0; x < 8; ++x) {
      int pc = popcount(x);
      r.table[x] = pc >= 2 ? 1 : 0;
    }
    CubeMorphism f = from_table(r);
    REQUIRE(f.coords.size() == 1);
    CHECK(f.coords[0] == mk(3, {{1, 2}, {1, 3}, {2, 3}}));
  }
  SECTION("the reversal is rejected with the violating edge") {
    RawMap rev{1, 1, {1, 0}};
    CHECK_FALSE(monotonicity_witness(rev) == std::nullopt);
    try {
      from_table(rev);
      FAIL("expected NotMonotone");
    } catch (const Error& e) {
      CHECK(std::string(e.code()) == "NotMonotone");
    }
  }
  SECTION("round trip over all monotone tables at small arity") {
    for (int m = 0; m <= 3; ++m)
      for (const auto& f : enumerate_hom(m, 1, VariantTag::MONOTONE)) {
        CHECK(from_table(to_raw(f)) == f);
      }
  }
}

TEST_CASE("essential support") {
  CHECK(essential_support(mk(3, {{1, 2}, {1, 3}, {2, 3}})) == 0b111);
  CHECK(essential_support(MonotoneBoolFn::const_true(3)) == 0);
  CHECK(essential_support(MonotoneBoolFn::var(3, 2)) == 0b010);

  SECTION("support matches the flip test") {
    // coordinate i is essential iff flipping bit i changes the value somewhere
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
      int m = 1 + trial % 4;
      MonotoneBoolFn f = testutil::random_mbf(rng, m);
      PointMask flip = 0;
      for (int i = 0; i < m; ++i) {
        PointMask bit = PointMask(1) << i;
        for (PointMask x = 0; x < (PointMask(1) << m); ++x)
          if (f.eval(x) != f.eval(x ^ bit)) {
            flip |= bit;
            break;
          }
      }
      CHECK(f.support() == flip);
    }
  }
}

TEST_CASE("hom-set cardinalities") {
  // Dedekind numbers count the monotone maps to [1]
  const std::vector<std::size_t> dedekind{2, 3, 6, 20, 168, 7581};
  for (int n = 0; n <= 5; ++n)
    CHECK(enumerate_hom(n, 1, VariantTag::MONOTONE).size() == dedekind[static_cast<std::size_t>(n)]);

  CHECK(enumerate_hom(2, 2, VariantTag::BOXPLUS).size() == 22);
  CHECK(enumerate_hom(3, 3, VariantTag::BOXPLUS).size() == 338);
  CHECK(enumerate_hom(4, 3, VariantTag::BOXPLUS).size() == 3032);

  SECTION("all monotone endomaps of the interval") {
    auto hs = enumerate_hom(1, 1, VariantTag::BOXPLUS);
    REQUIRE(hs.size() == 3);
    CHECK(std::count(hs.begin(), hs.end(), CubeMorphism::identity(1)) == 1);
    CHECK(std::count(hs.begin(), hs.end(), mkmap(1, {MonotoneBoolFn::const_false(1)})) == 1);
    CHECK(std::count(hs.begin(), hs.end(), mkmap(1, {MonotoneBoolFn::const_true(1)})) == 1);
  }

  SECTION("enumeration order is deterministic and strictly sorted") {
    auto hs = enumerate_hom(2, 2, VariantTag::MONOTONE);
    for (std::size_t i = 1; i < hs.size(); ++i) CHECK(morphism_less(hs[i - 1], hs[i]));
  }
}

TEST_CASE("composition matches value-by-value evaluation") {
  SECTION("exhaustive at low arity") {
    for (int m = 0; m <= 2; ++m)
      for (int k = 0; k <= 2; ++k)
        for (int n = 0; n <= 2; ++n)
          for (const auto& phi : enumerate_hom(m, k, VariantTag::MONOTONE))
            for (const auto& psi : enumerate_hom(k, n, VariantTag::MONOTONE)) {
              CubeMorphism c = compose(psi, phi);
              REQUIRE(c.m == m);
              REQUIRE(c.n == n);
              for (PointMask x = 0; x < (PointMask(1) << m); ++x)
                CHECK(c.eval(x) == psi.eval(phi.eval(x)));
            }
  }
  SECTION("random composites at larger arity, with associativity") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 400; ++trial) {
      int m = 1 + trial % 4, k = 1 + (trial / 2) % 3, p = 1 + (trial / 3) % 3;
      CubeMorphism f = testutil::random_monotone_map(rng, m, k);
      CubeMorphism g = testutil::random_monotone_map(rng, k, p);
      CubeMorphism h = testutil::random_monotone_map(rng, p, 2);
      CubeMorphism gf = compose(g, f);
      for (PointMask x = 0; x < (PointMask(1) << m); ++x)
        CHECK(gf.eval(x) == g.eval(f.eval(x)));
      CHECK(compose(h, gf) == compose(compose(h, g), f));
      CHECK(compose(f, CubeMorphism::identity(m)) == f);
      CHECK(compose(CubeMorphism::identity(k), f) == f);
    }
  }
  SECTION("named composites") {
    CubeMorphism median = mkmap(3, {mk(3, {{1, 2}, {1, 3}, {2, 3}})});
    CubeMorphism freeze_z1 = tensor(CubeMorphism::identity(2), basic_generator(GeneratorKind::delta_plus));
    CHECK(compose(median, freeze_z1) == mkmap(2, {mk(2, {{1}, {2}})}));
    CubeMorphism freeze_x0 = tensor(basic_generator(GeneratorKind::delta_minus), CubeMorphism::identity(1));
    CHECK(compose(basic_generator(GeneratorKind::gamma_minus), freeze_x0) ==
          mkmap(1, {MonotoneBoolFn::const_false(1)}));
  }
}

TEST_CASE("tensor product") {
  CubeMorphism gm = basic_generator(GeneratorKind::gamma_minus);
  CubeMorphism gp = basic_generator(GeneratorKind::gamma_plus);
  CubeMorphism t = tensor(gm, gp);
  CHECK(t == mkmap(4, {mk(4, {{1, 2}}), mk(4, {{3}, {4}})}));
  CHECK(tensor(CubeMorphism::identity(1), CubeMorphism::identity(1)) == CubeMorphism::identity(2));
  CubeMorphism empty{0, 0, {}};
  CHECK(tensor(gm, empty) == gm);
  CHECK(tensor(empty, gm) == gm);

  SECTION("evaluation splits over the blocks") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
      CubeMorphism f = testutil::random_monotone_map(rng, 2, 2);
      CubeMorphism g = testutil::random_monotone_map(rng, 2, 1);
      CubeMorphism fg = tensor(f, g);
      for (PointMask x = 0; x < 16; ++x) {
        PointMask lo = x & 0b11, hi = x >> 2;
        CHECK(fg.eval(x) == (f.eval(lo) | (g.eval(hi) << 2)));
      }
    }
  }
}

TEST_CASE("permutation action on the source coordinates") {
  Permutation swap = Permutation::from_one_line({2, 1});
  CHECK(act_permutation(mkmap(2, {mk(2, {{1, 2}})}), swap) == mkmap(2, {mk(2, {{1, 2}})}));
  CHECK(act_permutation(CubeMorphism::identity(2), swap) ==
        basic_generator(GeneratorKind::tau));

  CubeMorphism median = mkmap(3, {mk(3, {{1, 2}, {1, 3}, {2, 3}})});
  for (const auto& g : testutil::all_permutations(3))
    CHECK(act_permutation(median, g) == median);

  SECTION("action is by precomposition with the point permutation") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
      CubeMorphism f = testutil::random_monotone_map(rng, 3, 2);
      for (const auto& g : testutil::all_permutations(3))
        CHECK(act_permutation(f, g) == compose(f, permutation_morphism(g)));
    }
  }
}

TEST_CASE("interval preservation membership") {
  CubeMorphism median = mkmap(3, {mk(3, {{1, 2}, {1, 3}, {2, 3}})});
  CHECK(is_interval_preserving(median));
  CHECK(oracle_interval_check(median));

  CHECK(is_interval_preserving(CubeMorphism::identity(2)));

  SECTION("the conditioned connection fails") {
    // first coordinate acts as min when z = 0 and max when z = 1; as a
    // canonical form that first coordinate is the median, which shares its
    // support with the passthrough coordinate z
    RawMap r{3, 2, {}};
    r.table.resize(8);
    for (PointMask in = 0; in < 8; ++in) {
      int x = in & 1, y = (in >> 1) & 1, z = (in >> 2) & 1;
      int first = z ? (x | y) : (x & y);
      r.table[in] = static_cast<PointMask>(first | (z << 1));
    }
    CubeMorphism f = from_table(r);
    CHECK(f.coords[0] == mk(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(f.coords[1] == MonotoneBoolFn::var(3, 3));
    CHECK_FALSE(is_interval_preserving(f));
    CHECK_FALSE(oracle_interval_check(f));
  }
  SECTION("pairing min with max fails") {
    CubeMorphism pairing = mkmap(2, {mk(2, {{1, 2}}), mk(2, {{1}, {2}})});
    CHECK_FALSE(is_interval_preserving(pairing));
    CHECK_FALSE(oracle_interval_check(pairing));
  }
  SECTION("the doubling map fails, seen on the long edge") {
    CubeMorphism diag = basic_generator(GeneratorKind::diag);
    CHECK_FALSE(is_interval_preserving(diag));
    CHECK_FALSE(oracle_interval_check(diag));
    auto w = overlap_witness(diag);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == 1);
    CHECK((*w)[1] == 2);
    CHECK((*w)[2] == 1);
  }
  SECTION("fast test equals the interval-image oracle, exhaustively to arity 3") {
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n)
        for (const auto& f : enumerate_hom(m, n, VariantTag::MONOTONE))
          CHECK(is_interval_preserving(f) == oracle_interval_check(f));
  }
  SECTION("fast test equals the oracle on random arity-4 maps") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
      CubeMorphism f = testutil::random_monotone_map(rng, 4, 1 + trial % 3);
      CHECK(is_interval_preserving(f) == oracle_interval_check(f));
    }
  }
}

TEST_CASE("variant classification") {
  auto tags = [](const CubeMorphism& f) { return classify(f); };

  SECTION("a projection earns every tag") {
    CubeMorphism proj = mkmap(2, {MonotoneBoolFn::var(2, 2)});
    auto t = tags(proj);
    CHECK(t == std::vector<VariantTag>{VariantTag::MONOTONE, VariantTag::BOXPLUS,
                                       VariantTag::MEET_VARIANT, VariantTag::JOIN_VARIANT,
                                       VariantTag::LATTICE_VARIANT, VariantTag::DELTA1_STAR});
  }
  SECTION("the min connection is a meet map but not a join map") {
    auto t = tags(basic_generator(GeneratorKind::gamma_minus));
    CHECK(std::count(t.begin(), t.end(), VariantTag::MEET_VARIANT) == 1);
    CHECK(std::count(t.begin(), t.end(), VariantTag::JOIN_VARIANT) == 0);
    CHECK(std::count(t.begin(), t.end(), VariantTag::LATTICE_VARIANT) == 0);
    CHECK(std::count(t.begin(), t.end(), VariantTag::BOXPLUS) == 1);
  }
  SECTION("the median is interval preserving and nothing finer") {
    CubeMorphism median = mkmap(3, {mk(3, {{1, 2}, {1, 3}, {2, 3}})});
    auto t = tags(median);
    CHECK(t == std::vector<VariantTag>{VariantTag::MONOTONE, VariantTag::BOXPLUS});
  }
  SECTION("a non-monotone table classifies as none") {
    RawMap rev{1, 1, {1, 0}};
    auto t = classify(rev);
    CHECK(t == std::vector<VariantTag>{VariantTag::NONE});
  }
  SECTION("tags are consistent with evaluation-level predicates at low arity") {
    // a meet coordinate evaluates as the conjunction over its support,
    // a join coordinate as the disjunction
    auto acts_as_meet = [](const MonotoneBoolFn& c) {
      if (c.is_const_false()) return true;
      PointMask s = c.support();
      for (PointMask x = 0; x < (PointMask(1) << c.m); ++x)
        if (c.eval(x) != ((x & s) == s)) return false;
      return true;
    };
    auto acts_as_join = [](const MonotoneBoolFn& c) {
      if (c.is_const_true()) return true;
      PointMask s = c.support();
      for (PointMask x = 0; x < (PointMask(1) << c.m); ++x)
        if (c.eval(x) != ((x & s) != 0)) return false;
      return true;
    };
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (const auto& f : enumerate_hom(m, n, VariantTag::MONOTONE)) {
          auto t = tags(f);
          bool boxplus = std::count(t.begin(), t.end(), VariantTag::BOXPLUS) > 0;
          CHECK(boxplus == is_interval_preserving(f));
          bool meets = boxplus && std::all_of(f.coords.begin(), f.coords.end(), acts_as_meet);
          CHECK(meets == (std::count(t.begin(), t.end(), VariantTag::MEET_VARIANT) > 0));
          bool joins = boxplus && std::all_of(f.coords.begin(), f.coords.end(), acts_as_join);
          CHECK(joins == (std::count(t.begin(), t.end(), VariantTag::JOIN_VARIANT) > 0));
        }
  }
}

TEST_CASE("operad substitution") {
  // plug args[i] into input i of the outer function, shifting the argument
  // variables into consecutive blocks; checked against plain evaluation
  auto table_check = [](const OperadElement& outer, const std::vector<OperadElement>& args) {
    OperadElement got = substitute(outer, args);
    int total = 0;
    for (const auto& a : args) total += a.m;
    REQUIRE(got.m == total);
    for (PointMask x = 0; x < (PointMask(1) << total); ++x) {
      PointMask inner = 0;
      int off = 0;
      for (std::size_t i = 0; i < args.size(); ++i) {
        PointMask block = (x >> off) & (full_mask(args[i].m));
        if (args[i].eval(block)) inner |= PointMask(1) << i;
        off += args[i].m;
      }
      CHECK(got.eval(x) == outer.eval(inner));
    }
  };

  SECTION("exhaustive at outer arity up to 2") {
    for (int k = 0; k <= 2; ++k)
      for (const auto& outer : enumerate_mbf(k)) {
        std::vector<OperadElement> args(static_cast<std::size_t>(k));
        auto rec = [&](auto&& self, int i) -> void {
          if (i == k) {
            table_check(outer, args);
            return;
          }
          for (int ni = 0; ni <= 2; ++ni)
            for (const auto& a : enumerate_mbf(ni)) {
              args[static_cast<std::size_t>(i)] = a;
              self(self, i + 1);
            }
        };
        rec(rec, 0);
      }
  }
  SECTION("random larger substitutions") {
    std::mt19937 rng(73);
    std::uniform_int_distribution<int> arity(0, 3);
    for (int trial = 0; trial < 1000; ++trial) {
      int k = arity(rng);
      OperadElement outer = testutil::random_mbf(rng, k);
      std::vector<OperadElement> args;
      for (int i = 0; i < k; ++i) args.push_back(testutil::random_mbf(rng, arity(rng)));
      table_check(outer, args);
    }
  }
  SECTION("identity and associativity instances") {
    OperadElement med = mk(3, {{1, 2}, {1, 3}, {2, 3}});
    std::vector<OperadElement> ids{op_generator(1, 1), op_generator(1, 1), op_generator(1, 1)};
    CHECK(substitute(med, ids) == med);

    // substituting meets into a join matches the flat canonical form
    OperadElement j = mk(2, {{1}, {2}});
    OperadElement a = mk(2, {{1, 2}});
    OperadElement got = substitute(j, {a, a});
    CHECK(got == mk(4, {{1, 2}, {3, 4}}));
  }
  SECTION("generator counts without the constants") {
    const std::vector<std::size_t> dedekind{2, 3, 6, 20, 168};
    for (int n = 0; n <= 4; ++n) {
      CHECK(enumerate_fdl(n, true).size() == dedekind[static_cast<std::size_t>(n)]);
      CHECK(enumerate_fdl(n, false).size() == dedekind[static_cast<std::size_t>(n)] - 2);
    }
    for (const auto& f : enumerate_fdl(3, false)) CHECK_FALSE(f.is_constant());
  }
  SECTION("meet and join are the lattice operations pointwise") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
      OperadElement f = testutil::random_mbf(rng, 3), g = testutil::random_mbf(rng, 3);
      OperadElement fm = op_meet(f, g), fj = op_join(f, g);
      for (PointMask x = 0; x < 8; ++x) {
        CHECK(fm.eval(x) == (f.eval(x) && g.eval(x)));
        CHECK(fj.eval(x) == (f.eval(x) || g.eval(x)));
      }
    }
  }
}

TEST_CASE("named generator table") {
  CHECK(basic_generator(GeneratorKind::gamma_minus) == mkmap(2, {mk(2, {{1, 2}})}));
  CHECK(basic_generator(GeneratorKind::gamma_plus) == mkmap(2, {mk(2, {{1}, {2}})}));
  CHECK(basic_generator(GeneratorKind::tau) ==
        mkmap(2, {MonotoneBoolFn::var(2, 2), MonotoneBoolFn::var(2, 1)}));

  SECTION("indexed codegeneracy drops the named coordinate") {
    auto g = named_generator(GeneratorKind::sigma, 2, 3);
    REQUIRE(std::holds_alternative<CubeMorphism>(g));
    CHECK(std::get<CubeMorphism>(g) ==
          mkmap(3, {MonotoneBoolFn::var(3, 1), MonotoneBoolFn::var(3, 3)}));
  }
  SECTION("the reversal only exists as a table") {
    auto g = named_generator(GeneratorKind::reverse, 1, 1);
    REQUIRE(std::holds_alternative<RawMap>(g));
    CHECK(std::get<RawMap>(g).table == std::vector<PointMask>{1, 0});
  }
}
