#include "oracle.hpp"

#include "ordlat/generators.hpp"
#include "ordlat/preservation.hpp"

#include <gtest/gtest.h>

using namespace ordlat;

namespace {

SubsetCheckOptions nonempty() {
  SubsetCheckOptions o;
  o.empty_mode = EmptySubsetMode::exclude;
  return o;
}

}  // namespace

TEST(Classify, ChainSubsets) {
  auto l = chain_lattice(4);
  const auto& p = l.poset();
  auto d = classify(l, p.make_set({0, 1}));
  EXPECT_TRUE(d.sublattice);
  EXPECT_TRUE(d.down_set);
  EXPECT_TRUE(d.ideal);
  EXPECT_TRUE(d.convex);
  auto gap = classify(l, p.make_set({0, 2}));
  EXPECT_TRUE(gap.sublattice);
  EXPECT_FALSE(gap.convex);
  EXPECT_FALSE(gap.down_set);
}

TEST(Classify, M3Atoms) {
  auto l = m3_lattice();
  auto d = classify(l, l.poset().make_set({1, 2}));
  EXPECT_FALSE(d.sublattice);
  EXPECT_TRUE(d.convex);
  EXPECT_FALSE(d.ideal);
  auto e = classify(l, l.poset().make_set({0, 1, 2}));
  EXPECT_TRUE(e.down_set);
  EXPECT_FALSE(e.ideal);
}

TEST(PropertyA, EmptySubsetWitnessMissingTop) {
  auto l = chain_lattice(3);
  auto y = l.poset().make_set({0, 1});
  auto a = has_property_A(l, y);
  EXPECT_FALSE(a.holds);
  EXPECT_EQ(a.empty_mode, EmptySubsetMode::include);
  ASSERT_TRUE(a.witness_subset && a.witness_x);
  EXPECT_TRUE(a.witness_subset->empty());
  EXPECT_EQ(*a.witness_x, l.top());
  EXPECT_TRUE(has_property_A(l, y, nonempty()).holds);
  EXPECT_TRUE(has_property_B(l, y).holds);
}

TEST(Regularity, EmptySubsetModes) {
  auto l = chain_lattice(4);
  auto y = l.poset().make_set({1, 2});
  auto literal = is_regular(l, y);
  EXPECT_FALSE(literal.holds);
  ASSERT_TRUE(literal.witness_subset);
  EXPECT_TRUE(literal.witness_subset->empty());
  EXPECT_TRUE(is_regular(l, y, nonempty()).holds);
  EXPECT_THROW(is_regular(m3_lattice(), m3_lattice().poset().make_set({1, 2})), PreconditionError);
}

TEST(Regularity, EveryFiniteSublatticeInNonemptyMode) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto l = downset_lattice(random_poset(2 + seed % 5, 0.4, seed));
    auto y = random_sublattice(l, seed, 3).members;
    EXPECT_TRUE(is_regular(l, y, nonempty()).holds);
    EXPECT_EQ(is_regular(l, y).holds, oracle::regular(oracle::from(l.poset()), oracle::to_bits(y), true));
  }
}

TEST(Properties, MatchOracleOnRandomSubsets) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto l = seed % 3 == 0 ? n5_lattice() : downset_lattice(random_poset(2 + seed % 4, 0.4, seed));
    auto o = oracle::from(l.poset());
    std::mt19937_64 rng(seed);
    const auto m = oracle::from_mask(rng(), o.n);
    auto y = oracle::to_element_set(m);
    for (bool with_empty : {true, false}) {
      SubsetCheckOptions opt;
      opt.empty_mode = with_empty ? EmptySubsetMode::include : EmptySubsetMode::exclude;
      EXPECT_EQ(has_property_A(l, y, opt).holds, oracle::bound_property(o, m, with_empty, true)) << seed;
      EXPECT_EQ(has_property_B(l, y, opt).holds, oracle::bound_property(o, m, with_empty, false)) << seed;
      if (oracle::sublattice(o, m)) {
        EXPECT_EQ(is_regular(l, y, opt).holds, oracle::regular(o, m, with_empty)) << seed;
      }
    }
  }
}

TEST(Properties, SampledModeReportsItself) {
  auto l = boolean_lattice(4);
  SubsetCheckOptions o;
  o.exhaustive_limit = 3;
  o.samples = 50;
  auto r = has_property_B(l, l.poset().all(), o);
  EXPECT_EQ(r.mode, CheckMode::sampled);
  EXPECT_TRUE(r.holds);
}

TEST(Adherence, FiniteLatticeIsFixed) {
  auto l = n5_lattice();
  auto y = l.poset().make_set({0, 1, 3});
  EXPECT_EQ(first_O_adherence(l, y), y);
  EXPECT_EQ(first_uO_adherence(l, y), y);
  FiniteAdherence backend{&l, Convergence::order};
  auto trace = iterate_adherence(backend, y, 5);
  EXPECT_TRUE(trace.stabilized);
  EXPECT_EQ(trace.stabilized_at, 0u);
  auto empty = iterate_adherence(backend, l.poset().empty_set(), 5);
  EXPECT_TRUE(empty.stabilized);
  EXPECT_TRUE(empty.stages.back().empty());
}

TEST(Adherence, AgreesWithDefinitionalOracle) {
  auto l = m3_lattice();
  auto x = l.poset().make_set({1, 2, 4});
  auto adh = first_O_adherence(l, x);
  for (ElementId c = 0; c < l.size(); ++c) {
    bool reachable = false;
    for (auto a : x.members()) {
      for (auto b : x.members()) reachable = reachable || o_limit_oracle(l, UPSeq{{}, {a, b}}, c);
    }
    EXPECT_EQ(adh.contains(c), reachable);
  }
}

TEST(Preservation, ChainIdealHasA) {
  auto l = chain_lattice(4);
  auto y = l.poset().make_set({0, 1, 2});
  auto r = check_preservation(l, y);
  EXPECT_TRUE(r.ok()) << first_failure(r.checks)->id;
  EXPECT_FALSE(r.property_a.holds);
  EXPECT_TRUE(r.property_b.holds);
}

TEST(Preservation, EmbeddingOnRandomSublattices) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto l = seed % 2 ? m3_lattice() : downset_lattice(random_poset(4, 0.3, seed));
    auto y = random_sublattice(l, seed, 2).members;
    auto e = dm_embed_sublattice(l, y);
    EXPECT_TRUE(e.ok()) << seed;
    EXPECT_EQ(e.images.size(), e.completion_of_sub.size());
    std::set<oracle::Set> distinct;
    for (const auto& img : e.images) distinct.insert(oracle::to_bits(img));
    EXPECT_EQ(distinct.size(), e.images.size());
    for (PreservationOptions po : {PreservationOptions{}, PreservationOptions{nonempty(), 12, 100}}) {
      EXPECT_TRUE(check_preservation(l, y, po).ok()) << seed;
    }
  }
}

TEST(Generators, Shapes) {
  EXPECT_EQ(chain_lattice(5).size(), 5u);
  EXPECT_EQ(boolean_lattice(3).size(), 8u);
  EXPECT_EQ(grid_lattice(3, 4).size(), 12u);
  EXPECT_EQ(downset_lattice(antichain(3)).size(), 8u);
  EXPECT_EQ(downset_lattice(random_poset(4, 1.0, 1)).size(), 5u);
  EXPECT_THROW(chain_lattice(0), InputError);
  EXPECT_THROW(random_poset(3, 1.5, 0), InputError);
}

TEST(Generators, SeededAndDistributive) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(random_poset(6, 0.4, seed), random_poset(6, 0.4, seed));
    auto l = downset_lattice(random_poset(5, 0.4, seed));
    EXPECT_TRUE(oracle::distributive(oracle::from(l.poset())));
    GenSpec g;
    g.kind = GenKind::random_sublattice;
    g.size = 5;
    g.seed = seed;
    auto sub = std::get<FiniteLattice>(generate(g));
    EXPECT_TRUE(oracle::is_lattice(oracle::from(sub.poset())));
  }
  EXPECT_EQ(parse_gen_kind("N5"), GenKind::n5);
  EXPECT_FALSE(parse_gen_kind("pentagon"));
}
