#include "ordlat/gallery/gallery.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ordlat::gallery;

namespace {

const ExtRational kNegInf = ExtRational::neg_inf();
const ExtRational kPosInf = ExtRational::pos_inf();

std::string value_of(const GalleryReport& r, const std::string& claim, const std::string& key) {
  const auto* c = r.find(claim);
  if (!c) return "<missing claim " + claim + ">";
  for (const auto& [k, v] : c->values) {
    if (k == key) return v;
  }
  return "<missing key " + key + ">";
}

struct Piece {
  ExtRational lo, hi;
};

// Naive membership for a union of closed pieces.
bool member(const std::vector<Piece>& ps, const ExtRational& x) {
  for (const auto& p : ps) {
    if (p.lo <= x && x <= p.hi) return true;
  }
  return false;
}

std::vector<Piece> random_pieces(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 3), end(-4, 4);
  std::vector<Piece> out;
  for (int i = count(rng); i > 0; --i) {
    int a = end(rng), b = end(rng);
    if (a > b) std::swap(a, b);
    ExtRational lo = a == -4 ? kNegInf : ExtRational(a);
    ExtRational hi = b == 4 ? kPosInf : ExtRational(b);
    out.push_back({lo, hi});
  }
  return out;
}

SymClosedSet build(const std::vector<Piece>& ps) {
  SymClosedSet s;
  for (const auto& p : ps) s = s | SymClosedSet::interval(p.lo, p.hi);
  return s;
}

std::vector<ExtRational> probes() {
  std::vector<ExtRational> out;
  for (int k = -20; k <= 20; ++k) out.push_back(ExtRational::ratio(k, 4));
  return out;
}

}  // namespace

TEST(ExtRational, ParseAndOrder) {
  EXPECT_EQ(ExtRational::parse("inf"), kPosInf);
  EXPECT_EQ(ExtRational::parse("-inf"), kNegInf);
  EXPECT_EQ(ExtRational::parse("3/6"), ExtRational::ratio(1, 2));
  EXPECT_LT(kNegInf, ExtRational(-1000000));
  EXPECT_LT(ExtRational::ratio(1, 3), ExtRational::ratio(1, 2));
  EXPECT_EQ(-kPosInf, kNegInf);
  EXPECT_EQ(ExtRational::ratio(-3, 4).str(), "-3/4");
  EXPECT_ANY_THROW(ExtRational::parse("pi"));
}

TEST(SpanSet, ExtremaAndClosure) {
  SpanSet s{Span{0, false, 1, false}, Span{2, true, 3, true}};
  EXPECT_EQ(s.str(), "(0,1) ∪ [2,3]");
  EXPECT_EQ(*s.sup(), (Extremum{3, true}));
  EXPECT_EQ(*s.inf(), (Extremum{0, false}));
  EXPECT_EQ(s.closure(), (SpanSet{Span::closed(0, 1), Span::closed(2, 3)}));
  EXPECT_EQ((SpanSet{Span{0, true, 1, false}} | SpanSet{Span{1, true, 2, false}}), (SpanSet{Span{0, true, 2, false}}));
  EXPECT_FALSE(SpanSet{}.sup());
  EXPECT_EQ(SpanSet{}.str(), "∅");
  EXPECT_EQ(SpanSet{Span::point(5)}.str(), "{5}");
}

TEST(SymClosedSet, MembershipMatchesNaiveOracle) {
  std::mt19937_64 rng(2024);
  const auto xs = probes();
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_pieces(rng), b = random_pieces(rng);
    auto sa = build(a), sb = build(b);
    auto join = sym_join(sa, sb), meet = sym_meet(sa, sb);
    for (const auto& x : xs) {
      ASSERT_EQ(sa.contains(x), member(a, x));
      ASSERT_EQ(join.contains(x), member(a, x) || member(b, x));
      ASSERT_EQ(meet.contains(x), member(a, x) && member(b, x));
    }
    EXPECT_EQ(sym_leq(sa, sb), (sa & sb) == sa);
  }
}

TEST(SymClosedSet, LatticeLaws) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = build(random_pieces(rng)), b = build(random_pieces(rng)), c = build(random_pieces(rng));
    EXPECT_EQ(a & (b | c), (a & b) | (a & c));
    EXPECT_EQ(a | (b & c), (a | b) & (a | c));
    EXPECT_EQ(a | (a & b), a);
    EXPECT_EQ(a & (a | b), a);
    EXPECT_TRUE(sym_leq(a & b, a));
  }
}

TEST(SymClosedSet, ClosureOfOpenParts) {
  SpanSet open{Span{0, false, 1, false}, Span{1, false, kPosInf, false}};
  EXPECT_EQ(SymClosedSet::closure_of(open), SymClosedSet::interval(0, kPosInf));
  EXPECT_THROW(SymClosedSet::interval(2, 1), ordlat::InputError);
}

TEST(ClosedSets, IncreasingNetSupremum) {
  const auto net = closed_sets_net();
  EXPECT_EQ(net.at(1), SymClosedSet::interval(ExtRational::ratio(1, 2), kPosInf));
  EXPECT_EQ(net.at(3), SymClosedSet::interval(ExtRational::ratio(1, 8), kPosInf));
  EXPECT_EQ(net_sup(net), SymClosedSet::interval(0, kPosInf));
  EXPECT_EQ(net_limit(net), SymClosedSet::interval(0, kPosInf));
  EXPECT_EQ(net_union(net), (SpanSet{Span{0, false, kPosInf, false}}));
}

TEST(ClosedSets, UnboundedRefutation) {
  const auto net = closed_sets_net();
  const auto a = SymClosedSet::interval(kNegInf, -1);
  const auto b = SymClosedSet::interval(kNegInf, 0);
  const auto x = SymClosedSet::interval(0, kPosInf);
  auto r = uo_refute(net, x, {{a, b}});
  EXPECT_EQ(r.verdict, UoRefuteReport::Verdict::refuted);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].mapped, a);
  EXPECT_EQ(r.rows[0].required, a | SymClosedSet::point(0));
  EXPECT_EQ(r.rows[0].required.str(), "(-inf,-1] ∪ {0}");
  EXPECT_EQ(mapped_limit(net, a, b), a);
  EXPECT_THROW(uo_refute(net, x, {{b, a}}), ordlat::PreconditionError);
  auto agree = uo_refute(net, x, {{SymClosedSet{}, SymClosedSet::reals()}});
  EXPECT_EQ(agree.verdict, UoRefuteReport::Verdict::inconclusive);
}

TEST(ClosedSets, NetValidation) {
  ParamNet bad{{{Expr::harmonic(0, -1), Expr::constant(kPosInf)}}, NetDirection::increasing, 1, 16};
  EXPECT_THROW(bad.validate(), ordlat::PreconditionError);
  EXPECT_NO_THROW(closed_sets_net().validate());
}

TEST(ClosedSets, Report) {
  auto r = closed_sets_report();
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(value_of(r, "jid.failure", "B meet sup X_n"), "{0}");
  EXPECT_EQ(value_of(r, "jid.failure", "sup (B meet X_n)"), "∅");
  EXPECT_EQ(value_of(r, "witness-grid", "pairs"), "26");
}

TEST(TwoChain, OrderOperations) {
  auto chain = twochain_example_lattice();
  const PairPoint half{1, ExtRational::ratio(1, 2)};
  const PairPoint one{0, ExtRational::ratio(1, 2)};
  EXPECT_TRUE(one.leq(half));
  EXPECT_EQ(chain.meet(one, half), std::optional<PairPoint>(one));
  EXPECT_FALSE(chain.contains(PairPoint{1, 1}));
  EXPECT_FALSE(chain.contains(PairPoint{0, 1}));
  auto stated = twochain_stated_completion();
  EXPECT_TRUE(stated.contains(PairPoint{1, 1}));
  EXPECT_TRUE(stated.contains(PairPoint{1, kPosInf}));
}

TEST(TwoChain, CompletionReport) {
  auto r = twochain_dm();
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(value_of(r, "dm.adjoined", "adjoined"), "{(1,1),(1,inf)}");
  EXPECT_EQ(value_of(r, "jid.failure", "sup x_n"), "(1,1)");
  EXPECT_EQ(value_of(r, "jid.failure", "(sup x_n) meet (1,1/2)"), "(1,1/2)");
  EXPECT_EQ(value_of(r, "jid.failure", "sup (x_n meet (1,1/2))"), "(0,1/2)");
}

TEST(RayRing, InfimumAndAdherence) {
  const auto x = RayRingElem::left(0);
  const auto y = RayRingElem::right(0);
  EXPECT_EQ(x.to_set() & y.to_set(), SymClosedSet::point(0));
  EXPECT_EQ(RayRingElem::from_set(SymClosedSet::point(0)), std::optional<RayRingElem>(RayRingElem::zero()));
  EXPECT_FALSE(RayRingElem::from_set(SymClosedSet::interval(0, 1)));
  const auto closure = RayRingAdherence{}.first_adherence(rayring_y());
  EXPECT_EQ(closure, rayring_stated_closure());
  EXPECT_FALSE(closure.contains(RayRingElem::zero()));
  EXPECT_TRUE(closure.contains(RayRingElem::two(0, 0)));
  EXPECT_FALSE(rayring_y().contains(RayRingElem::left(0)));
  auto r = rayring_closure();
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(value_of(r, "inf.in-L", "x meet y in L"), "{0}");
  EXPECT_EQ(value_of(r, "inf.in-closure", "infimum in closure"), "∅");
  EXPECT_EQ(value_of(r, "adherence.stabilizes", "stabilized at"), "1");
}

TEST(Exmp3, PropertyBWitness) {
  auto r = exmp3_check();
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(value_of(r, "property-b.witness", "A"), "(0,[0,1))");
  EXPECT_EQ(value_of(r, "property-b.witness", "x"), "(0,1)");
  EXPECT_EQ(value_of(r, "regular", "failures"), "0");
  auto sub = exmp3_sublattice();
  auto a = PairSet{{SpanSet{Span{0, true, 1, false}}, SpanSet{}}};
  auto lattice = exmp3_lattice();
  EXPECT_TRUE(lattice.upper_bounds(a).contains(PairPoint{0, 1}));
  EXPECT_TRUE((sub.upper_bounds(a)).empty());
}

TEST(Gallery, NamesAndErrors) {
  for (const auto& n : gallery_names()) {
    auto r = run_gallery(n);
    EXPECT_TRUE(r.pass()) << n;
    EXPECT_LT(r.wall_ms, 1000.0) << n;
  }
  EXPECT_THROW(run_gallery("nope"), ordlat::InputError);
}
