#pragma once

// Subposets of {0,1} x [-inf, inf] under the product order, described by one
// span set of admissible values per tag.

#include "ordlat/errors.hpp"
#include "ordlat/gallery/closed_sets.hpp"
#include "ordlat/gallery/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ordlat::gallery {

struct PairPoint {
  int tag = 0;
  ExtRational b;

  bool leq(const PairPoint& o) const { return tag <= o.tag && b <= o.b; }
  friend bool operator==(const PairPoint&, const PairPoint&) = default;
  friend auto operator<=>(const PairPoint& x, const PairPoint& y) {
    if (x.tag != y.tag) return x.tag <=> y.tag;
    return x.b <=> y.b;
  }
  std::string str() const { return "(" + std::to_string(tag) + "," + b.str() + ")"; }
};

/// {(j, v) : v in part[j]}.
struct PairSet {
  std::array<SpanSet, 2> part;

  static PairSet of(const PairPoint& p) {
    PairSet out;
    out.part[p.tag] = SpanSet{Span::point(p.b)};
    return out;
  }

  bool empty() const { return part[0].empty() && part[1].empty(); }
  bool contains(const PairPoint& p) const { return part[p.tag].contains(p.b); }

  friend PairSet operator&(const PairSet& x, const PairSet& y) { return {{x.part[0] & y.part[0], x.part[1] & y.part[1]}}; }
  friend PairSet operator|(const PairSet& x, const PairSet& y) { return {{x.part[0] | y.part[0], x.part[1] | y.part[1]}}; }
  friend bool operator==(const PairSet&, const PairSet&) = default;

  std::string str() const {
    if (empty()) return "∅";
    std::string out;
    for (int j = 0; j < 2; ++j) {
      if (part[j].empty()) continue;
      if (!out.empty()) out += " ∪ ";
      out += "(" + std::to_string(j) + "," + part[j].str() + ")";
    }
    return out;
  }
};

inline std::string format_points(const std::vector<PairPoint>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? "," : "") + ps[i].str();
  return out + "}";
}

class TwoChain {
 public:
  TwoChain(std::string name, SpanSet dom0, SpanSet dom1) : name_(std::move(name)), dom_{std::move(dom0), std::move(dom1)} {}

  const std::string& name() const { return name_; }
  const SpanSet& dom(int tag) const { return dom_.at(tag); }
  PairSet all() const { return PairSet{dom_}; }
  bool contains(const PairPoint& p) const { return (p.tag == 0 || p.tag == 1) && dom_[p.tag].contains(p.b); }

  void require(const PairPoint& p) const {
    if (!contains(p)) throw PreconditionError(p.str() + " is not an element of " + name_);
  }

  TwoChain without(const PairPoint& p) const {
    auto out = *this;
    out.name_ = name_ + " minus " + p.str();
    out.dom_[p.tag] = out.dom_[p.tag] & (at_most(p.b, false) | at_least(p.b, false));
    return out;
  }

  TwoChain restricted_to(std::string name, const PairSet& s) const {
    return TwoChain(std::move(name), dom_[0] & s.part[0], dom_[1] & s.part[1]);
  }

  /// Upper bounds of the bound data (highest tag present, supremum of values).
  PairSet upper_bounds_of(int max_tag, const ExtRational& sup_value) const {
    PairSet out;
    for (int j = max_tag; j < 2; ++j) out.part[j] = dom_[j] & at_least(sup_value);
    return out;
  }
  PairSet lower_bounds_of(int min_tag, const ExtRational& inf_value) const {
    PairSet out;
    for (int j = 0; j <= min_tag; ++j) out.part[j] = dom_[j] & at_most(inf_value);
    return out;
  }

  PairSet upper_bounds(const PairSet& s) const {
    if (s.empty()) return all();
    const int max_tag = s.part[1].empty() ? 0 : 1;
    ExtRational m = ExtRational::neg_inf();
    for (const auto& p : s.part) {
      if (auto e = p.sup()) m = max(m, e->value);
    }
    return upper_bounds_of(max_tag, m);
  }

  PairSet lower_bounds(const PairSet& s) const {
    if (s.empty()) return all();
    const int min_tag = s.part[0].empty() ? 1 : 0;
    ExtRational m = ExtRational::pos_inf();
    for (const auto& p : s.part) {
      if (auto e = p.inf()) m = min(m, e->value);
    }
    return lower_bounds_of(min_tag, m);
  }

  static std::optional<PairPoint> least(const PairSet& s) {
    for (int j = 0; j < 2; ++j) {
      auto e = s.part[j].inf();
      if (!e || !e->attained) continue;
      bool below_all = true;
      for (int k = 0; k < 2; ++k) {
        if (auto f = s.part[k].inf(); f && (k < j || f->value < e->value)) below_all = false;
      }
      if (below_all) return PairPoint{j, e->value};
    }
    return std::nullopt;
  }

  static std::optional<PairPoint> greatest(const PairSet& s) {
    for (int j = 1; j >= 0; --j) {
      auto e = s.part[j].sup();
      if (!e || !e->attained) continue;
      bool above_all = true;
      for (int k = 0; k < 2; ++k) {
        if (auto f = s.part[k].sup(); f && (k > j || e->value < f->value)) above_all = false;
      }
      if (above_all) return PairPoint{j, e->value};
    }
    return std::nullopt;
  }

  std::optional<PairPoint> sup(const PairSet& s) const { return least(upper_bounds(s)); }
  std::optional<PairPoint> inf(const PairSet& s) const { return greatest(lower_bounds(s)); }

  std::optional<PairPoint> join(const PairPoint& x, const PairPoint& y) const {
    require(x);
    require(y);
    return sup(PairSet::of(x) | PairSet::of(y));
  }
  std::optional<PairPoint> meet(const PairPoint& x, const PairPoint& y) const {
    require(x);
    require(y);
    return inf(PairSet::of(x) | PairSet::of(y));
  }

  PairSet down(const PairPoint& p) const { return lower_bounds(PairSet::of(p)); }

  /// D = D^{+-}.
  bool is_cut(const PairSet& d) const { return lower_bounds(upper_bounds(d)) == d; }

 private:
  std::string name_;
  std::array<SpanSet, 2> dom_;
};

/// n -> (tag, b(n)) for n >= first_index.
struct PairNet {
  int tag = 0;
  Expr b = Expr::constant(0);
  NetDirection direction = NetDirection::increasing;
  std::uint64_t first_index = 1;
  std::uint64_t n_check = 64;

  PairPoint at(std::uint64_t n) const { return {tag, b.at(n)}; }
  std::string str() const { return "(" + std::to_string(tag) + ", " + b.str() + ")"; }

  void validate(const TwoChain& chain) const {
    const int sign = direction == NetDirection::increasing ? 1 : -1;
    if (b.trend() * sign < 0) throw PreconditionError("pair net " + str() + " is not " + to_string(direction));
    for (std::uint64_t n = first_index; n <= first_index + n_check; ++n) chain.require(at(n));
  }
};

/// Supremum in `chain` of a monotone pair net, if it exists.
inline std::optional<PairPoint> net_sup(const TwoChain& chain, const PairNet& net) {
  net.validate(chain);
  if (net.direction == NetDirection::decreasing) return net.at(net.first_index);
  auto out = TwoChain::least(chain.upper_bounds_of(net.tag, net.b.limit()));
  if (out) {
    for (std::uint64_t n = net.first_index; n <= net.first_index + net.n_check; ++n) {
      if (!net.at(n).leq(*out)) throw std::logic_error("pair supremum does not bound the net");
    }
  }
  return out;
}

inline std::optional<PairPoint> net_inf(const TwoChain& chain, const PairNet& net) {
  net.validate(chain);
  if (net.direction == NetDirection::increasing) return net.at(net.first_index);
  auto out = TwoChain::greatest(chain.lower_bounds_of(net.tag, net.b.limit()));
  if (out) {
    for (std::uint64_t n = net.first_index; n <= net.first_index + net.n_check; ++n) {
      if (!out->leq(net.at(n))) throw std::logic_error("pair infimum does not bound the net");
    }
  }
  return out;
}

namespace detail {

inline const std::string kTwoChainLocation = "two-chain lattice L and its Dedekind-MacNeille completion";
inline const std::string kExmp3Location = "two-chain lattice L with L0 = points of value below 1";

inline std::string show(const std::optional<PairPoint>& p) { return p ? p->str() : "none"; }

/// Values 0, 1/4, 1/2, 3/4, 1, 3/2, 2, 3 and +inf: one or more per region
/// cut out by the critical values 0, 1 and +inf.
inline std::vector<ExtRational> representative_values() {
  return {0, ExtRational::ratio(1, 4), ExtRational::ratio(1, 2), ExtRational::ratio(3, 4), 1,
          ExtRational::ratio(3, 2), 2, 3, ExtRational::pos_inf()};
}

/// For each tag: empty, [0, v) or [0, v] for each representative v.
inline std::vector<PairSet> candidate_down_sets(const TwoChain& chain) {
  std::array<std::vector<SpanSet>, 2> options;
  for (int j = 0; j < 2; ++j) {
    options[j].push_back(SpanSet{});
    for (const auto& v : representative_values()) {
      for (bool closed : {false, true}) {
        auto s = chain.dom(j) & at_most(v, closed);
        if (std::find(options[j].begin(), options[j].end(), s) == options[j].end()) options[j].push_back(s);
      }
    }
  }
  std::vector<PairSet> out;
  for (const auto& a : options[0]) {
    for (const auto& b : options[1]) out.push_back(PairSet{{a, b}});
  }
  return out;
}

/// The point of the completion represented by a nonempty cut.
inline PairPoint cut_label(const PairSet& d) {
  const int tag = d.part[1].empty() ? 0 : 1;
  return {tag, d.part[tag].sup()->value};
}

}  // namespace detail

inline TwoChain twochain_example_lattice() {
  const auto one = ExtRational(1);
  return TwoChain("L", SpanSet{Span{0, true, one, false}},
                  SpanSet{Span{0, true, one, false}, Span{one, false, ExtRational::pos_inf(), false}});
}

/// The completion as stated: (0,b) with 0 <= b < 1 and (1,b) with 0 <= b <= inf.
inline TwoChain twochain_stated_completion() {
  return TwoChain("DM(L)", SpanSet{Span{0, true, 1, false}}, SpanSet{Span::closed(0, ExtRational::pos_inf())});
}

/// The completion with its least and greatest cuts removed, as stated.
inline TwoChain twochain_stated_reduced() {
  return TwoChain("L^delta", SpanSet{Span{0, false, 1, false}}, SpanSet{Span{0, true, ExtRational::pos_inf(), false}});
}

inline GalleryReport twochain_dm() {
  using detail::kTwoChainLocation;
  using detail::show;
  GalleryReport rep{"two-chain-dm", kTwoChainLocation, {}, 0};
  const auto lat = twochain_example_lattice();
  const auto half = ExtRational::ratio(1, 2);

  // Completion via the parametric candidate family.
  std::vector<PairSet> cuts;
  std::size_t candidates = 0;
  for (const auto& d : detail::candidate_down_sets(lat)) {
    ++candidates;
    if (lat.is_cut(d) && std::find(cuts.begin(), cuts.end(), d) == cuts.end()) cuts.push_back(d);
  }
  std::vector<PairPoint> labels;
  std::vector<PairPoint> adjoined;
  bool empty_cut = false;
  for (const auto& d : cuts) {
    if (d.empty()) {
      empty_cut = true;
      continue;
    }
    const auto label = detail::cut_label(d);
    labels.push_back(label);
    if (!lat.contains(label) || lat.down(label) != d) adjoined.push_back(label);
  }
  std::sort(labels.begin(), labels.end());
  std::sort(adjoined.begin(), adjoined.end());
  const std::vector<PairPoint> expected_adjoined{{1, 1}, {1, ExtRational::pos_inf()}};

  auto& c1 = rep.add("dm.adjoined", kTwoChainLocation);
  c1.value("candidates checked", std::to_string(candidates))
      .value("cuts found", std::to_string(cuts.size()))
      .value("adjoined", format_points(adjoined))
      .value("expected", format_points(expected_adjoined));
  c1.pass = adjoined == expected_adjoined && !empty_cut;

  const auto stated = twochain_stated_completion();
  std::vector<PairPoint> expected_labels;
  for (int j = 0; j < 2; ++j) {
    for (const auto& v : detail::representative_values()) {
      if (stated.contains({j, v})) expected_labels.push_back({j, v});
    }
  }
  const bool injective = std::adjacent_find(labels.begin(), labels.end()) == labels.end();
  auto& c2 = rep.add("dm.carrier", kTwoChainLocation);
  c2.value("completion", stated.all().str())
      .value("labels of cuts", format_points(labels))
      .value("labels injective", injective ? "yes" : "no");
  c2.pass = injective && labels == expected_labels;

  // L^delta: drop the least and the greatest cut.
  const auto least = TwoChain::least(stated.all());
  const auto greatest = TwoChain::greatest(stated.all());
  auto& c3 = rep.add("dm.reduced", kTwoChainLocation);
  c3.value("least cut", show(least)).value("greatest cut", show(greatest));
  bool reduced_ok = least && greatest;
  if (reduced_ok) {
    const auto reduced = stated.without(*least).without(*greatest);
    const auto expected = twochain_stated_reduced();
    c3.value("carrier", reduced.all().str()).value("expected", expected.all().str());
    reduced_ok = reduced.all() == expected.all();
  }
  c3.pass = reduced_ok;

  // Join-infinite law fails in L^delta.
  const auto red = twochain_stated_reduced();
  const PairNet x{0, Expr::harmonic(1, -1), NetDirection::increasing, 2, 64};
  const PairPoint p{1, half};
  const auto sup_x = net_sup(red, x);
  const auto lhs = sup_x ? red.meet(*sup_x, p) : std::nullopt;
  bool pointwise = true;
  for (std::uint64_t n = x.first_index; n <= x.first_index + x.n_check; ++n) {
    const PairPoint expect{std::min(x.tag, p.tag), min(x.b.at(n), p.b)};
    if (red.meet(x.at(n), p) != expect) pointwise = false;
  }
  const auto rhs = TwoChain::least(red.upper_bounds_of(std::min(x.tag, p.tag), min(x.b.limit(), p.b)));
  auto& c4 = rep.add("jid.failure", kTwoChainLocation);
  c4.value("net", "x_n = " + x.str() + ", n >= " + std::to_string(x.first_index))
      .value("sup x_n", show(sup_x))
      .value("(sup x_n) meet (1,1/2)", show(lhs))
      .value("sup (x_n meet (1,1/2))", show(rhs))
      .value("pointwise meets checked", pointwise ? "yes" : "no");
  c4.pass = pointwise && sup_x == PairPoint{1, 1} && lhs == PairPoint{1, half} && rhs == PairPoint{0, half} && lhs != rhs;

  // Meet-infinite law on the same chain: (inf y_n) join p = inf (y_n join p).
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure = "none";
  const std::vector<PairNet> nets{
      {0, Expr::harmonic(half.value(), Rational(1, 4)), NetDirection::decreasing, 1, 64},
      {0, Expr::geometric(Rational(1, 4), Rational(1, 2), Rational(1, 2)), NetDirection::decreasing, 1, 64},
      {1, Expr::harmonic(0, Rational(1, 4)), NetDirection::decreasing, 1, 64},
      {1, Expr::harmonic(1, Rational(1, 4)), NetDirection::decreasing, 1, 64},
      {1, Expr::geometric(2, 1, Rational(1, 3)), NetDirection::decreasing, 1, 64},
      {0, Expr::constant(half), NetDirection::decreasing, 1, 64},
  };
  const std::vector<PairPoint> points{{0, ExtRational::ratio(1, 4)}, {0, half}, {0, ExtRational::ratio(3, 4)}, {1, 0},
                                      {1, half},                     {1, 1},    {1, 2}};
  for (const auto& y : nets) {
    const auto inf_y = net_inf(red, y);
    if (!inf_y) continue;
    for (const auto& q : points) {
      for (std::uint64_t n = y.first_index; n <= y.first_index + y.n_check; ++n) {
        if (red.join(y.at(n), q) != PairPoint{std::max(y.tag, q.tag), max(y.b.at(n), q.b)}) {
          throw std::logic_error("pointwise join formula failed");
        }
      }
      const auto left = red.join(*inf_y, q);
      const auto right = TwoChain::greatest(red.lower_bounds_of(std::max(y.tag, q.tag), max(y.b.limit(), q.b)));
      ++checked;
      if (left != right) {
        if (failures++ == 0) first_failure = "y_n = " + y.str() + ", p = " + q.str();
      }
    }
  }
  auto& c5 = rep.add("mid.holds", kTwoChainLocation);
  c5.value("instances", std::to_string(checked)).value("failures", std::to_string(failures)).value("first failure", first_failure);
  c5.pass = checked > 0 && failures == 0;

  // Joins of converging nets converge to the join of the limits, in L.
  std::size_t pairs = 0;
  std::size_t bad = 0;
  const std::vector<PairNet> up_nets{
      {0, Expr::harmonic(half.value(), Rational(-1, 4)), NetDirection::increasing, 1, 64},
      {0, Expr::geometric(Rational(3, 4), Rational(-1, 2), Rational(1, 2)), NetDirection::increasing, 1, 64},
      {1, Expr::harmonic(half.value(), Rational(-1, 4)), NetDirection::increasing, 1, 64},
      {1, Expr::harmonic(2, Rational(-1, 4)), NetDirection::increasing, 1, 64},
      {1, Expr::harmonic(3, Rational(-1, 2)), NetDirection::increasing, 1, 64},
      {1, Expr::constant(half), NetDirection::increasing, 1, 64},
      {0, Expr::constant(ExtRational::ratio(1, 4)), NetDirection::increasing, 1, 64},
  };
  for (const auto& u : up_nets) {
    const auto su = net_sup(lat, u);
    if (!su) continue;
    for (const auto& v : up_nets) {
      const auto sv = net_sup(lat, v);
      if (!sv) continue;
      for (std::uint64_t n = 1; n <= 64; ++n) {
        if (lat.join(u.at(n), v.at(n)) != PairPoint{std::max(u.tag, v.tag), max(u.b.at(n), v.b.at(n))}) {
          throw std::logic_error("pointwise join formula failed");
        }
      }
      ++pairs;
      const auto joined = TwoChain::least(lat.upper_bounds_of(std::max(u.tag, v.tag), max(u.b.limit(), v.b.limit())));
      if (joined != lat.join(*su, *sv)) ++bad;
    }
  }
  auto& c6 = rep.add("join-of-limits", kTwoChainLocation);
  c6.value("net pairs", std::to_string(pairs)).value("violations", std::to_string(bad));
  c6.pass = pairs > 0 && bad == 0;
  return rep;
}

inline TwoChain exmp3_lattice() {
  return TwoChain("L", SpanSet{Span::closed(0, 1)}, SpanSet{Span::closed(0, 1)});
}

inline TwoChain exmp3_sublattice() {
  return TwoChain("L0", SpanSet{Span{0, true, 1, false}}, SpanSet{Span{0, true, 1, false}});
}

namespace detail {

/// Parametric subsets of L0: per tag, empty, a singleton or an interval
/// between two grid values with either endpoint open or closed.
inline std::vector<PairSet> definable_subsets(const TwoChain& sub) {
  const std::vector<ExtRational> grid{0, ExtRational::ratio(1, 4), ExtRational::ratio(1, 2), ExtRational::ratio(3, 4), 1};
  std::array<std::vector<SpanSet>, 2> options;
  for (int j = 0; j < 2; ++j) {
    auto add = [&](const SpanSet& s) {
      auto t = s & sub.dom(j);
      if (std::find(options[j].begin(), options[j].end(), t) == options[j].end()) options[j].push_back(t);
    };
    add(SpanSet{});
    for (std::size_t a = 0; a < grid.size(); ++a) {
      add(SpanSet{Span::point(grid[a])});
      for (std::size_t b = a + 1; b < grid.size(); ++b) {
        for (bool lc : {false, true}) {
          for (bool hc : {false, true}) add(SpanSet{Span{grid[a], lc, grid[b], hc}});
        }
      }
    }
  }
  std::vector<PairSet> out;
  for (const auto& a : options[0]) {
    for (const auto& b : options[1]) {
      PairSet s{{a, b}};
      if (!s.empty()) out.push_back(s);
    }
  }
  return out;
}

/// Probe points of a pair set: attained endpoints of its spans.
inline std::vector<PairPoint> probes(const PairSet& s) {
  std::vector<PairPoint> out;
  for (int j = 0; j < 2; ++j) {
    for (const auto& sp : s.part[j].spans()) {
      if (sp.lo_closed && sp.lo.is_finite()) out.push_back({j, sp.lo});
      if (sp.hi_closed && sp.hi.is_finite()) out.push_back({j, sp.hi});
      for (const auto& v : representative_values()) {
        if (sp.contains(v)) out.push_back({j, v});
      }
    }
  }
  return out;
}

}  // namespace detail

inline GalleryReport exmp3_check() {
  using detail::kExmp3Location;
  using detail::show;
  GalleryReport rep{"exmp3", kExmp3Location, {}, 0};
  const auto lat = exmp3_lattice();
  const auto sub = exmp3_sublattice();

  // The stated witness for the failure of property (B).
  const PairSet a{{SpanSet{Span{0, true, 1, false}}, SpanSet{}}};
  const PairPoint x{0, 1};
  const auto ub = lat.upper_bounds(a);
  const auto ub_in_sub = ub & sub.all();
  const PairSet expected_ub = PairSet::of({0, 1}) | PairSet::of({1, 1});
  auto& c1 = rep.add("property-b.witness", kExmp3Location);
  c1.value("A", a.str())
      .value("x", x.str())
      .value("A+ in L", ub.str())
      .value("A+ within L0", ub_in_sub.str());
  c1.pass = ub == expected_ub && ub_in_sub.empty() && ub.contains(x) && (ub_in_sub & lat.down(x)).empty();

  // Sweep of parametric subsets of L0 for (A), (B) and regularity.
  const auto subsets = detail::definable_subsets(sub);
  std::size_t b_failures = 0;
  std::size_t a_failures = 0;
  std::size_t reg_failures = 0;
  std::string b_first = "none";
  std::string a_first = "none";
  std::string reg_first = "none";
  for (const auto& s : subsets) {
    const auto up = lat.upper_bounds(s);
    const auto up_sub = up & sub.all();
    for (const auto& p : detail::probes(up)) {
      if ((up_sub & lat.down(p)).empty()) {
        if (b_failures++ == 0) b_first = "A = " + s.str() + ", x = " + p.str();
        break;
      }
    }
    const auto lo = lat.lower_bounds(s);
    const auto lo_sub = lo & sub.all();
    for (const auto& p : detail::probes(lo)) {
      if ((lo_sub & lat.upper_bounds(PairSet::of(p))).empty()) {
        if (a_failures++ == 0) a_first = "A = " + s.str() + ", x = " + p.str();
        break;
      }
    }
    const auto sup_sub = sub.sup(s);
    const auto inf_sub = sub.inf(s);
    if ((sup_sub && sup_sub != lat.sup(s)) || (inf_sub && inf_sub != lat.inf(s))) {
      if (reg_failures++ == 0) reg_first = "A = " + s.str() + ", sup/inf in L0 = " + show(sup_sub) + "/" + show(inf_sub);
    }
  }

  auto& c2 = rep.add("property-b.fails", kExmp3Location);
  c2.value("subsets", std::to_string(subsets.size()))
      .value("failures", std::to_string(b_failures))
      .value("first failure", b_first);
  c2.pass = b_failures > 0;

  auto& c3 = rep.add("property-a.holds", kExmp3Location);
  c3.value("subsets", std::to_string(subsets.size()))
      .value("scope", "nonempty subsets")
      .value("failures", std::to_string(a_failures))
      .value("first failure", a_first);
  c3.pass = a_failures == 0;

  auto& c4 = rep.add("regular", kExmp3Location);
  c4.value("subsets", std::to_string(subsets.size()))
      .value("failures", std::to_string(reg_failures))
      .value("first failure", reg_first);
  c4.pass = reg_failures == 0;
  return rep;
}

}  // namespace ordlat::gallery
