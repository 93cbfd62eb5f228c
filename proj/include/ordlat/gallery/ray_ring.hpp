#pragma once

// The lattice of closed sets generated by the rays (-inf, -a] and [b, inf),
// a, b >= 0, with the sublattice Y of rays with a, b > 0.

#include "ordlat/errors.hpp"
#include "ordlat/gallery/closed_sets.hpp"
#include "ordlat/gallery/report.hpp"
#include "ordlat/subobject.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordlat::gallery {

struct RayRingElem {
  enum class Shape { empty, left, right, two, zero };
  Shape shape = Shape::empty;
  ExtRational a = 0;
  ExtRational b = 0;

  static RayRingElem none() { return {}; }
  static RayRingElem zero() { return {Shape::zero, 0, 0}; }
  static RayRingElem left(ExtRational a) { return {Shape::left, check(std::move(a)), 0}; }
  static RayRingElem right(ExtRational b) { return {Shape::right, 0, check(std::move(b))}; }
  static RayRingElem two(ExtRational a, ExtRational b) { return {Shape::two, check(std::move(a)), check(std::move(b))}; }

  SymClosedSet to_set() const {
    const auto ninf = ExtRational::neg_inf();
    const auto pinf = ExtRational::pos_inf();
    switch (shape) {
      case Shape::empty:
        return {};
      case Shape::zero:
        return SymClosedSet::point(0);
      case Shape::left:
        return SymClosedSet::interval(ninf, -a);
      case Shape::right:
        return SymClosedSet::interval(b, pinf);
      case Shape::two:
        return SymClosedSet::interval(ninf, -a) | SymClosedSet::interval(b, pinf);
    }
    return {};
  }

  /// Normal form of a closed set of one of the five types, if it is one.
  static std::optional<RayRingElem> from_set(const SymClosedSet& s) {
    const auto& sp = s.spans().spans();
    const auto ninf = ExtRational::neg_inf();
    const auto pinf = ExtRational::pos_inf();
    if (sp.empty()) return none();
    if (sp.size() == 1) {
      const auto& x = sp.front();
      if (x.lo == 0 && x.hi == 0) return zero();
      if (x.lo == ninf && x.hi == pinf) return two(0, 0);
      if (x.lo == ninf && x.hi <= 0) return left(-x.hi);
      if (x.hi == pinf && x.lo >= 0) return right(x.lo);
      return std::nullopt;
    }
    if (sp.size() == 2 && sp[0].lo == ninf && sp[0].hi <= 0 && sp[1].hi == pinf && sp[1].lo >= 0) {
      return two(-sp[0].hi, sp[1].lo);
    }
    return std::nullopt;
  }

  friend bool operator==(const RayRingElem& x, const RayRingElem& y) { return x.to_set() == y.to_set(); }

  std::string str() const { return to_set().str(); }

 private:
  static ExtRational check(ExtRational v) {
    if (!v.is_finite() || v.value() < 0) throw InputError("ray parameter must be a finite value >= 0, got " + v.str());
    return v;
  }
};

inline const SpanSet& nonnegative() {
  static const SpanSet s{Span{0, true, ExtRational::pos_inf(), false}};
  return s;
}
inline const SpanSet& positive() {
  static const SpanSet s{Span{0, false, ExtRational::pos_inf(), false}};
  return s;
}

/// A subset of the ray ring given by parameter ranges per type. Two-ray
/// parameters range over the product two_a x two_b.
struct RaySubset {
  bool has_empty = false;
  bool has_zero = false;
  SpanSet left_a;
  SpanSet right_b;
  SpanSet two_a;
  SpanSet two_b;

  bool contains(const RayRingElem& e) const {
    using S = RayRingElem::Shape;
    switch (e.shape) {
      case S::empty:
        return has_empty;
      case S::zero:
        return has_zero;
      case S::left:
        return left_a.contains(e.a);
      case S::right:
        return right_b.contains(e.b);
      case S::two:
        return two_a.contains(e.a) && two_b.contains(e.b);
    }
    return false;
  }

  bool two_empty() const { return two_a.empty() || two_b.empty(); }

  friend bool operator==(const RaySubset& x, const RaySubset& y) {
    if (x.has_empty != y.has_empty || x.has_zero != y.has_zero || x.left_a != y.left_a || x.right_b != y.right_b) {
      return false;
    }
    if (x.two_empty() || y.two_empty()) return x.two_empty() == y.two_empty();
    return x.two_a == y.two_a && x.two_b == y.two_b;
  }

  std::string str() const {
    std::vector<std::string> parts;
    if (has_empty) parts.push_back("∅");
    if (has_zero) parts.push_back("{0}");
    if (!left_a.empty()) parts.push_back("(-inf,-a] for a in " + left_a.str());
    if (!right_b.empty()) parts.push_back("[b,inf) for b in " + right_b.str());
    if (!two_empty()) parts.push_back("(-inf,-a] ∪ [b,inf) for (a,b) in " + two_a.str() + " x " + two_b.str());
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
    return out + "}";
  }
};

/// The sublattice Y: every type with a, b > 0, plus the empty set.
inline RaySubset rayring_y() { return RaySubset{true, false, positive(), positive(), positive(), positive()}; }

/// The closure as stated: every type with a, b >= 0 except {0}.
inline RaySubset rayring_stated_closure() {
  return RaySubset{true, false, nonnegative(), nonnegative(), nonnegative(), nonnegative()};
}

namespace detail {

struct ParamLimits {
  SpanSet finite;  // limits of convergent monotone parameter nets
  bool unbounded = false;  // some net tends to +inf
};

inline ParamLimits parameter_limits(const SpanSet& s) {
  const auto cl = s.closure();
  return {cl & nonnegative(), cl.contains(ExtRational::pos_inf())};
}

}  // namespace detail

/// First O-adherence: limits of monotone parametric nets. Parameters move
/// to points of their closure; a parameter running off to +inf shrinks its
/// ray to the empty set.
struct RayRingAdherence {
  using Set = RaySubset;

  Set first_adherence(const Set& x) const {
    Set out = x;
    const auto left = detail::parameter_limits(x.left_a);
    const auto right = detail::parameter_limits(x.right_b);
    out.left_a = x.left_a | left.finite;
    out.right_b = x.right_b | right.finite;
    out.has_empty = x.has_empty || left.unbounded || right.unbounded;
    if (!x.two_empty()) {
      const auto ta = detail::parameter_limits(x.two_a);
      const auto tb = detail::parameter_limits(x.two_b);
      out.two_a = x.two_a | ta.finite;
      out.two_b = x.two_b | tb.finite;
      if (ta.unbounded) out.right_b = out.right_b | tb.finite;
      if (tb.unbounded) out.left_a = out.left_a | ta.finite;
      if (ta.unbounded && tb.unbounded) out.has_empty = true;
    }
    return out;
  }
};

/// Members of `x` contained in the closed set `t`.
inline RaySubset members_below(const RaySubset& x, const SymClosedSet& t) {
  RaySubset out;
  out.has_empty = x.has_empty;
  out.has_zero = x.has_zero && t.contains(0);
  const auto& sp = t.spans().spans();
  // (-inf,-a] lies in t iff t's first span is (-inf, h] with -a <= h.
  std::optional<ExtRational> min_a;
  std::optional<ExtRational> min_b;
  if (!sp.empty() && sp.front().lo == ExtRational::neg_inf()) min_a = max(-sp.front().hi, ExtRational(0));
  if (!sp.empty() && sp.back().hi == ExtRational::pos_inf()) min_b = max(sp.back().lo, ExtRational(0));
  if (min_a) out.left_a = x.left_a & at_least(*min_a);
  if (min_b) out.right_b = x.right_b & at_least(*min_b);
  if (min_a && min_b) {
    out.two_a = x.two_a & at_least(*min_a);
    out.two_b = x.two_b & at_least(*min_b);
  }
  return out;
}

/// Greatest member of a ray subset under inclusion, if any.
inline std::optional<RayRingElem> greatest_member(const RaySubset& x) {
  std::vector<RayRingElem> candidates;
  std::vector<SymClosedSet> must_contain;
  auto attained_min = [](const SpanSet& s) -> std::optional<ExtRational> {
    auto e = s.inf();
    if (e && e->attained) return e->value;
    return std::nullopt;
  };
  if (x.has_empty) candidates.push_back(RayRingElem::none());
  if (x.has_zero) {
    candidates.push_back(RayRingElem::zero());
    must_contain.push_back(SymClosedSet::point(0));
  }
  if (auto e = x.left_a.inf()) {
    must_contain.push_back(RayRingElem::left(e->value).to_set());
    if (auto a = attained_min(x.left_a)) candidates.push_back(RayRingElem::left(*a));
  }
  if (auto e = x.right_b.inf()) {
    must_contain.push_back(RayRingElem::right(e->value).to_set());
    if (auto b = attained_min(x.right_b)) candidates.push_back(RayRingElem::right(*b));
  }
  if (!x.two_empty()) {
    must_contain.push_back(RayRingElem::two(x.two_a.inf()->value, x.two_b.inf()->value).to_set());
    auto a = attained_min(x.two_a);
    auto b = attained_min(x.two_b);
    if (a && b) candidates.push_back(RayRingElem::two(*a, *b));
  }
  for (const auto& c : candidates) {
    const auto cs = c.to_set();
    bool ok = true;
    for (const auto& m : must_contain) ok = ok && sym_leq(m, cs);
    if (ok) return c;
  }
  return std::nullopt;
}

inline GalleryReport rayring_closure() {
  const std::string where = "ring of closed sets generated by the rays (-inf,-a] and [b,inf)";
  GalleryReport rep{"ray-ring", where, {}, 0};
  const auto y = rayring_y();
  const RayRingAdherence backend;
  const auto first = backend.first_adherence(y);
  const auto stated = rayring_stated_closure();

  auto& c1 = rep.add("adherence.first", where);
  c1.value("Y", y.str()).value("first adherence", first.str()).value("expected", stated.str());
  c1.pass = first == stated && !first.contains(RayRingElem::zero());

  const auto p = RayRingElem::left(0);
  const auto q = RayRingElem::right(0);
  const auto meet_l = sym_meet(p.to_set(), q.to_set());
  auto& c2 = rep.add("inf.in-L", where);
  c2.value("x", p.str()).value("y", q.str()).value("x meet y in L", meet_l.str());
  c2.pass = meet_l == SymClosedSet::point(0) && RayRingElem::from_set(meet_l) == RayRingElem::zero();

  const auto below = members_below(first, meet_l);
  const auto inf_closure = greatest_member(below);
  auto& c3 = rep.add("inf.in-closure", where);
  c3.value("lower bounds in closure", below.str())
      .value("infimum in closure", inf_closure ? inf_closure->str() : "none")
      .value("{0} in closure", first.contains(RayRingElem::zero()) ? "yes" : "no");
  c3.pass = inf_closure == RayRingElem::none() && first.contains(p) && first.contains(q) &&
            !first.contains(RayRingElem::zero());

  const auto trace = iterate_adherence(backend, y, 8);
  auto& c4 = rep.add("adherence.stabilizes", where);
  c4.value("stages", std::to_string(trace.stages.size()))
      .value("stabilized", trace.stabilized ? "yes" : "no")
      .value("stabilized at", std::to_string(trace.stabilized_at));
  c4.pass = trace.stabilized && trace.stabilized_at == 1 && trace.stages[1] == stated;
  return rep;
}

}  // namespace ordlat::gallery
