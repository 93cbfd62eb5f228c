#pragma once

// Closed subsets of the real line with rational endpoints, and monotone
// parametric nets over them.

#include "ordlat/errors.hpp"
#include "ordlat/gallery/span_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordlat::gallery {

/// A finite union of closed intervals and rays of the real line.
///
/// Stored as a canonical SpanSet whose finite endpoints are closed and whose
/// infinite endpoints are open, so equality is structural.
class SymClosedSet {
 public:
  SymClosedSet() = default;

  /// Union of closed intervals [lo, hi]; lo may be -inf and hi may be +inf.
  static SymClosedSet of(std::initializer_list<std::pair<ExtRational, ExtRational>> parts) {
    SymClosedSet out;
    for (const auto& [lo, hi] : parts) out = out | interval(lo, hi);
    return out;
  }

  static SymClosedSet interval(const ExtRational& lo, const ExtRational& hi) {
    if (hi < lo) throw InputError("interval [" + lo.str() + "," + hi.str() + "] has lo > hi");
    if (lo == ExtRational::pos_inf() || hi == ExtRational::neg_inf()) {
      throw InputError("interval [" + lo.str() + "," + hi.str() + "] does not meet the real line");
    }
    return SymClosedSet(SpanSet{Span{lo, lo.is_finite(), hi, hi.is_finite()}});
  }

  static SymClosedSet point(const ExtRational& v) { return interval(v, v); }
  static SymClosedSet reals() { return SymClosedSet(SpanSet::reals()); }

  /// Closure in the real line of an arbitrary span set.
  static SymClosedSet closure_of(const SpanSet& s) { return SymClosedSet(s.real_closure()); }

  const SpanSet& spans() const { return set_; }
  bool empty() const { return set_.empty(); }
  bool contains(const ExtRational& x) const { return x.is_finite() && set_.contains(x); }

  friend SymClosedSet operator|(const SymClosedSet& a, const SymClosedSet& b) { return SymClosedSet(a.set_ | b.set_); }
  friend SymClosedSet operator&(const SymClosedSet& a, const SymClosedSet& b) { return SymClosedSet(a.set_ & b.set_); }
  bool subset_of(const SymClosedSet& o) const { return set_.subset_of(o.set_); }

  friend bool operator==(const SymClosedSet&, const SymClosedSet&) = default;

  std::string str() const { return set_.str(); }

 private:
  explicit SymClosedSet(SpanSet s) : set_(std::move(s)) {}

  SpanSet set_;
};

inline SymClosedSet sym_meet(const SymClosedSet& x, const SymClosedSet& y) { return x & y; }
inline SymClosedSet sym_join(const SymClosedSet& x, const SymClosedSet& y) { return x | y; }
inline bool sym_leq(const SymClosedSet& x, const SymClosedSet& y) { return x.subset_of(y); }

/// Endpoint expression in the index n: c, c + r*q^n (0 < q < 1) or c + r/n.
class Expr {
 public:
  enum class Shape { constant, geometric, harmonic };

  static Expr constant(ExtRational c) { return Expr(Shape::constant, std::move(c), 0, 0); }

  static Expr geometric(Rational c, Rational r, Rational q) {
    if (q <= 0 || q >= 1) throw InputError("geometric ratio must lie strictly between 0 and 1, got " + q.str());
    return Expr(Shape::geometric, ExtRational(std::move(c)), std::move(r), std::move(q));
  }

  static Expr harmonic(Rational c, Rational r) {
    return Expr(Shape::harmonic, ExtRational(std::move(c)), std::move(r), 0);
  }

  Shape shape() const { return shape_; }

  ExtRational at(std::uint64_t n) const {
    if (n == 0) throw InputError("net index starts at 1");
    switch (shape_) {
      case Shape::constant:
        return c_;
      case Shape::geometric: {
        Rational p = 1;
        for (std::uint64_t i = 0; i < n; ++i) p *= q_;
        return ExtRational(Rational(c_.value() + r_ * p));
      }
      case Shape::harmonic:
        return ExtRational(Rational(c_.value() + r_ / Rational(n)));
    }
    return c_;
  }

  const ExtRational& limit() const { return c_; }

  /// +1 increasing in n, -1 decreasing, 0 constant.
  int trend() const {
    if (shape_ == Shape::constant || r_ == 0) return 0;
    return r_ > 0 ? -1 : 1;
  }

  std::string str() const {
    switch (shape_) {
      case Shape::constant:
        return c_.str();
      case Shape::geometric:
        return c_.str() + (r_ < 0 ? " - " + Rational(-r_).str() : " + " + r_.str()) + "*(" + q_.str() + ")^n";
      case Shape::harmonic:
        return c_.str() + (r_ < 0 ? " - " + Rational(-r_).str() : " + " + r_.str()) + "/n";
    }
    return {};
  }

 private:
  Expr(Shape s, ExtRational c, Rational r, Rational q) : shape_(s), c_(std::move(c)), r_(std::move(r)), q_(std::move(q)) {}

  Shape shape_;
  ExtRational c_;
  Rational r_;
  Rational q_;
};

enum class NetDirection { increasing, decreasing };

inline std::string to_string(NetDirection d) { return d == NetDirection::increasing ? "increasing" : "decreasing"; }

struct NetTerm {
  Expr lo;
  Expr hi;
};

/// n -> union over terms of [lo(n), hi(n)], for n >= first_index.
struct ParamNet {
  std::vector<NetTerm> terms;
  NetDirection direction = NetDirection::increasing;
  std::uint64_t first_index = 1;
  std::uint64_t n_check = 64;

  SymClosedSet at(std::uint64_t n) const {
    SymClosedSet out;
    for (const auto& t : terms) {
      auto lo = t.lo.at(n);
      auto hi = t.hi.at(n);
      if (lo <= hi) out = out | SymClosedSet::interval(lo, hi);
    }
    return out;
  }

  std::string str() const {
    std::string out;
    for (const auto& t : terms) {
      if (!out.empty()) out += " ∪ ";
      out += "[" + t.lo.str() + ", " + t.hi.str() + "]";
    }
    return (out.empty() ? "∅" : out) + " (" + to_string(direction) + ")";
  }

  /// Symbolic check by term shape, then pointwise over the horizon.
  void validate() const {
    const int sign = direction == NetDirection::increasing ? 1 : -1;
    for (const auto& t : terms) {
      if (t.lo.trend() * sign > 0 || t.hi.trend() * sign < 0) {
        throw PreconditionError("net term [" + t.lo.str() + ", " + t.hi.str() + "] is not " + to_string(direction));
      }
      if (!t.lo.limit().is_finite() && t.lo.limit() != ExtRational::neg_inf()) {
        throw InputError("lower endpoint limit must be finite or -inf");
      }
      if (!t.hi.limit().is_finite() && t.hi.limit() != ExtRational::pos_inf()) {
        throw InputError("upper endpoint limit must be finite or +inf");
      }
    }
    auto prev = at(first_index);
    for (std::uint64_t n = first_index + 1; n <= first_index + n_check; ++n) {
      auto cur = at(n);
      const bool ok = direction == NetDirection::increasing ? sym_leq(prev, cur) : sym_leq(cur, prev);
      if (!ok) {
        throw PreconditionError("net is not " + to_string(direction) + " at n = " + std::to_string(n));
      }
      prev = std::move(cur);
    }
  }
};

/// Union over all n of the net's values, before closure (increasing nets).
inline SpanSet net_union(const ParamNet& net) {
  SpanSet out;
  for (const auto& t : net.terms) {
    out = out | SpanSet{Span{t.lo.limit(), t.lo.trend() == 0, t.hi.limit(), t.hi.trend() == 0}};
  }
  return out & SpanSet::reals();
}

/// Intersection over all n of the net's values (decreasing nets).
inline SymClosedSet net_intersection(const ParamNet& net) {
  SymClosedSet out;
  for (const auto& t : net.terms) {
    if (t.lo.limit() <= t.hi.limit()) out = out | SymClosedSet::interval(t.lo.limit(), t.hi.limit());
  }
  return out;
}

namespace detail {

inline void cross_check_bound(const ParamNet& net, const SymClosedSet& bound, bool upper) {
  for (std::uint64_t n = net.first_index; n <= net.first_index + net.n_check; ++n) {
    const auto v = net.at(n);
    if (upper ? !sym_leq(v, bound) : !sym_leq(bound, v)) {
      throw std::logic_error("computed " + std::string(upper ? "supremum " : "infimum ") + bound.str() +
                             " does not bound the net value " + v.str() + " at n = " + std::to_string(n));
    }
  }
}

}  // namespace detail

/// Supremum in the lattice of closed sets.
inline SymClosedSet net_sup(const ParamNet& net) {
  net.validate();
  auto out = net.direction == NetDirection::increasing ? SymClosedSet::closure_of(net_union(net)) : net.at(net.first_index);
  detail::cross_check_bound(net, out, true);
  return out;
}

/// Infimum in the lattice of closed sets.
inline SymClosedSet net_inf(const ParamNet& net) {
  net.validate();
  auto out = net.direction == NetDirection::decreasing ? net_intersection(net) : net.at(net.first_index);
  detail::cross_check_bound(net, out, false);
  return out;
}

/// O-limit of a monotone net: its supremum if increasing, infimum if decreasing.
inline SymClosedSet net_limit(const ParamNet& net) {
  return net.direction == NetDirection::increasing ? net_sup(net) : net_inf(net);
}

/// O-limit of n -> (x_n ∧ t) ∨ s for a monotone net x.
inline SymClosedSet mapped_limit(const ParamNet& net, const SymClosedSet& s, const SymClosedSet& t) {
  net.validate();
  SymClosedSet out = net.direction == NetDirection::increasing
                         ? SymClosedSet::closure_of(net_union(net) & t.spans()) | s
                         : (net_intersection(net) & t) | s;
  for (std::uint64_t n = net.first_index; n <= net.first_index + net.n_check; ++n) {
    const auto v = (net.at(n) & t) | s;
    const bool ok = net.direction == NetDirection::increasing ? sym_leq(v, out) : sym_leq(out, v);
    if (!ok) throw std::logic_error("mapped limit " + out.str() + " fails to bound " + v.str());
  }
  return out;
}

struct WitnessPair {
  SymClosedSet s;
  SymClosedSet t;
};

struct UoWitnessRow {
  WitnessPair pair;
  SymClosedSet mapped;
  SymClosedSet required;
  bool agrees = false;
};

struct UoRefuteReport {
  enum class Verdict { refuted, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  std::optional<std::size_t> failing_index;
  std::vector<UoWitnessRow> rows;

  std::string verdict_name() const { return verdict == Verdict::refuted ? "REFUTED" : "INCONCLUSIVE"; }
};

/// Tests the candidate against each witness pair (s, t) with s ⊆ t. A single
/// disagreeing pair refutes uO-convergence; agreement everywhere proves nothing.
inline UoRefuteReport uo_refute(const ParamNet& net, const SymClosedSet& candidate, const std::vector<WitnessPair>& witnesses) {
  UoRefuteReport out;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const auto& w = witnesses[i];
    if (!sym_leq(w.s, w.t)) {
      throw PreconditionError("witness pair " + std::to_string(i) + " has s = " + w.s.str() + " not below t = " + w.t.str());
    }
    UoWitnessRow row{w, mapped_limit(net, w.s, w.t), (candidate & w.t) | w.s};
    row.agrees = row.mapped == row.required;
    if (!row.agrees && !out.failing_index) {
      out.failing_index = i;
      out.verdict = UoRefuteReport::Verdict::refuted;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace ordlat::gallery
