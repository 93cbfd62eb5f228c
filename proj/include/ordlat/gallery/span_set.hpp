#pragma once

// Finite unions of intervals of the extended rational line with open or
// closed endpoints, kept in a unique canonical form.

#include "ordlat/gallery/ext_rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace ordlat::gallery {

struct Span {
  ExtRational lo;
  bool lo_closed = true;
  ExtRational hi;
  bool hi_closed = true;

  static Span closed(ExtRational lo, ExtRational hi) { return {std::move(lo), true, std::move(hi), true}; }
  static Span point(const ExtRational& v) { return {v, true, v, true}; }

  bool empty() const { return hi < lo || (lo == hi && !(lo_closed && hi_closed)); }

  bool contains(const ExtRational& x) const {
    const bool above = lo < x || (lo == x && lo_closed);
    const bool below = x < hi || (x == hi && hi_closed);
    return above && below;
  }

  friend bool operator==(const Span&, const Span&) = default;
};

/// Value of a bound together with whether the set attains it.
struct Extremum {
  ExtRational value;
  bool attained = false;
  friend bool operator==(const Extremum&, const Extremum&) = default;
};

class SpanSet {
 public:
  SpanSet() = default;
  SpanSet(std::initializer_list<Span> spans) : SpanSet(std::vector<Span>(spans)) {}
  explicit SpanSet(std::vector<Span> spans) : spans_(std::move(spans)) { normalize(); }

  /// The whole extended line [-inf, inf].
  static SpanSet everything() { return SpanSet{Span::closed(ExtRational::neg_inf(), ExtRational::pos_inf())}; }
  /// The real line (-inf, inf).
  static SpanSet reals() { return SpanSet{Span{ExtRational::neg_inf(), false, ExtRational::pos_inf(), false}}; }

  const std::vector<Span>& spans() const { return spans_; }
  bool empty() const { return spans_.empty(); }

  bool contains(const ExtRational& x) const {
    return std::any_of(spans_.begin(), spans_.end(), [&](const Span& s) { return s.contains(x); });
  }

  friend SpanSet operator|(const SpanSet& a, const SpanSet& b) {
    auto all = a.spans_;
    all.insert(all.end(), b.spans_.begin(), b.spans_.end());
    return SpanSet(std::move(all));
  }

  friend SpanSet operator&(const SpanSet& a, const SpanSet& b) {
    std::vector<Span> out;
    for (const auto& x : a.spans_) {
      for (const auto& y : b.spans_) {
        Span s;
        if (x.lo < y.lo || (x.lo == y.lo && !x.lo_closed)) {
          s.lo = y.lo;
          s.lo_closed = y.lo_closed && !(x.lo == y.lo && !x.lo_closed);
        } else {
          s.lo = x.lo;
          s.lo_closed = x.lo_closed && !(x.lo == y.lo && !y.lo_closed);
        }
        if (y.hi < x.hi || (x.hi == y.hi && !y.hi_closed)) {
          s.hi = y.hi;
          s.hi_closed = y.hi_closed;
        } else {
          s.hi = x.hi;
          s.hi_closed = x.hi_closed && !(x.hi == y.hi && !y.hi_closed);
        }
        if (!s.empty()) out.push_back(s);
      }
    }
    return SpanSet(std::move(out));
  }

  bool subset_of(const SpanSet& other) const { return (*this & other) == *this; }

  /// Topological closure in the extended line: every endpoint becomes closed.
  SpanSet closure() const {
    auto out = spans_;
    for (auto& s : out) s.lo_closed = s.hi_closed = true;
    return SpanSet(std::move(out));
  }

  /// Closure relative to the real line: finite endpoints closed, ±inf excluded.
  SpanSet real_closure() const { return closure() & reals(); }

  std::optional<Extremum> sup() const {
    if (spans_.empty()) return std::nullopt;
    return Extremum{spans_.back().hi, spans_.back().hi_closed};
  }
  std::optional<Extremum> inf() const {
    if (spans_.empty()) return std::nullopt;
    return Extremum{spans_.front().lo, spans_.front().lo_closed};
  }

  friend bool operator==(const SpanSet&, const SpanSet&) = default;

  std::string str() const {
    if (spans_.empty()) return "∅";
    std::string out;
    for (const auto& s : spans_) {
      if (!out.empty()) out += " ∪ ";
      if (s.lo == s.hi) {
        out += "{" + s.lo.str() + "}";
      } else {
        out += (s.lo_closed ? "[" : "(") + s.lo.str() + "," + s.hi.str() + (s.hi_closed ? "]" : ")");
      }
    }
    return out;
  }

 private:
  void normalize() {
    std::erase_if(spans_, [](const Span& s) { return s.empty(); });
    std::sort(spans_.begin(), spans_.end(), [](const Span& a, const Span& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.lo_closed && !b.lo_closed;
    });
    std::vector<Span> merged;
    for (const auto& s : spans_) {
      if (!merged.empty()) {
        auto& last = merged.back();
        const bool connected = s.lo < last.hi || (s.lo == last.hi && (last.hi_closed || s.lo_closed));
        if (connected) {
          if (last.hi < s.hi) {
            last.hi = s.hi;
            last.hi_closed = s.hi_closed;
          } else if (last.hi == s.hi) {
            last.hi_closed = last.hi_closed || s.hi_closed;
          }
          continue;
        }
      }
      merged.push_back(s);
    }
    spans_ = std::move(merged);
  }

  std::vector<Span> spans_;
};

/// [v, +inf] when `closed`, else (v, +inf].
inline SpanSet at_least(const ExtRational& v, bool closed = true) {
  return SpanSet{Span{v, closed, ExtRational::pos_inf(), true}};
}

/// [-inf, v] when `closed`, else [-inf, v).
inline SpanSet at_most(const ExtRational& v, bool closed = true) {
  return SpanSet{Span{ExtRational::neg_inf(), true, v, closed}};
}

}  // namespace ordlat::gallery
