#pragma once

#include "ordlat/element_set.hpp"
#include "ordlat/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ordlat {

using OrderPair = std::pair<ElementId, ElementId>;

/// A finite partially ordered set with ids 0..n-1 and unique names.
///
/// The full order relation is stored as one bit row per element in each
/// direction, so `up(x)` is {y : x <= y} and `down(x)` is {y : y <= x}.
/// Construction takes either cover pairs or arbitrary leq pairs, closes them
/// reflexively and transitively, then rejects cycles.
class FinitePoset {
 public:
  FinitePoset() = default;

  static FinitePoset from_covers(std::vector<std::string> names, std::span<const OrderPair> covers) {
    return FinitePoset(std::move(names), covers);
  }
  static FinitePoset from_leq(std::vector<std::string> names, std::span<const OrderPair> leq) {
    return FinitePoset(std::move(names), leq);
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElementId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<ElementId> find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(ElementId a, ElementId b) const { return up_[a].contains(b); }
  bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }

  const ElementSet& up(ElementId a) const { return up_.at(a); }
  const ElementSet& down(ElementId a) const { return down_.at(a); }

  void check_id(ElementId id) const {
    if (id >= size()) {
      throw InputError("element id " + std::to_string(id) + " out of range (poset has " +
                       std::to_string(size()) + " elements)");
    }
  }
  void check_set(const ElementSet& s) const {
    if (s.universe() != size()) {
      throw InputError("element set over a universe of " + std::to_string(s.universe()) +
                       " does not belong to a poset of " + std::to_string(size()) + " elements");
    }
  }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }

  ElementSet make_set(std::span<const ElementId> ids) const {
    ElementSet s(size());
    for (auto id : ids) {
      check_id(id);
      s.insert(id);
    }
    return s;
  }
  ElementSet make_set(std::initializer_list<ElementId> ids) const {
    return make_set(std::span<const ElementId>(ids.begin(), ids.size()));
  }

  /// Hasse diagram edges (a, b) with a covered by b, sorted by id.
  std::vector<OrderPair> covers() const {
    std::vector<OrderPair> out;
    for (ElementId a = 0; a < size(); ++a) {
      for (ElementId b = 0; b < size(); ++b) {
        if (a != b && leq(a, b) && (up_[a] & down_[b]).size() == 2) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /// Length of the longest chain strictly below `id`.
  std::size_t rank(ElementId id) const { return rank_.at(id); }

  /// Deterministic listing order used by serializers: (rank, name).
  std::vector<ElementId> serialization_order() const {
    std::vector<ElementId> order(size());
    std::iota(order.begin(), order.end(), ElementId{0});
    std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
      return std::tie(rank_[a], names_[a]) < std::tie(rank_[b], names_[b]);
    });
    return order;
  }

  /// The subposet induced on `members`, with a map from new ids to ours.
  std::pair<FinitePoset, std::vector<ElementId>> induced(const ElementSet& members) const {
    check_set(members);
    auto ids = members.members();
    std::vector<std::string> names;
    names.reserve(ids.size());
    for (auto id : ids) names.push_back(names_[id]);
    std::vector<OrderPair> rel;
    for (ElementId i = 0; i < ids.size(); ++i) {
      for (ElementId j = 0; j < ids.size(); ++j) {
        if (leq(ids[i], ids[j])) rel.emplace_back(i, j);
      }
    }
    return {FinitePoset(std::move(names), rel), std::move(ids)};
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  FinitePoset(std::vector<std::string> names, std::span<const OrderPair> pairs) : names_(std::move(names)) {
    const auto n = names_.size();
    for (ElementId i = 0; i < n; ++i) {
      if (!by_name_.emplace(names_[i], i).second) {
        throw InputError("duplicate element name '" + names_[i] + "'");
      }
    }
    up_.assign(n, ElementSet(n));
    for (ElementId i = 0; i < n; ++i) up_[i].insert(i);
    for (auto [a, b] : pairs) {
      check_id(a);
      check_id(b);
      up_[a].insert(b);
    }
    // Warshall over bit rows.
    for (ElementId k = 0; k < n; ++k) {
      for (ElementId i = 0; i < n; ++i) {
        if (up_[i].contains(k)) up_[i] |= up_[k];
      }
    }
    down_.assign(n, ElementSet(n));
    for (ElementId a = 0; a < n; ++a) {
      up_[a].for_each([&](ElementId b) { down_[b].insert(a); });
    }
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = a + 1; b < n; ++b) {
        if (leq(a, b) && leq(b, a)) {
          throw InputError("order relation is not antisymmetric: '" + names_[a] + "' and '" + names_[b] +
                           "' lie on a cycle");
        }
      }
    }
    std::vector<ElementId> by_height(n);
    std::iota(by_height.begin(), by_height.end(), ElementId{0});
    std::sort(by_height.begin(), by_height.end(),
              [&](ElementId a, ElementId b) { return down_[a].size() < down_[b].size(); });
    rank_.assign(n, 0);
    for (auto b : by_height) {
      down_[b].for_each([&](ElementId a) {
        if (a != b) rank_[b] = std::max(rank_[b], rank_[a] + 1);
      });
    }
  }

  std::vector<std::string> names_;
  std::map<std::string, ElementId> by_name_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::size_t> rank_;
};

/// "{a,b}" using element names in id order.
inline std::string format_set(const FinitePoset& p, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ElementId x) {
    if (!first) out += ",";
    out += p.name(x);
    first = false;
  });
  return out + "}";
}

/// A^+ : elements above every member of A. The empty set yields all of P.
inline ElementSet upper_bounds(const FinitePoset& p, const ElementSet& a) {
  p.check_set(a);
  auto out = p.all();
  a.for_each([&](ElementId x) { out &= p.up(x); });
  return out;
}

/// A^- : elements below every member of A. The empty set yields all of P.
inline ElementSet lower_bounds(const FinitePoset& p, const ElementSet& a) {
  p.check_set(a);
  auto out = p.all();
  a.for_each([&](ElementId x) { out &= p.down(x); });
  return out;
}

// For finite sets pairwise bounds suffice by induction.
inline bool is_directed(const FinitePoset& p, const ElementSet& a) {
  p.check_set(a);
  if (a.empty()) return false;
  auto ids = a.members();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if ((p.up(ids[i]) & p.up(ids[j]) & a).empty()) return false;
    }
  }
  return true;
}

inline bool is_filtered(const FinitePoset& p, const ElementSet& a) {
  p.check_set(a);
  if (a.empty()) return false;
  auto ids = a.members();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if ((p.down(ids[i]) & p.down(ids[j]) & a).empty()) return false;
    }
  }
  return true;
}

/// [s, t] = {x : s <= x <= t}; requires s <= t.
inline ElementSet interval(const FinitePoset& p, ElementId s, ElementId t) {
  p.check_id(s);
  p.check_id(t);
  if (!p.leq(s, t)) {
    throw PreconditionError("interval endpoints out of order: '" + p.name(s) + "' is not below '" + p.name(t) + "'");
  }
  return p.up(s) & p.down(t);
}

/// The unique maximum of a set, if it has one.
inline std::optional<ElementId> maximum_of(const FinitePoset& p, const ElementSet& a) {
  std::optional<ElementId> out;
  a.for_each([&](ElementId x) {
    if (!out && a.subset_of(p.down(x))) out = x;
  });
  return out;
}

inline std::optional<ElementId> minimum_of(const FinitePoset& p, const ElementSet& a) {
  std::optional<ElementId> out;
  a.for_each([&](ElementId x) {
    if (!out && a.subset_of(p.up(x))) out = x;
  });
  return out;
}

/// Least upper bound in P, if it exists.
inline std::optional<ElementId> supremum(const FinitePoset& p, const ElementSet& a) {
  return minimum_of(p, upper_bounds(p, a));
}

inline std::optional<ElementId> infimum(const FinitePoset& p, const ElementSet& a) {
  return maximum_of(p, lower_bounds(p, a));
}

}  // namespace ordlat
