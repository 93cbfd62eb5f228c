#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <optional>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ordlat {

using ElementId = std::uint32_t;

/// A finite set of element ids drawn from a fixed universe 0..n-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(ElementId id) const { return id < bits_.size() && bits_.test(id); }

  void insert(ElementId id) { bits_.set(id); }
  void erase(ElementId id) { bits_.reset(id); }

  bool subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
      f(static_cast<ElementId>(i));
    }
  }

  std::vector<ElementId> members() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for_each([&](ElementId i) { out.push_back(i); });
    return out;
  }

  std::optional<ElementId> first() const {
    auto i = bits_.find_first();
    if (i == boost::dynamic_bitset<>::npos) return std::nullopt;
    return static_cast<ElementId>(i);
  }

  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  const boost::dynamic_bitset<>& bits() const { return bits_; }

 private:
  boost::dynamic_bitset<> bits_;
};

/// Canonical ordering: by cardinality, then lexicographically by sorted members.
struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  }
};

/// All subsets of `base` encoded by a mask over its members (bit i = i-th member).
inline ElementSet subset_from_mask(const std::vector<ElementId>& base, std::size_t universe,
                                   std::uint64_t mask) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (mask >> i & 1U) s.insert(base[i]);
  }
  return s;
}

}  // namespace ordlat
