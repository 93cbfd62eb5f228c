#pragma once

// Seeded corpus generation. Same spec, same output within one build; the
// standard library's distributions are not portable across implementations.

#include "ordlat/subobject.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace ordlat {

enum class GenKind { random_poset, downset_lattice, chain, boolean, m3, n5, grid, random_sublattice };

struct GenSpec {
  GenKind kind = GenKind::chain;
  std::size_t size = 3;           // elements (chain, random poset, base poset), atoms (boolean), rows (grid)
  std::size_t size2 = 1;          // grid columns
  double edge_probability = 0.3;  // random poset / base poset
  std::size_t target = 3;         // random sublattice: number of sampled generators
  std::uint64_t seed = 0;
};

inline const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::random_poset: return "random-poset";
    case GenKind::downset_lattice: return "downset-lattice";
    case GenKind::chain: return "chain";
    case GenKind::boolean: return "boolean";
    case GenKind::m3: return "M3";
    case GenKind::n5: return "N5";
    case GenKind::grid: return "grid";
    case GenKind::random_sublattice: return "random-sublattice";
  }
  return "?";
}

inline std::optional<GenKind> parse_gen_kind(const std::string& s) {
  for (auto k : {GenKind::random_poset, GenKind::downset_lattice, GenKind::chain, GenKind::boolean, GenKind::m3,
                 GenKind::n5, GenKind::grid, GenKind::random_sublattice}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

namespace detail {
inline void require_range(const char* what, std::size_t v, std::size_t lo, std::size_t hi) {
  if (v < lo || v > hi) {
    throw InputError(std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "], got " + std::to_string(v));
  }
}
}  // namespace detail

/// Strict upper-triangular relation sampled with probability p, then closed.
inline FinitePoset random_poset(std::size_t n, double p, std::uint64_t seed) {
  detail::require_range("random poset size", n, 1, 64);
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<OrderPair> rel;
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i + 1; j < n; ++j) {
      if (edge(rng)) rel.emplace_back(i, j);
    }
  }
  return FinitePoset::from_leq(std::move(names), rel);
}

/// The distributive lattice of down-sets of P, ordered by inclusion.
inline FiniteLattice downset_lattice(const FinitePoset& base) {
  detail::require_range("base poset size for a down-set lattice", base.size(), 0, 10);
  const auto n = base.size();
  std::vector<ElementSet> downsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet s(n);
    for (ElementId i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.insert(i);
    }
    bool closed = true;
    s.for_each([&](ElementId x) { closed = closed && base.down(x).subset_of(s); });
    if (closed) downsets.push_back(std::move(s));
  }
  std::vector<std::string> names;
  for (const auto& d : downsets) names.push_back(format_set(base, d));
  std::vector<OrderPair> rel;
  for (ElementId i = 0; i < downsets.size(); ++i) {
    for (ElementId j = 0; j < downsets.size(); ++j) {
      if (i != j && downsets[i].subset_of(downsets[j])) rel.emplace_back(i, j);
    }
  }
  return FiniteLattice(FinitePoset::from_leq(std::move(names), rel));
}

inline FiniteLattice chain_lattice(std::size_t n) {
  detail::require_range("chain length", n, 1, 256);
  std::vector<std::string> names;
  std::vector<OrderPair> covers;
  for (ElementId i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i + 1 < n) covers.emplace_back(i, i + 1);
  }
  return FiniteLattice(FinitePoset::from_covers(std::move(names), covers));
}

inline FinitePoset antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return FinitePoset::from_covers(std::move(names), {});
}

inline FiniteLattice boolean_lattice(std::size_t atoms) {
  detail::require_range("boolean lattice rank", atoms, 0, 8);
  return downset_lattice(antichain(atoms));
}

/// bot < a, b, c < top
inline FiniteLattice m3_lattice() {
  const std::vector<OrderPair> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FiniteLattice(FinitePoset::from_covers({"bot", "a", "b", "c", "top"}, covers));
}

/// bot < a < b < top and bot < c < top
inline FiniteLattice n5_lattice() {
  const std::vector<OrderPair> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return FiniteLattice(FinitePoset::from_covers({"bot", "a", "b", "c", "top"}, covers));
}

/// Product of a rows-chain and a cols-chain.
inline FiniteLattice grid_lattice(std::size_t rows, std::size_t cols) {
  detail::require_range("grid rows", rows, 1, 16);
  detail::require_range("grid columns", cols, 1, 16);
  std::vector<std::string> names;
  std::vector<OrderPair> covers;
  auto id = [&](std::size_t i, std::size_t j) { return static_cast<ElementId>(i * cols + j); };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (i + 1 < rows) covers.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < cols) covers.emplace_back(id(i, j), id(i, j + 1));
    }
  }
  return FiniteLattice(FinitePoset::from_covers(std::move(names), covers));
}

/// Closes `target_size` distinct random elements under meet and join.
inline SubsetDescriptor random_sublattice(const FiniteLattice& l, std::uint64_t seed, std::size_t target_size) {
  std::mt19937_64 rng(seed);
  std::vector<ElementId> ids(l.size());
  std::iota(ids.begin(), ids.end(), ElementId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  ElementSet s(l.size());
  for (std::size_t i = 0; i < std::min(target_size, ids.size()); ++i) s.insert(ids[i]);
  return classify(l, l.sublattice_closure(s));
}

/// The lattice induced on a sublattice of `l`.
inline FiniteLattice induced_lattice(const FiniteLattice& l, const ElementSet& sublattice) {
  require_sublattice(l, sublattice);
  return FiniteLattice(l.poset().induced(sublattice).first);
}

using Generated = std::variant<FinitePoset, FiniteLattice>;

inline Generated generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::random_poset:
      return random_poset(spec.size, spec.edge_probability, spec.seed);
    case GenKind::downset_lattice:
      return downset_lattice(random_poset(spec.size, spec.edge_probability, spec.seed));
    case GenKind::chain:
      return chain_lattice(spec.size);
    case GenKind::boolean:
      return boolean_lattice(spec.size);
    case GenKind::m3:
      return m3_lattice();
    case GenKind::n5:
      return n5_lattice();
    case GenKind::grid:
      return grid_lattice(spec.size, spec.size2);
    case GenKind::random_sublattice: {
      auto base = downset_lattice(random_poset(spec.size, spec.edge_probability, spec.seed));
      detail::require_range("sublattice generator count", spec.target, 1, base.size());
      return induced_lattice(base, random_sublattice(base, spec.seed ^ 0x9e3779b97f4a7c15ULL, spec.target).members);
    }
  }
  throw InputError("unknown generator kind");
}

}  // namespace ordlat
