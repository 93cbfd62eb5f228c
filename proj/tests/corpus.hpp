#pragma once

#include "ordlat/generators.hpp"

#include <string>
#include <vector>

namespace corpus {

struct Entry {
  std::string label;
  ordlat::FiniteLattice lattice;
};

/// Down-set lattices of seeded random posets with 1..7 elements.
inline std::vector<Entry> downset_lattices(std::size_t count = 200) {
  std::vector<Entry> out;
  const double probs[] = {0.25, 0.5, 0.75};
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % 7;
    const double p = probs[(i / 7) % 3];
    const std::uint64_t seed = 1000 + i;
    out.push_back({"downset(n=" + std::to_string(n) + ",p=" + std::to_string(p).substr(0, 4) + ",seed=" +
                       std::to_string(seed) + ")",
                   ordlat::downset_lattice(ordlat::random_poset(n, p, seed))});
  }
  return out;
}

/// Random sublattices of down-set lattices, plus completions of random posets
/// (the latter are usually not distributive).
inline std::vector<Entry> random_lattices(std::size_t count = 60) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = 5000 + i;
    if (i % 2 == 0) {
      ordlat::GenSpec g;
      g.kind = ordlat::GenKind::random_sublattice;
      g.size = 4 + i % 4;
      g.edge_probability = 0.35;
      g.target = 2 + i % 3;
      g.seed = seed;
      out.push_back({"sublattice(seed=" + std::to_string(seed) + ")", std::get<ordlat::FiniteLattice>(ordlat::generate(g))});
    } else {
      auto p = ordlat::random_poset(4 + i % 6, 0.3, seed);
      ordlat::DmOptions o;
      o.verify = false;
      out.push_back({"completion(seed=" + std::to_string(seed) + ")", ordlat::dm_completion(p, o).lattice()});
    }
  }
  return out;
}

}  // namespace corpus
