#pragma once

// Brute-force reference implementations over a plain order matrix and
// vector<bool> sets. Nothing here calls into the library beyond reading `leq`.

#include "ordlat/lattice.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Set = std::vector<bool>;

struct Order {
  int n = 0;
  std::vector<std::vector<bool>> le;

  bool leq(int a, int b) const { return le[a][b]; }
};

inline Order from(const ordlat::FinitePoset& p) {
  Order o;
  o.n = static_cast<int>(p.size());
  o.le.assign(o.n, std::vector<bool>(o.n));
  for (int a = 0; a < o.n; ++a) {
    for (int b = 0; b < o.n; ++b) o.le[a][b] = p.leq(a, b);
  }
  return o;
}

inline Set from_mask(std::uint64_t m, int n) {
  Set s(n);
  for (int i = 0; i < n && i < 64; ++i) s[i] = (m >> i) & 1U;
  return s;
}

inline std::vector<int> members(const Set& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i]) out.push_back(i);
  }
  return out;
}

inline Set uppers(const Order& o, const Set& a) {
  Set out(o.n);
  for (int x = 0; x < o.n; ++x) {
    bool ok = true;
    for (int i = 0; i < o.n; ++i) {
      if (a[i] && !o.leq(i, x)) ok = false;
    }
    out[x] = ok;
  }
  return out;
}

inline Set lowers(const Order& o, const Set& a) {
  Set out(o.n);
  for (int x = 0; x < o.n; ++x) {
    bool ok = true;
    for (int i = 0; i < o.n; ++i) {
      if (a[i] && !o.leq(x, i)) ok = false;
    }
    out[x] = ok;
  }
  return out;
}

inline Set intersect(Set a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
  return a;
}

inline std::optional<int> least(const Order& o, const Set& a) {
  for (int x = 0; x < o.n; ++x) {
    if (!a[x]) continue;
    bool ok = true;
    for (int y = 0; y < o.n && ok; ++y) ok = !a[y] || o.leq(x, y);
    if (ok) return x;
  }
  return std::nullopt;
}

inline std::optional<int> greatest(const Order& o, const Set& a) {
  for (int x = 0; x < o.n; ++x) {
    if (!a[x]) continue;
    bool ok = true;
    for (int y = 0; y < o.n && ok; ++y) ok = !a[y] || o.leq(y, x);
    if (ok) return x;
  }
  return std::nullopt;
}

inline Set pair(const Order& o, int a, int b) {
  Set s(o.n);
  s[a] = s[b] = true;
  return s;
}

inline int join(const Order& o, int a, int b) {
  Set ub(o.n);
  for (int x = 0; x < o.n; ++x) ub[x] = o.leq(a, x) && o.leq(b, x);
  return *least(o, ub);
}

inline int meet(const Order& o, int a, int b) {
  Set lb(o.n);
  for (int x = 0; x < o.n; ++x) lb[x] = o.leq(x, a) && o.leq(x, b);
  return *greatest(o, lb);
}

inline bool is_lattice(const Order& o) {
  if (o.n == 0) return false;
  for (int a = 0; a < o.n; ++a) {
    for (int b = 0; b < o.n; ++b) {
      if (!least(o, uppers(o, pair(o, a, b))) || !greatest(o, lowers(o, pair(o, a, b)))) return false;
    }
  }
  return true;
}

inline bool distributive(const Order& o) {
  std::vector<std::vector<int>> j(o.n, std::vector<int>(o.n)), m(o.n, std::vector<int>(o.n));
  for (int a = 0; a < o.n; ++a) {
    for (int b = 0; b < o.n; ++b) {
      j[a][b] = join(o, a, b);
      m[a][b] = meet(o, a, b);
    }
  }
  for (int a = 0; a < o.n; ++a) {
    for (int b = 0; b < o.n; ++b) {
      for (int c = 0; c < o.n; ++c) {
        if (m[a][j[b][c]] != j[m[a][b]][m[a][c]]) return false;
      }
    }
  }
  return true;
}

/// Every A^{+-}; small orders only.
inline std::set<Set> cuts(const Order& o) {
  std::set<Set> out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << o.n); ++a) out.insert(lowers(o, uppers(o, from_mask(a, o.n))));
  return out;
}

/// Subsets of y, optionally including the empty one; y must be small.
template <class F>
void for_subsets(const Set& y, bool with_empty, F f) {
  const auto ids = members(y);
  for (std::uint64_t m = with_empty ? 0 : 1; m < (std::uint64_t{1} << ids.size()); ++m) {
    Set a(y.size());
    for (std::size_t k = 0; k < ids.size(); ++k) a[ids[k]] = (m >> k) & 1U;
    f(a);
  }
}

/// Property (A) when lower is true, (B) otherwise.
inline bool bound_property(const Order& o, const Set& y, bool with_empty, bool lower) {
  bool ok = true;
  for_subsets(y, with_empty, [&](const Set& a) {
    const Set b = lower ? lowers(o, a) : uppers(o, a);
    const auto inside = members(intersect(b, y));
    for (int x : members(b)) {
      bool found = false;
      for (int z : inside) {
        if (lower ? o.leq(x, z) : o.leq(z, x)) found = true;
      }
      if (!found) ok = false;
    }
  });
  return ok;
}

inline bool regular(const Order& o, const Set& y, bool with_empty) {
  bool ok = true;
  for_subsets(y, with_empty, [&](const Set& a) {
    auto sy = least(o, intersect(uppers(o, a), y));
    auto iy = greatest(o, intersect(lowers(o, a), y));
    if (sy && sy != least(o, uppers(o, a))) ok = false;
    if (iy && iy != greatest(o, lowers(o, a))) ok = false;
  });
  return ok;
}

inline bool sublattice(const Order& o, const Set& y) {
  for (int a : members(y)) {
    for (int b : members(y)) {
      if (!y[join(o, a, b)] || !y[meet(o, a, b)]) return false;
    }
  }
  return true;
}

/// In a finite lattice a sequence order-converges exactly when it is
/// eventually constant, so the limit of prefix+cycle is the cycle value.
inline std::optional<int> eventual_constant(const std::vector<ordlat::ElementId>& cycle) {
  for (auto c : cycle) {
    if (c != cycle.front()) return std::nullopt;
  }
  return static_cast<int>(cycle.front());
}

inline ordlat::ElementSet to_element_set(const Set& s) {
  ordlat::ElementSet out(s.size());
  for (int i : members(s)) out.insert(static_cast<ordlat::ElementId>(i));
  return out;
}

inline Set to_bits(const ordlat::ElementSet& s) {
  Set out(s.universe());
  s.for_each([&](ordlat::ElementId i) { out[i] = true; });
  return out;
}

/// All lattices on n labelled elements 0..n-1 with 0 bottom and n-1 top and
/// a < b whenever a is strictly below b, up to isomorphism.
inline std::vector<Order> lattices_up_to_iso(int n) {
  std::vector<Order> found;
  std::set<std::vector<bool>> seen;
  if (n == 1) {
    Order o;
    o.n = 1;
    o.le = {{true}};
    return {o};
  }
  std::vector<std::pair<int, int>> slots;
  for (int a = 1; a < n - 1; ++a) {
    for (int b = a + 1; b < n - 1; ++b) slots.emplace_back(a, b);
  }
  for (std::uint32_t bits = 0; bits < (1U << slots.size()); ++bits) {
    Order o;
    o.n = n;
    o.le.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
      o.le[a][a] = true;
      o.le[0][a] = true;
      o.le[a][n - 1] = true;
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (bits >> k & 1U) o.le[slots[k].first][slots[k].second] = true;
    }
    bool transitive = true;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (o.le[a][b] && o.le[b][c] && !o.le[a][c]) transitive = false;
        }
      }
    }
    if (!transitive || !is_lattice(o)) continue;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<bool> canon;
    do {
      std::vector<bool> code;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) code.push_back(o.le[perm[a]][perm[b]]);
      }
      if (canon.empty() || code < canon) canon = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(canon).second) found.push_back(o);
  }
  return found;
}

inline ordlat::FiniteLattice to_lattice(const Order& o) {
  std::vector<std::string> names;
  std::vector<ordlat::OrderPair> rel;
  for (int a = 0; a < o.n; ++a) {
    names.push_back("e" + std::to_string(a));
    for (int b = 0; b < o.n; ++b) {
      if (o.le[a][b]) rel.emplace_back(a, b);
    }
  }
  return ordlat::FiniteLattice(ordlat::FinitePoset::from_leq(std::move(names), rel));
}

}  // namespace oracle
