#pragma once

// O- and uO-limits of eventually periodic sequences on finite lattices.
//
// A finite lattice is complete, so a sequence O-converges to x exactly when
// its tail infima and tail suprema both settle at x (take M = tail meets and
// N = tail joins in the sandwich definition). Tail bounds of an eventually
// periodic sequence are the meet and join of its cycle, so liminf/limsup are
// table folds. `o_limit_oracle` checks the sandwich definition literally by
// enumerating directed and filtered sets and is used to validate the shortcut.
//
// On finite lattices O-convergence is eventual constancy, so order continuity
// of uO-convergence can never fail here; its failure is exhibited by the
// closed-set family in gallery/closed_sets.hpp.

#include "ordlat/lattice.hpp"

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace ordlat {

/// x_n = prefix[n] for n < |prefix|, else cycle[(n - |prefix|) mod |cycle|].
struct UPSeq {
  std::vector<ElementId> prefix;
  std::vector<ElementId> cycle;

  ElementId at(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    return cycle[(n - prefix.size()) % cycle.size()];
  }

  /// Every distinct position appears in [0, horizon()).
  std::size_t horizon() const { return prefix.size() + cycle.size(); }

  void validate(const FiniteLattice& l) const {
    if (cycle.empty()) throw InputError("sequence cycle must be nonempty");
    for (auto id : prefix) l.poset().check_id(id);
    for (auto id : cycle) l.poset().check_id(id);
  }

  static UPSeq constant(ElementId x) { return UPSeq{{}, {x}}; }

  friend bool operator==(const UPSeq&, const UPSeq&) = default;
};

inline ElementId liminf(const FiniteLattice& l, const UPSeq& s) {
  s.validate(l);
  ElementId out = l.top();
  for (auto x : s.cycle) out = l.meet(out, x);
  return out;
}

inline ElementId limsup(const FiniteLattice& l, const UPSeq& s) {
  s.validate(l);
  ElementId out = l.bottom();
  for (auto x : s.cycle) out = l.join(out, x);
  return out;
}

inline std::optional<ElementId> o_limit(const FiniteLattice& l, const UPSeq& s) {
  const auto lo = liminf(l, s);
  if (lo != limsup(l, s)) return std::nullopt;
  return lo;
}

/// The pointwise image of a sequence under an element map.
template <class Map>
UPSeq map_sequence(const UPSeq& s, Map f) {
  UPSeq out;
  out.prefix.reserve(s.prefix.size());
  out.cycle.reserve(s.cycle.size());
  for (auto x : s.prefix) out.prefix.push_back(f(x));
  for (auto x : s.cycle) out.cycle.push_back(f(x));
  return out;
}

/// Pointwise meet or join of two sequences (period = lcm of the periods).
inline UPSeq pointwise(const FiniteLattice& l, const UPSeq& a, const UPSeq& b, LatticeOp op) {
  a.validate(l);
  b.validate(l);
  const auto pre = std::max(a.prefix.size(), b.prefix.size());
  const auto period = std::lcm(a.cycle.size(), b.cycle.size());
  auto combine = [&](std::size_t k) {
    return op == LatticeOp::meet ? l.meet(a.at(k), b.at(k)) : l.join(a.at(k), b.at(k));
  };
  UPSeq out;
  for (std::size_t k = 0; k < pre; ++k) out.prefix.push_back(combine(k));
  for (std::size_t k = pre; k < pre + period; ++k) out.cycle.push_back(combine(k));
  return out;
}

inline constexpr std::size_t kOracleMaxElements = 8;

/// Literal sandwich check: is there a directed M and a filtered N with
/// sup M = inf N = x such that the sequence is eventually in [m, n] for every
/// (m, n) in M x N? Exponential in |L|; refuses lattices above 8 elements.
inline bool o_limit_oracle(const FiniteLattice& l, const UPSeq& s, ElementId x) {
  s.validate(l);
  l.poset().check_id(x);
  const auto n = l.size();
  if (n > kOracleMaxElements) {
    throw ResourceError("o_limit_oracle is limited to lattices with at most " + std::to_string(kOracleMaxElements) +
                        " elements (got " + std::to_string(n) + ")");
  }
  std::vector<ElementSet> directed, filtered;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet a(n);
    for (ElementId i = 0; i < n; ++i) {
      if (mask >> i & 1U) a.insert(i);
    }
    if (is_directed(l.poset(), a) && l.sup(a) == x) directed.push_back(a);
    if (is_filtered(l.poset(), a) && l.inf(a) == x) filtered.push_back(a);
  }
  auto eventually_within = [&](ElementId lo, ElementId hi) {
    for (std::size_t start = 0; start <= s.prefix.size(); ++start) {
      bool inside = true;
      for (std::size_t k = start; k < s.horizon() && inside; ++k) {
        inside = l.leq(lo, s.at(k)) && l.leq(s.at(k), hi);
      }
      if (inside) return true;
    }
    return false;
  };
  for (const auto& m_set : directed) {
    for (const auto& n_set : filtered) {
      bool all_pairs = true;
      m_set.for_each([&](ElementId m) {
        n_set.for_each([&](ElementId up) {
          if (all_pairs && !eventually_within(m, up)) all_pairs = false;
        });
      });
      if (all_pairs) return true;
    }
  }
  return false;
}

/// Which truncation pairs (s, t) the uO definition quantifies over. The
/// definition uses s <= t; `all` drops that restriction for experiments on
/// non-distributive lattices.
enum class PairDomain { ordered, all };

struct UoLimitResult {
  std::optional<ElementId> limit;
  std::optional<std::pair<ElementId, ElementId>> witness;  // failing (s, t)
};

/// First (s, t) for which the truncated sequence does not O-converge to the
/// truncated candidate, in lexicographic order.
inline std::optional<std::pair<ElementId, ElementId>> uo_failure(const FiniteLattice& l, const UPSeq& seq,
                                                                 ElementId x, PairDomain domain = PairDomain::ordered) {
  seq.validate(l);
  l.poset().check_id(x);
  const auto n = static_cast<ElementId>(l.size());
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      if (domain == PairDomain::ordered && !l.leq(s, t)) continue;
      auto mapped = map_sequence(seq, [&](ElementId y) { return apply_f(l, s, t, y); });
      if (o_limit(l, mapped) != apply_f(l, s, t, x)) return std::pair{s, t};
    }
  }
  return std::nullopt;
}

inline bool uo_converges_to(const FiniteLattice& l, const UPSeq& seq, ElementId x,
                            PairDomain domain = PairDomain::ordered) {
  return !uo_failure(l, seq, x, domain);
}

/// The (bottom, top) truncation is the identity, so a uO-limit must be the
/// O-limit; the candidate is then tested against every truncation pair.
inline UoLimitResult uo_limit(const FiniteLattice& l, const UPSeq& seq, PairDomain domain = PairDomain::ordered) {
  auto candidate = o_limit(l, seq);
  if (!candidate) return {std::nullopt, std::pair{l.bottom(), l.top()}};
  if (auto w = uo_failure(l, seq, *candidate, domain)) return {std::nullopt, w};
  return {candidate, std::nullopt};
}

enum class Monotonicity { increasing, decreasing };

struct MonotoneLimitReport {
  Monotonicity direction = Monotonicity::increasing;
  std::optional<ElementId> limit;  // the uO-limit, when it exists
  ElementId range_bound = 0;       // sup of the range (increasing) or inf (decreasing)
  bool holds = true;               // limit, if any, equals range_bound
};

/// For a monotone sequence, a uO-limit must be the supremum (increasing) or
/// infimum (decreasing) of its range.
inline MonotoneLimitReport check_monotone_limit(const FiniteLattice& l, const UPSeq& seq) {
  seq.validate(l);
  bool up = true, down = true;
  for (std::size_t k = 0; k < seq.horizon(); ++k) {
    up = up && l.leq(seq.at(k), seq.at(k + 1));
    down = down && l.leq(seq.at(k + 1), seq.at(k));
  }
  if (!up && !down) throw PreconditionError("sequence is neither increasing nor decreasing");
  MonotoneLimitReport r;
  r.direction = up ? Monotonicity::increasing : Monotonicity::decreasing;
  ElementSet range(l.size());
  for (std::size_t k = 0; k < seq.horizon(); ++k) range.insert(seq.at(k));
  r.range_bound = up ? l.sup(range) : l.inf(range);
  r.limit = uo_limit(l, seq).limit;
  r.holds = !r.limit || *r.limit == r.range_bound;
  return r;
}

}  // namespace ordlat
