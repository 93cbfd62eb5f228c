#pragma once

// Structural classification of subsets of a finite lattice, Properties (A)
// and (B), regularity, and first O-/uO-adherences.
//
// Property (A) of Y: for every A ⊆ Y and every lower bound x of A there is a
// lower bound of A inside Y above x. Property (B) is the dual. Whether A = ∅
// takes part is a mode of every check (the literal reading includes it) and
// is echoed in every result.

#include "ordlat/convergence.hpp"
#include "ordlat/cut_dm.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ordlat {

enum class EmptySubsetMode { include, exclude };

inline const char* to_string(EmptySubsetMode m) { return m == EmptySubsetMode::include ? "include-empty" : "nonempty-only"; }

struct SubsetDescriptor {
  ElementSet members;
  bool sublattice = false;
  bool ideal = false;
  bool down_set = false;
  bool convex = false;
};

inline SubsetDescriptor classify(const FiniteLattice& l, const ElementSet& s) {
  const auto& p = l.poset();
  p.check_set(s);
  SubsetDescriptor d;
  d.members = s;
  d.sublattice = l.sublattice_closure(s) == s;
  d.down_set = true;
  s.for_each([&](ElementId x) { d.down_set = d.down_set && p.down(x).subset_of(s); });
  bool join_closed = true;
  d.convex = true;
  s.for_each([&](ElementId x) {
    s.for_each([&](ElementId y) {
      join_closed = join_closed && s.contains(l.join(x, y));
      if (p.leq(x, y)) d.convex = d.convex && (p.up(x) & p.down(y)).subset_of(s);
    });
  });
  d.ideal = d.down_set && join_closed;
  return d;
}

struct SubsetCheckOptions {
  EmptySubsetMode empty_mode = EmptySubsetMode::include;
  std::size_t exhaustive_limit = 12;  // |Y| up to this: every subset of Y
  std::size_t samples = 10000;        // otherwise: relative cuts plus this many random subsets
  std::uint64_t seed = 0;
};

struct PropertyResult {
  bool holds = true;
  CheckMode mode = CheckMode::exhaustive;
  EmptySubsetMode empty_mode = EmptySubsetMode::include;
  std::size_t subsets_checked = 0;
  std::optional<ElementSet> witness_subset;
  std::optional<ElementId> witness_x;
};

namespace detail {

/// Visits subsets A ⊆ Y per the options, in increasing mask order over the
/// sorted members of Y, until `visit` returns false.
template <class Visit>
CheckMode sweep_subsets_of(const FiniteLattice& l, const ElementSet& y, const SubsetCheckOptions& opt, Visit visit) {
  const auto& p = l.poset();
  const auto base = y.members();
  const bool with_empty = opt.empty_mode == EmptySubsetMode::include;
  if (base.size() <= opt.exhaustive_limit && base.size() < 63) {
    for (std::uint64_t mask = with_empty ? 0 : 1; mask < (std::uint64_t{1} << base.size()); ++mask) {
      if (!visit(subset_from_mask(base, p.size(), mask))) break;
    }
    return CheckMode::exhaustive;
  }
  if (with_empty && !visit(p.empty_set())) return CheckMode::sampled;
  auto [sub, to_parent] = p.induced(y);
  DmOptions dm_opt;
  dm_opt.verify = false;
  dm_opt.max_elements = sub.size();
  std::vector<ElementSet> relative_cuts;
  try {
    relative_cuts = dm_completion(sub, dm_opt).cuts();
  } catch (const ResourceError&) {
    // Too many relative cuts to list; the random subsets below still run.
  }
  for (const auto& c : relative_cuts) {
    if (c.empty()) continue;
    ElementSet a(p.size());
    c.for_each([&](ElementId i) { a.insert(to_parent[i]); });
    if (!visit(a)) return CheckMode::sampled;
  }
  std::mt19937_64 rng(opt.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    ElementSet a(p.size());
    for (auto id : base) {
      if (coin(rng)) a.insert(id);
    }
    if (a.empty()) continue;
    if (!visit(a)) break;
  }
  return CheckMode::sampled;
}

inline PropertyResult check_bound_property(const FiniteLattice& l, const ElementSet& y, const SubsetCheckOptions& opt,
                                           bool lower) {
  const auto& p = l.poset();
  p.check_set(y);
  PropertyResult r;
  r.empty_mode = opt.empty_mode;
  r.mode = sweep_subsets_of(l, y, opt, [&](const ElementSet& a) {
    ++r.subsets_checked;
    const auto bounds = lower ? lower_bounds(p, a) : upper_bounds(p, a);
    const auto inside = bounds & y;
    std::optional<ElementId> bad;
    bounds.for_each([&](ElementId x) {
      if (!bad && (inside & (lower ? p.up(x) : p.down(x))).empty()) bad = x;
    });
    if (bad) {
      r.holds = false;
      r.witness_subset = a;
      r.witness_x = bad;
      return false;
    }
    return true;
  });
  return r;
}

}  // namespace detail

inline PropertyResult has_property_A(const FiniteLattice& l, const ElementSet& y, const SubsetCheckOptions& opt = {}) {
  return detail::check_bound_property(l, y, opt, /*lower=*/true);
}

inline PropertyResult has_property_B(const FiniteLattice& l, const ElementSet& y, const SubsetCheckOptions& opt = {}) {
  return detail::check_bound_property(l, y, opt, /*lower=*/false);
}

struct RegularityResult {
  bool holds = true;
  CheckMode mode = CheckMode::exhaustive;
  EmptySubsetMode empty_mode = EmptySubsetMode::include;
  std::size_t subsets_checked = 0;
  std::optional<ElementSet> witness_subset;
  std::optional<LatticeOp> witness_op;  // join: supremum disagrees, meet: infimum disagrees
};

inline void require_sublattice(const FiniteLattice& l, const ElementSet& y) {
  l.poset().check_set(y);
  if (l.sublattice_closure(y) != y) {
    throw PreconditionError("subset " + format_set(l.poset(), y) + " is not a sublattice");
  }
}

/// Every A ⊆ Y that has a supremum (infimum) in Y has the same one in L.
inline RegularityResult is_regular(const FiniteLattice& l, const ElementSet& y, const SubsetCheckOptions& opt = {}) {
  require_sublattice(l, y);
  const auto& p = l.poset();
  RegularityResult r;
  r.empty_mode = opt.empty_mode;
  r.mode = detail::sweep_subsets_of(l, y, opt, [&](const ElementSet& a) {
    ++r.subsets_checked;
    const auto sup_y = minimum_of(p, upper_bounds(p, a) & y);
    const auto inf_y = maximum_of(p, lower_bounds(p, a) & y);
    std::optional<LatticeOp> bad;
    if (sup_y && *sup_y != l.sup(a)) bad = LatticeOp::join;
    else if (inf_y && *inf_y != l.inf(a)) bad = LatticeOp::meet;
    if (bad) {
      r.holds = false;
      r.witness_subset = a;
      r.witness_op = bad;
      return false;
    }
    return true;
  });
  return r;
}

/// Suprema of nonempty subsets and infima of nonempty subsets stay in Y.
inline bool is_sup_inf_closed(const FiniteLattice& l, const ElementSet& y, const SubsetCheckOptions& opt = {}) {
  SubsetCheckOptions o = opt;
  o.empty_mode = EmptySubsetMode::exclude;
  bool closed = true;
  detail::sweep_subsets_of(l, y, o, [&](const ElementSet& a) {
    closed = y.contains(l.sup(a)) && y.contains(l.inf(a));
    return closed;
  });
  return closed;
}

enum class Convergence { order, unbounded_order };

namespace detail {

/// The limit of a sequence depends only on the set of its cycle values, so
/// cycles listing every nonempty subset of X cover all eventually periodic
/// sequences in X. Larger X fall back to cycles of length at most two.
inline ElementSet first_adherence(const FiniteLattice& l, const ElementSet& x, Convergence kind) {
  l.poset().check_set(x);
  ElementSet out(l.size());
  const auto base = x.members();
  auto record = [&](const UPSeq& s) {
    auto lim = kind == Convergence::order ? o_limit(l, s) : uo_limit(l, s).limit;
    if (lim) out.insert(*lim);
  };
  if (base.size() <= 12) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << base.size()); ++mask) {
      UPSeq s;
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (mask >> i & 1U) s.cycle.push_back(base[i]);
      }
      record(s);
    }
  } else {
    for (auto a : base) {
      for (auto b : base) record(UPSeq{{}, {a, b}});
    }
  }
  return out;
}

}  // namespace detail

/// O-limits of eventually periodic sequences valued in X.
inline ElementSet first_O_adherence(const FiniteLattice& l, const ElementSet& x) {
  return detail::first_adherence(l, x, Convergence::order);
}

/// uO-limits of eventually periodic sequences valued in X.
inline ElementSet first_uO_adherence(const FiniteLattice& l, const ElementSet& x) {
  return detail::first_adherence(l, x, Convergence::unbounded_order);
}

/// Anything that can compute a first adherence of its own subset type.
template <class B>
concept AdherenceBackend = requires(const B& b, const typename B::Set& s) {
  { b.first_adherence(s) } -> std::convertible_to<typename B::Set>;
  { s == s } -> std::convertible_to<bool>;
};

template <class Set>
struct AdherenceTrace {
  std::vector<Set> stages;  // stages[k] is the k-th adherence; stages[0] = X
  bool stabilized = false;
  std::size_t stabilized_at = 0;  // least k with stages[k] == stages[k + 1]
};

/// Iterates first adherence until a fixpoint or `max_iter` steps. Transfinite
/// stages are out of reach; a trace that does not stabilize says so.
template <AdherenceBackend Backend>
AdherenceTrace<typename Backend::Set> iterate_adherence(const Backend& backend, const typename Backend::Set& x,
                                                        std::size_t max_iter) {
  AdherenceTrace<typename Backend::Set> trace;
  trace.stages.push_back(x);
  for (std::size_t k = 0; k < max_iter; ++k) {
    auto next = backend.first_adherence(trace.stages.back());
    const bool same = next == trace.stages.back();
    trace.stages.push_back(std::move(next));
    if (same) {
      trace.stabilized = true;
      trace.stabilized_at = k;
      break;
    }
  }
  return trace;
}

struct FiniteAdherence {
  using Set = ElementSet;
  const FiniteLattice* lattice = nullptr;
  Convergence kind = Convergence::order;

  Set first_adherence(const Set& x) const { return detail::first_adherence(*lattice, x, kind); }
};

}  // namespace ordlat
