#pragma once

#include "ordlat/poset.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ordlat {

/// A finite lattice: a poset together with its derived meet and join tables.
///
/// Tables are computed from the order on construction; a poset in which some
/// pair lacks a greatest lower or least upper bound is rejected.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  explicit FiniteLattice(FinitePoset p) : poset_(std::move(p)) {
    const auto n = poset_.size();
    if (n == 0) throw InputError("a lattice must have at least one element");
    for (ElementId a = 0; a < n; ++a) {
      down_size_.push_back(poset_.down(a).size());
      up_size_.push_back(poset_.up(a).size());
    }
    meet_.assign(n * n, 0);
    join_.assign(n * n, 0);
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = a; b < n; ++b) {
        auto m = greatest_of(poset_.down(a) & poset_.down(b), /*downward=*/true);
        if (!m) throw InputError("not a lattice: '" + poset_.name(a) + "' and '" + poset_.name(b) + "' have no meet");
        auto j = greatest_of(poset_.up(a) & poset_.up(b), /*downward=*/false);
        if (!j) throw InputError("not a lattice: '" + poset_.name(a) + "' and '" + poset_.name(b) + "' have no join");
        meet_[a * n + b] = meet_[b * n + a] = *m;
        join_[a * n + b] = join_[b * n + a] = *j;
      }
    }
    bottom_ = 0;
    for (ElementId a = 0; a < n; ++a) bottom_ = meet(bottom_, a);
    top_ = 0;
    for (ElementId a = 0; a < n; ++a) top_ = join(top_, a);
  }

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& name(ElementId id) const { return poset_.name(id); }
  bool leq(ElementId a, ElementId b) const { return poset_.leq(a, b); }

  ElementId meet(ElementId a, ElementId b) const { return meet_[a * size() + b]; }
  ElementId join(ElementId a, ElementId b) const { return join_[a * size() + b]; }
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  /// Fold of the join table; sup of the empty set is the bottom.
  ElementId sup(const ElementSet& a) const {
    poset_.check_set(a);
    ElementId out = bottom_;
    a.for_each([&](ElementId x) { out = join(out, x); });
    return out;
  }

  ElementId inf(const ElementSet& a) const {
    poset_.check_set(a);
    ElementId out = top_;
    a.for_each([&](ElementId x) { out = meet(out, x); });
    return out;
  }

  /// Closure of a set under binary meets and joins.
  ElementSet sublattice_closure(ElementSet s) const {
    poset_.check_set(s);
    bool grew = true;
    while (grew) {
      grew = false;
      auto ids = s.members();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          for (auto z : {meet(ids[i], ids[j]), join(ids[i], ids[j])}) {
            if (!s.contains(z)) {
              s.insert(z);
              grew = true;
            }
          }
        }
      }
    }
    return s;
  }

 private:
  // The maximum of a down-closed bound set is the member whose principal
  // ideal has the same cardinality (dually for up-closed sets).
  std::optional<ElementId> greatest_of(const ElementSet& bounds, bool downward) const {
    std::optional<ElementId> out;
    const auto k = bounds.size();
    const auto& sizes = downward ? down_size_ : up_size_;
    bounds.for_each([&](ElementId x) {
      if (!out && sizes[x] == k) out = x;
    });
    return out;
  }

  std::vector<std::size_t> down_size_;
  std::vector<std::size_t> up_size_;

  FinitePoset poset_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
};

/// (x ∧ t) ∨ s
inline ElementId apply_f(const FiniteLattice& l, ElementId s, ElementId t, ElementId x) {
  return l.join(l.meet(x, t), s);
}

/// (x ∨ s) ∧ t
inline ElementId apply_g(const FiniteLattice& l, ElementId s, ElementId t, ElementId x) {
  return l.meet(l.join(x, s), t);
}

struct Triple {
  ElementId a = 0, b = 0, c = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct DistributivityResult {
  bool holds = true;
  std::optional<Triple> witness;  // a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)
};

/// Checks a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) for every triple; the first failing
/// triple in lexicographic id order is returned as witness.
inline DistributivityResult is_distributive(const FiniteLattice& l) {
  const auto n = static_cast<ElementId>(l.size());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      for (ElementId c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return {false, Triple{a, b, c}};
      }
    }
  }
  return {};
}

enum class LatticeOp { meet, join };

/// A pair (x, y) on which a translation map fails to preserve `op`.
struct HomomorphismWitness {
  ElementId s = 0, t = 0, x = 0, y = 0;
  LatticeOp op = LatticeOp::join;
};

/// Searches all (s, t) for a map `h(s, t, x)` that is not a lattice homomorphism.
template <class Map>
std::optional<HomomorphismWitness> find_non_homomorphism(const FiniteLattice& l, Map h) {
  const auto n = static_cast<ElementId>(l.size());
  std::vector<ElementId> image(n);
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      for (ElementId x = 0; x < n; ++x) image[x] = h(s, t, x);
      for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = x + 1; y < n; ++y) {
          if (image[l.join(x, y)] != l.join(image[x], image[y])) return HomomorphismWitness{s, t, x, y, LatticeOp::join};
          if (image[l.meet(x, y)] != l.meet(image[x], image[y])) return HomomorphismWitness{s, t, x, y, LatticeOp::meet};
        }
      }
    }
  }
  return std::nullopt;
}

struct IdentityWitness {
  ElementId s = 0, t = 0, x = 0;
};

/// Three verdicts that must coincide on every lattice: distributivity, all
/// f_{s,t} homomorphisms, all g_{s,t} homomorphisms. For distributive
/// lattices the translation identities are checked too.
struct HomomorphismReport {
  DistributivityResult distributive;
  bool all_f_homomorphisms = true;
  std::optional<HomomorphismWitness> f_witness;
  bool all_g_homomorphisms = true;
  std::optional<HomomorphismWitness> g_witness;
  std::optional<bool> identities_hold;  // set only when distributive
  std::optional<IdentityWitness> identity_witness;

  bool consistent() const {
    return distributive.holds == all_f_homomorphisms && all_f_homomorphisms == all_g_homomorphisms &&
           identities_hold.value_or(true);
  }
};

inline HomomorphismReport homomorphism_characterization(const FiniteLattice& l) {
  HomomorphismReport r;
  r.distributive = is_distributive(l);
  r.f_witness = find_non_homomorphism(l, [&](ElementId s, ElementId t, ElementId x) { return apply_f(l, s, t, x); });
  r.all_f_homomorphisms = !r.f_witness;
  r.g_witness = find_non_homomorphism(l, [&](ElementId s, ElementId t, ElementId x) { return apply_g(l, s, t, x); });
  r.all_g_homomorphisms = !r.g_witness;
  if (r.distributive.holds) {
    r.identities_hold = true;
    const auto n = static_cast<ElementId>(l.size());
    for (ElementId s = 0; s < n && *r.identities_hold; ++s) {
      for (ElementId t = 0; t < n && *r.identities_hold; ++t) {
        const auto st_join = l.join(s, t);
        const auto st_meet = l.meet(s, t);
        for (ElementId x = 0; x < n; ++x) {
          const auto f = apply_f(l, s, t, x);
          const auto g = apply_g(l, s, t, x);
          if (f != apply_f(l, s, st_join, x) || f != apply_g(l, s, st_join, x) || g != apply_g(l, st_meet, t, x) ||
              g != apply_f(l, st_meet, t, x)) {
            r.identities_hold = false;
            r.identity_witness = IdentityWitness{s, t, x};
            break;
          }
        }
      }
    }
  }
  return r;
}

enum class CheckMode { exhaustive, sampled };

inline const char* to_string(CheckMode m) { return m == CheckMode::exhaustive ? "exhaustive" : "sampled"; }

struct SubsetSweepOptions {
  std::size_t exhaustive_limit = 15;    // |L| up to this: every nonempty subset
  std::size_t small_subset_size = 2;    // sampled mode: every subset up to this size
  std::size_t samples = 10000;          // sampled mode: extra uniform random subsets
  std::uint64_t seed = 0;
};

struct InfiniteLawResult {
  bool holds = true;
  CheckMode mode = CheckMode::exhaustive;
  std::size_t subsets_checked = 0;
  std::optional<ElementId> x;
  std::optional<ElementSet> subset;
};

namespace detail {

/// Calls `visit(subset)` for the nonempty subsets of 0..n-1 selected by the
/// options, stopping as soon as it returns false. Returns the mode used.
template <class Visit>
CheckMode sweep_nonempty_subsets(std::size_t n, const SubsetSweepOptions& opt, Visit visit) {
  if (n <= opt.exhaustive_limit && n < 63) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s(n);
      for (ElementId i = 0; i < n; ++i) {
        if (mask >> i & 1U) s.insert(i);
      }
      if (!visit(s)) break;
    }
    return CheckMode::exhaustive;
  }
  // Small subsets in lexicographic order of their sorted members.
  std::vector<ElementId> pick;
  bool go = true;
  auto rec = [&](auto&& self, ElementId from, std::size_t remaining) -> void {
    for (ElementId i = from; i < n && go; ++i) {
      pick.push_back(i);
      ElementSet s(n);
      for (auto p : pick) s.insert(p);
      go = visit(s);
      if (go && remaining > 1) self(self, i + 1, remaining - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, opt.small_subset_size);
  std::mt19937_64 rng(opt.seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 0; k < opt.samples && go; ++k) {
    ElementSet s(n);
    for (ElementId i = 0; i < n; ++i) {
      if (coin(rng)) s.insert(i);
    }
    if (s.empty()) continue;
    go = visit(s);
  }
  return CheckMode::sampled;
}

}  // namespace detail

/// x ∨ ⋀A = ⋀(x ∨ A) for every x and the nonempty subsets A selected by `opt`.
inline InfiniteLawResult check_mid(const FiniteLattice& l, const SubsetSweepOptions& opt = {}) {
  InfiniteLawResult r;
  const auto n = static_cast<ElementId>(l.size());
  r.mode = detail::sweep_nonempty_subsets(n, opt, [&](const ElementSet& a) {
    ++r.subsets_checked;
    const auto lhs_inf = l.inf(a);
    for (ElementId x = 0; x < n; ++x) {
      ElementId rhs = l.top();
      a.for_each([&](ElementId y) { rhs = l.meet(rhs, l.join(x, y)); });
      if (l.join(x, lhs_inf) != rhs) {
        r.holds = false;
        r.x = x;
        r.subset = a;
        return false;
      }
    }
    return true;
  });
  return r;
}

/// x ∧ ⋁A = ⋁(x ∧ A) for every x and the nonempty subsets A selected by `opt`.
inline InfiniteLawResult check_jid(const FiniteLattice& l, const SubsetSweepOptions& opt = {}) {
  InfiniteLawResult r;
  const auto n = static_cast<ElementId>(l.size());
  r.mode = detail::sweep_nonempty_subsets(n, opt, [&](const ElementSet& a) {
    ++r.subsets_checked;
    const auto lhs_sup = l.sup(a);
    for (ElementId x = 0; x < n; ++x) {
      ElementId rhs = l.bottom();
      a.for_each([&](ElementId y) { rhs = l.join(rhs, l.meet(x, y)); });
      if (l.meet(x, lhs_sup) != rhs) {
        r.holds = false;
        r.x = x;
        r.subset = a;
        return false;
      }
    }
    return true;
  });
  return r;
}

}  // namespace ordlat
