#pragma once

// Cut operators and the Dedekind-MacNeille completion of a finite poset.
//
// The l-cuts D = D^{+-} of a finite poset are exactly the intersections of
// principal down-sets, the empty intersection being P itself. They are
// enumerated as that closure system, deduplicated, and kept in canonical order
// (cardinality, then sorted members). The completion lattice is derived from
// the inclusion order alone, and the textbook completion properties are
// verified against it on construction.

#include "ordlat/lattice.hpp"
#include "ordlat/report.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace ordlat {

/// A^{+-}
inline ElementSet cut_closure(const FinitePoset& p, const ElementSet& a) {
  return lower_bounds(p, upper_bounds(p, a));
}

inline bool is_cut(const FinitePoset& p, const ElementSet& a) { return cut_closure(p, a) == a; }

namespace detail {
inline void require_subset(const FinitePoset& p, const ElementSet& a, const ElementSet& y) {
  p.check_set(a);
  p.check_set(y);
  if (!a.subset_of(y)) {
    throw PreconditionError("subset " + format_set(p, a) + " is not contained in " + format_set(p, y));
  }
}
}  // namespace detail

/// A^{+_Y} = A^+ ∩ Y
inline ElementSet rel_upper(const FinitePoset& p, const ElementSet& a, const ElementSet& y) {
  detail::require_subset(p, a, y);
  return upper_bounds(p, a) & y;
}

/// A^{-_Y} = A^- ∩ Y
inline ElementSet rel_lower(const FinitePoset& p, const ElementSet& a, const ElementSet& y) {
  detail::require_subset(p, a, y);
  return lower_bounds(p, a) & y;
}

/// A^{+_Y -_Y}
inline ElementSet rel_cut_closure(const FinitePoset& p, const ElementSet& a, const ElementSet& y) {
  return rel_lower(p, rel_upper(p, a, y), y);
}

struct DmOptions {
  std::size_t max_elements = 64;
  std::size_t max_cuts = 2048;
  std::size_t exhaustive_subset_limit = 12;  // subsets of P swept exhaustively up to this size
  std::size_t samples = 2000;                // random subsets of P otherwise
  std::uint64_t seed = 0;
  bool verify = true;
};

/// All l-cuts of a poset in canonical order, the completion lattice they form
/// under inclusion, and the canonical embedding x -> (<-, x].
class DMLattice {
 public:
  const FinitePoset& carrier() const { return carrier_; }
  const std::vector<ElementSet>& cuts() const { return cuts_; }
  const ElementSet& cut(std::size_t i) const { return cuts_.at(i); }
  std::size_t size() const { return cuts_.size(); }

  /// Index of the principal cut (<-, x].
  std::size_t phi(ElementId x) const { return phi_.at(x); }
  const std::vector<std::size_t>& phi_map() const { return phi_; }

  std::optional<std::size_t> index_of(const ElementSet& cut) const {
    auto it = std::lower_bound(cuts_.begin(), cuts_.end(), cut, CanonicalLess{});
    if (it == cuts_.end() || !(*it == cut)) return std::nullopt;
    return static_cast<std::size_t>(it - cuts_.begin());
  }

  /// The completion as a lattice whose element ids are cut indices.
  const FiniteLattice& lattice() const { return lattice_; }

  /// Completion properties verified at construction.
  const std::vector<Verdict>& checks() const { return checks_; }
  bool verified() const { return all_pass(checks_); }

  friend DMLattice dm_completion(const FinitePoset& p, const DmOptions& opt);

 private:
  FinitePoset carrier_;
  std::vector<ElementSet> cuts_;
  std::vector<std::size_t> phi_;
  FiniteLattice lattice_;
  std::vector<Verdict> checks_;
};

namespace detail {

template <class Visit>
std::string sweep_subsets_of_carrier(const FinitePoset& p, const DmOptions& opt, Visit visit) {
  const auto n = p.size();
  if (n <= opt.exhaustive_subset_limit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet d(n);
      for (ElementId i = 0; i < n; ++i) {
        if (mask >> i & 1U) d.insert(i);
      }
      visit(d);
    }
    return "exhaustive";
  }
  std::mt19937_64 rng(opt.seed);
  std::bernoulli_distribution coin(0.5);
  visit(ElementSet(n));
  visit(ElementSet::full(n));
  for (std::size_t k = 0; k < opt.samples; ++k) {
    ElementSet d(n);
    for (ElementId i = 0; i < n; ++i) {
      if (coin(rng)) d.insert(i);
    }
    visit(d);
  }
  return "sampled";
}

inline std::vector<Verdict> verify_completion(const DMLattice& dm, const DmOptions& opt) {
  const auto& p = dm.carrier();
  const auto& lat = dm.lattice();
  const auto k = dm.size();
  std::vector<Verdict> out;
  auto idx_set = [&](auto&& ids) {
    ElementSet s(k);
    for (auto i : ids) s.insert(static_cast<ElementId>(i));
    return s;
  };
  auto phi_image = [&](const ElementSet& d) {
    ElementSet s(k);
    d.for_each([&](ElementId x) { s.insert(static_cast<ElementId>(dm.phi(x))); });
    return s;
  };

  {
    PropertyTally t("dm.cuts-closed", "every stored cut D satisfies D = D^{+-}", "exhaustive");
    for (const auto& c : dm.cuts()) t.expect(is_cut(p, c), [&] { return format_set(p, c); });
    out.push_back(std::move(t).done());
  }
  {
    PropertyTally t("dm.closure-system", "cuts are closed under intersection and contain P and the least cut",
                    "exhaustive");
    t.expect(dm.index_of(p.all()).has_value(), "P is missing");
    t.expect(dm.index_of(cut_closure(p, p.empty_set())).has_value(), "the least cut is missing");
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        t.expect(dm.index_of(dm.cut(i) & dm.cut(j)).has_value(),
                 [&] { return format_set(p, dm.cut(i)) + " ∩ " + format_set(p, dm.cut(j)); });
      }
    }
    out.push_back(std::move(t).done());
  }
  std::string mode;
  {
    PropertyTally t("dm.lower-bounds-are-cuts", "D^- is a cut for every D ⊆ P", "");
    mode = sweep_subsets_of_carrier(p, opt, [&](const ElementSet& d) {
      t.expect(dm.index_of(lower_bounds(p, d)).has_value(), [&] { return "D = " + format_set(p, d); });
    });
    t.set_mode(mode);
    out.push_back(std::move(t).done());
  }
  {
    PropertyTally t("dm.meet-join-formulas",
                    "in the completion, meets are intersections and joins are (union)^{+-}, "
                    "including the empty family",
                    "exhaustive");
    t.expect(lat.top() == *dm.index_of(p.all()), "meet of the empty family is not P");
    t.expect(dm.cut(lat.bottom()) == cut_closure(p, p.empty_set()), "join of the empty family is not ∅^{+-}");
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto a = static_cast<ElementId>(i), b = static_cast<ElementId>(j);
        t.expect(dm.cut(lat.meet(a, b)) == (dm.cut(i) & dm.cut(j)),
                 [&] { return "meet of cuts #" + std::to_string(i) + ", #" + std::to_string(j); });
        t.expect(dm.cut(lat.join(a, b)) == cut_closure(p, dm.cut(i) | dm.cut(j)),
                 [&] { return "join of cuts #" + std::to_string(i) + ", #" + std::to_string(j); });
      }
    }
    out.push_back(std::move(t).done());
  }
  {
    PropertyTally t("dm.phi-order-embedding", "x -> (<-, x] is a cut and x <= y iff (<-, x] ⊆ (<-, y]",
                    "exhaustive");
    for (ElementId x = 0; x < p.size(); ++x) {
      t.expect(dm.cut(dm.phi(x)) == p.down(x), [&] { return "phi(" + p.name(x) + ")"; });
      for (ElementId y = 0; y < p.size(); ++y) {
        t.expect(p.leq(x, y) == lat.leq(static_cast<ElementId>(dm.phi(x)), static_cast<ElementId>(dm.phi(y))),
                 [&] { return p.name(x) + " vs " + p.name(y); });
      }
    }
    out.push_back(std::move(t).done());
  }
  {
    PropertyTally t("dm.dense", "the image of phi is join-dense and meet-dense", "exhaustive");
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<std::size_t> below, above;
      for (ElementId x = 0; x < p.size(); ++x) {
        if (lat.leq(static_cast<ElementId>(dm.phi(x)), static_cast<ElementId>(c))) below.push_back(dm.phi(x));
        if (lat.leq(static_cast<ElementId>(c), static_cast<ElementId>(dm.phi(x)))) above.push_back(dm.phi(x));
      }
      t.expect(lat.sup(idx_set(below)) == c && lat.inf(idx_set(above)) == c,
               [&] { return "cut " + format_set(p, dm.cut(c)); });
    }
    out.push_back(std::move(t).done());
  }
  {
    PropertyTally t("dm.phi-preserves-bounds", "sup_P D = x iff ⋁ phi[D] = phi(x), dually for infima", mode);
    PropertyTally u("dm.bound-identities", "D^- = ⋀ phi[D] = ⋁ phi[D^-] and D^{+-} = ⋁ phi[D] = ⋀ phi[D^+]",
                    mode);
    sweep_subsets_of_carrier(p, opt, [&](const ElementSet& d) {
      const auto img = phi_image(d);
      const auto dm_sup = lat.sup(img);
      const auto dm_inf = lat.inf(img);
      const auto p_sup = supremum(p, d);
      const auto p_inf = infimum(p, d);
      for (ElementId x = 0; x < p.size(); ++x) {
        t.expect((p_sup == x) == (dm_sup == dm.phi(x)) && (p_inf == x) == (dm_inf == dm.phi(x)),
                 [&] { return "D = " + format_set(p, d) + ", x = " + p.name(x); });
      }
      const auto lower = lower_bounds(p, d);
      const auto closed = cut_closure(p, d);
      u.expect(dm.cut(dm_inf) == lower && dm.cut(lat.sup(phi_image(lower))) == lower && dm.cut(dm_sup) == closed &&
                   dm.cut(lat.inf(phi_image(upper_bounds(p, d)))) == closed,
               [&] { return "D = " + format_set(p, d); });
    });
    out.push_back(std::move(t).done());
    out.push_back(std::move(u).done());
  }
  return out;
}

}  // namespace detail

/// Enumerates every l-cut of `p`. Throws ResourceError when |P| or the number
/// of cuts exceeds the configured caps.
inline DMLattice dm_completion(const FinitePoset& p, const DmOptions& opt = {}) {
  if (p.size() > opt.max_elements) {
    throw ResourceError("poset has " + std::to_string(p.size()) + " elements; completion is capped at " +
                        std::to_string(opt.max_elements));
  }
  std::set<ElementSet, CanonicalLess> family{p.all()};
  for (ElementId x = 0; x < p.size(); ++x) {
    std::vector<ElementSet> fresh;
    for (const auto& c : family) {
      auto meet = c & p.down(x);
      if (!family.contains(meet)) fresh.push_back(std::move(meet));
    }
    family.insert(fresh.begin(), fresh.end());
    if (family.size() > opt.max_cuts) {
      throw ResourceError("completion exceeds the cap of " + std::to_string(opt.max_cuts) + " cuts");
    }
  }
  DMLattice dm;
  dm.carrier_ = p;
  dm.cuts_.assign(family.begin(), family.end());
  for (ElementId x = 0; x < p.size(); ++x) dm.phi_.push_back(*dm.index_of(p.down(x)));

  std::vector<std::string> names;
  for (const auto& c : dm.cuts_) names.push_back(format_set(p, c));
  std::vector<OrderPair> incl;
  for (ElementId i = 0; i < dm.cuts_.size(); ++i) {
    for (ElementId j = 0; j < dm.cuts_.size(); ++j) {
      if (i != j && dm.cuts_[i].subset_of(dm.cuts_[j])) incl.emplace_back(i, j);
    }
  }
  dm.lattice_ = FiniteLattice(FinitePoset::from_leq(std::move(names), incl));
  if (opt.verify) dm.checks_ = detail::verify_completion(dm, opt);
  return dm;
}

/// The completion with the empty cut and the full cut removed, unless they
/// are images of carrier elements.
inline FinitePoset dm_strip_bounds(const DMLattice& dm) {
  const auto& p = dm.carrier();
  ElementSet keep = ElementSet::full(dm.size());
  ElementSet images(dm.size());
  for (auto i : dm.phi_map()) images.insert(static_cast<ElementId>(i));
  for (auto special : {dm.index_of(p.empty_set()), dm.index_of(p.all())}) {
    if (special && !images.contains(static_cast<ElementId>(*special))) keep.erase(static_cast<ElementId>(*special));
  }
  return dm.lattice().poset().induced(keep).first;
}

/// Checks that the completion of a lattice is isomorphic to it via phi.
inline bool dm_is_isomorphic_to_carrier(const DMLattice& dm) {
  if (dm.size() != dm.carrier().size()) return false;
  ElementSet hit(dm.size());
  for (auto i : dm.phi_map()) hit.insert(static_cast<ElementId>(i));
  return hit.size() == dm.size();
}

}  // namespace ordlat
