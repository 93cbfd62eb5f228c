#pragma once

// The embedding i : DM(Y) -> DM(L), A -> A^{+-}, of the completion of a
// sublattice into the completion of the lattice, and the conditions under
// which it preserves arbitrary meets (Property (A)) and joins (Property (B)).

#include "ordlat/cut_dm.hpp"
#include "ordlat/subobject.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ordlat {

struct EmbeddingReport {
  ElementSet sublattice;
  DMLattice completion_of_sub;        // DM(Y) computed on the induced poset of Y
  std::vector<ElementId> to_parent;   // ids of the induced poset -> ids of L
  std::vector<ElementSet> relative_cuts;  // cuts of DM(Y) as subsets of L
  std::vector<ElementSet> images;         // i(A) = A^{+-} with bounds taken in L
  std::vector<Verdict> checks;

  bool ok() const { return all_pass(checks); }
};

namespace detail {

inline DMLattice completion_of_lattice(const FiniteLattice& l) {
  DmOptions o;
  o.verify = false;
  o.max_elements = std::max(o.max_elements, l.size());
  o.max_cuts = std::max(o.max_cuts, l.size());
  return dm_completion(l.poset(), o);
}

inline ElementSet indices(std::size_t universe, const std::vector<std::size_t>& ids) {
  ElementSet s(universe);
  for (auto i : ids) s.insert(static_cast<ElementId>(i));
  return s;
}

}  // namespace detail

/// Builds DM(Y) intrinsically and maps it into DM(L); verifies that the map
/// is an order-embedding together with the two cut lemmas it rests on.
inline EmbeddingReport dm_embed_sublattice(const FiniteLattice& l, const ElementSet& y,
                                           const SubsetCheckOptions& opt = {}) {
  require_sublattice(l, y);
  const auto& p = l.poset();
  EmbeddingReport r;
  r.sublattice = y;
  auto [sub, to_parent] = p.induced(y);
  DmOptions dm_opt;
  dm_opt.verify = false;
  dm_opt.max_elements = std::max(dm_opt.max_elements, sub.size());
  dm_opt.max_cuts = std::max(dm_opt.max_cuts, sub.size());
  r.completion_of_sub = dm_completion(sub, dm_opt);
  r.to_parent = std::move(to_parent);
  for (const auto& c : r.completion_of_sub.cuts()) {
    ElementSet a(p.size());
    c.for_each([&](ElementId i) { a.insert(r.to_parent[i]); });
    r.relative_cuts.push_back(a);
    r.images.push_back(cut_closure(p, a));
  }
  const auto k = r.relative_cuts.size();

  {
    PropertyTally t("embed.relative-cuts", "cuts of the induced poset are the sets A = A^{+_Y -_Y}", "exhaustive");
    for (const auto& a : r.relative_cuts) {
      t.expect(rel_cut_closure(p, a, y) == a, [&] { return format_set(p, a); });
    }
    r.checks.push_back(std::move(t).done());
  }
  {
    PropertyTally t("embed.order-embedding", "i(A) = A^{+-} is an injective order-embedding of DM(Y) into DM(L)",
                    "exhaustive");
    for (std::size_t i = 0; i < k; ++i) {
      t.expect(is_cut(p, r.images[i]), [&] { return "i(" + format_set(p, r.relative_cuts[i]) + ") is not a cut"; });
      for (std::size_t j = 0; j < k; ++j) {
        const bool before = r.relative_cuts[i].subset_of(r.relative_cuts[j]);
        const bool after = r.images[i].subset_of(r.images[j]);
        t.expect(before == after && (i == j || !(r.images[i] == r.images[j])), [&] {
          return format_set(p, r.relative_cuts[i]) + " vs " + format_set(p, r.relative_cuts[j]);
        });
      }
    }
    r.checks.push_back(std::move(t).done());
  }

  // Pairs for the monotonicity lemma: all subsets of small Y, otherwise the
  // relative cuts plus a bounded sample.
  std::vector<ElementSet> pool;
  SubsetCheckOptions lemma_opt = opt;
  lemma_opt.empty_mode = EmptySubsetMode::include;
  lemma_opt.exhaustive_limit = std::min<std::size_t>(opt.exhaustive_limit, 6);
  lemma_opt.samples = std::min<std::size_t>(opt.samples, 48);
  const auto pool_mode = detail::sweep_subsets_of(l, y, lemma_opt, [&](const ElementSet& a) {
    pool.push_back(a);
    return true;
  });
  if (pool_mode == CheckMode::sampled) pool.insert(pool.end(), r.relative_cuts.begin(), r.relative_cuts.end());
  {
    PropertyTally t("lemma.relative-closure-monotone",
                    "A^{+-} ⊆ B^{+-} implies A^{+_Y -_Y} ⊆ B^{+_Y -_Y} for A, B ⊆ Y", to_string(pool_mode));
    for (const auto& a : pool) {
      const auto ca = cut_closure(p, a);
      const auto ra = rel_cut_closure(p, a, y);
      for (const auto& b : pool) {
        if (!ca.subset_of(cut_closure(p, b))) continue;
        t.expect(ra.subset_of(rel_cut_closure(p, b, y)),
                 [&] { return "A = " + format_set(p, a) + ", B = " + format_set(p, b); });
      }
    }
    r.checks.push_back(std::move(t).done());
  }
  {
    PropertyTally t("lemma.closure-restriction", "(A^{+-} ∩ Y)^{+-} = A^{+-} for A ⊆ Y", "");
    SubsetCheckOptions o = opt;
    o.empty_mode = EmptySubsetMode::include;
    auto mode = detail::sweep_subsets_of(l, y, o, [&](const ElementSet& a) {
      const auto c = cut_closure(p, a);
      t.expect(cut_closure(p, c & y) == c, [&] { return "A = " + format_set(p, a); });
      return true;
    });
    t.set_mode(to_string(mode));
    r.checks.push_back(std::move(t).done());
  }
  return r;
}

struct PreservationOptions {
  SubsetCheckOptions subsets;               // empty-subset mode, exhaustive limit, samples, seed
  std::size_t family_exhaustive_cuts = 12;  // DM(Y) up to this many cuts: every family
  std::size_t family_samples = 10000;
};

struct PreservationReport {
  PropertyResult property_a;
  PropertyResult property_b;
  EmbeddingReport embedding;
  std::vector<Verdict> checks;  // embedding checks are included here as well

  bool ok() const { return all_pass(checks); }
};

/// Tests meet preservation of i under Property (A), join preservation under
/// (B), the supporting set identities, and, when both hold, that the image of
/// DM(Y) is a regular sublattice of DM(L).
inline PreservationReport check_preservation(const FiniteLattice& l, const ElementSet& y,
                                             const PreservationOptions& opt = {}) {
  PreservationReport r;
  r.embedding = dm_embed_sublattice(l, y, opt.subsets);
  r.checks = r.embedding.checks;
  r.property_a = has_property_A(l, y, opt.subsets);
  r.property_b = has_property_B(l, y, opt.subsets);
  const bool has_a = r.property_a.holds;
  const bool has_b = r.property_b.holds;
  const auto& p = l.poset();
  const auto empty_mode = opt.subsets.empty_mode;
  const std::string mode_suffix = std::string(", ") + to_string(empty_mode);

  const auto dm_l = detail::completion_of_lattice(l);
  const auto& dm_y = r.embedding.completion_of_sub;
  const auto k = dm_y.size();
  std::vector<std::size_t> image_index;
  for (const auto& img : r.embedding.images) image_index.push_back(*dm_l.index_of(img));

  // Families of cuts of DM(Y).
  std::vector<ElementSet> families;
  std::string family_mode;
  const bool with_empty = empty_mode == EmptySubsetMode::include;
  if (k <= opt.family_exhaustive_cuts) {
    family_mode = "exhaustive";
    for (std::uint64_t mask = with_empty ? 0 : 1; mask < (std::uint64_t{1} << k); ++mask) {
      ElementSet f(k);
      for (ElementId i = 0; i < k; ++i) {
        if (mask >> i & 1U) f.insert(i);
      }
      families.push_back(std::move(f));
    }
  } else {
    family_mode = "sampled";
    std::mt19937_64 rng(opt.subsets.seed);
    std::bernoulli_distribution coin(0.5);
    if (with_empty) families.emplace_back(k);
    for (std::size_t s = 0; s < opt.family_samples; ++s) {
      ElementSet f(k);
      for (ElementId i = 0; i < k; ++i) {
        if (coin(rng)) f.insert(i);
      }
      if (!f.empty()) families.push_back(std::move(f));
    }
  }

  PropertyTally meets("preservation.meets", "with Property (A), i preserves arbitrary meets", family_mode + mode_suffix);
  PropertyTally joins("preservation.joins", "with Property (B), i preserves arbitrary joins", family_mode + mode_suffix);
  PropertyTally meet_id("preservation.meet-identity",
                        "with Property (A), the intersection of the A_α^{+-} equals (∩ A_α)^{+-}",
                        family_mode + mode_suffix);
  PropertyTally join_id("preservation.join-identity",
                        "with Property (B), (∪ A_α)^{+_Y -_Y +-} equals (∪ A_α^{+-})^{+-}", family_mode + mode_suffix);
  std::string meet_note, join_note;
  auto describe_family = [&](const ElementSet& f) {
    std::string s = "[";
    bool first = true;
    f.for_each([&](ElementId i) {
      s += (first ? "" : ", ") + format_set(p, r.embedding.relative_cuts[i]);
      first = false;
    });
    return s + "]";
  };
  for (const auto& f : families) {
    std::vector<std::size_t> imgs;
    f.for_each([&](ElementId i) { imgs.push_back(image_index[i]); });
    const auto img_set = detail::indices(dm_l.size(), imgs);
    const bool meet_ok = image_index[dm_y.lattice().inf(f)] == dm_l.lattice().inf(img_set);
    const bool join_ok = image_index[dm_y.lattice().sup(f)] == dm_l.lattice().sup(img_set);

    ElementSet meet_of_images = p.all(), meet_of_family = y, union_family(p.size()), union_images(p.size());
    f.for_each([&](ElementId i) {
      meet_of_images &= r.embedding.images[i];
      meet_of_family &= r.embedding.relative_cuts[i];
      union_family |= r.embedding.relative_cuts[i];
      union_images |= r.embedding.images[i];
    });
    if (has_a) {
      meets.expect(meet_ok, [&] { return describe_family(f); });
      meet_id.expect(meet_of_images == cut_closure(p, meet_of_family), [&] { return describe_family(f); });
    } else if (!meet_ok && meet_note.empty()) {
      meet_note = "without Property (A): meet not preserved for " + describe_family(f);
    }
    if (has_b) {
      joins.expect(join_ok, [&] { return describe_family(f); });
      join_id.expect(cut_closure(p, rel_cut_closure(p, union_family, y)) == cut_closure(p, union_images),
                     [&] { return describe_family(f); });
    } else if (!join_ok && join_note.empty()) {
      join_note = "without Property (B): join not preserved for " + describe_family(f);
    }
  }
  if (!has_a) {
    meets.set_mode("not applicable (no Property (A))" + mode_suffix);
    meets.note(meet_note.empty() ? "no witness found" : meet_note);
    meet_id.set_mode("not applicable (no Property (A))" + mode_suffix);
  }
  if (!has_b) {
    joins.set_mode("not applicable (no Property (B))" + mode_suffix);
    joins.note(join_note.empty() ? "no witness found" : join_note);
    join_id.set_mode("not applicable (no Property (B))" + mode_suffix);
  }
  r.checks.push_back(std::move(meets).done());
  r.checks.push_back(std::move(joins).done());
  r.checks.push_back(std::move(meet_id).done());
  r.checks.push_back(std::move(join_id).done());

  {
    PropertyTally t("bounds.relative-lower-upper",
                    "Property (A) gives A^{-+} = A^{-_Y +}; Property (B) gives A^{+-} = A^{+_Y -}", "");
    auto mode = detail::sweep_subsets_of(l, y, opt.subsets, [&](const ElementSet& a) {
      if (has_a) {
        const auto lower = lower_bounds(p, a);
        t.expect(upper_bounds(p, lower) == upper_bounds(p, lower & y), [&] { return "(A) with A = " + format_set(p, a); });
      }
      if (has_b) {
        const auto upper = upper_bounds(p, a);
        t.expect(lower_bounds(p, upper) == lower_bounds(p, upper & y), [&] { return "(B) with A = " + format_set(p, a); });
      }
      return true;
    });
    t.set_mode(std::string(to_string(mode)) + mode_suffix);
    r.checks.push_back(std::move(t).done());
  }
  {
    PropertyTally t("subobject.ab-implies-regular", "Properties (A) and (B) together imply regularity",
                    std::string("exhaustive") + mode_suffix);
    if (has_a && has_b) {
      auto reg = is_regular(l, y, opt.subsets);
      t.set_mode(std::string(to_string(reg.mode)) + mode_suffix);
      t.expect(reg.holds, [&] { return "A = " + format_set(p, *reg.witness_subset); });
    } else {
      t.set_mode("not applicable" + mode_suffix);
    }
    r.checks.push_back(std::move(t).done());
  }
  {
    PropertyTally t("preservation.regular-image",
                    "with (A) and (B), i[DM(Y)] is a regular sublattice of DM(L)", "not applicable" + mode_suffix);
    if (has_a && has_b) {
      const auto image = detail::indices(dm_l.size(), image_index);
      const auto& dl = dm_l.lattice();
      const auto& dp = dl.poset();
      image.for_each([&](ElementId a) {
        image.for_each([&](ElementId b) {
          t.expect(image.contains(dl.meet(a, b)) && image.contains(dl.join(a, b)),
                   [&] { return "image not closed for " + dp.name(a) + ", " + dp.name(b); });
        });
      });
      SubsetCheckOptions o = opt.subsets;
      auto mode = detail::sweep_subsets_of(dl, image, o, [&](const ElementSet& s) {
        const auto sup_in_image = minimum_of(dp, upper_bounds(dp, s) & image);
        const auto inf_in_image = maximum_of(dp, lower_bounds(dp, s) & image);
        t.expect(sup_in_image == dl.sup(s) && inf_in_image == dl.inf(s), [&] { return format_set(dp, s); });
        return true;
      });
      t.set_mode(std::string(to_string(mode)) + mode_suffix);
    }
    r.checks.push_back(std::move(t).done());
  }
  return r;
}

}  // namespace ordlat
