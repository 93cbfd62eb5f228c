#pragma once

// Named property suites over input files, their reports, and exit codes.

#include "ordlat/convergence.hpp"
#include "ordlat/cut_dm.hpp"
#include "ordlat/errors.hpp"
#include "ordlat/gallery/gallery.hpp"
#include "ordlat/io.hpp"
#include "ordlat/lattice.hpp"
#include "ordlat/preservation.hpp"
#include "ordlat/report.hpp"
#include "ordlat/subobject.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace ordlat {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

enum class ModeFlag { automatic, exhaustive, sampled };

inline ModeFlag parse_mode_flag(const std::string& s) {
  if (s == "auto") return ModeFlag::automatic;
  if (s == "exhaustive") return ModeFlag::exhaustive;
  if (s == "sampled") return ModeFlag::sampled;
  throw InputError("unknown mode '" + s + "' (expected auto, exhaustive or sampled)");
}

inline EmptySubsetMode parse_empty_mode(const std::string& s) {
  if (s == "include") return EmptySubsetMode::include;
  if (s == "exclude") return EmptySubsetMode::exclude;
  throw InputError("unknown empty-subset mode '" + s + "' (expected include or exclude)");
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"convergence", "cuts-dm", "distributivity",
                                              "gallery",     "preservation", "subobjects"};
  return names;
}

struct CheckSuiteSpec {
  std::vector<std::string> suites;
  std::vector<std::string> inputs;
  std::vector<std::string> subset;  // element names or ids; overrides a "subset" field in the input
  ModeFlag mode = ModeFlag::automatic;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  EmptySubsetMode empty_mode = EmptySubsetMode::include;
  io::Format format = io::Format::text;
  std::size_t exhaustive_limit = 12;     // subsets of Y (or P) enumerated up to this size
  std::size_t lattice_exhaustive = 15;   // subsets of L for the infinite distributive laws
  std::size_t max_elements = 64;         // completion caps
  std::size_t max_cuts = 2048;
  bool timing = true;
  bool parallel = true;

  /// Resolves "all", removes duplicates, sorts by name, and rejects unknown names.
  std::vector<std::string> resolved_suites() const {
    std::set<std::string> out;
    for (const auto& s : suites) {
      if (s == "all") {
        out.insert(suite_names().begin(), suite_names().end());
      } else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) {
        out.insert(s);
      } else {
        throw InputError("unknown suite '" + s +
                         "' (expected distributivity, convergence, cuts-dm, subobjects, preservation, gallery or all)");
      }
    }
    if (out.empty()) throw InputError("no suite selected");
    return {out.begin(), out.end()};
  }

  void validate() const {
    const auto names = resolved_suites();
    const bool needs_input = std::any_of(names.begin(), names.end(), [](const std::string& n) { return n != "gallery"; });
    if (needs_input && inputs.empty()) throw InputError("suite needs at least one input file");
    if (samples == 0) throw InputError("sample count must be positive");
  }
};

/// Reads ORDLAT_SAMPLES, ORDLAT_SEED, ORDLAT_EXHAUSTIVE_LIMIT, ORDLAT_MAX_ELEMENTS
/// and ORDLAT_MAX_CUTS into the spec.
inline void apply_env_overrides(CheckSuiteSpec& spec) {
  auto read = [](const char* name) -> std::optional<std::uint64_t> {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    try {
      std::size_t used = 0;
      auto out = std::stoull(v, &used);
      if (used != std::string(v).size()) throw std::invalid_argument(v);
      return out;
    } catch (const std::exception&) {
      throw InputError(std::string("environment variable ") + name + " is not a non-negative integer: '" + v + "'");
    }
  };
  if (auto v = read("ORDLAT_SAMPLES")) spec.samples = *v;
  if (auto v = read("ORDLAT_SEED")) spec.seed = *v;
  if (auto v = read("ORDLAT_EXHAUSTIVE_LIMIT")) spec.exhaustive_limit = *v;
  if (auto v = read("ORDLAT_MAX_ELEMENTS")) spec.max_elements = *v;
  if (auto v = read("ORDLAT_MAX_CUTS")) spec.max_cuts = *v;
}

struct SuiteResult {
  std::string suite;
  std::string input;
  std::size_t elements = 0;
  std::vector<Verdict> verdicts;
  double wall_ms = 0;

  bool pass() const { return all_pass(verdicts); }
};

struct RunReport {
  std::vector<SuiteResult> suites;
  std::vector<gallery::GalleryReport> gallery;
  double wall_ms = 0;

  std::size_t violations() const {
    std::size_t n = 0;
    for (const auto& s : suites) {
      for (const auto& v : s.verdicts) n += v.pass ? 0 : 1;
    }
    for (const auto& g : gallery) {
      for (const auto& c : g.claims) n += c.pass ? 0 : 1;
    }
    return n;
  }
  std::size_t properties() const {
    std::size_t n = 0;
    for (const auto& s : suites) n += s.verdicts.size();
    for (const auto& g : gallery) n += g.claims.size();
    return n;
  }
  int exit_code() const { return violations() == 0 ? kExitPass : kExitViolation; }
};

namespace suites {

struct Options {
  ModeFlag mode = ModeFlag::automatic;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  EmptySubsetMode empty_mode = EmptySubsetMode::include;
  std::size_t exhaustive_limit = 12;
  std::size_t lattice_exhaustive = 15;
  std::size_t max_elements = 64;
  std::size_t max_cuts = 2048;

  static Options from(const CheckSuiteSpec& s) {
    return {s.mode, s.samples, s.seed, s.empty_mode, s.exhaustive_limit, s.lattice_exhaustive, s.max_elements, s.max_cuts};
  }

  /// Exhaustive enumeration is refused beyond 2^22 subsets.
  std::size_t limit(std::size_t automatic_limit, std::size_t n) const {
    switch (mode) {
      case ModeFlag::automatic:
        return automatic_limit;
      case ModeFlag::sampled:
        return 0;
      case ModeFlag::exhaustive:
        if (n > 22) {
          throw ResourceError("exhaustive mode over " + std::to_string(n) + " elements exceeds the cap of 22");
        }
        return n;
    }
    return automatic_limit;
  }

  SubsetCheckOptions subset_options(std::size_t y_size) const {
    SubsetCheckOptions o;
    o.empty_mode = empty_mode;
    o.exhaustive_limit = limit(exhaustive_limit, y_size);
    o.samples = samples;
    o.seed = seed;
    return o;
  }
};

inline std::string name_of(const FinitePoset& p, ElementId x) { return p.name(x); }

inline std::string describe_seq(const FinitePoset& p, const UPSeq& s) {
  std::string out = "prefix [";
  for (std::size_t i = 0; i < s.prefix.size(); ++i) out += (i ? "," : "") + p.name(s.prefix[i]);
  out += "] cycle [";
  for (std::size_t i = 0; i < s.cycle.size(); ++i) out += (i ? "," : "") + p.name(s.cycle[i]);
  return out + "]";
}

/// Visits subsets of 0..n-1: all of them when n <= limit, else the empty
/// set, singletons and `samples` random subsets. Returns the mode used.
template <class Visit>
CheckMode sweep_all_subsets(std::size_t n, std::size_t limit, std::size_t samples, std::uint64_t seed, Visit&& visit) {
  if (n <= limit) {
    const auto base = ElementSet::full(n).members();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (!visit(subset_from_mask(base, n, mask))) break;
    }
    return CheckMode::exhaustive;
  }
  if (!visit(ElementSet(n))) return CheckMode::sampled;
  for (ElementId x = 0; x < n; ++x) {
    ElementSet s(n);
    s.insert(x);
    if (!visit(s)) return CheckMode::sampled;
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < samples; ++i) {
    ElementSet s(n);
    for (ElementId x = 0; x < n; ++x) {
      if (coin(rng)) s.insert(x);
    }
    if (!visit(s)) break;
  }
  return CheckMode::sampled;
}

inline std::vector<Verdict> distributivity(const FiniteLattice& l, const Options& opt) {
  const auto& p = l.poset();
  std::vector<Verdict> out;
  const auto hom = homomorphism_characterization(l);
  const auto n3 = l.size() * l.size() * l.size();
  {
    PropertyTally t("lattice.distributive", "a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) for all a, b, c", "exhaustive");
    t.expect(hom.distributive.holds, [&] {
      const auto w = *hom.distributive.witness;
      return "a=" + p.name(w.a) + ", b=" + p.name(w.b) + ", c=" + p.name(w.c) +
             ": a∧(b∨c)=" + p.name(l.meet(w.a, l.join(w.b, w.c))) +
             ", (a∧b)∨(a∧c)=" + p.name(l.join(l.meet(w.a, w.b), l.meet(w.a, w.c)));
    });
    auto v = std::move(t).done();
    v.cases = n3;
    out.push_back(std::move(v));
  }
  auto hom_witness = [&](const std::optional<HomomorphismWitness>& w) {
    return "s=" + p.name(w->s) + ", t=" + p.name(w->t) + ", x=" + p.name(w->x) + ", y=" + p.name(w->y) + " (" +
           (w->op == LatticeOp::join ? "join" : "meet") + ")";
  };
  {
    PropertyTally t("lattice.f-homomorphisms", "every f_{s,t}(x) = (x ∧ t) ∨ s is a lattice homomorphism", "exhaustive");
    t.expect(hom.all_f_homomorphisms, [&] { return hom_witness(hom.f_witness); });
    out.push_back(std::move(t).done());
  }
  {
    PropertyTally t("lattice.g-homomorphisms", "every g_{s,t}(x) = (x ∨ s) ∧ t is a lattice homomorphism", "exhaustive");
    t.expect(hom.all_g_homomorphisms, [&] { return hom_witness(hom.g_witness); });
    out.push_back(std::move(t).done());
  }
  {
    PropertyTally t("lattice.homomorphism-equivalence",
                    "distributive iff every f_{s,t} is a homomorphism iff every g_{s,t} is", "exhaustive");
    t.expect(hom.consistent(), [&] {
      std::string w = "distributive=" + std::string(hom.distributive.holds ? "yes" : "no") +
                      ", f=" + (hom.all_f_homomorphisms ? "yes" : "no") + ", g=" + (hom.all_g_homomorphisms ? "yes" : "no");
      if (hom.identity_witness) {
        w += ", identity fails at s=" + p.name(hom.identity_witness->s) + ", t=" + p.name(hom.identity_witness->t) +
             ", x=" + p.name(hom.identity_witness->x);
      }
      return w;
    });
    out.push_back(std::move(t).done());
  }
  SubsetSweepOptions so;
  so.exhaustive_limit = opt.limit(opt.lattice_exhaustive, l.size());
  so.samples = opt.samples;
  so.seed = opt.seed;
  const auto mid = check_mid(l, so);
  const auto jid = check_jid(l, so);
  auto law_witness = [&](const InfiniteLawResult& r) {
    return "x=" + p.name(*r.x) + ", A=" + format_set(p, *r.subset);
  };
  {
    PropertyTally t("lattice.mid", "x ∨ ⋀A = ⋀(x ∨ a) for every x and nonempty A", to_string(mid.mode));
    t.expect(mid.holds, [&] { return law_witness(mid); });
    auto v = std::move(t).done();
    v.cases = mid.subsets_checked;
    out.push_back(std::move(v));
  }
  {
    PropertyTally t("lattice.jid", "x ∧ ⋁A = ⋁(x ∧ a) for every x and nonempty A", to_string(jid.mode));
    t.expect(jid.holds, [&] { return law_witness(jid); });
    auto v = std::move(t).done();
    v.cases = jid.subsets_checked;
    out.push_back(std::move(v));
  }
  {
    PropertyTally t("lattice.distributivity-triad", "on finite lattices MID iff JID iff distributive",
                    to_string(mid.mode));
    t.expect(mid.holds == jid.holds && jid.holds == hom.distributive.holds, [&] {
      return std::string("mid=") + (mid.holds ? "yes" : "no") + ", jid=" + (jid.holds ? "yes" : "no") +
             ", distributive=" + (hom.distributive.holds ? "yes" : "no");
    });
    out.push_back(std::move(t).done());
  }
  {
    PropertyTally t("lattice.tables-match-bounds", "meet(a,b) is the greatest lower bound, join(a,b) the least upper bound",
                    "exhaustive");
    const auto n = static_cast<ElementId>(l.size());
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        const auto pair = p.make_set({a, b});
        t.expect(infimum(p, pair) == l.meet(a, b) && supremum(p, pair) == l.join(a, b),
                 [&] { return "a=" + p.name(a) + ", b=" + p.name(b); });
      }
    }
    out.push_back(std::move(t).done());
  }
  return out;
}

/// Sequences with prefix <= max_prefix and cycle <= max_cycle, stopping at `budget`.
inline std::vector<UPSeq> enumerate_sequences(std::size_t n, std::size_t max_prefix, std::size_t max_cycle) {
  std::vector<UPSeq> out;
  for (std::size_t pl = 0; pl <= max_prefix; ++pl) {
    for (std::size_t cl = 1; cl <= max_cycle; ++cl) {
      const auto len = pl + cl;
      std::vector<ElementId> digits(len, 0);
      while (true) {
        UPSeq s;
        s.prefix.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(pl));
        s.cycle.assign(digits.begin() + static_cast<std::ptrdiff_t>(pl), digits.end());
        out.push_back(std::move(s));
        std::size_t i = 0;
        while (i < len && ++digits[i] == n) digits[i++] = 0;
        if (i == len) break;
      }
    }
  }
  return out;
}

inline std::size_t count_sequences(std::size_t n, std::size_t max_prefix, std::size_t max_cycle) {
  std::size_t total = 0;
  for (std::size_t pl = 0; pl <= max_prefix; ++pl) {
    for (std::size_t cl = 1; cl <= max_cycle; ++cl) {
      std::size_t c = 1;
      for (std::size_t i = 0; i < pl + cl; ++i) c = std::min<std::size_t>(c * n, std::size_t{1} << 40);
      total += c;
    }
  }
  return total;
}

inline std::vector<Verdict> convergence(const FiniteLattice& l, const Options& opt,
                                        const std::vector<UPSeq>& extra = {}) {
  const auto& p = l.poset();
  const auto n = l.size();
  std::vector<UPSeq> seqs;
  std::string mode;
  std::size_t budget = opt.mode == ModeFlag::sampled ? 0 : 20000;
  std::pair<std::size_t, std::size_t> shape{0, 0};
  for (auto [pl, cl] : {std::pair<std::size_t, std::size_t>{2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}}) {
    if (count_sequences(n, pl, cl) <= budget) {
      shape = {pl, cl};
      break;
    }
  }
  if (shape.second > 0) {
    seqs = enumerate_sequences(n, shape.first, shape.second);
    mode = "exhaustive over prefix <= " + std::to_string(shape.first) + ", cycle <= " + std::to_string(shape.second);
  } else {
    if (opt.mode == ModeFlag::exhaustive) throw ResourceError("exhaustive sequence enumeration exceeds 20000 sequences");
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    std::uniform_int_distribution<std::size_t> len(0, 3);
    for (std::size_t i = 0; i < std::min<std::size_t>(opt.samples, 5000); ++i) {
      UPSeq s;
      for (std::size_t k = len(rng); k > 0; --k) s.prefix.push_back(pick(rng));
      for (std::size_t k = len(rng) + 1; k > 0; --k) s.cycle.push_back(pick(rng));
      seqs.push_back(std::move(s));
    }
    for (ElementId x = 0; x < n; ++x) seqs.push_back(UPSeq::constant(x));
    mode = "sampled";
  }
  seqs.insert(seqs.end(), extra.begin(), extra.end());

  PropertyTally constancy("conv.eventually-constant",
                          "on a finite lattice a sequence O-converges iff it is eventually constant", mode);
  PropertyTally oracle("conv.oracle-agreement", "liminf/limsup O-limit agrees with the directed/filtered definition",
                       n <= 5 ? mode : "not applicable (more than 5 elements)");
  PropertyTally uo_eq("conv.uo-equals-o", "every sequence is order bounded, so uO-limits equal O-limits", mode);
  PropertyTally unique("conv.uo-unique", "a sequence has at most one uO-limit", mode);
  PropertyTally mono("conv.monotone-limit", "a monotone sequence converges to the supremum or infimum of its range", mode);
  const bool full_unique = n <= 8;
  std::size_t unique_budget = full_unique ? seqs.size() : 500;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const auto& s = seqs[i];
    const auto lim = o_limit(l, s);
    const bool constant = std::all_of(s.cycle.begin(), s.cycle.end(), [&](ElementId x) { return x == s.cycle.front(); });
    constancy.expect(lim.has_value() == constant, [&] { return describe_seq(p, s); });
    if (n <= 5) {
      for (ElementId x = 0; x < n; ++x) {
        oracle.expect(o_limit_oracle(l, s, x) == (lim == x), [&] { return describe_seq(p, s) + ", x=" + p.name(x); });
      }
    }
    const auto uo = uo_limit(l, s);
    uo_eq.expect(uo.limit == lim, [&] { return describe_seq(p, s); });
    if (i < unique_budget || i >= seqs.size() - extra.size()) {
      std::size_t limits = 0;
      for (ElementId x = 0; x < n; ++x) limits += uo_converges_to(l, s, x) ? 1 : 0;
      unique.expect(limits <= 1, [&] { return describe_seq(p, s) + " has " + std::to_string(limits) + " uO-limits"; });
    }
    bool up = true, down = true;
    for (std::size_t k = 0; k < s.horizon(); ++k) {
      up = up && l.leq(s.at(k), s.at(k + 1));
      down = down && l.leq(s.at(k + 1), s.at(k));
    }
    if (up || down) {
      const auto r = check_monotone_limit(l, s);
      mono.expect(r.holds, [&] { return describe_seq(p, s); });
    }
  }
  if (!full_unique) unique.set_mode(mode + ", first 500 sequences");

  PropertyTally comb("conv.limits-of-joins-meets",
                     "if s -> x and t -> y then s ∨ t -> x ∨ y and s ∧ t -> x ∧ y (O and uO)", mode);
  std::vector<const UPSeq*> convergent;
  for (const auto& s : seqs) {
    if (o_limit(l, s)) convergent.push_back(&s);
    if (convergent.size() >= 120) break;
  }
  for (const auto* a : convergent) {
    for (const auto* b : convergent) {
      const auto x = *o_limit(l, *a);
      const auto y = *o_limit(l, *b);
      const auto j = pointwise(l, *a, *b, LatticeOp::join);
      const auto m = pointwise(l, *a, *b, LatticeOp::meet);
      comb.expect(o_limit(l, j) == l.join(x, y) && o_limit(l, m) == l.meet(x, y) && uo_limit(l, j).limit == l.join(x, y) &&
                      uo_limit(l, m).limit == l.meet(x, y),
                  [&] { return describe_seq(p, *a) + " and " + describe_seq(p, *b); });
    }
  }
  std::vector<Verdict> out;
  for (auto* t : {&constancy, &oracle, &uo_eq, &unique, &mono, &comb}) out.push_back(std::move(*t).done());
  return out;
}

inline std::vector<Verdict> cuts_dm(const FinitePoset& p, const Options& opt) {
  DmOptions dmo;
  dmo.max_elements = opt.max_elements;
  dmo.max_cuts = opt.max_cuts;
  dmo.exhaustive_subset_limit = opt.limit(opt.exhaustive_limit, p.size());
  dmo.samples = std::min<std::size_t>(opt.samples, 2000);
  dmo.seed = opt.seed;
  const auto dm = dm_completion(p, dmo);
  auto out = dm.checks();

  PropertyTally t("cuts.closure-laws",
                  "A ⊆ A^{+-}, A^{+-+-} = A^{+-}, A^{-+-} = A^-, A^{+-+} = A^+, and bounds are antitone", "");
  const auto mode = sweep_all_subsets(p.size(), dmo.exhaustive_subset_limit, dmo.samples, opt.seed, [&](const ElementSet& a) {
    const auto up = upper_bounds(p, a);
    const auto lo = lower_bounds(p, a);
    const auto cl = cut_closure(p, a);
    bool ok = a.subset_of(cl) && cut_closure(p, cl) == cl && lower_bounds(p, upper_bounds(p, lo)) == lo &&
              upper_bounds(p, lower_bounds(p, up)) == up;
    for (ElementId x = 0; x < p.size() && ok; ++x) {
      if (a.contains(x)) continue;
      auto b = a;
      b.insert(x);
      ok = upper_bounds(p, b).subset_of(up) && lower_bounds(p, b).subset_of(lo) && cl.subset_of(cut_closure(p, b));
    }
    t.expect(ok, [&] { return "A = " + format_set(p, a); });
    return true;
  });
  t.set_mode(to_string(mode));
  out.push_back(std::move(t).done());

  std::optional<FiniteLattice> lat;
  try {
    lat.emplace(p);
  } catch (const InputError&) {
  }
  PropertyTally iso("dm.lattice-isomorphic", "the completion of a finite lattice is isomorphic to it via x -> ↓x",
                    lat ? "exhaustive" : "not applicable (input is not a lattice)");
  if (lat) {
    iso.expect(dm_is_isomorphic_to_carrier(dm), [&] {
      return std::to_string(dm.size()) + " cuts for " + std::to_string(p.size()) + " elements";
    });
  }
  out.push_back(std::move(iso).done());
  return out;
}

/// Explicit subset, or the sublattices generated by at most two elements
/// (first 32 in canonical order).
inline std::vector<ElementSet> subject_sublattices(const FiniteLattice& l, const std::optional<ElementSet>& explicit_y) {
  if (explicit_y) {
    require_sublattice(l, *explicit_y);
    return {*explicit_y};
  }
  std::set<ElementSet, CanonicalLess> found;
  const auto n = static_cast<ElementId>(l.size());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a; b < n; ++b) found.insert(l.sublattice_closure(l.poset().make_set({a, b})));
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  if (out.size() > 32) out.resize(32);
  return out;
}

inline std::string describe_property(const FinitePoset& p, const PropertyResult& r) {
  if (r.holds) return "";
  return "A=" + format_set(p, *r.witness_subset) + ", x=" + p.name(*r.witness_x);
}

inline std::vector<Verdict> subobjects(const FiniteLattice& l, const std::optional<ElementSet>& explicit_y, const Options& opt) {
  const auto& p = l.poset();
  const auto ys = subject_sublattices(l, explicit_y);
  const std::string scope = explicit_y ? "" : ", " + std::to_string(ys.size()) + " sublattices";
  std::vector<Verdict> out;
  if (explicit_y) {
    const auto& y = ys.front();
    const auto so = opt.subset_options(y.size());
    const auto a = has_property_A(l, y, so);
    const auto b = has_property_B(l, y, so);
    const auto reg = is_regular(l, y, so);
    PropertyTally ta("subobject.property-a", "every lower bound of A ⊆ Y lies below a lower bound of A in Y",
                     std::string(to_string(a.mode)) + ", " + to_string(a.empty_mode));
    ta.expect(a.holds, [&] { return describe_property(p, a); });
    PropertyTally tb("subobject.property-b", "every upper bound of A ⊆ Y lies above an upper bound of A in Y",
                     std::string(to_string(b.mode)) + ", " + to_string(b.empty_mode));
    tb.expect(b.holds, [&] { return describe_property(p, b); });
    PropertyTally tr("subobject.regular", "suprema and infima existing in Y agree with those in L",
                     std::string(to_string(reg.mode)) + ", " + to_string(reg.empty_mode));
    tr.expect(reg.holds, [&] {
      return "A=" + format_set(p, *reg.witness_subset) + (reg.witness_op == LatticeOp::join ? " (supremum)" : " (infimum)");
    });
    out.push_back(std::move(ta).done());
    out.push_back(std::move(tb).done());
    out.push_back(std::move(tr).done());
  }
  PropertyTally ab("subobject.ab-implies-regular", "Properties (A) and (B) together imply regularity",
                   std::string(to_string(opt.empty_mode)) + scope);
  PropertyTally closed("subobject.o-closed-iff-sup-inf-closed",
                       "a sublattice of a complete lattice is O-closed iff it is closed under nonempty sups and infs",
                       "exhaustive" + scope);
  PropertyTally adh("subobject.adherence-sublattice",
                    "O- and uO-adherences of a sublattice are sublattices; of an ideal, the ideal itself", "exhaustive" + scope);
  PropertyTally convex("subobject.convex-bounded",
                       "a convex sublattice with a maximum has (B), with a minimum has (A)", "nonempty-only" + scope);
  for (const auto& y : ys) {
    const auto so = opt.subset_options(y.size());
    const auto a = has_property_A(l, y, so);
    const auto b = has_property_B(l, y, so);
    if (a.holds && b.holds) {
      const auto reg = is_regular(l, y, so);
      ab.expect(reg.holds, [&] { return "Y=" + format_set(p, y) + ", A=" + format_set(p, *reg.witness_subset); });
    }
    const auto o_adh = first_O_adherence(l, y);
    const auto uo_adh = first_uO_adherence(l, y);
    closed.expect((o_adh == y) == is_sup_inf_closed(l, y, so), [&] { return "Y=" + format_set(p, y); });
    const auto d = classify(l, y);
    adh.expect(l.sublattice_closure(o_adh) == o_adh && l.sublattice_closure(uo_adh) == uo_adh &&
                   (!d.ideal || (o_adh == y && uo_adh == y)),
               [&] { return "Y=" + format_set(p, y); });
    if (d.convex) {
      auto ne = so;
      ne.empty_mode = EmptySubsetMode::exclude;
      if (maximum_of(p, y)) {
        const auto r = has_property_B(l, y, ne);
        convex.expect(r.holds, [&] { return "Y=" + format_set(p, y) + ", " + describe_property(p, r); });
      }
      if (minimum_of(p, y)) {
        const auto r = has_property_A(l, y, ne);
        convex.expect(r.holds, [&] { return "Y=" + format_set(p, y) + ", " + describe_property(p, r); });
      }
    }
  }
  out.push_back(std::move(ab).done());
  out.push_back(std::move(closed).done());
  out.push_back(std::move(adh).done());
  out.push_back(std::move(convex).done());
  return out;
}

inline std::vector<Verdict> preservation(const FiniteLattice& l, const std::optional<ElementSet>& explicit_y,
                                         const Options& opt) {
  const auto& p = l.poset();
  const auto ys = subject_sublattices(l, explicit_y);
  std::vector<Verdict> merged;
  for (const auto& y : ys) {
    PreservationOptions po;
    po.subsets = opt.subset_options(y.size());
    po.family_exhaustive_cuts = opt.limit(12, y.size() + 2);
    po.family_samples = std::min<std::size_t>(opt.samples, 2000);
    const auto rep = check_preservation(l, y, po);
    for (const auto& v : rep.checks) {
      auto it = std::find_if(merged.begin(), merged.end(), [&](const Verdict& m) { return m.id == v.id; });
      if (it == merged.end()) {
        merged.push_back(v);
        if (!v.pass) merged.back().witness = "Y=" + format_set(p, y) + ": " + v.witness;
        if (ys.size() > 1) merged.back().mode += ", " + std::to_string(ys.size()) + " sublattices";
        continue;
      }
      it->cases += v.cases;
      if (it->pass && !v.pass) {
        it->pass = false;
        it->witness = "Y=" + format_set(p, y) + ": " + v.witness;
      }
    }
  }
  return merged;
}

}  // namespace suites

/// Runs the selected suites on every input (concurrently), then the gallery
/// if selected. Results are ordered by suite name, then input order, and
/// verdicts within a suite by property id.
inline RunReport run_suite(const CheckSuiteSpec& spec) {
  spec.validate();
  const auto names = spec.resolved_suites();
  const auto opt = suites::Options::from(spec);
  const auto start = std::chrono::steady_clock::now();

  // Parse all inputs first so input errors surface before any computation.
  std::vector<io::PosetDocument> docs;
  for (const auto& path : spec.inputs) {
    docs.push_back(io::load_poset_document(path));
    if (!spec.subset.empty()) docs.back().subset = io::parse_element_refs(docs.back().poset, spec.subset, "--subset");
  }
  std::vector<std::optional<FiniteLattice>> lattices(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const bool needs_lattice = std::any_of(names.begin(), names.end(), [](const std::string& n) {
      return n == "distributivity" || n == "convergence" || n == "subobjects" || n == "preservation";
    });
    if (needs_lattice) lattices[i] = io::as_lattice(docs[i].poset, docs[i].source);
    if (docs[i].subset && lattices[i]) {
      if (lattices[i]->sublattice_closure(*docs[i].subset) != *docs[i].subset) {
        throw InputError(docs[i].source + ": subset " + format_set(docs[i].poset, *docs[i].subset) + " is not a sublattice");
      }
    }
  }

  struct Job {
    std::string suite;
    std::size_t input;
  };
  std::vector<Job> jobs;
  for (const auto& n : names) {
    if (n == "gallery") continue;
    for (std::size_t i = 0; i < docs.size(); ++i) jobs.push_back({n, i});
  }
  auto run_job = [&](const Job& job) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    r.suite = job.suite;
    r.input = docs[job.input].source;
    r.elements = docs[job.input].poset.size();
    const auto& doc = docs[job.input];
    if (job.suite == "distributivity") r.verdicts = suites::distributivity(*lattices[job.input], opt);
    else if (job.suite == "convergence") r.verdicts = suites::convergence(*lattices[job.input], opt, doc.sequences);
    else if (job.suite == "cuts-dm") r.verdicts = suites::cuts_dm(doc.poset, opt);
    else if (job.suite == "subobjects") r.verdicts = suites::subobjects(*lattices[job.input], doc.subset, opt);
    else if (job.suite == "preservation") r.verdicts = suites::preservation(*lattices[job.input], doc.subset, opt);
    std::stable_sort(r.verdicts.begin(), r.verdicts.end(), [](const Verdict& a, const Verdict& b) { return a.id < b.id; });
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };

  RunReport report;
  if (spec.parallel) {
    std::vector<std::future<SuiteResult>> futures;
    for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, run_job, job));
    for (auto& f : futures) report.suites.push_back(f.get());
  } else {
    for (const auto& job : jobs) report.suites.push_back(run_job(job));
  }
  if (std::find(names.begin(), names.end(), "gallery") != names.end()) {
    for (const auto& g : gallery::gallery_names()) report.gallery.push_back(gallery::run_gallery(g));
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace render {

inline io::ordered_json verdict_json(const Verdict& v) {
  io::ordered_json j;
  j["id"] = v.id;
  j["anchor"] = v.anchor;
  j["mode"] = v.mode;
  j["verdict"] = v.pass ? "PASS" : "FAIL";
  j["cases"] = v.cases;
  j["witness"] = v.witness;
  return j;
}

inline io::ordered_json gallery_json(const gallery::GalleryReport& g) {
  io::ordered_json j;
  j["name"] = g.name;
  j["location"] = g.location;
  j["verdict"] = g.pass() ? "PASS" : "FAIL";
  j["claims"] = io::ordered_json::array();
  for (const auto& c : g.claims) {
    io::ordered_json cj;
    cj["id"] = c.id;
    cj["location"] = c.location;
    cj["verdict"] = c.verdict();
    cj["values"] = io::ordered_json::object();
    for (const auto& [k, v] : c.values) cj["values"][k] = v;
    j["claims"].push_back(std::move(cj));
  }
  return j;
}

/// Everything except the "timing" member is a function of inputs and flags.
inline std::string to_json(const RunReport& r, bool timing) {
  io::ordered_json j;
  j["suites"] = io::ordered_json::array();
  for (const auto& s : r.suites) {
    io::ordered_json sj;
    sj["suite"] = s.suite;
    sj["input"] = s.input;
    sj["elements"] = s.elements;
    sj["verdict"] = s.pass() ? "PASS" : "FAIL";
    sj["properties"] = io::ordered_json::array();
    for (const auto& v : s.verdicts) sj["properties"].push_back(verdict_json(v));
    j["suites"].push_back(std::move(sj));
  }
  j["gallery"] = io::ordered_json::array();
  for (const auto& g : r.gallery) j["gallery"].push_back(gallery_json(g));
  j["summary"] = {{"properties", r.properties()}, {"violations", r.violations()}, {"exit_code", r.exit_code()}};
  if (timing) {
    io::ordered_json t;
    t["total_ms"] = r.wall_ms;
    t["suites"] = io::ordered_json::array();
    for (const auto& s : r.suites) t["suites"].push_back({{"suite", s.suite}, {"input", s.input}, {"ms", s.wall_ms}});
    for (const auto& g : r.gallery) t["suites"].push_back({{"suite", "gallery"}, {"input", g.name}, {"ms", g.wall_ms}});
    j["timing"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

inline std::string gallery_text(const gallery::GalleryReport& g) {
  std::ostringstream out;
  out << "gallery " << g.name << ": " << (g.pass() ? "PASS" : "FAIL") << "\n";
  out << "  " << g.location << "\n";
  for (const auto& c : g.claims) {
    out << "  " << c.verdict() << "  " << c.id << "\n";
    for (const auto& [k, v] : c.values) out << "        " << k << ": " << v << "\n";
  }
  return out.str();
}

inline std::string to_text(const RunReport& r, bool timing) {
  std::ostringstream out;
  for (const auto& s : r.suites) {
    out << "suite " << s.suite << " on " << s.input << " (" << s.elements << " elements): " << (s.pass() ? "PASS" : "FAIL");
    if (timing) out << "  [" << static_cast<long long>(s.wall_ms) << " ms]";
    out << "\n";
    for (const auto& v : s.verdicts) {
      out << "  " << (v.pass ? "PASS" : "FAIL") << "  " << v.id << "  (" << v.mode << ", " << v.cases << " cases)\n";
      out << "        " << v.anchor << "\n";
      if (!v.witness.empty()) out << "        " << (v.pass ? "note: " : "witness: ") << v.witness << "\n";
    }
  }
  for (const auto& g : r.gallery) out << gallery_text(g);
  out << r.properties() << " properties, " << r.violations() << " violations\n";
  return out.str();
}

}  // namespace render

}  // namespace ordlat
