// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include "corpus.hpp"
#include "oracle.hpp"

#include "ordlat/gallery/gallery.hpp"
#include "ordlat/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ordlat;
using namespace ordlat::gallery;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }
  Outcome done(std::string summary) {
    if (out_.pass) out_.detail = std::move(summary);
    return out_;
  }

 private:
  Outcome out_;
};

std::string claim_value(const GalleryReport& r, const std::string& claim, const std::string& key) {
  if (const auto* c = r.find(claim)) {
    for (const auto& [k, v] : c->values) {
      if (k == key) return v;
    }
  }
  return "<missing>";
}

const ExtRational kPosInf = ExtRational::pos_inf();
const ExtRational kNegInf = ExtRational::neg_inf();

Outcome ac1() {
  Checker c;
  const auto net = closed_sets_net();
  net.validate();
  const auto sup = net_sup(net);
  c.require(sup == SymClosedSet::interval(0, kPosInf), "sup X_n = " + sup.str());
  const auto a = SymClosedSet::interval(kNegInf, -1);
  const auto b = SymClosedSet::interval(kNegInf, 0);
  const auto r = uo_refute(net, sup, {{a, b}});
  c.require(r.verdict == UoRefuteReport::Verdict::refuted, "verdict " + r.verdict_name());
  c.require(r.rows.at(0).mapped == a, "mapped limit " + r.rows.at(0).mapped.str());
  c.require(r.rows.at(0).required == (SymClosedSet::point(0) | a), "required " + r.rows.at(0).required.str());
  c.require(closed_sets_report().pass(), "closed-sets report has a failing claim");
  return c.done("sup X_n = " + sup.str() + "; mapped " + r.rows[0].mapped.str() + " vs required " +
                r.rows[0].required.str() + "; " + r.verdict_name());
}

Outcome ac2() {
  Checker c;
  const auto r = twochain_dm();
  const auto adjoined = claim_value(r, "dm.adjoined", "adjoined");
  c.require(adjoined == "{(1,1),(1,inf)}", "adjoined " + adjoined);
  const auto s = claim_value(r, "jid.failure", "sup x_n");
  const auto lhs = claim_value(r, "jid.failure", "(sup x_n) meet (1,1/2)");
  const auto rhs = claim_value(r, "jid.failure", "sup (x_n meet (1,1/2))");
  c.require(s == "(1,1)" && lhs == "(1,1/2)" && rhs == "(0,1/2)", "triple " + s + ", " + lhs + ", " + rhs);
  const auto stated = twochain_stated_completion();
  c.require(stated.contains({1, 1}) && stated.contains({1, kPosInf}) && !twochain_example_lattice().contains({1, 1}),
            "adjoined points not in the completion carrier");
  c.require(r.pass(), "two-chain report has a failing claim");
  return c.done("adjoined " + adjoined + "; sup x_n = " + s + ", meet = " + lhs + ", sup of meets = " + rhs);
}

Outcome ac3() {
  Checker c;
  const auto closure = RayRingAdherence{}.first_adherence(rayring_y());
  c.require(closure == rayring_stated_closure(), "first adherence " + closure.str());
  c.require(!closure.contains(RayRingElem::zero()), "{0} is in the first adherence");
  c.require(closure.contains(RayRingElem::left(0)) && closure.contains(RayRingElem::right(0)),
            "parameter 0 missing from the closure");
  const auto meet = RayRingElem::left(0).to_set() & RayRingElem::right(0).to_set();
  c.require(meet == SymClosedSet::point(0), "inf in L " + meet.str());
  const auto r = rayring_closure();
  const auto in_closure = claim_value(r, "inf.in-closure", "infimum in closure");
  c.require(in_closure == "∅", "inf within closure " + in_closure);
  const auto trace = iterate_adherence(RayRingAdherence{}, rayring_y(), 4);
  c.require(trace.stabilized && trace.stabilized_at == 1, "adherence did not stabilize at step 1");
  c.require(r.pass(), "ray-ring report has a failing claim");
  return c.done("closure matches (a,b >= 0, {0} excluded); inf in L = " + meet.str() + "; inf in closure = " +
                in_closure + "; stabilizes at step " + std::to_string(trace.stabilized_at));
}

Outcome ac4() {
  Checker c;
  const auto r = exmp3_check();
  const auto a = claim_value(r, "property-b.witness", "A");
  const auto x = claim_value(r, "property-b.witness", "x");
  c.require(a == "(0,[0,1))" && x == "(0,1)", "witness A = " + a + ", x = " + x);
  const auto l = exmp3_lattice();
  const auto sub = exmp3_sublattice();
  const PairSet chain_a{{SpanSet{Span{0, true, 1, false}}, SpanSet{}}};
  c.require(l.upper_bounds(chain_a).contains({0, 1}) && sub.upper_bounds(chain_a).empty(),
            "x = (0,1) is not an upper bound without one inside L0");
  const auto* reg = r.find("regular");
  c.require(reg && reg->pass, "regularity over definable chains fails");
  c.require(r.pass(), "exmp3 report has a failing claim");
  return c.done("(B) fails at A = " + a + ", x = " + x + "; regular over " + claim_value(r, "regular", "subsets") +
                " definable subsets");
}

Outcome ac5() {
  Checker c;
  const auto downsets = corpus::downset_lattices(200);
  const auto randoms = corpus::random_lattices(60);
  const std::set<std::string> always{"lattice.homomorphism-equivalence", "lattice.distributivity-triad",
                                     "lattice.tables-match-bounds"};
  suites::Options opt;
  opt.samples = 500;
  std::size_t verdicts = 0;
  auto run = [&](const corpus::Entry& e, bool distributive) {
    std::vector<Verdict> vs = suites::distributivity(e.lattice, opt);
    if (!distributive) {
      std::erase_if(vs, [&](const Verdict& v) { return !always.count(v.id); });
    }
    for (auto part : {suites::cuts_dm(e.lattice.poset(), opt), suites::subobjects(e.lattice, std::nullopt, opt),
                      suites::preservation(e.lattice, std::nullopt, opt)}) {
      vs.insert(vs.end(), part.begin(), part.end());
    }
    for (const auto& v : vs) {
      ++verdicts;
      c.require(v.pass, e.label + ": " + v.id + " " + v.witness);
    }
  };
  for (const auto& e : downsets) run(e, true);
  for (const auto& e : randoms) run(e, oracle::distributive(oracle::from(e.lattice.poset())));
  return c.done(std::to_string(downsets.size()) + " down-set + " + std::to_string(randoms.size()) +
                " random lattices, " + std::to_string(verdicts) + " property verdicts, 0 violations");
}

Outcome ac6() {
  Checker c;
  std::vector<FiniteLattice> lattices;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& o : oracle::lattices_up_to_iso(n)) lattices.push_back(oracle::to_lattice(o));
  }
  c.require(lattices.size() == 10, "expected 10 lattices up to 5 elements, found " + std::to_string(lattices.size()));
  lattices.push_back(m3_lattice());
  lattices.push_back(n5_lattice());
  std::size_t sequences = 0;
  for (const auto& l : lattices) {
    for (const auto& s : suites::enumerate_sequences(l.size(), 2, 3)) {
      ++sequences;
      const auto lim = o_limit(l, s);
      std::size_t uo_limits = 0;
      for (ElementId x = 0; x < l.size(); ++x) {
        const bool def = o_limit_oracle(l, s, x);
        if (def != (lim == x)) {
          c.require(false, "o_limit disagrees with the oracle at " + suites::describe_seq(l.poset(), s));
        }
        uo_limits += uo_converges_to(l, s, x) ? 1 : 0;
      }
      c.require(uo_limit(l, s).limit == lim, "uo_limit != o_limit at " + suites::describe_seq(l.poset(), s));
      c.require(uo_limits <= 1, "two uO-limits at " + suites::describe_seq(l.poset(), s));
    }
  }
  return c.done(std::to_string(lattices.size()) + " lattices (all 10 with |L| <= 5, plus M3 and N5), " +
                std::to_string(sequences) + " sequences");
}

Outcome ac7() {
  Checker c;
  std::vector<corpus::Entry> all = corpus::downset_lattices(200);
  const std::size_t birkhoff = all.size();
  for (auto& e : corpus::random_lattices(60)) all.push_back(std::move(e));
  all.push_back({"N5", n5_lattice()});
  all.push_back({"M3", m3_lattice()});
  std::size_t exhaustive = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& l = all[i].lattice;
    SubsetSweepOptions opt;
    opt.exhaustive_limit = 15;
    opt.samples = 2000;
    const auto mid = check_mid(l, opt);
    const auto jid = check_jid(l, opt);
    const bool d = is_distributive(l).holds;
    exhaustive += mid.mode == CheckMode::exhaustive ? 1 : 0;
    c.require(mid.holds == d && jid.holds == d, all[i].label + ": MID/JID/distributive disagree");
    if (l.size() <= 15) c.require(mid.mode == CheckMode::exhaustive, all[i].label + ": not exhaustive");
    if (i < birkhoff) c.require(d && mid.holds && jid.holds, all[i].label + ": Birkhoff instance fails");
    if (all[i].label == "N5" || all[i].label == "M3") {
      c.require(!d && !mid.holds && !jid.holds, all[i].label + " passes one of the three");
    }
  }
  return c.done(std::to_string(all.size()) + " lattices (" + std::to_string(exhaustive) +
                " exhaustive); N5 and M3 fail all three; all Birkhoff instances pass");
}

Outcome ac8() {
  const std::string cmd = std::string("bash '") + ORDLAT_E2E_SCRIPT + "' '" + ORDLAT_CLI_PATH + "' '" + ORDLAT_DATA_DIR +
                          "' > ordlat_cli_e2e.log 2>&1";
  const int rc = std::system(cmd.c_str());
  if (rc != 0) return {false, "end-to-end script failed; see ordlat_cli_e2e.log"};
  return {true, "exit codes 0/1/2/3, JSON round trip and DOT determinism verified by the end-to-end script"};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    const char* id;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", 1, ac1}, {"AC2", 1, ac2}, {"AC3", 1, ac3}, {"AC4", 1, ac4},
      {"AC5", 60, ac5}, {"AC6", 120, ac6}, {"AC7", 0, ac7}, {"AC8", 0, ac8},
  };
  std::set<std::string> only(argv + 1, argv + argc);
  int failed = 0;
  for (const auto& cr : criteria) {
    if (!only.empty() && !only.count(cr.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && cr.limit_s > 0 && secs >= cr.limit_s) {
      out = {false, "over the time limit of " + std::to_string(cr.limit_s).substr(0, 5) + " s"};
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << cr.id << " " << (out.pass ? "PASS" : "FAIL") << " (" << secs << " s) " << out.detail;
    std::cout << line.str() << std::endl;
    failed += out.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
