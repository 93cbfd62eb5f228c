#include "ordlat/generators.hpp"
#include "ordlat/io.hpp"
#include "ordlat/suites.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace ordlat;

namespace {

std::string data(const std::string& name) { return std::string(ORDLAT_DATA_DIR) + "/" + name; }

io::PosetDocument parse(const std::string& text) {
  return io::parse_poset_document(io::parse_json_text(text, "<test>"), "<test>");
}

}  // namespace

TEST(Io, CoversAndLeqAgree) {
  auto covers = parse(R"({"elements": ["0","a","b","1"], "covers": [["0","a"],["0","b"],["a","1"],["b","1"]]})");
  auto leq = parse(R"({"elements": ["0","a","b","1"], "leq": [[0,1],[0,2],[1,3],[2,3],[0,3]]})");
  EXPECT_EQ(covers.poset, leq.poset);
  auto objects = parse(R"({"elements": [{"id":0,"name":"0"},{"id":1,"name":"a"},{"id":2,"name":"b"},{"id":3,"name":"1"}],
                           "covers": [["0","a"],["0","b"],["a","1"],["b","1"]], "comment": "ignored"})");
  EXPECT_EQ(objects.poset, covers.poset);
}

TEST(Io, SubsetAndSequences) {
  auto doc = io::load_poset_document(data("chain3.json"));
  ASSERT_TRUE(doc.subset);
  EXPECT_EQ(*doc.subset, doc.poset.make_set({0, 1}));
  ASSERT_EQ(doc.sequences.size(), 2u);
  EXPECT_EQ(doc.sequences[0], (UPSeq{{2}, {0, 1}}));
}

TEST(Io, RoundTripIsStable) {
  for (const auto& f : {"n5.json", "m3.json", "b3.json", "antichain2.json", "chain3.json"}) {
    auto p = io::load_poset(data(f));
    auto once = io::emit_poset_json(p);
    auto back = parse(once).poset;
    EXPECT_EQ(back, p) << f;
    EXPECT_EQ(io::emit_poset_json(back), once) << f;
  }
}

TEST(Io, RoundTripRandomPosets) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = random_poset(1 + seed % 10, 0.4, seed);
    auto text = io::emit_poset_json(p);
    EXPECT_EQ(io::emit_poset_json(parse(text).poset), text);
    auto q = parse(text).poset;
    for (ElementId a = 0; a < p.size(); ++a) {
      for (ElementId b = 0; b < p.size(); ++b) {
        EXPECT_EQ(p.leq(a, b), q.leq(*q.find(p.name(a)), *q.find(p.name(b))));
      }
    }
  }
}

TEST(Io, DotIsDeterministic) {
  auto p = io::load_poset(data("n5.json"));
  EXPECT_EQ(io::emit_dot(p), io::emit_dot(io::load_poset(data("n5.json"))));
  auto dm = dm_completion(antichain(2));
  auto dot = io::emit_dot(dm.lattice().poset());
  std::size_t nodes = 0;
  for (std::size_t pos = dot.find("label="); pos != std::string::npos; pos = dot.find("label=", pos + 1)) ++nodes;
  EXPECT_EQ(nodes, 4u);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
}

TEST(Io, Errors) {
  EXPECT_THROW(parse("{\"elements\": [\"a\"], "), InputError);
  EXPECT_THROW(parse(R"({"elements": ["a","b"], "covers": [["a","c"]]})"), InputError);
  EXPECT_THROW(parse(R"({"elements": ["a","b"], "covers": [["a","b"],["b","a"]]})"), InputError);
  EXPECT_THROW(parse(R"({"covers": []})"), InputError);
  EXPECT_THROW(parse(R"({"elements": ["a"], "sequences": [{"prefix": ["a"], "cycle": []}]})"), InputError);
  EXPECT_THROW(io::load_poset(data("broken.json")), InputError);
  EXPECT_THROW(io::load_poset(data("missing.json")), InputError);
  EXPECT_THROW(io::as_lattice(antichain(2), "<test>"), InputError);
  try {
    io::load_poset(data("broken.json"));
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
  }
}

TEST(Suites, DistributivityOnSamples) {
  CheckSuiteSpec spec;
  spec.suites = {"distributivity"};
  spec.inputs = {data("n5.json"), data("b3.json")};
  spec.parallel = false;
  auto r = run_suite(spec);
  ASSERT_EQ(r.suites.size(), 2u);
  EXPECT_EQ(r.exit_code(), kExitViolation);
  const auto find = [&](std::size_t i, const std::string& id) {
    for (const auto& v : r.suites[i].verdicts) {
      if (v.id == id) return v;
    }
    return Verdict{};
  };
  EXPECT_FALSE(find(0, "lattice.distributive").pass);
  EXPECT_FALSE(find(0, "lattice.distributive").witness.empty());
  EXPECT_TRUE(find(0, "lattice.distributivity-triad").pass);
  EXPECT_TRUE(find(0, "lattice.homomorphism-equivalence").pass);
  EXPECT_TRUE(find(1, "lattice.distributive").pass);
}

TEST(Suites, JsonIsDeterministicWithoutTiming) {
  CheckSuiteSpec spec;
  spec.suites = {"cuts-dm", "subobjects", "convergence"};
  spec.inputs = {data("chain3.json")};
  auto a = render::to_json(run_suite(spec), false);
  spec.parallel = false;
  auto b = render::to_json(run_suite(spec), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("wall_ms"), std::string::npos);
  auto j = io::json::parse(a);
  EXPECT_TRUE(j.contains("suites"));
}

TEST(Suites, ExplicitSubsetModes) {
  CheckSuiteSpec spec;
  spec.suites = {"subobjects"};
  spec.inputs = {data("chain3.json")};
  auto literal = run_suite(spec);
  spec.empty_mode = EmptySubsetMode::exclude;
  auto nonempty = run_suite(spec);
  auto verdict = [](const RunReport& r, const std::string& id) {
    for (const auto& v : r.suites.at(0).verdicts) {
      if (v.id == id) return v;
    }
    return Verdict{};
  };
  EXPECT_FALSE(verdict(literal, "subobject.property-a").pass);
  EXPECT_NE(verdict(literal, "subobject.property-a").witness.find("A={}"), std::string::npos);
  EXPECT_TRUE(verdict(nonempty, "subobject.property-a").pass);
  EXPECT_TRUE(verdict(nonempty, "subobject.regular").pass);
}

TEST(Suites, SpecValidation) {
  CheckSuiteSpec spec;
  spec.suites = {"bogus"};
  EXPECT_THROW(spec.validate(), InputError);
  spec.suites = {"distributivity"};
  EXPECT_THROW(spec.validate(), InputError);
  spec.suites = {"gallery"};
  EXPECT_NO_THROW(spec.validate());
  spec.suites = {"all"};
  EXPECT_EQ(spec.resolved_suites().size(), suite_names().size());
  suites::Options o;
  o.mode = ModeFlag::exhaustive;
  EXPECT_THROW(o.limit(12, 30), ResourceError);
  EXPECT_EQ(parse_mode_flag("sampled"), ModeFlag::sampled);
  EXPECT_THROW(parse_mode_flag("fast"), InputError);
}

TEST(Suites, EnvironmentOverrides) {
  CheckSuiteSpec spec;
  ::setenv("ORDLAT_SAMPLES", "123", 1);
  ::setenv("ORDLAT_MAX_CUTS", "7", 1);
  apply_env_overrides(spec);
  EXPECT_EQ(spec.samples, 123u);
  EXPECT_EQ(spec.max_cuts, 7u);
  ::setenv("ORDLAT_SEED", "x1", 1);
  EXPECT_THROW(apply_env_overrides(spec), InputError);
  ::unsetenv("ORDLAT_SAMPLES");
  ::unsetenv("ORDLAT_MAX_CUTS");
  ::unsetenv("ORDLAT_SEED");
}

TEST(Suites, SequenceEnumeration) {
  EXPECT_EQ(suites::count_sequences(2, 1, 2), suites::enumerate_sequences(2, 1, 2).size());
  // prefixes of length 0..1 (1 + 2) times cycles of length 1..2 (2 + 4)
  EXPECT_EQ(suites::enumerate_sequences(2, 1, 2).size(), 18u);
}
