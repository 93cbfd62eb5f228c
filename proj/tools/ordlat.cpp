// ordlat: order-convergence and completion checks on finite lattices, plus
// the symbolic gallery of infinite examples.

#include "ordlat/convergence.hpp"
#include "ordlat/cut_dm.hpp"
#include "ordlat/errors.hpp"
#include "ordlat/gallery/gallery.hpp"
#include "ordlat/generators.hpp"
#include "ordlat/io.hpp"
#include "ordlat/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace ordlat;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_file(path, text);
  }
}

int run_check(CheckSuiteSpec spec, const std::string& mode, const std::string& empty, const std::string& format,
              const std::string& output) {
  spec.mode = parse_mode_flag(mode);
  spec.empty_mode = parse_empty_mode(empty);
  spec.format = io::parse_format(format);
  spec.validate();
  if (spec.format == io::Format::dot) {
    // DOT of the first input with the subset (if any) highlighted; no checks run.
    const auto doc = io::load_poset_document(spec.inputs.front());
    auto subset = doc.subset;
    if (!spec.subset.empty()) subset = io::parse_element_refs(doc.poset, spec.subset, "--subset");
    emit(io::emit_dot(doc.poset, doc.source, subset), output);
    return kExitPass;
  }
  const auto report = run_suite(spec);
  emit(spec.format == io::Format::json ? render::to_json(report, spec.timing) : render::to_text(report, spec.timing), output);
  return report.exit_code();
}

int run_dm(const std::string& input, const std::string& format, const std::string& lattice_out,
           const std::string& dot_out, bool strip, const CheckSuiteSpec& caps) {
  const auto fmt = io::parse_format(format);
  const auto p = io::load_poset(input);
  DmOptions opt;
  opt.max_elements = caps.max_elements;
  opt.max_cuts = caps.max_cuts;
  opt.exhaustive_subset_limit = caps.exhaustive_limit;
  opt.samples = std::min<std::size_t>(caps.samples, 2000);
  opt.seed = caps.seed;
  const auto dm = dm_completion(p, opt);
  const auto completed = strip ? dm_strip_bounds(dm) : dm.lattice().poset();
  if (!lattice_out.empty()) io::write_file(lattice_out, io::emit_poset_json(completed));
  if (!dot_out.empty()) io::write_file(dot_out, io::emit_dot(completed, "DM"));

  if (fmt == io::Format::dot) {
    std::cout << io::emit_dot(completed, "DM");
  } else if (fmt == io::Format::json) {
    io::ordered_json j;
    j["input"] = input;
    j["elements"] = p.size();
    j["cuts"] = dm.size();
    j["stripped"] = strip;
    j["completion"] = io::poset_to_json(completed);
    j["phi"] = io::ordered_json::object();
    for (ElementId x = 0; x < p.size(); ++x) j["phi"][p.name(x)] = format_set(p, dm.cut(dm.phi(x)));
    j["properties"] = io::ordered_json::array();
    for (const auto& v : dm.checks()) j["properties"].push_back(render::verdict_json(v));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "completion of " << input << ": " << p.size() << " elements, " << dm.size() << " cuts\n";
    for (std::size_t i = 0; i < dm.size(); ++i) std::cout << "  cut " << i << ": " << format_set(p, dm.cut(i)) << "\n";
    for (ElementId x = 0; x < p.size(); ++x) std::cout << "  phi(" << p.name(x) << ") = cut " << dm.phi(x) << "\n";
    for (const auto& v : dm.checks()) {
      std::cout << "  " << (v.pass ? "PASS" : "FAIL") << "  " << v.id << "  (" << v.mode << ", " << v.cases << " cases)\n";
      if (!v.witness.empty()) std::cout << "        witness: " << v.witness << "\n";
    }
  }
  return dm.verified() ? kExitPass : kExitViolation;
}

int run_conv(const std::string& input, const std::vector<std::string>& prefix, const std::vector<std::string>& cycle,
             const std::string& format) {
  const auto fmt = io::parse_format(format);
  const auto doc = io::load_poset_document(input);
  const auto l = io::as_lattice(doc.poset, input);
  const auto& p = l.poset();
  std::vector<UPSeq> seqs = doc.sequences;
  if (!cycle.empty()) {
    seqs.clear();
    seqs.push_back(UPSeq{io::parse_element_list(p, prefix, "--prefix"), io::parse_element_list(p, cycle, "--cycle")});
  } else if (!prefix.empty()) {
    throw InputError("--prefix needs --cycle");
  }
  if (seqs.empty()) throw InputError(input + ": no sequence given (use --cycle/--prefix or a \"sequences\" field)");

  io::ordered_json out = io::ordered_json::array();
  std::ostringstream text;
  for (const auto& s : seqs) {
    s.validate(l);
    const auto lim = o_limit(l, s);
    const auto uo = uo_limit(l, s);
    io::ordered_json j;
    j["sequence"] = suites::describe_seq(p, s);
    j["liminf"] = p.name(liminf(l, s));
    j["limsup"] = p.name(limsup(l, s));
    j["o_limit"] = lim ? io::ordered_json(p.name(*lim)) : io::ordered_json(nullptr);
    j["uo_limit"] = uo.limit ? io::ordered_json(p.name(*uo.limit)) : io::ordered_json(nullptr);
    if (uo.witness) j["uo_witness"] = {{"s", p.name(uo.witness->first)}, {"t", p.name(uo.witness->second)}};
    if (l.size() <= kOracleMaxElements && lim) j["oracle_agrees"] = o_limit_oracle(l, s, *lim);
    text << j["sequence"].get<std::string>() << "\n  liminf = " << j["liminf"].get<std::string>()
         << ", limsup = " << j["limsup"].get<std::string>() << "\n  O-limit: " << (lim ? p.name(*lim) : "none")
         << "\n  uO-limit: " << (uo.limit ? p.name(*uo.limit) : "none");
    if (uo.witness) text << " (fails for s=" << p.name(uo.witness->first) << ", t=" << p.name(uo.witness->second) << ")";
    text << "\n";
    out.push_back(std::move(j));
  }
  std::cout << (fmt == io::Format::json ? out.dump(2) + "\n" : text.str());
  return kExitPass;
}

int run_gallery_cmd(const std::string& which, const std::string& format, bool timing) {
  const auto fmt = io::parse_format(format);
  std::vector<std::string> names;
  if (which == "all") names = gallery::gallery_names();
  else names = {which};
  RunReport report;
  for (const auto& n : names) report.gallery.push_back(gallery::run_gallery(n));
  std::cout << (fmt == io::Format::json ? render::to_json(report, timing) : render::to_text(report, timing));
  return report.exit_code();
}

int run_gen(const std::string& kind, const GenSpec& base, const std::string& output) {
  auto k = parse_gen_kind(kind);
  if (!k) {
    throw InputError("unknown generator '" + kind +
                     "' (expected random-poset, downset-lattice, chain, boolean, M3, N5, grid, random-sublattice)");
  }
  GenSpec spec = base;
  spec.kind = *k;
  const auto g = generate(spec);
  const auto& p = std::holds_alternative<FinitePoset>(g) ? std::get<FinitePoset>(g) : std::get<FiniteLattice>(g).poset();
  auto doc = io::poset_to_json(p);
  doc["generator"] = {{"kind", to_string(spec.kind)}, {"size", spec.size},   {"size2", spec.size2},
                      {"edge_probability", spec.edge_probability}, {"target", spec.target}, {"seed", spec.seed}};
  emit(doc.dump(2) + "\n", output);
  return kExitPass;
}

int run_emit(const std::string& input, const std::string& format, const std::string& output) {
  const auto fmt = io::parse_format(format);
  if (fmt == io::Format::text) throw InputError("emit writes json or dot");
  const auto doc = io::load_poset_document(input);
  emit(fmt == io::Format::json ? io::emit_poset_json(doc.poset) : io::emit_dot(doc.poset, "poset", doc.subset), output);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordlat: order convergence, Dedekind-MacNeille completion and sublattice checks"};
  app.require_subcommand(1);

  CheckSuiteSpec spec;
  try {
    apply_env_overrides(spec);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  std::string mode = "auto", empty = "include", format = "text", output;
  bool no_timing = false, sequential = false;

  auto* check = app.add_subcommand("check", "run property suites on lattice files");
  check->add_option("inputs", spec.inputs, "poset/lattice JSON files");
  check->add_option("-s,--suite", spec.suites,
                    "distributivity, convergence, cuts-dm, subobjects, preservation, gallery or all")
      ->delimiter(',')->allow_extra_args(false)
      ->required();
  check->add_option("--subset", spec.subset, "sublattice Y as element names or ids")->delimiter(',')->allow_extra_args(false);
  check->add_option("--mode", mode, "auto, exhaustive or sampled");
  check->add_option("--samples", spec.samples, "random subsets per sampled check");
  check->add_option("--seed", spec.seed, "seed for sampled checks");
  check->add_option("--empty-subsets", empty, "include or exclude the empty subset in (A)/(B)/regularity");
  check->add_option("--exhaustive-limit", spec.exhaustive_limit, "largest subset family enumerated exhaustively (2^n)");
  check->add_option("-f,--format", format, "text, json or dot");
  check->add_option("-o,--output", output, "write the report here instead of stdout");
  check->add_flag("--no-timing", no_timing, "omit wall times");
  check->add_flag("--sequential", sequential, "run suites one after another");

  std::string dm_input, lattice_out, dot_out;
  bool strip = false;
  auto* dm = app.add_subcommand("dm", "Dedekind-MacNeille completion of a poset");
  dm->add_option("input", dm_input, "poset JSON")->required();
  dm->add_option("-f,--format", format, "report format: text, json or dot");
  dm->add_option("--lattice-out", lattice_out, "write the completion as lattice JSON");
  dm->add_option("--dot-out", dot_out, "write the completion as DOT");
  dm->add_flag("--strip", strip, "drop the empty and full cuts unless they are images of elements");
  dm->add_option("--max-elements", spec.max_elements, "refuse larger posets");
  dm->add_option("--max-cuts", spec.max_cuts, "refuse completions with more cuts");

  std::string conv_input;
  std::vector<std::string> prefix, cycle;
  auto* conv = app.add_subcommand("conv", "limits of an eventually periodic sequence");
  conv->add_option("input", conv_input, "lattice JSON")->required();
  conv->add_option("--prefix", prefix, "transient part (names or ids)")->delimiter(',')->allow_extra_args(false);
  conv->add_option("--cycle", cycle, "repeating part (names or ids)")->delimiter(',')->allow_extra_args(false);
  conv->add_option("-f,--format", format, "text or json");

  std::string which = "all";
  auto* gal = app.add_subcommand("gallery", "symbolic reproduction of the infinite examples");
  gal->add_option("name", which, "closed-sets, two-chain-dm, ray-ring, exmp3 or all");
  gal->add_option("-f,--format", format, "text or json");
  gal->add_flag("--no-timing", no_timing, "omit wall times");

  std::string kind;
  GenSpec gen_spec;
  auto* gen = app.add_subcommand("gen", "generate a poset or lattice as JSON");
  gen->add_option("kind", kind, "random-poset, downset-lattice, chain, boolean, M3, N5, grid or random-sublattice")
      ->required();
  gen->add_option("-n,--size", gen_spec.size, "elements, atoms, base poset size or grid rows");
  gen->add_option("--cols", gen_spec.size2, "grid columns");
  gen->add_option("-p,--edge-probability", gen_spec.edge_probability, "edge probability for random posets");
  gen->add_option("--target", gen_spec.target, "generators sampled for a random sublattice");
  gen->add_option("--seed", gen_spec.seed, "random seed");
  gen->add_option("-o,--output", output, "output file");

  std::string emit_input;
  std::string emit_format = "json";
  auto* emit_cmd = app.add_subcommand("emit", "re-serialize a poset file in canonical JSON or DOT");
  emit_cmd->add_option("input", emit_input, "poset JSON")->required();
  emit_cmd->add_option("-f,--format", emit_format, "json or dot");
  emit_cmd->add_option("-o,--output", output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    spec.timing = !no_timing;
    spec.parallel = !sequential;
    if (*check) return run_check(spec, mode, empty, format, output);
    if (*dm) return run_dm(dm_input, format, lattice_out, dot_out, strip, spec);
    if (*conv) return run_conv(conv_input, prefix, cycle, format);
    if (*gal) return run_gallery_cmd(which, format, !no_timing);
    if (*gen) return run_gen(kind, gen_spec, output);
    if (*emit_cmd) return run_emit(emit_input, emit_format, output);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitInput;
}
