#include "pcount/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pcount/caps.hpp"
#include "pcount/constructions.hpp"
#include "pcount/counting.hpp"
#include "pcount/errors.hpp"
#include "pcount/io.hpp"
#include "pcount/properties.hpp"
#include "pcount/ramsey.hpp"
#include "pcount/random.hpp"
#include "pcount/reductions.hpp"
#include "pcount/verify.hpp"

namespace pcount::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kQuantities = {
    "str-emb", "sub-ind", "str-emb-class", "col-str-emb-class", "col-sub-ind",
    "col-clique", "sub-ind-class", "aut", "alpha", "interesting"};

void require(const std::string& value, const std::string& flag) {
  if (value.empty()) throw ParseError("missing " + flag);
}

int requireInt(int value, const std::string& flag) {
  if (value < 0) throw ParseError("missing or negative " + flag);
  return value;
}

Graph loadGraph(const RunConfig& c) {
  require(c.graphPath, "--graph");
  return readGraph(c.graphPath);
}

Graph loadPattern(const RunConfig& c) {
  require(c.patternPath, "--pattern");
  return readGraph(c.patternPath);
}

Colouring loadColouring(const RunConfig& c, const Graph& g, int palette) {
  require(c.colouringPath, "--colouring");
  return readColouring(c.colouringPath, g.order(), palette);
}

PropertyFamily loadProperty(const RunConfig& c) {
  require(c.propertyPath, "--property");
  return readProperty(c.propertyPath);
}

EnumerationOptions enumeration(const RunConfig& c) {
  if (c.workers < 1) throw ParseError("--workers must be positive");
  return EnumerationOptions{c.workers};
}

// "a/b" or a plain decimal such as 0.35, converted exactly.
std::pair<std::uint64_t, std::uint64_t> parseProbability(const std::string& text) {
  auto fail = [&] { throw ParseError("bad probability '" + text + "'"); };
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      num = std::stoull(text.substr(0, slash));
      den = std::stoull(text.substr(slash + 1));
    } else {
      const auto dot = text.find('.');
      const std::string whole = text.substr(0, dot);
      const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
      if (frac.size() > 9 || text.find_first_not_of("0123456789.") != std::string::npos) fail();
      num = whole.empty() ? 0 : std::stoull(whole);
      for (char ch : frac) {
        num = num * 10 + static_cast<std::uint64_t>(ch - '0');
        den *= 10;
      }
    }
  } catch (const std::logic_error&) {
    fail();
  }
  if (den == 0 || num > den) fail();
  return {num, den};
}

void emit(std::ostream& out, const RunConfig& c, const Json& json, const std::string& text) {
  if (c.json) {
    out << json.dump(2) << '\n';
  } else {
    out << text;
  }
}

void writeFileOrStream(const std::string& path, std::ostream& out, const std::string& body) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write " + path);
  file << body;
}

Json edgesJson(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return edges;
}

Json subsetJson(VertexSubset s) {
  Json members = Json::array();
  for (Vertex v : s.members()) members.push_back(v + 1);
  return members;
}

std::string subsetText(VertexSubset s) {
  std::string out;
  for (Vertex v : s.members()) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

Json labelledJson(const LabelledGraph& member) {
  Json labels = Json::array();
  for (Vertex v : member.labelling()) labels.push_back(v + 1);
  return {{"n", member.size()}, {"edges", edgesJson(member.graph())}, {"labels", labels}};
}

std::string labelledText(const LabelledGraph& member) {
  std::ostringstream text;
  writeLabelledGraph(text, member);
  return text.str();
}

int runCount(const RunConfig& c, std::ostream& out) {
  const std::string& q = c.quantity;
  Count result;
  if (q == "str-emb" || q == "sub-ind") {
    const Graph h = loadPattern(c);
    const Graph g = loadGraph(c);
    result = q == "str-emb" ? strEmb(h, g) : subInd(h, g);
  } else if (q == "col-sub-ind") {
    const Graph h = loadPattern(c);
    const Graph g = loadGraph(c);
    result = colSubInd(h, g, loadColouring(c, g, h.order()));
  } else if (q == "col-clique") {
    const Graph g = loadGraph(c);
    const int k = requireInt(c.k, "--k");
    result = colClique(g, loadColouring(c, g, k), k);
  } else if (q == "str-emb-class" || q == "col-str-emb-class") {
    const Graph g = loadGraph(c);
    const int k = requireInt(c.k, "--k");
    const PropertyFamily phi = loadProperty(c);
    requireWithinCap(k, labelCap(), "--k");
    auto accept = [&](std::uint64_t mask) { return phi.evaluateMask(k, mask); };
    if (q == "str-emb-class") {
      result = countAcceptedTuples(g, k, accept, nullptr, enumeration(c));
    } else {
      const Colouring f = loadColouring(c, g, k);
      result = countAcceptedTuples(g, k, accept, &f, enumeration(c));
    }
  } else if (q == "sub-ind-class") {
    const Graph g = loadGraph(c);
    const int k = requireInt(c.k, "--k");
    const IsoMembership cls(loadProperty(c), k);
    auto walk = [&](auto& self, Vertex from, int left, Bits chosen) -> std::uint64_t {
      if (left == 0) return cls.containsIsomorphicTo(g.induced(chosen)) ? 1 : 0;
      std::uint64_t total = 0;
      for (Vertex v = from; v + left <= g.order(); ++v) total += self(self, v + 1, left - 1, chosen | bit(v));
      return total;
    };
    const std::uint64_t total = walk(walk, 0, k, 0);
    result = total;
  } else if (q == "aut") {
    result = countAutomorphisms(loadGraph(c));
  } else if (q == "alpha") {
    require(c.labelledPath, "--labelled");
    result = alphaH(loadProperty(c), readLabelledGraph(c.labelledPath));
  } else if (q == "interesting") {
    result = countInteresting(loadGraph(c), requireInt(c.k, "--k"));
  } else {
    throw ParseError("unknown quantity '" + q + "'");
  }
  emit(out, c, Json{{"quantity", q}, {"count", toDecimal(result)}}, toDecimal(result) + "\n");
  return kOk;
}

int runConstruct(const RunConfig& c, std::ostream& out) {
  const Graph g = loadGraph(c);
  const Graph h = loadPattern(c);
  if (c.core.empty()) throw ParseError("missing --core");
  std::vector<Vertex> core;
  for (int v : c.core) {
    if (v < 1 || v > h.order()) throw ParseError("core vertex " + std::to_string(v) + " outside the pattern");
    core.push_back(v - 1);
  }
  const VertexSubset u = VertexSubset::of(core);
  const Colouring f = loadColouring(c, g, u.size());
  GadgetOutput gadget;
  if (c.mode == "clique") {
    gadget = buildCliqueGadget(g, f, h, u);
  } else if (c.mode == "indep") {
    gadget = buildIndepGadget(g, f, h, u);
  } else {
    throw ParseError("--mode must be clique or indep");
  }
  std::ostringstream graphText;
  std::ostringstream colouringText;
  std::ostringstream sidecarText;
  writeGraph(graphText, gadget.graph);
  writeColouring(colouringText, gadget.colouring);
  writeGadgetSidecar(sidecarText, gadget);
  if (!c.outputPath.empty()) {
    writeFileOrStream(c.outputPath + ".graph", out, graphText.str());
    writeFileOrStream(c.outputPath + ".colouring", out, colouringText.str());
    writeFileOrStream(c.outputPath + ".sidecar", out, sidecarText.str());
  }
  Json origins = Json::array();
  for (const VertexOrigin& o : gadget.origins) {
    origins.push_back({{"role", o.role == VertexRole::kHost ? "host" : "pattern"},
                       {"original", o.original + 1}});
  }
  Json json = {{"mode", toString(gadget.mode)},
               {"vertices", gadget.graph.order()},
               {"palette", gadget.colouring.paletteSize()},
               {"edges", edgesJson(gadget.graph)},
               {"colouring", gadget.colouring.colours()},
               {"origins", origins}};
  std::string text = "# gadget " + std::string(toString(gadget.mode)) + " vertices " +
                     std::to_string(gadget.graph.order()) + " palette " +
                     std::to_string(gadget.colouring.paletteSize()) + "\n";
  if (c.outputPath.empty()) {
    text += graphText.str() + "# colouring\n" + colouringText.str() + "# sidecar\n" + sidecarText.str();
  }
  emit(out, c, json, text);
  return kOk;
}

int runReduce(const RunConfig& c, std::ostream& out) {
  const Graph g = loadGraph(c);
  const PropertyFamily phi = loadProperty(c);
  ReductionResult result;
  if (c.mode == "complement") {
    const int k = requireInt(c.k, "--k");
    BruteForceOracle oracle(complementFamily(phi), enumeration(c));
    result = complementReduce(phi, g, k, oracle);
  } else if (c.mode == "decolour") {
    const Colouring f = loadColouring(c, g, c.k > 0 ? c.k : 0);
    BruteForceOracle oracle(phi, enumeration(c));
    result = decolour(phi, g, f, oracle);
  } else if (c.mode == "solve-mcc") {
    const Colouring f = loadColouring(c, g, c.k > 0 ? c.k : 0);
    result = solveMulticolourClique(g, f, phi, requireInt(c.kMax, "--kmax"), enumeration(c));
  } else {
    throw ParseError("reduce mode must be complement, decolour or solve-mcc");
  }
  if (!c.transcriptPath.empty()) {
    writeFileOrStream(c.transcriptPath, out,
                      c.json ? result.transcript.toJson().dump(2) + "\n" : result.transcript.toText());
  }
  emit(out, c, result.transcript.toJson(), toDecimal(result.count) + "\n");
  return kOk;
}

int runWitness(const RunConfig& c, std::ostream& out) {
  if (c.mode == "good") {
    const PropertyFamily phi = loadProperty(c);
    const int kPrime = requireInt(c.kPrime, "--kprime");
    const auto w = findGoodWitness(phi, kPrime, requireInt(c.kMax, "--kmax"));
    if (!w) {
      emit(out, c, Json{{"found", false}}, "none\n");
      return kOk;
    }
    emit(out, c,
         Json{{"found", true},
              {"k", w->k},
              {"mode", toString(w->mode)},
              {"core", subsetJson(w->core)},
              {"member", labelledJson(w->member)}},
         "k " + std::to_string(w->k) + "\nmode " + toString(w->mode) + "\ncore " +
             subsetText(w->core) + "\n" + labelledText(w->member));
    return kOk;
  }
  if (c.mode == "interval") {
    require(c.propertyPath, "--property");
    std::ifstream in(c.propertyPath);
    if (!in) throw ParseError("cannot open " + c.propertyPath);
    nlohmann::json spec;
    try {
      spec = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(c.propertyPath + ": " + e.what());
    }
    if (spec.value("kind", "") != "edge_interval") throw ParseError("interval witness needs an edge_interval spec");
    int k = c.k;
    if (k < 0 && spec.contains("k")) k = spec["k"].get<int>();
    const IntervalSpec intervals = parseIntervalSpec(spec, requireInt(k, "--k"));
    const IntervalWitness w = intervalWitness(intervals, requireInt(c.kPrime, "--kprime"));
    const PropertyFamily phi = edgeIntervalProperty(w.effective);
    const bool good = w.mode == GadgetMode::kClique
                          ? isGoodForCliques(w.member, phi, c.kPrime).has_value()
                          : isGoodForIndepSets(w.member, phi, c.kPrime).has_value();
    emit(out, c,
         Json{{"mode", toString(w.mode)},
              {"complemented", w.complemented},
              {"edges", w.edges},
              {"core", subsetJson(w.core)},
              {"good", good},
              {"member", labelledJson(w.member)}},
         "mode " + std::string(toString(w.mode)) + "\ncomplemented " +
             (w.complemented ? "yes" : "no") + "\nedges " + std::to_string(w.edges) + "\ncore " +
             subsetText(w.core) + "\ngood " + (good ? "yes" : "no") + "\n" + labelledText(w.member));
    return good ? kOk : kVerificationFailed;
  }
  if (c.mode == "bounded-layers") {
    const PropertyFamily phi = loadProperty(c);
    const BoundedLayersReport r =
        checkBoundedLayersCondition(phi, requireInt(c.k, "--k"), requireInt(c.kPrime, "--kprime"));
    emit(out, c,
         Json{{"k", r.k},
              {"kprime", r.kPrime},
              {"r", r.r},
              {"bound", toFraction(r.bound)},
              {"applicable", r.applicable},
              {"holds", r.holds},
              {"empty_class", r.emptyClass},
              {"note", r.note}},
         "r " + std::to_string(r.r) + "\nbound " + toFraction(r.bound) + "\napplicable " +
             (r.applicable ? "yes" : "no") + "\nholds " + (r.holds ? "yes" : "no") +
             (r.note.empty() ? "" : "\nnote " + r.note) + "\n");
    return kOk;
  }
  throw ParseError("witness mode must be good, interval or bounded-layers");
}

int runVerify(const RunConfig& c, std::ostream& out) {
  SweepOptions options;
  options.samples = c.samples;
  options.seed = c.seed;
  options.maxN = c.maxN;
  options.enumeration = enumeration(c);
  if (options.samples < 0) throw ParseError("--samples must be non-negative");
  if (options.maxN < 1 || options.maxN > kMaxVertices) throw ParseError("--max-n out of range");
  std::vector<std::string> suites;
  if (c.mode == "all") {
    suites = sweepNames();
  } else {
    suites.push_back(c.mode);
  }
  bool ok = true;
  Json reports = Json::array();
  std::string text;
  for (const auto& name : suites) {
    const SweepReport report = runSweep(name, options);
    ok = ok && report.ok();
    reports.push_back(report.toJson());
    text += report.toText();
  }
  emit(out, c, suites.size() == 1 ? reports[0] : reports, text);
  return ok ? kOk : kVerificationFailed;
}

int runGen(const RunConfig& c, std::ostream& out) {
  Rng rng(c.seed);
  const int n = requireInt(c.n, "--n");
  if (n > kMaxVertices) throw CapacityError("--n exceeds the cap of " + std::to_string(kMaxVertices));
  std::ostringstream body;
  if (c.mode == "graph") {
    const auto [num, den] = parseProbability(c.probability);
    writeGraph(body, randomGraph(n, num, den, rng));
  } else if (c.mode == "colouring") {
    const int k = requireInt(c.k, "--k");
    if (k < 1) throw ParseError("--k must be positive");
    writeColouring(body, randomColouring(n, k, rng));
  } else {
    throw ParseError("gen mode must be graph or colouring");
  }
  writeFileOrStream(c.outputPath, out, "# seed " + std::to_string(c.seed) + "\n" + body.str());
  return kOk;
}

int exitCodeFor(const Error& e) {
  const std::string& code = e.code();
  if (code == "capacity") return kCapacity;
  if (code == "parse" || code == "domain" || code == "invalid-tuple" || code == "precondition" ||
      code == "infeasible-instance") {
    return kUsage;
  }
  return kVerificationFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "count") return runCount(config, out);
    if (config.command == "construct") return runConstruct(config, out);
    if (config.command == "reduce") return runReduce(config, out);
    if (config.command == "witness") return runWitness(config, out);
    if (config.command == "verify") return runVerify(config, out);
    if (config.command == "gen") return runGen(config, out);
    throw ParseError("unknown command '" + config.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << '\n';
    return exitCodeFor(e);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact subgraph-counting and reduction toolkit", "pcount"};
  app.require_subcommand(1);

  auto graphOpt = [&](CLI::App* sub) { sub->add_option("--graph", c.graphPath, "Host graph file"); };
  auto jsonOpt = [&](CLI::App* sub) { sub->add_flag("--json", c.json, "Machine-readable output"); };
  auto workersOpt = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "Worker threads for enumeration");
  };

  auto* count = app.add_subcommand("count", "Evaluate a counting quantity");
  count->add_option("--quantity", c.quantity, "Quantity to count")
      ->required()
      ->check(CLI::IsMember(kQuantities));
  graphOpt(count);
  count->add_option("--pattern", c.patternPath, "Pattern graph file");
  count->add_option("--colouring", c.colouringPath, "Colouring file");
  count->add_option("--property", c.propertyPath, "Property spec (JSON)");
  count->add_option("--labelled", c.labelledPath, "Labelled graph file");
  count->add_option("--k", c.k, "Parameter k");
  workersOpt(count);
  jsonOpt(count);

  auto* construct = app.add_subcommand("construct", "Build a clique or independent-set gadget");
  construct->add_option("--mode", c.mode, "clique or indep")
      ->required()
      ->check(CLI::IsMember({"clique", "indep"}));
  graphOpt(construct);
  construct->add_option("--colouring", c.colouringPath, "Colouring of the host graph");
  construct->add_option("--pattern", c.patternPath, "Pattern graph H");
  construct->add_option("--core", c.core, "Core vertices of H (1-based)")->delimiter(',');
  construct->add_option("--out", c.outputPath, "Write <out>.graph, <out>.colouring, <out>.sidecar");
  jsonOpt(construct);

  auto* reduce = app.add_subcommand("reduce", "Run a reduction pipeline");
  reduce->add_option("mode", c.mode, "complement, decolour or solve-mcc")
      ->required()
      ->check(CLI::IsMember({"complement", "decolour", "solve-mcc"}));
  graphOpt(reduce);
  reduce->add_option("--colouring", c.colouringPath, "Colouring file");
  reduce->add_option("--property", c.propertyPath, "Property spec (JSON)");
  reduce->add_option("--k", c.k, "Parameter k (palette size for coloured modes)");
  reduce->add_option("--kmax", c.kMax, "Largest oracle parameter for solve-mcc");
  reduce->add_option("--transcript", c.transcriptPath, "Write the transcript here");
  workersOpt(reduce);
  jsonOpt(reduce);

  auto* witness = app.add_subcommand("witness", "Search for or construct hardness witnesses");
  witness->add_option("mode", c.mode, "good, interval or bounded-layers")
      ->required()
      ->check(CLI::IsMember({"good", "interval", "bounded-layers"}));
  witness->add_option("--property", c.propertyPath, "Property spec (JSON)");
  witness->add_option("--k", c.k, "Pattern size k");
  witness->add_option("--kprime", c.kPrime, "Clique size k'");
  witness->add_option("--kmax", c.kMax, "Largest k searched");
  jsonOpt(witness);

  std::vector<std::string> suites = sweepNames();
  suites.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run a randomized verification sweep");
  verify->add_option("suite", c.mode, "Sweep name or all")->required()->check(CLI::IsMember(suites));
  verify->add_option("--samples", c.samples, "Instances per sweep");
  verify->add_option("--seed", c.seed, "Generator seed");
  verify->add_option("--max-n", c.maxN, "Largest host graph");
  workersOpt(verify);
  jsonOpt(verify);

  auto* gen = app.add_subcommand("gen", "Generate a random graph or colouring");
  gen->add_option("mode", c.mode, "graph or colouring")
      ->required()
      ->check(CLI::IsMember({"graph", "colouring"}));
  gen->add_option("--n", c.n, "Vertex count");
  gen->add_option("--p", c.probability, "Edge probability, a/b or decimal");
  gen->add_option("--k", c.k, "Palette size");
  gen->add_option("--seed", c.seed, "Generator seed");
  gen->add_option("--out", c.outputPath, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    if (auto nl = message.find('\n'); nl != std::string::npos) message.erase(nl);
    err << "error: usage: " << message << '\n';
    return kUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace pcount::cli
