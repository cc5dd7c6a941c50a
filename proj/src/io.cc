#include "pcount/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "pcount/caps.hpp"
#include "pcount/errors.hpp"

namespace pcount {
namespace {

struct LineReader {
  std::istream& in;
  const std::string& source;
  int lineNo = 0;

  // Next non-blank line with comments stripped, split into tokens.
  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineNo;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream words(line);
      std::vector<std::string> tokens;
      for (std::string w; words >> w;) tokens.push_back(w);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(source + ":" + std::to_string(lineNo) + ": " + message);
  }

  int integer(const std::string& token) const {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + token + "'");
    }
    if (used != token.size()) fail("expected an integer, got '" + token + "'");
    return value;
  }

  int vertex(const std::string& token, int n) const {
    const int v = integer(token);
    if (v < 1 || v > n) fail("vertex " + token + " outside 1.." + std::to_string(n));
    return v - 1;
  }
};

std::ifstream openInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

// Reads the graph block; returns the labels line if one was found.
Graph readGraphBlock(LineReader& reader, std::optional<std::vector<std::string>>& labels) {
  auto header = reader.next();
  if (!header) reader.fail("empty graph file");
  if (header->size() != 2 || (*header)[0] != "n") reader.fail("expected 'n <count>'");
  const int n = reader.integer((*header)[1]);
  if (n < 0) reader.fail("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError(reader.source + ": " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(kMaxVertices));
  }
  Graph g(n);
  while (auto tokens = reader.next()) {
    if ((*tokens)[0] == "labels") {
      labels = std::move(tokens);
      break;
    }
    if (tokens->size() != 2) reader.fail("expected 'u v'");
    const Vertex u = reader.vertex((*tokens)[0], n);
    const Vertex v = reader.vertex((*tokens)[1], n);
    if (u == v) reader.fail("self-loop at vertex " + (*tokens)[0]);
    g.addEdge(u, v);
  }
  return g;
}

IntervalBound parseBound(const nlohmann::json& value) {
  if (value.is_number_integer()) return {value.get<int>(), false};
  if (!value.is_string()) throw ParseError("interval bound must be an integer or \"max[-N]\"");
  const std::string text = value.get<std::string>();
  if (text == "max") return {0, true};
  if (text.rfind("max-", 0) == 0) {
    try {
      std::size_t used = 0;
      const int offset = std::stoi(text.substr(4), &used);
      if (used == text.size() - 4 && offset >= 0) return {offset, true};
    } catch (const std::exception&) {
    }
  }
  throw ParseError("bad interval bound \"" + text + "\"");
}

std::vector<IntervalTemplate> parseTemplates(const nlohmann::json& list) {
  if (!list.is_array()) throw ParseError("\"intervals\" must be a list of [lo, hi] pairs");
  std::vector<IntervalTemplate> out;
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("interval must be [lo, hi]");
    out.push_back({parseBound(pair[0]), parseBound(pair[1])});
  }
  return out;
}

std::vector<std::filesystem::path> graphPaths(const nlohmann::json& spec,
                                              const std::filesystem::path& baseDir) {
  if (!spec.contains("graphs") || !spec["graphs"].is_array()) {
    throw ParseError("\"graphs\" must be a list of file paths");
  }
  std::vector<std::filesystem::path> out;
  for (const auto& entry : spec["graphs"]) {
    if (!entry.is_string()) throw ParseError("graph path must be a string");
    std::filesystem::path p = entry.get<std::string>();
    out.push_back(p.is_absolute() ? p : baseDir / p);
  }
  return out;
}

}  // namespace

Graph parseGraph(std::istream& in, const std::string& source) {
  LineReader reader{in, source};
  std::optional<std::vector<std::string>> labels;
  Graph g = readGraphBlock(reader, labels);
  if (labels) reader.fail("unexpected 'labels' line in a plain graph");
  return g;
}

Graph readGraph(const std::filesystem::path& path) {
  auto in = openInput(path);
  return parseGraph(in, path.string());
}

void writeGraph(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

Colouring parseColouring(std::istream& in, int vertexCount, int palette,
                         const std::string& source) {
  LineReader reader{in, source};
  std::vector<int> colours(static_cast<std::size_t>(vertexCount), 0);
  int largest = 0;
  while (auto tokens = reader.next()) {
    if (tokens->size() != 2) reader.fail("expected 'v c'");
    const Vertex v = reader.vertex((*tokens)[0], vertexCount);
    const int c = reader.integer((*tokens)[1]);
    if (c < 1 || (palette > 0 && c > palette)) reader.fail("colour " + (*tokens)[1] + " out of range");
    if (colours[v] != 0) reader.fail("vertex " + (*tokens)[0] + " coloured twice");
    colours[v] = c;
    largest = std::max(largest, c);
  }
  for (int v = 0; v < vertexCount; ++v) {
    if (colours[v] == 0) throw ParseError(source + ": vertex " + std::to_string(v + 1) + " has no colour");
  }
  return Colouring(palette > 0 ? palette : largest, std::move(colours));
}

Colouring readColouring(const std::filesystem::path& path, int vertexCount, int palette) {
  auto in = openInput(path);
  return parseColouring(in, vertexCount, palette, path.string());
}

void writeColouring(std::ostream& out, const Colouring& f) {
  for (int v = 0; v < f.vertexCount(); ++v) out << v + 1 << ' ' << f.colour(v) << '\n';
}

LabelledGraph parseLabelledGraph(std::istream& in, const std::string& source) {
  LineReader reader{in, source};
  std::optional<std::vector<std::string>> labels;
  Graph g = readGraphBlock(reader, labels);
  if (!labels) reader.fail("missing 'labels' line");
  if (reader.next()) reader.fail("unexpected content after 'labels'");
  std::vector<Vertex> labelling;
  for (std::size_t i = 1; i < labels->size(); ++i) {
    labelling.push_back(reader.vertex((*labels)[i], g.order()));
  }
  try {
    return LabelledGraph(std::move(g), std::move(labelling));
  } catch (const DomainError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

LabelledGraph readLabelledGraph(const std::filesystem::path& path) {
  auto in = openInput(path);
  return parseLabelledGraph(in, path.string());
}

void writeLabelledGraph(std::ostream& out, const LabelledGraph& member) {
  writeGraph(out, member.graph());
  out << "labels";
  for (Vertex v : member.labelling()) out << ' ' << v + 1;
  out << '\n';
}

void writeGadgetSidecar(std::ostream& out, const GadgetOutput& gadget) {
  for (std::size_t v = 0; v < gadget.origins.size(); ++v) {
    const VertexOrigin& origin = gadget.origins[v];
    out << (origin.role == VertexRole::kHost ? "host" : "pattern") << ' ' << v + 1 << ' '
        << origin.original + 1 << '\n';
  }
}

PropertyFamily parseProperty(const nlohmann::json& spec, const std::filesystem::path& baseDir) {
  try {
    if (!spec.is_object() || !spec.contains("kind")) throw ParseError("property spec needs \"kind\"");
    const std::string kind = spec["kind"].get<std::string>();
    if (kind == "clique") return cliqueProperty();
    if (kind == "matching") return matchingProperty();
    if (kind == "regular") return regularProperty();
    if (kind == "true") return constantProperty(true);
    if (kind == "false") return constantProperty(false);
    if (kind == "max_degree") return maxDegreeProperty(spec.at("d").get<int>());
    if (kind == "edge_interval") {
      if (spec.contains("k")) return edgeIntervalProperty(parseIntervalSpec(spec, spec["k"].get<int>()));
      return edgeIntervalProperty(parseTemplates(spec.at("intervals")));
    }
    if (kind == "class_iso") {
      std::vector<Graph> graphs;
      for (const auto& p : graphPaths(spec, baseDir)) graphs.push_back(readGraph(p));
      return classIsoProperty(graphs);
    }
    if (kind == "sub_h") {
      std::vector<LabelledGraph> patterns;
      for (const auto& p : graphPaths(spec, baseDir)) patterns.push_back(readLabelledGraph(p));
      return subHProperty(patterns);
    }
    throw ParseError("unknown property kind \"" + kind + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("property spec: ") + e.what());
  }
}

PropertyFamily readProperty(const std::filesystem::path& path) {
  auto in = openInput(path);
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return parseProperty(spec, path.parent_path());
}

IntervalSpec parseIntervalSpec(const nlohmann::json& spec, int k) {
  std::vector<IntervalTemplate> templates;
  try {
    templates = parseTemplates(spec.at("intervals"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("interval spec: ") + e.what());
  }
  std::vector<Interval> raw;
  for (const auto& t : templates) raw.push_back({t.lo.resolve(k), t.hi.resolve(k)});
  return IntervalSpec::make(k, std::move(raw));
}

}  // namespace pcount
