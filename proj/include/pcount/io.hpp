#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "pcount/constructions.hpp"
#include "pcount/graph.hpp"
#include "pcount/properties.hpp"

namespace pcount {

// Text formats. Vertices, labels and colours are 1-based on disk; `#` starts
// a comment. A graph is `n <count>` followed by `u v` edge lines; a colouring
// is `v c` lines, one per vertex; a labelled graph is a graph block plus a
// `labels v_1 ... v_k` line.
Graph parseGraph(std::istream& in, const std::string& source = "<input>");
Graph readGraph(const std::filesystem::path& path);
void writeGraph(std::ostream& out, const Graph& g);

// `palette` 0 means the largest colour used.
Colouring parseColouring(std::istream& in, int vertexCount, int palette = 0,
                         const std::string& source = "<input>");
Colouring readColouring(const std::filesystem::path& path, int vertexCount, int palette = 0);
void writeColouring(std::ostream& out, const Colouring& f);

LabelledGraph parseLabelledGraph(std::istream& in, const std::string& source = "<input>");
LabelledGraph readLabelledGraph(const std::filesystem::path& path);
void writeLabelledGraph(std::ostream& out, const LabelledGraph& member);

// `role v original_id` lines: role is `host` or `pattern`, v is the 1-based
// gadget vertex, original_id the 1-based id in G or H.
void writeGadgetSidecar(std::ostream& out, const GadgetOutput& gadget);

// Property spec JSON. Kinds: edge_interval, clique, class_iso, sub_h,
// matching, regular, max_degree, true, false. Graph paths are resolved
// against `baseDir`.
PropertyFamily parseProperty(const nlohmann::json& spec, const std::filesystem::path& baseDir);
PropertyFamily readProperty(const std::filesystem::path& path);

// Interval lists for a fixed k, as used by intervalWitness:
// {"k": 4, "intervals": [[1, 1], [5, "max"]]}.
IntervalSpec parseIntervalSpec(const nlohmann::json& spec, int k);

}  // namespace pcount
