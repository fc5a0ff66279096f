#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehs/certificate.hpp"
#include "ehs/cograph.hpp"
#include "ehs/geometry.hpp"
#include "ehs/graph.hpp"
#include "ehs/pipeline.hpp"
#include "ehs/poset.hpp"

namespace ehs {

using json = nlohmann::json;

// Every *_from_json throws invalid_input on malformed documents.

json to_json(const Graph& g);  // {"n", "edges": [[u, v], ...]}
Graph graph_from_json(const json& doc);

/// Text format: "n m" followed by m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

struct PosetDocument {
  Poset poset;
  std::optional<std::vector<std::vector<Vertex>>> realizer;
};

/// {"n", "relations": [[a, b], ...]} with a < b, plus an optional "realizer".
json to_json(const Poset& p, const std::vector<std::vector<Vertex>>* realizer = nullptr);
PosetDocument poset_from_json(const json& doc);

json to_json(const BlockCertificate& cert);  // {"kind", "t", "c", "host_n", "blocks"}
BlockCertificate certificate_from_json(const json& doc);

/// Nested {"kind": "join" | "union", "children": [...]} / {"kind": "leaf", "vertices": [...]}.
json to_json(const Cotree& tree);
Cotree cotree_from_json(const json& doc);

json to_json(const RamseyResult& r);

json to_json(const CurveFamily& family);  // {"curves": [[[x, y], ...], ...]}
CurveFamily curves_from_json(const json& doc);

json to_json(const PipelineConfig& config);
json to_json(const RunRecord& record);

enum class InputKind { Graph, Poset, Curves };

const char* to_string(InputKind kind) noexcept;

/// An input file with the graph it denotes: a poset denotes its
/// incomparability graph, curves their intersection graph.
struct LoadedInput {
  InputKind kind = InputKind::Graph;
  Graph graph;
  std::optional<Poset> poset;
  std::optional<std::vector<std::vector<Vertex>>> realizer;
  std::optional<CurveFamily> curves;
};

/// Detects the format from the content: JSON with "curves", "relations" or
/// "edges", otherwise the edge-list text format.
LoadedInput parse_input(const std::string& text);
LoadedInput load_input(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace ehs
