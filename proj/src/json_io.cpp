#include "ehs/json_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ehs/errors.hpp"

namespace ehs {

namespace {

// Runs `body`, turning JSON access errors into invalid_input naming `what`.
template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw invalid_input(std::string("malformed ") + what + ": " + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw invalid_input(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

int read_n(const json& doc) {
  const auto n = field(doc, "n").get<long long>();
  if (n < 0 || n > (1 << 24)) throw invalid_input("field \"n\" out of range: " + std::to_string(n));
  return static_cast<int>(n);
}

std::vector<Edge> read_pairs(const json& list) {
  std::vector<Edge> out;
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2) throw invalid_input("pair entries must be two-element arrays");
    out.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
  }
  return out;
}

json vertex_list(const VertexSet& s) { return json(s.vertices()); }

}  // namespace

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& doc) {
  return guarded("graph", [&] {
    const int n = read_n(doc);
    return Graph::from_edges(n, read_pairs(field(doc, "edges")));
  });
}

Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0 || n > (1 << 24))
    throw invalid_input("edge list must start with non-negative \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    Vertex u = 0, v = 0;
    if (!(in >> u >> v)) throw invalid_input("edge list ended after " + std::to_string(i) + " of " + std::to_string(m) +
                                             " edges");
    edges.emplace_back(u, v);
  }
  std::string extra;
  if (in >> extra) throw invalid_input("trailing content after edge list: \"" + extra + "\"");
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

json to_json(const Poset& p, const std::vector<std::vector<Vertex>>* realizer) {
  json relations = json::array();
  for (const auto& [a, b] : p.relations()) relations.push_back({a, b});
  json doc{{"n", p.size()}, {"relations", std::move(relations)}};
  if (realizer) doc["realizer"] = *realizer;
  return doc;
}

PosetDocument poset_from_json(const json& doc) {
  return guarded("poset", [&] {
    const int n = read_n(doc);
    PosetDocument out{Poset::from_relations(n, read_pairs(field(doc, "relations"))), std::nullopt};
    if (doc.contains("realizer")) {
      auto orders = doc.at("realizer").get<std::vector<std::vector<Vertex>>>();
      if (orders.empty()) throw invalid_input("realizer must list at least one order");
      if (!(Poset::from_linear_orders(n, orders) == out.poset))
        throw invalid_input("realizer does not generate the listed relations");
      out.realizer = std::move(orders);
    }
    return out;
  });
}

json to_json(const BlockCertificate& cert) {
  json blocks = json::array();
  for (const auto& b : cert.blocks) blocks.push_back(vertex_list(b));
  return {{"kind", to_string(cert.kind)}, {"t", cert.t()},         {"c", cert.exponent},
          {"host_n", cert.host_n},        {"blocks", std::move(blocks)}};
}

BlockCertificate certificate_from_json(const json& doc) {
  return guarded("certificate", [&] {
    BlockCertificate cert;
    const auto kind = field(doc, "kind").get<std::string>();
    if (kind == "complete")
      cert.kind = BlockKind::Complete;
    else if (kind == "empty")
      cert.kind = BlockKind::Empty;
    else
      throw invalid_input("unknown certificate kind \"" + kind + "\"");
    cert.exponent = field(doc, "c").get<double>();
    cert.host_n = field(doc, "host_n").get<int>();
    for (const auto& block : field(doc, "blocks"))
      cert.blocks.push_back(VertexSet::from_unsorted(block.get<std::vector<Vertex>>()));
    if (doc.contains("t") && doc.at("t").get<int>() != cert.t())
      throw invalid_input("field \"t\" disagrees with the number of blocks");
    return cert;
  });
}

namespace {

json cotree_node(const Cotree& tree, int id) {
  const auto& node = tree.node(id);
  if (node.kind == CotreeKind::Leaf) return {{"kind", "leaf"}, {"vertices", vertex_list(node.vertices)}};
  json children = json::array();
  for (int child : node.children) children.push_back(cotree_node(tree, child));
  return {{"kind", to_string(node.kind)}, {"children", std::move(children)}};
}

int add_cotree_node(Cotree& tree, const json& doc, bool root) {
  const auto kind = field(doc, "kind").get<std::string>();
  if (kind == "leaf") {
    auto vertices = VertexSet::from_unsorted(field(doc, "vertices").get<std::vector<Vertex>>());
    if (root) {
      tree = Cotree(std::move(vertices));
      return tree.root();
    }
    return tree.add_leaf(std::move(vertices));
  }
  CotreeKind label;
  if (kind == "join")
    label = CotreeKind::Join;
  else if (kind == "union")
    label = CotreeKind::Union;
  else
    throw invalid_input("unknown cotree node kind \"" + kind + "\"");
  std::vector<int> children;
  for (const auto& child : field(doc, "children")) children.push_back(add_cotree_node(tree, child, false));
  if (children.empty()) throw invalid_input("internal cotree node without children");
  return tree.add_internal(label, std::move(children));
}

}  // namespace

json to_json(const Cotree& tree) { return cotree_node(tree, tree.root()); }

Cotree cotree_from_json(const json& doc) {
  return guarded("cotree", [&] {
    Cotree tree;
    add_cotree_node(tree, doc, true);
    // Leaf sets must be pairwise disjoint.
    std::size_t total = 0;
    for (int id : tree.leaves()) total += tree.node(id).vertices.size();
    if (tree.vertices().size() != total) throw invalid_input("cotree leaves overlap");
    return tree;
  });
}

json to_json(const RamseyResult& r) {
  return {{"clique", vertex_list(r.clique)},
          {"independent", vertex_list(r.independent)},
          {"clique_size", r.clique.size()},
          {"independent_size", r.independent.size()}};
}

json to_json(const CurveFamily& family) {
  json curves = json::array();
  for (const auto& line : family.curves()) {
    json points = json::array();
    for (const auto& p : line) points.push_back({p.x, p.y});
    curves.push_back(std::move(points));
  }
  return {{"curves", std::move(curves)}};
}

CurveFamily curves_from_json(const json& doc) {
  return guarded("curves", [&] {
    std::vector<Polyline> curves;
    for (const auto& line : field(doc, "curves")) {
      Polyline points;
      for (const auto& p : line) {
        if (!p.is_array() || p.size() != 2) throw invalid_input("points must be [x, y] arrays");
        points.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
      }
      curves.push_back(std::move(points));
    }
    return CurveFamily(std::move(curves));
  });
}

json to_json(const PipelineConfig& config) {
  return {{"lambda", config.lambda},
          {"epsilon", config.algo.epsilon},
          {"epsilon_safe", config.algo.epsilon_safe},
          {"delta", config.algo.delta},
          {"retry_cap", config.algo.retry_cap},
          {"start_with_safe_epsilon", config.algo.start_with_safe_epsilon},
          {"allow_safe_fallback", config.algo.allow_safe_fallback},
          {"separator", to_string(config.separator)},
          {"witness_mode", to_string(config.witness_mode)}};
}

json to_json(const RunRecord& record) {
  json certs = json::array();
  for (const auto& c : record.certificates) certs.push_back(to_json(c));
  json doc{{"input_digest", record.input_digest},
           {"seed", record.seed},
           {"config", to_json(record.config)},
           {"c", record.exponent},
           {"certificates", std::move(certs)},
           {"verdicts", record.verdicts},
           {"wall_ms", record.wall_ms}};
  if (record.ramsey) doc["ramsey"] = to_json(*record.ramsey);
  return doc;
}

const char* to_string(InputKind kind) noexcept {
  switch (kind) {
    case InputKind::Graph: return "graph";
    case InputKind::Poset: return "poset";
    case InputKind::Curves: return "curves";
  }
  return "unknown";
}

LoadedInput parse_input(const std::string& text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  LoadedInput out;
  if (first < text.size() && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw invalid_input(std::string("invalid JSON: ") + e.what());
    }
    if (doc.contains("curves")) {
      out.kind = InputKind::Curves;
      out.curves = curves_from_json(doc);
      out.graph = intersection_graph(*out.curves);
    } else if (doc.contains("relations")) {
      out.kind = InputKind::Poset;
      auto parsed = poset_from_json(doc);
      out.poset = std::move(parsed.poset);
      out.realizer = std::move(parsed.realizer);
      out.graph = incomparability_graph(*out.poset);
    } else if (doc.contains("edges")) {
      out.graph = graph_from_json(doc);
    } else {
      throw invalid_input("JSON input has none of \"curves\", \"relations\", \"edges\"");
    }
    return out;
  }
  std::istringstream in(text);
  out.graph = read_edge_list(in);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedInput load_input(const std::string& path) { return parse_input(read_file(path)); }

}  // namespace ehs
