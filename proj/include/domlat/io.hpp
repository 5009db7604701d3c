#pragma once

// Serialization of diagrams: a terse tab-separated edge list (the native
// interchange format), JSON for tooling, and DOT for rendering. All writers
// emit nodes and edges in one canonical order — partitions ascending
// lexicographically, then edge labels ascending — so equal diagrams always
// serialize to identical bytes.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "domlat/lattice.hpp"
#include "domlat/partition.hpp"

namespace domlat {

namespace detail {

/// Out-edges of a node as (label, target handle), ascending by label.
/// Per-source labels are distinct (one move per column, at most one 0-link),
/// so this order is total.
inline std::vector<std::pair<int, LatticeDiagram::Handle>> sorted_out(
    const LatticeDiagram& d, LatticeDiagram::Handle h) {
  std::vector<std::pair<int, LatticeDiagram::Handle>> edges;
  d.for_each_out(h, [&](int label, LatticeDiagram::Handle dst) {
    edges.emplace_back(label, dst);
  });
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace detail

/// Edge-list form. First line: `n=<w>` for a single-weight diagram,
/// `n<=<b>` for a cumulative one. Then one line per edge:
/// source TAB label TAB target, partitions in comma text form. Nodes are
/// implied: every node of positive weight is some edge's endpoint, and the
/// reader re-adds the one node that never is (the top).
inline void write_edges(std::ostream& out, const LatticeDiagram& d) {
  out << (d.is_cumulative() ? "n<=" : "n=") << d.weight() << "\n";
  for (LatticeDiagram::Handle h : d.sorted_handles()) {
    std::string src = to_text(d.partition_of(h));
    for (const auto& [label, dst] : detail::sorted_out(d, h))
      out << src << "\t" << label << "\t" << to_text(d.partition_of(dst)) << "\n";
  }
}

inline LatticeDiagram read_edges(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty edge-list input");
  LatticeDiagram d = [&] {
    if (header.rfind("n<=", 0) == 0)
      return LatticeDiagram::cumulative(std::stoi(header.substr(3)));
    if (header.rfind("n=", 0) == 0)
      return LatticeDiagram::single_weight(std::stoi(header.substr(2)));
    throw std::runtime_error("bad edge-list header: " + header);
  }();
  // The unique node without incoming edges: the empty partition in a
  // cumulative diagram, the single-column partition otherwise.
  d.insert_node(d.is_cumulative() || d.weight() == 0 ? Partition{}
                                                     : Partition{d.weight()});
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string src, label_text, dst;
    if (!std::getline(row, src, '\t') || !std::getline(row, label_text, '\t') ||
        !std::getline(row, dst, '\t'))
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected 3 tab-separated fields");
    try {
      int label = std::stoi(label_text);
      auto [hs, _s] = d.insert_node(parse_partition(src));
      auto [ht, _t] = d.insert_node(parse_partition(dst));
      d.add_edge(hs, ht, label);
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return d;
}

/// JSON form: object with `n`, a `cumulative` flag (present only when true),
/// the sorted `nodes` array, and `edges` as [source, label, target] triples
/// in canonical order. Node texts use the same comma form as the edge list.
inline void write_json(std::ostream& out, const LatticeDiagram& d) {
  nlohmann::ordered_json j;
  j["n"] = d.weight();
  if (d.is_cumulative()) j["cumulative"] = true;
  auto nodes = nlohmann::ordered_json::array();
  auto edges = nlohmann::ordered_json::array();
  for (LatticeDiagram::Handle h : d.sorted_handles()) {
    std::string src = to_text(d.partition_of(h));
    nodes.push_back(src);
    for (const auto& [label, dst] : detail::sorted_out(d, h))
      edges.push_back(nlohmann::ordered_json::array(
          {src, label, to_text(d.partition_of(dst))}));
  }
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  out << j.dump(2) << "\n";
}

inline LatticeDiagram read_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("nodes") || !j.contains("edges"))
    throw std::runtime_error("JSON diagram needs keys n, nodes, edges");
  bool cumulative = j.value("cumulative", false);
  LatticeDiagram d = cumulative ? LatticeDiagram::cumulative(j["n"].get<int>())
                                : LatticeDiagram::single_weight(j["n"].get<int>());
  for (const auto& node : j["nodes"]) d.insert_node(parse_partition(node.get<std::string>()));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw std::runtime_error("each edge must be a [source, label, target] triple");
    auto src = d.find(parse_partition(e[0].get<std::string>()));
    auto dst = d.find(parse_partition(e[2].get<std::string>()));
    if (!src || !dst) throw std::runtime_error("edge endpoint missing from nodes array");
    d.add_edge(*src, *dst, e[1].get<int>());
  }
  return d;
}

/// DOT form: isolated nodes as bare quoted statements, every edge with its
/// numeric label. Connected nodes are implied by their edges, as is usual
/// in DOT sources.
inline void write_dot(std::ostream& out, const LatticeDiagram& d) {
  out << "digraph lattice {\n";
  std::vector<int> degree(d.node_count(), 0);
  d.for_each_edge([&](LatticeDiagram::Handle src, int, LatticeDiagram::Handle dst) {
    ++degree[src];
    ++degree[dst];
  });
  for (LatticeDiagram::Handle h : d.sorted_handles())
    if (degree[h] == 0) out << "  \"" << to_text(d.partition_of(h)) << "\";\n";
  for (LatticeDiagram::Handle h : d.sorted_handles()) {
    std::string src = to_text(d.partition_of(h));
    for (const auto& [label, dst] : detail::sorted_out(d, h))
      out << "  \"" << src << "\" -> \"" << to_text(d.partition_of(dst))
          << "\" [label=" << label << "];\n";
  }
  out << "}\n";
}

/// What a DOT file written by this library contains, as plain strings: the
/// bare (isolated) node ids and the labeled edge triples. Enough to check
/// round-trips without a real DOT parser.
struct DotContent {
  std::string graph_name;
  std::vector<std::string> isolated;
  std::vector<std::tuple<std::string, int, std::string>> edges;
};

/// Minimal reader for the DOT subset the writers emit. Anything outside
/// that subset is rejected.
inline DotContent parse_dot(std::istream& in) {
  DotContent content;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty DOT input");
  {
    std::istringstream head(line);
    std::string kw, brace;
    head >> kw >> content.graph_name >> brace;
    if (kw != "digraph" || brace != "{")
      throw std::runtime_error("expected `digraph <name> {`");
  }
  auto unquote = [](const std::string& s) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
      throw std::runtime_error("expected a quoted id, got: " + s);
    return s.substr(1, s.size() - 2);
  };
  bool closed = false;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string first;
    if (!(row >> first)) continue;  // blank line
    if (first == "}") {
      closed = true;
      break;
    }
    if (first.back() == ';') {  // bare node statement
      content.isolated.push_back(unquote(first.substr(0, first.size() - 1)));
      continue;
    }
    std::string arrow, dst, attr;
    if (!(row >> arrow >> dst >> attr) || arrow != "->")
      throw std::runtime_error("bad DOT statement: " + line);
    if (attr.size() < 10 || attr.rfind("[label=", 0) != 0 || attr.substr(attr.size() - 2) != "];")
      throw std::runtime_error("expected [label=N]; in: " + line);
    int label = std::stoi(attr.substr(7, attr.size() - 9));
    content.edges.emplace_back(unquote(first), label, unquote(dst));
  }
  if (!closed) throw std::runtime_error("unterminated DOT graph");
  return content;
}

}  // namespace domlat
