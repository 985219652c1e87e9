#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opvg/error.hpp"

namespace opvg {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // always sorted, no duplicates

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = -1;
  Vertex v = -1;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// Orders ids numerically when both are integers, lexicographically otherwise.
bool natural_less(std::string_view a, std::string_view b);

/// Simple undirected graph over dense vertex indices with string labels.
///
/// Adjacency lists are kept sorted, so every traversal in the library is
/// deterministic for a given construction order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  Vertex add_vertex(std::string label);
  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  Vertex at(std::string_view label) const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// A label not yet used, of the form `<stem><k>`.
  std::string fresh_label(std::string_view stem) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::unordered_map<std::string, Vertex> index_;
  int edge_count_ = 0;
};

using LabelledEdge = std::pair<std::string, std::string>;

/// Builds a graph whose vertex indices follow the natural order of the ids.
/// Throws Error(SelfLoop) or Error(DuplicateEdge).
Graph build_graph(const std::vector<LabelledEdge>& edges,
                  const std::vector<std::string>& isolated = {});

/// Graph on vertices 0..n-1 labelled "0".."n-1".
Graph numbered_graph(int n, const std::vector<std::pair<int, int>>& edges);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // subgraph vertex -> parent vertex
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Component id per vertex (ids ordered by smallest member) and the count.
std::pair<std::vector<int>, int> component_labels(const Graph& g,
                                                  const std::vector<bool>& removed = {});
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// True iff the subgraph induced on `vertices` is a path (a single vertex counts).
bool induces_path(const Graph& g, const VertexSet& vertices);

/// Breadth-first shortest path from `from` to `to` avoiding `blocked`; empty if none.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const std::vector<bool>& blocked = {});

// ---------------------------------------------------------------------------
// Block-cutvertex structure

struct Block {
  VertexSet vertices;
  std::vector<Edge> edges;

  bool trivial() const { return vertices.size() <= 2; }
  bool contains(Vertex v) const;
};

struct BlockDecomposition {
  std::vector<Block> blocks;                 // ordered by smallest vertex
  VertexSet cutvertices;
  std::vector<std::vector<int>> blocks_at;   // vertex -> incident block indices

  int block_of_edge(Edge e) const;
  bool is_cutvertex(Vertex v) const;
};

BlockDecomposition block_cut_decomposition(const Graph& g);

enum class ComponentKind { Big, Small, Tail };
const char* to_string(ComponentKind kind) noexcept;

/// The subgraph induced on one component of g - v together with v.
struct IncidentComponent {
  Vertex cutvertex = -1;
  VertexSet vertices;  // includes the cutvertex
  ComponentKind kind = ComponentKind::Big;

  bool small() const { return kind != ComponentKind::Big; }
  bool contains(Vertex x) const;
  bool contains_all(const VertexSet& xs) const;
};

ComponentKind classify_component(const Graph& g, Vertex v, const VertexSet& with_v);

/// Throws Error(NotACutvertex) unless g - v has more components than g.
std::vector<IncidentComponent> components_incident(const Graph& g, Vertex v);

/// True iff every path between a vertex of `y` and a vertex of `z` meets `x`.
bool separates(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& z);

// Sorted-set helpers used throughout.
VertexSet make_set(std::vector<Vertex> xs);
bool set_contains(const VertexSet& s, Vertex v);
bool is_subset(const VertexSet& small, const VertexSet& big);

}  // namespace opvg
