#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opvg/geometry.hpp"
#include "opvg/graph.hpp"

namespace opvg {

/// Edge uv iff the closed segments meet. Throws Error(NonAxisParallel).
Graph intersection_graph(const SegmentDrawing& d);

/// True iff the intersection graph of d is g, edge for edge.
/// Throws Error(VertexMismatch) unless d has exactly one segment per vertex of g.
bool verify_drawing(const Graph& g, const SegmentDrawing& d);

}  // namespace opvg

namespace opvg {

/// Classes of the transitive closure of "collinear and intersecting". A point
/// segment counts as a degenerate horizontal segment.
std::vector<VertexSet> collinearity_classes(const Graph& g, const SegmentDrawing& d);

/// Edges uv whose common neighbourhood holds a nonadjacent pair.
std::vector<Edge> diamond_diagonals(const Graph& g);

bool is_chordal(const Graph& g);
/// Chordal and AT-free.
bool is_interval(const Graph& g);
bool is_bipartite(const Graph& g);

struct ComponentStatus {
  VertexSet component;
  bool neighborhood_interval = false;
};

enum class Verdict { Pass, Fail };

struct NecessityReport {
  std::vector<Edge> forced_edges;
  std::optional<std::vector<Edge>> chosen_h;
  std::vector<ComponentStatus> components;   // components of chosen_h, or the blocking one on Fail
  std::optional<bool> contraction_bipartite;
  std::optional<bool> contraction_b0;         // absent when the oracle was skipped or undecided
  Verdict verdict = Verdict::Fail;
  std::string reason;                         // clause that blocks every H, on Fail
  std::string note;
  std::uint64_t nodes = 0;
};

struct NecessityOptions {
  std::uint64_t node_limit = 20'000'000;
  bool contraction_oracle = true;
  int oracle_max_vertices = 7;
};

/// Searches for H as a 2-colouring of the vertices whose monochromatic edges
/// form H: contracting H then leaves a properly 2-coloured, hence bipartite, graph.
/// Throws Error(SearchBudgetExceeded).
NecessityReport check_necessary_conditions(const Graph& g, const NecessityOptions& options = {});

}  // namespace opvg
