#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "opvg/graph.hpp"
#include "opvg/outerplanar.hpp"

namespace opvg {

/// Ordered boundary edge (a, b) of a block.
struct TerminalEdge {
  Vertex a = -1;
  Vertex b = -1;

  Edge edge() const { return Edge(a, b); }
  friend bool operator==(const TerminalEdge&, const TerminalEdge&) = default;
};

using TerminalPair = std::array<TerminalEdge, 2>;

struct Association {
  IncidentComponent component;
  int terminal = 0;  // 0 or 1
};

struct BlockTerminals {
  int block = -1;
  TerminalPair terminals;
  std::vector<Association> associations;
};

struct LinearityCertificate {
  OuterplanarEmbedding embedding;
  std::vector<BlockTerminals> blocks;  // one per nontrivial block

  const BlockTerminals* for_block(int block) const;
};

struct FaceWithThreeInternalEdges {
  int face = -1;
  std::vector<Vertex> cycle;
  std::vector<Edge> internal_edges;
};

struct UnsafeCutvertex {
  Vertex v = -1;
  std::vector<IncidentComponent> big;  // at least three
};

struct UnsafeBlock {
  int block = -1;
  VertexSet vertices;
  int candidates_tried = 0;
};

using NonlinearWitness = std::variant<FaceWithThreeInternalEdges, UnsafeCutvertex, UnsafeBlock>;
using LinearityResult = std::variant<LinearityCertificate, NonlinearWitness>;

std::string describe(const NonlinearWitness& w);

std::optional<UnsafeCutvertex> is_cut_safe(const Graph& g, const BlockDecomposition& dec);

/// Components of g - v for cutvertices v of the block, except the one holding the block.
std::vector<IncidentComponent> components_at_block(const Graph& g, const BlockDecomposition& dec, int block);

/// All terminal pairs to try for a nontrivial block, in tie-break order.
std::vector<TerminalPair> candidate_terminals(const OuterplanarEmbedding& emb, int block);

/// Partition of `components` into the two terminal classes, or nothing.
std::optional<std::vector<Association>> associate_components(const std::vector<IncidentComponent>& components,
                                                             const TerminalPair& t);

/// First valid terminal assignment per nontrivial block, or the first block without one.
std::variant<std::vector<BlockTerminals>, UnsafeBlock> is_block_safe(const Graph& g,
                                                                     const OuterplanarEmbedding& emb);

/// Rechecks the block-safety clauses for the given terminals from scratch.
bool terminals_valid(const Graph& g, const OuterplanarEmbedding& emb, int block, const TerminalPair& t);
bool validate_assignment(const Graph& g, const OuterplanarEmbedding& emb, const BlockTerminals& bt);
bool validate_certificate(const Graph& g, const LinearityCertificate& cert);

/// Checks, in order: linear-forest dual, cut-safety, block-safety.
/// Throws Error(NotOuterplanar).
LinearityResult is_linear(const Graph& g);
bool is_linear_graph(const Graph& g);

/// Face with three or more internal edges, if any.
std::optional<FaceWithThreeInternalEdges> find_bad_face(const OuterplanarEmbedding& emb);

}  // namespace opvg
