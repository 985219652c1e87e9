#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opvg/graph.hpp"
#include "opvg/linearity.hpp"
#include "opvg/outerplanar.hpp"

namespace opvg {

/// Spanning uses edge connectors; Induced uses two-length paths through a new vertex.
enum class AugmentMode { Induced, Spanning };

struct Connector {
  std::string u;
  std::string v;
  std::optional<std::string> middle;  // the new vertex of a two-length path
};

enum class ActionKind { TuckAtA, TuckAtB, Bond, Chain, Close };
const char* to_string(ActionKind kind) noexcept;

struct ActionRecord {
  ActionKind kind;
  std::string cutvertex;  // empty for Chain/Close
  std::vector<Connector> connectors;
};

/// Terminal pairs keyed by the vertex set of their block.
using TerminalStore = std::map<VertexSet, TerminalPair>;

struct AugmentState {
  Graph graph;
  AugmentMode mode = AugmentMode::Induced;
  TerminalStore terminals;
  std::vector<Connector> connectors;
  std::vector<ActionRecord> trace;
};

struct AugmentationResult {
  Graph supergraph;
  OuterplanarEmbedding embedding;
  std::vector<Vertex> vertex_map;  // original vertex -> supergraph vertex
  std::vector<Connector> connectors;
  std::vector<ActionRecord> trace;

  int new_vertices() const { return supergraph.order() - static_cast<int>(vertex_map.size()); }
};

/// Called after every action with the current state.
using ActionObserver = std::function<void(const AugmentState&)>;

/// Small components not contained in a small component at another cutvertex,
/// ordered by (cutvertex, smallest vertex other than the cutvertex).
std::vector<IncidentComponent> maximal_small_components(const Graph& g, const BlockDecomposition& dec);

/// Tuck the tails. `component` may come from an earlier graph; it is matched to the
/// current component of g - v holding its vertices. Returns false if nothing applied.
bool tuck_tail(AugmentState& state, const IncidentComponent& component);

/// Bond with your sibling at cutvertex v. Throws Error(PreconditionViolated).
void bond_siblings(AugmentState& state, Vertex v);

/// Throws Error(NotLinear) for non-linear input and Error(PreconditionViolated)
/// for Spanning mode on fewer than three vertices.
AugmentationResult embed_in_biconnected_outerpath(const Graph& g, AugmentMode mode,
                                                  const ActionObserver& observer = {});

}  // namespace opvg
