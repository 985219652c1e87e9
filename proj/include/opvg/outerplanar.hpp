#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "opvg/graph.hpp"

namespace opvg {

struct Face {
  std::vector<Vertex> cycle;         // in boundary orientation, smallest vertex first
  std::vector<Edge> internal_edges;  // edges shared with another bounded face
  int block = -1;

  bool is_leaf() const { return internal_edges.size() <= 1; }
  std::size_t length() const { return cycle.size(); }
  std::vector<Edge> edges() const;
  std::vector<Edge> boundary_edges() const;
  bool has_edge(Edge e) const;
};

enum class EdgeClass { Bridge, Boundary, Internal };

struct BlockEmbedding {
  int block = -1;
  std::vector<Vertex> boundary;  // Hamiltonian cycle, smallest vertex first
  std::vector<int> faces;        // indices into OuterplanarEmbedding::faces
};

struct OuterplanarEmbedding {
  BlockDecomposition decomposition;
  std::vector<BlockEmbedding> block_embeddings;  // nontrivial blocks only
  std::vector<int> embedding_of_block;           // block -> index or -1
  std::vector<Face> faces;
  std::map<Edge, EdgeClass> edge_class;

  EdgeClass classify(Edge e) const { return edge_class.at(e); }
  const BlockEmbedding* block_embedding(int block) const;
  std::vector<int> faces_with_edge(Edge e) const;
};

struct NotOuterplanar {
  std::string reason;
  int block = -1;
};

std::variant<OuterplanarEmbedding, NotOuterplanar> recognize_outerplanar(const Graph& g);
/// As recognize_outerplanar but throws Error(NotOuterplanar).
OuterplanarEmbedding embed_outerplanar(const Graph& g);
bool is_outerplanar(const Graph& g);

const std::vector<Face>& faces(const OuterplanarEmbedding& emb);

struct WeakDual {
  int nodes = 0;                                 // one per face
  std::vector<std::pair<int, int>> edges;        // face pairs
  std::vector<Edge> shared_edge;                 // parallel to edges
  std::vector<std::vector<int>> adjacency;
};

WeakDual weak_dual(const OuterplanarEmbedding& emb);
bool is_linear_forest(const WeakDual& d);

struct OuterpathOrder {
  int block = -1;
  std::vector<int> faces;   // F_1..F_n as face indices
  std::vector<Edge> shared; // e_1..e_{n-1}
  Edge last;                // e_n, a boundary edge of F_n
};

/// Throws Error(NotAnOuterpath) if the block's faces do not form a dual path.
OuterpathOrder outerpath_order(const OuterplanarEmbedding& emb, int block);

/// Biconnected, outerplanar, and weak dual a single path.
bool is_biconnected_outerpath(const Graph& g);

}  // namespace opvg
