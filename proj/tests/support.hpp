#pragma once

#include <random>
#include <string>

#include "opvg/graph.hpp"
#include "opvg/io.hpp"

namespace opvg::test {

inline Graph fixture(const std::string& name) {
  return read_graph(std::string(OPVG_FIXTURES) + "/" + name + ".edges");
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return numbered_graph(n, e);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return numbered_graph(n, e);
}

// C5 on 0..4 with pendant 5 at 0.
inline Graph c5_pendant() {
  return numbered_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
}

// Inner triangle 0,1,2; outer 3,4,5.
inline Graph three_sun() {
  return numbered_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}});
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return numbered_graph(n, e);
}

inline VertexSet ids(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<Vertex> out;
  for (const auto& l : labels) out.push_back(g.at(l));
  return make_set(out);
}

}  // namespace opvg::test

#include "opvg/augment.hpp"
#include "opvg/linearity.hpp"

namespace opvg::test {

// Empty when the intermediate graph is cut-safe, block-safe, has a linear-forest
// dual and every nontrivial block's stored terminals are valid.
inline std::string action_invariant_failure(const AugmentState& st) {
  const Graph& g = st.graph;
  auto r = recognize_outerplanar(g);
  auto* emb = std::get_if<OuterplanarEmbedding>(&r);
  if (!emb) return "not outerplanar";
  if (!is_linear_forest(weak_dual(*emb))) return "dual not a linear forest";
  if (is_cut_safe(g, emb->decomposition)) return "not cut-safe";
  if (std::holds_alternative<UnsafeBlock>(is_block_safe(g, *emb))) return "not block-safe";
  const auto& blocks = emb->decomposition.blocks;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    if (blocks[b].trivial()) continue;
    auto it = st.terminals.find(blocks[b].vertices);
    if (it == st.terminals.end()) return "block without stored terminals";
    if (!terminals_valid(g, *emb, b, it->second)) return "stored terminals invalid";
  }
  return {};
}

// Empty when g sits in the result as required by the mode.
inline std::string containment_failure(const Graph& g, const AugmentationResult& r, AugmentMode mode) {
  const Graph& h = r.supergraph;
  for (Vertex v = 0; v < g.order(); ++v)
    if (h.label(r.vertex_map[v]) != g.label(v)) return "vertex map changes ids";
  for (const Edge& e : g.edges())
    if (!h.adjacent(r.vertex_map[e.u], r.vertex_map[e.v])) return "edge lost";
  if (mode == AugmentMode::Spanning && h.order() != g.order()) return "new vertices in spanning mode";
  if (mode == AugmentMode::Induced)
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (h.adjacent(r.vertex_map[u], r.vertex_map[v]) && !g.adjacent(u, v)) return "extra edge between old vertices";
  return {};
}

}  // namespace opvg::test

namespace opvg::test {

// Strip of `faces` faces with lengths in [3, max_len]; each new face is glued to a
// boundary edge of the previous one other than the edge it was glued along.
inline Graph random_outerpath(int faces, int max_len, std::mt19937& rng) {
  std::uniform_int_distribution<int> len(3, max_len);
  std::vector<std::pair<int, int>> edges;
  int n = len(rng);
  std::vector<int> face;
  for (int i = 0; i < n; ++i) {
    face.push_back(i);
    edges.emplace_back(i, (i + 1) % n);
  }
  std::pair<int, int> glued{-1, -1};
  for (int f = 1; f < faces; ++f) {
    std::vector<std::pair<int, int>> options;
    for (std::size_t i = 0; i < face.size(); ++i) {
      std::pair<int, int> e{face[i], face[(i + 1) % face.size()]};
      if (e != glued && std::pair{e.second, e.first} != glued) options.push_back(e);
    }
    auto [a, b] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    int k = len(rng);
    std::vector<int> next{b, a};
    int prev = a;
    for (int i = 0; i < k - 2; ++i) {
      edges.emplace_back(prev, n);
      next.push_back(n);
      prev = n++;
    }
    edges.emplace_back(prev, b);
    face = next;
    glued = {a, b};
  }
  return numbered_graph(n, edges);
}

}  // namespace opvg::test
