#include "opvg/atfree.hpp"

namespace opvg {

namespace {

std::vector<bool> closed_neighborhood(const Graph& g, Vertex z) {
  std::vector<bool> out(g.order(), false);
  out[z] = true;
  for (Vertex w : g.neighbors(z)) out[w] = true;
  return out;
}

// labels[z][v]: component of v in g - N[z], -1 inside N[z]
using Labels = std::vector<std::vector<int>>;

std::optional<ATWitness> scan(const Graph& g, const Labels& labels) {
  const int n = g.order();
  auto same = [&](Vertex a, Vertex b, Vertex without) {
    int la = labels[without][a];
    return la >= 0 && la == labels[without][b];
  };
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      for (Vertex z = y + 1; z < n; ++z) {
        if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
        if (!same(x, y, z) || !same(x, z, y) || !same(y, z, x)) continue;
        ATWitness w{x, y, z, {}};
        w.paths[0] = shortest_path(g, x, y, closed_neighborhood(g, z));
        w.paths[1] = shortest_path(g, x, z, closed_neighborhood(g, y));
        w.paths[2] = shortest_path(g, y, z, closed_neighborhood(g, x));
        return w;
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<ATWitness> find_asteroidal_triple(const Graph& g) {
  const int n = g.order();
  Labels labels(n);
#pragma omp parallel for schedule(dynamic) if (n > 24)
  for (Vertex z = 0; z < n; ++z) labels[z] = component_labels(g, closed_neighborhood(g, z)).first;
  return scan(g, labels);
}

std::optional<ATWitness> find_asteroidal_triple_serial(const Graph& g) {
  Labels labels(g.order());
  for (Vertex z = 0; z < g.order(); ++z) labels[z] = component_labels(g, closed_neighborhood(g, z)).first;
  return scan(g, labels);
}

bool is_at_free(const Graph& g) { return !find_asteroidal_triple(g).has_value(); }

bool validate_witness(const Graph& g, const ATWitness& w) {
  const Vertex t[3] = {w.x, w.y, w.z};
  for (Vertex v : t)
    if (v < 0 || v >= g.order()) return false;
  if (w.x == w.y || w.x == w.z || w.y == w.z) return false;
  if (g.adjacent(w.x, w.y) || g.adjacent(w.x, w.z) || g.adjacent(w.y, w.z)) return false;
  const Vertex ends[3][3] = {{w.x, w.y, w.z}, {w.x, w.z, w.y}, {w.y, w.z, w.x}};
  for (int i = 0; i < 3; ++i) {
    const auto& p = w.paths[i];
    if (p.empty() || p.front() != ends[i][0] || p.back() != ends[i][1]) return false;
    auto blocked = closed_neighborhood(g, ends[i][2]);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (blocked[p[k]]) return false;
      if (k > 0 && !g.adjacent(p[k - 1], p[k])) return false;
    }
  }
  return true;
}

}  // namespace opvg
