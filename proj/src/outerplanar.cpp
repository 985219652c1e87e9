#include "opvg/outerplanar.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace opvg {

std::vector<Edge> Face::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) out.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  return out;
}

std::vector<Edge> Face::boundary_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges())
    if (std::find(internal_edges.begin(), internal_edges.end(), e) == internal_edges.end()) out.push_back(e);
  return out;
}

bool Face::has_edge(Edge e) const {
  auto all = edges();
  return std::find(all.begin(), all.end(), e) != all.end();
}

const BlockEmbedding* OuterplanarEmbedding::block_embedding(int block) const {
  int i = embedding_of_block.at(block);
  return i < 0 ? nullptr : &block_embeddings[i];
}

std::vector<int> OuterplanarEmbedding::faces_with_edge(Edge e) const {
  std::vector<int> out;
  int b = decomposition.block_of_edge(e);
  const BlockEmbedding* be = b < 0 ? nullptr : block_embedding(b);
  if (!be) return out;
  for (int f : be->faces)
    if (faces[f].has_edge(e)) out.push_back(f);
  return out;
}

namespace {

// Smallest vertex first, then towards its smaller cycle neighbour.
std::vector<Vertex> normalize_cycle(std::vector<Vertex> c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

// Hamiltonian boundary cycle of a biconnected block by ear reduction, or empty.
std::vector<Vertex> boundary_cycle(const Graph& g, const Block& block) {
  const auto& vs = block.vertices;
  const int k = static_cast<int>(vs.size());
  if (static_cast<int>(block.edges.size()) > 2 * k - 3) return {};

  std::vector<std::set<Vertex>> adj(g.order());
  for (const Edge& e : block.edges) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<bool> alive(g.order(), false);
  for (Vertex v : vs) alive[v] = true;

  struct Ear {
    Vertex v, a, b;
  };
  std::vector<Ear> ears;
  std::deque<Vertex> queue;
  for (Vertex v : vs)
    if (adj[v].size() == 2) queue.push_back(v);
  int remaining = k;
  while (remaining > 3) {
    while (!queue.empty() && (!alive[queue.front()] || adj[queue.front()].size() != 2)) queue.pop_front();
    if (queue.empty()) return {};
    Vertex v = queue.front();
    queue.pop_front();
    Vertex a = *adj[v].begin(), b = *adj[v].rbegin();
    alive[v] = false;
    --remaining;
    adj[a].erase(v);
    adj[b].erase(v);
    adj[v].clear();
    adj[a].insert(b);
    adj[b].insert(a);
    ears.push_back({v, a, b});
    for (Vertex x : {a, b})
      if (adj[x].size() == 2) queue.push_back(x);
  }

  std::vector<Vertex> next(g.order(), -1), prev(g.order(), -1);
  std::vector<Vertex> base;
  for (Vertex v : vs)
    if (alive[v]) base.push_back(v);
  if (base.size() != 3) return {};
  for (int i = 0; i < 3; ++i) {
    next[base[i]] = base[(i + 1) % 3];
    prev[base[(i + 1) % 3]] = base[i];
  }
  for (auto it = ears.rbegin(); it != ears.rend(); ++it) {
    auto [v, a, b] = *it;
    if (next[a] == b) {
    } else if (next[b] == a) {
      std::swap(a, b);
    } else {
      return {};
    }
    next[a] = v;
    prev[v] = a;
    next[v] = b;
    prev[b] = v;
  }
  std::vector<Vertex> cycle{vs.front()};
  for (Vertex x = next[vs.front()]; x != vs.front(); x = next[x]) cycle.push_back(x);
  if (static_cast<int>(cycle.size()) != k) return {};

  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < k; ++i) pos[cycle[i]] = i;
  for (int i = 0; i < k; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return {};
  std::vector<std::pair<int, int>> chords;
  for (const Edge& e : block.edges) {
    int i = std::min(pos[e.u], pos[e.v]), j = std::max(pos[e.u], pos[e.v]);
    if (j - i == 1 || (i == 0 && j == k - 1)) continue;
    chords.emplace_back(i, j);
  }
  for (std::size_t x = 0; x < chords.size(); ++x)
    for (std::size_t y = x + 1; y < chords.size(); ++y) {
      auto [a, b] = chords[x];
      auto [c, d] = chords[y];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return {};
    }
  return normalize_cycle(cycle);
}

// Splits the polygon `poly` (vertices in boundary order) along chords.
void split_faces(const std::vector<Vertex>& poly, const std::set<Edge>& chords, std::vector<std::vector<Vertex>>& out) {
  const int m = static_cast<int>(poly.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (!chords.count(Edge(poly[i], poly[j]))) continue;
      std::vector<Vertex> left(poly.begin() + i, poly.begin() + j + 1);
      std::vector<Vertex> right(poly.begin() + j, poly.end());
      right.insert(right.end(), poly.begin(), poly.begin() + i + 1);
      split_faces(left, chords, out);
      split_faces(right, chords, out);
      return;
    }
  out.push_back(poly);
}

}  // namespace

std::variant<OuterplanarEmbedding, NotOuterplanar> recognize_outerplanar(const Graph& g) {
  if (g.order() >= 2 && g.size() > 2 * g.order() - 3) return NotOuterplanar{"too many edges", -1};
  OuterplanarEmbedding emb;
  emb.decomposition = block_cut_decomposition(g);
  const auto& blocks = emb.decomposition.blocks;
  emb.embedding_of_block.assign(blocks.size(), -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    const Block& block = blocks[b];
    if (block.trivial()) {
      for (const Edge& e : block.edges) emb.edge_class[e] = EdgeClass::Bridge;
      continue;
    }
    auto cycle = boundary_cycle(g, block);
    if (cycle.empty()) return NotOuterplanar{"block has no outerplanar boundary cycle", b};

    std::set<Edge> chords;
    std::set<Edge> sides;
    for (std::size_t i = 0; i < cycle.size(); ++i) sides.insert(Edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    for (const Edge& e : block.edges) {
      bool side = sides.count(e) > 0;
      emb.edge_class[e] = side ? EdgeClass::Boundary : EdgeClass::Internal;
      if (!side) chords.insert(e);
    }
    std::vector<std::vector<Vertex>> polys;
    split_faces(cycle, chords, polys);
    std::vector<Face> local;
    for (auto& p : polys) {
      Face f;
      f.cycle = normalize_cycle(p);
      f.block = b;
      for (const Edge& e : f.edges())
        if (chords.count(e)) f.internal_edges.push_back(e);
      std::sort(f.internal_edges.begin(), f.internal_edges.end());
      local.push_back(std::move(f));
    }
    std::sort(local.begin(), local.end(), [](const Face& x, const Face& y) {
      return make_set(x.cycle) < make_set(y.cycle);
    });
    BlockEmbedding be{b, cycle, {}};
    for (auto& f : local) {
      be.faces.push_back(static_cast<int>(emb.faces.size()));
      emb.faces.push_back(std::move(f));
    }
    emb.embedding_of_block[b] = static_cast<int>(emb.block_embeddings.size());
    emb.block_embeddings.push_back(std::move(be));
  }
  return emb;
}

OuterplanarEmbedding embed_outerplanar(const Graph& g) {
  auto r = recognize_outerplanar(g);
  if (auto* no = std::get_if<NotOuterplanar>(&r)) throw Error(ErrorCode::NotOuterplanar, no->reason);
  return std::get<OuterplanarEmbedding>(std::move(r));
}

bool is_outerplanar(const Graph& g) { return std::holds_alternative<OuterplanarEmbedding>(recognize_outerplanar(g)); }

const std::vector<Face>& faces(const OuterplanarEmbedding& emb) { return emb.faces; }

WeakDual weak_dual(const OuterplanarEmbedding& emb) {
  WeakDual d;
  d.nodes = static_cast<int>(emb.faces.size());
  d.adjacency.assign(d.nodes, {});
  std::map<Edge, int> first;
  for (int f = 0; f < d.nodes; ++f)
    for (const Edge& e : emb.faces[f].internal_edges) {
      auto [it, inserted] = first.emplace(e, f);
      if (inserted) continue;
      d.edges.emplace_back(it->second, f);
      d.shared_edge.push_back(e);
      d.adjacency[it->second].push_back(f);
      d.adjacency[f].push_back(it->second);
    }
  return d;
}

bool is_linear_forest(const WeakDual& d) {
  for (const auto& nb : d.adjacency)
    if (nb.size() > 2) return false;
  // acyclic iff each component has one fewer edge than nodes
  std::vector<int> comp(d.nodes, -1);
  int components = 0;
  for (int s = 0; s < d.nodes; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = components;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : d.adjacency[u])
        if (comp[w] < 0) {
          comp[w] = components;
          stack.push_back(w);
        }
    }
    ++components;
  }
  return static_cast<int>(d.edges.size()) == d.nodes - components;
}

OuterpathOrder outerpath_order(const OuterplanarEmbedding& emb, int block) {
  const BlockEmbedding* be = emb.block_embedding(block);
  if (!be) throw Error(ErrorCode::NotAnOuterpath, "trivial block");
  const auto& fs = be->faces;
  auto shared_edge = [&](int f, int h) -> std::optional<Edge> {
    for (const Edge& e : emb.faces[f].internal_edges)
      if (std::binary_search(emb.faces[h].internal_edges.begin(), emb.faces[h].internal_edges.end(), e)) return e;
    return std::nullopt;
  };
  std::vector<int> ends;
  for (int f : fs) {
    auto deg = emb.faces[f].internal_edges.size();
    if (deg > 2) throw Error(ErrorCode::NotAnOuterpath, "face with three internal edges");
    if (deg <= 1) ends.push_back(f);
  }
  OuterpathOrder order;
  order.block = block;
  if (fs.size() == 1) {
    order.faces = {fs.front()};
  } else {
    if (ends.size() != 2) throw Error(ErrorCode::NotAnOuterpath, "dual is not a path");
    int start = make_set(emb.faces[ends[0]].cycle) < make_set(emb.faces[ends[1]].cycle) ? ends[0] : ends[1];
    order.faces.push_back(start);
    int prev = -1, cur = start;
    while (order.faces.size() < fs.size()) {
      int nxt = -1;
      for (int h : fs)
        if (h != cur && h != prev && shared_edge(cur, h)) nxt = h;
      if (nxt < 0) throw Error(ErrorCode::NotAnOuterpath, "dual is not a path");
      order.shared.push_back(*shared_edge(cur, nxt));
      order.faces.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
  }
  auto boundary = emb.faces[order.faces.back()].boundary_edges();
  order.last = *std::min_element(boundary.begin(), boundary.end());
  return order;
}

bool is_biconnected_outerpath(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  auto r = recognize_outerplanar(g);
  auto* emb = std::get_if<OuterplanarEmbedding>(&r);
  if (!emb || emb->decomposition.blocks.size() != 1) return false;
  return is_linear_forest(weak_dual(*emb));
}

}  // namespace opvg
