#include "opvg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

namespace opvg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotACutvertex: return "NotACutvertex";
    case ErrorCode::NotOuterplanar: return "NotOuterplanar";
    case ErrorCode::NotAnOuterpath: return "NotAnOuterpath";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvariantBroken: return "InvariantBroken";
    case ErrorCode::VertexMismatch: return "VertexMismatch";
    case ErrorCode::NonAxisParallel: return "NonAxisParallel";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

const char* to_string(ComponentKind kind) noexcept {
  switch (kind) {
    case ComponentKind::Big: return "big";
    case ComponentKind::Small: return "small";
    case ComponentKind::Tail: return "tail";
  }
  return "?";
}

namespace {

std::optional<long long> as_integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  auto ia = as_integer(a);
  auto ib = as_integer(b);
  if (ia && ib) return *ia < *ib;
  if (ia.has_value() != ib.has_value()) return ia.has_value();  // numbers first
  return a < b;
}

Graph::Graph(int n) {
  for (int i = 0; i < n; ++i) add_vertex(std::to_string(i));
}

Vertex Graph::add_vertex(std::string label) {
  if (index_.count(label)) throw Error(ErrorCode::DuplicateEdge, "duplicate vertex id " + label);
  Vertex v = order();
  index_.emplace(label, v);
  labels_.push_back(std::move(label));
  adj_.emplace_back();
  return v;
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= order() || b >= order())
    throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
  if (a == b) throw Error(ErrorCode::SelfLoop, "loop at " + labels_[a]);
  if (adjacent(a, b))
    throw Error(ErrorCode::DuplicateEdge, labels_[a] + " " + labels_[b]);
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
  ++edge_count_;
}

void Graph::remove_edge(Vertex a, Vertex b) {
  if (!adjacent(a, b)) return;
  adj_[a].erase(std::lower_bound(adj_[a].begin(), adj_[a].end(), b));
  adj_[b].erase(std::lower_bound(adj_[b].begin(), adj_[b].end(), a));
  --edge_count_;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& n = adj_[a];
  return std::binary_search(n.begin(), n.end(), b);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::at(std::string_view label) const {
  auto v = find(label);
  if (!v) throw Error(ErrorCode::UnknownVertex, std::string(label));
  return *v;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::fresh_label(std::string_view stem) const {
  for (int k = 1;; ++k) {
    std::string candidate = std::string(stem) + std::to_string(k);
    if (!index_.count(candidate)) return candidate;
  }
}

Graph build_graph(const std::vector<LabelledEdge>& edges, const std::vector<std::string>& isolated) {
  std::vector<std::string> ids = isolated;
  for (const auto& [a, b] : edges) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end(), [](const auto& a, const auto& b) { return natural_less(a, b); });
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Graph g;
  for (auto& id : ids) g.add_vertex(id);
  for (const auto& [a, b] : edges) g.add_edge(g.at(a), g.at(b));
  return g;
}

Graph numbered_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  InducedSubgraph out;
  std::vector<int> local(g.order(), -1);
  for (Vertex v : vertices) {
    local[v] = out.graph.add_vertex(g.label(v));
    out.to_parent.push_back(v);
  }
  for (Vertex v : vertices)
    for (Vertex w : g.neighbors(v))
      if (local[w] >= 0 && v < w) out.graph.add_edge(local[v], local[w]);
  return out;
}

std::pair<std::vector<int>, int> component_labels(const Graph& g, const std::vector<bool>& removed) {
  std::vector<int> comp(g.order(), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0 || (!removed.empty() && removed[s])) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] >= 0 || (!removed.empty() && removed[w])) continue;
        comp[w] = count;
        stack.push_back(w);
      }
    }
    ++count;
  }
  return {comp, count};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  auto [comp, count] = component_labels(g);
  std::vector<VertexSet> out(count);
  for (Vertex v = 0; v < g.order(); ++v) out[comp[v]].push_back(v);
  return out;
}

bool is_connected(const Graph& g) { return component_labels(g).second <= 1; }

bool induces_path(const Graph& g, const VertexSet& vertices) {
  if (vertices.empty()) return false;
  int edges = 0;
  for (Vertex v : vertices) {
    int d = 0;
    for (Vertex w : g.neighbors(v))
      if (set_contains(vertices, w)) ++d;
    if (d > 2) return false;
    edges += d;
  }
  edges /= 2;
  if (edges != static_cast<int>(vertices.size()) - 1) return false;
  // a forest with k-1 edges and max degree 2 is a path iff connected
  std::vector<bool> removed(g.order(), true);
  for (Vertex v : vertices) removed[v] = false;
  auto [comp, count] = component_labels(g, removed);
  int first = comp[vertices.front()];
  return std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return comp[v] == first; });
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to, const std::vector<bool>& blocked) {
  auto is_blocked = [&](Vertex v) { return !blocked.empty() && blocked[v]; };
  if (is_blocked(from) || is_blocked(to)) return {};
  std::vector<Vertex> parent(g.order(), -2);
  std::deque<Vertex> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] != -2 || is_blocked(w)) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[to] == -2) return {};
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// ---------------------------------------------------------------------------

bool Block::contains(Vertex v) const { return set_contains(vertices, v); }

int BlockDecomposition::block_of_edge(Edge e) const {
  for (int b : blocks_at[e.u]) {
    const auto& edges = blocks[b].edges;
    if (std::binary_search(edges.begin(), edges.end(), e)) return b;
  }
  return -1;
}

bool BlockDecomposition::is_cutvertex(Vertex v) const { return set_contains(cutvertices, v); }

BlockDecomposition block_cut_decomposition(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Block> raw;
  std::vector<Edge> edge_stack;
  std::vector<bool> is_cut(n, false);
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      raw.push_back(Block{{root}, {}});
      disc[root] = timer++;
      continue;
    }
    int root_children = 0;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v, p = f.parent;
      stack.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (p != root) is_cut[p] = true;
        Block block;
        Edge stop(p, v);
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.edges.push_back(e);
          block.vertices.push_back(e.u);
          block.vertices.push_back(e.v);
          if (e == stop) break;
        }
        block.vertices = make_set(std::move(block.vertices));
        std::sort(block.edges.begin(), block.edges.end());
        raw.push_back(std::move(block));
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }

  std::sort(raw.begin(), raw.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  BlockDecomposition dec;
  dec.blocks = std::move(raw);
  dec.blocks_at.assign(n, {});
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b)
    for (Vertex v : dec.blocks[b].vertices) dec.blocks_at[v].push_back(b);
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) dec.cutvertices.push_back(v);
  return dec;
}

bool IncidentComponent::contains(Vertex x) const { return set_contains(vertices, x); }
bool IncidentComponent::contains_all(const VertexSet& xs) const { return is_subset(xs, vertices); }

ComponentKind classify_component(const Graph& g, Vertex v, const VertexSet& with_v) {
  VertexSet rest;
  for (Vertex x : with_v)
    if (x != v) rest.push_back(x);
  if (!induces_path(g, rest)) return ComponentKind::Big;
  return induces_path(g, with_v) ? ComponentKind::Tail : ComponentKind::Small;
}

std::vector<IncidentComponent> components_incident(const Graph& g, Vertex v) {
  std::vector<bool> removed(g.order(), false);
  removed[v] = true;
  auto [comp, count] = component_labels(g, removed);
  std::vector<int> local_id(count, -1);
  std::vector<IncidentComponent> out;
  for (Vertex w : g.neighbors(v)) {
    int c = comp[w];
    if (local_id[c] >= 0) continue;
    local_id[c] = static_cast<int>(out.size());
    out.push_back(IncidentComponent{v, {}, ComponentKind::Big});
  }
  if (out.size() < 2) throw Error(ErrorCode::NotACutvertex, g.label(v));
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != v && comp[x] >= 0 && local_id[comp[x]] >= 0) out[local_id[comp[x]]].vertices.push_back(x);
  for (auto& c : out) {
    c.vertices.push_back(v);
    c.vertices = make_set(std::move(c.vertices));
    c.kind = classify_component(g, v, c.vertices);
  }
  std::sort(out.begin(), out.end(), [v](const auto& a, const auto& b) {
    auto first = [v](const VertexSet& s) { return s.front() == v && s.size() > 1 ? s[1] : s.front(); };
    return first(a.vertices) < first(b.vertices);
  });
  return out;
}

bool separates(const Graph& g, const VertexSet& x, const VertexSet& y, const VertexSet& z) {
  std::vector<bool> removed(g.order(), false);
  for (Vertex v : x) removed[v] = true;
  auto [comp, count] = component_labels(g, removed);
  std::set<int> reached;
  for (Vertex v : y)
    if (!removed[v]) reached.insert(comp[v]);
  for (Vertex v : z)
    if (!removed[v] && reached.count(comp[v])) return false;
  return true;
}

VertexSet make_set(std::vector<Vertex> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const VertexSet& small, const VertexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace opvg
