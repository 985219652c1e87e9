#include "opvg/verify.hpp"

#include <algorithm>
#include <numeric>

#include "opvg/atfree.hpp"
#include "opvg/oracle.hpp"

namespace opvg {

namespace {

void require_axis_parallel(const SegmentDrawing& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d.segments[i].axis_parallel()) throw Error(ErrorCode::NonAxisParallel, d.vertices[i]);
}

}  // namespace

Graph intersection_graph(const SegmentDrawing& d) {
  require_axis_parallel(d);
  std::vector<LabelledEdge> edges;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (intersects(d.segments[i], d.segments[j])) edges.emplace_back(d.vertices[i], d.vertices[j]);
  return build_graph(edges, d.vertices);
}

bool verify_drawing(const Graph& g, const SegmentDrawing& d) {
  std::vector<std::string> a = g.labels(), b = d.vertices;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(b.begin(), b.end()) != b.end())
    throw Error(ErrorCode::VertexMismatch, "drawing vertices differ from graph vertices");
  require_axis_parallel(d);
  const int n = static_cast<int>(d.size());
  std::vector<Vertex> of(n);
  for (int i = 0; i < n; ++i) of[i] = g.at(d.vertices[i]);
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok) if (n > 200)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersects(d.segments[i], d.segments[j]) != g.adjacent(of[i], of[j])) ok = false;
  return ok;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool horizontal_like(const Segment& s) { return s.p1.y == s.p2.y; }

bool collinear_meet(const Segment& a, const Segment& b) {
  if (!intersects(a, b)) return false;
  if (horizontal_like(a) && horizontal_like(b)) return a.p1.y == b.p1.y;
  if (a.is_vertical() && b.is_vertical()) return a.p1.x == b.p1.x;
  return false;
}

std::vector<VertexSet> groups(int n, UnionFind& uf) {
  std::vector<VertexSet> by_root(n);
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& s : by_root)
    if (!s.empty()) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& c) {
  VertexSet out = c;
  for (Vertex v : c) out.insert(out.end(), g.neighbors(v).begin(), g.neighbors(v).end());
  return make_set(out);
}

}  // namespace

std::vector<VertexSet> collinearity_classes(const Graph& g, const SegmentDrawing& d) {
  const int n = g.order();
  std::vector<const Segment*> seg(n, nullptr);
  for (std::size_t i = 0; i < d.size(); ++i) seg[g.at(d.vertices[i])] = &d.segments[i];
  for (Vertex v = 0; v < n; ++v)
    if (!seg[v]) throw Error(ErrorCode::VertexMismatch, g.label(v));
  UnionFind uf(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (collinear_meet(*seg[u], *seg[v])) uf.unite(u, v);
  return groups(n, uf);
}

std::vector<Edge> diamond_diagonals(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> common;
    std::set_intersection(g.neighbors(e.u).begin(), g.neighbors(e.u).end(), g.neighbors(e.v).begin(),
                          g.neighbors(e.v).end(), std::back_inserter(common));
    bool found = false;
    for (std::size_t i = 0; i < common.size() && !found; ++i)
      for (std::size_t j = i + 1; j < common.size() && !found; ++j) found = !g.adjacent(common[i], common[j]);
    if (found) out.push_back(e);
  }
  return out;
}

bool is_chordal(const Graph& g) {
  // maximum cardinality search, then the perfect elimination check on its reverse
  const int n = g.order();
  std::vector<int> weight(n, 0), position(n, -1);
  std::vector<Vertex> order;
  for (int i = 0; i < n; ++i) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (position[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
    position[best] = i;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (position[w] < 0) ++weight[w];
  }
  for (Vertex v : order) {
    // earlier neighbours of v must form a clique; enough to check against the latest one
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v))
      if (position[w] < position[v] && (parent < 0 || position[w] > position[parent])) parent = w;
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v))
      if (w != parent && position[w] < position[v] && !g.adjacent(w, parent)) return false;
  }
  return true;
}

bool is_interval(const Graph& g) { return is_chordal(g) && is_at_free(g); }

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex w : g.neighbors(queue[i])) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[queue[i]];
          queue.push_back(w);
        } else if (colour[w] == colour[queue[i]]) {
          return false;
        }
      }
  }
  return true;
}

namespace {

class HSearch {
 public:
  HSearch(const Graph& g, const NecessityOptions& opt) : g_(g), opt_(opt), colour_(g.order(), -1) {}

  NecessityReport run() {
    const int n = g_.order();
    report_.forced_edges = diamond_diagonals(g_);
    UnionFind forced(n);
    for (const Edge& e : report_.forced_edges) forced.unite(e.u, e.v);
    for (const auto& c : groups(n, forced))
      if (c.size() > 1 && !interval_around(c)) {
        report_.components.push_back({c, false});
        report_.reason = "clause (a): closed neighbourhood of forced collinear component " + describe(c) +
                         " is not an interval graph";
        return std::move(report_);
      }
    // BFS order over classes of forced-equal vertices; the first class of each
    // component of g is coloured 0
    std::vector<bool> seen(n, false), class_seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> queue{s};
      seen[s] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex u = queue[i];
        if (!class_seen[forced.find(u)]) {
          class_seen[forced.find(u)] = true;
          order_.push_back(u);
          first_of_component_.push_back(i == 0);
        }
        for (Vertex w : g_.neighbors(u))
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
    }
    members_.assign(n, {});
    for (Vertex v = 0; v < n; ++v) members_[forced.find(v)].push_back(v);
    leader_of_.resize(n);
    for (Vertex v = 0; v < n; ++v) leader_of_[v] = forced.find(v);
    if (search(0)) {
      report_.verdict = Verdict::Pass;
      return std::move(report_);
    }
    report_.reason = saw_full_colouring_
                         ? "clause (b): no contraction is a B0 graph"
                         : "clause (a): every choice of H has a component whose closed neighbourhood is not interval";
    return std::move(report_);
  }

 private:
  std::string describe(const VertexSet& c) const {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + g_.label(c[i]);
    return out + "}";
  }

  bool interval_around(const VertexSet& c) const {
    return is_interval(induced_subgraph(g_, closed_neighborhood(g_, c)).graph);
  }

  // Monochromatic component of v among coloured vertices.
  VertexSet mono_component(Vertex v) const {
    std::vector<Vertex> stack{v}, out{v};
    std::vector<bool> in(g_.order(), false);
    in[v] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(u))
        if (!in[w] && colour_[w] == colour_[v]) {
          in[w] = true;
          stack.push_back(w);
          out.push_back(w);
        }
    }
    return make_set(out);
  }

  bool search(std::size_t depth) {
    if (++report_.nodes > opt_.node_limit)
      throw Error(ErrorCode::SearchBudgetExceeded, "necessity search exceeded its node limit");
    if (depth == order_.size()) return accept();
    const auto& cls = members_[leader_of_[order_[depth]]];
    for (int c = 0; c < (first_of_component_[depth] ? 1 : 2); ++c) {
      for (Vertex v : cls) colour_[v] = c;
      // interval neighbourhoods are hereditary, so a failing partial component never recovers
      if (interval_around(mono_component(cls.front())) && search(depth + 1)) return true;
    }
    for (Vertex v : cls) colour_[v] = -1;
    return false;
  }

  bool accept() {
    saw_full_colouring_ = true;
    const int n = g_.order();
    UnionFind uf(n);
    std::vector<Edge> h;
    for (const Edge& e : g_.edges())
      if (colour_[e.u] == colour_[e.v]) {
        h.push_back(e);
        uf.unite(e.u, e.v);
      }
    auto comps = groups(n, uf);
    std::vector<int> comp_of(n);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (Vertex v : comps[i]) comp_of[v] = static_cast<int>(i);
    std::vector<LabelledEdge> contracted;
    std::vector<std::string> names;
    for (const auto& c : comps) names.push_back(describe(c));
    for (const Edge& e : g_.edges()) {
      int a = comp_of[e.u], b = comp_of[e.v];
      if (a != b) contracted.emplace_back(names[std::min(a, b)], names[std::max(a, b)]);
    }
    std::sort(contracted.begin(), contracted.end());
    contracted.erase(std::unique(contracted.begin(), contracted.end()), contracted.end());
    Graph minor = build_graph(contracted, names);
    bool bipartite = is_bipartite(minor);
    std::optional<bool> b0;
    std::string note = "bipartite checked; B0 of contraction skipped";
    if (opt_.contraction_oracle && minor.order() <= opt_.oracle_max_vertices) {
      SearchBudget budget;
      budget.max_vertices = opt_.oracle_max_vertices;
      auto verdict = brute_force_b0(minor, budget);
      if (std::holds_alternative<NotB0>(verdict)) return false;
      if (std::holds_alternative<SegmentDrawing>(verdict)) {
        b0 = true;
        note = "bipartite checked; B0 of contraction checked";
      } else {
        note = "bipartite checked; B0 of contraction undecided within budget";
      }
    }
    report_.chosen_h = h;
    report_.components.clear();
    for (const auto& c : comps) report_.components.push_back({c, interval_around(c)});
    report_.contraction_bipartite = bipartite;
    report_.contraction_b0 = b0;
    report_.note = note;
    return true;
  }

  const Graph& g_;
  NecessityOptions opt_;
  NecessityReport report_;
  std::vector<int> colour_;
  std::vector<Vertex> order_;
  std::vector<bool> first_of_component_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<int> leader_of_;
  bool saw_full_colouring_ = false;
};

}  // namespace

NecessityReport check_necessary_conditions(const Graph& g, const NecessityOptions& options) {
  return HSearch(g, options).run();
}

}  // namespace opvg
