#include <algorithm>
#include <atomic>
#include <climits>

#include "opvg/oracle.hpp"

namespace opvg {

namespace {

using Coord = std::int64_t;
constexpr Coord kSpread = Coord(1) << 40;

// Closed axis-parallel box; y1 == y2 for horizontal and point segments.
struct ISeg {
  Coord x1, y1, x2, y2;
};

bool meets(const ISeg& a, const ISeg& b) {
  return std::max(a.x1, b.x1) <= std::min(a.x2, b.x2) && std::max(a.y1, b.y1) <= std::min(a.y2, b.y2);
}

// Order-type positions on one axis: every used value, one value inside each gap,
// and one beyond each end.
struct Axis {
  std::vector<Coord> used;  // sorted, distinct

  explicit Axis(std::vector<Coord> values) : used(std::move(values)) {
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
  }

  std::vector<Coord> positions() const {
    if (used.empty()) return {0};
    std::vector<Coord> out{used.front() - kSpread};
    for (std::size_t i = 0; i < used.size(); ++i) {
      out.push_back(used[i]);
      out.push_back(i + 1 < used.size() ? used[i] + (used[i + 1] - used[i]) / 2 : used[i] + kSpread);
    }
    return out;
  }

  // Positions strictly after a, once a has been added to the axis.
  std::vector<Coord> positions_after(Coord a) const {
    std::vector<Coord> out;
    auto next = std::upper_bound(used.begin(), used.end(), a);
    if (next == used.end()) return {a + kSpread};
    out.push_back(a + (*next - a) / 2);
    for (auto it = next; it != used.end(); ++it) {
      out.push_back(*it);
      out.push_back(it + 1 != used.end() ? *it + (*(it + 1) - *it) / 2 : *it + kSpread);
    }
    return out;
  }
};

class B0Search {
 public:
  B0Search(const Graph& g, std::uint64_t limit, std::atomic<std::uint64_t>& nodes)
      : g_(g), limit_(limit), nodes_(nodes), seg_(g.order()), placed_(g.order(), false) {}

  // All placements of v consistent with the placed segments.
  std::vector<ISeg> candidates(Vertex v) const {
    std::vector<Coord> xs, ys;
    std::vector<Vertex> others;
    for (Vertex u = 0; u < g_.order(); ++u)
      if (placed_[u]) {
        xs.insert(xs.end(), {seg_[u].x1, seg_[u].x2});
        ys.insert(ys.end(), {seg_[u].y1, seg_[u].y2});
        others.push_back(u);
      }
    Axis ax(std::move(xs)), ay(std::move(ys));
    std::vector<ISeg> out;
    auto keep = [&](const ISeg& s) {
      for (Vertex u : others)
        if (meets(s, seg_[u]) != g_.adjacent(v, u)) return;
      out.push_back(s);
    };
    auto px = ax.positions(), py = ay.positions();
    for (Coord a : px) {
      auto after = ax.positions_after(a);
      for (Coord y : py) {
        keep({a, y, a, y});
        for (Coord b : after) keep({a, y, b, y});
      }
    }
    for (Coord a : py) {
      auto after = ay.positions_after(a);
      for (Coord x : px)
        for (Coord b : after) keep({x, a, x, b});
    }
    return out;
  }

  void place(Vertex v, const ISeg& s) {
    seg_[v] = s;
    placed_[v] = true;
  }
  void unplace(Vertex v) { placed_[v] = false; }

  // Unplaced vertex with a placed neighbour and the fewest placements; false if
  // some such vertex has none. `done` when every vertex is placed.
  bool choose(Vertex& best, std::vector<ISeg>& best_cands, bool& done) const {
    best = -1;
    done = true;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (placed_[v]) continue;
      done = false;
      bool touches = false;
      for (Vertex w : g_.neighbors(v)) touches = touches || placed_[w];
      if (!touches) continue;
      auto c = candidates(v);
      if (c.empty()) return false;
      if (best < 0 || c.size() < best_cands.size()) {
        best = v;
        best_cands = std::move(c);
      }
    }
    return true;
  }

  // True: drawing completed. Sets exhausted_ when the node limit stops the search.
  bool extend() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= limit_) {
      exhausted_ = true;
      return false;
    }
    Vertex v;
    std::vector<ISeg> cands;
    bool done;
    if (!choose(v, cands, done)) return false;
    if (done) return true;
    for (const ISeg& s : cands) {
      place(v, s);
      if (extend()) return true;
      unplace(v);
      if (exhausted_) return false;
    }
    return false;
  }

  bool exhausted() const { return exhausted_; }
  const std::vector<ISeg>& segments() const { return seg_; }

 private:
  const Graph& g_;
  std::uint64_t limit_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<ISeg> seg_;
  std::vector<bool> placed_;
  bool exhausted_ = false;
};

struct Outcome {
  enum { Found, Absent, Unknown } kind;
  std::vector<ISeg> segments;
};

// Connected g. A vertex of maximum degree goes first, horizontal or a point by
// a quarter turn; its neighbours' placements split the search into root branches.
Outcome search_connected(const Graph& g, std::uint64_t limit, std::atomic<std::uint64_t>& nodes, bool parallel) {
  if (g.order() == 1) return {Outcome::Found, {ISeg{0, 0, 0, 0}}};
  Vertex first = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(first)) first = v;
  struct Root {
    ISeg first_seg;
    Vertex second;
    ISeg second_seg;
  };
  std::vector<Root> roots;
  for (const ISeg& s0 : {ISeg{0, 0, kSpread, 0}, ISeg{0, 0, 0, 0}}) {
    B0Search s(g, limit, nodes);
    s.place(first, s0);
    Vertex v;
    std::vector<ISeg> cands;
    bool done;
    if (!s.choose(v, cands, done)) continue;
    for (const ISeg& c : cands) roots.push_back({s0, v, c});
  }
  const int count = static_cast<int>(roots.size());
  std::vector<std::vector<ISeg>> found(count);
  std::atomic<int> best{INT_MAX};
  std::atomic<bool> unknown{false};
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < count; ++i) {
    if (i > best.load() || unknown.load()) continue;
    B0Search s(g, limit, nodes);
    s.place(first, roots[i].first_seg);
    s.place(roots[i].second, roots[i].second_seg);
    if (s.extend()) {
      found[i] = s.segments();
      int cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    } else if (s.exhausted()) {
      unknown = true;
    }
  }
  if (best.load() != INT_MAX) return {Outcome::Found, found[best.load()]};
  return {unknown ? Outcome::Unknown : Outcome::Absent, {}};
}

B0Verdict run(const Graph& g, const SearchBudget& budget, bool parallel) {
  std::atomic<std::uint64_t> nodes{0};
  if (g.order() > budget.max_vertices) return Indeterminate{0};
  SegmentDrawing out;
  Rational offset = 0;
  bool unknown = false;
  for (const VertexSet& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    auto r = search_connected(sub.graph, budget.node_limit, nodes, parallel);
    if (r.kind == Outcome::Absent) return NotB0{};
    if (r.kind == Outcome::Unknown) {
      unknown = true;
      continue;
    }
    Coord xmin = LLONG_MAX, xmax = LLONG_MIN;
    for (const ISeg& s : r.segments) {
      xmin = std::min(xmin, s.x1);
      xmax = std::max(xmax, s.x2);
    }
    for (Vertex v = 0; v < sub.graph.order(); ++v) {
      const ISeg& s = r.segments[v];
      out.add(sub.graph.label(v), Segment({offset + (s.x1 - xmin), Rational(s.y1)}, {offset + (s.x2 - xmin), Rational(s.y2)}));
    }
    offset += Rational(xmax - xmin) + 1;
  }
  if (unknown) return Indeterminate{nodes.load()};
  return out;
}

}  // namespace

B0Verdict brute_force_b0(const Graph& g, const SearchBudget& budget) { return run(g, budget, true); }
B0Verdict brute_force_b0_serial(const Graph& g, const SearchBudget& budget) { return run(g, budget, false); }

}  // namespace opvg
