#include "opvg/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "opvg/outerplanar.hpp"

namespace opvg {

// ---------------------------------------------------------------------------
// canonical form: colour refinement, individualization, minimum leaf

namespace {

using Partition = std::vector<std::vector<int>>;

struct Canonizer {
  int n;
  std::vector<std::vector<char>> adj;
  std::string best;
  bool have_best = false;

  explicit Canonizer(const Graph& g) : n(g.order()), adj(n, std::vector<char>(n, 0)) {
    for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  }

  void refine(Partition& p) const {
    std::vector<int> cell_of(n);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < static_cast<int>(p.size()); ++c)
        for (int v : p[c]) cell_of[v] = c;
      Partition next;
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sig;
        for (int v : cell) {
          std::vector<int> counts(p.size(), 0);
          for (int w = 0; w < n; ++w)
            if (adj[v][w]) ++counts[cell_of[w]];
          sig.emplace_back(std::move(counts), v);
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> group{sig[0].second};
        for (std::size_t i = 1; i < sig.size(); ++i) {
          if (sig[i].first != sig[i - 1].first) {
            next.push_back(group);
            group.clear();
            changed = true;
          }
          group.push_back(sig[i].second);
        }
        next.push_back(group);
      }
      p = std::move(next);
    }
  }

  bool twins(int u, int v) const {
    for (int w = 0; w < n; ++w)
      if (w != u && w != v && adj[u][w] != adj[v][w]) return false;
    return true;
  }

  void search(Partition p) {
    refine(p);
    int target = -1;
    for (int c = 0; c < static_cast<int>(p.size()); ++c)
      if (p[c].size() > 1 && (target < 0 || p[c].size() < p[target].size())) target = c;
    if (target < 0) {
      std::string s;
      s.reserve(n * (n - 1) / 2);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s.push_back(adj[p[i][0]][p[j][0]] ? '1' : '0');
      if (!have_best || s < best) {
        best = std::move(s);
        have_best = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v : p[target]) {
      // swapping twins is an automorphism fixing the current partition
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Partition q;
      for (int c = 0; c < static_cast<int>(p.size()); ++c) {
        if (c != target) {
          q.push_back(p[c]);
          continue;
        }
        q.push_back({v});
        std::vector<int> rest;
        for (int w : p[c])
          if (w != v) rest.push_back(w);
        q.push_back(std::move(rest));
      }
      search(std::move(q));
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() == 0) return "0:";
  Canonizer c(g);
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  c.search({all});
  return std::to_string(g.order()) + ":" + c.best;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

Graph with_new_vertex(const Graph& g, unsigned mask) {
  Graph h = g;
  Vertex x = h.add_vertex(std::to_string(g.order()));
  for (int i = 0; i < g.order(); ++i)
    if (mask >> i & 1u) h.add_edge(i, x);
  return h;
}

// Every connected graph on n vertices has a non-cut vertex, so it arises from a
// connected graph on n-1 vertices by adding one vertex.
std::vector<Graph> grow(const std::vector<Graph>& parents, bool parallel) {
  std::map<std::string, Graph> found;
  std::mutex lock;
  const int count = static_cast<int>(parents.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < count; ++i) {
    const Graph& p = parents[i];
    std::map<std::string, Graph> local;
    for (unsigned mask = 1; mask < (1u << p.order()); ++mask) {
      Graph h = with_new_vertex(p, mask);
      if (!is_outerplanar(h)) continue;
      auto key = canonical_form(h);
      if (!local.count(key)) local.emplace(std::move(key), std::move(h));
    }
    std::lock_guard<std::mutex> guard(lock);
    found.merge(local);
  }
  std::vector<Graph> out;
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate(int n, bool parallel) {
  if (n < 1) return {};
  std::vector<Graph> level{numbered_graph(1, {})};
  for (int k = 2; k <= n; ++k) level = grow(level, parallel);
  return level;
}

}  // namespace

std::vector<Graph> enumerate_outerplanar(int n) { return enumerate(n, true); }
std::vector<Graph> enumerate_outerplanar_serial(int n) { return enumerate(n, false); }

namespace {

using Chord = std::pair<int, int>;

bool crosses(Chord a, Chord b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

std::vector<Chord> normalize(std::vector<Chord> cs) {
  for (auto& [a, b] : cs)
    if (a > b) std::swap(a, b);
  std::sort(cs.begin(), cs.end());
  return cs;
}

// Smallest chord list over the dihedral group of the m-gon.
std::vector<Chord> dihedral_min(const std::vector<Chord>& cs, int m) {
  std::vector<Chord> best;
  for (int r = 0; r < m; ++r)
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<Chord> img;
      for (auto [a, b] : cs) {
        auto f = [&](int x) { return flip ? (m - x + r) % m : (x + r) % m; };
        img.emplace_back(f(a), f(b));
      }
      img = normalize(std::move(img));
      if (best.empty() || img < best) best = std::move(img);
    }
  return best;
}

Graph dissection_graph(int m, const std::vector<Chord>& cs) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  for (auto c : cs) edges.push_back(c);
  return numbered_graph(m, edges);
}

void dissections(int m, const std::vector<Chord>& all, std::size_t next, std::vector<Chord>& chosen,
                 std::set<std::vector<Chord>>& out) {
  if (next == all.size()) {
    out.insert(dihedral_min(chosen, m));
    return;
  }
  dissections(m, all, next + 1, chosen, out);
  if (std::none_of(chosen.begin(), chosen.end(), [&](Chord c) { return crosses(c, all[next]); })) {
    chosen.push_back(all[next]);
    dissections(m, all, next + 1, chosen, out);
    chosen.pop_back();
  }
}

std::vector<std::vector<Chord>> all_dissections(int m) {
  std::vector<Chord> all;
  for (int i = 0; i < m; ++i)
    for (int j = i + 2; j < m; ++j)
      if (!(i == 0 && j == m - 1)) all.emplace_back(i, j);
  std::set<std::vector<Chord>> out;
  std::vector<Chord> chosen;
  dissections(m, all, 0, chosen, out);
  return {out.begin(), out.end()};
}

bool dual_is_path(int m, const std::vector<Chord>& cs) {
  // each face meets at most two chords iff the dual tree is a path
  auto emb = embed_outerplanar(dissection_graph(m, cs));
  return is_linear_forest(weak_dual(emb));
}

const std::vector<Graph>& outerpaths_on(int m) {
  static std::mutex lock;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<Graph> out;
  for (const auto& cs : all_dissections(m))
    if (dual_is_path(m, cs)) out.push_back(dissection_graph(m, cs));
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace

std::vector<Graph> enumerate_biconnected_outerplanar(int m) {
  std::vector<Graph> out;
  if (m < 3) return out;
  for (const auto& cs : all_dissections(m)) out.push_back(dissection_graph(m, cs));
  return out;
}

std::vector<Graph> enumerate_biconnected_outerpaths(int max_n) {
  std::vector<Graph> out;
  for (int m = 3; m <= max_n; ++m) {
    const auto& level = outerpaths_on(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// subgraph search

namespace {

struct Matcher {
  const Graph& p;
  const Graph& h;
  bool induced;
  std::vector<Vertex> order;
  std::vector<Vertex> map;
  std::vector<bool> used;

  Matcher(const Graph& pattern, const Graph& host, bool ind)
      : p(pattern), h(host), induced(ind), map(pattern.order(), -1), used(host.order(), false) {
    std::vector<bool> placed(p.order(), false);
    for (int k = 0; k < p.order(); ++k) {
      Vertex pick = -1;
      int best_links = -1;
      for (Vertex v = 0; v < p.order(); ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (Vertex w : p.neighbors(v)) links += placed[w];
        if (links > best_links || (links == best_links && p.degree(v) > p.degree(pick))) {
          pick = v;
          best_links = links;
        }
      }
      placed[pick] = true;
      order.push_back(pick);
    }
  }

  bool fits(Vertex v, Vertex x) const {
    if (used[x] || h.degree(x) < p.degree(v)) return false;
    for (std::size_t k = 0; k < order.size() && map[order[k]] >= 0; ++k) {
      Vertex w = order[k];
      if (w == v) continue;
      bool pe = p.adjacent(v, w), he = h.adjacent(x, map[w]);
      if (pe && !he) return false;
      if (induced && !pe && he) return false;
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    Vertex v = order[k];
    Vertex anchor = -1;
    for (Vertex w : p.neighbors(v))
      if (map[w] >= 0) anchor = w;
    auto attempt = [&](Vertex x) {
      if (!fits(v, x)) return false;
      map[v] = x;
      used[x] = true;
      if (extend(k + 1)) return true;
      map[v] = -1;
      used[x] = false;
      return false;
    };
    if (anchor >= 0) {
      for (Vertex x : h.neighbors(map[anchor]))
        if (attempt(x)) return true;
    } else {
      for (Vertex x = 0; x < h.order(); ++x)
        if (attempt(x)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& host, bool induced) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
  Matcher m(pattern, host, induced);
  if (!m.extend(0)) return std::nullopt;
  return m.map;
}

bool brute_force_linear(const Graph& g) {
  if (g.order() < 3) return true;
  for (const Graph& h : outerpaths_on(g.order()))
    if (find_embedding(g, h, false)) return true;
  return false;
}

}  // namespace opvg
