#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "opvg/b0draw.hpp"
#include "opvg/linearity.hpp"
#include "opvg/oracle.hpp"
#include "opvg/verify.hpp"
#include "support.hpp"

using namespace opvg;
using namespace opvg::test;

namespace {

Segment seg(long x1, long y1, long x2, long y2) {
  return Segment({Rational(x1), Rational(y1)}, {Rational(x2), Rational(y2)});
}

SegmentDrawing drawing(const std::vector<std::pair<std::string, Segment>>& items) {
  SegmentDrawing d;
  for (const auto& [v, s] : items) d.add(v, s);
  return d;
}

// Vertex subsets as bitmasks, small n only.
bool induces_long_cycle(const Graph& g, unsigned mask) {
  int k = __builtin_popcount(mask);
  if (k < 4) return false;
  VertexSet vs;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mask >> v & 1) vs.push_back(v);
  auto sub = induced_subgraph(g, vs).graph;
  for (Vertex v = 0; v < k; ++v)
    if (sub.degree(v) != 2) return false;
  return is_connected(sub);
}

bool chordal_brute(const Graph& g) {
  for (unsigned mask = 0; mask < (1u << g.order()); ++mask)
    if (induces_long_cycle(g, mask)) return false;
  return true;
}

// Interval iff the maximal cliques admit a linear order in which every vertex's
// cliques are consecutive.
bool interval_brute(const Graph& g) {
  const int n = g.order();
  auto clique = [&](unsigned m) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if ((m >> u & 1) && (m >> v & 1) && !g.adjacent(u, v)) return false;
    return true;
  };
  std::vector<unsigned> cliques;
  for (unsigned m = 1; m < (1u << n); ++m) {
    if (!clique(m)) continue;
    bool maximal = true;
    for (Vertex v = 0; v < n && maximal; ++v)
      if (!(m >> v & 1) && clique(m | 1u << v)) maximal = false;
    if (maximal) cliques.push_back(m);
  }
  std::vector<int> perm(cliques.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      int first = -1, last = -1, count = 0;
      for (int i = 0; i < static_cast<int>(perm.size()); ++i)
        if (cliques[perm[i]] >> v & 1) {
          if (first < 0) first = i;
          last = i;
          ++count;
        }
      ok = count == 0 || last - first + 1 == count;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::vector<Vertex>> simple_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> on(g.order(), false);
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex u) {
    for (Vertex w : g.neighbors(u)) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= s || on[w]) continue;
      on[w] = true;
      path.push_back(w);
      dfs(s, w);
      path.pop_back();
      on[w] = false;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    on[s] = true;
    dfs(s, s);
    on[s] = false;
  }
  return out;
}

void check_parity(const Graph& g, const NecessityReport& r) {
  REQUIRE(r.chosen_h);
  const auto& h = *r.chosen_h;
  for (const Edge& e : r.forced_edges) CHECK(std::find(h.begin(), h.end(), e) != h.end());
  for (const auto& c : simple_cycles(g)) {
    if (c.size() % 2 == 0) continue;
    int in_h = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      in_h += std::count(h.begin(), h.end(), Edge(c[i], c[(i + 1) % c.size()]));
    CHECK(in_h % 2 == 1);
  }
}

}  // namespace

TEST_CASE("intersection graph of hand-made drawings") {
  auto d = drawing({{"a", seg(0, 0, 2, 0)}, {"b", seg(3, 0, 5, 0)}, {"c", seg(1, 0, 4, 0)},
                    {"d", seg(4, -1, 4, 3)}, {"e", seg(6, 6, 6, 6)}, {"f", seg(5, 0, 5, 0)}});
  auto g = intersection_graph(d);
  CHECK_FALSE(g.adjacent(g.at("a"), g.at("b")));
  CHECK(g.adjacent(g.at("a"), g.at("c")));
  CHECK(g.adjacent(g.at("c"), g.at("d")));
  CHECK(g.adjacent(g.at("b"), g.at("d")));
  CHECK(g.adjacent(g.at("b"), g.at("f")));
  CHECK(g.degree(g.at("e")) == 0);
  CHECK(g.size() == 5);
  auto bad = drawing({{"a", seg(0, 0, 1, 1)}});
  CHECK_THROWS_AS(intersection_graph(bad), Error);
}

TEST_CASE("verify_drawing") {
  auto fig2 = fixture("fig2_outerpath");
  auto d = draw_biconnected_outerpath(fig2);
  CHECK(verify_drawing(fig2, d));
  auto recomputed = intersection_graph(d);
  CHECK(recomputed == fig2);

  // shrink a segment to its first endpoint until some edge disappears
  bool broke = false;
  for (std::size_t i = 0; i < d.size() && !broke; ++i) {
    auto m = d;
    m.segments[i] = Segment(m.segments[i].p1, m.segments[i].p1);
    broke = !verify_drawing(fig2, m);
  }
  CHECK(broke);

  CHECK(verify_drawing(Graph(), SegmentDrawing()));
  auto missing = d;
  missing.erase(d.vertices.front());
  CHECK_THROWS_AS(verify_drawing(fig2, missing), Error);
  auto dup = d;
  dup.vertices[1] = dup.vertices[0];
  CHECK_THROWS_AS(verify_drawing(fig2, dup), Error);
}

TEST_CASE("collinearity classes") {
  auto p3 = path(3);
  auto d = drawing({{"0", seg(0, 0, 2, 0)}, {"1", seg(1, 0, 4, 0)}, {"2", seg(3, 0, 6, 0)}});
  CHECK(collinearity_classes(p3, d) == std::vector<VertexSet>{{0, 1, 2}});

  auto c4 = cycle(4);
  auto dc4 = draw_biconnected_outerpath(c4);
  CHECK(collinearity_classes(c4, dc4).size() == 4);

  auto fig2 = fixture("fig2_outerpath");
  auto df = draw_biconnected_outerpath(fig2);
  auto classes = collinearity_classes(fig2, df);
  // partition
  std::vector<int> cls(fig2.order(), -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Vertex v : classes[i]) {
      CHECK(cls[v] == -1);
      cls[v] = static_cast<int>(i);
    }
  CHECK(std::count(cls.begin(), cls.end(), -1) == 0);
  // every class is connected under collinear intersection, no such pair crosses classes
  auto on_line = [&](Vertex u, Vertex v) {
    const Segment& a = df.at(fig2.label(u));
    const Segment& b = df.at(fig2.label(v));
    if (!intersects(a, b)) return false;
    bool ha = a.p1.y == a.p2.y, hb = b.p1.y == b.p2.y;
    return ha == hb && (ha ? a.p1.y == b.p1.y : a.p1.x == b.p1.x);
  };
  std::size_t multi = 0;
  for (const auto& c : classes) {
    if (c.size() > 1) ++multi;
    std::vector<Vertex> reach{c.front()};
    for (std::size_t i = 0; i < reach.size(); ++i)
      for (Vertex w : c)
        if (std::find(reach.begin(), reach.end(), w) == reach.end() && on_line(reach[i], w)) reach.push_back(w);
    CHECK(reach.size() == c.size());
  }
  for (Vertex u = 0; u < fig2.order(); ++u)
    for (Vertex v = 0; v < fig2.order(); ++v)
      if (cls[u] != cls[v]) CHECK_FALSE(on_line(u, v));
  CHECK(multi > 0);
}

TEST_CASE("diamond diagonals") {
  auto diamond = numbered_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK(diamond_diagonals(diamond) == std::vector<Edge>{Edge(0, 2)});
  CHECK(diamond_diagonals(three_sun()) == std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(1, 2)});
  CHECK(diamond_diagonals(cycle(6)).empty());
  CHECK(diamond_diagonals(numbered_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}})).empty());
}

TEST_CASE("chordal, interval and bipartite recognition") {
  CHECK(is_chordal(three_sun()));
  CHECK_FALSE(is_interval(three_sun()));
  for (int n = 1; n <= 8; ++n) CHECK(is_interval(path(n)));
  CHECK_FALSE(is_bipartite(cycle(7)));
  CHECK(is_bipartite(cycle(8)));
  CHECK_FALSE(is_chordal(cycle(4)));
  std::mt19937 rng(9);
  for (int t = 0; t < 600; ++t) {
    auto g = random_graph(3 + t % 5, 0.5, rng);
    CHECK(is_chordal(g) == chordal_brute(g));
    CHECK(is_interval(g) == interval_brute(g));
  }
}

TEST_CASE("necessity check on graphs that are not B0") {
  auto sun = check_necessary_conditions(three_sun());
  CHECK(sun.verdict == Verdict::Fail);
  CHECK(sun.reason.find("clause (a)") == 0);
  REQUIRE(sun.components.size() == 1);
  CHECK(sun.components[0].component == VertexSet{0, 1, 2});
  CHECK_FALSE(sun.components[0].neighborhood_interval);
  for (const char* name : {"fig5a_3sun", "fig5b_kite", "fig5c_bookmark", "fig5d_ninja_star", "fig5e_c4_petals",
                           "fig5f", "fig5g"}) {
    INFO(name);
    CHECK(check_necessary_conditions(fixture(name)).verdict == Verdict::Fail);
  }
}

TEST_CASE("necessity check passes where it cannot decide") {
  for (const char* name : {"fig7_drawn", "fig7_insufficient"}) {
    auto g = fixture(name);
    auto r = check_necessary_conditions(g);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.contraction_bipartite == true);
    CHECK(r.note.find("bipartite checked") == 0);
  }
}

TEST_CASE("necessity check is sound and its H meets every odd cycle oddly") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& g : enumerate_outerplanar(n)) {
      auto r = check_necessary_conditions(g);
      auto b0 = brute_force_b0(g);
      if (std::holds_alternative<SegmentDrawing>(b0)) CHECK(r.verdict == Verdict::Pass);
      if (r.verdict == Verdict::Pass) check_parity(g, r);
    }
  NecessityOptions no_oracle;
  no_oracle.contraction_oracle = false;
  for (int n = 7; n <= 8; ++n)
    for (const auto& g : enumerate_outerplanar(n))
      if (is_linear_graph(g)) {
        auto r = check_necessary_conditions(g, no_oracle);
        CHECK(r.verdict == Verdict::Pass);
        check_parity(g, r);
      }
}

TEST_CASE("necessity search budget") {
  NecessityOptions tight;
  tight.node_limit = 5;
  CHECK_THROWS_AS(check_necessary_conditions(fixture("fig5g"), tight), Error);
}
