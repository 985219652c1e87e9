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

struct Walk {
  Graph g;
  OuterplanarEmbedding emb;
  OuterpathOrder order;
};

Walk walk(const Graph& g) {
  auto emb = embed_outerplanar(g);
  auto order = outerpath_order(emb, 0);
  return {g, emb, order};
}

Edge edge_out(const OuterpathOrder& o, int i) {
  return i + 1 < static_cast<int>(o.faces.size()) ? o.shared[i] : o.last;
}

// Runs the construction face by face and checks every intermediate drawing.
void check_every_step(const Graph& g) {
  auto w = walk(g);
  const int n = static_cast<int>(w.order.faces.size());
  DrawStep st;
  VertexSet drawn;
  std::size_t total_length = 0;
  for (int i = 0; i < n; ++i) {
    const Face& f = w.emb.faces[w.order.faces[i]];
    if (i == 0)
      st = draw_base_face(g, f, edge_out(w.order, 0));
    else
      attach_face(g, st, f, w.order.shared[i - 1], edge_out(w.order, i));
    REQUIRE(state_valid(st));
    drawn = make_set([&] { auto v = drawn; v.insert(v.end(), f.cycle.begin(), f.cycle.end()); return v; }());
    auto sub = induced_subgraph(g, drawn).graph;
    REQUIRE(verify_drawing(sub, st.drawing.to_drawing(g)));
    if (f.length() == 3) {
      REQUIRE(st.state.apex);
      CHECK(st.drawing.segments[*st.state.apex]->is_point());
    }
    total_length += f.length();
    Box box = st.drawing.bounding_box();
    CHECK(box.xmax - box.xmin <= 4 * total_length);
    CHECK(box.ymax - box.ymin <= 4 * total_length);
  }
}

}  // namespace

TEST_CASE("triangle base face is three coincident points") {
  auto g = cycle(3);
  auto w = walk(g);
  auto st = draw_base_face(g, w.emb.faces[0], Edge(0, 1));
  for (Vertex v = 0; v < 3; ++v) CHECK(*st.drawing.segments[v] == Segment({0, 0}, {0, 0}));
  CHECK(st.state.free.size() == 4);
  CHECK(state_valid(st));
}

TEST_CASE("C4 base face is a unit rectangle with e1 at a corner") {
  auto g = cycle(4);
  auto w = walk(g);
  auto st = draw_base_face(g, w.emb.faces[0], Edge(1, 2));
  auto d = st.drawing.to_drawing(g);
  CHECK(verify_drawing(g, d));
  Box b = d.bounding_box();
  CHECK(b.xmin == 0);
  CHECK(b.ymin == 0);
  CHECK(b.xmax == 1);
  CHECK(b.ymax == 1);
  const Segment& s1 = d.at("1");
  const Segment& s2 = d.at("2");
  CHECK(s1.is_horizontal() != s2.is_horizontal());
  CHECK(!s1.is_point());
  CHECK(!s2.is_point());
  Point corner = st.state.p;
  CHECK(((corner.x == 0 || corner.x == 1) && (corner.y == 0 || corner.y == 1)));
  CHECK((corner == s1.p1 || corner == s1.p2));
  CHECK((corner == s2.p1 || corner == s2.p2));
  CHECK(state_valid(st));
}

TEST_CASE("C6 base face lies on a rectangle") {
  auto g = cycle(6);
  auto w = walk(g);
  auto st = draw_base_face(g, w.emb.faces[0], Edge(2, 3));
  auto d = st.drawing.to_drawing(g);
  CHECK(verify_drawing(g, d));
  Box b = d.bounding_box();
  for (const auto& s : d.segments) {
    CHECK(!s.is_point());
    bool on_side = (s.p1.x == s.p2.x && (s.p1.x == b.xmin || s.p1.x == b.xmax)) ||
                   (s.p1.y == s.p2.y && (s.p1.y == b.ymin || s.p1.y == b.ymax));
    CHECK(on_side);
  }
}

TEST_CASE("triangle on a rectangle edge with orthogonal ends is a point at p") {
  // square 0,1,2,3 and triangle 1,2,4
  auto g = numbered_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {2, 4}});
  auto w = walk(g);
  REQUIRE(w.emb.faces[w.order.faces[0]].length() == 4);
  auto st = draw_base_face(g, w.emb.faces[w.order.faces[0]], Edge(1, 2));
  Point p = st.state.p;
  attach_face(g, st, w.emb.faces[w.order.faces[1]], Edge(1, 2), w.order.last);
  CHECK(*st.drawing.segments[4] == Segment(p, p));
  CHECK(state_valid(st));
  CHECK(verify_drawing(g, st.drawing.to_drawing(g)));
}

TEST_CASE("pentagon with an interior outgoing edge bends at q") {
  // square 0..3, pentagon 1,2,4,5,6 glued on 1-2, then a triangle on 4-5
  auto g = numbered_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 5}, {5, 6}, {6, 1}, {4, 7}, {5, 7}});
  auto w = walk(g);
  REQUIRE(w.order.faces.size() == 3);
  auto st = draw_base_face(g, w.emb.faces[w.order.faces[0]], w.order.shared[0]);
  Box before = st.drawing.bounding_box();
  attach_face(g, st, w.emb.faces[w.order.faces[1]], w.order.shared[0], w.order.shared[1]);
  const Segment& l4 = *st.drawing.segments[4];
  const Segment& l5 = *st.drawing.segments[5];
  CHECK(l4.is_horizontal() != l5.is_horizontal());
  Point q = st.state.p;
  // q lies outside the old bounding box on both axes
  CHECK((q.x < before.xmin || q.x > before.xmax));
  CHECK((q.y < before.ymin || q.y > before.ymax));
  CHECK(state_valid(st));
  check_every_step(g);
}

TEST_CASE("two consecutive triangles") {
  // fan 0-1-2-3 around 0
  auto g = numbered_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}});
  auto w = walk(g);
  auto st = draw_base_face(g, w.emb.faces[w.order.faces[0]], w.order.shared[0]);
  Point p = st.state.p;
  attach_face(g, st, w.emb.faces[w.order.faces[1]], w.order.shared[0], w.order.last);
  Vertex apex = *st.state.apex;
  CHECK(st.drawing.segments[apex]->is_point());
  CHECK(st.state.p != p);
  CHECK(verify_drawing(g, st.drawing.to_drawing(g)));
}

TEST_CASE("outerpath fixtures and families") {
  auto fig2 = fixture("fig2_outerpath");
  CHECK(verify_drawing(fig2, draw_biconnected_outerpath(fig2)));
  check_every_step(fig2);
  for (int n = 3; n <= 12; ++n) {
    auto d = draw_biconnected_outerpath(cycle(n));
    CHECK(d.size() == static_cast<std::size_t>(n));
    CHECK(verify_drawing(cycle(n), d));
  }
  // triangle strip
  std::vector<std::pair<int, int>> e{{0, 1}};
  for (int v = 2; v < 12; ++v) {
    e.emplace_back(v - 1, v);
    e.emplace_back(v - 2, v);
  }
  auto strip = numbered_graph(12, e);
  check_every_step(strip);
  CHECK_THROWS_AS(draw_biconnected_outerpath(fixture("fig4a")), Error);
}

TEST_CASE("every outerpath up to ten vertices, step by step") {
  auto all = enumerate_biconnected_outerpaths(10);
  CHECK(all.size() == 757);
  for (const auto& g : all) check_every_step(g);
}

TEST_CASE("random long outerpaths") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto g = random_outerpath(5 + t, 7, rng);
    REQUIRE(is_biconnected_outerpath(g));
    check_every_step(g);
  }
}

TEST_CASE("linear outerplanar graphs through the augmented outerpath") {
  for (const char* name : {"fig4a", "fig1_linear_outerplanar", "fig7_drawn"}) {
    auto g = fixture(name);
    CHECK(verify_drawing(g, draw_linear_outerplanar(g)));
  }
  auto cp = c5_pendant();
  CHECK(verify_drawing(cp, draw_linear_outerplanar(cp)));
  for (int n = 1; n <= 9; ++n) {
    auto d = draw_linear_outerplanar(path(n));
    CHECK(verify_drawing(path(n), d));
  }
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : enumerate_outerplanar(n))
      if (is_linear_graph(g)) CHECK(verify_drawing(g, draw_linear_outerplanar(g)));
  CHECK(draw_linear_outerplanar(Graph()).size() == 0);
  CHECK_THROWS_AS(draw_linear_outerplanar(three_sun()), Error);
}
