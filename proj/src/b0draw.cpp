#include "opvg/b0draw.hpp"

#include <algorithm>

#include "opvg/augment.hpp"
#include "opvg/verify.hpp"

namespace opvg {

namespace {

constexpr Direction kDirections[] = {Direction::Right, Direction::Up, Direction::Left, Direction::Down};

bool perpendicular(Direction a, Direction b) { return horizontal(a) != horizontal(b); }

// First point on the ray from p past the bounding box expanded by one unit.
Point beyond(const Box& box, const Point& p, Direction d) {
  switch (d) {
    case Direction::Right: return {box.xmax + 1, p.y};
    case Direction::Up: return {p.x, box.ymax + 1};
    case Direction::Left: return {box.xmin - 1, p.y};
    case Direction::Down: return {p.x, box.ymin - 1};
  }
  return p;
}

Segment hull(const Segment& s, const Point& q) {
  return Segment(std::min(s.p1, q), std::max(s.p2, q));
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

// Lays vs along from->to: consecutive ones overlap, the first contains `from`,
// the last contains `to`, the others are pairwise disjoint.
void lay_leg(PartialDrawing& d, const std::vector<Vertex>& vs, const Point& from, const Point& to) {
  const int r = static_cast<int>(vs.size());
  Rational delta(1, 2 * r + 1);
  for (int s = 1; s <= r; ++s)
    d.segments[vs[s - 1]] = Segment(lerp(from, to, delta * (2 * s - 2)), lerp(from, to, delta * (2 * s + 1)));
}

// v_0..v_k around the face, starting at v0 and ending at vk.
std::vector<Vertex> walk_from(const Face& face, Vertex v0, Vertex vk) {
  const auto& c = face.cycle;
  const int len = static_cast<int>(c.size());
  int at = static_cast<int>(std::find(c.begin(), c.end(), v0) - c.begin());
  int step = c[(at + 1) % len] == vk ? len - 1 : 1;
  std::vector<Vertex> out;
  for (int i = 0; i < len; ++i) out.push_back(c[(at + i * step) % len]);
  return out;
}

const Segment& seg(const DrawStep& st, Vertex v) {
  if (!st.drawing.segments[v]) throw Error(ErrorCode::InvariantBroken, "vertex not drawn yet");
  return *st.drawing.segments[v];
}

void set_state(DrawStep& st, Vertex x, Vertex y, Point p, std::optional<Vertex> apex) {
  st.state.x = x;
  st.state.y = y;
  st.state.free = free_directions(st.drawing, x, y, p);
  st.state.p = std::move(p);
  st.state.apex = apex;
}

// Case 1 with e_i = v_k v_0 already drawn through p, growing l_0 along d0 and l_k along dk.
void attach_long_face(DrawStep& st, const std::vector<Vertex>& v, Direction d0, Direction dk, Edge shared_out) {
  const int k = static_cast<int>(v.size()) - 1;
  int j = 0;
  while (j < k && Edge(v[j], v[j + 1]) != shared_out) ++j;
  if (j == k) throw Error(ErrorCode::InvariantBroken, "outgoing edge not on the face");
  Box box = st.drawing.bounding_box();
  const Point p = st.state.p;
  Point q0 = beyond(box, p, d0);
  Point qk = beyond(box, p, dk);
  Point q{q0.x + qk.x - p.x, q0.y + qk.y - p.y};
  auto& l0 = st.drawing.segments[v[0]];
  auto& lk = st.drawing.segments[v[k]];
  l0 = hull(*l0, q0);
  lk = hull(*lk, qk);
  const int m = std::clamp(j, 1, k - 2);
  lay_leg(st.drawing, {v.begin() + 1, v.begin() + m + 1}, q0, q);
  lay_leg(st.drawing, {v.begin() + m + 1, v.end() - 1}, q, qk);
  Point shared = j == 0 ? q0 : j == k - 1 ? qk : q;
  set_state(st, v[j], v[j + 1], shared, std::nullopt);
}

}  // namespace

Box PartialDrawing::bounding_box() const {
  Box box;
  bool first = true;
  for (const auto& s : segments) {
    if (!s) continue;
    if (first) {
      box = {s->p1.x, s->p1.y, s->p2.x, s->p2.y};
      first = false;
      continue;
    }
    box.xmin = std::min(box.xmin, s->p1.x);
    box.ymin = std::min(box.ymin, s->p1.y);
    box.xmax = std::max(box.xmax, s->p2.x);
    box.ymax = std::max(box.ymax, s->p2.y);
  }
  return box;
}

SegmentDrawing PartialDrawing::to_drawing(const Graph& g) const {
  SegmentDrawing out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (segments[v]) out.add(g.label(v), *segments[v]);
  return out;
}

std::vector<Direction> free_directions(const PartialDrawing& d, Vertex x, Vertex y, const Point& p) {
  std::vector<Direction> out;
  for (Direction dir : kDirections) {
    bool hit = false;
    for (Vertex v = 0; v < static_cast<Vertex>(d.segments.size()) && !hit; ++v)
      hit = v != x && v != y && d.segments[v] && ray_hits(p, dir, *d.segments[v]);
    if (!hit) out.push_back(dir);
  }
  return out;
}

std::vector<Direction> usable_directions(const Segment& s, const std::vector<Direction>& free) {
  std::vector<Direction> out;
  for (Direction d : free)
    if (s.is_point() || horizontal(d) == s.is_horizontal()) out.push_back(d);
  return out;
}

bool state_valid(const DrawStep& step) {
  const auto& st = step.state;
  const auto& segs = step.drawing.segments;
  if (!segs[st.x] || !segs[st.y]) return false;
  if (!segs[st.x]->contains(st.p) || !segs[st.y]->contains(st.p)) return false;
  if (st.free != free_directions(step.drawing, st.x, st.y, st.p)) return false;
  if (st.apex && !(segs[*st.apex] && segs[*st.apex]->is_point())) return false;
  for (Direction a : usable_directions(*segs[st.x], st.free))
    for (Direction b : usable_directions(*segs[st.y], st.free))
      if (a != opposite(b)) return true;
  return false;
}

DrawStep draw_base_face(const Graph& g, const Face& f1, Edge e1) {
  DrawStep st;
  st.drawing.segments.assign(g.order(), std::nullopt);
  const Point origin{0, 0};
  if (f1.length() == 3) {
    for (Vertex v : f1.cycle) st.drawing.segments[v] = Segment(origin, origin);
    Vertex apex = f1.cycle[0] + f1.cycle[1] + f1.cycle[2] - e1.u - e1.v;
    set_state(st, e1.u, e1.v, origin, apex);
    return st;
  }
  // Two points at the origin for a boundary edge other than e_1, then the long-face step.
  const auto& c = f1.cycle;
  int i = 0;
  while (Edge(c[i], c[(i + 1) % c.size()]) == e1) ++i;
  Vertex w0 = c[i], w1 = c[(i + 1) % c.size()];
  st.drawing.segments[w0] = Segment(origin, origin);
  st.drawing.segments[w1] = Segment(origin, origin);
  set_state(st, w0, w1, origin, std::nullopt);
  attach_long_face(st, walk_from(f1, w0, w1), Direction::Up, Direction::Right, e1);
  return st;
}

void attach_face(const Graph&, DrawStep& st, const Face& face, Edge shared_in, Edge shared_out) {
  if (Edge(st.state.x, st.state.y) != shared_in) throw Error(ErrorCode::InvariantBroken, "state is on another edge");
  const auto& free = st.state.free;
  if (face.length() >= 4) {
    Vertex v0 = st.state.x, vk = st.state.y;
    const Segment& l0 = seg(st, v0);
    const Segment& lk = seg(st, vk);
    for (Direction d0 : usable_directions(l0, free))
      for (Direction dk : usable_directions(lk, free))
        if (perpendicular(d0, dk)) {
          attach_long_face(st, walk_from(face, v0, vk), d0, dk, shared_out);
          return;
        }
    throw Error(ErrorCode::InvariantBroken, "no orthogonal extension for the shared edge");
  }
  Vertex a = shared_out.has(shared_in.u) ? shared_in.u : shared_in.v;
  Vertex c = shared_in.other(a);
  Vertex b = shared_out.other(a);
  const Segment la = seg(st, a);
  const Segment lc = seg(st, c);
  auto ua = usable_directions(la, free);
  auto uc = usable_directions(lc, free);
  for (Direction d : ua)
    if (std::find(uc.begin(), uc.end(), d) != uc.end()) {
      Point q = beyond(st.drawing.bounding_box(), st.state.p, d);
      st.drawing.segments[a] = hull(la, q);
      st.drawing.segments[c] = hull(lc, q);
      st.drawing.segments[b] = Segment(q, q);
      set_state(st, a, b, q, b);
      return;
    }
  // Orthogonal only: p must lie on l_a and l_c alone.
  const Point p = st.state.p;
  for (Vertex v = 0; v < static_cast<Vertex>(st.drawing.segments.size()); ++v)
    if (v != a && v != c && st.drawing.segments[v] && st.drawing.segments[v]->contains(p))
      throw Error(ErrorCode::InvariantBroken, "shared point is on a third segment");
  st.drawing.segments[b] = Segment(p, p);
  set_state(st, a, b, p, b);
}

SegmentDrawing draw_biconnected_outerpath(const Graph& g, const OuterplanarEmbedding& emb,
                                          const OuterpathOrder& order) {
  const int n = static_cast<int>(order.faces.size());
  auto edge_out = [&](int i) { return i + 1 < n ? order.shared[i] : order.last; };
  DrawStep st = draw_base_face(g, emb.faces[order.faces[0]], edge_out(0));
  if (!state_valid(st)) throw Error(ErrorCode::InvariantBroken, "base face drawing not extendable");
  for (int i = 1; i < n; ++i) {
    attach_face(g, st, emb.faces[order.faces[i]], order.shared[i - 1], edge_out(i));
    if (!state_valid(st)) throw Error(ErrorCode::InvariantBroken, "drawing not extendable after a face");
  }
  SegmentDrawing out = st.drawing.to_drawing(g);
  if (static_cast<int>(out.size()) != g.order() || !verify_drawing(g, out))
    throw Error(ErrorCode::InvariantBroken, "drawing does not represent the outerpath");
  return out;
}

SegmentDrawing draw_biconnected_outerpath(const Graph& g) {
  if (!is_biconnected_outerpath(g)) throw Error(ErrorCode::NotAnOuterpath, "not a biconnected outerpath");
  auto emb = embed_outerplanar(g);
  return draw_biconnected_outerpath(g, emb, outerpath_order(emb, 0));
}

SegmentDrawing draw_linear_outerplanar(const Graph& g) {
  if (g.order() == 0) return {};
  auto r = embed_in_biconnected_outerpath(g, AugmentMode::Induced);
  auto full = draw_biconnected_outerpath(r.supergraph, r.embedding, outerpath_order(r.embedding, 0));
  SegmentDrawing out;
  for (Vertex v = 0; v < g.order(); ++v) out.add(g.label(v), full.at(g.label(v)));
  if (!verify_drawing(g, out)) throw Error(ErrorCode::InvariantBroken, "restricted drawing does not represent g");
  return out;
}

}  // namespace opvg
