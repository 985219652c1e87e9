#include "opvg/augment.hpp"

#include <algorithm>

namespace opvg {

const char* to_string(ActionKind kind) noexcept {
  switch (kind) {
    case ActionKind::TuckAtA: return "tuck-a";
    case ActionKind::TuckAtB: return "tuck-b";
    case ActionKind::Bond: return "bond";
    case ActionKind::Chain: return "chain";
    case ActionKind::Close: return "close";
  }
  return "?";
}

std::vector<IncidentComponent> maximal_small_components(const Graph& g, const BlockDecomposition& dec) {
  std::vector<IncidentComponent> small;
  for (Vertex v : dec.cutvertices)
    for (auto& c : components_incident(g, v))
      if (c.small()) small.push_back(std::move(c));
  std::vector<IncidentComponent> out;
  for (const auto& c : small) {
    bool inside = std::any_of(small.begin(), small.end(), [&](const IncidentComponent& d) {
      return d.cutvertex != c.cutvertex && is_subset(c.vertices, d.vertices);
    });
    if (!inside) out.push_back(c);
  }
  auto key = [](const IncidentComponent& c) {
    Vertex first = c.vertices.front() == c.cutvertex ? c.vertices[1] : c.vertices.front();
    return std::make_pair(c.cutvertex, first);
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

namespace {

// Adds a connector between nonadjacent u and v; returns the vertex next to v on it.
Vertex add_connector(AugmentState& st, Vertex u, Vertex v, ActionRecord& record) {
  Graph& g = st.graph;
  if (u == v || g.adjacent(u, v))
    throw Error(ErrorCode::PreconditionViolated, "connector between adjacent vertices " + g.label(u) + " " + g.label(v));
  Connector c{g.label(u), g.label(v), std::nullopt};
  Vertex last = u;
  if (st.mode == AugmentMode::Spanning) {
    g.add_edge(u, v);
  } else {
    Vertex w = g.add_vertex(g.fresh_label("w"));
    g.add_edge(u, w);
    g.add_edge(w, v);
    c.middle = g.label(w);
    last = w;
  }
  st.connectors.push_back(c);
  record.connectors.push_back(std::move(c));
  return last;
}

int block_with(const BlockDecomposition& dec, Vertex x, Vertex y) {
  for (int b : dec.blocks_at[x])
    if (dec.blocks[b].contains(y)) return b;
  return -1;
}

// The cycle neighbours of v on the boundary of block b.
std::pair<Vertex, Vertex> boundary_neighbors(const OuterplanarEmbedding& emb, int b, Vertex v) {
  const auto& cyc = emb.block_embedding(b)->boundary;
  auto it = std::find(cyc.begin(), cyc.end(), v);
  std::size_t i = it - cyc.begin(), n = cyc.size();
  Vertex p = cyc[(i + n - 1) % n], q = cyc[(i + 1) % n];
  return {std::min(p, q), std::max(p, q)};
}

// Endpoints of the path induced on `rest` (equal if a single vertex).
std::pair<Vertex, Vertex> path_ends(const Graph& g, const VertexSet& rest) {
  std::vector<Vertex> ends;
  for (Vertex x : rest) {
    int d = 0;
    for (Vertex y : g.neighbors(x)) d += set_contains(rest, y);
    if (d <= 1) ends.push_back(x);
  }
  if (ends.size() == 1) return {ends[0], ends[0]};
  if (ends.size() != 2) throw Error(ErrorCode::InvariantBroken, "component minus cutvertex is not a path");
  return {ends[0], ends[1]};
}

VertexSet minus(const VertexSet& s, Vertex v) {
  VertexSet out;
  for (Vertex x : s)
    if (x != v) out.push_back(x);
  return out;
}

OuterplanarEmbedding embed_checked(const Graph& g) {
  auto r = recognize_outerplanar(g);
  if (auto* no = std::get_if<NotOuterplanar>(&r))
    throw Error(ErrorCode::InvariantBroken, "augmented graph is not outerplanar: " + no->reason);
  return std::get<OuterplanarEmbedding>(std::move(r));
}

const TerminalPair& stored(const AugmentState& st, const VertexSet& block) {
  auto it = st.terminals.find(block);
  if (it == st.terminals.end()) throw Error(ErrorCode::InvariantBroken, "block without terminal edges");
  return it->second;
}

// Terminals of a block at v: stored ones, or the convention for trivial blocks.
TerminalPair terminals_at(const AugmentState& st, const Block& block, Vertex v) {
  auto it = st.terminals.find(block.vertices);
  if (it != st.terminals.end()) return it->second;
  if (!block.trivial()) throw Error(ErrorCode::InvariantBroken, "block without terminal edges");
  Vertex x = block.vertices.front() == v ? block.vertices.back() : block.vertices.front();
  if (st.graph.degree(x) == 1) return {TerminalEdge{x, v}, TerminalEdge{x, v}};
  return {TerminalEdge{x, v}, TerminalEdge{v, x}};
}

}  // namespace

bool tuck_tail(AugmentState& st, const IncidentComponent& component) {
  Graph& g = st.graph;
  const Vertex v = component.cutvertex;
  auto dec = block_cut_decomposition(g);
  if (!dec.is_cutvertex(v)) return false;
  const Vertex probe = minus(component.vertices, v).front();
  IncidentComponent cur;
  for (auto& c : components_incident(g, v))
    if (c.contains(probe)) cur = std::move(c);
  if (!cur.small()) return false;
  const VertexSet rest = minus(cur.vertices, v);

  ActionRecord record{ActionKind::TuckAtB, g.label(v), {}};

  // Case (a): the tail sits on the a-end of a terminal edge of a block outside it.
  if (cur.kind == ComponentKind::Tail) {
    for (int b : dec.blocks_at[v]) {
      const Block& block = dec.blocks[b];
      if (block.trivial() || is_subset(block.vertices, cur.vertices)) continue;
      TerminalPair t = stored(st, block.vertices);
      bool at_b = t[0].b == v || t[1].b == v;
      if (at_b || (t[0].a != v && t[1].a != v)) continue;
      int k = t[0].a == v ? 0 : 1;
      auto [e1, e2] = path_ends(g, rest);
      Vertex leaf = e1 != e2 && g.adjacent(v, e1) ? e2 : e1;
      record.kind = ActionKind::TuckAtA;
      Vertex last = add_connector(st, leaf, t[k].b, record);
      st.terminals.erase(block.vertices);
      auto after = block_cut_decomposition(g);
      int merged = block_with(after, last, t[k].b);
      TerminalPair nt = t;
      nt[k] = TerminalEdge{last, t[k].b};
      st.terminals[after.blocks[merged].vertices] = nt;
      st.trace.push_back(std::move(record));
      return true;
    }
  }

  // Case (b): close the component into a fan at v.
  auto [e1, e2] = path_ends(g, rest);
  for (Vertex e : {e1, e2}) {
    if (e == e2 && e1 == e2) break;
    if (!g.adjacent(v, e)) add_connector(st, e, v, record);
  }
  auto emb = embed_checked(g);
  int b = block_with(emb.decomposition, v, probe);
  const Block& block = emb.decomposition.blocks[b];
  std::erase_if(st.terminals, [&](const auto& entry) { return is_subset(entry.first, block.vertices); });
  if (block.trivial()) {
    Vertex x = block.vertices.front() == v ? block.vertices.back() : block.vertices.front();
    st.terminals[block.vertices] = {TerminalEdge{x, v}, TerminalEdge{x, v}};
  } else {
    auto [u, w] = boundary_neighbors(emb, b, v);
    st.terminals[block.vertices] = {TerminalEdge{u, v}, TerminalEdge{w, v}};
  }
  st.trace.push_back(std::move(record));
  return true;
}

void bond_siblings(AugmentState& st, Vertex v) {
  Graph& g = st.graph;
  auto dec = block_cut_decomposition(g);
  if (!dec.is_cutvertex(v)) throw Error(ErrorCode::PreconditionViolated, g.label(v) + " is not a cutvertex");
  auto comps = components_incident(g, v);
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.small() && !b.small(); });

  ActionRecord record{ActionKind::Bond, g.label(v), {}};
  Vertex u[2];
  TerminalEdge remaining[2];
  VertexSet old_keys[2];
  for (int i = 0; i < 2; ++i) {
    int b = -1;
    for (int x : dec.blocks_at[v])
      if (is_subset(dec.blocks[x].vertices, comps[i].vertices)) b = x;
    const Block& block = dec.blocks[b];
    TerminalPair t = terminals_at(st, block, v);
    int k = t[0].b == v ? 0 : t[1].b == v ? 1 : -1;
    if (k < 0) throw Error(ErrorCode::PreconditionViolated, "no terminal edge ending at " + g.label(v));
    u[i] = t[k].a;
    remaining[i] = t[1 - k];
    old_keys[i] = block.vertices;
  }
  add_connector(st, u[0], u[1], record);
  st.terminals.erase(old_keys[0]);
  st.terminals.erase(old_keys[1]);
  auto after = block_cut_decomposition(g);
  int merged = block_with(after, u[0], u[1]);
  st.terminals[after.blocks[merged].vertices] = {remaining[0], remaining[1]};
  st.trace.push_back(std::move(record));
}

namespace {

std::optional<IncidentComponent> tail_at_a_end(const AugmentState& st) {
  auto dec = block_cut_decomposition(st.graph);
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b) {
    const Block& block = dec.blocks[b];
    auto it = st.terminals.find(block.vertices);
    if (block.trivial() || it == st.terminals.end()) continue;
    const TerminalPair& t = it->second;
    for (int k = 0; k < 2; ++k) {
      Vertex x = t[k].a;
      if (x == t[0].b || x == t[1].b || !dec.is_cutvertex(x)) continue;
      Vertex other = block.vertices.front() == x ? block.vertices.back() : block.vertices.front();
      for (auto& c : components_incident(st.graph, x))
        if (!c.contains(other)) return c;
    }
  }
  return std::nullopt;
}

bool is_block(const Graph& g, const VertexSet& vs) {
  if (vs.size() <= 2) return true;
  auto sub = induced_subgraph(g, vs).graph;
  return block_cut_decomposition(sub).blocks.size() == 1;
}

std::optional<IncidentComponent> pending_tuck(const AugmentState& st) {
  if (auto tail = tail_at_a_end(st)) return tail;
  for (auto& c : maximal_small_components(st.graph, block_cut_decomposition(st.graph)))
    if (!is_block(st.graph, c.vertices)) return c;
  return std::nullopt;
}

// Joins the biconnected pieces and leftover K1/K2 pieces into one outerpath.
void assemble(AugmentState& st) {
  Graph& g = st.graph;
  auto pieces = connected_components(g);
  if (pieces.size() == 1 && pieces[0].size() >= 3) return;

  std::vector<VertexSet> big, paths;
  for (auto& p : pieces) (p.size() >= 3 ? big : paths).push_back(p);

  if (big.empty()) {
    std::vector<Vertex> seq;
    for (const auto& p : paths) seq.insert(seq.end(), p.begin(), p.end());
    ActionRecord record{ActionKind::Close, "", {}};
    if (seq.size() == 1 || (seq.size() == 2 && g.adjacent(seq[0], seq[1]))) {
      if (st.mode == AugmentMode::Spanning)
        throw Error(ErrorCode::PreconditionViolated, "spanning outerpath needs three vertices");
      // close into a triangle through new vertices
      Vertex x = seq[0];
      Vertex y = seq.size() == 2 ? seq[1] : g.add_vertex(g.fresh_label("w"));
      if (seq.size() == 1) g.add_edge(x, y);
      Vertex w = g.add_vertex(g.fresh_label("w"));
      g.add_edge(x, w);
      g.add_edge(w, y);
      record.connectors.push_back(Connector{g.label(x), g.label(y), g.label(w)});
      st.connectors.push_back(record.connectors.back());
      st.trace.push_back(std::move(record));
      return;
    }
    if (st.mode == AugmentMode::Spanning && seq.size() < 3)
      throw Error(ErrorCode::PreconditionViolated, "spanning outerpath needs three vertices");
    for (std::size_t i = 0; i + 1 < paths.size(); ++i) add_connector(st, paths[i].back(), paths[i + 1].front(), record);
    add_connector(st, seq.back(), seq.front(), record);
    st.trace.push_back(std::move(record));
    return;
  }

  TerminalEdge open = stored(st, big.front())[1];
  std::vector<VertexSet> rest(big.begin() + 1, big.end());
  rest.insert(rest.end(), paths.begin(), paths.end());
  for (const auto& piece : rest) {
    ActionRecord record{ActionKind::Chain, "", {}};
    Vertex s = open.a, t = open.b;
    if (piece.size() >= 3) {
      TerminalPair q = stored(st, piece);
      add_connector(st, t, q[0].a, record);
      add_connector(st, s, q[0].b, record);
      open = q[1];
    } else if (piece.size() == 2) {
      add_connector(st, t, piece[0], record);
      add_connector(st, s, piece[1], record);
      open = TerminalEdge{piece[0], piece[1]};
    } else {
      Vertex x = piece[0];
      add_connector(st, t, x, record);
      Vertex y = add_connector(st, s, x, record);
      open = TerminalEdge{x, y};
    }
    st.trace.push_back(std::move(record));
  }
}

}  // namespace

AugmentationResult embed_in_biconnected_outerpath(const Graph& g, AugmentMode mode, const ActionObserver& observer) {
  if (mode == AugmentMode::Spanning && g.order() < 3)
    throw Error(ErrorCode::PreconditionViolated, "spanning outerpath needs three vertices");
  LinearityResult lin;
  try {
    lin = is_linear(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotOuterplanar) throw;
    throw Error(ErrorCode::NotLinear, "not outerplanar");
  }
  if (auto* w = std::get_if<NonlinearWitness>(&lin)) throw Error(ErrorCode::NotLinear, describe(*w));
  const auto& cert = std::get<LinearityCertificate>(lin);

  AugmentState st;
  st.graph = g;
  st.mode = mode;
  for (const auto& bt : cert.blocks)
    st.terminals[cert.embedding.decomposition.blocks[bt.block].vertices] = bt.terminals;

  for (const auto& c : maximal_small_components(g, cert.embedding.decomposition))
    if (tuck_tail(st, c) && observer) observer(st);
  // Overlapping maximal components can leave work behind: tails at a-ends, or
  // small components that are not yet blocks.
  while (auto pending = pending_tuck(st)) {
    if (!tuck_tail(st, *pending)) throw Error(ErrorCode::InvariantBroken, "pending tuck could not be applied");
    if (observer) observer(st);
  }

  while (true) {
    auto dec = block_cut_decomposition(st.graph);
    if (dec.cutvertices.empty()) break;
    bond_siblings(st, dec.cutvertices.front());
    if (observer) observer(st);
  }
  assemble(st);

  AugmentationResult result;
  result.supergraph = std::move(st.graph);
  result.embedding = embed_checked(result.supergraph);
  result.connectors = std::move(st.connectors);
  result.trace = std::move(st.trace);
  for (Vertex v = 0; v < g.order(); ++v) result.vertex_map.push_back(v);
  if (!is_biconnected_outerpath(result.supergraph))
    throw Error(ErrorCode::InvariantBroken, "result is not a biconnected outerpath");
  return result;
}

}  // namespace opvg
