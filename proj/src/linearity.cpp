#include "opvg/linearity.hpp"

#include <algorithm>

namespace opvg {

const BlockTerminals* LinearityCertificate::for_block(int block) const {
  for (const auto& bt : blocks)
    if (bt.block == block) return &bt;
  return nullptr;
}

std::string describe(const NonlinearWitness& w) {
  struct {
    std::string operator()(const FaceWithThreeInternalEdges& f) const {
      return "face with " + std::to_string(f.internal_edges.size()) + " internal edges";
    }
    std::string operator()(const UnsafeCutvertex& c) const {
      return "cutvertex with " + std::to_string(c.big.size()) + " big components";
    }
    std::string operator()(const UnsafeBlock&) const { return "block without valid terminal edges"; }
  } visitor;
  return std::visit(visitor, w);
}

std::optional<UnsafeCutvertex> is_cut_safe(const Graph& g, const BlockDecomposition& dec) {
  for (Vertex v : dec.cutvertices) {
    UnsafeCutvertex w{v, {}};
    for (auto& c : components_incident(g, v))
      if (!c.small()) w.big.push_back(std::move(c));
    if (w.big.size() > 2) return w;
  }
  return std::nullopt;
}

std::vector<IncidentComponent> components_at_block(const Graph& g, const BlockDecomposition& dec, int block) {
  const Block& b = dec.blocks[block];
  std::vector<IncidentComponent> out;
  for (Vertex v : b.vertices) {
    if (!dec.is_cutvertex(v)) continue;
    Vertex other = b.vertices.front() == v ? b.vertices.back() : b.vertices.front();
    for (auto& c : components_incident(g, v))
      if (!c.contains(other)) out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::vector<TerminalEdge> orientations(Edge e) { return {{e.u, e.v}, {e.v, e.u}}; }

void add_pairs(const std::vector<Edge>& first, const std::vector<Edge>& second, bool distinct,
               std::vector<TerminalPair>& out) {
  for (const Edge& e : first)
    for (const Edge& f : second) {
      if (distinct && !(e < f)) continue;
      for (const auto& s : orientations(e))
        for (const auto& t : orientations(f)) out.push_back({s, t});
    }
}

std::vector<Edge> sorted_boundary(const Face& f) {
  auto edges = f.boundary_edges();
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::vector<TerminalPair> candidate_terminals(const OuterplanarEmbedding& emb, int block) {
  const BlockEmbedding* be = emb.block_embedding(block);
  std::vector<TerminalPair> out;
  if (!be) return out;
  if (be->faces.size() == 1) {
    auto edges = sorted_boundary(emb.faces[be->faces.front()]);
    add_pairs(edges, edges, true, out);
    return out;
  }
  std::vector<int> leaves;
  for (int f : be->faces)
    if (emb.faces[f].is_leaf()) leaves.push_back(f);
  if (leaves.size() != 2) return out;
  add_pairs(sorted_boundary(emb.faces[leaves[0]]), sorted_boundary(emb.faces[leaves[1]]), false, out);
  return out;
}

std::optional<std::vector<Association>> associate_components(const std::vector<IncidentComponent>& components,
                                                             const TerminalPair& t) {
  std::vector<Association> out;
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < components.size(); ++i) {
    Vertex x = components[i].cutvertex;
    if (x == t[0].b) {
      out.push_back({components[i], 0});
    } else if (x == t[1].b) {
      out.push_back({components[i], 1});
    } else if ((x == t[0].a || x == t[1].a) && components[i].kind == ComponentKind::Tail) {
      pending.push_back(i);
    } else {
      return std::nullopt;
    }
  }
  // each a-slot holds at most one tail
  auto fits = [&](std::size_t i, int slot) { return components[i].cutvertex == t[slot].a; };
  if (pending.size() > 2) return std::nullopt;
  if (pending.size() == 1) {
    int slot = fits(pending[0], 0) ? 0 : 1;
    out.push_back({components[pending[0]], slot});
  } else if (pending.size() == 2) {
    int first = fits(pending[0], 0) && fits(pending[1], 1) ? 0 : 1;
    if (!fits(pending[0], first) || !fits(pending[1], 1 - first)) return std::nullopt;
    out.push_back({components[pending[0]], first});
    out.push_back({components[pending[1]], 1 - first});
  }
  return out;
}

std::variant<std::vector<BlockTerminals>, UnsafeBlock> is_block_safe(const Graph& g,
                                                                     const OuterplanarEmbedding& emb) {
  std::vector<BlockTerminals> out;
  const auto& dec = emb.decomposition;
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b) {
    if (dec.blocks[b].trivial()) continue;
    auto components = components_at_block(g, dec, b);
    auto candidates = candidate_terminals(emb, b);
    bool found = false;
    for (const auto& t : candidates) {
      if (auto assoc = associate_components(components, t)) {
        out.push_back({b, t, std::move(*assoc)});
        found = true;
        break;
      }
    }
    if (!found) return UnsafeBlock{b, dec.blocks[b].vertices, static_cast<int>(candidates.size())};
  }
  return out;
}

bool terminals_valid(const Graph& g, const OuterplanarEmbedding& emb, int block, const TerminalPair& t) {
  auto assoc = associate_components(components_at_block(g, emb.decomposition, block), t);
  return assoc && validate_assignment(g, emb, BlockTerminals{block, t, std::move(*assoc)});
}

bool validate_assignment(const Graph& g, const OuterplanarEmbedding& emb, const BlockTerminals& bt) {
  const BlockEmbedding* be = emb.block_embedding(bt.block);
  if (!be) return false;
  // boundary edges of the block, lying in a single face or in different leaf faces
  std::array<int, 2> face{-1, -1};
  for (int i = 0; i < 2; ++i) {
    Edge e = bt.terminals[i].edge();
    if (bt.terminals[i].a == bt.terminals[i].b || !g.adjacent(e.u, e.v)) return false;
    if (emb.decomposition.block_of_edge(e) != bt.block) return false;
    if (emb.classify(e) != EdgeClass::Boundary) return false;
    face[i] = emb.faces_with_edge(e).front();
  }
  if (be->faces.size() > 1) {
    if (face[0] == face[1]) return false;
    if (!emb.faces[face[0]].is_leaf() || !emb.faces[face[1]].is_leaf()) return false;
  }
  auto expected = components_at_block(g, emb.decomposition, bt.block);
  if (expected.size() != bt.associations.size()) return false;
  std::vector<VertexSet> want, have;
  for (const auto& c : expected) want.push_back(c.vertices);
  int at_a[2] = {0, 0};
  for (const auto& as : bt.associations) {
    have.push_back(as.component.vertices);
    const TerminalEdge& t = bt.terminals[as.terminal];
    Vertex x = as.component.cutvertex;
    if (x != t.a && x != t.b) return false;
    if (x == t.a) {
      if (as.component.kind != ComponentKind::Tail) return false;
      ++at_a[as.terminal];
    }
  }
  if (at_a[0] > 1 || at_a[1] > 1) return false;
  std::sort(want.begin(), want.end());
  std::sort(have.begin(), have.end());
  return want == have;
}

bool validate_certificate(const Graph& g, const LinearityCertificate& cert) {
  const auto& dec = cert.embedding.decomposition;
  if (find_bad_face(cert.embedding) || is_cut_safe(g, dec)) return false;
  int nontrivial = 0;
  for (const auto& b : dec.blocks) nontrivial += !b.trivial();
  if (static_cast<int>(cert.blocks.size()) != nontrivial) return false;
  return std::all_of(cert.blocks.begin(), cert.blocks.end(),
                     [&](const BlockTerminals& bt) { return validate_assignment(g, cert.embedding, bt); });
}

std::optional<FaceWithThreeInternalEdges> find_bad_face(const OuterplanarEmbedding& emb) {
  for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f)
    if (emb.faces[f].internal_edges.size() >= 3)
      return FaceWithThreeInternalEdges{f, emb.faces[f].cycle, emb.faces[f].internal_edges};
  return std::nullopt;
}

LinearityResult is_linear(const Graph& g) {
  auto emb = embed_outerplanar(g);
  if (auto bad = find_bad_face(emb)) return NonlinearWitness{*bad};
  if (auto unsafe = is_cut_safe(g, emb.decomposition)) return NonlinearWitness{*unsafe};
  auto safety = is_block_safe(g, emb);
  if (auto* ub = std::get_if<UnsafeBlock>(&safety)) return NonlinearWitness{*ub};
  return LinearityCertificate{std::move(emb), std::get<std::vector<BlockTerminals>>(std::move(safety))};
}

bool is_linear_graph(const Graph& g) { return std::holds_alternative<LinearityCertificate>(is_linear(g)); }

}  // namespace opvg
