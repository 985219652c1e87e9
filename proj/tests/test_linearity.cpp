#include <random>

#include "doctest.h"
#include "opvg/linearity.hpp"
#include "support.hpp"

using namespace opvg;
using namespace opvg::test;

namespace {

int block_containing(const BlockDecomposition& dec, const VertexSet& vs) {
  for (int b = 0; b < static_cast<int>(dec.blocks.size()); ++b)
    if (dec.blocks[b].vertices == vs) return b;
  return -1;
}

template <class W>
const W* witness(const LinearityResult& r) {
  auto* w = std::get_if<NonlinearWitness>(&r);
  return w ? std::get_if<W>(w) : nullptr;
}

}  // namespace

TEST_CASE("cut-safety") {
  auto g = fixture("fig3b");
  auto unsafe = is_cut_safe(g, block_cut_decomposition(g));
  REQUIRE(unsafe);
  CHECK(unsafe->v == g.at("v"));
  CHECK(unsafe->big.size() == 4);

  // spider with legs of length 3: every leg is a tail
  auto spider = numbered_graph(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9}});
  CHECK_FALSE(is_cut_safe(spider, block_cut_decomposition(spider)));
  CHECK_FALSE(is_cut_safe(cycle(4), block_cut_decomposition(cycle(4))));
}

TEST_CASE("fig3a graphs are not block-safe") {
  for (int i = 1; i <= 5; ++i) {
    auto g = fixture("fig3a_" + std::to_string(i));
    auto emb = embed_outerplanar(g);
    CHECK(is_linear_forest(weak_dual(emb)));
    CHECK_FALSE(is_cut_safe(g, emb.decomposition));
    auto safety = is_block_safe(g, emb);
    REQUIRE(std::holds_alternative<UnsafeBlock>(safety));
    const auto& ub = std::get<UnsafeBlock>(safety);
    // exhaustive recheck over every candidate pair
    for (const auto& t : candidate_terminals(emb, ub.block)) CHECK_FALSE(terminals_valid(g, emb, ub.block, t));
    CHECK(ub.candidates_tried > 0);
  }
}

TEST_CASE("fig4a certificate and the figure's terminal arrows") {
  auto g = fixture("fig4a");
  auto r = is_linear(g);
  REQUIRE(std::holds_alternative<LinearityCertificate>(r));
  const auto& cert = std::get<LinearityCertificate>(r);
  CHECK(validate_certificate(g, cert));
  CHECK(cert.blocks.size() == 3);

  const auto& emb = cert.embedding;
  auto v = [&](const char* s) { return g.at(s); };
  struct Arrow {
    std::vector<std::string> block;
    TerminalPair t;
  };
  std::vector<Arrow> arrows = {
      {{"cut1", "v1", "v11", "v25"}, {TerminalEdge{v("cut1"), v("v11")}, TerminalEdge{v("cut1"), v("v1")}}},
      {{"v1", "v3", "v4", "v5"}, {TerminalEdge{v("v3"), v("v1")}, TerminalEdge{v("v4"), v("v5")}}},
      {{"cut3", "v20", "v23"}, {TerminalEdge{v("v20"), v("cut3")}, TerminalEdge{v("v23"), v("cut3")}}},
  };
  for (const auto& arrow : arrows) {
    int b = block_containing(emb.decomposition, ids(g, arrow.block));
    REQUIRE(b >= 0);
    CHECK(terminals_valid(g, emb, b, arrow.t));
  }
}

TEST_CASE("C6 has a vacuous assignment") {
  auto g = cycle(6);
  auto emb = embed_outerplanar(g);
  auto safety = is_block_safe(g, emb);
  REQUIRE(std::holds_alternative<std::vector<BlockTerminals>>(safety));
  const auto& bts = std::get<std::vector<BlockTerminals>>(safety);
  REQUIRE(bts.size() == 1);
  CHECK(bts[0].associations.empty());
  CHECK(bts[0].terminals[0].edge() != bts[0].terminals[1].edge());
}

TEST_CASE("is_linear examples") {
  auto r = is_linear(three_sun());
  auto* face = witness<FaceWithThreeInternalEdges>(r);
  REQUIRE(face);
  CHECK(face->cycle == std::vector<Vertex>{0, 1, 2});

  for (int n = 1; n <= 9; ++n) CHECK(is_linear_graph(path(n)));
  for (int n = 3; n <= 9; ++n) CHECK(is_linear_graph(cycle(n)));
  CHECK(is_linear_graph(c5_pendant()));
  CHECK(is_linear_graph(fixture("fig2_outerpath")));
  CHECK(is_linear_graph(fixture("fig1_linear_outerplanar")));

  auto k4 = numbered_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(is_linear(k4), Error);
}

TEST_CASE("disconnected graphs are linear iff every component is") {
  auto two = numbered_graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  CHECK(is_linear_graph(two));
  auto with_sun = numbered_graph(8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}, {6, 7}});
  CHECK_FALSE(is_linear_graph(with_sun));
}

TEST_CASE("certificates and witnesses recheck on random outerplanar graphs") {
  std::mt19937 rng(21);
  int linear = 0, nonlinear = 0;
  for (int trial = 0; trial < 6000; ++trial) {
    int n = 4 + trial % 9;
    auto g = random_graph(n, 2.6 / n, rng);
    if (!is_outerplanar(g)) continue;
    auto r = is_linear(g);
    if (auto* cert = std::get_if<LinearityCertificate>(&r)) {
      ++linear;
      CHECK(validate_certificate(g, *cert));
      continue;
    }
    ++nonlinear;
    auto emb = embed_outerplanar(g);
    const auto& w = std::get<NonlinearWitness>(r);
    if (auto* f = std::get_if<FaceWithThreeInternalEdges>(&w)) {
      CHECK(emb.faces[f->face].internal_edges.size() >= 3);
    } else if (auto* c = std::get_if<UnsafeCutvertex>(&w)) {
      CHECK(c->big.size() >= 3);
      for (const auto& comp : c->big) CHECK(classify_component(g, c->v, comp.vertices) == ComponentKind::Big);
    } else {
      const auto& ub = std::get<UnsafeBlock>(w);
      for (const auto& t : candidate_terminals(emb, ub.block)) CHECK_FALSE(terminals_valid(g, emb, ub.block, t));
    }
  }
  CHECK(linear > 300);
  CHECK(nonlinear > 100);
}
