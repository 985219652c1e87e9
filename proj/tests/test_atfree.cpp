#include <chrono>
#include <random>

#include "doctest.h"
#include "opvg/atfree.hpp"
#include "opvg/linearity.hpp"
#include "opvg/oracle.hpp"
#include "opvg/outerplanar.hpp"
#include "support.hpp"

using namespace opvg;
using namespace opvg::test;

namespace {

// Straight from the definition: one search per pair and excluded vertex.
bool has_at_naive(const Graph& g) {
  const int n = g.order();
  auto avoids = [&](Vertex a, Vertex b, Vertex z) {
    std::vector<bool> blocked(n, false);
    blocked[z] = true;
    for (Vertex w : g.neighbors(z)) blocked[w] = true;
    return !shortest_path(g, a, b, blocked).empty();
  };
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      for (Vertex z = y + 1; z < n; ++z) {
        if (g.adjacent(x, y) || g.adjacent(x, z) || g.adjacent(y, z)) continue;
        if (avoids(x, y, z) && avoids(x, z, y) && avoids(y, z, x)) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("3-sun has the outer vertices as its triple") {
  auto g = three_sun();
  auto w = find_asteroidal_triple(g);
  REQUIRE(w);
  CHECK(w->x == 3);
  CHECK(w->y == 4);
  CHECK(w->z == 5);
  CHECK(validate_witness(g, *w));
  CHECK(w->paths[0] == std::vector<Vertex>{3, 1, 4});
}

TEST_CASE("AT-free examples") {
  CHECK(is_at_free(c5_pendant()));
  CHECK(is_at_free(numbered_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK(is_at_free(numbered_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}})));
  CHECK(is_at_free(cycle(5)));
  CHECK_FALSE(is_at_free(cycle(6)));
  CHECK(is_at_free(numbered_graph(0, {})));
  CHECK(is_at_free(numbered_graph(3, {})));
}

TEST_CASE("graph with four big components at a cutvertex is not AT-free") {
  auto g = fixture("fig3b");
  auto w = find_asteroidal_triple(g);
  REQUIRE(w);
  CHECK(validate_witness(g, *w));
}

TEST_CASE("independence number at most two means AT-free") {
  std::mt19937 rng(5);
  for (int t = 0; t < 300; ++t) {
    auto g = random_graph(7, 0.8, rng);
    bool small_alpha = true;
    for (Vertex x = 0; x < 7 && small_alpha; ++x)
      for (Vertex y = x + 1; y < 7 && small_alpha; ++y)
        for (Vertex z = y + 1; z < 7 && small_alpha; ++z)
          if (!g.adjacent(x, y) && !g.adjacent(x, z) && !g.adjacent(y, z)) small_alpha = false;
    if (small_alpha) CHECK(is_at_free(g));
  }
}

TEST_CASE("agrees with the naive definition and the serial scan") {
  std::mt19937 rng(11);
  for (int t = 0; t < 2000; ++t) {
    int n = 3 + t % 8;
    auto g = random_graph(n, 0.35, rng);
    auto w = find_asteroidal_triple(g);
    CHECK(w.has_value() == has_at_naive(g));
    if (w) CHECK(validate_witness(g, *w));
    auto s = find_asteroidal_triple_serial(g);
    REQUIRE(s.has_value() == w.has_value());
    if (w) CHECK((s->x == w->x && s->y == w->y && s->z == w->z && s->paths == w->paths));
  }
}

TEST_CASE("AT-free connected outerplanar graphs are linear") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : enumerate_outerplanar(n))
      if (is_at_free(g)) CHECK(is_linear_graph(g));
}

TEST_CASE("witness validation rejects broken paths") {
  auto g = three_sun();
  auto w = *find_asteroidal_triple(g);
  auto bad = w;
  bad.paths[0] = {3, 0, 4};
  CHECK_FALSE(validate_witness(g, bad));
  bad = w;
  bad.z = 0;
  CHECK_FALSE(validate_witness(g, bad));
}

TEST_CASE("thirty vertices in under a second") {
  std::mt19937 rng(23);
  auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < 20; ++t) find_asteroidal_triple(random_graph(30, 0.1, rng));
  auto g = cycle(30);
  CHECK_FALSE(is_at_free(g));
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 1.0);
}
