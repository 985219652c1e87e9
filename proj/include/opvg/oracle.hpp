#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "opvg/geometry.hpp"
#include "opvg/graph.hpp"

namespace opvg {

/// Isomorphism-invariant certificate: equal strings iff isomorphic graphs.
std::string canonical_form(const Graph& g);

/// Connected outerplanar graphs on n vertices up to isomorphism, sorted by canonical form.
std::vector<Graph> enumerate_outerplanar(int n);
std::vector<Graph> enumerate_outerplanar_serial(int n);

/// Biconnected outerplanar graphs on exactly m vertices (polygon dissections) up to isomorphism.
std::vector<Graph> enumerate_biconnected_outerplanar(int m);
/// Biconnected outerpaths on 3..max_n vertices.
std::vector<Graph> enumerate_biconnected_outerpaths(int max_n);

/// Injective map of pattern vertices into host vertices preserving edges
/// (and non-edges when induced), or nothing.
std::optional<std::vector<Vertex>> find_embedding(const Graph& pattern, const Graph& host, bool induced);

/// True iff g is a subgraph of a biconnected outerpath, decided by search over
/// all biconnected outerpaths on |V(g)| vertices.
bool brute_force_linear(const Graph& g);

struct SearchBudget {
  int max_vertices = 7;
  std::uint64_t node_limit = 50'000'000;
};

struct NotB0 {};
struct Indeterminate {
  std::uint64_t nodes = 0;
};

using B0Verdict = std::variant<SegmentDrawing, NotB0, Indeterminate>;

/// Exhaustive search over order types of segment endpoints.
B0Verdict brute_force_b0(const Graph& g, const SearchBudget& budget = {});
B0Verdict brute_force_b0_serial(const Graph& g, const SearchBudget& budget = {});

}  // namespace opvg
