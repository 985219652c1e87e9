#pragma once

#include <array>
#include <optional>
#include <vector>

#include "opvg/graph.hpp"

namespace opvg {

/// Three pairwise nonadjacent vertices with, for each pair, a path avoiding the
/// closed neighbourhood of the third. paths[0] joins x-y, paths[1] x-z, paths[2] y-z.
struct ATWitness {
  Vertex x = -1, y = -1, z = -1;
  std::array<std::vector<Vertex>, 3> paths;
};

/// First asteroidal triple in lexicographic order, with shortest witness paths.
std::optional<ATWitness> find_asteroidal_triple(const Graph& g);
/// Same result, without OpenMP.
std::optional<ATWitness> find_asteroidal_triple_serial(const Graph& g);

bool is_at_free(const Graph& g);

/// True iff the witness is an asteroidal triple of g with valid paths.
bool validate_witness(const Graph& g, const ATWitness& w);

}  // namespace opvg
