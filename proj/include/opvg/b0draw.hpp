#pragma once

#include <optional>
#include <vector>

#include "opvg/geometry.hpp"
#include "opvg/graph.hpp"
#include "opvg/outerplanar.hpp"

namespace opvg {

/// Segments indexed by vertex; faces not yet attached are absent.
struct PartialDrawing {
  std::vector<std::optional<Segment>> segments;

  Box bounding_box() const;
  SegmentDrawing to_drawing(const Graph& g) const;
};

/// Bookkeeping for the current edge e_i = xy.
struct ExtendabilityState {
  Vertex x = -1;
  Vertex y = -1;
  Point p;                      // common point of l_x and l_y
  std::vector<Direction> free;  // open rays from p meeting no segment besides l_x, l_y
  std::optional<Vertex> apex;   // when F_i is a triangle: its vertex off e_{i-1}
};

struct DrawStep {
  PartialDrawing drawing;
  ExtendabilityState state;
};

/// Open rays from p that avoid every drawn segment except those of x and y.
std::vector<Direction> free_directions(const PartialDrawing& d, Vertex x, Vertex y, const Point& p);

/// Directions in which l_v can be prolonged from p.
std::vector<Direction> usable_directions(const Segment& s, const std::vector<Direction>& free);

/// Recomputes the free rays and checks that e_i is extendable and the triangle rule holds.
bool state_valid(const DrawStep& step);

/// D_1: three coincident points for a triangle, a unit rectangle otherwise.
DrawStep draw_base_face(const Graph& g, const Face& f1, Edge e1);

/// D_i -> D_{i+1}. Throws Error(InvariantBroken) if the state is not extendable.
void attach_face(const Graph& g, DrawStep& step, const Face& face, Edge shared_in, Edge shared_out);

/// Verified drawing of a biconnected outerpath. Throws Error(InvariantBroken)
/// if the result does not represent g.
SegmentDrawing draw_biconnected_outerpath(const Graph& g, const OuterplanarEmbedding& emb,
                                          const OuterpathOrder& order);
SegmentDrawing draw_biconnected_outerpath(const Graph& g);

/// Augments to a biconnected outerpath (induced), draws it and deletes the
/// connector vertices. Throws Error(NotLinear).
SegmentDrawing draw_linear_outerplanar(const Graph& g);

}  // namespace opvg
