#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace opvg {

using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" form with q > 0 and gcd 1; integers print as "p".
std::string to_string(const Rational& r);
/// Accepts "p", "-p", "p/q". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

enum class Direction { Right, Up, Left, Down };

Point step(const Point& p, Direction d, const Rational& t);
bool horizontal(Direction d);
Direction opposite(Direction d);

/// Closed axis-parallel segment; p1 == p2 is a point segment.
struct Segment {
  Point p1;
  Point p2;

  Segment() = default;
  Segment(Point a, Point b);  // stores endpoints in sorted order

  bool is_point() const { return p1 == p2; }
  bool is_horizontal() const { return p1.y == p2.y && p1.x != p2.x; }
  bool is_vertical() const { return p1.x == p2.x && p1.y != p2.y; }
  bool axis_parallel() const { return p1.x == p2.x || p1.y == p2.y; }
  bool contains(const Point& p) const;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Closed-set intersection of two axis-parallel segments.
bool intersects(const Segment& a, const Segment& b);

/// Open ray from p in direction d (p itself excluded) meets s.
bool ray_hits(const Point& p, Direction d, const Segment& s);

struct Box {
  Rational xmin, ymin, xmax, ymax;
};

/// One segment per vertex, keyed by vertex label.
struct SegmentDrawing {
  std::vector<std::string> vertices;
  std::vector<Segment> segments;

  void add(std::string vertex, Segment s);
  std::optional<std::size_t> index_of(std::string_view vertex) const;
  const Segment& at(std::string_view vertex) const;
  Segment& at(std::string_view vertex);
  void erase(std::string_view vertex);
  std::size_t size() const { return segments.size(); }
  Box bounding_box() const;
};

}  // namespace opvg
