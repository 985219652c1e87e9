#include "opvg/geometry.hpp"

#include <algorithm>
#include <charconv>

#include "opvg/error.hpp"

namespace opvg {

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  return boost::multiprecision::cpp_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  auto num = parse_integer(text.substr(0, slash), text);
  auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Point step(const Point& p, Direction d, const Rational& t) {
  switch (d) {
    case Direction::Right: return {p.x + t, p.y};
    case Direction::Up: return {p.x, p.y + t};
    case Direction::Left: return {p.x - t, p.y};
    case Direction::Down: return {p.x, p.y - t};
  }
  return p;
}

bool horizontal(Direction d) { return d == Direction::Right || d == Direction::Left; }

Direction opposite(Direction d) { return static_cast<Direction>((static_cast<int>(d) + 2) % 4); }

Segment::Segment(Point a, Point b) {
  if (b < a) std::swap(a, b);
  p1 = std::move(a);
  p2 = std::move(b);
}

bool Segment::contains(const Point& p) const {
  return p1.x <= p.x && p.x <= p2.x && p1.y <= p.y && p.y <= p2.y;
}

// An axis-parallel segment is its own bounding box.
bool intersects(const Segment& a, const Segment& b) {
  return std::max(a.p1.x, b.p1.x) <= std::min(a.p2.x, b.p2.x) &&
         std::max(a.p1.y, b.p1.y) <= std::min(a.p2.y, b.p2.y);
}

bool ray_hits(const Point& p, Direction d, const Segment& s) {
  switch (d) {
    case Direction::Right:
      return s.p1.y <= p.y && p.y <= s.p2.y && s.p2.x > p.x;
    case Direction::Left:
      return s.p1.y <= p.y && p.y <= s.p2.y && s.p1.x < p.x;
    case Direction::Up:
      return s.p1.x <= p.x && p.x <= s.p2.x && s.p2.y > p.y;
    case Direction::Down:
      return s.p1.x <= p.x && p.x <= s.p2.x && s.p1.y < p.y;
  }
  return false;
}

void SegmentDrawing::add(std::string vertex, Segment s) {
  vertices.push_back(std::move(vertex));
  segments.push_back(std::move(s));
}

std::optional<std::size_t> SegmentDrawing::index_of(std::string_view vertex) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == vertex) return i;
  return std::nullopt;
}

const Segment& SegmentDrawing::at(std::string_view vertex) const {
  auto i = index_of(vertex);
  if (!i) throw Error(ErrorCode::UnknownVertex, std::string(vertex));
  return segments[*i];
}

Segment& SegmentDrawing::at(std::string_view vertex) {
  auto i = index_of(vertex);
  if (!i) throw Error(ErrorCode::UnknownVertex, std::string(vertex));
  return segments[*i];
}

void SegmentDrawing::erase(std::string_view vertex) {
  auto i = index_of(vertex);
  if (!i) return;
  vertices.erase(vertices.begin() + *i);
  segments.erase(segments.begin() + *i);
}

Box SegmentDrawing::bounding_box() const {
  Box box;
  if (segments.empty()) return box;
  box.xmin = box.xmax = segments.front().p1.x;
  box.ymin = box.ymax = segments.front().p1.y;
  for (const auto& s : segments) {
    box.xmin = std::min(box.xmin, s.p1.x);
    box.ymin = std::min(box.ymin, s.p1.y);
    box.xmax = std::max(box.xmax, s.p2.x);
    box.ymax = std::max(box.ymax, s.p2.y);
  }
  return box;
}

}  // namespace opvg
