#include <filesystem>
#include <random>

#include "doctest.h"
#include "opvg/b0draw.hpp"
#include "opvg/io.hpp"
#include "opvg/verify.hpp"
#include "support.hpp"

using namespace opvg;
using namespace opvg::test;

TEST_CASE("format names and extensions") {
  CHECK(parse_format_name("g6") == GraphFormat::Graph6);
  CHECK(parse_format_name("edges") == GraphFormat::EdgeList);
  CHECK(parse_format_name("json") == GraphFormat::Json);
  CHECK_FALSE(parse_format_name("dot"));
  CHECK(format_for_path("a/b.g6") == GraphFormat::Graph6);
  CHECK(format_for_path("x.json") == GraphFormat::Json);
  CHECK(format_for_path("x.txt") == GraphFormat::EdgeList);
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(cycle(3)) == "Bw");
  CHECK(to_graph6(path(4)) == "Ch");
  auto k = parse_graph6(">>graph6<<Bw\n");
  CHECK(k.order() == 3);
  CHECK(k.size() == 3);
  CHECK_THROWS_AS(parse_graph6("B~~"), Error);
  CHECK_THROWS_AS(parse_graph6(""), Error);
}

TEST_CASE("edge lists") {
  auto g = parse_edge_list("# comment\na b\nb c # trailing\n\nz\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.degree(g.at("z")) == 0);
  CHECK_THROWS_AS(parse_edge_list("a a\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("a b\nb a\n"), Error);
  CHECK_THROWS_AS(parse_edge_list("a b c\n"), Error);
}

TEST_CASE("round trips in every format") {
  std::mt19937 rng(8);
  for (int t = 0; t < 200; ++t) {
    auto g = random_graph(1 + t % 12, 0.3, rng);
    for (auto f : {GraphFormat::Graph6, GraphFormat::EdgeList, GraphFormat::Json})
      CHECK(parse_graph(serialize_graph(g, f), f) == g);
  }
  auto fig = fixture("fig4a");
  for (auto f : {GraphFormat::EdgeList, GraphFormat::Json}) CHECK(parse_graph(serialize_graph(fig, f), f) == fig);
}

TEST_CASE("drawing JSON round trip keeps exact coordinates") {
  auto g = fixture("fig2_outerpath");
  auto d = draw_biconnected_outerpath(g);
  auto back = drawing_from_json(drawing_to_json(d));
  CHECK(back.vertices == d.vertices);
  CHECK(back.segments == d.segments);
  CHECK(verify_drawing(g, back));
  bool fractional = false;
  for (const auto& s : d.segments)
    fractional = fractional || denominator(s.p1.x) != 1 || denominator(s.p1.y) != 1;
  CHECK(fractional);
}

TEST_CASE("drawing JSON validation") {
  auto ok = nlohmann::json::parse(R"({"vertices":["a"],"segments":[{"vertex":"a","x1":0,"y1":0,"x2":"1/2","y2":0}]})");
  auto d = drawing_from_json(ok);
  CHECK(d.at("a").p2.x == Rational(1, 2));
  auto slanted = nlohmann::json::parse(R"({"vertices":["a"],"segments":[{"vertex":"a","x1":0,"y1":0,"x2":1,"y2":1}]})");
  CHECK_THROWS_AS(drawing_from_json(slanted), Error);
  try {
    drawing_from_json(slanted);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonAxisParallel);
  }
  auto extra = nlohmann::json::parse(R"({"vertices":["a","b"],"segments":[{"vertex":"a","x1":0,"y1":0,"x2":1,"y2":0}]})");
  try {
    drawing_from_json(extra);
    FAIL("expected VertexMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexMismatch);
  }
}

TEST_CASE("rationals") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("svg output") {
  auto g = cycle(5);
  auto svg = drawing_to_svg(draw_biconnected_outerpath(g));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("files") {
  auto dir = std::filesystem::temp_directory_path() / "opvg_io_test";
  std::filesystem::create_directories(dir);
  auto g = three_sun();
  write_file(dir / "sun.g6", serialize_graph(g, GraphFormat::Graph6));
  CHECK(read_graph(dir / "sun.g6") == g);
  write_file(dir / "sun.json", serialize_graph(g, GraphFormat::Json));
  CHECK(read_graph(dir / "sun.json") == g);
  CHECK_THROWS_AS(read_graph(dir / "missing.edges"), Error);
  std::filesystem::remove_all(dir);
}
