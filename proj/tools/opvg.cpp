#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "opvg/atfree.hpp"
#include "opvg/augment.hpp"
#include "opvg/b0draw.hpp"
#include "opvg/io.hpp"
#include "opvg/linearity.hpp"
#include "opvg/oracle.hpp"
#include "opvg/outerplanar.hpp"
#include "opvg/verify.hpp"

using namespace opvg;
using nlohmann::json;

namespace {

enum Exit { Yes = 0, No = 1, Failure = 2, Undecided = 3 };

struct Options {
  std::string input;
  std::string drawing;
  std::string format;
  std::string mode = "induced";
  std::string out;
  std::string svg;
  std::string oracle;
  std::vector<std::string> properties;
  int n = 0;
  std::int64_t budget = 0;
};

Graph load(const Options& o) {
  std::optional<GraphFormat> f;
  if (!o.format.empty()) {
    f = parse_format_name(o.format);
    if (!f) throw Error(ErrorCode::ParseError, "unknown format " + o.format);
  }
  return read_graph(o.input, f);
}

AugmentMode mode_of(const Options& o) {
  if (o.mode == "induced") return AugmentMode::Induced;
  if (o.mode == "spanning") return AugmentMode::Spanning;
  throw Error(ErrorCode::ParseError, "unknown mode " + o.mode);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text << "\n";
  else
    write_file(o.out, text + "\n");
}

std::string labels(const Graph& g, const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

int recognize(const Options& o) {
  Graph g = load(o);
  auto op = recognize_outerplanar(g);
  if (auto* no = std::get_if<NotOuterplanar>(&op)) {
    std::cout << "outerplanar: no (" << no->reason << ")\n";
    std::cout << "linear: no (not outerplanar)\n";
    return No;
  }
  std::cout << "outerplanar: yes\n";
  if (auto w = find_asteroidal_triple(g))
    std::cout << "at-free: no (asteroidal triple " << labels(g, {w->x, w->y, w->z}) << ")\n";
  else
    std::cout << "at-free: yes\n";
  auto lin = is_linear(g);
  if (auto* cert = std::get_if<LinearityCertificate>(&lin)) {
    std::cout << "linear: yes (" << cert->embedding.decomposition.blocks.size() << " blocks, "
              << cert->blocks.size() << " with terminal edges)\n";
    for (const auto& bt : cert->blocks)
      std::cout << "  block {" << labels(g, cert->embedding.decomposition.blocks[bt.block].vertices)
                << "}: terminals " << g.label(bt.terminals[0].a) << "-" << g.label(bt.terminals[0].b) << ", "
                << g.label(bt.terminals[1].a) << "-" << g.label(bt.terminals[1].b) << "\n";
    return Yes;
  }
  std::cout << "linear: no (" << describe(std::get<NonlinearWitness>(lin)) << ")\n";
  return No;
}

json connector_json(const Connector& c) {
  json j{{"u", c.u}, {"v", c.v}};
  if (c.middle) j["middle"] = *c.middle;
  return j;
}

int augment(const Options& o) {
  Graph g = load(o);
  auto r = embed_in_biconnected_outerpath(g, mode_of(o));
  json j;
  j["mode"] = o.mode;
  j["supergraph"] = graph_to_json(r.supergraph);
  j["new_vertices"] = r.new_vertices();
  j["blocks"] = block_cut_decomposition(g).blocks.size();
  j["connectors"] = json::array();
  for (const auto& c : r.connectors) j["connectors"].push_back(connector_json(c));
  j["trace"] = json::array();
  for (const auto& a : r.trace) {
    json step{{"action", to_string(a.kind)}, {"connectors", json::array()}};
    if (!a.cutvertex.empty()) step["cutvertex"] = a.cutvertex;
    for (const auto& c : a.connectors) step["connectors"].push_back(connector_json(c));
    j["trace"].push_back(step);
  }
  j["biconnected_outerpath"] = is_biconnected_outerpath(r.supergraph);
  emit(o, j.dump(2));
  return Yes;
}

int draw(const Options& o) {
  Graph g = load(o);
  SegmentDrawing d;
  if (mode_of(o) == AugmentMode::Induced) {
    d = draw_linear_outerplanar(g);
  } else {
    // the drawing represents the spanning outerpath supergraph
    auto r = embed_in_biconnected_outerpath(g, AugmentMode::Spanning);
    d = draw_biconnected_outerpath(r.supergraph, r.embedding, outerpath_order(r.embedding, 0));
  }
  emit(o, drawing_to_json(d).dump(2));
  if (!o.svg.empty()) write_file(o.svg, drawing_to_svg(d));
  return Yes;
}

int verify(const Options& o) {
  Graph g = load(o);
  json j;
  try {
    j = json::parse(read_file(o.drawing));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  bool ok = verify_drawing(g, drawing_from_json(j));
  std::cout << (ok ? "valid" : "invalid") << "\n";
  return ok ? Yes : No;
}

int check_necessary(const Options& o) {
  Graph g = load(o);
  NecessityOptions opt;
  if (o.budget > 0) opt.node_limit = static_cast<std::uint64_t>(o.budget);
  auto r = check_necessary_conditions(g, opt);
  auto edges = [&](const std::vector<Edge>& es) {
    json a = json::array();
    for (const Edge& e : es) a.push_back({g.label(e.u), g.label(e.v)});
    return a;
  };
  json j;
  j["verdict"] = r.verdict == Verdict::Pass ? "pass" : "fail";
  j["forced_edges"] = edges(r.forced_edges);
  if (r.chosen_h) j["chosen_h"] = edges(*r.chosen_h);
  j["components"] = json::array();
  for (const auto& c : r.components) {
    json vs = json::array();
    for (Vertex v : c.component) vs.push_back(g.label(v));
    j["components"].push_back({{"vertices", vs}, {"neighborhood_interval", c.neighborhood_interval}});
  }
  if (r.contraction_bipartite) j["contraction_bipartite"] = *r.contraction_bipartite;
  if (r.contraction_b0) j["contraction_b0"] = *r.contraction_b0;
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.note.empty()) j["note"] = r.note;
  j["nodes"] = r.nodes;
  emit(o, j.dump(2));
  return r.verdict == Verdict::Pass ? Yes : No;
}

int oracle(const Options& o) {
  Graph g = load(o);
  json j;
  int code;
  if (o.oracle == "b0") {
    SearchBudget budget;
    if (o.budget > 0) budget.node_limit = static_cast<std::uint64_t>(o.budget);
    auto v = brute_force_b0(g, budget);
    if (auto* d = std::get_if<SegmentDrawing>(&v)) {
      j = {{"verdict", "B0"}, {"drawing", drawing_to_json(*d)}};
      code = Yes;
    } else if (std::holds_alternative<NotB0>(v)) {
      j = {{"verdict", "NotB0"}};
      code = No;
    } else {
      j = {{"verdict", "Indeterminate"}, {"nodes", std::get<Indeterminate>(v).nodes}};
      code = Undecided;
    }
  } else {
    int max_vertices = o.budget > 0 ? static_cast<int>(o.budget) : 11;
    if (g.order() > max_vertices) {
      j = {{"verdict", "Indeterminate"}};
      code = Undecided;
    } else {
      bool linear = brute_force_linear(g);
      j = {{"verdict", linear ? "linear" : "not linear"}};
      code = linear ? Yes : No;
    }
  }
  emit(o, j.dump(2));
  return code;
}

int enumerate(const Options& o) {
  std::vector<std::string> props = o.properties;
  if (props.empty()) props = {"linear", "at-free", "necessary"};
  json rows = json::array();
  for (int n = 1; n <= o.n; ++n) {
    auto graphs = enumerate_outerplanar(n);
    json row{{"n", n}, {"count", graphs.size()}};
    for (const auto& p : props) {
      std::size_t tally = 0;
      for (const auto& g : graphs) {
        if (p == "linear")
          tally += is_linear_graph(g);
        else if (p == "at-free")
          tally += is_at_free(g);
        else
          tally += check_necessary_conditions(g, {20'000'000, false, 7}).verdict == Verdict::Pass;
      }
      row[p] = tally;
    }
    rows.push_back(row);
  }
  emit(o, rows.dump(2));
  return Yes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear outerplanar graphs and their B0 drawings"};
  app.require_subcommand(1);
  Options o;
  auto input = [&](CLI::App* cmd) {
    cmd->add_option("input", o.input, "graph file")->required();
    cmd->add_option("--format", o.format, "g6, edges or json (default: by extension)");
  };
  auto* rec = app.add_subcommand("recognize", "outerplanarity, AT-freeness and linearity");
  input(rec);
  auto* drw = app.add_subcommand("draw", "B0 drawing of a linear outerplanar graph");
  input(drw);
  drw->add_option("--mode", o.mode, "induced or spanning");
  drw->add_option("--out", o.out, "drawing JSON (default: stdout)");
  drw->add_option("--svg", o.svg, "SVG picture");
  auto* aug = app.add_subcommand("augment", "embed in a biconnected outerpath");
  input(aug);
  aug->add_option("--mode", o.mode, "induced or spanning");
  aug->add_option("--out", o.out, "report JSON (default: stdout)");
  auto* ver = app.add_subcommand("verify", "check a drawing against a graph");
  input(ver);
  ver->add_option("drawing", o.drawing, "drawing JSON")->required();
  auto* nec = app.add_subcommand("check-necessary", "search for H satisfying the necessary conditions");
  input(nec);
  nec->add_option("--budget", o.budget, "node limit");
  nec->add_option("--out", o.out, "report JSON (default: stdout)");
  auto* orc = app.add_subcommand("oracle", "brute-force verdicts on small graphs");
  orc->add_option("kind", o.oracle, "b0 or linear")->required()->check(CLI::IsMember({"b0", "linear"}));
  input(orc);
  orc->add_option("--budget", o.budget, "node limit (b0) or vertex limit (linear)");
  orc->add_option("--out", o.out, "report JSON (default: stdout)");
  auto* enu = app.add_subcommand("enumerate", "counts of connected outerplanar graphs");
  enu->add_option("--n", o.n, "largest order, at most 8")->required()->check(CLI::Range(1, 8));
  enu->add_option("--property", o.properties, "linear, at-free or necessary (repeatable)")
      ->check(CLI::IsMember({"linear", "at-free", "necessary"}));
  enu->add_option("--out", o.out, "report JSON (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Yes : Failure;
  }
  try {
    if (*rec) return recognize(o);
    if (*drw) return draw(o);
    if (*aug) return augment(o);
    if (*ver) return verify(o);
    if (*nec) return check_necessary(o);
    if (*orc) return oracle(o);
    return enumerate(o);
  } catch (const Error& e) {
    std::cerr << "opvg: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NotLinear:
      case ErrorCode::NotOuterplanar:
        return No;
      case ErrorCode::SearchBudgetExceeded:
        return Undecided;
      default:
        return Failure;
    }
  } catch (const std::exception& e) {
    std::cerr << "opvg: " << e.what() << "\n";
    return Failure;
  }
}
