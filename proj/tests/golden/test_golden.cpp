#include "okada/io.hpp"
#include "okada/render.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace okada;
using io::Json;

namespace {

const std::filesystem::path kDir = OKADA_GOLDEN_DIR;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing fixture " << p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json fixture(const std::string& name, std::string_view kind) {
  return io::payload(io::parse(read_file(kDir / name)), kind);
}

// Byte comparison against a stored drawing; OKADA_UPDATE_GOLDEN=1 rewrites it.
void check_drawing(const std::string& name, const std::string& actual) {
  const auto path = kDir / "render" / name;
  if (const char* update = std::getenv("OKADA_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << actual;
  }
  CHECK_MESSAGE(read_file(path) == actual, "drawing differs from " << path.string());
}

void check_drawings(const std::string& stem, const auto& object) {
  check_drawing(stem + ".svg", render(object, Format::svg));
  check_drawing(stem + ".tikz", render(object, Format::tikz));
}

std::string canonical(std::string_view kind, Json body) { return io::document(kind, std::move(body)).dump(2) + "\n"; }

Json loops_json(const std::vector<LoopRecord>& loops) {
  Json out = Json::array();
  for (const LoopRecord& l : loops) out.push_back({{"height", l.height}, {"count", l.count}});
  return out;
}

Json chain_json(const Json& sets) { return io::to_json(io::chain_from_json(sets)); }

}  // namespace

TEST_CASE("diamond diagram with its loop configuration") {
  const Json f = fixture("diamond.json", "figure-diamond");
  const Heap heap = io::heap_from_json(f.at("heap"));
  const Composition traced = trace_fplc(heap);

  const std::string expected = canonical("figure-diamond", {{"rank", f.at("rank")},
                                                            {"reading", f.at("reading")},
                                                            {"heap", io::to_json(heap)},
                                                            {"diagram", io::to_json(io::diagram_from_json(f.at("diagram")))},
                                                            {"loops", f.at("loops")}});
  const std::string computed = canonical("figure-diamond", {{"rank", heap.rank()},
                                                            {"reading", reading(heap)},
                                                            {"heap", io::to_json(heap)},
                                                            {"diagram", io::to_json(traced.diagram)},
                                                            {"loops", loops_json(traced.loops)}});
  CHECK(computed == expected);
  const Word word = f.at("reading").get<Word>();
  CHECK(evaluate_word(word, 6).diagram == traced.diagram);

  check_drawings("diamond_heap", heap);
  check_drawings("diamond_diagram", traced.diagram);
}

TEST_CASE("identity, generator and a composition with one loop") {
  const Json f = fixture("arc_diagrams.json", "figure-arc-diagrams");
  const ArcDiagram id = io::diagram_from_json(f.at("identity"));
  const int index = f.at("generator").at("index").get<int>();
  const ArcDiagram gen = io::diagram_from_json(f.at("generator").at("diagram"));
  const Json& comp = f.at("composition");
  const ArcDiagram left = io::diagram_from_json(comp.at("left")), right = io::diagram_from_json(comp.at("right"));
  const DiagramProduct product = product_y1(left, right);

  const Json coeff = comp.at("coeff");
  const std::string expected = canonical(
      "figure-arc-diagrams", {{"identity", io::to_json(id)},
                              {"generator", io::to_json(gen)},
                              {"composition", {{"coeff", coeff}, {"result", io::to_json(io::diagram_from_json(comp.at("result")))}}}});
  const std::string computed = canonical(
      "figure-arc-diagrams", {{"identity", io::to_json(identity(8))},
                              {"generator", io::to_json(generator(index, 8))},
                              {"composition", {{"coeff", io::to_json(product.coefficient)}, {"result", io::to_json(product.diagram)}}}});
  CHECK(computed == expected);

  check_drawings("identity_8", identity(8));
  check_drawings("generator_3", generator(index, 8));
  check_drawings("composition_left", left);
  check_drawings("composition_right", right);
  check_drawings("composition_result", product.diagram);
}

TEST_CASE("arc diagram with its two chains") {
  const Json f = fixture("arc_chain.json", "figure-arc-chain");
  const ArcDiagram d = io::diagram_from_json(f.at("diagram"));
  const std::string expected = canonical("figure-arc-chain", {{"diagram", io::to_json(d)},
                                                              {"left_chain", chain_json(f.at("left_chain"))},
                                                              {"right_chain", chain_json(f.at("right_chain"))}});
  const std::string computed = canonical("figure-arc-chain", {{"diagram", io::to_json(glue(bra(d), ket(d)))},
                                                              {"left_chain", io::to_json(chain_of(bra(d)))},
                                                              {"right_chain", io::to_json(chain_of(ket(d)))}});
  CHECK(computed == expected);
  CHECK(chain_inverse(io::chain_from_json(f.at("left_chain"))) == bra(d));
  CHECK(chain_inverse(io::chain_from_json(f.at("right_chain"))) == ket(d));

  check_drawings("arc_chain", d);
  check_drawings("arc_chain_bra", bra(d));
  check_drawings("arc_chain_ket", ket(d));
}

TEST_CASE("Young-Fibonacci lattice up to rank 5") {
  const Json f = fixture("yf_lattice.json", "figure-yf-lattice");
  const int max_rank = f.at("max_rank").get<int>();

  auto sorted = [](Json nodes, Json covers) {
    std::vector<Json> n(nodes.begin(), nodes.end()), c(covers.begin(), covers.end());
    auto key = [](const Json& node) { return std::make_pair(node.at("set").at("rank").get<int>(), node.at("word").get<std::string>()); };
    std::sort(n.begin(), n.end(), [&](const Json& a, const Json& b) { return key(a) < key(b); });
    std::sort(c.begin(), c.end(), [](const Json& a, const Json& b) {
      return std::make_pair(a[0].get<std::string>(), a[1].get<std::string>()) <
             std::make_pair(b[0].get<std::string>(), b[1].get<std::string>());
    });
    return Json{{"nodes", n}, {"covers", c}};
  };

  Json nodes = Json::array();
  for (const Json& node : f.at("nodes")) {
    const FibonacciSet s = io::fibonacci_set_from_json(node.at("set"));
    nodes.push_back({{"word", node.at("word")}, {"set", io::to_json(s)}});
  }
  Json computed_nodes = Json::array(), computed_covers = Json::array();
  auto word_of = [](const FibonacciSet& s) { return s.rank() == 0 ? std::string() : set_to_word(s).letters(); };
  for (int n = 0; n <= max_rank; ++n) {
    for (const FibonacciSet& s : enumerate_yfs(n)) {
      computed_nodes.push_back({{"word", word_of(s)}, {"set", io::to_json(s)}});
      if (n < max_rank)
        for (const FibonacciSet& t : yf_covers(s)) computed_covers.push_back({word_of(s), word_of(t)});
    }
  }
  CHECK(canonical("figure-yf-lattice", sorted(computed_nodes, computed_covers)) ==
        canonical("figure-yf-lattice", sorted(nodes, f.at("covers"))));

  check_drawing("yf_lattice_5.svg", render_yf_hasse(max_rank, Format::svg));
  check_drawing("yf_lattice_5.tikz", render_yf_hasse(max_rank, Format::tikz));
}

TEST_CASE("dominance order on rank-5 Fibonacci sets") {
  const Json f = fixture("dominance_5.json", "figure-dominance");
  const int rank = f.at("rank").get<int>();
  const DominanceLattice lattice(rank);

  auto sorted_sets = [](Json sets) {
    std::vector<FibonacciSet> v;
    for (const Json& s : sets) v.push_back(io::fibonacci_set_from_json(s));
    std::sort(v.begin(), v.end());
    Json out = Json::array();
    for (const auto& s : v) out.push_back(io::to_json(s));
    return out;
  };
  auto sorted_covers = [](Json covers) {
    std::vector<std::pair<FibonacciSet, FibonacciSet>> v;
    for (const Json& c : covers) v.emplace_back(io::fibonacci_set_from_json(c[0]), io::fibonacci_set_from_json(c[1]));
    std::sort(v.begin(), v.end());
    Json out = Json::array();
    for (const auto& [a, b] : v) out.push_back({io::to_json(a), io::to_json(b)});
    return out;
  };
  Json elements = Json::array(), covers = Json::array();
  for (const FibonacciSet& s : lattice.elements()) elements.push_back(io::to_json(s));
  for (const auto& [lo, hi] : lattice.hasse_edges())
    covers.push_back({io::to_json(lattice.elements()[lo]), io::to_json(lattice.elements()[hi])});

  CHECK(canonical("figure-dominance", {{"elements", sorted_sets(elements)}, {"covers", sorted_covers(covers)}}) ==
        canonical("figure-dominance", {{"elements", sorted_sets(f.at("elements"))}, {"covers", sorted_covers(f.at("covers"))}}));

  check_drawing("dominance_5.svg", render_dominance_hasse(rank, Format::svg));
  check_drawing("dominance_5.tikz", render_dominance_hasse(rank, Format::tikz));
}

TEST_CASE("documents reject schema drift") {
  const Json drift = io::parse(read_file(kDir / "schema_drift.json"));
  CHECK_THROWS_AS((void)io::payload(drift, "diagram"), io::SchemaError);
  Json fixed = drift;
  fixed["schema"] = io::schema_version;
  CHECK(io::diagram_from_json(io::payload(fixed, "diagram")) == identity(2));
  CHECK_THROWS_AS((void)io::payload(fixed, "half-diagram"), io::SchemaError);
  Json missing = fixed;
  missing.erase("schema");
  CHECK_THROWS_AS((void)io::payload(missing, "diagram"), io::SchemaError);
}
