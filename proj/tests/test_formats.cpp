// JSON interchange: symbol, patch, graph, verdict and report serialization
// round trips, plus the shape errors the deserializers must reject.

#include <catch2/catch_amalgamated.hpp>

#include "selfsim/gallery.hpp"
#include "selfsim/rules.hpp"
#include "selfsim/witness.hpp"

using namespace selfsim;
using Catch::Matchers::ContainsSubstring;
using json = nlohmann::ordered_json;

TEST_CASE("path patches round trip through JSON") {
  for (const std::string name : {"square", "z_f2"}) {
    INFO("graph " << name);
    auto g = gallery_graph(name);
    auto p = path_witness(g, 2);
    json j = patch_to_json(p);
    REQUIRE(j.at("system") == "path");
    auto q = patch_from_json<PathSymbol>(j);
    REQUIRE(q.radius == p.radius);
    REQUIRE(q.cells == p.cells);
    REQUIRE(patch_to_json(q) == j);
  }
}

TEST_CASE("bush patches round trip through JSON") {
  auto g = gallery_graph("square");
  auto p = bush_witness(g, 2, odometer_action(), {0, 1});
  json j = patch_to_json(p);
  REQUIRE(j.at("system") == "bush");
  auto q = patch_from_json<BushSymbol>(j);
  REQUIRE(q.cells == p.cells);
  REQUIRE_FALSE(q.tileset.has_value());
  REQUIRE(patch_to_json(q) == j);
}

TEST_CASE("compute patches round trip through JSON with their tileset") {
  auto g = gallery_graph("square");
  GenIndex gi = make_gen_index(g);
  std::vector<std::string> alphabet = all_omega_tape_strings(gi);
  alphabet.push_back("_");
  TuringMachine tm = never_halt_tm(alphabet, "_");
  auto p = compute_witness(g, 2, odometer_action(), {0, 1}, tm);
  json j = patch_to_json(p);
  REQUIRE(j.at("system") == "compute");
  auto q = patch_from_json<ComputeSymbol>(j);
  REQUIRE(q.cells == p.cells);
  REQUIRE(q.tileset.has_value());
  REQUIRE(tileset_to_json(*q.tileset) == tileset_to_json(*p.tileset));
  REQUIRE(patch_to_json(q) == j);
}

TEST_CASE("patch deserialization rejects the wrong system") {
  auto g = gallery_graph("square");
  json j = patch_to_json(bush_witness(g, 2, identity_action(), {0}));
  REQUIRE_THROWS_WITH(patch_from_json<PathSymbol>(j), ContainsSubstring("expected a path patch"));
  REQUIRE_THROWS_WITH(patch_from_json<ComputeSymbol>(j),
                      ContainsSubstring("expected a compute patch"));
}

TEST_CASE("colored vertices and edges reject malformed input") {
  REQUIRE_THROWS_WITH(make_colored_edge({1, Color::R}, {1, Color::C}),
                      ContainsSubstring("endpoints must differ"));
  REQUIRE_THROWS_WITH(colored_vertex_from_json(json::array({"1"})),
                      ContainsSubstring("colored vertex"));
  REQUIRE_THROWS_WITH(colored_vertex_from_json(json::array({"1", "x"})),
                      ContainsSubstring("unknown color"));
  REQUIRE_THROWS_WITH(colored_edge_from_json(json("oops")), ContainsSubstring("pair"));
}

TEST_CASE("bush symbols reject duplicate letter keys") {
  auto g = gallery_graph("square");
  GenIndex gi = make_gen_index(g);
  auto p = bush_witness(g, 2, odometer_action(), {0, 1});
  json sj = symbol_to_json_ctx(p.at(parse_word(g, "1:+1")), gi);
  REQUIRE(sj.at("L").size() > 0);
  sj["L"].push_back(sj["L"].at(0));
  BushSymbol s;
  REQUIRE_THROWS_WITH(symbol_from_json_ctx(sj, gi, s), ContainsSubstring("duplicate L key"));
}

TEST_CASE("graphs round trip through JSON for every group kind") {
  VertexGraph g;
  g.add_vertex(1, VertexGroup{.kind = GroupKind::Z});
  g.add_vertex(2, VertexGroup{.kind = GroupKind::Free, .rank = 3});
  g.add_vertex(3, VertexGroup{.kind = GroupKind::Zn, .order = 5});
  g.add_vertex(4, VertexGroup{.kind = GroupKind::Table,
                              .elements = {"e", "g"},
                              .table = {{0, 1}, {1, 0}}});
  g.add_vertex(5, VertexGroup{.kind = GroupKind::Abstract,
                              .abstract_infinite = true,
                              .abstract_amenable = true});
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(4, 5);
  json j = graph_to_json(g);
  VertexGraph h = graph_from_json(j);
  REQUIRE(graph_to_json(h) == j);
  REQUIRE(h.ids == g.ids);
  REQUIRE(h.edges == g.edges);
}

TEST_CASE("plain edge lists parse with integer vertex groups") {
  VertexGraph g = parse_vertex_graph("1 2\n2 3\n");
  REQUIRE(g.ids == std::vector<int>{1, 2, 3});
  REQUIRE(g.edges.size() == 2);
  for (int v : g.ids) REQUIRE(g.group(v).kind == GroupKind::Z);
  // The middle vertex disconnects this path.
  Verdict verdict = classify(g);
  REQUIRE(verdict.self_simulable == Answer::No);
  REQUIRE(verdict.witness == std::set<int>{2});

  // JSON text is accepted by the same entry point.
  VertexGraph h = parse_vertex_graph(graph_to_json(gallery_graph("square")).dump());
  REQUIRE(h.ids.size() == 4);

  REQUIRE_THROWS_WITH(parse_vertex_graph("1 2\nnot an edge\n"),
                      ContainsSubstring("expected 'u v'"));
}

TEST_CASE("verdicts serialize their answers, witnesses and reasons") {
  json yes = verdict_to_json(classify(gallery_graph("square")));
  REQUIRE(yes.at("self_simulable") == "Yes");
  REQUIRE(yes.at("splits_over_amenable") == "No");
  REQUIRE_FALSE(yes.contains("witness"));
  REQUIRE_FALSE(yes.contains("reason"));

  json no = verdict_to_json(classify(gallery_graph("path3")));
  REQUIRE(no.at("self_simulable") == "No");
  REQUIRE(no.at("splits_over_amenable") == "Yes");
  REQUIRE(no.at("witness") == json::array({2}));

  VertexGraph finite;
  finite.add_vertex(1, VertexGroup{.kind = GroupKind::Zn, .order = 4});
  json scope = verdict_to_json(classify(finite));
  REQUIRE(scope.at("self_simulable") == "OutOfTheoremScope");
  REQUIRE(scope.at("reason").get<std::string>().find("finite") != std::string::npos);
}

TEST_CASE("rule violation reports serialize all their fields") {
  ViolationReport rep;
  rep.checked_count = 3;
  rep.skipped_count = 1;
  rep.violations.push_back({"rule-x", "1:+1", {"", "1:+1"}, "went wrong"});
  json j = report_to_json(rep);
  REQUIRE(j.at("checked") == 3);
  REQUIRE(j.at("skipped") == 1);
  REQUIRE(j.at("violations").size() == 1);
  REQUIRE(j.at("violations").at(0).at("rule") == "rule-x");
  REQUIRE(j.at("violations").at(0).at("base") == "1:+1");
  REQUIRE(j.at("violations").at(0).at("detail") == "went wrong");

  json t = tiling_report_to_json(TilingReport{});
  REQUIRE(t.at("checked") == 0);
  REQUIRE(t.at("violations").is_array());
}

TEST_CASE("omega symbols round trip through JSON") {
  auto g = gallery_graph("square");
  GenIndex gi = make_gen_index(g);
  auto p = bush_witness(g, 2, odometer_action(), {0, 1});
  const auto& L = p.at(parse_word(g, "1:+1")).L;
  REQUIRE_FALSE(L.empty());
  const OmegaSymbol& om = L.begin()->second;
  OmegaSymbol back = omega_from_json(gi, omega_to_json(gi, om));
  REQUIRE(back == om);
}
