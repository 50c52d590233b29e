// Command-line interface. Subcommand groups:
//   graph  classify | cutclique | atomic      decision procedures on vertex graphs
//   word   nf | mul | inv | tail | eq         graph-product word arithmetic
//   ball                                      Cayley balls in normal-form coordinates
//   sft    rules | check | witness | beta     subshift rule sets and patches
//   tiles  compile | check | row | search     Wang tiles from Turing machines
//   action check                              set-representation sanity check
// Exit codes: 0 when the queried property holds (or output was produced),
// 1 when it does not hold, 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "selfsim/action.hpp"
#include "selfsim/ball.hpp"
#include "selfsim/gallery.hpp"
#include "selfsim/graph.hpp"
#include "selfsim/omega.hpp"
#include "selfsim/patch.hpp"
#include "selfsim/rules.hpp"
#include "selfsim/separators.hpp"
#include "selfsim/tiles.hpp"
#include "selfsim/turing.hpp"
#include "selfsim/witness.hpp"
#include "selfsim/word.hpp"

namespace {

using selfsim::json;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool looks_like_file(const std::string& s) {
  std::ifstream f(s);
  return static_cast<bool>(f);
}

// Accepts a gallery name, a file path, "-" for stdin, or inline text.
selfsim::VertexGraph load_graph(const std::string& spec) {
  for (const auto& name : selfsim::gallery_names())
    if (spec == name) return selfsim::gallery_graph(spec);
  if (spec == "-" || looks_like_file(spec)) return selfsim::parse_vertex_graph(read_all(spec));
  return selfsim::parse_vertex_graph(spec);
}

// Accepts a sample machine name or a JSON file path.
selfsim::TuringMachine load_tm(const std::string& spec) {
  if (!looks_like_file(spec)) return selfsim::sample_tm_by_name(spec);
  return selfsim::tm_from_json(json::parse(read_all(spec)));
}

selfsim::Bits parse_bits(const std::string& s) {
  selfsim::Bits out;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::runtime_error("bit pattern must use only 0 and 1");
    out.push_back(c == '1' ? 1 : 0);
  }
  if (out.empty()) throw std::runtime_error("bit pattern must be non-empty");
  return out;
}

std::string bits_to_string(const selfsim::Bits& b) {
  std::string s;
  for (auto bit : b) s += bit ? '1' : '0';
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split_symbols(const std::string& s) {
  std::vector<std::string> out;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
  } else {
    for (char c : s) out.push_back(std::string(1, c));
  }
  return out;
}

template <typename Sym>
int check_patch_of(const json& j) {
  auto p = selfsim::patch_from_json<Sym>(j);
  selfsim::validate_patch(p);
  std::vector<selfsim::Rule<Sym>> rules;
  if constexpr (std::is_same_v<Sym, selfsim::PathSymbol>)
    rules = selfsim::make_path_rules<Sym>(p.graph);
  else if constexpr (std::is_same_v<Sym, selfsim::BushSymbol>)
    rules = selfsim::make_bush_rules<Sym>(p.graph);
  else
    rules = selfsim::make_compute_rules(p.graph);
  auto rep = selfsim::check_patch(rules, p);
  emit(selfsim::report_to_json(rep));
  return rep.ok() ? 0 : 1;
}

// The sample never-halt machine widened to the tape alphabet of the graph.
selfsim::TuringMachine tm_for_compute(const std::string& spec, const selfsim::GenIndex& gi) {
  if (spec == "never-halt") {
    auto alphabet = selfsim::all_omega_tape_strings(gi);
    return selfsim::never_halt_tm(alphabet, std::string(gi.columns(), '0'));
  }
  return load_tm(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures, word arithmetic, subshift patches and Wang tiles "
               "for graph products of groups"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string graph_spec, word_a, word_b, patch_path, system_name = "path";
  std::string action_name = "identity", seed_bits = "0", tm_spec = "never-halt";
  std::string tileset_path, grid_path, input_syms;
  int radius = 2, depth = 3, width = 4, height = 4, row_index = 0;

  // ----- graph ---------------------------------------------------------------
  auto* graph_cmd = app.add_subcommand("graph", "decision procedures on vertex graphs");
  graph_cmd->require_subcommand(1);

  auto* classify_cmd = graph_cmd->add_subcommand(
      "classify", "self-simulability and amenable splitting of a graph product");
  classify_cmd->add_option("graph", graph_spec, "graph: gallery name, file, -, or inline JSON")
      ->required();
  classify_cmd->callback([&] {
    auto verdict = selfsim::classify(load_graph(graph_spec));
    emit(selfsim::verdict_to_json(verdict));
    exit_code = verdict.self_simulable == selfsim::Answer::Yes ? 0 : 1;
  });

  std::string method = "bruteforce";
  auto* cut_cmd = graph_cmd->add_subcommand(
      "cutclique", "search for a clique whose removal disconnects the graph");
  cut_cmd->add_option("graph", graph_spec, "graph input")->required();
  cut_cmd->add_option("--method", method, "bruteforce (all cliques) or separator (fill-based)")
      ->check(CLI::IsMember({"bruteforce", "separator"}));
  cut_cmd->callback([&] {
    auto g = load_graph(graph_spec);
    json out;
    out["method"] = method;
    if (method == "separator") {
      auto c = selfsim::clique_separator_exists(g);
      out["exists"] = c.has_value();
      if (c) out["witness"] = std::vector<int>(c->begin(), c->end());
      exit_code = c ? 0 : 1;
    } else {
      std::set<int> all(g.ids.begin(), g.ids.end());
      auto found = selfsim::find_disconnecting_cliques(g, all, /*first_only=*/true);
      out["exists"] = !found.empty();
      if (!found.empty())
        out["witness"] = std::vector<int>(found.front().begin(), found.front().end());
      exit_code = found.empty() ? 1 : 0;
    }
    emit(out);
  });

  auto* atomic_cmd = graph_cmd->add_subcommand(
      "atomic", "no amenable clique disconnects and the graph is not a near-clique");
  atomic_cmd->add_option("graph", graph_spec, "graph input")->required();
  atomic_cmd->callback([&] {
    bool a = selfsim::is_atomic(load_graph(graph_spec));
    emit(json{{"atomic", a}});
    exit_code = a ? 0 : 1;
  });

  // ----- word ----------------------------------------------------------------
  auto* word_cmd = app.add_subcommand("word", "graph-product word arithmetic");
  word_cmd->require_subcommand(1);
  auto add_word_sub = [&](const std::string& name, const std::string& desc, int arity) {
    auto* c = word_cmd->add_subcommand(name, desc);
    c->add_option("--graph", graph_spec, "graph input")->required();
    c->add_option("a", word_a, "word, e.g. \"1:+2 3:-1\"")->required();
    if (arity == 2) c->add_option("b", word_b, "second word")->required();
    return c;
  };
  add_word_sub("nf", "canonical normal form", 1)->callback([&] {
    auto g = load_graph(graph_spec);
    emit(json{{"word", selfsim::word_to_string(g, selfsim::parse_word(g, word_a))}});
  });
  add_word_sub("mul", "product of two words", 2)->callback([&] {
    auto g = load_graph(graph_spec);
    auto w = selfsim::multiply(g, selfsim::parse_word(g, word_a), selfsim::parse_word(g, word_b));
    emit(json{{"word", selfsim::word_to_string(g, w)}});
  });
  add_word_sub("inv", "inverse of a word", 1)->callback([&] {
    auto g = load_graph(graph_spec);
    emit(json{{"word", selfsim::word_to_string(g, selfsim::invert(g, selfsim::parse_word(g, word_a)))}});
  });
  add_word_sub("tail", "vertices whose syllables can end the word", 1)->callback([&] {
    auto g = load_graph(graph_spec);
    auto t = selfsim::tail(g, selfsim::parse_word(g, word_a));
    emit(json{{"tail", std::vector<int>(t.begin(), t.end())}});
  });
  add_word_sub("eq", "equality in the graph product", 2)->callback([&] {
    auto g = load_graph(graph_spec);
    bool eq = selfsim::words_equal(g, selfsim::parse_word(g, word_a), selfsim::parse_word(g, word_b));
    emit(json{{"equal", eq}});
    exit_code = eq ? 0 : 1;
  });

  // ----- ball ----------------------------------------------------------------
  auto* ball_cmd = app.add_subcommand("ball", "Cayley ball in normal-form coordinates");
  ball_cmd->add_option("--graph", graph_spec, "graph input")->required();
  ball_cmd->add_option("-r,--radius", radius, "ball radius")->required();
  ball_cmd->callback([&] {
    auto g = load_graph(graph_spec);
    emit(selfsim::ball_to_json(g, selfsim::cayley_ball(g, radius)));
  });

  // ----- sft -----------------------------------------------------------------
  auto* sft_cmd = app.add_subcommand("sft", "subshift rule sets, patches and witnesses");
  sft_cmd->require_subcommand(1);

  auto* rules_cmd = sft_cmd->add_subcommand("rules", "list the rule instances for a graph");
  rules_cmd->add_option("--system", system_name, "path | bush | compute")
      ->check(CLI::IsMember({"path", "bush", "compute"}));
  rules_cmd->add_option("--graph", graph_spec, "graph input")->required();
  rules_cmd->callback([&] {
    auto g = load_graph(graph_spec);
    json list = json::array();
    auto describe = [&](const auto& rules) {
      for (const auto& r : rules) list.push_back({{"name", r.name}, {"window", r.window.size()}});
    };
    if (system_name == "path")
      describe(selfsim::make_path_rules<selfsim::PathSymbol>(g));
    else if (system_name == "bush")
      describe(selfsim::make_bush_rules<selfsim::BushSymbol>(g));
    else
      describe(selfsim::make_compute_rules(g));
    emit(json{{"system", system_name}, {"rule_count", list.size()}, {"rules", list}});
  });

  auto* check_cmd = sft_cmd->add_subcommand("check", "verify a patch against its rule set");
  check_cmd->add_option("patch", patch_path, "patch JSON file or -")->required();
  check_cmd->callback([&] {
    json j = json::parse(read_all(patch_path));
    std::string system = j.at("system").get<std::string>();
    if (system == "path")
      exit_code = check_patch_of<selfsim::PathSymbol>(j);
    else if (system == "bush")
      exit_code = check_patch_of<selfsim::BushSymbol>(j);
    else if (system == "compute")
      exit_code = check_patch_of<selfsim::ComputeSymbol>(j);
    else
      throw std::runtime_error("unknown system '" + system + "'");
  });

  auto* witness_cmd = sft_cmd->add_subcommand("witness", "construct a valid patch");
  witness_cmd->add_option("--system", system_name, "path | bush | compute")
      ->check(CLI::IsMember({"path", "bush", "compute"}));
  witness_cmd->add_option("--graph", graph_spec, "graph input")->required();
  witness_cmd->add_option("-r,--radius", radius, "patch radius")->required();
  witness_cmd->add_option("--action", action_name, "identity | odometer");
  witness_cmd->add_option("--seed-bits", seed_bits, "repeating bit pattern for the base point");
  witness_cmd->add_option("--tm", tm_spec, "sample machine name or JSON file (compute only)");
  witness_cmd->callback([&] {
    auto g = load_graph(graph_spec);
    auto action = selfsim::action_by_name(action_name);
    auto bits = parse_bits(seed_bits);
    if (system_name == "path") {
      emit(selfsim::patch_to_json(selfsim::path_witness(g, radius)));
    } else if (system_name == "bush") {
      emit(selfsim::patch_to_json(selfsim::bush_witness(g, radius, action, bits)));
    } else {
      auto tm = tm_for_compute(tm_spec, selfsim::make_gen_index(g));
      emit(selfsim::patch_to_json(selfsim::compute_witness(g, radius, action, bits, tm)));
    }
  });

  auto* beta_cmd = sft_cmd->add_subcommand("beta", "read the tape sequence of a compute patch");
  beta_cmd->add_option("patch", patch_path, "compute patch JSON file or -")->required();
  beta_cmd->add_option("--depth", depth, "number of letters to read");
  beta_cmd->callback([&] {
    auto p = selfsim::patch_from_json<selfsim::ComputeSymbol>(json::parse(read_all(patch_path)));
    emit(json{{"bits", bits_to_string(selfsim::beta(p, depth))}});
  });

  // ----- tiles ---------------------------------------------------------------
  auto* tiles_cmd = app.add_subcommand("tiles", "Wang tiles compiled from Turing machines");
  tiles_cmd->require_subcommand(1);

  auto* compile_cmd = tiles_cmd->add_subcommand("compile", "compile a machine to a tileset");
  compile_cmd->add_option("--tm", tm_spec, "sample machine name or JSON file")->required();
  compile_cmd->callback(
      [&] { emit(selfsim::tileset_to_json(selfsim::compile_tm_to_tiles(load_tm(tm_spec)))); });

  auto* tcheck_cmd = tiles_cmd->add_subcommand("check", "verify a tile grid");
  tcheck_cmd->add_option("--tileset", tileset_path, "tileset JSON file")->required();
  tcheck_cmd->add_option("grid", grid_path, "grid JSON file or -")->required();
  tcheck_cmd->callback([&] {
    auto ts = selfsim::tileset_from_json(json::parse(read_all(tileset_path)));
    auto grid = selfsim::grid_from_json(json::parse(read_all(grid_path)));
    auto rep = selfsim::check_tiling(ts, grid);
    emit(selfsim::tiling_report_to_json(rep));
    exit_code = rep.violations.empty() ? 0 : 1;
  });

  auto* row_cmd = tiles_cmd->add_subcommand("row", "render a computation and print one row");
  row_cmd->add_option("--tm", tm_spec, "sample machine name or JSON file")->required();
  row_cmd->add_option("--input", input_syms, "input symbols (chars, or comma-separated)")
      ->required();
  row_cmd->add_option("-w,--width", width, "window width");
  row_cmd->add_option("--height", height, "window height");
  row_cmd->add_option("--row", row_index, "row to print (0 = input row)");
  row_cmd->callback([&] {
    auto tm = load_tm(tm_spec);
    auto ts = selfsim::compile_tm_to_tiles(tm);
    auto grid = selfsim::render_computation(ts, tm, split_symbols(input_syms), width, height);
    json tiles = json::array(), north = json::array();
    for (int x = 0; x < width; ++x) {
      auto it = grid.find({x, row_index});
      int id = it == grid.end() ? ts.blank : it->second;
      tiles.push_back(id);
      north.push_back(ts.tile(id).n);
    }
    emit(json{{"row", row_index}, {"tiles", tiles}, {"north", north}});
  });

  std::string pinned;
  auto* search_cmd = tiles_cmd->add_subcommand("search", "find a seeded w x h patch");
  search_cmd->add_option("--tileset", tileset_path, "tileset JSON file (or --tm)");
  search_cmd->add_option("--tm", tm_spec, "sample machine name or JSON file");
  search_cmd->add_option("-w,--width", width, "patch width");
  search_cmd->add_option("--height", height, "patch height");
  search_cmd->add_option("--pinned", pinned, "comma-separated tile ids pinned right of the seed");
  search_cmd->callback([&] {
    selfsim::WangTileset ts = tileset_path.empty()
                                  ? selfsim::compile_tm_to_tiles(load_tm(tm_spec))
                                  : selfsim::tileset_from_json(json::parse(read_all(tileset_path)));
    std::optional<std::vector<int>> pin;
    if (!pinned.empty()) {
      pin.emplace();
      std::stringstream ss(pinned);
      std::string item;
      while (std::getline(ss, item, ',')) pin->push_back(std::stoi(item));
    }
    auto grid = selfsim::search_seeded_patch(ts, width, height, pin);
    json out;
    out["exists"] = grid.has_value();
    if (grid) out["grid"] = selfsim::grid_to_json(*grid);
    emit(out);
    exit_code = grid ? 0 : 1;
  });

  // ----- action ---------------------------------------------------------------
  auto* action_cmd = app.add_subcommand("action", "set-representation checks");
  action_cmd->require_subcommand(1);
  auto* acheck_cmd = action_cmd->add_subcommand(
      "check", "verify generator columns against the action at a base word");
  acheck_cmd->add_option("--graph", graph_spec, "graph input")->required();
  acheck_cmd->add_option("--action", action_name, "identity | odometer");
  acheck_cmd->add_option("--seed-bits", seed_bits, "repeating bit pattern for the base point");
  acheck_cmd->add_option("--word", word_a, "base word (default: identity)");
  acheck_cmd->add_option("--depth", depth, "number of tape letters to build");
  acheck_cmd->callback([&] {
    auto g = load_graph(graph_spec);
    auto gi = selfsim::make_gen_index(g);
    auto action = selfsim::action_by_name(action_name);
    auto x = selfsim::cycle_pattern(parse_bits(seed_bits), static_cast<size_t>(depth));
    auto root = selfsim::parse_word(g, word_a);
    auto y = selfsim::y_columns(g, gi, action, x, root);
    auto issues = selfsim::set_representation_check(
        gi, y, action, [&](const selfsim::Bits& ident) { return !root.empty() || ident == x; });
    json list = json::array();
    for (const auto& i : issues)
      list.push_back({{"column", i.column}, {"bit", i.bit}, {"detail", i.detail}});
    emit(json{{"issues", list}});
    exit_code = issues.empty() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
