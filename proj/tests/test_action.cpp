// Point actions on bit sequences: the identity action, the binary odometer
// (least significant bit first), generator factorization of words, inverse
// application, and the set-representation column check.

#include <catch2/catch_amalgamated.hpp>

#include "selfsim/action.hpp"
#include "selfsim/gallery.hpp"
#include "selfsim/witness.hpp"

using namespace selfsim;

TEST_CASE("odometer increments least significant bit first") {
  auto od = odometer_action();
  REQUIRE(od.apply("1:+1", {0, 0, 0}) == Bits{1, 0, 0});
  REQUIRE(od.apply("1:+1", {1, 0, 0}) == Bits{0, 1, 0});
  REQUIRE(od.apply("1:+1", {1, 1, 0}) == Bits{0, 0, 1});
  REQUIRE(od.apply("1:+1", {1, 1, 1}) == Bits{0, 0, 0});  // wraps within the window
  REQUIRE(od.apply("1:-1", {0, 1, 0}) == Bits{1, 0, 0});
  REQUIRE(od.apply("1:-1", {0, 0, 0}) == Bits{1, 1, 1});  // borrow wraps too
  // The action factors through the exponent: any positive generator adds one.
  REQUIRE(od.apply("3:+1", {0, 0}) == Bits{1, 0});
}

TEST_CASE("identity action is inert") {
  auto id = identity_action();
  REQUIRE(id.apply("1:+1", {1, 0, 1}) == Bits{1, 0, 1});
}

TEST_CASE("generator factorization of words") {
  auto g = gallery_graph("mixed_square");
  auto w = parse_word(g, "1:+2 2:a^-1b");
  REQUIRE(generator_factors(g, w) ==
          std::vector<std::string>{"1:+1", "1:+1", "2:a^-1", "2:b"});
  auto neg = parse_word(g, "3:-2");
  REQUIRE(generator_factors(g, neg) == std::vector<std::string>{"3:-1", "3:-1"});
  REQUIRE(invert_generator_name(g, "1:+1") == "1:-1");
  REQUIRE(invert_generator_name(g, "2:a^-1") == "2:a");
}

TEST_CASE("applying the inverse of a word") {
  auto g = gallery_graph("square");
  auto od = odometer_action();
  Bits x = {0, 0, 0, 0};

  // w = (1:+2): applying w^{-1} subtracts twice.
  REQUIRE(apply_inverse_of_word(od, g, parse_word(g, "1:+2"), x) == Bits{0, 1, 1, 1});
  // w = (1:-1): applying w^{-1} adds once.
  REQUIRE(apply_inverse_of_word(od, g, parse_word(g, "1:-1"), x) == Bits{1, 0, 0, 0});
  // Mixed word: net exponent sum -1 + 2 = +1, inverse subtracts one.
  REQUIRE(apply_inverse_of_word(od, g, parse_word(g, "1:-1 3:+2"), x) == Bits{1, 1, 1, 1});
  // The identity action never changes anything.
  REQUIRE(apply_inverse_of_word(identity_action(), g, parse_word(g, "1:+2"), x) == x);
}

TEST_CASE("set representation check accepts coherent columns") {
  auto g = gallery_graph("square");
  auto gi = make_gen_index(g);
  auto od = odometer_action();
  Bits x = cycle_pattern({0, 1}, 12);

  auto y = y_columns(g, gi, od, x, parse_word(g, ""));
  auto issues = set_representation_check(gi, y, od,
                                         [&](const Bits& ident) { return ident == x; });
  REQUIRE(issues.empty());

  // At a shifted base word the identity column is the shifted point.
  auto y2 = y_columns(g, gi, od, x, parse_word(g, "1:+1"));
  Bits expect = od.apply("1:-1", x);
  auto issues2 = set_representation_check(gi, y2, od,
                                          [&](const Bits& ident) { return ident == expect; });
  REQUIRE(issues2.empty());
}

TEST_CASE("set representation check flags corrupted columns") {
  auto g = gallery_graph("square");
  auto gi = make_gen_index(g);
  auto od = odometer_action();
  Bits x = cycle_pattern({0, 1}, 12);
  auto y = y_columns(g, gi, od, x, parse_word(g, ""));

  auto broken = y;
  broken[3].bits[2] ^= 1;  // flip one bit of the "1:-1" column
  auto issues = set_representation_check(gi, broken, od,
                                         [&](const Bits& ident) { return ident == x; });
  REQUIRE_FALSE(issues.empty());
  REQUIRE(issues.front().column == "1:-1");
}

TEST_CASE("action lookup by name") {
  REQUIRE(action_by_name("identity").name == "identity");
  REQUIRE(action_by_name("odometer").name == "odometer");
  REQUIRE_THROWS(action_by_name("unknown"));
}
