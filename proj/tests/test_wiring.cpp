#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "strpoly/wiring.hpp"

using namespace strpoly;

TEST_CASE("diagram of (2,1,2)") {
  auto d = WiringDiagram::build(ReducedWord::make(3, {2, 1, 2}));
  CHECK(d.at(1).wires() == std::pair<int, int>{2, 3});
  CHECK(d.at(2).wires() == std::pair<int, int>{1, 3});
  CHECK(d.at(3).wires() == std::pair<int, int>{1, 2});
  CHECK(d.position_of_pair(1, 3) == 2);
  CHECK(d.position_of_pair(3, 1) == 2);
  CHECK(d.position_of_pair(1, 2) == 3);
  CHECK_THROWS_AS(d.crossing_of_pair(2, 2), std::invalid_argument);
}

TEST_CASE("wire one rises through the first four crossings") {
  auto d = WiringDiagram::build(ReducedWord::make(5, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1}));
  CHECK(d.route(1) == std::vector<int>{1, 2, 3, 4});
  CHECK(d.at(1).wires() == std::pair<int, int>{1, 2});
  CHECK(d.at(4).wires() == std::pair<int, int>{1, 5});
}

TEST_CASE("single crossing at rank two") {
  auto d = WiringDiagram::build(ReducedWord::make(2, {1}));
  CHECK(d.size() == 1);
  CHECK(d.at(1).wires() == std::pair<int, int>{1, 2});
}

TEST_CASE("each pair crosses exactly once") {
  for (int n : {3, 4}) {
    for (const auto& letters : all_reduced_words(n)) {
      auto d = WiringDiagram::build(ReducedWord::make(n, letters));
      std::set<std::pair<int, int>> pairs;
      for (const auto& c : d.crossings) {
        CHECK(c.lower_wire < c.upper_wire);
        CHECK(pairs.insert(c.wires()).second);
      }
      CHECK(static_cast<int>(pairs.size()) == longest_length(n));
      // crossing k carries word letter k
      for (int k = 1; k <= d.size(); ++k) {
        CHECK(d.at(k).position == k);
        CHECK(d.at(k).level == letters[k - 1]);
      }
    }
  }
}

TEST_CASE("routes touch every crossing of the wire, in order") {
  std::vector<std::pair<int, std::vector<int>>> samples = {
      {5, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1}},
      {5, {1, 3, 2, 4, 1, 3, 2, 4, 3, 1}},
      {4, {1, 2, 1, 3, 2, 1}},
      {3, {2, 1, 2}},
  };
  for (const auto& [n, letters] : samples) {
    auto d = WiringDiagram::build(ReducedWord::make(n, letters));
    for (int w = 1; w <= n; ++w) {
      CHECK(static_cast<int>(d.route(w).size()) == n - 1);
      CHECK(std::is_sorted(d.route(w).begin(), d.route(w).end()));
      for (int pos : d.route(w)) {
        auto [p, q] = d.at(pos).wires();
        CHECK((p == w || q == w));
      }
    }
  }
}

TEST_CASE("orientation flags") {
  auto d = WiringDiagram::build(ReducedWord::make(5, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1}));
  auto od = orient(d, 3, false);
  CHECK(od.rightward(1));
  CHECK(od.rightward(3));
  CHECK_FALSE(od.rightward(4));
  CHECK_FALSE(od.rightward(5));
  auto flipped = orient(d, 3, true);
  CHECK_FALSE(flipped.rightward(1));
  CHECK(flipped.rightward(4));
  auto d2 = WiringDiagram::build(ReducedWord::make(2, {1}));
  auto od2 = orient(d2, 1, false);
  CHECK(od2.rightward(1));
  CHECK_FALSE(od2.rightward(2));
  CHECK_THROWS_AS(orient(d2, 2, false), std::invalid_argument);
}

TEST_CASE("dot export mentions every crossing") {
  auto d = WiringDiagram::build(ReducedWord::make(3, {2, 1, 2}));
  std::string dot = to_dot(orient(d, 1, false));
  CHECK(dot.find("digraph") != std::string::npos);
  for (int k = 1; k <= 3; ++k) {
    CHECK(dot.find("x" + std::to_string(k)) != std::string::npos);
  }
}
