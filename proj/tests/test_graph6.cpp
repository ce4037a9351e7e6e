#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sachs/enumeration.hpp"
#include "sachs/families.hpp"
#include "sachs/graph6.hpp"

using namespace sachs;

TEST_CASE("graph6 encodings of small graphs") {
  CHECK(g6_encode(complete(2)) == "A_");
  CHECK(g6_encode(Graph(2)) == "A?");
  CHECK(g6_encode(Graph(1)) == "@");
  CHECK(g6_encode(Graph(0)) == "?");
  CHECK(g6_encode(complete(4)) == "C~");
  CHECK(g6_encode(path(3)) == "Bg");
  CHECK(g6_decode(">>graph6<<A_") == complete(2));
}

TEST_CASE("graph6 round trip on every enumerated graph up to seven vertices") {
  for (int n = 1; n <= 7; ++n)
    enumerate(EnumSpec{n, std::nullopt, false, false}, [](const Graph& g) { REQUIRE(g6_decode(g6_encode(g)) == g); });
  CHECK(g6_decode(g6_encode(cycle(5))) == cycle(5));
}

TEST_CASE("graph6 round trip on random large graphs") {
  std::mt19937_64 rng(31);
  for (int n : {8, 13, 30, 62}) {
    const Graph g = oracle::random_graph(rng, n, 0.5);
    CHECK(g6_decode(g6_encode(g)) == g);
  }
  CHECK_THROWS_AS(g6_encode(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 rejects malformed strings") {
  CHECK_THROWS_AS(g6_decode("garbage\x01"), std::invalid_argument);
  CHECK_THROWS_AS(g6_decode(""), std::invalid_argument);
  CHECK_THROWS_AS(g6_decode("A"), std::invalid_argument);
  CHECK_THROWS_AS(g6_decode("A__"), std::invalid_argument);
  CHECK_THROWS_AS(g6_decode("A`"), std::invalid_argument);  // padding bit set
  CHECK_THROWS_AS(g6_decode("~?"), std::invalid_argument);  // multi-byte order prefix
  CHECK_THROWS_AS(g6_decode(" _"), std::invalid_argument);
}
