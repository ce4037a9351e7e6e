#include <doctest.h>

#include <stdexcept>

#include "sachs/canonical.hpp"
#include "sachs/families.hpp"
#include "sachs/invariants.hpp"
#include "sachs/recognition.hpp"

using namespace sachs;

TEST_CASE("threshold vectors build the expected graphs") {
  CHECK(is_isomorphic(threshold_from_vector(ThresholdVector({2, 2})), complete(4).without_edge(0, 1)));
  for (int n = 2; n <= 9; ++n) CHECK(is_isomorphic(threshold_from_vector(ThresholdVector({n - 1, 1})), star(n)));
  CHECK(threshold_from_vector(ThresholdVector({1, 1})) == complete(2));
  const Graph g1 = threshold_from_vector(ThresholdVector({1, 2, 3, 1}));
  CHECK(g1.order() == 7);
  CHECK(g1.size() == 9);
}

TEST_CASE("threshold vector validation and normalization") {
  CHECK_THROWS_AS(ThresholdVector({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ThresholdVector({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ThresholdVector({}), std::invalid_argument);
  CHECK(ThresholdVector::normalized({2, 0, 3, 1}) == ThresholdVector({5, 1}));
  CHECK(ThresholdVector::normalized({0, 3}) == ThresholdVector({1, 2}));
  CHECK(ThresholdVector::normalized({0, 2, 2, 1}) == ThresholdVector({1, 1, 2, 1}));
  CHECK_THROWS_AS(ThresholdVector::normalized({2, 1, 3}), std::invalid_argument);
}

TEST_CASE("difference vectors build the expected graphs") {
  CHECK(difference_from_vector(DifferenceVector({1}, {1})) == complete(2));
  CHECK(is_isomorphic(difference_from_vector(DifferenceVector({2}, {3})), complete_bipartite(2, 3)));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const Graph g = difference_from_vector(DifferenceVector({1, 1}, {a, b}));
      CHECK(g.size() == a + b + a);
      CHECK(g.degree(0) == a + b);
      CHECK(g.degree(1) == a);
    }
  CHECK_THROWS_AS(DifferenceVector({1, 2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(DifferenceVector({0}, {1}), std::invalid_argument);
  CHECK(DifferenceVector({1, 2, 1}, {1, 1, 3}).character() == 3);
}

TEST_CASE("difference vector zero blocks merge duplicate classes") {
  // Without X_2, Y_2 and Y_3 both see only X_1.
  CHECK(DifferenceVector::normalized({1, 0, 2}, {1, 2, 3}) == DifferenceVector({1, 2}, {1, 5}));
  CHECK_THROWS_AS(DifferenceVector::normalized({0, 1}, {1, 1}), std::invalid_argument);
  CHECK(DifferenceVector::normalized({2, 1}, {3, 0}) == DifferenceVector({3}, {3}));
}

TEST_CASE("both difference conventions give the same graph") {
  for (const auto& [xs, ys] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{1}, {1}}, {{1, 1}, {4, 2}}, {{2, 1, 3}, {1, 2, 2}}, {{1, 1, 1, 1}, {1, 1, 1, 1}}}) {
    const DifferenceVector dv(xs, ys);
    const Graph a = difference_from_vector(dv);
    CHECK(a == difference_from_vector_by_y(dv));
    CHECK(is_difference(a));
    CHECK(a.order() == dv.order());
  }
}

TEST_CASE("threshold outputs are threshold graphs") {
  for (const auto& blocks : std::vector<std::vector<int>>{{1, 1}, {2, 2}, {1, 2, 3, 1}, {3, 1, 1, 2, 2, 1}}) {
    const Graph g = threshold_from_vector(ThresholdVector(blocks));
    CHECK(is_threshold(g));
    CHECK(g.is_connected());
    CHECK(threshold_vector_of(g) == ThresholdVector(blocks));
  }
}

TEST_CASE("extremal graphs have n vertices, m edges and the closed-form a4") {
  for (int n = 6; n <= 9; ++n) {
    const Graph g1 = extremal_G1(n);
    CHECK(g1.order() == n);
    CHECK(g1.size() == n + 2);
    CHECK(a4_combinatorial(g1) == 3 * n - 15);
    for (int m = n - 1; m <= 2 * n - 4; ++m) {
      const Graph g2 = extremal_G2(n, m), g3 = extremal_G3(n, m);
      CHECK(g2.order() == n);
      CHECK(g3.order() == n);
      CHECK(g2.size() == m);
      CHECK(g3.size() == m);
      CHECK(g2.is_connected());
      CHECK(g3.is_connected());
      CHECK(is_threshold(g2));
      CHECK(is_difference(g3));
      CHECK(a4_combinatorial(g2) == Integer{m - n + 1} * (2 * n - m - 3));
      CHECK(a4_combinatorial(g3) == Integer{2 * n - 4 - m} * (m - n + 2));
    }
  }
  CHECK(extremal_G2_vector(7, 8) == ThresholdVector({2, 1, 3, 1}));
  CHECK(extremal_G3_vector(8, 10) == DifferenceVector({1, 1}, {4, 2}));
  CHECK(is_isomorphic(extremal_G2(7, 6), star(7)));
  CHECK(is_isomorphic(extremal_G3(8, 12), complete_bipartite(2, 6)));
  CHECK_THROWS_AS(extremal_G1(5), std::invalid_argument);
  CHECK_THROWS_AS(extremal_G2(7, 11), std::invalid_argument);
  CHECK_THROWS_AS(extremal_G3(7, 5), std::invalid_argument);
}

TEST_CASE("standard families") {
  CHECK(complete_bipartite(2, 4).size() == 8);
  CHECK(cycle(5).size() == 5);
  CHECK(star(6).size() == 5);
  CHECK(path(1).size() == 0);
  CHECK(complete(1).size() == 0);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(path(0), std::invalid_argument);
}
