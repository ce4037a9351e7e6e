#pragma once

#include <cstddef>
#include <vector>

#include "sachs/graph.hpp"
#include "sachs/integer.hpp"

namespace sachs {

// Coefficients a_0..a_n of det(xI - A), a_i multiplying x^(n-i).
class CoeffVector {
 public:
  CoeffVector() = default;
  explicit CoeffVector(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

  Integer operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const { return coeffs_.size(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  std::vector<Integer> coeffs_;
};

// Number of r-edge matchings.
Integer matching_count(const Graph& g, int r);
// C(m,2) - sum_v C(d(v),2).
Integer two_matching_closed_form(const Graph& g);
Integer triangle_count(const Graph& g);
// Number of 4-cycle subgraphs, via the codegree sum over vertex pairs.
Integer quadrangle_count(const Graph& g);
// Pairs of distinct edges sharing an endpoint.
Integer p3_count(const Graph& g);
// m_2 - 2q.
Integer a4_combinatorial(const Graph& g);

// Signed weighted count over i-vertex subgraphs whose components are single
// edges or cycles: each contributes (-1)^components * 2^cycles.
Integer sachs_coefficient(const Graph& g, int i);

// Exact characteristic polynomial by the trace recurrence; n <= 20.
CoeffVector char_poly(const Graph& g);

// a_0 = 1, a_1 = 0, a_2 = -edges, a_3 = -2 * triangles.
bool satisfies_low_order_identities(const CoeffVector& p, const Graph& g);

}  // namespace sachs
