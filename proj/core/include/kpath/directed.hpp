#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kpath/evaluator.hpp"
#include "kpath/mmtest.hpp"

namespace kpath {

// Directed graph on vertices 0..n-1 with deduplicated adjacency lists in
// ascending order. Self-loops are accepted; walks through them never yield
// multilinear monomials, so they cannot flip an answer.
struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

Digraph make_digraph(int n, std::span<const std::pair<int, int>> edges);

// Black box for the walk-sum polynomial of a digraph: one monomial
// x_{i_1}...x_{i_k} y_{1,i_1}...y_{k,i_k} per directed walk i_1 -> ... -> i_k
// on k vertices. Groups: "x" of arity n (degree k) and "y" of arity k*n
// (degree k), y laid out as (layer m, vertex i) -> (m-1)*n + i.
class PgEvaluator final : public BlackBox {
 public:
  PgEvaluator(Digraph graph, int k);

  int k() const { return k_; }
  const Digraph& graph() const { return graph_; }

 protected:
  gf::Elem eval_point(const Assignment& a) const override;

 private:
  Digraph graph_;
  int k_;
};

// Simple k-path decision for digraphs; k counts vertices on the path. YES
// answers are always correct; NO answers are wrong with probability at most
// failure_bound. k > n answers NO and k = 1 answers YES (n >= 1) without
// issuing queries; otherwise the multilinear test over group "x" runs
// trials x 2^k evaluations of the walk polynomial.
Verdict directed_kpath(const Digraph& g, int k, const TestParams& params);

}  // namespace kpath
