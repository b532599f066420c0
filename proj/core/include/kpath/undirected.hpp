#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kpath/evaluator.hpp"
#include "kpath/mmtest.hpp"
#include "kpath/rng.hpp"

namespace kpath {

// Undirected graph on vertices 0..n-1. Edges are stored once as (u, v) with
// u < v, sorted; adjacency lists carry (neighbor, edge index) pairs in
// ascending neighbor order. Self-loops are rejected.
struct Ugraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;
};

Ugraph make_ugraph(int n, std::span<const std::pair<int, int>> edges);

// Two-coloring V = V1 u V2 with the start vertex pinned to V1.
struct Partition {
  int v0 = 0;
  std::vector<bool> in_v1;
};

// Uniform partition with v0 forced into V1: one fair bit per other vertex,
// drawn in ascending vertex order.
Partition sample_partition(const Ugraph& g, int v0, SplitMix64& rng);

// k counts edges (k+1 vertices); r is the target multiset count of path
// vertices in V1, s the target multiset count of path edges inside V2.
struct LegitParams {
  int k = 1;
  int r = 0;
  int s = 0;
};

// Black box for the sum of monomials X_p Y_p Z_p over (r,s)-legitimate
// k-edge walks from v0 under the partition, computed by the four-case
// dynamic program over (length, r', s', previous vertex, last vertex).
// Groups: "x" over all edges (degree k), "y" over V1 (degree r), "z" over
// E(V2) (degree s).
class FEvaluator final : public BlackBox {
 public:
  FEvaluator(Ugraph graph, Partition partition, LegitParams params);

  const Ugraph& graph() const { return graph_; }
  const Partition& partition() const { return partition_; }
  const LegitParams& params() const { return params_; }
  // Ascending lists backing the y and z group layouts.
  const std::vector<int>& v1_vertices() const { return v1_vertices_; }
  const std::vector<int>& e2_edges() const { return e2_edges_; }

 protected:
  gf::Elem eval_point(const Assignment& a) const override;

 private:
  Ugraph graph_;
  Partition partition_;
  LegitParams params_;
  std::vector<int> v1_vertices_;  // ascending
  std::vector<int> e2_edges_;     // edge ids, ascending
  std::vector<int> y_index_;      // per vertex, -1 outside V1
  std::vector<int> z_index_;      // per edge id, -1 outside E(V2)
};

// Exact rational in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Probability that a uniform partition (start vertex forced to V1) gives a
// fixed simple k-edge path the multiset counts (r, s):
// 2^-k * C(r, k-r-s+1) * C(k-r, s), with C(n, 0) = 1 for every n (negative
// included) and C(n, j) = 0 for j < 0 or j > n >= 0. Requires k <= 62.
Rational legit_prob(int k, int r, int s);

// ceil(2^(k+1) / (C(r, k-r-s+1) * C(k-r, s))): enough partition draws that a
// fixed simple path is missed with probability at most e^-2. Throws when the
// probability is zero.
std::uint64_t trial_count(int k, int r, int s);

// (floor(0.5 k), floor(0.208 k)), with r raised to the smallest value giving
// a positive partition probability when the floors land on a zero binomial
// (only tiny k).
std::pair<int, int> choose_rs(int k);

// Simple k-path decision for undirected graphs; k counts edges. For each
// repetition and each start vertex, trial_count partitions are drawn and the
// two-group subset-sum test (multiplicities r on y, s on z, x fixed at a
// random point) runs on the walk-sum black box. YES answers are always
// correct. failure_bound composes the partition miss (1-p)^T with the
// per-test sampling miss, raised to the amplification power.
Verdict undirected_kpath(const Ugraph& g, int k, const TestParams& params,
                         int amplification);

// Base-2 growth exponent of the undirected algorithm's cost at the chosen
// (r, s): (r + s + k + 1 - log2 C(r, k-r-s+1) - log2 C(k-r, s)) / k, via
// log-gamma. Approaches log2(1.657) ~ 0.7286 as k grows.
double cost_exponent(std::int64_t k);

}  // namespace kpath
