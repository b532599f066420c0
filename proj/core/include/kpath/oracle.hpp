#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "kpath/directed.hpp"
#include "kpath/evaluator.hpp"
#include "kpath/undirected.hpp"

// Brute-force ground truth. Everything here enumerates explicitly and shares
// no traversal or monomial machinery with the evaluators it checks, so
// agreement is evidence rather than tautology.
namespace kpath::oracle {

struct PathWitness {
  std::vector<int> vertices;
  bool simple = true;
};

// Exhaustive search for a simple path on k distinct vertices.
std::optional<PathWitness> dfs_kpath_directed(const Digraph& g, int k_vertices);
// Exhaustive search for a simple path with k edges (k+1 distinct vertices).
// k = 0 is allowed and answers with a single vertex when one exists.
std::optional<PathWitness> dfs_kpath_undirected(const Ugraph& g, int k_edges);

// Explicit polynomial: exponent vectors (concatenated across groups in
// declared order) mapped to coefficients. Zero coefficients are never
// stored; adding a term twice cancels it, matching characteristic 2.
struct SparsePoly {
  std::vector<VarGroup> groups;
  std::map<std::vector<int>, gf::Elem> terms;

  void add_term(const std::vector<int>& exponents, gf::Elem coeff);
  // Term-by-term substitution, independent of any black-box path.
  gf::Elem eval_at(const Assignment& a) const;
  int group_offset(int group_idx) const;
  int total_arity() const;
  int degree_in(int group_idx) const;
};

// Adapts an explicit polynomial to the black-box interface; degree bounds
// are the polynomial's actual per-group degrees.
class SparsePolyBox final : public BlackBox {
 public:
  explicit SparsePolyBox(SparsePoly poly);
  const SparsePoly& poly() const { return poly_; }

 protected:
  gf::Elem eval_point(const Assignment& a) const override;

 private:
  SparsePoly poly_;
};

// True when some stored term is multilinear of degree exactly k within the
// named group.
bool poly_has_multilinear(const SparsePoly& p, std::string_view group, int k);

// The walk-sum polynomial of a digraph by direct enumeration of all k-vertex
// walks: groups "x" (arity n) and "y" (arity k*n, layer-major), coefficient
// one per walk. Guarded by n^k <= 10^6.
SparsePoly expand_walks(const Digraph& g, int k);

// The legitimate-walk sum for (v0, V1, V2, k, r, s) by enumerating all
// k-edge walks from v0 and filtering on the multiset counts and the
// turnaround exclusion. Groups "x" over edges, "y" over V1, "z" over E(V2).
// Pairs of equal monomials cancel. Guarded by (k+1) * maxdeg^k <= 10^7.
SparsePoly expand_legit_paths(const Ugraph& g, const Partition& partition,
                              const LegitParams& params);

// Parity-only variant: the set of surviving exponent vectors under XOR
// membership toggling. Must list exactly the terms of expand_legit_paths.
std::set<std::vector<int>> expand_legit_paths_parity(const Ugraph& g,
                                                     const Partition& partition,
                                                     const LegitParams& params);

// Number of the 2^k partitions of a simple k-edge path's non-start vertices
// that realize the multiset counts (r, s); the start vertex is pinned to V1.
std::uint64_t count_partitions(int path_k, int r, int s);

}  // namespace kpath::oracle
