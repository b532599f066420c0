#include "kpath/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kpath::oracle {

namespace {

bool dfs_directed(const Digraph& g, int v, int remaining, std::vector<bool>& visited,
                  std::vector<int>& path) {
  path.push_back(v);
  if (remaining == 1) return true;
  visited[static_cast<std::size_t>(v)] = true;
  for (int w : g.out[static_cast<std::size_t>(v)]) {
    if (visited[static_cast<std::size_t>(w)]) continue;
    if (dfs_directed(g, w, remaining - 1, visited, path)) return true;
  }
  visited[static_cast<std::size_t>(v)] = false;
  path.pop_back();
  return false;
}

bool dfs_undirected(const Ugraph& g, int v, int remaining_edges, std::vector<bool>& visited,
                    std::vector<int>& path) {
  path.push_back(v);
  if (remaining_edges == 0) return true;
  visited[static_cast<std::size_t>(v)] = true;
  for (const auto& [w, e] : g.adj[static_cast<std::size_t>(v)]) {
    (void)e;
    if (visited[static_cast<std::size_t>(w)]) continue;
    if (dfs_undirected(g, w, remaining_edges - 1, visited, path)) return true;
  }
  visited[static_cast<std::size_t>(v)] = false;
  path.pop_back();
  return false;
}

}  // namespace

std::optional<PathWitness> dfs_kpath_directed(const Digraph& g, int k_vertices) {
  if (k_vertices < 1) throw std::invalid_argument("dfs oracle: k must be >= 1");
  if (k_vertices > g.n) return std::nullopt;
  std::vector<bool> visited(static_cast<std::size_t>(g.n), false);
  std::vector<int> path;
  for (int start = 0; start < g.n; ++start) {
    if (dfs_directed(g, start, k_vertices, visited, path)) return PathWitness{path, true};
  }
  return std::nullopt;
}

std::optional<PathWitness> dfs_kpath_undirected(const Ugraph& g, int k_edges) {
  if (k_edges < 0) throw std::invalid_argument("dfs oracle: k must be >= 0");
  if (k_edges + 1 > g.n) return std::nullopt;
  std::vector<bool> visited(static_cast<std::size_t>(g.n), false);
  std::vector<int> path;
  for (int start = 0; start < g.n; ++start) {
    if (dfs_undirected(g, start, k_edges, visited, path)) return PathWitness{path, true};
  }
  return std::nullopt;
}

void SparsePoly::add_term(const std::vector<int>& exponents, gf::Elem coeff) {
  if (exponents.size() != static_cast<std::size_t>(total_arity()))
    throw std::invalid_argument("sparse poly: exponent vector length mismatch");
  if (coeff == gf::zero) return;
  auto [it, inserted] = terms.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == gf::zero) terms.erase(it);
  }
}

int SparsePoly::group_offset(int group_idx) const {
  int offset = 0;
  for (int i = 0; i < group_idx; ++i) offset += groups[static_cast<std::size_t>(i)].arity;
  return offset;
}

int SparsePoly::total_arity() const {
  int total = 0;
  for (const auto& g : groups) total += g.arity;
  return total;
}

int SparsePoly::degree_in(int group_idx) const {
  const int offset = group_offset(group_idx);
  const int arity = groups[static_cast<std::size_t>(group_idx)].arity;
  int degree = 0;
  for (const auto& [exps, coeff] : terms) {
    (void)coeff;
    int d = 0;
    for (int i = 0; i < arity; ++i) d += exps[static_cast<std::size_t>(offset + i)];
    degree = std::max(degree, d);
  }
  return degree;
}

gf::Elem SparsePoly::eval_at(const Assignment& a) const {
  gf::Elem total{};
  for (const auto& [exps, coeff] : terms) {
    gf::Elem term = coeff;
    std::size_t pos = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      for (int i = 0; i < groups[gi].arity; ++i, ++pos) {
        for (int rep = 0; rep < exps[pos]; ++rep) term *= a.groups[gi][static_cast<std::size_t>(i)];
      }
    }
    total += term;
  }
  return total;
}

namespace {

std::vector<int> bounds_of(const SparsePoly& p) {
  std::vector<int> bounds;
  for (std::size_t i = 0; i < p.groups.size(); ++i)
    bounds.push_back(p.degree_in(static_cast<int>(i)));
  return bounds;
}

}  // namespace

SparsePolyBox::SparsePolyBox(SparsePoly poly)
    : BlackBox(poly.groups, bounds_of(poly)), poly_(std::move(poly)) {}

gf::Elem SparsePolyBox::eval_point(const Assignment& a) const { return poly_.eval_at(a); }

bool poly_has_multilinear(const SparsePoly& p, std::string_view group, int k) {
  int group_idx = -1;
  for (std::size_t i = 0; i < p.groups.size(); ++i) {
    if (p.groups[i].name == group) group_idx = static_cast<int>(i);
  }
  if (group_idx < 0) throw std::invalid_argument("sparse poly: unknown group");
  const int offset = p.group_offset(group_idx);
  const int arity = p.groups[static_cast<std::size_t>(group_idx)].arity;
  for (const auto& [exps, coeff] : p.terms) {
    (void)coeff;
    int degree = 0;
    bool multilinear = true;
    for (int i = 0; i < arity; ++i) {
      const int e = exps[static_cast<std::size_t>(offset + i)];
      if (e > 1) multilinear = false;
      degree += e;
    }
    if (multilinear && degree == k) return true;
  }
  return false;
}

SparsePoly expand_walks(const Digraph& g, int k) {
  if (k < 1) throw std::invalid_argument("expand_walks: k must be >= 1");
  double size = 1;
  for (int i = 0; i < k; ++i) size *= static_cast<double>(g.n);
  if (size > 1e6) throw std::length_error("expand_walks: n^k exceeds the 10^6 guard");

  SparsePoly poly;
  poly.groups = {VarGroup{"x", g.n}, VarGroup{"y", k * g.n}};
  std::vector<int> exps(static_cast<std::size_t>(poly.total_arity()), 0);
  std::vector<int> walk;

  std::function<void(int)> extend = [&](int v) {
    walk.push_back(v);
    const int layer = static_cast<int>(walk.size()) - 1;
    exps[static_cast<std::size_t>(v)] += 1;
    exps[static_cast<std::size_t>(g.n + layer * g.n + v)] += 1;
    if (static_cast<int>(walk.size()) == k) {
      poly.add_term(exps, gf::one);
    } else {
      for (int w : g.out[static_cast<std::size_t>(v)]) extend(w);
    }
    exps[static_cast<std::size_t>(g.n + layer * g.n + v)] -= 1;
    exps[static_cast<std::size_t>(v)] -= 1;
    walk.pop_back();
  };
  for (int start = 0; start < g.n; ++start) extend(start);
  return poly;
}

namespace {

struct LegitEnumerator {
  const Ugraph& g;
  const Partition& part;
  const LegitParams& params;
  std::vector<int> v1_index;
  std::vector<int> e2_index;
  int v1_count = 0;
  int e2_count = 0;

  LegitEnumerator(const Ugraph& g_, const Partition& part_, const LegitParams& params_)
      : g(g_), part(part_), params(params_) {
    v1_index.assign(static_cast<std::size_t>(g.n), -1);
    for (int v = 0; v < g.n; ++v) {
      if (part.in_v1[static_cast<std::size_t>(v)]) v1_index[static_cast<std::size_t>(v)] = v1_count++;
    }
    e2_index.assign(g.edges.size(), -1);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      const auto& [u, v] = g.edges[e];
      if (!part.in_v1[static_cast<std::size_t>(u)] && !part.in_v1[static_cast<std::size_t>(v)])
        e2_index[e] = e2_count++;
    }
    int maxdeg = 0;
    for (const auto& list : g.adj) maxdeg = std::max(maxdeg, static_cast<int>(list.size()));
    double size = static_cast<double>(params.k + 1);
    for (int i = 0; i < params.k; ++i) size *= std::max(1, maxdeg);
    if (size > 1e7)
      throw std::length_error("expand_legit_paths: walk count exceeds the 10^7 guard");
  }

  bool legitimate(const std::vector<int>& walk, const std::vector<int>& edge_ids) const {
    int r_cnt = 0;
    for (int v : walk) {
      if (part.in_v1[static_cast<std::size_t>(v)]) ++r_cnt;
    }
    int s_cnt = 0;
    for (int e : edge_ids) {
      if (e2_index[static_cast<std::size_t>(e)] >= 0) ++s_cnt;
    }
    if (r_cnt != params.r || s_cnt != params.s) return false;
    // Excluded turnaround: u, w, u with u in V2 and w in V1.
    for (std::size_t i = 0; i + 2 < walk.size(); ++i) {
      if (walk[i + 2] == walk[i] && !part.in_v1[static_cast<std::size_t>(walk[i])] &&
          part.in_v1[static_cast<std::size_t>(walk[i + 1])])
        return false;
    }
    return true;
  }

  // Visits every k-edge walk from v0, filtering full walks on the multiset
  // counts and the turnaround rule. No pruning.
  template <typename Sink>
  void enumerate(Sink&& sink) const {
    std::vector<int> walk{part.v0};
    std::vector<int> edge_ids;
    std::function<void()> extend = [&]() {
      if (static_cast<int>(edge_ids.size()) == params.k) {
        if (legitimate(walk, edge_ids)) sink(walk, edge_ids);
        return;
      }
      for (const auto& [w, e] : g.adj[static_cast<std::size_t>(walk.back())]) {
        walk.push_back(w);
        edge_ids.push_back(e);
        extend();
        edge_ids.pop_back();
        walk.pop_back();
      }
    };
    extend();
  }

  std::vector<int> monomial(const std::vector<int>& walk, const std::vector<int>& edge_ids) const {
    const int m = static_cast<int>(g.edges.size());
    std::vector<int> exps(static_cast<std::size_t>(m + v1_count + e2_count), 0);
    for (int e : edge_ids) {
      exps[static_cast<std::size_t>(e)] += 1;
      if (e2_index[static_cast<std::size_t>(e)] >= 0)
        exps[static_cast<std::size_t>(m + v1_count + e2_index[static_cast<std::size_t>(e)])] += 1;
    }
    for (int v : walk) {
      if (v1_index[static_cast<std::size_t>(v)] >= 0)
        exps[static_cast<std::size_t>(m + v1_index[static_cast<std::size_t>(v)])] += 1;
    }
    return exps;
  }
};

}  // namespace

SparsePoly expand_legit_paths(const Ugraph& g, const Partition& partition,
                              const LegitParams& params) {
  if (params.k < 1) throw std::invalid_argument("expand_legit_paths: k must be >= 1");
  const LegitEnumerator enumerator(g, partition, params);
  SparsePoly poly;
  poly.groups = {VarGroup{"x", static_cast<int>(g.edges.size())},
                 VarGroup{"y", enumerator.v1_count}, VarGroup{"z", enumerator.e2_count}};
  enumerator.enumerate([&](const std::vector<int>& walk, const std::vector<int>& edge_ids) {
    poly.add_term(enumerator.monomial(walk, edge_ids), gf::one);
  });
  return poly;
}

std::set<std::vector<int>> expand_legit_paths_parity(const Ugraph& g, const Partition& partition,
                                                     const LegitParams& params) {
  if (params.k < 1) throw std::invalid_argument("expand_legit_paths: k must be >= 1");
  const LegitEnumerator enumerator(g, partition, params);
  std::set<std::vector<int>> parity;
  enumerator.enumerate([&](const std::vector<int>& walk, const std::vector<int>& edge_ids) {
    auto exps = enumerator.monomial(walk, edge_ids);
    auto it = parity.find(exps);
    if (it == parity.end()) {
      parity.insert(std::move(exps));
    } else {
      parity.erase(it);
    }
  });
  return parity;
}

std::uint64_t count_partitions(int path_k, int r, int s) {
  if (path_k < 1 || path_k > 20)
    throw std::invalid_argument("count_partitions: path length must be in [1, 20]");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << path_k); ++mask) {
    // Canonical simple path v_0 - v_1 - ... - v_k; bit i-1 puts v_i in V1.
    int in_v1 = 1;
    int e2 = 0;
    bool prev_in_v1 = true;
    for (int i = 1; i <= path_k; ++i) {
      const bool cur_in_v1 = ((mask >> (i - 1)) & 1) != 0;
      if (cur_in_v1) ++in_v1;
      if (!cur_in_v1 && !prev_in_v1) ++e2;
      prev_in_v1 = cur_in_v1;
    }
    if (in_v1 == r && e2 == s) ++count;
  }
  return count;
}

}  // namespace kpath::oracle
