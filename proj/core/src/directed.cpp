#include "kpath/directed.hpp"

#include <algorithm>
#include <stdexcept>

namespace kpath {

Digraph make_digraph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("digraph: negative vertex count");
  Digraph g;
  g.n = n;
  g.out.resize(static_cast<std::size_t>(n));
  g.in.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("digraph: edge endpoint out of range");
    g.out[static_cast<std::size_t>(u)].push_back(v);
    g.in[static_cast<std::size_t>(v)].push_back(u);
  }
  auto canonicalize = [](std::vector<std::vector<int>>& adj) {
    for (auto& list : adj) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  };
  canonicalize(g.out);
  canonicalize(g.in);
  return g;
}

PgEvaluator::PgEvaluator(Digraph graph, int k)
    : BlackBox({VarGroup{"x", graph.n}, VarGroup{"y", k * graph.n}}, {k, k}),
      graph_(std::move(graph)),
      k_(k) {
  if (k < 1) throw std::invalid_argument("walk polynomial: k must be >= 1");
}

gf::Elem PgEvaluator::eval_point(const Assignment& a) const {
  const auto& x = a.groups[0];
  const auto& y = a.groups[1];
  const std::size_t n = static_cast<std::size_t>(graph_.n);

  // One layer per walk vertex; layer m = 1 sits at the walk start, so the
  // computed polynomial is exactly the displayed walk sum. Layer m extends
  // every walk by one edge into vertex i, hence the in-neighbor sums.
  std::vector<gf::Elem> cur(n), next(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = x[i] * y[i];
  for (int m = 2; m <= k_; ++m) {
    const std::size_t layer = static_cast<std::size_t>(m - 1) * n;
    for (std::size_t i = 0; i < n; ++i) {
      gf::Elem s{};
      for (int j : graph_.in[i]) s += cur[static_cast<std::size_t>(j)];
      next[i] = s == gf::zero ? gf::zero : x[i] * y[layer + i] * s;
    }
    cur.swap(next);
  }
  gf::Elem total{};
  for (std::size_t i = 0; i < n; ++i) total += cur[i];
  return total;
}

Verdict directed_kpath(const Digraph& g, int k, const TestParams& params) {
  if (k < 1) throw std::invalid_argument("directed_kpath: k must be >= 1");
  if (k > g.n) return Verdict{Answer::kNo, std::nullopt, 0.0, 0};  // pigeonhole
  if (k == 1) return Verdict{Answer::kYes, 0, 0.0, 0};
  const PgEvaluator bb(g, k);
  return has_multilinear(bb, "x", k, params);
}

}  // namespace kpath
