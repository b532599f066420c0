#include "kpath/undirected.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kpath {

Ugraph make_ugraph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("ugraph: negative vertex count");
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("ugraph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("ugraph: self-loop rejected");
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  Ugraph g;
  g.n = n;
  g.edges = std::move(normalized);
  g.adj.resize(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& [u, v] = g.edges[e];
    g.adj[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(e));
    g.adj[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(e));
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  return g;
}

Partition sample_partition(const Ugraph& g, int v0, SplitMix64& rng) {
  if (v0 < 0 || v0 >= g.n) throw std::invalid_argument("partition: start vertex out of range");
  Partition p;
  p.v0 = v0;
  p.in_v1.assign(static_cast<std::size_t>(g.n), false);
  p.in_v1[static_cast<std::size_t>(v0)] = true;
  for (int v = 0; v < g.n; ++v) {
    if (v == v0) continue;
    p.in_v1[static_cast<std::size_t>(v)] = (rng.next() & 1) != 0;
  }
  return p;
}

namespace {

std::vector<int> v1_list(const Partition& p) {
  std::vector<int> out;
  for (std::size_t v = 0; v < p.in_v1.size(); ++v) {
    if (p.in_v1[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<int> e2_list(const Ugraph& g, const Partition& p) {
  std::vector<int> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& [u, v] = g.edges[e];
    if (!p.in_v1[static_cast<std::size_t>(u)] && !p.in_v1[static_cast<std::size_t>(v)])
      out.push_back(static_cast<int>(e));
  }
  return out;
}

}  // namespace

FEvaluator::FEvaluator(Ugraph graph, Partition partition, LegitParams params)
    : BlackBox(
          {VarGroup{"x", static_cast<int>(graph.edges.size())},
           VarGroup{"y", static_cast<int>(v1_list(partition).size())},
           VarGroup{"z", static_cast<int>(e2_list(graph, partition).size())}},
          {params.k, params.r, params.s}),
      graph_(std::move(graph)),
      partition_(std::move(partition)),
      params_(params) {
  if (params_.k < 1) throw std::invalid_argument("walk-sum dp: k must be >= 1");
  if (params_.r < 0 || params_.r > params_.k + 1)
    throw std::invalid_argument("walk-sum dp: r out of range [0, k+1]");
  if (params_.s < 0 || params_.s > params_.k)
    throw std::invalid_argument("walk-sum dp: s out of range [0, k]");
  if (partition_.in_v1.size() != static_cast<std::size_t>(graph_.n))
    throw std::invalid_argument("walk-sum dp: partition size mismatch");
  if (partition_.v0 < 0 || partition_.v0 >= graph_.n ||
      !partition_.in_v1[static_cast<std::size_t>(partition_.v0)])
    throw std::invalid_argument("walk-sum dp: start vertex must lie in V1");

  v1_vertices_ = v1_list(partition_);
  e2_edges_ = e2_list(graph_, partition_);
  y_index_.assign(static_cast<std::size_t>(graph_.n), -1);
  for (std::size_t i = 0; i < v1_vertices_.size(); ++i)
    y_index_[static_cast<std::size_t>(v1_vertices_[i])] = static_cast<int>(i);
  z_index_.assign(graph_.edges.size(), -1);
  for (std::size_t i = 0; i < e2_edges_.size(); ++i)
    z_index_[static_cast<std::size_t>(e2_edges_[i])] = static_cast<int>(i);
}

gf::Elem FEvaluator::eval_point(const Assignment& a) const {
  const auto& x = a.groups[0];
  const auto& y = a.groups[1];
  const auto& z = a.groups[2];
  const std::size_t n = static_cast<std::size_t>(graph_.n);
  const int k = params_.k, r = params_.r, s = params_.s;
  const std::size_t rs = static_cast<std::size_t>(r + 1) * static_cast<std::size_t>(s + 1);

  // State tables indexed ((r' * (s+1) + s') * n + u1) * n + u2, holding the
  // sum over (r', s')-legitimate walks of length k' from v0 that end with
  // the ordered pair (u1, u2). Rolled over k'.
  const std::size_t table_size = rs * n * n;
  std::vector<gf::Elem> prev(table_size), cur(table_size);
  // Neighbor aggregates: sums[(r' * (s+1) + s') * n + u1] collects
  // prev[.., w, u1] over all neighbors w of u1.
  std::vector<gf::Elem> sums(rs * n);

  const auto slot = [s](int rp, int sp) {
    return static_cast<std::size_t>(rp) * static_cast<std::size_t>(s + 1) +
           static_cast<std::size_t>(sp);
  };
  const int v0 = partition_.v0;
  const gf::Elem yv0 = y[static_cast<std::size_t>(y_index_[static_cast<std::size_t>(v0)])];

  // Length 1: the single edge {v0, u2}.
  for (const auto& [u2, e] : graph_.adj[static_cast<std::size_t>(v0)]) {
    const gf::Elem base = x[static_cast<std::size_t>(e)] * yv0;
    if (partition_.in_v1[static_cast<std::size_t>(u2)]) {
      if (r >= 2)
        cur[(slot(2, 0) * n + static_cast<std::size_t>(v0)) * n + static_cast<std::size_t>(u2)] =
            base * y[static_cast<std::size_t>(y_index_[static_cast<std::size_t>(u2)])];
    } else {
      if (r >= 1)
        cur[(slot(1, 0) * n + static_cast<std::size_t>(v0)) * n + static_cast<std::size_t>(u2)] =
            base;
    }
  }

  for (int kp = 2; kp <= k; ++kp) {
    prev.swap(cur);
    std::fill(cur.begin(), cur.end(), gf::Elem{});
    std::fill(sums.begin(), sums.end(), gf::Elem{});
    for (std::size_t u1 = 0; u1 < n; ++u1) {
      for (const auto& [w, e] : graph_.adj[u1]) {
        (void)e;
        const std::size_t w_row = static_cast<std::size_t>(w) * n + u1;
        for (std::size_t t = 0; t < rs; ++t) sums[t * n + u1] += prev[t * n * n + w_row];
      }
    }
    for (std::size_t u1 = 0; u1 < n; ++u1) {
      const bool u1_v1 = partition_.in_v1[u1];
      for (const auto& [u2, e] : graph_.adj[u1]) {
        const gf::Elem xe = x[static_cast<std::size_t>(e)];
        const std::size_t cell = u1 * n + static_cast<std::size_t>(u2);
        if (partition_.in_v1[static_cast<std::size_t>(u2)]) {
          // Walk gains a V1 vertex.
          const gf::Elem xy =
              xe * y[static_cast<std::size_t>(y_index_[static_cast<std::size_t>(u2)])];
          for (int rp = 1; rp <= r; ++rp)
            for (int sp = 0; sp <= s; ++sp) {
              const gf::Elem sum = sums[slot(rp - 1, sp) * n + u1];
              if (sum != gf::zero) cur[slot(rp, sp) * n * n + cell] = xy * sum;
            }
        } else if (!u1_v1) {
          // Edge lies inside V2.
          const gf::Elem xz =
              xe * z[static_cast<std::size_t>(z_index_[static_cast<std::size_t>(e)])];
          for (int rp = 0; rp <= r; ++rp)
            for (int sp = 1; sp <= s; ++sp) {
              const gf::Elem sum = sums[slot(rp, sp - 1) * n + u1];
              if (sum != gf::zero) cur[slot(rp, sp) * n * n + cell] = xz * sum;
            }
        } else {
          // u1 in V1, u2 in V2: the immediate backtrack w = u2 would form
          // the excluded V2-V1-V2 turnaround, so its term is removed (adding
          // it back, characteristic 2).
          const std::size_t u2_row = static_cast<std::size_t>(u2) * n + u1;
          for (std::size_t t = 0; t < rs; ++t) {
            const gf::Elem sum = sums[t * n + u1] + prev[t * n * n + u2_row];
            if (sum != gf::zero) cur[t * n * n + cell] = xe * sum;
          }
        }
      }
    }
  }

  gf::Elem total{};
  const std::size_t target = slot(r, s) * n * n;
  for (std::size_t cell = 0; cell < n * n; ++cell) total += cur[target + cell];
  return total;
}

namespace {

// C(n, j) with the conventions the partition-count formula needs:
// C(n, 0) = 1 for every n (negative included); zero for j < 0 or j > n.
std::uint64_t binom(int n, int j) {
  if (j == 0) return 1;
  if (j < 0 || n < 0 || j > n) return 0;
  j = std::min(j, n - j);
  std::uint64_t result = 1;
  for (int i = 1; i <= j; ++i) {
    // Exact at every step: result * (n - j + i) is divisible by i.
    result = result * static_cast<std::uint64_t>(n - j + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

bool binom_positive(int n, int j) { return j == 0 || (j > 0 && n >= j); }

double log2_binom(std::int64_t n, std::int64_t j) {
  if (j == 0) return 0.0;
  const double ln2 = std::log(2.0);
  return (std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(j) + 1.0) -
          std::lgamma(static_cast<double>(n - j) + 1.0)) /
         ln2;
}

}  // namespace

Rational legit_prob(int k, int r, int s) {
  if (k < 1 || k > 62) throw std::invalid_argument("legit_prob: k must be in [1, 62]");
  const std::uint64_t num = binom(r, k - r - s + 1) * binom(k - r, s);
  if (num == 0) return Rational{0, 1};
  const std::uint64_t den = 1ull << k;
  const std::uint64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

std::uint64_t trial_count(int k, int r, int s) {
  if (k < 1 || k > 62) throw std::invalid_argument("trial_count: k must be in [1, 62]");
  const std::uint64_t prod = binom(r, k - r - s + 1) * binom(k - r, s);
  if (prod == 0)
    throw std::invalid_argument("trial_count: zero partition probability for these (r, s)");
  const std::uint64_t numerator = 1ull << (k + 1);
  return (numerator + prod - 1) / prod;
}

std::pair<int, int> choose_rs(int k) {
  if (k < 1) throw std::invalid_argument("choose_rs: k must be >= 1");
  int r = k / 2;
  const int s = static_cast<int>((208LL * k) / 1000);
  // The floors can land on a zero binomial for tiny k; raise r to the first
  // value with a positive partition probability.
  while (r <= k + 1 && !(binom_positive(r, k - r - s + 1) && binom_positive(k - r, s))) ++r;
  if (r > k + 1) throw std::logic_error("choose_rs: no feasible r");
  return {r, s};
}

Verdict undirected_kpath(const Ugraph& g, int k, const TestParams& params, int amplification) {
  if (k < 1) throw std::invalid_argument("undirected_kpath: k must be >= 1");
  if (amplification < 1) throw std::invalid_argument("undirected_kpath: amplification must be >= 1");
  gf::set_field(params.field);
  if (k + 1 > g.n) return Verdict{Answer::kNo, std::nullopt, 0.0, 0};  // pigeonhole

  const auto [r, s] = choose_rs(k);
  const std::uint64_t reps = trial_count(k, r, s);
  const Rational p = legit_prob(k, r, s);

  const double p_val = static_cast<double>(p.num) / static_cast<double>(p.den);
  const double partition_miss = std::pow(1.0 - p_val, static_cast<double>(reps));
  const double sample_miss = sz_failure_bound(static_cast<double>(k + r + s),
                                              params.field.width, params.trials);
  const double per_rep = std::min(1.0, partition_miss + sample_miss);
  const double bound = std::pow(per_rep, static_cast<double>(amplification));

  // s = 0 admits no E2 edge on a qualifying walk, so the polynomial is free
  // of z and the z group simply stays untested (its empty subset sum).
  std::vector<GroupMult> tested{GroupMult{"y", r}};
  if (s >= 1) tested.push_back(GroupMult{"z", s});
  SplitMix64 rng(params.seed);
  std::uint64_t queries = 0;
  std::uint64_t sample_base = 0;
  for (int rep = 0; rep < amplification; ++rep) {
    for (int v0 = 0; v0 < g.n; ++v0) {
      for (std::uint64_t i = 0; i < reps; ++i) {
        const Partition part = sample_partition(g, v0, rng);
        const FEvaluator f(g, part, LegitParams{k, r, s});
        TestParams test = params;
        test.seed = rng.next();
        const Verdict v = phi_nonzero_test(f, tested, test);
        queries += v.queries_used;
        if (v.answer == Answer::kYes) {
          return Verdict{Answer::kYes, sample_base + *v.witness_trial, bound, queries};
        }
        sample_base += static_cast<std::uint64_t>(params.trials);
      }
    }
  }
  return Verdict{Answer::kNo, std::nullopt, bound, queries};
}

double cost_exponent(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("cost_exponent: k must be >= 2");
  std::int64_t r = k / 2;
  const std::int64_t s = (208LL * k) / 1000;
  auto positive = [](std::int64_t n, std::int64_t j) { return j == 0 || (j > 0 && n >= j); };
  while (!(positive(r, k - r - s + 1) && positive(k - r, s))) ++r;
  const double log_terms = log2_binom(r, k - r - s + 1) + log2_binom(k - r, s);
  return (static_cast<double>(r + s + k + 1) - log_terms) / static_cast<double>(k);
}

}  // namespace kpath
