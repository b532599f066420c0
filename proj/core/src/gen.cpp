#include "kpath/gen.hpp"

#include <stdexcept>
#include <vector>

#include "kpath/rng.hpp"

namespace kpath {

namespace {

struct EdgeCoin {
  std::uint64_t thr;
  bool always;
  SplitMix64 rng;

  EdgeCoin(double p, std::uint64_t seed)
      : thr(p >= 1.0 ? 0 : static_cast<std::uint64_t>(p * 0x1p64)), always(p >= 1.0), rng(seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random graph: p must lie in [0, 1]");
  }

  bool flip() {
    const std::uint64_t draw = rng.next();
    return always || draw < thr;
  }
};

}  // namespace

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  EdgeCoin coin(p, seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (coin.flip()) edges.emplace_back(u, v);
    }
  }
  return make_digraph(n, edges);
}

Ugraph random_ugraph(int n, double p, std::uint64_t seed) {
  EdgeCoin coin(p, seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin.flip()) edges.emplace_back(u, v);
    }
  }
  return make_ugraph(n, edges);
}

}  // namespace kpath
