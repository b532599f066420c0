#pragma once

#include <cstdint>

#include "kpath/directed.hpp"
#include "kpath/undirected.hpp"

namespace kpath {

// Seeded Erdos-Renyi graphs; every ordered (directed) or unordered
// (undirected) pair becomes an edge independently with probability p. The
// same seed always yields the same graph.
Digraph random_digraph(int n, double p, std::uint64_t seed);
Ugraph random_ugraph(int n, double p, std::uint64_t seed);

}  // namespace kpath
