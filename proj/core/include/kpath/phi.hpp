#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kpath/evaluator.hpp"
#include "kpath/rng.hpp"

namespace kpath {

// One tested group and the number of block vectors substituted into it.
struct GroupMult {
  std::string group;
  int multiplicity = 1;
};

// Which groups the subset-sum operator runs over, and the fixed point for
// every untested group. Tested and fixed together must cover the black box's
// groups exactly.
struct PhiSpec {
  std::vector<GroupMult> tested;
  std::vector<std::pair<std::string, std::vector<gf::Elem>>> fixed;
};

// Block vectors per tested group, in PhiSpec order: per_group[g][j] is the
// j-th block of the g-th tested group, with the group's arity.
struct PhiBlocks {
  std::vector<std::vector<std::vector<gf::Elem>>> per_group;
};

// Total multiplicity must fit a subset mask in one word.
inline constexpr int kMaxPhiMultiplicity = 62;

// Subset-sum transform of the black box evaluated at the given blocks: the
// sum over all subset combinations (one independent subset per tested group)
// of eval() at the point where each tested group carries the XOR-sum of its
// selected blocks. Issues exactly 2^M queries for total multiplicity M.
// Subsets are walked in Gray-code order so each step updates one block.
gf::Elem phi_eval(const BlackBox& bb, const PhiSpec& spec, const PhiBlocks& blocks);

// One Schwartz-Zippel sample of the transformed polynomial: every fixed
// entry and every block entry drawn uniformly from the ambient field, then
// phi_eval. Draw order is fixed: untested groups in black-box order, then
// blocks per tested group in the given order.
gf::Elem phi_random_sample(const BlackBox& bb, std::span<const GroupMult> tested,
                           SplitMix64& rng);

}  // namespace kpath
