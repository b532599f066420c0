#include "kpath/phi.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace kpath {

namespace {

struct BitTarget {
  int group_slot;                        // index into the assignment
  const std::vector<gf::Elem>* block;    // vector XORed in/out by this bit
};

void xor_into(std::vector<gf::Elem>& dst, const std::vector<gf::Elem>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

}  // namespace

gf::Elem phi_eval(const BlackBox& bb, const PhiSpec& spec, const PhiBlocks& blocks) {
  const auto& groups = bb.groups();
  if (blocks.per_group.size() != spec.tested.size())
    throw std::invalid_argument("phi: one block list per tested group required");

  std::vector<bool> covered(groups.size(), false);
  Assignment point = bb.zero_assignment();

  long total_mult = 0;
  std::vector<BitTarget> bits;
  for (std::size_t g = 0; g < spec.tested.size(); ++g) {
    const auto& t = spec.tested[g];
    const int slot = bb.group_index(t.group);
    if (covered[static_cast<std::size_t>(slot)])
      throw std::invalid_argument("phi: group '" + t.group + "' listed twice");
    covered[static_cast<std::size_t>(slot)] = true;
    if (t.multiplicity < 1) throw std::invalid_argument("phi: multiplicity must be >= 1");
    total_mult += t.multiplicity;
    const auto& group_blocks = blocks.per_group[g];
    if (group_blocks.size() != static_cast<std::size_t>(t.multiplicity))
      throw std::invalid_argument("phi: block count mismatch for group '" + t.group + "'");
    for (const auto& block : group_blocks) {
      if (block.size() != static_cast<std::size_t>(groups[static_cast<std::size_t>(slot)].arity))
        throw std::invalid_argument("phi: block arity mismatch for group '" + t.group + "'");
      bits.push_back(BitTarget{slot, &block});
    }
  }
  if (total_mult > kMaxPhiMultiplicity)
    throw std::invalid_argument("phi: total multiplicity exceeds " +
                                std::to_string(kMaxPhiMultiplicity));

  for (const auto& [name, values] : spec.fixed) {
    const int slot = bb.group_index(name);
    if (covered[static_cast<std::size_t>(slot)])
      throw std::invalid_argument("phi: group '" + name + "' both tested and fixed");
    covered[static_cast<std::size_t>(slot)] = true;
    if (values.size() != static_cast<std::size_t>(groups[static_cast<std::size_t>(slot)].arity))
      throw std::invalid_argument("phi: fixed arity mismatch for group '" + name + "'");
    point.groups[static_cast<std::size_t>(slot)] = values;
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (!covered[i])
      throw std::invalid_argument("phi: group '" + groups[i].name + "' neither tested nor fixed");
  }

  // Empty subsets first (tested groups all zero), then one block flipped per
  // Gray step. Field addition is order-independent, so the Gray walk sums
  // the same 2^M terms as direct enumeration.
  gf::Elem sum = bb.eval(point);
  const std::uint64_t count = 1ull << total_mult;
  for (std::uint64_t i = 1; i < count; ++i) {
    const int flip = std::countr_zero(i);
    const auto& target = bits[static_cast<std::size_t>(flip)];
    xor_into(point.groups[static_cast<std::size_t>(target.group_slot)], *target.block);
    sum += bb.eval(point);
  }
  return sum;
}

gf::Elem phi_random_sample(const BlackBox& bb, std::span<const GroupMult> tested,
                           SplitMix64& rng) {
  PhiSpec spec;
  spec.tested.assign(tested.begin(), tested.end());

  std::vector<bool> is_tested(bb.groups().size(), false);
  for (const auto& t : tested) is_tested[static_cast<std::size_t>(bb.group_index(t.group))] = true;

  for (std::size_t i = 0; i < bb.groups().size(); ++i) {
    if (is_tested[i]) continue;
    std::vector<gf::Elem> values(static_cast<std::size_t>(bb.groups()[i].arity));
    for (auto& v : values) v = gf::random_elem(rng);
    spec.fixed.emplace_back(bb.groups()[i].name, std::move(values));
  }

  PhiBlocks blocks;
  for (const auto& t : tested) {
    const int arity = bb.groups()[static_cast<std::size_t>(bb.group_index(t.group))].arity;
    std::vector<std::vector<gf::Elem>> group_blocks;
    for (int j = 0; j < t.multiplicity; ++j) {
      std::vector<gf::Elem> block(static_cast<std::size_t>(arity));
      for (auto& v : block) v = gf::random_elem(rng);
      group_blocks.push_back(std::move(block));
    }
    blocks.per_group.push_back(std::move(group_blocks));
  }

  return phi_eval(bb, spec, blocks);
}

}  // namespace kpath
