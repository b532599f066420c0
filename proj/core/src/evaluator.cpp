#include "kpath/evaluator.hpp"

#include <stdexcept>
#include <unordered_set>

namespace kpath {

BlackBox::BlackBox(std::vector<VarGroup> groups, std::vector<int> degree_bounds)
    : groups_(std::move(groups)), degree_bounds_(std::move(degree_bounds)) {
  if (groups_.size() != degree_bounds_.size())
    throw std::invalid_argument("black box: one degree bound per group required");
  std::unordered_set<std::string_view> seen;
  for (const auto& g : groups_) {
    if (g.arity < 0) throw std::invalid_argument("black box: negative arity");
    if (!seen.insert(g.name).second)
      throw std::invalid_argument("black box: duplicate group name '" + g.name + "'");
  }
  for (int d : degree_bounds_) {
    if (d < 0) throw std::invalid_argument("black box: negative degree bound");
  }
}

int BlackBox::group_index(std::string_view name) const {
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (groups_[i].name == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("black box: unknown group '" + std::string(name) + "'");
}

void BlackBox::check_shape(const Assignment& a) const {
  if (a.groups.size() != groups_.size())
    throw std::invalid_argument("assignment: group count mismatch");
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (a.groups[i].size() != static_cast<std::size_t>(groups_[i].arity))
      throw std::invalid_argument("assignment: arity mismatch for group '" + groups_[i].name + "'");
  }
}

Assignment BlackBox::zero_assignment() const {
  Assignment a;
  a.groups.reserve(groups_.size());
  for (const auto& g : groups_) a.groups.emplace_back(static_cast<std::size_t>(g.arity));
  return a;
}

int total_degree_bound(const BlackBox& bb, std::span<const std::string> tested_groups) {
  std::unordered_set<std::string_view> seen;
  for (const auto& name : tested_groups) {
    bb.group_index(name);  // existence check
    if (!seen.insert(name).second)
      throw std::invalid_argument("total_degree_bound: repeated group '" + name + "'");
  }
  int total = 0;
  for (std::size_t i = 0; i < bb.groups().size(); ++i) total += bb.degree_bound(static_cast<int>(i));
  return total;
}

}  // namespace kpath
