#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpath/gf2.hpp"

namespace kpath {

struct VarGroup {
  std::string name;
  int arity = 0;
};

// One evaluation point: a vector of field elements per variable group, in
// the order the black box declares its groups.
struct Assignment {
  std::vector<std::vector<gf::Elem>> groups;
};

// A polynomial accessible only through evaluation queries. Degree bounds per
// group are declared by the constructor of each concrete evaluator, never
// inferred from structure.
class BlackBox {
 public:
  virtual ~BlackBox() = default;

  const std::vector<VarGroup>& groups() const { return groups_; }
  // Index of the named group; throws std::invalid_argument if absent.
  int group_index(std::string_view name) const;
  int degree_bound(int group_idx) const { return degree_bounds_[static_cast<std::size_t>(group_idx)]; }
  int degree_bound(std::string_view name) const { return degree_bound(group_index(name)); }

  // Throws std::invalid_argument when the assignment's shape does not match
  // the declared groups.
  void check_shape(const Assignment& a) const;

  gf::Elem eval(const Assignment& a) const {
    check_shape(a);
    return eval_point(a);
  }

  // All groups present, every entry zero.
  Assignment zero_assignment() const;

 protected:
  BlackBox(std::vector<VarGroup> groups, std::vector<int> degree_bounds);

  virtual gf::Elem eval_point(const Assignment& a) const = 0;

 private:
  std::vector<VarGroup> groups_;
  std::vector<int> degree_bounds_;
};

// Upper bound on the degree of the subset-sum transform of the black box's
// polynomial when the named groups are the tested ones: substituting block
// sums preserves per-group degrees, so the bound is the sum of all declared
// group bounds. Unknown or repeated names throw.
int total_degree_bound(const BlackBox& bb, std::span<const std::string> tested_groups);

// Forwards eval() to another box while counting calls. Test instrumentation
// for query budgets.
class CountingBox final : public BlackBox {
 public:
  explicit CountingBox(const BlackBox& inner)
      : BlackBox(inner.groups(), bounds_of(inner)), inner_(inner) {}

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void reset() { calls_.store(0, std::memory_order_relaxed); }

 protected:
  gf::Elem eval_point(const Assignment& a) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_.eval(a);
  }

 private:
  static std::vector<int> bounds_of(const BlackBox& bb) {
    std::vector<int> bounds;
    for (std::size_t i = 0; i < bb.groups().size(); ++i)
      bounds.push_back(bb.degree_bound(static_cast<int>(i)));
    return bounds;
  }

  const BlackBox& inner_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace kpath
