#include "kpath/mmtest.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpath {

double sz_failure_bound(double total_degree, unsigned width, int trials) {
  if (total_degree < 0) throw std::invalid_argument("sz_failure_bound: negative degree");
  if (trials < 1) throw std::invalid_argument("sz_failure_bound: trials must be >= 1");
  const double per_trial = total_degree / std::ldexp(1.0, static_cast<int>(width));
  if (per_trial >= 1.0) return 1.0;
  return std::pow(per_trial, trials);
}

Verdict phi_nonzero_test(const BlackBox& bb, std::span<const GroupMult> tested,
                         const TestParams& params) {
  if (params.trials < 1) throw std::invalid_argument("phi test: trials must be >= 1");
  gf::set_field(params.field);

  std::uint64_t total_mult = 0;
  std::vector<std::string> tested_names;
  for (const auto& t : tested) {
    if (t.multiplicity < 1) throw std::invalid_argument("phi test: multiplicity must be >= 1");
    total_mult += static_cast<std::uint64_t>(t.multiplicity);
    tested_names.push_back(t.group);
  }
  if (total_mult > kMaxPhiMultiplicity)
    throw std::invalid_argument("phi test: total multiplicity exceeds " +
                                std::to_string(kMaxPhiMultiplicity));

  const int degree = total_degree_bound(bb, tested_names);
  if (std::ldexp(1.0, static_cast<int>(params.field.width)) <= static_cast<double>(degree)) {
    std::cerr << "warning: degree bound " << degree << " >= field size 2^"
              << params.field.width << "; the failure bound is vacuous\n";
  }
  const double bound = sz_failure_bound(static_cast<double>(degree), params.field.width,
                                        params.trials);
  const std::uint64_t queries_per_trial = 1ull << total_mult;

  for (int t = 0; t < params.trials; ++t) {
    SplitMix64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(t)));
    const gf::Elem sample = phi_random_sample(bb, tested, rng);
    if (sample != gf::zero) {
      return Verdict{Answer::kYes, static_cast<std::uint64_t>(t), bound,
                     (static_cast<std::uint64_t>(t) + 1) * queries_per_trial};
    }
  }
  return Verdict{Answer::kNo, std::nullopt, bound,
                 static_cast<std::uint64_t>(params.trials) * queries_per_trial};
}

Verdict has_multilinear(const BlackBox& bb, std::string_view group, int k,
                        const TestParams& params) {
  if (k < 1) throw std::invalid_argument("has_multilinear: k must be >= 1");
  if (bb.degree_bound(group) > k)
    throw std::invalid_argument(
        "has_multilinear: declared degree in tested group exceeds k; the "
        "zero/nonzero equivalence needs degree <= k");
  const GroupMult tested[] = {GroupMult{std::string(group), k}};
  return phi_nonzero_test(bb, tested, params);
}

}  // namespace kpath
