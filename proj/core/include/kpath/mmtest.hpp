#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "kpath/gf2.hpp"
#include "kpath/phi.hpp"

namespace kpath {

struct TestParams {
  int trials = 3;
  std::uint64_t seed = 0;
  gf::FieldConfig field{64, 0x1B};
};

enum class Answer { kNo, kYes };

struct Verdict {
  Answer answer = Answer::kNo;
  // Index of the first nonzero sample; present exactly when answer is YES.
  std::optional<std::uint64_t> witness_trial;
  // Upper bound on Pr[NO | a qualifying monomial exists].
  double failure_bound = 1.0;
  std::uint64_t queries_used = 0;
};

// min(1, (total_degree / 2^width)^trials): the Schwartz-Zippel miss bound
// for `trials` independent samples of a nonzero polynomial.
double sz_failure_bound(double total_degree, unsigned width, int trials);

// Runs `trials` independent random samples of the subset-sum transform over
// the tested groups and answers YES on the first nonzero value. A nonzero
// sample proves the transform is not identically zero, so YES answers are
// never wrong; a NO answer is wrong with probability at most failure_bound.
// Trial t draws its stream from derive_seed(params.seed, t). Stops early on
// the first witness.
Verdict phi_nonzero_test(const BlackBox& bb, std::span<const GroupMult> tested,
                         const TestParams& params);

// Does the black box's polynomial contain a multilinear monomial of degree k
// in the named group? Requires the declared degree in that group to be at
// most k; the transform is identically zero otherwise-or-nonzero exactly when
// such a monomial exists, making the test one-sided. Runs trials x 2^k
// queries in the worst case.
Verdict has_multilinear(const BlackBox& bb, std::string_view group, int k,
                        const TestParams& params);

}  // namespace kpath
