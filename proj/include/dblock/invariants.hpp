#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dblock/fusion.hpp"
#include "dblock/group.hpp"

namespace dblock {

struct BlockInvariants {
  std::int64_t k = 0;
  std::int64_t k0 = 0;
  std::int64_t k1 = 0;
  std::int64_t l = 0;
  FusionCase fusion_case = FusionCase::bb;
  std::map<std::string, bool> flags;
};

/// One character shape: `count` characters whose value is 4^height * odd^2.
struct ProfileEntry {
  int height = 0;
  std::int64_t odd = 1;
  std::int64_t count = 0;
  auto operator<=>(const ProfileEntry&) const = default;
};

struct FeasibleSolution {
  std::int64_t l = 0;
  std::int64_t k = 0;
  std::int64_t k0 = 0;
  std::vector<ProfileEntry> profile;

  std::int64_t k1() const;
  int max_height() const;
  auto operator<=>(const FeasibleSolution&) const = default;
};

std::string to_string(const FeasibleSolution& s);

/// k(B) - l(B) summed over nontrivial subsections. For m >= 1 the major
/// subsections in V and W recurse into the quotient block on D/<u>.
std::int64_t k_minus_l(const FusionSystem& fs);

/// Known lower bound for l(B).
std::int64_t l_lower_bound(const FusionSystem& fs);

/// Every (l, k0, profile) with k = S + l, 1 <= k0 <= min(k, cap), and k values
/// 4^h o^2 (o odd, exactly k0 with h = 0) summing to `target`. Sorted.
/// Throws DataError when nothing is feasible.
std::vector<FeasibleSolution> solve_height_distribution(std::int64_t s, std::int64_t l_min,
                                                        std::int64_t l_max, std::int64_t target,
                                                        std::int64_t cap);

BlockInvariants block_invariants(const FusionSystem& fs);

std::map<std::string, bool> conjecture_flags(const BlockInvariants& inv, const Params& p);

/// Closed forms 2^m(2^{n-2}+3), 2^{m+2}, 2^m(2^{n-2}-1).
std::int64_t expected_k(const Params& p);
std::int64_t expected_k0(const Params& p);
std::int64_t expected_k1(const Params& p);

}  // namespace dblock
