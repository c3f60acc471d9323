#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "dblock/errors.hpp"
#include "dblock/invariants.hpp"

using namespace dblock;

namespace {

const FusionCase kCases[] = {FusionCase::aa, FusionCase::ab, FusionCase::ba, FusionCase::bb};

// Every multiset of k values 4^h o^2 summing to target, found by descending
// enumeration of the values themselves. Returned as sorted profiles.
std::set<std::vector<ProfileEntry>> square_partitions(std::int64_t k, std::int64_t target) {
  std::vector<std::int64_t> values;
  for (std::int64_t v = target; v >= 1; --v) {
    std::int64_t w = v;
    while (w % 4 == 0) w /= 4;
    if (w % 2 == 0) continue;
    const auto o = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(w))));
    if (o * o == w) values.push_back(v);
  }
  std::set<std::vector<ProfileEntry>> out;
  std::vector<std::int64_t> pick;
  std::function<void(std::size_t, std::int64_t, std::int64_t)> go = [&](std::size_t from,
                                                                         std::int64_t left,
                                                                         std::int64_t rest) {
    if (left == 0) {
      if (rest != 0) return;
      std::map<std::pair<int, std::int64_t>, std::int64_t> counts;
      for (auto v : pick) {
        int h = 0;
        while (v % 4 == 0) v /= 4, ++h;
        const auto o = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
        ++counts[{h, o}];
      }
      std::vector<ProfileEntry> prof;
      for (const auto& [key, c] : counts) prof.push_back({key.first, key.second, c});
      std::sort(prof.begin(), prof.end());
      out.insert(prof);
      return;
    }
    for (std::size_t i = from; i < values.size(); ++i) {
      if (values[i] > rest || values[i] * left < rest) continue;
      pick.push_back(values[i]);
      go(i, left - 1, rest - values[i]);
      pick.pop_back();
    }
  };
  go(0, k, target);
  return out;
}

std::int64_t k0_of(const std::vector<ProfileEntry>& prof) {
  std::int64_t c = 0;
  for (const auto& e : prof)
    if (e.height == 0) c += e.count;
  return c;
}

}  // namespace

TEST(Solver, AgreesWithPartitionOracle) {
  for (auto [s, target, cap] : {std::tuple{7, 16, 8}, std::tuple{8, 16, 8}, std::tuple{2, 8, 4},
                                std::tuple{5, 32, 8}, std::tuple{20, 64, 16}}) {
    std::set<std::tuple<std::int64_t, std::int64_t, std::vector<ProfileEntry>>> want;
    for (std::int64_t l = 1; l <= 6; ++l) {
      for (const auto& prof : square_partitions(s + l, target)) {
        const auto k0 = k0_of(prof);
        if (k0 >= 1 && k0 <= cap) want.insert({l, k0, prof});
      }
    }
    std::set<std::tuple<std::int64_t, std::int64_t, std::vector<ProfileEntry>>> got;
    try {
      for (const auto& sol : solve_height_distribution(s, 1, 6, target, cap)) {
        EXPECT_EQ(sol.k, s + sol.l);
        got.insert({sol.l, sol.k0, sol.profile});
      }
    } catch (const DataError&) {
    }
    EXPECT_EQ(got, want) << "S=" << s << " target=" << target;
  }
}

TEST(Solver, GhostSolutionInCaseAa) {
  const auto sols = solve_height_distribution(7, 1, 3, 16, 8);
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(sols[0].l, 1);
  EXPECT_EQ(sols[0].k, 8);
  EXPECT_EQ(sols[0].k0, 8);
  EXPECT_EQ(sols[0].profile, (std::vector<ProfileEntry>{{0, 1, 7}, {0, 3, 1}}));
  EXPECT_EQ(sols[1].l, 3);
  EXPECT_EQ(sols[1].k, 10);
  EXPECT_EQ(sols[1].k0, 8);
  EXPECT_EQ(sols[1].k1(), 2);

  const auto bounded = solve_height_distribution(7, 2, 3, 16, 8);
  ASSERT_EQ(bounded.size(), 1u);
  EXPECT_EQ(bounded[0], sols[1]);
}

TEST(Solver, UniqueInCaseAb) {
  const auto sols = solve_height_distribution(8, 1, 3, 16, 8);
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].l, 2);
  EXPECT_EQ(sols[0].k, 10);
  EXPECT_EQ(sols[0].k0, 8);
  EXPECT_EQ(sols[0].k1(), 2);
}

TEST(Solver, Errors) {
  EXPECT_THROW(solve_height_distribution(0, 1, 3, 16, 8), ParamError);
  EXPECT_THROW(solve_height_distribution(3, 3, 1, 16, 8), ParamError);
  EXPECT_THROW(solve_height_distribution(100, 1, 3, 16, 8), DataError);
}

TEST(KMinusL, KnownValues) {
  EXPECT_EQ(k_minus_l(FusionSystem(Params(3, 1), FusionCase::aa)), 7);
  EXPECT_EQ(k_minus_l(FusionSystem(Params(3, 1), FusionCase::ab)), 8);
  for (auto f1 : {FixChoice::z_type, FixChoice::uz_type})
    for (auto f2 : {FixChoice::z_type, FixChoice::uz_type})
      EXPECT_EQ(k_minus_l(FusionSystem(Params(4, 2), FusionCase::aa, f1, f2)), 25);
}

TEST(KMinusL, InvariantUnderChoicesAndSwap) {
  for (int n = 3; n <= 5; ++n) {
    for (int m = 1; m <= 3; ++m) {
      if (n + m > 7) continue;
      Params p(n, m);
      for (auto c : kCases) {
        const auto base = k_minus_l(FusionSystem(p, c));
        const auto l = brauer_character_count(c);
        EXPECT_EQ(base, expected_k(p) - l) << n << m << to_string(c);
        for (auto f1 : {FixChoice::z_type, FixChoice::uz_type})
          for (auto f2 : {FixChoice::z_type, FixChoice::uz_type})
            EXPECT_EQ(k_minus_l(FusionSystem(p, c, f1, f2)), base);
      }
      EXPECT_EQ(k_minus_l(FusionSystem(p, FusionCase::ab)),
                k_minus_l(FusionSystem(p, FusionCase::ba)));
    }
  }
}

TEST(LowerBound, Cases) {
  EXPECT_EQ(l_lower_bound(FusionSystem(Params(3, 2), FusionCase::aa)), 3);
  EXPECT_EQ(l_lower_bound(FusionSystem(Params(3, 1), FusionCase::aa)), 2);
  EXPECT_EQ(l_lower_bound(FusionSystem(Params(3, 0), FusionCase::aa)), 3);
  for (auto c : {FusionCase::ab, FusionCase::ba, FusionCase::bb})
    for (int m = 0; m < 3; ++m) EXPECT_EQ(l_lower_bound(FusionSystem(Params(4, m), c)), 1);
}

TEST(BlockInvariants, Examples) {
  const auto a = block_invariants(FusionSystem(Params(3, 1), FusionCase::aa));
  EXPECT_EQ(std::tuple(a.k, a.k0, a.k1, a.l), std::tuple(10, 8, 2, 3));
  const auto b = block_invariants(FusionSystem(Params(4, 0), FusionCase::ab));
  EXPECT_EQ(std::tuple(b.k, b.k0, b.k1, b.l), std::tuple(7, 4, 3, 2));
  const auto c = block_invariants(FusionSystem(Params(5, 2), FusionCase::bb));
  EXPECT_EQ(std::tuple(c.k, c.k0, c.k1, c.l), std::tuple(44, 16, 28, 1));
}

TEST(BlockInvariants, GridProperties) {
  for (int n = 3; n <= 6; ++n) {
    for (int m = 0; m <= 3; ++m) {
      if (n + m > 8) continue;
      Params p(n, m);
      for (auto c : kCases) {
        const auto inv = block_invariants(FusionSystem(p, c));
        EXPECT_EQ(inv.k0, std::int64_t{1} << (m + 2));
        EXPECT_EQ(inv.k0 + 4 * inv.k1, static_cast<std::int64_t>(p.group_order()));
        EXPECT_EQ(inv.l, brauer_character_count(c));
        for (const auto& [name, ok] : inv.flags) EXPECT_TRUE(ok) << name;
      }
    }
  }
}

TEST(Flags, Examples) {
  Params p(3, 1);
  const auto inv = block_invariants(FusionSystem(p, FusionCase::aa));
  const auto f = conjecture_flags(inv, p);
  EXPECT_EQ(f.size(), 5u);
  EXPECT_TRUE(f.at("olsson"));
  EXPECT_TRUE(f.at("alperin_mckay"));

  const auto six = block_invariants(FusionSystem(Params(6, 0), FusionCase::bb));
  EXPECT_EQ(six.k, 19);
  EXPECT_TRUE(six.flags.at("brauer_kB"));

  BlockInvariants fake = inv;
  fake.k0 = 16;
  const auto g = conjecture_flags(fake, p);
  EXPECT_FALSE(g.at("olsson"));
  EXPECT_FALSE(g.at("eaton_extremes"));
}
