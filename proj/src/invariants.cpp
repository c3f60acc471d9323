#include "dblock/invariants.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "dblock/characters.hpp"
#include "dblock/errors.hpp"
#include "dblock/subgroups.hpp"

namespace dblock {

std::int64_t expected_k(const Params& p) {
  return (std::int64_t{1} << p.m) * ((std::int64_t{1} << (p.n - 2)) + 3);
}
std::int64_t expected_k0(const Params& p) { return std::int64_t{1} << (p.m + 2); }
std::int64_t expected_k1(const Params& p) {
  return (std::int64_t{1} << p.m) * ((std::int64_t{1} << (p.n - 2)) - 1);
}

std::int64_t FeasibleSolution::k1() const {
  std::int64_t c = 0;
  for (const auto& e : profile)
    if (e.height == 1) c += e.count;
  return c;
}

int FeasibleSolution::max_height() const {
  int h = 0;
  for (const auto& e : profile) h = std::max(h, e.height);
  return h;
}

std::string to_string(const FeasibleSolution& s) {
  std::string out = "l=" + std::to_string(s.l) + " k=" + std::to_string(s.k) +
                    " k0=" + std::to_string(s.k0) + " k1=" + std::to_string(s.k1()) + " [";
  for (std::size_t i = 0; i < s.profile.size(); ++i) {
    const auto& e = s.profile[i];
    if (i) out += ", ";
    out += std::to_string(e.count) + " x 4^" + std::to_string(e.height) + "*" +
           std::to_string(e.odd) + "^2";
  }
  return out + "]";
}

std::int64_t l_lower_bound(const FusionSystem& fs) {
  if (fs.fusion_case() != FusionCase::aa) return 1;
  return fs.params().m == 1 ? 2 : 3;
}

std::int64_t k_minus_l(const FusionSystem& fs) {
  const auto& p = fs.params();
  if (p.m == 0) return expected_k(p) - brauer_character_count(fs.fusion_case());

  const auto split = major_split(fs);
  const auto in = [](const std::vector<Element>& v, const Element& a) {
    return std::find(v.begin(), v.end(), a) != v.end();
  };
  std::map<std::tuple<int, int, FusionCase>, std::int64_t> l_of;
  std::int64_t total = 0;
  for (const auto& u : subsection_representatives(fs)) {
    if (u == identity()) continue;
    if (!in(split.v, u) && !in(split.w, u)) {
      // Nonmajor subsections and those in U have nilpotent blocks b_u.
      total += 1;
      continue;
    }
    const auto sub = subcase_of_major(u, fs);
    const auto q = quotient_type(u, p);
    const auto key = std::make_tuple(q.n, q.m, sub);
    auto it = l_of.find(key);
    if (it == l_of.end()) {
      const FusionSystem quotient(Params(q.n, q.m, p.max_order), sub);
      it = l_of.emplace(key, block_invariants(quotient).l).first;
    }
    total += it->second;
  }
  return total;
}

std::vector<FeasibleSolution> solve_height_distribution(std::int64_t s, std::int64_t l_min,
                                                        std::int64_t l_max, std::int64_t target,
                                                        std::int64_t cap) {
  if (s < 1) throw ParamError("S must be positive");
  if (l_min < 1 || l_max < l_min) throw ParamError("empty range for l");
  if (target < 1 || cap < 1) throw ParamError("target and cap must be positive");

  struct Bump {
    ProfileEntry shape;
    std::int64_t extra;
  };
  // Raising one character from the base value (1 at height 0, 4 at height >= 1) to 4^h o^2.
  std::vector<Bump> bumps_zero;
  std::vector<Bump> bumps_high;
  for (std::int64_t o = 3; o * o <= target; o += 2) bumps_zero.push_back({{0, o, 0}, o * o - 1});
  for (int h = 1; (std::int64_t{1} << (2 * h)) <= target; ++h) {
    const std::int64_t base = std::int64_t{1} << (2 * h);
    for (std::int64_t o = 1; base * o * o <= target; o += 2) {
      if (h == 1 && o == 1) continue;
      bumps_high.push_back({{h, o, 0}, base * o * o - 4});
    }
  }

  std::vector<FeasibleSolution> out;
  for (std::int64_t l = l_min; l <= l_max; ++l) {
    const std::int64_t k = s + l;
    const std::int64_t k0_max = std::min(k, cap);
    // The minimum 4k - 3k0 only grows with l.
    if (4 * k - 3 * k0_max > target) break;
    for (std::int64_t k0 = 1; k0 <= k0_max; ++k0) {
      const std::int64_t slack = target - (4 * k - 3 * k0);
      if (slack < 0) continue;
      std::vector<ProfileEntry> chosen;
      std::function<void(std::size_t, std::int64_t, std::int64_t, std::int64_t)> dfs =
          [&](std::size_t idx, std::int64_t rest, std::int64_t free0, std::int64_t free1) {
            const std::size_t total = bumps_zero.size() + bumps_high.size();
            if (rest == 0) {
              FeasibleSolution sol{l, k, k0, chosen};
              if (free0 > 0) sol.profile.push_back({0, 1, free0});
              if (free1 > 0) sol.profile.push_back({1, 1, free1});
              std::sort(sol.profile.begin(), sol.profile.end());
              out.push_back(std::move(sol));
              return;
            }
            if (idx == total) return;
            const bool zero = idx < bumps_zero.size();
            const auto& b = zero ? bumps_zero[idx] : bumps_high[idx - bumps_zero.size()];
            const std::int64_t slots = zero ? free0 : free1;
            for (std::int64_t c = 0; c <= slots && c * b.extra <= rest; ++c) {
              if (c > 0) chosen.push_back({b.shape.height, b.shape.odd, c});
              dfs(idx + 1, rest - c * b.extra, zero ? free0 - c : free0,
                  zero ? free1 : free1 - c);
              if (c > 0) chosen.pop_back();
            }
          };
      dfs(0, slack, k0, k - k0);
    }
  }
  if (out.empty()) throw DataError("no height distribution is feasible for these inputs");
  std::sort(out.begin(), out.end());
  return out;
}

BlockInvariants block_invariants(const FusionSystem& fs) {
  const auto& p = fs.params();
  BlockInvariants inv;
  inv.fusion_case = fs.fusion_case();
  if (fs.fusion_case() == FusionCase::bb) {
    // Nilpotent: the block has the character numbers of D itself.
    const auto table = char_table(p);
    for (const auto& c : table.info) {
      ++inv.k;
      if (c.height == 0) ++inv.k0;
      if (c.height == 1) ++inv.k1;
    }
    inv.l = 1;
  } else {
    const auto s = k_minus_l(fs);
    const auto target = static_cast<std::int64_t>(p.group_order());
    const auto cap = target / static_cast<std::int64_t>(derived_subgroup(p).order());
    const auto sols = solve_height_distribution(s, l_lower_bound(fs), target, target, cap);
    if (sols.size() != 1) {
      std::string msg = std::to_string(sols.size()) + " feasible height distributions:";
      for (const auto& sol : sols) msg += " {" + to_string(sol) + "}";
      throw InternalError(msg);
    }
    const auto& sol = sols.front();
    if (sol.max_height() > 1) throw InternalError("height above 1 in " + to_string(sol));
    inv.k = sol.k;
    inv.k0 = sol.k0;
    inv.k1 = sol.k1();
    inv.l = sol.l;
  }
  if (inv.k != expected_k(p) || inv.k0 != expected_k0(p) || inv.k1 != expected_k1(p) ||
      inv.k0 + inv.k1 != inv.k) {
    throw InternalError("invariants k=" + std::to_string(inv.k) + " k0=" + std::to_string(inv.k0) +
                        " k1=" + std::to_string(inv.k1) + " disagree with the closed forms");
  }
  inv.flags = conjecture_flags(inv, p);
  return inv;
}

std::map<std::string, bool> conjecture_flags(const BlockInvariants& inv, const Params& p) {
  const auto order = static_cast<std::int64_t>(p.group_order());
  const auto abel = order / static_cast<std::int64_t>(derived_subgroup(p).order());
  std::map<std::string, bool> flags;
  flags["brauer_kB"] = inv.k <= order;
  flags["olsson"] = inv.k0 <= abel;
  flags["height_zero_direction"] = inv.k != inv.k0;
  flags["alperin_mckay"] = inv.k0 == abel;
  flags["eaton_extremes"] = flags["brauer_kB"] && flags["olsson"];
  return flags;
}

}  // namespace dblock
