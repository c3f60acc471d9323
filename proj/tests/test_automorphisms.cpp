#include <gtest/gtest.h>

#include "dblock/automorphisms.hpp"
#include "dblock/errors.hpp"
#include "oracles.hpp"

using namespace dblock;

namespace {

TableGroup to_table_group(const std::vector<std::vector<std::size_t>>& t) {
  // Relabel so the identity is 0.
  const auto e = oracle::identity_of(t);
  std::vector<std::size_t> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[e]);
  std::vector<std::size_t> back(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) back[perm[k]] = k;
  std::vector<std::uint32_t> flat;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      flat.push_back(static_cast<std::uint32_t>(back[t[perm[a]][perm[b]]]));
  return TableGroup(t.size(), flat);
}

std::vector<std::vector<std::size_t>> elementary_abelian(int rank) {
  const std::size_t n = std::size_t{1} << rank;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = a ^ b;
  return t;
}

}  // namespace

TEST(Automorphisms, D8CountMatchesOracle) {
  oracle::PermModel model(3, 0);
  const auto t = oracle::table_of<oracle::Perm>(model.elements(), oracle::PermModel::compose);
  EXPECT_EQ(oracle::automorphism_count_by_permutations(t), 8u);
  EXPECT_EQ(oracle::automorphism_count_by_generators(t), 8u);
  EXPECT_EQ(count_automorphisms(to_table_group(t)), 8u);
  EXPECT_EQ(count_automorphisms(whole_group(Params(3, 0)).as_table(Params(3, 0))), 8u);
}

TEST(Automorphisms, ElementaryAbelianCounts) {
  const auto v4 = elementary_abelian(2);
  EXPECT_EQ(oracle::automorphism_count_by_permutations(v4), 6u);
  EXPECT_EQ(count_automorphisms(to_table_group(v4)), 6u);
  const auto v8 = elementary_abelian(3);
  EXPECT_EQ(oracle::automorphism_count_by_permutations(v8), 168u);
  EXPECT_EQ(oracle::automorphism_count_by_generators(v4), 6u);
  EXPECT_EQ(oracle::automorphism_count_by_generators(v8), 168u);
  EXPECT_EQ(count_automorphisms(to_table_group(v8)), 168u);
}

TEST(Automorphisms, OrderSixteenCountsMatchOracle) {
  for (auto [n, m] : {std::pair{4, 0}, std::pair{3, 1}}) {
    oracle::PermModel model(n, m);
    const auto t = oracle::table_of<oracle::Perm>(model.elements(), oracle::PermModel::compose);
    Params p(n, m);
    const auto want = oracle::automorphism_count_by_generators(t);
    EXPECT_EQ(count_automorphisms(whole_group(p).as_table(p)), want);
    EXPECT_EQ(verify_aut_two_group(p).order, want);
  }
}

TEST(Automorphisms, AutDIsTwoGroupSmall) {
  for (auto [n, m] : {std::pair{3, 0}, std::pair{3, 1}, std::pair{4, 1}, std::pair{3, 3}}) {
    const auto r = verify_aut_two_group(Params(n, m));
    EXPECT_TRUE(r.is_two_group) << n << "," << m << " |Aut| = " << r.order;
  }
}

TEST(Automorphisms, EssentialAutomizerOrders) {
  Params p(3, 1);
  // Aut(C2^3) = GL(3,2).
  EXPECT_EQ(automorphism_group(q1_subgroup(p), p, 64).size(), 168u);
  Params p2(4, 2);
  EXPECT_THROW(automorphism_group(whole_group(p2), p2, 32), CapExceeded);
}

TEST(Automorphisms, OrderThreeMaps) {
  for (auto [n, m] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 1}}) {
    Params p(n, m);
    const auto u = central_involution(p);
    for (auto which : {Essential::q1, Essential::q2}) {
      const Element t = which == Essential::q1 ? gen_y() : make_element(1, 1, 0, p);
      for (auto fix : {FixChoice::z_type, FixChoice::uz_type}) {
        const auto a = order3_automorphism(which, fix, p);
        EXPECT_EQ(a.order(), 3);
        EXPECT_EQ(a(u), t);
        EXPECT_EQ(a(t), mul(u, t, p));
        EXPECT_EQ(a(mul(u, t, p)), u);
        const Element fixed = fix == FixChoice::z_type ? gen_z() : mul(u, gen_z(), p);
        EXPECT_EQ(a(fixed), fixed);
        EXPECT_EQ(a.fixed_points(p), closure({fixed}, p));
        // beta alpha beta^{-1} = alpha^{-1}, beta = conjugation by x^{2^{n-3}}.
        const auto beta = Automorphism::inner(power(gen_x(), 1 << (n - 3), p),
                                              essential_subgroup(which, p), p);
        EXPECT_EQ(beta.after(a).after(beta.inverse()), a.inverse());
      }
    }
  }
}

TEST(Automorphisms, UzTypeNeedsM) {
  EXPECT_THROW(order3_automorphism(Essential::q1, FixChoice::uz_type, Params(3, 0)), ParamError);
  EXPECT_THROW(parse_fix_choice("w"), ParamError);
}

TEST(Automorphisms, RejectsNonHomomorphism) {
  Params p(3, 1);
  const auto q = q1_subgroup(p);
  const auto u = central_involution(p);
  // Swapping u and y alone breaks yz -> uz.
  auto images = q.elements();
  for (auto& a : images) {
    if (a == u) {
      a = gen_y();
    } else if (a == gen_y()) {
      a = u;
    }
  }
  EXPECT_THROW(Automorphism(q, images, p), ParamError);
  images = q.elements();
  images[1] = images[2];
  EXPECT_THROW(Automorphism(q, images, p), ParamError);
}
