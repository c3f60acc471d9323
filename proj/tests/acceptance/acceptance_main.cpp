// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dblock/automorphisms.hpp"
#include "dblock/characters.hpp"
#include "dblock/conjectures.hpp"
#include "dblock/cyclotomic.hpp"
#include "dblock/errors.hpp"
#include "dblock/fusion.hpp"
#include "dblock/invariants.hpp"
#include "dblock/subgroups.hpp"

using namespace dblock;

namespace {

const FusionCase kCases[] = {FusionCase::aa, FusionCase::ab, FusionCase::ba, FusionCase::bb};

struct Verdict {
  bool ok = true;
  std::ostringstream why;
  void fail(const std::string& msg) {
    if (ok) why << msg;
    ok = false;
  }
};

/// (n, m) with n in 3..6, m in 0..3 and 2^{n+m} <= max_order.
std::vector<Params> grid(std::size_t max_order) {
  std::vector<Params> out;
  for (int n = 3; n <= 6; ++n)
    for (int m = 0; m <= 3; ++m)
      if ((std::size_t{1} << (n + m)) <= max_order) out.emplace_back(n, m);
  return out;
}

std::vector<std::pair<FixChoice, FixChoice>> choice_vectors(const Params& p) {
  if (p.m == 0) return {{FixChoice::z_type, FixChoice::z_type}};
  std::vector<std::pair<FixChoice, FixChoice>> out;
  for (auto a : {FixChoice::z_type, FixChoice::uz_type})
    for (auto b : {FixChoice::z_type, FixChoice::uz_type}) out.emplace_back(a, b);
  return out;
}

std::string at(const Params& p) {
  return "(n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) + ")";
}
std::string at(const Params& p, FusionCase c) { return at(p) + " case " + to_string(c); }

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

// 1
void invariant_formulas(Verdict& v) {
  for (const auto& p : grid(512)) {
    for (auto c : kCases) {
      const auto inv = block_invariants(FusionSystem(p, c));
      const std::int64_t k = pow2(p.m) * (pow2(p.n - 2) + 3);
      const std::int64_t k0 = pow2(p.m + 2);
      const std::int64_t k1 = pow2(p.m) * (pow2(p.n - 2) - 1);
      if (inv.k != k || inv.k0 != k0 || inv.k1 != k1 || inv.l != brauer_character_count(c))
        v.fail("mismatch at " + at(p, c));
    }
  }
}

// 2
void class_count(Verdict& v) {
  for (const auto& p : grid(256)) {
    const auto elems = all_elements(p);
    std::vector<bool> seen(elems.size(), false);
    std::int64_t classes = 0;
    for (const auto& a : elems) {
      if (seen[index_of(a, p)]) continue;
      ++classes;
      for (const auto& g : elems) seen[index_of(conjugate(g, a, p), p)] = true;
    }
    if (classes != pow2(p.m) * (pow2(p.n - 2) + 3)) v.fail("class count at " + at(p));
  }
}

// 3
void aut_two_group(Verdict& v) {
  for (const auto& p : grid(128)) {
    const auto r = verify_aut_two_group(p);
    if (!r.is_two_group || !std::has_single_bit(r.order))
      v.fail("|Aut(D)| = " + std::to_string(r.order) + " at " + at(p));
  }
  Params p(3, 1);
  const auto q1 = q1_subgroup(p);
  if (count_automorphisms(q1.as_table(p)) != 168) v.fail("|Aut(C2^3)| != 168");
}

// 4
void essential_candidates(Verdict& v) {
  for (const auto& p : grid(256)) {
    const auto c1 = d_class_of_subgroup(q1_subgroup(p), p);
    const auto c2 = d_class_of_subgroup(q2_subgroup(p), p);
    if (c1 == c2) v.fail("Q1 and Q2 conjugate at " + at(p));
    const std::set<std::vector<Subgroup>> want{c1, c2};
    for (auto c : kCases) {
      const auto found = essential_classes(FusionSystem(p, c));
      const std::set<std::vector<Subgroup>> got(found.begin(), found.end());
      if (found.size() != 2 || got != want) v.fail("candidates differ at " + at(p, c));
    }
  }
}

std::vector<Element> listed_reps(const Params& p, FusionCase c) {
  std::vector<Element> reps;
  for (std::int64_t j = 0; j < p.cyclic_order(); ++j) {
    for (std::int64_t i = 0; i <= pow2(p.n - 2); ++i) reps.push_back(make_element(i, 0, j, p));
    if (c == FusionCase::ab || c == FusionCase::bb) reps.push_back(make_element(0, 1, j, p));
    if (c == FusionCase::ba || c == FusionCase::bb) reps.push_back(make_element(1, 1, j, p));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

// 5
void fusion_class_counts(Verdict& v) {
  for (const auto& p : grid(512)) {
    const std::int64_t bb = pow2(p.m) * (pow2(p.n - 2) + 3);
    for (auto c : kCases) {
      const std::int64_t drop = c == FusionCase::bb ? 0 : c == FusionCase::aa ? 2 : 1;
      const std::int64_t want = bb - drop * pow2(p.m);
      for (auto [f1, f2] : choice_vectors(p)) {
        FusionSystem fs(p, c, f1, f2);
        const auto reps = subsection_representatives(fs);
        if (static_cast<std::int64_t>(reps.size()) != want) v.fail("count at " + at(p, c));
        if (f1 == FixChoice::z_type && f2 == FixChoice::z_type && reps != listed_reps(p, c))
          v.fail("representatives at " + at(p, c));
      }
    }
  }
}

// 6
void k_minus_l_recursion(Verdict& v) {
  for (const auto& p : grid(512)) {
    if (p.m < 1) continue;
    for (auto c : kCases) {
      const auto want = pow2(p.m) * (pow2(p.n - 2) + 3) - brauer_character_count(c);
      for (auto [f1, f2] : choice_vectors(p))
        if (k_minus_l(FusionSystem(p, c, f1, f2)) != want) v.fail("k - l at " + at(p, c));
    }
  }
}

// 7
void solver_behaviour(Verdict& v) {
  const auto aa = solve_height_distribution(7, 1, 3, 16, 8);
  if (aa.size() != 2) {
    v.fail("aa: " + std::to_string(aa.size()) + " solutions");
    return;
  }
  const auto& ghost = aa[0];
  const bool ghost_ok = ghost.l == 1 && ghost.k == 8 && ghost.k0 == 8 &&
                        ghost.profile == std::vector<ProfileEntry>{{0, 1, 7}, {0, 3, 1}};
  const auto& real = aa[1];
  const bool real_ok = real.l == 3 && real.k == 10 && real.k0 == 8 && real.k1() == 2;
  if (!ghost_ok || !real_ok) v.fail("aa solutions " + to_string(ghost) + " / " + to_string(real));
  const auto bounded = solve_height_distribution(7, 2, 3, 16, 8);
  if (bounded.size() != 1 || bounded[0] != real) v.fail("l >= 2 does not isolate l = 3");
  const auto ab = solve_height_distribution(8, 1, 3, 16, 8);
  if (ab.size() != 1 || ab[0].l != 2 || ab[0].k != 10 || ab[0].k0 != 8 || ab[0].k1() != 2)
    v.fail("ab not unique");
}

// 8
void olsson_equality(Verdict& v) {
  for (const auto& p : grid(512)) {
    const auto index = static_cast<std::int64_t>(p.group_order() / derived_subgroup(p).order());
    if (index != pow2(p.m + 2)) v.fail("|D:D'| at " + at(p));
    for (auto c : kCases)
      if (block_invariants(FusionSystem(p, c)).k0 != index) v.fail("k0 at " + at(p, c));
  }
}

// 9
void character_table_suite(Verdict& v) {
  for (const auto& p : grid(256)) {
    const auto t = char_table(p);
    const auto order = static_cast<std::int64_t>(p.group_order());
    const auto rows = t.info.size();
    const auto cols = t.classes.size();
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = a; b < rows; ++b) {
        Cyc acc;
        for (std::size_t c = 0; c < cols; ++c)
          acc += t.values[a][c] * t.values[b][c].conj() * static_cast<std::int64_t>(t.classes[c].size());
        if (acc != Cyc::integer(a == b ? order : 0)) v.fail("row orthogonality at " + at(p));
      }
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t d = c; d < cols; ++d) {
        Cyc acc;
        for (std::size_t r = 0; r < rows; ++r) acc += t.values[r][c] * t.values[r][d].conj();
        const auto cent = order / static_cast<std::int64_t>(t.classes[c].size());
        if (acc != Cyc::integer(c == d ? cent : 0)) v.fail("column orthogonality at " + at(p));
      }
    std::int64_t sum_sq = 0, k0 = 0, k1 = 0;
    for (const auto& c : t.info) {
      sum_sq += c.degree * c.degree;
      k0 += c.height == 0;
      k1 += c.height == 1;
    }
    if (sum_sq != order) v.fail("sum of squares at " + at(p));
    if (k0 != pow2(p.m + 2) || k1 != pow2(p.m) * (pow2(p.n - 2) - 1)) v.fail("heights at " + at(p));

    const auto heights = t.heights();
    const auto central = parity_check_height_zero({t.column(central_involution(p), p), 1}, heights);
    for (const auto& row : central.rows)
      if (!row.valuation_checked || !row.valuation_ok) v.fail("valuations at " + at(p));
    const int k = p.n - 1;
    if (!parity_check_height_zero({t.column(gen_x(), p), k}, heights).all_pass())
      v.fail("odd sums at " + at(p));

    GaloisColumns gcols;
    for (std::int64_t g = 1; g < pow2(k); g += 2) gcols[g] = t.column(power(gen_x(), g, p), p);
    if (norm_a0(gcols, GaloisContext{p.n + p.m}, p.n, p.m) != pow2(p.m + 2))
      v.fail("norm of a_0 at " + at(p));
    if (!symmetry_zero_check(column_decompose({gcols.at(1), k}), p.n).ok())
      v.fail("a_{2^{n-3}} at " + at(p));
  }
}

// 10
void cyclotomic_round_trips(Verdict& v) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  for (int k = 1; k <= 5; ++k) {
    const auto h = static_cast<std::int64_t>(cyclotomic_dim(k));
    std::vector<std::int64_t> reps(h);
    std::iota(reps.begin(), reps.end(), 0);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t rows = 1 + trial % 4;
      std::vector<Cyc> entries;
      for (std::size_t r = 0; r < rows; ++r) {
        std::vector<std::int64_t> c(h);
        for (auto& x : c) x = coeff(rng);
        entries.push_back(Cyc(k, c));
      }
      const auto a = column_decompose({entries, k});
      if (galois_expand(a, k, 1, reps) != entries) v.fail("decompose/expand at k=" + std::to_string(k));
      const int big = k + trial % (8 - k);
      GaloisColumns cols;
      for (std::int64_t g = 1; g == 1 || g < pow2(k); g += 2) cols[g] = galois_expand(a, k, g, reps);
      for (std::int64_t s = 0; s < h; ++s)
        if (trace_recover(cols, k, GaloisContext{big}, s) != a[s])
          v.fail("expand/trace at k=" + std::to_string(k) + ", a=" + std::to_string(big));
    }
  }
}

// 11
void alperin_weights(Verdict& v) {
  for (const auto& p : grid(512))
    for (auto c : kCases) {
      FusionSystem fs(p, c);
      if (alperin_weight_count(fs) != block_invariants(fs).l) v.fail("weights at " + at(p, c));
    }
}

// 12
void ordinary_weights(Verdict& v) {
  for (const auto& p : grid(256)) {
    for (auto c : kCases) {
      for (auto [f1, f2] : choice_vectors(p)) {
        FusionSystem fs(p, c, f1, f2);
        const auto report = owc_check(fs);
        if (!report.holds()) v.fail("sum over Q at " + at(p, c));
        std::size_t proper = 0;
        for (std::size_t i = 0; i < report.classes.size(); ++i) {
          if (report.classes[i].q.order() == p.group_order()) continue;
          ++proper;
          for (const auto& row : report.rows)
            if (row.weights[i] != 0) v.fail("w(Q,d) != 0 at " + at(p, c));
        }
        std::size_t essentials = 0;
        for (auto which : {Essential::q1, Essential::q2}) {
          if (!fs.is_essential(which)) continue;
          ++essentials;
          const auto w = owc_weight_detail(fs, fs.essential(which), p.m + 2);
          if (w.total != 0 || w.chains.size() != 2 || w.chains[0].contribution != pow2(p.m) ||
              w.chains[1].contribution != -pow2(p.m))
            v.fail("chain contributions at " + at(p, c));
        }
        if (proper != essentials) v.fail("radical classes at " + at(p, c));
      }
    }
  }
}

// 13
void gluing(Verdict& v) {
  for (const auto& p : grid(128))
    for (auto c : kCases) {
      const auto r = gluing_check(FusionSystem(p, c));
      if (!r.unique() || r.verdict != "unique solution") v.fail("gluing at " + at(p, c));
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"invariant formulas", invariant_formulas},
      {"brute-force class count", class_count},
      {"Aut(D) is a 2-group, |Aut(C2^3)| = 168", aut_two_group},
      {"essential candidates are Q1, Q2", essential_candidates},
      {"element fusion classes and representatives", fusion_class_counts},
      {"k(B) - l(B) by recursion", k_minus_l_recursion},
      {"height distribution solver", solver_behaviour},
      {"Olsson with equality", olsson_equality},
      {"character table suite", character_table_suite},
      {"cyclotomic round trips", cyclotomic_round_trips},
      {"Alperin weights equal l(B)", alperin_weights},
      {"ordinary weight conjecture", ordinary_weights},
      {"gluing problem", gluing},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.1fs)%s%s\n", v.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), secs, v.ok ? "" : ": ", v.why.str().c_str());
    std::fflush(stdout);
    failures += !v.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
