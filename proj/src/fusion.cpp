#include "dblock/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "dblock/errors.hpp"

namespace dblock {

std::string to_string(FusionCase c) {
  switch (c) {
    case FusionCase::aa: return "aa";
    case FusionCase::ab: return "ab";
    case FusionCase::ba: return "ba";
    case FusionCase::bb: return "bb";
  }
  return "?";
}

FusionCase parse_fusion_case(const std::string& label) {
  if (label == "aa") return FusionCase::aa;
  if (label == "ab") return FusionCase::ab;
  if (label == "ba") return FusionCase::ba;
  if (label == "bb") return FusionCase::bb;
  throw ParamError("unknown fusion case '" + label + "' (expected aa, ab, ba or bb)");
}

int brauer_character_count(FusionCase c) {
  switch (c) {
    case FusionCase::aa: return 3;
    case FusionCase::ab:
    case FusionCase::ba: return 2;
    case FusionCase::bb: return 1;
  }
  return 0;
}

FusionCase case_from_essentials(bool q1_essential, bool q2_essential) {
  if (q1_essential && q2_essential) return FusionCase::aa;
  if (q2_essential) return FusionCase::ab;
  if (q1_essential) return FusionCase::ba;
  return FusionCase::bb;
}

FusionSystem::FusionSystem(const Params& p, FusionCase c, FixChoice fix1, FixChoice fix2)
    : params_(p), case_(c) {
  params_.validate();
  q_[0] = q1_subgroup(params_);
  q_[1] = q2_subgroup(params_);
  const bool ess1 = c == FusionCase::aa || c == FusionCase::ba;
  const bool ess2 = c == FusionCase::aa || c == FusionCase::ab;
  if (ess1) {
    fix_[0] = fix1;
    alpha_[0] = order3_automorphism(Essential::q1, fix1, params_);
  }
  if (ess2) {
    fix_[1] = fix2;
    alpha_[1] = order3_automorphism(Essential::q2, fix2, params_);
  }
}

const Automorphism& FusionSystem::alpha(Essential which) const {
  const auto& a = alpha_[slot(which)];
  if (!a) throw ParamError(to_string(which) + " is not essential in case " + to_string(case_));
  return *a;
}

std::vector<Subgroup> f_conjugates(const Subgroup& q, const FusionSystem& fs) {
  const auto& p = fs.params();
  std::unordered_set<ElementSet, ElementSetHash> seen{q.set()};
  std::vector<Subgroup> orbit{q};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    std::vector<Subgroup> next;
    for (const auto& g : {gen_x(), gen_y()}) next.push_back(conjugate_subgroup(g, orbit[k], p));
    for (auto which : {Essential::q1, Essential::q2}) {
      if (fs.is_essential(which) && orbit[k].is_subgroup_of(fs.essential(which)))
        next.push_back(fs.alpha(which).apply(orbit[k], p));
    }
    for (auto& s : next)
      if (seen.insert(s.set()).second) orbit.push_back(std::move(s));
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool is_F_centric(const Subgroup& q, const FusionSystem& fs) {
  const auto& p = fs.params();
  for (const auto& c : f_conjugates(q, fs))
    if (!centralizer(c, p).is_subgroup_of(c)) return false;
  return true;
}

namespace {

// For an abelian 2-group the odd part of |Aut| is the product of the odd parts
// of |GL(r, 2)| over the multiplicities r of its invariant factors, which is
// nontrivial exactly when some factor repeats.
bool abelian_aut_has_odd_part(const std::vector<std::uint64_t>& factors) {
  return std::adjacent_find(factors.begin(), factors.end()) != factors.end();
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::vector<Subgroup>> essential_classes(const FusionSystem& fs) {
  const auto& p = fs.params();
  const auto z_d = center(p);
  std::vector<std::vector<Subgroup>> classes;
  std::unordered_set<ElementSet, ElementSetHash> placed;
  for (const auto& q : all_subgroups(p)) {
    if (q.order() == p.group_order() || placed.count(q.set())) continue;
    // Nonabelian subgroups are D_{2^a} x C_{2^b} and have 2-group automorphism groups.
    if (!q.is_abelian(p)) continue;
    if (!centralizer(q, p).is_subgroup_of(q)) continue;
    // N_D(Q) acts trivially on Omega(Q) when Omega(Q) <= Z(D), so O_2(Aut_F(Q)) != 1.
    if (omega_and_frattini(q, p).omega.is_subgroup_of(z_d)) continue;
    if (!abelian_aut_has_odd_part(abelian_invariant_factors(q.as_table(p)))) continue;
    if (!is_F_centric(q, fs)) continue;
    auto cls = d_class_of_subgroup(q, p);
    for (const auto& c : cls) placed.insert(c.set());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

std::vector<std::vector<Element>> element_fusion_classes(const FusionSystem& fs) {
  const auto& p = fs.params();
  const auto elements = all_elements(p);
  UnionFind uf(elements.size());
  for (const auto& a : elements) {
    for (const auto& g : {gen_x(), gen_y()})
      uf.unite(index_of(a, p), index_of(conjugate(g, a, p), p));
  }
  for (auto which : {Essential::q1, Essential::q2}) {
    if (!fs.is_essential(which)) continue;
    const auto& alpha = fs.alpha(which);
    for (const auto& q : alpha.domain()) uf.unite(index_of(q, p), index_of(alpha(q), p));
  }
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> slot_of(elements.size(), SIZE_MAX);
  for (const auto& a : elements) {
    const auto root = uf.find(index_of(a, p));
    if (slot_of[root] == SIZE_MAX) {
      slot_of[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot_of[root]].push_back(a);
  }
  return classes;
}

std::vector<Element> subsection_representatives(const FusionSystem& fs) {
  std::vector<Element> reps;
  for (const auto& cls : element_fusion_classes(fs)) reps.push_back(cls.front());
  std::sort(reps.begin(), reps.end());
  return reps;
}

Subgroup fixed_points(Essential which, const FusionSystem& fs) {
  const auto& p = fs.params();
  const auto& alpha = fs.alpha(which);
  const auto& q = fs.essential(which);
  const auto n_q = normalizer(q, p);
  std::vector<Element> fixed;
  for (const auto& a : q.elements()) {
    if (alpha(a) != a) continue;
    bool ok = true;
    for (const auto& g : n_q.generators()) ok = ok && conjugate(g, a, p) == a;
    if (ok) fixed.push_back(a);
  }
  return closure(fixed, p);
}

MajorSplit major_split(const FusionSystem& fs) {
  const auto& p = fs.params();
  if (p.m < 1) throw ParamError("the U/V/W split needs m >= 1");
  const Element u = central_involution(p);
  MajorSplit split;
  for (std::uint32_t j = 0; j < p.cyclic_order() / 2; ++j) {
    split.u.push_back(mul(u, power(gen_z(), 2 * j, p), p));
    split.w.push_back(mul(u, power(gen_z(), 2 * j + 1, p), p));
  }
  for (std::uint32_t j = 1; j < p.cyclic_order(); ++j) split.v.push_back(power(gen_z(), j, p));
  return split;
}

FusionCase subcase_of_major(const Element& u, const FusionSystem& fs) {
  const auto& p = fs.params();
  if (p.m < 1) throw ParamError("major subcases are defined for m >= 1");
  if (u == identity()) throw ParamError("u must be nontrivial");
  for (const auto& g : {gen_x(), gen_y()})
    if (!commute(u, g, p)) throw ParamError(to_string(u) + " is not central");
  bool survives[2] = {false, false};
  for (auto which : {Essential::q1, Essential::q2}) {
    if (fs.is_essential(which))
      survives[which == Essential::q1 ? 0 : 1] = fixed_points(which, fs).contains(u, p);
  }
  return case_from_essentials(survives[0], survives[1]);
}

DihedralCyclicType quotient_type(const Element& u, const Params& p) {
  const auto t = iso_type(quotient_by_central(u, p));
  if (t.kind != IsoType::Kind::dihedral_times_cyclic) {
    throw DataError("D/<" + to_string(u) + "> is " + to_string(t) +
                    ", not of dihedral-times-cyclic type");
  }
  return {t.dihedral_n, t.cyclic_m};
}

}  // namespace dblock
