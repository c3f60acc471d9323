#include "dblock/conjectures.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "dblock/characters.hpp"
#include "dblock/errors.hpp"
#include "dblock/invariants.hpp"

namespace dblock {

namespace {

bool is_power_of_two(std::uint64_t v) { return v != 0 && std::has_single_bit(v); }

/// A small group of automorphisms of Q with a lookup from images to index.
class AutGroup {
 public:
  explicit AutGroup(std::vector<Automorphism> members) : members_(std::move(members)) {
    for (std::size_t k = 0; k < members_.size(); ++k) index_.emplace(members_[k].images(), k);
  }
  std::size_t size() const { return members_.size(); }
  const Automorphism& at(std::size_t k) const { return members_[k]; }
  std::size_t index(const Automorphism& a) const {
    auto it = index_.find(a.images());
    if (it == index_.end()) throw InternalError("automorphism outside the group");
    return it->second;
  }
  std::size_t mul(std::size_t a, std::size_t b) const {
    return index(members_[a].after(members_[b]));
  }
  std::size_t inv(std::size_t a) const { return index(members_[a].inverse()); }
  std::size_t identity() const {
    for (std::size_t k = 0; k < members_.size(); ++k)
      if (members_[k].is_identity()) return k;
    throw InternalError("group without identity");
  }
  std::vector<std::size_t> closure(std::vector<std::size_t> gens) const {
    std::vector<std::size_t> out{identity()};
    std::set<std::size_t> seen{out.front()};
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (auto g : gens) {
        const auto h = mul(out[k], g);
        if (seen.insert(h).second) out.push_back(h);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Automorphism> pick(const std::vector<std::size_t>& ids) const {
    std::vector<Automorphism> out;
    for (auto k : ids) out.push_back(members_[k]);
    return out;
  }

 private:
  std::vector<Automorphism> members_;
  std::map<std::vector<Element>, std::size_t> index_;
};

bool ids_abelian(const AutGroup& g, const std::vector<std::size_t>& ids) {
  for (auto a : ids)
    for (auto b : ids)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

// Number of 2-defect-zero characters of a stabilizer inside an automizer.
std::int64_t defect_zero_of(std::uint64_t order, bool abelian) {
  if (order == 1) return defect_zero_count(OuterGroup::trivial);
  if (is_power_of_two(order)) return 0;
  if (order == 3) return defect_zero_count(OuterGroup::c3);
  if (order == 6 && !abelian) return defect_zero_count(OuterGroup::s3);
  throw InternalError("stabilizer of order " + std::to_string(order) + " is not supported");
}

std::string outer_label(std::uint64_t order, bool abelian) {
  if (order == 1) return "1";
  if (order == 2) return "C2";
  if (order == 3) return "C3";
  if (order == 6 && !abelian) return "S3";
  return std::string(is_power_of_two(order) ? "2-group" : "group") + " of order " +
         std::to_string(order);
}

bool same_f_class(const Subgroup& a, const Subgroup& b, const FusionSystem& fs) {
  if (a.order() != b.order()) return false;
  for (const auto& c : f_conjugates(a, fs))
    if (c == b) return true;
  return false;
}

}  // namespace

std::string to_string(OuterGroup g) {
  switch (g) {
    case OuterGroup::trivial: return "1";
    case OuterGroup::c2: return "C2";
    case OuterGroup::c3: return "C3";
    case OuterGroup::s3: return "S3";
  }
  return "?";
}

OuterGroup parse_outer_group(const std::string& label) {
  if (label == "1" || label == "trivial") return OuterGroup::trivial;
  if (label == "C2") return OuterGroup::c2;
  if (label == "C3") return OuterGroup::c3;
  if (label == "S3") return OuterGroup::s3;
  throw ParamError("unsupported outer automizer '" + label + "'");
}

std::int64_t defect_zero_count(OuterGroup g) {
  switch (g) {
    case OuterGroup::trivial: return 1;
    case OuterGroup::c2: return 0;
    case OuterGroup::c3: return 3;
    case OuterGroup::s3: return 1;
  }
  throw ParamError("unsupported outer automizer");
}

std::vector<Automorphism> automizer(const Subgroup& q, const FusionSystem& fs) {
  const auto& p = fs.params();
  std::set<std::vector<Element>> seen{q.elements()};
  std::vector<std::vector<Element>> frontier{q.elements()};
  std::vector<Automorphism> out;
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    const auto cur = frontier[k];
    std::vector<std::vector<Element>> next;
    for (const auto& g : {gen_x(), gen_y()}) {
      std::vector<Element> img;
      for (const auto& a : cur) img.push_back(conjugate(g, a, p));
      next.push_back(std::move(img));
    }
    for (auto which : {Essential::q1, Essential::q2}) {
      if (!fs.is_essential(which)) continue;
      const auto& qi = fs.essential(which);
      if (!std::all_of(cur.begin(), cur.end(), [&](const auto& a) { return qi.contains(a, p); }))
        continue;
      std::vector<Element> img;
      for (const auto& a : cur) img.push_back(fs.alpha(which)(a));
      next.push_back(std::move(img));
    }
    for (auto& img : next)
      if (seen.insert(img).second) frontier.push_back(std::move(img));
  }
  for (const auto& img : frontier) {
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == q.elements()) out.emplace_back(q, img, p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OuterInfo outer_automizer(const Subgroup& q, const FusionSystem& fs) {
  const auto& p = fs.params();
  const AutGroup aut(automizer(q, fs));
  std::set<std::size_t> inner;
  for (const auto& g : q.elements()) inner.insert(aut.index(Automorphism::inner(g, q, p)));

  // Cosets of Inn(Q), labelled by their least member index.
  std::vector<std::size_t> coset_of(aut.size(), SIZE_MAX);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < aut.size(); ++a) {
    if (coset_of[a] != SIZE_MAX) continue;
    for (auto i : inner) coset_of[aut.mul(a, i)] = reps.size();
    reps.push_back(a);
  }
  const std::size_t order = reps.size();
  const auto omul = [&](std::size_t a, std::size_t b) {
    return coset_of[aut.mul(reps[a], reps[b])];
  };
  const auto oinv = [&](std::size_t a) { return coset_of[aut.inv(reps[a])]; };

  OuterInfo info;
  info.order = order;
  info.abelian = true;
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) info.abelian = info.abelian && omul(a, b) == omul(b, a);
  info.two_group = is_power_of_two(order);
  // g lies in O_2 iff its normal closure is a 2-group.
  std::size_t o2 = 0;
  for (std::size_t g = 0; g < order; ++g) {
    std::vector<std::size_t> gens;
    for (std::size_t h = 0; h < order; ++h) gens.push_back(omul(omul(h, g), oinv(h)));
    std::set<std::size_t> seen;
    std::vector<std::size_t> grp;
    const std::size_t e = coset_of[aut.identity()];
    grp.push_back(e);
    seen.insert(e);
    for (std::size_t k = 0; k < grp.size(); ++k) {
      for (auto s : gens) {
        const auto t = omul(grp[k], s);
        if (seen.insert(t).second) grp.push_back(t);
      }
    }
    if (is_power_of_two(grp.size())) ++o2;
  }
  info.radical = o2 == 1;
  info.label = outer_label(order, info.abelian);
  return info;
}

OuterGroup outer_group(const OuterInfo& info) {
  if (info.order == 1) return OuterGroup::trivial;
  if (info.order == 2) return OuterGroup::c2;
  if (info.order == 3) return OuterGroup::c3;
  if (info.order == 6 && !info.abelian) return OuterGroup::s3;
  throw ParamError("outer automizer " + info.label + " is not supported");
}

std::vector<std::vector<Subgroup>> centric_classes(const FusionSystem& fs) {
  const auto& p = fs.params();
  std::vector<std::vector<Subgroup>> out;
  std::unordered_set<ElementSet, ElementSetHash> placed;
  for (const auto& q : all_subgroups(p)) {
    if (placed.count(q.set())) continue;
    auto cls = f_conjugates(q, fs);
    for (const auto& c : cls) placed.insert(c.set());
    const bool centric = std::all_of(cls.begin(), cls.end(), [&](const auto& c) {
      return centralizer(c, p).is_subgroup_of(c);
    });
    if (centric) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<RadicalClass> centric_radical_classes(const FusionSystem& fs) {
  std::vector<RadicalClass> out;
  for (const auto& cls : centric_classes(fs)) {
    const auto info = outer_automizer(cls.front(), fs);
    if (!info.radical) continue;
    out.push_back({cls.front(), cls.size(), outer_group(info)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.q.order() > b.q.order();
  });
  return out;
}

std::int64_t alperin_weight_count(const FusionSystem& fs) {
  fs.params().require_within_cap();
  std::int64_t total = 0;
  for (const auto& c : centric_radical_classes(fs)) total += defect_zero_count(c.outer);
  return total;
}

namespace {

// w(Q, d) for Q already known to be F-centric and F-radical.
OwcWeight radical_weight(const FusionSystem& fs, const Subgroup& q, int d) {
  const auto& p = fs.params();
  OwcWeight w;
  if (q.order() == p.group_order()) {
    // Out_F(D) = 1: only the trivial chain, every character is its own orbit.
    ChainContribution c;
    c.label = "1";
    for (const auto& info : char_table(p).info)
      if (info.defect == d) ++c.orbits;
    c.weighted = c.orbits * defect_zero_count(OuterGroup::trivial);
    c.contribution = c.weighted;
    w.total = c.contribution;
    w.chains.push_back(c);
    return w;
  }
  if (!q.is_abelian(p)) throw InternalError("nonabelian radical subgroup below D");

  // Q is abelian, so Out_F(Q) = Aut_F(Q).
  const AutGroup out(automizer(q, fs));
  const auto dual = irr_abelian(q, p);
  const int log_q = std::countr_zero(static_cast<std::uint64_t>(q.order()));

  // 2-subgroups of Out_F(Q).
  std::set<std::vector<std::size_t>> two_subgroups;
  std::vector<std::vector<std::size_t>> queue{out.closure({})};
  two_subgroups.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (std::size_t g = 0; g < out.size(); ++g) {
      if (std::binary_search(queue[k].begin(), queue[k].end(), g)) continue;
      auto gens = queue[k];
      gens.push_back(g);
      auto h = out.closure(gens);
      if (is_power_of_two(h.size()) && two_subgroups.insert(h).second) queue.push_back(h);
    }
  }
  const auto conj_sub = [&](std::size_t g, const std::vector<std::size_t>& h) {
    std::vector<std::size_t> r;
    for (auto a : h) r.push_back(out.mul(out.mul(g, a), out.inv(g)));
    std::sort(r.begin(), r.end());
    return r;
  };
  const auto strictly_inside = [](const auto& a, const auto& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };

  // Chains 1 = P_0 < ... < P_r up to Out_F(Q)-conjugacy.
  using Chain = std::vector<std::vector<std::size_t>>;
  std::set<Chain> classes;
  std::function<void(Chain&)> grow = [&](Chain& ch) {
    Chain best;
    for (std::size_t g = 0; g < out.size(); ++g) {
      Chain img;
      for (const auto& h : ch) img.push_back(conj_sub(g, h));
      if (best.empty() || img < best) best = img;
    }
    classes.insert(best);
    for (const auto& h : two_subgroups) {
      if (!strictly_inside(ch.back(), h)) continue;
      ch.push_back(h);
      grow(ch);
      ch.pop_back();
    }
  };
  Chain start{out.closure({})};
  grow(start);

  for (const auto& ch : classes) {
    ChainContribution c;
    c.length = static_cast<int>(ch.size()) - 1;
    c.sign = c.length % 2 == 0 ? 1 : -1;
    c.label = "1";
    for (std::size_t i = 1; i < ch.size(); ++i) c.label += " < P" + std::to_string(ch[i].size());
    std::vector<std::size_t> stab;
    for (std::size_t g = 0; g < out.size(); ++g) {
      bool fixes = true;
      for (const auto& h : ch) fixes = fixes && conj_sub(g, h) == h;
      if (fixes) stab.push_back(g);
    }
    c.normalizer_order = stab.size();
    if (d == log_q) {
      const auto acting = out.pick(stab);
      for (const auto& orbit : dual_orbits(acting, dual, p)) {
        ++c.orbits;
        std::vector<std::size_t> ids;
        for (const auto& a : orbit.stabilizer) ids.push_back(out.index(a));
        c.weighted += defect_zero_of(ids.size(), ids_abelian(out, ids));
      }
    }
    c.contribution = c.sign * c.weighted;
    w.total += c.contribution;
    w.chains.push_back(c);
  }
  return w;
}

}  // namespace

OwcWeight owc_weight_detail(const FusionSystem& fs, const Subgroup& q, int d) {
  const auto radicals = centric_radical_classes(fs);
  const bool known = std::any_of(radicals.begin(), radicals.end(),
                                 [&](const auto& r) { return same_f_class(r.q, q, fs); });
  if (!known) throw ParamError("Q is not F-centric and F-radical");
  return radical_weight(fs, q, d);
}

std::int64_t owc_weight(const FusionSystem& fs, const Subgroup& q, int d) {
  return owc_weight_detail(fs, q, d).total;
}

bool OwcReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.match(); });
}

OwcReport owc_check(const FusionSystem& fs) {
  const auto& p = fs.params();
  p.require_within_cap();
  const auto inv = block_invariants(fs);
  OwcReport report;
  report.classes = centric_radical_classes(fs);
  for (int d = p.n + p.m; d >= 0; --d) {
    OwcRow row;
    row.defect = d;
    if (d == p.n + p.m) row.expected = inv.k0;
    if (d == p.n + p.m - 1) row.expected = inv.k1;
    for (const auto& c : report.classes) {
      row.weights.push_back(radical_weight(fs, c.q, d).total);
      row.total += row.weights.back();
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string to_string(GluingKind k) {
  switch (k) {
    case GluingKind::nonabelian_top: return "nonabelian";
    case GluingKind::essential_top: return "essential";
    case GluingKind::abelian_top: return "abelian";
  }
  return "?";
}

bool GluingReport::unique() const {
  return !classes.empty() &&
         std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.vanishes; });
}

GluingReport gluing_check(const FusionSystem& fs) {
  const auto& p = fs.params();
  p.require_within_cap();

  std::vector<Subgroup> centric;
  for (const auto& cls : centric_classes(fs))
    for (const auto& q : cls) centric.push_back(q);
  std::sort(centric.begin(), centric.end());
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  for (std::size_t k = 0; k < centric.size(); ++k) index.emplace(centric[k].set(), k);
  const auto lookup = [&](const Subgroup& s) {
    auto it = index.find(s.set());
    if (it == index.end()) throw InternalError("F-centric set is not closed under fusion");
    return it->second;
  };

  // Generators of F acting on centric subgroups: conjugation by x and y, alpha_i inside Q_i.
  std::vector<std::vector<std::size_t>> conj_perm;
  for (const auto& g : {gen_x(), gen_y()}) {
    std::vector<std::size_t> perm;
    for (const auto& q : centric) perm.push_back(lookup(conjugate_subgroup(g, q, p)));
    conj_perm.push_back(std::move(perm));
  }

  using Chain = std::vector<std::size_t>;
  std::vector<Chain> chains;
  std::function<void(Chain&)> grow = [&](Chain& ch) {
    chains.push_back(ch);
    const auto& top = centric[ch.back()];
    for (std::size_t k = ch.back() + 1; k < centric.size(); ++k) {
      if (centric[k].order() > top.order() && top.is_subgroup_of(centric[k])) {
        ch.push_back(k);
        grow(ch);
        ch.pop_back();
      }
    }
  };
  for (std::size_t k = 0; k < centric.size(); ++k) {
    Chain ch{k};
    grow(ch);
  }
  std::sort(chains.begin(), chains.end());
  std::map<Chain, std::size_t> chain_id;
  for (std::size_t k = 0; k < chains.size(); ++k) chain_id.emplace(chains[k], k);

  std::vector<std::size_t> parent(chains.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t k = 0; k < chains.size(); ++k) {
    for (const auto& perm : conj_perm) {
      Chain img;
      for (auto c : chains[k]) img.push_back(perm[c]);
      unite(k, chain_id.at(img));
    }
    for (auto which : {Essential::q1, Essential::q2}) {
      if (!fs.is_essential(which)) continue;
      if (!centric[chains[k].back()].is_subgroup_of(fs.essential(which))) continue;
      Chain img;
      for (auto c : chains[k]) img.push_back(lookup(fs.alpha(which).apply(centric[c], p)));
      unite(k, chain_id.at(img));
    }
  }

  std::vector<Subgroup> essential_conjugates;
  for (auto which : {Essential::q1, Essential::q2}) {
    if (!fs.is_essential(which)) continue;
    for (const auto& c : d_class_of_subgroup(fs.essential(which), p))
      essential_conjugates.push_back(c);
  }
  std::map<std::string, std::uint64_t> aut_order_by_type;

  GluingReport report;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const auto root = find(k);
    auto it = slot.find(root);
    if (it != slot.end()) {
      ++report.classes[it->second].class_size;
      continue;
    }
    slot.emplace(root, report.classes.size());
    ChainClass cc;
    for (auto c : chains[k]) cc.chain.push_back(centric[c]);
    cc.class_size = 1;
    const auto& top = cc.chain.back();
    const bool essential = std::find(essential_conjugates.begin(), essential_conjugates.end(),
                                     top) != essential_conjugates.end();
    if (essential) {
      cc.kind = GluingKind::essential_top;
      bool lonely = true;
      for (const auto& q : centric)
        if (q.order() < top.order() && q.is_subgroup_of(top)) lonely = false;
      const auto info = outer_automizer(top, fs);
      cc.group_order = info.order;
      cc.group_label = "Aut_F(Q) = " + info.label;
      // With no smaller F-centric member the chain is Q alone, and H^1 = H^2 = 0 for S3.
      cc.vanishes = lonely && cc.chain.size() == 1 && info.order == 6 && !info.abelian;
    } else if (!top.is_abelian(p)) {
      cc.kind = GluingKind::nonabelian_top;
      const auto type = iso_type(top, p);
      const auto key = to_string(type);
      auto found = aut_order_by_type.find(key);
      if (type.kind == IsoType::Kind::other || found == aut_order_by_type.end()) {
        const auto order = count_automorphisms(top.as_table(p));
        found = aut_order_by_type.insert_or_assign(key, order).first;
      }
      cc.group_order = found->second;
      cc.group_label = "Aut(Q), Q = " + key;
      cc.vanishes = is_power_of_two(cc.group_order);
    } else {
      cc.kind = GluingKind::abelian_top;
      const auto order = automizer(top, fs).size();
      cc.group_order = order;
      cc.group_label = "Aut_F(Q)";
      cc.vanishes = is_power_of_two(order);
    }
    report.classes.push_back(std::move(cc));
  }
  report.verdict = report.unique() ? "unique solution" : "not established";
  return report;
}

}  // namespace dblock
