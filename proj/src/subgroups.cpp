#include "dblock/subgroups.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "dblock/errors.hpp"

namespace dblock {

std::size_t ElementSet::size() const {
  std::size_t s = 0;
  for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((words_[k] & ~o.words_[k]) != 0) return false;
  return true;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ w) * 1099511628211ull;
  return h;
}

Subgroup::Subgroup(const Params& p, std::vector<Element> members, std::vector<Element> generators)
    : set_(p.group_order()), members_(std::move(members)), generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
  for (const auto& a : members_) set_.insert(index_of(a, p));
}

bool Subgroup::is_abelian(const Params& p) const {
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if (!commute(a, b, p)) return false;
  return true;
}

std::uint32_t Subgroup::local_index(const Element& a) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), a);
  if (it == members_.end() || *it != a) throw ParamError(to_string(a) + " is not in the subgroup");
  return static_cast<std::uint32_t>(it - members_.begin());
}

TableGroup Subgroup::as_table(const Params& p) const {
  const std::size_t q = order();
  std::vector<std::uint32_t> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = local_index(mul(members_[a], members_[b], p));
  return TableGroup(q, std::move(table));
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (order() != o.order()) return order() < o.order();
  return members_ < o.members_;
}

Subgroup closure(std::span<const Element> gens, const Params& p) {
  p.require_within_cap();
  ElementSet seen(p.group_order());
  std::vector<Element> members{identity()};
  seen.insert(0);
  std::vector<Element> kept;
  for (const auto& g : gens)
    if (g != identity() && std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);
  // Right multiplication by the generators reaches every word: inverses are positive powers.
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (const auto& g : kept) {
      const Element h = mul(members[k], g, p);
      const auto idx = index_of(h, p);
      if (!seen.contains(idx)) {
        seen.insert(idx);
        members.push_back(h);
      }
    }
  }
  return Subgroup(p, std::move(members), std::move(kept));
}

Subgroup closure(std::initializer_list<Element> gens, const Params& p) {
  return closure(std::span<const Element>(gens.begin(), gens.size()), p);
}

Subgroup whole_group(const Params& p) { return closure({gen_x(), gen_y(), gen_z()}, p); }
Subgroup trivial_subgroup(const Params& p) { return closure({}, p); }

Subgroup center(const Params& p) {
  const auto elements = all_elements(p);
  std::vector<Element> central;
  for (const auto& a : elements) {
    bool ok = true;
    for (const auto& g : elements) {
      if (!commute(a, g, p)) {
        ok = false;
        break;
      }
    }
    if (ok) central.push_back(a);
  }
  return closure(central, p);
}

Subgroup derived_subgroup(const Params& p) {
  const auto elements = all_elements(p);
  std::vector<Element> comms;
  ElementSet seen(p.group_order());
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      const Element c = mul(mul(a, b, p), inv(mul(b, a, p), p), p);
      if (!seen.contains(index_of(c, p))) {
        seen.insert(index_of(c, p));
        comms.push_back(c);
      }
    }
  }
  return closure(comms, p);
}

std::vector<Subgroup> all_subgroups(const Params& p) {
  const auto elements = all_elements(p);
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<Subgroup> cyclic;
  for (const auto& g : elements) {
    auto c = closure({g}, p);
    if (known.insert(c.set()).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> result = cyclic;
  // Every subgroup is a join of cyclic subgroups; extend breadth-first.
  for (std::size_t k = 0; k < result.size(); ++k) {
    for (const auto& c : cyclic) {
      if (c.is_subgroup_of(result[k])) continue;
      std::vector<Element> gens = result[k].generators();
      gens.push_back(c.generators().front());
      auto joined = closure(gens, p);
      if (known.insert(joined.set()).second) result.push_back(std::move(joined));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

Subgroup centralizer(const Subgroup& s, const Params& p) {
  std::vector<Element> out;
  for (const auto& g : all_elements(p)) {
    bool ok = true;
    for (const auto& a : s.generators()) {
      if (!commute(g, a, p)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return closure(out, p);
}

Subgroup centralizer(const Element& a, const Params& p) { return centralizer(closure({a}, p), p); }

Subgroup conjugate_subgroup(const Element& g, const Subgroup& s, const Params& p) {
  return map_subgroup(s, [&](const Element& a) { return conjugate(g, a, p); }, p);
}

Subgroup map_subgroup(const Subgroup& s, const std::function<Element(const Element&)>& f,
                      const Params& p) {
  std::vector<Element> members;
  members.reserve(s.order());
  for (const auto& a : s.elements()) members.push_back(f(a));
  std::vector<Element> gens;
  for (const auto& g : s.generators()) gens.push_back(f(g));
  return Subgroup(p, std::move(members), std::move(gens));
}

Subgroup normalizer(const Subgroup& s, const Params& p) {
  std::vector<Element> out;
  for (const auto& g : all_elements(p)) {
    bool ok = true;
    for (const auto& a : s.generators()) {
      if (!s.contains(conjugate(g, a, p), p)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return closure(out, p);
}

OmegaFrattini omega_and_frattini(const Subgroup& q, const Params& p) {
  std::vector<Element> involutions;
  std::vector<Element> phi_gens;
  for (const auto& a : q.elements()) {
    if (element_order(a, p) <= 2) involutions.push_back(a);
    phi_gens.push_back(mul(a, a, p));
    for (const auto& b : q.generators())
      phi_gens.push_back(mul(mul(a, b, p), inv(mul(b, a, p), p), p));
  }
  return {closure(involutions, p), closure(phi_gens, p)};
}

IsoType iso_type(const Subgroup& q, const Params& p) { return iso_type(q.as_table(p)); }

std::vector<Subgroup> d_class_of_subgroup(const Subgroup& q, const Params& p) {
  std::vector<Subgroup> out;
  for (const auto& g : all_elements(p)) {
    auto c = conjugate_subgroup(g, q, p);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup q1_subgroup(const Params& p) {
  return closure({central_involution(p), gen_y(), gen_z()}, p);
}

Subgroup q2_subgroup(const Params& p) {
  return closure({central_involution(p), mul(gen_x(), gen_y(), p), gen_z()}, p);
}

TableGroup quotient_by_central(const Element& u, const Params& p) {
  const auto elements = all_elements(p);
  for (const auto& g : {gen_x(), gen_y(), gen_z()})
    if (!commute(u, g, p)) throw ParamError(to_string(u) + " is not central");
  const auto cyc = closure({u}, p);
  std::vector<std::uint32_t> coset_of(elements.size(), 0);
  std::vector<Element> reps;
  std::vector<bool> assigned(elements.size(), false);
  for (const auto& a : elements) {
    if (assigned[index_of(a, p)]) continue;
    for (const auto& c : cyc.elements()) {
      const auto idx = index_of(mul(a, c, p), p);
      assigned[idx] = true;
      coset_of[idx] = static_cast<std::uint32_t>(reps.size());
    }
    reps.push_back(a);
  }
  const std::size_t q = reps.size();
  std::vector<std::uint32_t> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = coset_of[index_of(mul(reps[a], reps[b], p), p)];
  return TableGroup(q, std::move(table));
}

}  // namespace dblock
