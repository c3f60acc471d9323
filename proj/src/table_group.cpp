#include "dblock/table_group.hpp"

#include <algorithm>
#include <bit>

#include "dblock/errors.hpp"

namespace dblock {

TableGroup::TableGroup(std::size_t order, std::vector<std::uint32_t> table)
    : order_(order), table_(std::move(table)), inverse_(order), orders_(order) {
  if (table_.size() != order_ * order_) throw ParamError("multiplication table has wrong size");
  for (std::uint32_t a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw ParamError("element 0 is not the identity");
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    std::uint32_t cur = a;
    std::uint32_t k = 1;
    while (cur != 0) {
      cur = mul(cur, a);
      ++k;
    }
    orders_[a] = k;
  }
}

bool TableGroup::is_abelian() const {
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = a + 1; b < order_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::vector<std::uint32_t> TableGroup::closure(const std::vector<std::uint32_t>& gens) const {
  std::vector<bool> in(order_, false);
  std::vector<std::uint32_t> members{0};
  in[0] = true;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (auto g : gens) {
      const auto h = mul(members[k], g);
      if (!in[h]) {
        in[h] = true;
        members.push_back(h);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::uint32_t> TableGroup::derived_subgroup() const {
  std::vector<bool> seen(order_, false);
  std::vector<std::uint32_t> comms;
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      const auto c = mul(mul(a, b), mul(inv(a), inv(b)));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return closure(comms);
}

std::vector<std::uint32_t> TableGroup::center() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < order_; ++a) {
    bool central = true;
    for (std::uint32_t b = 0; b < order_ && central; ++b) central = commute(a, b);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<std::uint32_t> TableGroup::frattini_two_group() const {
  std::vector<std::uint32_t> gens;
  for (std::uint32_t a = 0; a < order_; ++a) gens.push_back(mul(a, a));
  for (auto c : derived_subgroup()) gens.push_back(c);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(gens);
}

std::vector<std::uint32_t> TableGroup::minimal_generating_set() const {
  std::vector<std::uint32_t> by_order(order_);
  for (std::uint32_t a = 0; a < order_; ++a) by_order[a] = a;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](auto a, auto b) { return orders_[a] > orders_[b]; });
  const auto phi = frattini_two_group();
  std::vector<std::uint32_t> gens;
  auto span = phi;
  while (span.size() < order_) {
    for (auto a : by_order) {
      if (!std::binary_search(span.begin(), span.end(), a)) {
        gens.push_back(a);
        auto with = gens;
        with.insert(with.end(), phi.begin(), phi.end());
        span = closure(with);
        break;
      }
    }
  }
  return gens;
}

std::string to_string(const IsoType& t) {
  switch (t.kind) {
    case IsoType::Kind::abelian: {
      if (t.invariant_factors.empty()) return "trivial";
      std::string s;
      for (auto f : t.invariant_factors) s += (s.empty() ? "C" : " x C") + std::to_string(f);
      return s;
    }
    case IsoType::Kind::dihedral_times_cyclic:
      return "D" + std::to_string(1u << t.dihedral_n) +
             (t.cyclic_m > 0 ? " x C" + std::to_string(1u << t.cyclic_m) : "");
    case IsoType::Kind::other:
      break;
  }
  return "other";
}

std::vector<std::uint64_t> abelian_invariant_factors(const TableGroup& g) {
  if (!std::has_single_bit(g.order())) throw ParamError("not a 2-group");
  // layer[k] = log2 |{a : a^{2^k} = 1}|; the number of cyclic factors of
  // order >= 2^k is layer[k] - layer[k-1].
  std::vector<int> layer{0};
  for (int k = 1;; ++k) {
    std::size_t count = 0;
    for (std::uint32_t a = 0; a < g.order(); ++a)
      if ((std::uint64_t{1} << k) % g.element_order(a) == 0) ++count;
    layer.push_back(std::countr_zero(count));
    if (count == g.order()) break;
  }
  std::vector<std::uint64_t> factors;
  const int top = static_cast<int>(layer.size()) - 1;
  for (int k = 1; k <= top; ++k) {
    const int at_least_k = layer[k] - layer[k - 1];
    const int at_least_next = k < top ? layer[k + 1] - layer[k] : 0;
    for (int c = 0; c < at_least_k - at_least_next; ++c) factors.push_back(std::uint64_t{1} << k);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

namespace {

bool match_dihedral_times_cyclic(const TableGroup& g, int dn, int cm) {
  const std::uint32_t rot = 1u << (dn - 1);
  const std::uint32_t cyc = 1u << cm;
  const auto centre = g.center();
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    if (g.element_order(a) != rot) continue;
    const auto ca = g.closure({a});
    for (auto c : centre) {
      if (g.element_order(c) != cyc) continue;
      const auto cc = g.closure({c});
      std::vector<std::uint32_t> meet;
      std::set_intersection(ca.begin(), ca.end(), cc.begin(), cc.end(), std::back_inserter(meet));
      if (meet.size() != 1) continue;
      const auto ac = g.closure({a, c});
      for (std::uint32_t b = 0; b < g.order(); ++b) {
        if (g.element_order(b) != 2 || std::binary_search(ac.begin(), ac.end(), b)) continue;
        if (g.mul(g.mul(b, a), g.inv(b)) == g.inv(a)) return true;
      }
    }
  }
  return false;
}

}  // namespace

IsoType iso_type(const TableGroup& g) {
  IsoType t;
  if (g.is_abelian()) {
    t.kind = IsoType::Kind::abelian;
    t.invariant_factors = abelian_invariant_factors(g);
    return t;
  }
  if (!std::has_single_bit(g.order())) return t;
  // D_{2^a} x C_{2^b} has derived subgroup of order 2^{a-2}.
  const int dn = std::countr_zero(g.derived_subgroup().size()) + 2;
  const int cm = std::countr_zero(g.order()) - dn;
  if (dn >= 3 && cm >= 0 && match_dihedral_times_cyclic(g, dn, cm)) {
    t.kind = IsoType::Kind::dihedral_times_cyclic;
    t.dihedral_n = dn;
    t.cyclic_m = cm;
  }
  return t;
}

}  // namespace dblock
