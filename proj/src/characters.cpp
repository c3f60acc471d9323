#include "dblock/characters.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "dblock/errors.hpp"

namespace dblock {

namespace {

int table_level(const Params& p) { return std::max({p.n - 1, p.m, 1}); }

int log2_exact(std::uint64_t v) { return std::countr_zero(v); }

}  // namespace

Cyc character_value(const CharacterInfo& info, const Element& a, const Params& p) {
  const int level = table_level(p);
  const std::int64_t z_step = std::int64_t{1} << (level - p.m);
  const Cyc central = Cyc::root(level, info.s * a.j * z_step);
  if (info.degree == 1) {
    const bool negative = (info.a * a.i + info.b * a.e) % 2 != 0;
    return negative ? -central : central;
  }
  if (a.e != 0) return Cyc(level);
  const std::int64_t x_step = std::int64_t{1} << (level - (p.n - 1));
  const std::int64_t e = info.t * a.i * x_step;
  return (Cyc::root(level, e) + Cyc::root(level, -e)) * central;
}

CharacterTable char_table(const Params& p) {
  p.validate();
  p.require_within_cap();
  CharacterTable table;
  table.level = table_level(p);
  table.classes = conjugacy_classes(p);
  const int full = p.n + p.m;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (std::int64_t s = 0; s < p.cyclic_order(); ++s) {
        CharacterInfo c;
        c.degree = 1;
        c.height = 0;
        c.defect = full;
        c.a = a;
        c.b = b;
        c.s = s;
        c.label = "lam(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(s) + ")";
        table.info.push_back(c);
      }
    }
  }
  for (std::int64_t t = 1; t < (std::int64_t{1} << (p.n - 2)); ++t) {
    for (std::int64_t s = 0; s < p.cyclic_order(); ++s) {
      CharacterInfo c;
      c.degree = 2;
      c.height = 1;
      c.defect = full - 1;
      c.t = t;
      c.s = s;
      c.label = "chi(" + std::to_string(t) + "," + std::to_string(s) + ")";
      table.info.push_back(c);
    }
  }
  for (const auto& c : table.info) {
    std::vector<Cyc> row;
    row.reserve(table.classes.size());
    for (const auto& cls : table.classes) row.push_back(character_value(c, cls.front(), p));
    table.values.push_back(std::move(row));
  }
  return table;
}

std::size_t CharacterTable::class_index(const Element& a, const Params& p) const {
  (void)p;
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (std::binary_search(classes[k].begin(), classes[k].end(), a)) return k;
  throw ParamError(to_string(a) + " is not an element of D");
}

std::vector<Cyc> CharacterTable::column(const Element& a, const Params& p) const {
  const auto k = class_index(a, p);
  std::vector<Cyc> col;
  for (const auto& row : values) col.push_back(row[k]);
  return col;
}

std::vector<int> CharacterTable::heights() const {
  std::vector<int> h;
  for (const auto& c : info) h.push_back(c.height);
  return h;
}

std::map<int, std::int64_t> k_per_defect(const Params& p) {
  p.validate();
  const std::int64_t cyc = std::int64_t{1} << p.m;
  return {{p.n + p.m, 4 * cyc}, {p.n + p.m - 1, cyc * ((std::int64_t{1} << (p.n - 2)) - 1)}};
}

Cyc DualGroup::value(std::size_t chi, const Element& a) const {
  return Cyc::root(level, characters.at(chi).at(q.local_index(a)));
}

DualGroup irr_abelian(const Subgroup& q, const Params& p) {
  if (!q.is_abelian(p)) throw ParamError("Irr(Q) is only built for abelian Q");
  const auto factors = abelian_invariant_factors(q.as_table(p));
  std::vector<std::uint64_t> want(factors.rbegin(), factors.rend());

  // Backtrack for g_1, .., g_r of orders want[i] with <g_1..g_i> of order prod want[..i].
  std::vector<Element> basis;
  std::function<bool(std::vector<Element>)> extend = [&](std::vector<Element> span) -> bool {
    const std::size_t i = basis.size();
    if (i == want.size()) return true;
    ElementSet have(p.group_order());
    for (const auto& h : span) have.insert(index_of(h, p));
    for (const auto& g : q.elements()) {
      if (static_cast<std::uint64_t>(element_order(g, p)) != want[i]) continue;
      bool meets = false;
      Element gk = g;
      for (std::uint64_t k = 1; k < want[i] && !meets; ++k, gk = mul(gk, g, p))
        meets = have.contains(index_of(gk, p));
      if (meets) continue;
      std::vector<Element> next;
      Element gpow = identity();
      for (std::uint64_t k = 0; k < want[i]; ++k, gpow = mul(gpow, g, p))
        for (const auto& h : span) next.push_back(mul(h, gpow, p));
      basis.push_back(g);
      if (extend(std::move(next))) return true;
      basis.pop_back();
    }
    return false;
  };
  if (!extend({identity()})) throw InternalError("no cyclic decomposition found");

  DualGroup dual;
  dual.q = q;
  dual.basis = basis;
  const std::uint64_t exponent = want.empty() ? 1 : want.front();
  dual.level = log2_exact(exponent);

  // Coordinates of every member with respect to the basis.
  std::vector<std::vector<std::uint64_t>> coords(q.order());
  std::vector<std::uint64_t> c(want.size(), 0);
  while (true) {
    Element g = identity();
    for (std::size_t i = 0; i < want.size(); ++i) g = mul(g, power(basis[i], c[i], p), p);
    coords[q.local_index(g)] = c;
    std::size_t i = 0;
    while (i < want.size() && ++c[i] == want[i]) c[i++] = 0;
    if (i == want.size()) break;
  }

  std::vector<std::uint64_t> d(want.size(), 0);
  const auto modulus = static_cast<std::int64_t>(exponent);
  while (true) {
    std::vector<std::int64_t> exps(q.order(), 0);
    for (std::size_t k = 0; k < q.order(); ++k) {
      std::int64_t e = 0;
      for (std::size_t i = 0; i < want.size(); ++i)
        e += static_cast<std::int64_t>(d[i] * coords[k][i] * (exponent / want[i]));
      exps[k] = e % modulus;
    }
    dual.characters.push_back(std::move(exps));
    std::size_t i = 0;
    while (i < want.size() && ++d[i] == want[i]) d[i++] = 0;
    if (i == want.size()) break;
  }
  return dual;
}

std::vector<DualOrbit> dual_orbits(std::span<const Automorphism> auts, const DualGroup& dual,
                                   const Params& p) {
  if (!dual.q.is_abelian(p)) throw ParamError("dual orbits need abelian Q");
  std::vector<Automorphism> group;
  if (auts.empty()) {
    group.push_back(Automorphism::identity_on(dual.q, p));
  } else {
    for (const auto& a : auts)
      if (a.domain() != dual.q.elements()) throw ParamError("automorphism is not defined on Q");
    group = generate_group(auts, p);
  }

  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (std::size_t k = 0; k < dual.size(); ++k) index.emplace(dual.characters[k], k);

  const auto act = [&](const Automorphism& alpha, std::size_t chi) {
    const auto back = alpha.inverse();
    std::vector<std::int64_t> out(dual.q.order());
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = dual.characters[chi][dual.q.local_index(back(dual.q.elements()[k]))];
    auto it = index.find(out);
    if (it == index.end()) throw InternalError("image of a character is not a character");
    return it->second;
  };

  std::vector<bool> placed(dual.size(), false);
  std::vector<DualOrbit> orbits;
  for (std::size_t chi = 0; chi < dual.size(); ++chi) {
    if (placed[chi]) continue;
    DualOrbit orbit;
    for (const auto& g : group) {
      const auto img = act(g, chi);
      if (img == chi) orbit.stabilizer.push_back(g);
      if (!placed[img]) {
        placed[img] = true;
        orbit.members.push_back(img);
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace dblock
