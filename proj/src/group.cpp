#include "dblock/group.hpp"

#include <algorithm>
#include <numeric>

#include "dblock/errors.hpp"

namespace dblock {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t modulus) {
  auto r = v % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Params::Params(int n_, int m_, std::size_t cap) : n(n_), m(m_), max_order(cap) {
  validate();
}

void Params::validate() const {
  if (n < 3) {
    throw ParamError("n must be at least 3 (got n=" + std::to_string(n) +
                     "); the cases n <= 2 are not dihedral of order >= 8");
  }
  if (m < 0) throw ParamError("m must be non-negative");
  if (n + m > 30) throw ParamError("n + m too large");
}

void Params::require_within_cap() const {
  if (group_order() > max_order) {
    throw CapExceeded("|D| = " + std::to_string(group_order()) +
                      " exceeds the brute-force cap " + std::to_string(max_order));
  }
}

Element identity() { return {0, 0, 0}; }
Element gen_x() { return {1, 0, 0}; }
Element gen_y() { return {0, 1, 0}; }
Element gen_z() { return {0, 0, 1}; }

Element central_involution(const Params& p) { return {p.rotation_order() / 2, 0, 0}; }

Element make_element(std::int64_t i, std::int64_t e, std::int64_t j, const Params& p) {
  return {reduce(i, p.rotation_order()), reduce(e, 2), reduce(j, p.cyclic_order())};
}

// x^a y^b x^c y^d = x^{a + (-1)^b c} y^{b+d}; z is central.
Element mul(const Element& a, const Element& b, const Params& p) {
  const std::uint32_t rot = p.rotation_order();
  const std::uint32_t bi = a.e == 0 ? b.i : (rot - b.i) % rot;
  return {(a.i + bi) % rot, (a.e + b.e) & 1u, (a.j + b.j) % p.cyclic_order()};
}

Element inv(const Element& a, const Params& p) {
  const std::uint32_t zj = (p.cyclic_order() - a.j) % p.cyclic_order();
  if (a.e == 1) return {a.i, 1, zj};
  return {(p.rotation_order() - a.i) % p.rotation_order(), 0, zj};
}

Element power(const Element& a, std::int64_t k, const Params& p) {
  Element base = k < 0 ? inv(a, p) : a;
  std::uint64_t t = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Element acc = identity();
  while (t != 0) {
    if (t & 1u) acc = mul(acc, base, p);
    base = mul(base, base, p);
    t >>= 1;
  }
  return acc;
}

int element_order(const Element& a, const Params& p) {
  int order = 1;
  Element cur = a;
  while (cur != identity()) {
    cur = mul(cur, a, p);
    ++order;
  }
  return order;
}

Element conjugate(const Element& g, const Element& a, const Params& p) {
  return mul(mul(g, a, p), inv(g, p), p);
}

bool commute(const Element& a, const Element& b, const Params& p) {
  return mul(a, b, p) == mul(b, a, p);
}

std::uint32_t index_of(const Element& a, const Params& p) {
  return (a.e * p.rotation_order() + a.i) * p.cyclic_order() + a.j;
}

Element element_at(std::uint32_t index, const Params& p) {
  const std::uint32_t j = index % p.cyclic_order();
  index /= p.cyclic_order();
  const std::uint32_t i = index % p.rotation_order();
  return {i, index / p.rotation_order(), j};
}

std::vector<Element> all_elements(const Params& p) {
  p.require_within_cap();
  std::vector<Element> out(p.group_order());
  for (std::uint32_t k = 0; k < out.size(); ++k) out[k] = element_at(k, p);
  return out;
}

std::string to_string(const Element& a) {
  std::string s;
  if (a.i != 0) s += a.i == 1 ? "x" : "x^" + std::to_string(a.i);
  if (a.e != 0) s += "y";
  if (a.j != 0) s += a.j == 1 ? "z" : "z^" + std::to_string(a.j);
  return s.empty() ? "1" : s;
}

std::vector<std::vector<Element>> conjugacy_classes(const Params& p) {
  const auto elements = all_elements(p);
  std::vector<bool> seen(elements.size(), false);
  std::vector<std::vector<Element>> classes;
  // Elements are visited in canonical order, so each class is opened by its least member.
  for (const auto& a : elements) {
    if (seen[index_of(a, p)]) continue;
    std::vector<Element> cls;
    for (const auto& g : elements) {
      const Element c = conjugate(g, a, p);
      if (!seen[index_of(c, p)]) {
        seen[index_of(c, p)] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace dblock
