#include "dblock/automorphisms.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "dblock/errors.hpp"

namespace dblock {

namespace {

std::uint32_t local(const std::vector<Element>& domain, const Element& a) {
  auto it = std::lower_bound(domain.begin(), domain.end(), a);
  if (it == domain.end() || *it != a) throw ParamError(to_string(a) + " is outside the domain");
  return static_cast<std::uint32_t>(it - domain.begin());
}

}  // namespace

Automorphism::Automorphism(const Subgroup& domain, std::vector<Element> images, const Params& p)
    : domain_(domain.elements()), images_(std::move(images)) {
  if (images_.size() != domain_.size()) throw ParamError("automorphism image list has wrong size");
  std::vector<bool> hit(domain_.size(), false);
  for (const auto& b : images_) {
    const auto k = local(domain_, b);
    if (hit[k]) throw ParamError("map is not injective");
    hit[k] = true;
  }
  for (std::size_t a = 0; a < domain_.size(); ++a) {
    for (std::size_t b = 0; b < domain_.size(); ++b) {
      const auto ab = local(domain_, mul(domain_[a], domain_[b], p));
      if (images_[ab] != mul(images_[a], images_[b], p)) throw ParamError("map is not multiplicative");
    }
  }
}

Automorphism Automorphism::identity_on(const Subgroup& domain, const Params&) {
  return Automorphism(domain.elements(), domain.elements());
}

Automorphism Automorphism::inner(const Element& g, const Subgroup& domain, const Params& p) {
  std::vector<Element> images;
  images.reserve(domain.order());
  for (const auto& a : domain.elements()) {
    const Element c = conjugate(g, a, p);
    if (!domain.contains(c, p)) throw ParamError(to_string(g) + " does not normalize the domain");
    images.push_back(c);
  }
  return Automorphism(domain.elements(), std::move(images));
}

Element Automorphism::operator()(const Element& a) const { return images_[local(domain_, a)]; }

Automorphism Automorphism::after(const Automorphism& inner) const {
  if (inner.domain_ != domain_) throw ParamError("automorphisms have different domains");
  std::vector<Element> images;
  images.reserve(domain_.size());
  for (const auto& b : inner.images_) images.push_back((*this)(b));
  return Automorphism(domain_, std::move(images));
}

Automorphism Automorphism::inverse() const {
  std::vector<Element> images(domain_.size());
  for (std::size_t k = 0; k < domain_.size(); ++k) images[local(domain_, images_[k])] = domain_[k];
  return Automorphism(domain_, std::move(images));
}

bool Automorphism::is_identity() const { return images_ == domain_; }

int Automorphism::order() const {
  int k = 1;
  Automorphism cur = *this;
  while (!cur.is_identity()) {
    cur = after(cur);
    ++k;
  }
  return k;
}

Subgroup Automorphism::fixed_points(const Params& p) const {
  std::vector<Element> fixed;
  for (std::size_t k = 0; k < domain_.size(); ++k)
    if (images_[k] == domain_[k]) fixed.push_back(domain_[k]);
  return closure(fixed, p);
}

Subgroup Automorphism::apply(const Subgroup& s, const Params& p) const {
  return map_subgroup(s, [this](const Element& a) { return (*this)(a); }, p);
}

void for_each_automorphism(const TableGroup& g,
                           const std::function<bool(std::span<const std::uint32_t>)>& visit) {
  const auto gens = g.minimal_generating_set();
  const std::size_t d = gens.size();
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> gen_images(d, kUnset);
  std::vector<std::uint32_t> phi(g.order(), kUnset);

  // Extends the generator assignment gen_images[0..t) to <gens[0..t)> along the
  // Cayley graph; fails on a relation clash or a collision of images.
  auto consistent = [&](std::size_t t, std::size_t& reached) {
    std::fill(phi.begin(), phi.end(), kUnset);
    std::vector<bool> used(g.order(), false);
    std::vector<std::uint32_t> queue{0};
    phi[0] = 0;
    used[0] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const auto h = queue[k];
      for (std::size_t s = 0; s < t; ++s) {
        const auto target = g.mul(h, gens[s]);
        const auto image = g.mul(phi[h], gen_images[s]);
        if (phi[target] == kUnset) {
          if (used[image]) return false;
          used[image] = true;
          phi[target] = image;
          queue.push_back(target);
        } else if (phi[target] != image) {
          return false;
        }
      }
    }
    reached = queue.size();
    return true;
  };

  bool stop = false;
  std::function<void(std::size_t)> extend = [&](std::size_t t) {
    if (stop) return;
    if (t == d) {
      std::size_t reached = 0;
      if (consistent(d, reached) && reached == g.order()) {
        if (!visit(phi)) stop = true;
      }
      return;
    }
    for (std::uint32_t cand = 0; cand < g.order() && !stop; ++cand) {
      if (g.element_order(cand) != g.element_order(gens[t])) continue;
      gen_images[t] = cand;
      std::size_t reached = 0;
      if (consistent(t + 1, reached)) extend(t + 1);
    }
    gen_images[t] = kUnset;
  };
  extend(0);
}

std::uint64_t count_automorphisms(const TableGroup& g) {
  std::uint64_t count = 0;
  for_each_automorphism(g, [&](std::span<const std::uint32_t>) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Automorphism> automorphism_group(const Subgroup& q, const Params& p, std::size_t cap) {
  if (q.order() > cap) {
    throw CapExceeded("|Q| = " + std::to_string(q.order()) + " exceeds the automorphism cap " +
                      std::to_string(cap));
  }
  const auto table = q.as_table(p);
  std::vector<Automorphism> out;
  for_each_automorphism(table, [&](std::span<const std::uint32_t> perm) {
    std::vector<Element> images;
    images.reserve(perm.size());
    for (auto k : perm) images.push_back(q.elements()[k]);
    out.emplace_back(q, std::move(images), p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

AutTwoGroupReport verify_aut_two_group(const Params& p) {
  p.require_within_cap();
  const auto order = count_automorphisms(whole_group(p).as_table(p));
  return {std::has_single_bit(order), order};
}

std::vector<Automorphism> generate_group(std::span<const Automorphism> gens, const Params& p) {
  if (gens.empty()) throw ParamError("need at least one automorphism to fix the domain");
  std::vector<Automorphism> members{gens.front().after(gens.front().inverse())};
  std::set<std::vector<Element>> seen{members.front().images()};
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (const auto& g : gens) {
      auto h = g.after(members[k]);
      if (seen.insert(h.images()).second) members.push_back(std::move(h));
    }
  }
  (void)p;
  std::sort(members.begin(), members.end());
  return members;
}

std::string to_string(Essential which) { return which == Essential::q1 ? "Q1" : "Q2"; }

std::string to_string(FixChoice fix) { return fix == FixChoice::z_type ? "z" : "uz"; }

FixChoice parse_fix_choice(const std::string& label) {
  if (label == "z" || label == "z-type") return FixChoice::z_type;
  if (label == "uz" || label == "uz-type") return FixChoice::uz_type;
  throw ParamError("unknown fixed-point choice '" + label + "' (expected z or uz)");
}

Subgroup essential_subgroup(Essential which, const Params& p) {
  return which == Essential::q1 ? q1_subgroup(p) : q2_subgroup(p);
}

Automorphism order3_automorphism(Essential which, FixChoice fix, const Params& p) {
  if (fix == FixChoice::uz_type && p.m == 0) {
    throw ParamError("the uz-type fixed-point choice needs m >= 1 (z is trivial for m = 0)");
  }
  const Element u = central_involution(p);
  const Element t = which == Essential::q1 ? gen_y() : mul(gen_x(), gen_y(), p);
  const Element ut = mul(u, t, p);
  const Element z_image = fix == FixChoice::z_type ? gen_z() : mul(ut, gen_z(), p);
  const Subgroup q = essential_subgroup(which, p);
  std::vector<Element> images(q.order());
  // Q = <u> x <t> x <z> is abelian, so u^a t^b z^c -> alpha(u)^a alpha(t)^b alpha(z)^c.
  for (std::uint32_t a = 0; a < 2; ++a) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      for (std::uint32_t c = 0; c < p.cyclic_order(); ++c) {
        const Element src = mul(mul(power(u, a, p), power(t, b, p), p), power(gen_z(), c, p), p);
        const Element dst = mul(mul(power(t, a, p), power(ut, b, p), p), power(z_image, c, p), p);
        images[q.local_index(src)] = dst;
      }
    }
  }
  return Automorphism(q, std::move(images), p);
}

}  // namespace dblock
