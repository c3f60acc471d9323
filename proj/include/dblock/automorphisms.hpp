#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dblock/group.hpp"
#include "dblock/subgroups.hpp"
#include "dblock/table_group.hpp"

namespace dblock {

inline constexpr std::size_t kDefaultAutomorphismCap = 64;

/// An automorphism of a subgroup Q of D, stored as the full element permutation.
class Automorphism {
 public:
  Automorphism() = default;
  /// `images[k]` is the image of `domain.elements()[k]`. Validated: bijective and
  /// multiplicative on all pairs.
  Automorphism(const Subgroup& domain, std::vector<Element> images, const Params& p);

  static Automorphism identity_on(const Subgroup& domain, const Params& p);
  /// Conjugation by g restricted to `domain`; g must normalize it.
  static Automorphism inner(const Element& g, const Subgroup& domain, const Params& p);

  Element operator()(const Element& a) const;
  const std::vector<Element>& domain() const { return domain_; }
  const std::vector<Element>& images() const { return images_; }

  /// (*this) after `inner`: a -> this(inner(a)).
  Automorphism after(const Automorphism& inner) const;
  Automorphism inverse() const;
  int order() const;
  bool is_identity() const;
  /// C_Q(alpha), as a subgroup of D.
  Subgroup fixed_points(const Params& p) const;
  /// Image of a subgroup of the domain.
  Subgroup apply(const Subgroup& s, const Params& p) const;

  bool operator==(const Automorphism&) const = default;
  bool operator<(const Automorphism& o) const { return images_ < o.images_; }

 private:
  Automorphism(std::vector<Element> domain, std::vector<Element> images)
      : domain_(std::move(domain)), images_(std::move(images)) {}

  std::vector<Element> domain_;
  std::vector<Element> images_;
};

/// Visits every automorphism of `g` as a permutation of element indices.
/// The visitor returns false to stop early.
void for_each_automorphism(const TableGroup& g,
                           const std::function<bool(std::span<const std::uint32_t>)>& visit);
std::uint64_t count_automorphisms(const TableGroup& g);

/// All automorphisms of Q, sorted. Throws CapExceeded when |Q| > cap.
std::vector<Automorphism> automorphism_group(const Subgroup& q, const Params& p,
                                             std::size_t cap = kDefaultAutomorphismCap);

struct AutTwoGroupReport {
  bool is_two_group = false;
  std::uint64_t order = 0;
};
AutTwoGroupReport verify_aut_two_group(const Params& p);

/// Closure of a set of automorphisms of a common domain under composition.
std::vector<Automorphism> generate_group(std::span<const Automorphism> gens, const Params& p);

enum class Essential { q1, q2 };
enum class FixChoice { z_type, uz_type };

std::string to_string(Essential which);
std::string to_string(FixChoice fix);
FixChoice parse_fix_choice(const std::string& label);

Subgroup essential_subgroup(Essential which, const Params& p);

/// The order-3 automorphism of Q1 (t = y) or Q2 (t = xy): u -> t -> ut -> u with
/// u = x^{2^{n-2}}, and z -> z (z-type) or z -> utz (uz-type, fixing uz).
/// The uz-type needs m >= 1.
Automorphism order3_automorphism(Essential which, FixChoice fix, const Params& p);

}  // namespace dblock
