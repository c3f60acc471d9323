#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dblock/group.hpp"
#include "dblock/table_group.hpp"

namespace dblock {

/// Bitset over the dense element indices of D.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  bool contains(std::uint32_t k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }
  void insert(std::uint32_t k) { words_[k >> 6] |= std::uint64_t{1} << (k & 63); }
  std::size_t size() const;
  bool is_subset_of(const ElementSet& o) const;

  std::size_t hash() const;
  bool operator==(const ElementSet&) const = default;
  auto operator<=>(const ElementSet&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// A subgroup of D. Identity is the member set; generators are a witness.
class Subgroup {
 public:
  Subgroup() = default;
  /// `members` must be closed; use closure() to build from generators.
  Subgroup(const Params& p, std::vector<Element> members, std::vector<Element> generators);

  std::size_t order() const { return members_.size(); }
  const std::vector<Element>& elements() const { return members_; }
  const std::vector<Element>& generators() const { return generators_; }
  const ElementSet& set() const { return set_; }
  bool contains(const Element& a, const Params& p) const { return set_.contains(index_of(a, p)); }
  bool is_subgroup_of(const Subgroup& o) const { return set_.is_subset_of(o.set_); }
  bool is_abelian(const Params& p) const;

  /// Position of `a` in elements(); `a` must be a member.
  std::uint32_t local_index(const Element& a) const;
  /// Multiplication table in local indices.
  TableGroup as_table(const Params& p) const;

  bool operator==(const Subgroup& o) const { return set_ == o.set_; }
  /// Order first, then member bitset.
  bool operator<(const Subgroup& o) const;

 private:
  ElementSet set_;
  std::vector<Element> members_;
  std::vector<Element> generators_;
};

Subgroup closure(std::span<const Element> gens, const Params& p);
Subgroup closure(std::initializer_list<Element> gens, const Params& p);
Subgroup whole_group(const Params& p);
Subgroup trivial_subgroup(const Params& p);

/// Z(D) by a commutation scan; equals <x^{2^{n-2}}> x <z>.
Subgroup center(const Params& p);
/// Closure of all commutators; equals <x^2>.
Subgroup derived_subgroup(const Params& p);

/// Every subgroup of D, sorted by (order, members).
std::vector<Subgroup> all_subgroups(const Params& p);

Subgroup centralizer(const Subgroup& s, const Params& p);
Subgroup centralizer(const Element& a, const Params& p);
Subgroup normalizer(const Subgroup& s, const Params& p);

/// g S g^{-1}.
Subgroup conjugate_subgroup(const Element& g, const Subgroup& s, const Params& p);
/// Image of s under an element map that is known to be an isomorphism onto its image.
Subgroup map_subgroup(const Subgroup& s, const std::function<Element(const Element&)>& f,
                      const Params& p);

struct OmegaFrattini {
  Subgroup omega;
  Subgroup frattini;
};
/// Omega(Q) = <elements of order <= 2>, Phi(Q) = <squares, commutators> (2-groups).
OmegaFrattini omega_and_frattini(const Subgroup& q, const Params& p);

IsoType iso_type(const Subgroup& q, const Params& p);

/// D-conjugacy class of q, sorted.
std::vector<Subgroup> d_class_of_subgroup(const Subgroup& q, const Params& p);

/// Q1 = <x^{2^{n-2}}, y, z>, Q2 = <x^{2^{n-2}}, xy, z>.
Subgroup q1_subgroup(const Params& p);
Subgroup q2_subgroup(const Params& p);

/// The quotient D / <u> for central u, as a table group on coset indices.
TableGroup quotient_by_central(const Element& u, const Params& p);

}  // namespace dblock
