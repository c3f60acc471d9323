#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dblock {

/// A finite group given by its full multiplication table.
///
/// Element 0 is the identity. Used for abstract questions (isomorphism type,
/// automorphism counts) about subgroups and quotients of D.
class TableGroup {
 public:
  TableGroup(std::size_t order, std::vector<std::uint32_t> table);

  std::size_t order() const { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t element_order(std::uint32_t a) const { return orders_[a]; }
  bool is_abelian() const;
  bool commute(std::uint32_t a, std::uint32_t b) const { return mul(a, b) == mul(b, a); }

  /// Subgroup generated by `gens`, as a sorted element list.
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const;
  std::vector<std::uint32_t> derived_subgroup() const;
  std::vector<std::uint32_t> center() const;
  /// <squares, commutators>: the Frattini subgroup when the group is a 2-group.
  std::vector<std::uint32_t> frattini_two_group() const;

  /// A generating set of size rank(G/Phi(G)), larger element orders first.
  std::vector<std::uint32_t> minimal_generating_set() const;

 private:
  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> orders_;
};

struct IsoType {
  enum class Kind { abelian, dihedral_times_cyclic, other };
  Kind kind = Kind::other;
  /// Ascending invariant factors (orders of the cyclic factors, all > 1).
  std::vector<std::uint64_t> invariant_factors;
  /// For dihedral_times_cyclic: the group is D_{2^dihedral_n} x C_{2^cyclic_m}.
  int dihedral_n = 0;
  int cyclic_m = 0;

  bool operator==(const IsoType&) const = default;
};

std::string to_string(const IsoType& t);

/// Invariant factors for abelian groups, presentation matching for
/// D_{2^a} x C_{2^b}; anything else is reported as `other`.
IsoType iso_type(const TableGroup& g);

/// Ascending invariant factors of an abelian 2-group from its Omega-layer sizes.
std::vector<std::uint64_t> abelian_invariant_factors(const TableGroup& g);

}  // namespace dblock
