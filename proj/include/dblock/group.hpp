#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dblock {

inline constexpr std::size_t kDefaultMaxOrder = 512;

/// Parameters of D = D_{2^n} x C_{2^m}.
///
/// `max_order` caps every brute-force enumeration over D; operations that
/// would enumerate a larger group throw CapExceeded.
struct Params {
  int n = 3;
  int m = 0;
  std::size_t max_order = kDefaultMaxOrder;

  Params() = default;
  Params(int n_, int m_, std::size_t cap = kDefaultMaxOrder);

  /// Order 2^{n-1} of the rotation x.
  std::uint32_t rotation_order() const { return 1u << (n - 1); }
  /// Order 2^m of the central generator z.
  std::uint32_t cyclic_order() const { return 1u << m; }
  std::size_t group_order() const { return std::size_t{1} << (n + m); }

  void require_within_cap() const;
  void validate() const;

  bool operator==(const Params&) const = default;
};

/// x^i y^e z^j in normal form.
struct Element {
  std::uint32_t i = 0;
  std::uint32_t e = 0;
  std::uint32_t j = 0;

  bool operator==(const Element&) const = default;
  // Canonical order: rotations before reflections, then by x-exponent, then z.
  std::strong_ordering operator<=>(const Element& o) const {
    if (auto c = e <=> o.e; c != 0) return c;
    if (auto c = i <=> o.i; c != 0) return c;
    return j <=> o.j;
  }
};

Element identity();
Element gen_x();
Element gen_y();
Element gen_z();
/// x^{2^{n-2}}, the central involution of the dihedral factor.
Element central_involution(const Params& p);

Element make_element(std::int64_t i, std::int64_t e, std::int64_t j, const Params& p);

Element mul(const Element& a, const Element& b, const Params& p);
Element inv(const Element& a, const Params& p);
Element power(const Element& a, std::int64_t k, const Params& p);
int element_order(const Element& a, const Params& p);
/// g a g^{-1}.
Element conjugate(const Element& g, const Element& a, const Params& p);
bool commute(const Element& a, const Element& b, const Params& p);

/// Dense index in [0, |D|), monotone in the canonical element order.
std::uint32_t index_of(const Element& a, const Params& p);
Element element_at(std::uint32_t index, const Params& p);
std::vector<Element> all_elements(const Params& p);

std::string to_string(const Element& a);

/// D-conjugacy classes, each sorted, ordered by their least element.
std::vector<std::vector<Element>> conjugacy_classes(const Params& p);

}  // namespace dblock
