#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dblock/automorphisms.hpp"
#include "dblock/cyclotomic.hpp"
#include "dblock/group.hpp"
#include "dblock/subgroups.hpp"

namespace dblock {

struct CharacterInfo {
  int degree = 1;
  int height = 0;
  int defect = 0;
  std::string label;
  // lam(a,b,s) when degree 1, chi(t,s) when degree 2.
  int a = 0;
  int b = 0;
  std::int64_t t = 0;
  std::int64_t s = 0;
};

/// Irreducible characters of D. Rows follow `info`, columns follow `classes`.
///
/// Linear characters lam(a,b,c) send x -> (-1)^a, y -> (-1)^b, z -> zeta_{2^m}^c.
/// chi(t,s) for 1 <= t < 2^{n-2} is induced from x -> zeta_{2^{n-1}}^t, z -> zeta_{2^m}^s.
struct CharacterTable {
  std::vector<std::vector<Element>> classes;
  std::vector<CharacterInfo> info;
  std::vector<std::vector<Cyc>> values;
  int level = 1;

  std::size_t class_index(const Element& a, const Params& p) const;
  /// Column of values at the class of `a`.
  std::vector<Cyc> column(const Element& a, const Params& p) const;
  std::vector<int> heights() const;
};

CharacterTable char_table(const Params& p);

/// Value of a single character at any element, without building the table.
Cyc character_value(const CharacterInfo& info, const Element& a, const Params& p);

/// defect -> number of irreducible characters of D with that defect.
std::map<int, std::int64_t> k_per_defect(const Params& p);

/// Irr(Q) for abelian Q. Each character is stored as exponents e with
/// chi(q) = zeta_{2^level}^{e}, aligned with the members of Q.
struct DualGroup {
  Subgroup q;
  int level = 0;
  std::vector<Element> basis;
  std::vector<std::vector<std::int64_t>> characters;

  std::size_t size() const { return characters.size(); }
  Cyc value(std::size_t chi, const Element& a) const;
};

DualGroup irr_abelian(const Subgroup& q, const Params& p);

struct DualOrbit {
  std::vector<std::size_t> members;
  /// Stabilizer of members.front() in the acting group.
  std::vector<Automorphism> stabilizer;
};

/// Orbits of <auts> on Irr(Q) under (alpha . chi)(q) = chi(alpha^{-1}(q)).
/// An empty `auts` means the trivial group.
std::vector<DualOrbit> dual_orbits(std::span<const Automorphism> auts, const DualGroup& dual,
                                   const Params& p);

}  // namespace dblock
