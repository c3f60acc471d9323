#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dblock/automorphisms.hpp"
#include "dblock/group.hpp"
#include "dblock/subgroups.hpp"

namespace dblock {

/// Which of Q1, Q2 carry an S3 automizer: aa both, ab only Q2, ba only Q1, bb neither.
enum class FusionCase { aa, ab, ba, bb };

std::string to_string(FusionCase c);
FusionCase parse_fusion_case(const std::string& label);
/// Number of irreducible Brauer characters the theory assigns to the case.
int brauer_character_count(FusionCase c);
FusionCase case_from_essentials(bool q1_essential, bool q2_essential);

/// The saturated fusion system on D generated by inner automorphisms and one
/// order-3 automorphism on each essential Q_i.
class FusionSystem {
 public:
  FusionSystem(const Params& p, FusionCase c, FixChoice fix1 = FixChoice::z_type,
               FixChoice fix2 = FixChoice::z_type);

  const Params& params() const { return params_; }
  FusionCase fusion_case() const { return case_; }
  bool is_essential(Essential which) const { return alpha_[slot(which)].has_value(); }
  /// Present only for essential slots.
  std::optional<FixChoice> fix(Essential which) const { return fix_[slot(which)]; }
  const Automorphism& alpha(Essential which) const;
  const Subgroup& essential(Essential which) const { return q_[slot(which)]; }
  /// e(B) = 1: Aut(D) is a 2-group.
  static constexpr int inertial_index() { return 1; }

 private:
  static std::size_t slot(Essential which) { return which == Essential::q1 ? 0 : 1; }

  Params params_;
  FusionCase case_;
  std::array<std::optional<FixChoice>, 2> fix_;
  std::array<std::optional<Automorphism>, 2> alpha_;
  std::array<Subgroup, 2> q_;
};

/// All F-conjugates of q (D-conjugation plus alpha_i inside conjugates of Q_i).
std::vector<Subgroup> f_conjugates(const Subgroup& q, const FusionSystem& fs);
/// Every F-conjugate Q' satisfies C_D(Q') <= Q'.
bool is_F_centric(const Subgroup& q, const FusionSystem& fs);

/// D-classes of proper subgroups that survive the essential-candidate tests:
/// F-centric, abelian, Aut(Q) not a 2-group, and Omega(Q) not inside Z(D).
std::vector<std::vector<Subgroup>> essential_classes(const FusionSystem& fs);

/// Finest partition of D closed under D-conjugation and alpha_i on Q_i.
/// Classes are sorted, ordered by least member.
std::vector<std::vector<Element>> element_fusion_classes(const FusionSystem& fs);
/// Least member of each fusion class (x^i z^j forms come first).
std::vector<Element> subsection_representatives(const FusionSystem& fs);

/// C_{Q_i}(<alpha_i, N_D(Q_i)>). Throws if Q_i is not essential.
Subgroup fixed_points(Essential which, const FusionSystem& fs);

/// Nontrivial central elements split as U = {u z^{2j}}, V = {z^j}, W = {u z^{2j+1}}.
struct MajorSplit {
  std::vector<Element> u;
  std::vector<Element> v;
  std::vector<Element> w;
};
MajorSplit major_split(const FusionSystem& fs);

/// Fusion case of the block dominated by b_u for central u != 1.
FusionCase subcase_of_major(const Element& u, const FusionSystem& fs);

struct DihedralCyclicType {
  int n = 0;
  int m = 0;
  bool operator==(const DihedralCyclicType&) const = default;
};
/// D / <u> recognized as D_{2^n'} x C_{2^m'}.
DihedralCyclicType quotient_type(const Element& u, const Params& p);

}  // namespace dblock
