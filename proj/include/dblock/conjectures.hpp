#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dblock/automorphisms.hpp"
#include "dblock/fusion.hpp"
#include "dblock/subgroups.hpp"

namespace dblock {

enum class OuterGroup { trivial, c2, c3, s3 };

std::string to_string(OuterGroup g);
OuterGroup parse_outer_group(const std::string& label);

/// Number of irreducible characters of 2-defect zero.
std::int64_t defect_zero_count(OuterGroup g);

/// Aut_F(Q): every F-isomorphism Q -> Q, as automorphisms of Q. Sorted.
std::vector<Automorphism> automizer(const Subgroup& q, const FusionSystem& fs);

/// Out_F(Q) = Aut_F(Q) / Inn(Q) identified up to isomorphism.
struct OuterInfo {
  std::uint64_t order = 1;
  bool abelian = true;
  bool two_group = true;
  /// O_2(Out_F(Q)) = 1.
  bool radical = true;
  std::string label;
};
OuterInfo outer_automizer(const Subgroup& q, const FusionSystem& fs);
/// Maps an outer automizer onto the supported descriptors; throws otherwise.
OuterGroup outer_group(const OuterInfo& info);

/// F-classes of F-centric subgroups, each sorted, ordered by least member.
std::vector<std::vector<Subgroup>> centric_classes(const FusionSystem& fs);

struct RadicalClass {
  Subgroup q;
  std::size_t class_size = 0;
  OuterGroup outer = OuterGroup::trivial;
};
/// F-classes of F-centric F-radical subgroups, D first.
std::vector<RadicalClass> centric_radical_classes(const FusionSystem& fs);

std::int64_t alperin_weight_count(const FusionSystem& fs);

struct ChainContribution {
  std::string label;
  int length = 0;
  int sign = 1;
  /// Orders of I(sigma) and of the chain's top 2-subgroup.
  std::uint64_t normalizer_order = 1;
  /// I(sigma)-orbits on the characters of the requested defect.
  std::int64_t orbits = 0;
  /// Orbits counted with the defect-zero count of their stabilizer.
  std::int64_t weighted = 0;
  std::int64_t contribution = 0;
};

struct OwcWeight {
  std::int64_t total = 0;
  std::vector<ChainContribution> chains;
};

/// w(Q, d) for Q = D or an essential subgroup of fs.
OwcWeight owc_weight_detail(const FusionSystem& fs, const Subgroup& q, int d);
std::int64_t owc_weight(const FusionSystem& fs, const Subgroup& q, int d);

struct OwcRow {
  int defect = 0;
  std::int64_t expected = 0;
  std::vector<std::int64_t> weights;  // aligned with centric_radical_classes
  std::int64_t total = 0;
  bool match() const { return total == expected; }
};
struct OwcReport {
  std::vector<RadicalClass> classes;
  std::vector<OwcRow> rows;
  bool holds() const;
};
OwcReport owc_check(const FusionSystem& fs);

enum class GluingKind { nonabelian_top, essential_top, abelian_top };
std::string to_string(GluingKind k);

struct ChainClass {
  std::vector<Subgroup> chain;
  std::size_t class_size = 0;
  GluingKind kind = GluingKind::abelian_top;
  /// Order of the group whose cohomology is examined.
  std::uint64_t group_order = 0;
  std::string group_label;
  bool vanishes = false;
};
struct GluingReport {
  std::vector<ChainClass> classes;
  std::string verdict;
  bool unique() const;
};
GluingReport gluing_check(const FusionSystem& fs);

}  // namespace dblock
