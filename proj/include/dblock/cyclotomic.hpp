#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dblock {

inline constexpr int kMaxCyclotomicLevel = 16;

/// An element of Z[zeta] with zeta = zeta_{2^level}, in the power basis
/// 1, zeta, ..., zeta^{2^{level-1}-1} with zeta^{2^{level-1}} = -1.
///
/// Level 0 (zeta_1 = 1) is stored as level 1, which is the same ring Z.
class Cyc {
 public:
  Cyc() : Cyc(1) {}
  explicit Cyc(int level);
  Cyc(int level, std::vector<std::int64_t> coeffs);
  static Cyc integer(std::int64_t v, int level = 1);
  /// zeta_{2^level}^exponent for any integer exponent.
  static Cyc root(int level, std::int64_t exponent);

  int level() const { return level_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  /// Same value at a higher level, or a lower one when it lies in that subring.
  Cyc at_level(int level) const;
  /// Smallest level holding this value.
  Cyc reduced() const;

  bool is_zero() const;
  bool is_rational() const;
  std::int64_t rational_value() const;

  /// Image under the Galois automorphism zeta -> zeta^gamma (gamma odd).
  Cyc galois(std::int64_t gamma) const;
  /// Complex conjugate, zeta -> zeta^{-1}.
  Cyc conj() const { return galois(-1); }

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(std::int64_t s);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator*(Cyc a, std::int64_t s) { return a *= s; }

  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int level_;
  std::vector<std::int64_t> coeffs_;
};

/// Basis length 2^{k-1} (1 for k <= 1).
std::size_t cyclotomic_dim(int level);

/// sum_chi c1[chi] * conj(c2[chi]).
Cyc inner_product(std::span<const Cyc> c1, std::span<const Cyc> c2);

using IntColumn = std::vector<std::int64_t>;

/// Generalized decomposition column of a subsection element of order 2^k.
struct DecompositionColumn {
  std::vector<Cyc> entries;
  int k = 1;
};

/// Integer columns a_0 .. a_{2^{k-1}-1} with d = sum_i a_i zeta^i.
std::vector<IntColumn> column_decompose(const DecompositionColumn& d);

/// a_s for any integer s under a_{i + 2^{k-1}} = -a_i.
IntColumn extended_column(std::span<const IntColumn> a, int k, std::int64_t s);

/// d(u^gamma) = sum_{s in reps} a_s zeta^{s gamma}; `reps` must be a transversal
/// of 2^{k-1} Z in Z.
std::vector<Cyc> galois_expand(std::span<const IntColumn> a, int k, std::int64_t gamma,
                               std::span<const std::int64_t> reps);

/// The Galois group of Q(zeta_{2^a}) / Q acting through odd residues mod 2^a.
struct GaloisContext {
  int a = 1;
  std::vector<std::int64_t> odd_residues() const;
  std::int64_t group_order() const { return std::int64_t{1} << (a - 1); }
};

/// Columns d(u^gamma), keyed by the odd residue gamma mod 2^k.
using GaloisColumns = std::map<std::int64_t, std::vector<Cyc>>;

/// a_s = 2^{1-a} sum_gamma d(u^gamma) zeta^{-gamma s}. Throws DataError if the
/// result is not an integer column.
IntColumn trace_recover(const GaloisColumns& columns, int k, const GaloisContext& ctx,
                        std::int64_t s);

struct HeightCheck {
  bool sum_checked = false;  // height-zero rows: sum of a_i is odd
  bool sum_odd = true;
  bool valuation_checked = false;  // rational columns: v_2(entry) == height
  bool valuation_ok = true;
  bool pass() const { return sum_odd && valuation_ok; }
};
struct ParityReport {
  std::vector<HeightCheck> rows;
  bool all_pass() const;
};
ParityReport parity_check_height_zero(const DecompositionColumn& d, std::span<const int> heights);

struct SymmetryReport {
  bool relations_hold = false;
  std::optional<std::int64_t> violated_index;
  IntColumn middle;  // a_{2^{n-3}}
  bool middle_vanishes = false;
  bool ok() const { return relations_hold && middle_vanishes; }
};
/// For the column of an element of order 2^{n-1}: checks a_j = a_{-j} = -a_{2^{n-2}-j}
/// for every j and that a_{2^{n-3}} vanishes.
SymmetryReport symmetry_zero_check(std::span<const IntColumn> a, int n);

/// (a_0, a_0) for the x-column, from the columns d(x^gamma) over odd gamma mod 2^{n-1}.
/// Verifies orthogonality across non-conjugate powers and the self-norm 2^{n-1+m}.
std::int64_t norm_a0(const GaloisColumns& columns, const GaloisContext& ctx, int n, int m);

}  // namespace dblock
