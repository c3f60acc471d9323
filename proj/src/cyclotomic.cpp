#include "dblock/cyclotomic.hpp"

#include <algorithm>
#include <set>

#include "dblock/errors.hpp"

namespace dblock {

namespace {

std::int64_t mod_pow2(std::int64_t v, int bits) {
  const std::int64_t modulus = std::int64_t{1} << bits;
  auto r = v % modulus;
  return r < 0 ? r + modulus : r;
}

void check_level(int level) {
  if (level > kMaxCyclotomicLevel) {
    throw LevelOverflow("cyclotomic level " + std::to_string(level) + " exceeds the bound " +
                        std::to_string(kMaxCyclotomicLevel));
  }
}

}  // namespace

std::size_t cyclotomic_dim(int level) { return level <= 1 ? 1 : std::size_t{1} << (level - 1); }

Cyc::Cyc(int level) : level_(std::max(level, 1)), coeffs_() {
  check_level(level_);
  coeffs_.assign(cyclotomic_dim(level_), 0);
}

Cyc::Cyc(int level, std::vector<std::int64_t> coeffs) : Cyc(level) {
  if (coeffs.size() != coeffs_.size()) throw ParamError("coefficient vector has wrong length");
  coeffs_ = std::move(coeffs);
}

Cyc Cyc::integer(std::int64_t v, int level) {
  Cyc c(level);
  c.coeffs_[0] = v;
  return c;
}

Cyc Cyc::root(int level, std::int64_t exponent) {
  Cyc c(level);
  if (level <= 0) {
    c.coeffs_[0] = 1;
    return c;
  }
  const auto h = static_cast<std::int64_t>(cyclotomic_dim(c.level_));
  const auto r = mod_pow2(exponent, c.level_);
  if (r < h) {
    c.coeffs_[r] = 1;
  } else {
    c.coeffs_[r - h] = -1;
  }
  return c;
}

Cyc Cyc::at_level(int level) const {
  level = std::max(level, 1);
  check_level(level);
  if (level == level_) return *this;
  Cyc out(level);
  if (level > level_) {
    const std::size_t stride = std::size_t{1} << (level - level_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * stride] = coeffs_[i];
    return out;
  }
  const std::size_t stride = std::size_t{1} << (level_ - level);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i % stride == 0) {
      out.coeffs_[i / stride] = coeffs_[i];
    } else if (coeffs_[i] != 0) {
      throw DataError(to_string() + " does not lie in Z[zeta_" +
                      std::to_string(std::int64_t{1} << level) + "]");
    }
  }
  return out;
}

Cyc Cyc::reduced() const {
  int level = level_;
  while (level > 1) {
    bool fits = true;
    for (std::size_t i = 1; i < coeffs_.size() && fits; i += 2) fits = coeffs_[i] == 0;
    if (!fits) break;
    --level;
    return at_level(level).reduced();
  }
  return *this;
}

bool Cyc::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool Cyc::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

std::int64_t Cyc::rational_value() const {
  if (!is_rational()) throw DataError(to_string() + " is not rational");
  return coeffs_[0];
}

Cyc Cyc::galois(std::int64_t gamma) const {
  if (gamma % 2 == 0) throw ParamError("Galois exponent must be odd");
  Cyc out(level_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    out += root(level_, static_cast<std::int64_t>(i) * gamma) * coeffs_[i];
  }
  return out;
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  const int level = std::max(level_, o.level_);
  if (level != level_) *this = at_level(level);
  const Cyc rhs = o.at_level(level);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(std::int64_t s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  const int level = std::max(a.level_, b.level_);
  const Cyc x = a.at_level(level);
  const Cyc y = b.at_level(level);
  Cyc out(level);
  const std::size_t h = out.coeffs_.size();
  for (std::size_t i = 0; i < h; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < h; ++j) {
      const auto prod = x.coeffs_[i] * y.coeffs_[j];
      // zeta^h = -1; at level 1 this is zeta_2 = -1 with h = 1.
      if (i + j < h) {
        out.coeffs_[i + j] += prod;
      } else {
        out.coeffs_[i + j - h] -= prod;
      }
    }
  }
  return out;
}

bool operator==(const Cyc& a, const Cyc& b) {
  const int level = std::max(a.level_, b.level_);
  return a.at_level(level).coeffs_ == b.at_level(level).coeffs_;
}

std::string Cyc::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    const auto mag = c < 0 ? -c : c;
    if (i == 0) {
      s += std::to_string(mag);
      continue;
    }
    if (mag != 1) s += std::to_string(mag) + "*";
    s += "z" + std::to_string(std::int64_t{1} << level_);
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Cyc inner_product(std::span<const Cyc> c1, std::span<const Cyc> c2) {
  if (c1.size() != c2.size()) throw ParamError("inner product of columns of different lengths");
  Cyc acc;
  for (std::size_t k = 0; k < c1.size(); ++k) acc += c1[k] * c2[k].conj();
  return acc;
}

std::vector<IntColumn> column_decompose(const DecompositionColumn& d) {
  const std::size_t h = cyclotomic_dim(d.k);
  std::vector<IntColumn> a(h, IntColumn(d.entries.size(), 0));
  for (std::size_t chi = 0; chi < d.entries.size(); ++chi) {
    const Cyc e = d.entries[chi].at_level(d.k);
    for (std::size_t i = 0; i < h; ++i) a[i][chi] = e.coeffs()[i];
  }
  return a;
}

IntColumn extended_column(std::span<const IntColumn> a, int k, std::int64_t s) {
  const auto h = static_cast<std::int64_t>(cyclotomic_dim(k));
  if (static_cast<std::int64_t>(a.size()) != h) throw ParamError("expected 2^{k-1} integer columns");
  const auto r = mod_pow2(s, std::max(k, 1));
  if (r < h) return a[r];
  IntColumn out = a[r - h];
  for (auto& v : out) v = -v;
  return out;
}

std::vector<Cyc> galois_expand(std::span<const IntColumn> a, int k, std::int64_t gamma,
                               std::span<const std::int64_t> reps) {
  if (gamma % 2 == 0) throw ParamError("Galois exponent must be odd");
  const auto h = static_cast<std::int64_t>(cyclotomic_dim(k));
  if (static_cast<std::int64_t>(reps.size()) != h) throw ParamError("S is not a transversal");
  std::set<std::int64_t> residues;
  for (auto s : reps) residues.insert(((s % h) + h) % h);
  if (static_cast<std::int64_t>(residues.size()) != h) throw ParamError("S is not a transversal");
  const std::size_t rows = a.empty() ? 0 : a.front().size();
  std::vector<Cyc> out(rows, Cyc(k));
  for (auto s : reps) {
    const auto col = extended_column(a, k, s);
    const Cyc z = Cyc::root(k, s * gamma);
    for (std::size_t chi = 0; chi < rows; ++chi)
      if (col[chi] != 0) out[chi] += z * col[chi];
  }
  return out;
}

std::vector<std::int64_t> GaloisContext::odd_residues() const {
  std::vector<std::int64_t> out;
  for (std::int64_t g = 1; g < (std::int64_t{1} << a); g += 2) out.push_back(g);
  return out;
}

IntColumn trace_recover(const GaloisColumns& columns, int k, const GaloisContext& ctx,
                        std::int64_t s) {
  if (ctx.a < k) throw ParamError("Galois context level a must be at least k");
  std::optional<std::vector<Cyc>> acc;
  for (auto gamma : ctx.odd_residues()) {
    const auto key = mod_pow2(gamma, std::max(k, 1));
    auto it = columns.find(key);
    if (it == columns.end()) throw DataError("missing column for gamma = " + std::to_string(key));
    if (!acc) acc.emplace(it->second.size(), Cyc(k));
    if (acc->size() != it->second.size()) throw DataError("columns differ in length");
    const Cyc z = Cyc::root(k, -gamma * s);
    for (std::size_t chi = 0; chi < acc->size(); ++chi) (*acc)[chi] += it->second[chi] * z;
  }
  IntColumn out;
  const auto denom = ctx.group_order();
  for (const auto& v : *acc) {
    if (!v.is_rational() || v.rational_value() % denom != 0)
      throw DataError("trace sum " + v.to_string() + " is not divisible to an integer");
    out.push_back(v.rational_value() / denom);
  }
  return out;
}

bool ParityReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass(); });
}

ParityReport parity_check_height_zero(const DecompositionColumn& d, std::span<const int> heights) {
  if (heights.size() != d.entries.size()) throw ParamError("heights misaligned with column");
  const auto a = column_decompose(d);
  ParityReport report;
  for (std::size_t chi = 0; chi < heights.size(); ++chi) {
    HeightCheck row;
    if (heights[chi] == 0) {
      std::int64_t sum = 0;
      for (const auto& col : a) sum += col[chi];
      row.sum_checked = true;
      row.sum_odd = sum % 2 != 0;
    }
    if (d.k <= 1) {
      row.valuation_checked = true;
      const auto v = d.entries[chi].at_level(1).rational_value();
      int val = -1;
      if (v != 0) {
        val = 0;
        for (auto t = v; t % 2 == 0; t /= 2) ++val;
      }
      row.valuation_ok = val == heights[chi];
    }
    report.rows.push_back(row);
  }
  return report;
}

SymmetryReport symmetry_zero_check(std::span<const IntColumn> a, int n) {
  if (n < 3) throw ParamError("symmetry check needs n >= 3");
  const int k = n - 1;
  if (a.size() != cyclotomic_dim(k)) throw ParamError("columns do not match an element of order 2^{n-1}");
  const auto h = static_cast<std::int64_t>(cyclotomic_dim(k));
  SymmetryReport report;
  report.relations_hold = true;
  for (std::int64_t j = 0; j < 2 * h && report.relations_hold; ++j) {
    const auto aj = extended_column(a, k, j);
    const auto aneg = extended_column(a, k, -j);
    auto other = extended_column(a, k, h - j);
    for (auto& v : other) v = -v;
    if (aj != aneg || aneg != other) {
      report.relations_hold = false;
      report.violated_index = j;
    }
  }
  report.middle = extended_column(a, k, h / 2);
  report.middle_vanishes =
      std::all_of(report.middle.begin(), report.middle.end(), [](auto v) { return v == 0; });
  return report;
}

std::int64_t norm_a0(const GaloisColumns& columns, const GaloisContext& ctx, int n, int m) {
  const int k = n - 1;
  const std::int64_t modulus = std::int64_t{1} << k;
  const std::int64_t self_norm = std::int64_t{1} << (n - 1 + m);
  for (std::int64_t g = 1; g < modulus; g += 2) {
    if (!columns.count(g)) throw DataError("missing column for x^" + std::to_string(g));
  }
  for (const auto& [g, cg] : columns) {
    for (const auto& [h, ch] : columns) {
      const bool conjugate = (g - h) % modulus == 0 || (g + h) % modulus == 0;
      const Cyc ip = inner_product(cg, ch);
      const Cyc expected = Cyc::integer(conjugate ? self_norm : 0);
      if (ip != expected) {
        throw DataError("(d(x^" + std::to_string(g) + "), d(x^" + std::to_string(h) + ")) = " +
                        ip.to_string() + ", expected " + expected.to_string());
      }
    }
  }
  const auto a0 = trace_recover(columns, k, ctx, 0);
  std::int64_t norm = 0;
  for (auto v : a0) norm += v * v;
  return norm;
}

}  // namespace dblock
