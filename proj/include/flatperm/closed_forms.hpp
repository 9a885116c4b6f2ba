#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "flatperm/bigint.hpp"
#include "flatperm/permutation.hpp"
#include "flatperm/recurrences.hpp"

namespace flatperm {

/// Stirling numbers of the second kind, Bell and complementary Bell numbers,
/// harmonic numbers, all exact. Built once up to n_max; lookups past that
/// throw std::out_of_range.
class SpecialNumberCache {
 public:
  explicit SpecialNumberCache(int n_max);

  int n_max() const { return n_max_; }
  /// S(n, k); zero for k outside [0, n]. S(0, 0) = 1.
  BigInt stirling2(int n, int k) const;
  const BigInt& bell(int n) const;
  /// sum_k (-1)^k S(n, k), with the extra value at n = -1 equal to -1.
  const BigInt& complementary_bell(int n) const;
  /// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
  const Rational& harmonic(int n) const;

 private:
  void check(int n, int lowest) const;

  int n_max_;
  std::vector<std::vector<BigInt>> stirling_;
  std::vector<BigInt> bell_;
  std::vector<BigInt> comp_bell_;  // comp_bell_[n + 1] holds index n
  std::vector<Rational> harmonic_;
};

/// Rows of the avoidance / average table: the five recurrence patterns and 13-2.
enum class TablePattern { P12_3, P21_3, P23_1, P32_1, P31_2, P13_2 };

inline constexpr std::array<TablePattern, 6> kTablePatterns{
    TablePattern::P12_3, TablePattern::P21_3, TablePattern::P23_1,
    TablePattern::P32_1, TablePattern::P31_2, TablePattern::P13_2};

std::string_view name(TablePattern p);
const VincularPattern3& vincular(TablePattern p);
std::optional<TablePattern> parse_table_pattern(std::string_view text);
TablePattern to_table_pattern(PatternId id);

/// Number of permutations of [n] whose flattened form avoids the pattern.
/// n = 1 gives 1 and n = 2 gives 2 for every pattern.
BigInt avoiders(TablePattern p, int n);

/// Expected number of occurrences over a uniformly random permutation of [n].
Rational average_occurrences(TablePattern p, int n);

/// Patterns whose total occurrence counts have closed sums; 3-21 and 3-12 are
/// the auxiliary type (1,2) patterns.
enum class TotalPattern { P32_1, P23_1, P31_2, P21_3, P12_3, P3_21, P3_12 };

inline constexpr std::array<TotalPattern, 7> kTotalPatterns{
    TotalPattern::P32_1, TotalPattern::P23_1, TotalPattern::P31_2, TotalPattern::P21_3,
    TotalPattern::P12_3, TotalPattern::P3_21, TotalPattern::P3_12};

std::string_view name(TotalPattern p);
const VincularPattern3& vincular(TotalPattern p);

/// Sum over S_n of the occurrence counts in the flattened forms (n >= 1).
/// 21-3 and 12-3 are obtained by subtracting the 3-21 / 3-12 totals from
/// the combined sums, mirroring how they are derived.
BigInt total_occurrences(TotalPattern p, int n);

/// (n-1)! sum_{i=3}^{n-1} (n-i)(i-2), the combined 21-3 and 3-21 total.
BigInt combined_total_21_3(int n);
/// (n-1)! sum_{i=2}^{n-1} (n-i) i, the combined 12-3 and 3-12 total.
BigInt combined_total_12_3(int n);

/// avr(n) / n^2 for each of the five recurrence patterns (kAllPatterns order).
struct LimitRow {
  int n = 0;
  std::array<Rational, 5> ratio;
};
/// One row per n in [n_lo, n_hi]. Requires 3 <= n_lo < n_hi.
std::vector<LimitRow> limit_check(int n_lo, int n_hi);

/// |avr(n)/n^2 - 1/12| strictly decreasing on [max(n_lo, 20), n_hi].
bool deviation_strictly_decreasing(PatternId p, int n_lo, int n_hi);

}  // namespace flatperm
