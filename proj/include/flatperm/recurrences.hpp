#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flatperm/permutation.hpp"
#include "flatperm/qpoly.hpp"

namespace flatperm {

/// The five patterns of type (2,1) whose distributions have recurrences.
enum class PatternId { P12_3, P21_3, P23_1, P32_1, P31_2 };

inline constexpr std::array<PatternId, 5> kAllPatterns{
    PatternId::P12_3, PatternId::P21_3, PatternId::P23_1, PatternId::P32_1, PatternId::P31_2};

std::string_view name(PatternId id);
const VincularPattern3& vincular(PatternId id);
std::optional<PatternId> parse_pattern_id(std::string_view text);

/// g_1, ..., g_{n_max} for one pattern. Index 0 holds g_0 = 1 and is never
/// used by the recurrences.
struct DistributionTable {
  PatternId pattern;
  std::vector<QPoly> gs;

  int n_max() const { return static_cast<int>(gs.size()) - 1; }
  const QPoly& operator[](int n) const { return gs.at(static_cast<std::size_t>(n)); }
};

/// g_n = n g_{n-1} + sum_{j=2}^{floor(n/2)} (q-1)^{j-1} b_{n,j} g_{n-j},
/// b_{n,j} the explicit single sum with (n-k)/j binomial weights.
DistributionTable g_31_2(int n_max);

/// Closed q-binomial form of the 32-1 recurrence; every coefficient is
/// cross-checked against the e_{j-1}([1],...,[k-3]) route and any mismatch
/// throws IdentityViolation.
DistributionTable g_32_1(int n_max);

/// g_n = (2q^{n-2} + [n-2]) g_{n-1} + sum_{j>=2} b_{n,j} (1-q)^{j-1} g_{n-j}
/// with b_{n,j} assembled from complete homogeneous sums over windows of
/// q-integers.
DistributionTable g_12_3(int n_max);

/// g_n = (1 + [n-1]) g_{n-1} + sum_{j>=2} b_{n,j} (1-q)^{j-1} g_{n-j}.
DistributionTable g_23_1(int n_max);

/// g_n = n g_{n-1} + sum_{j>=2} b_{n,j} (q-1)^{j-1} g_{n-j}.
DistributionTable g_21_3(int n_max);

DistributionTable distribution_table(PatternId id, int n_max);

/// Largest n accepted by the recurrence tables.
inline constexpr int kRecurrenceCap = 200;

// Coefficient families, exposed for tests and the verify report.

/// b_{n,j} of the 31-2 recurrence (2 <= j <= n/2).
QPoly b_31_2(int n, int j);
/// Full j-th coefficient (already including (q-1)^{j-1}) of the 32-1
/// recurrence via the q-binomial closed form.
QPoly c_32_1(int n, int j);
/// b_{n,j} of the 32-1 recurrence via sums of e_{j-1}([1],...,[k-3]).
QPoly b_32_1_symmetric(int n, int j);
/// b_{n,j} of the 12-3 recurrence from the h-sum definition.
QPoly b_12_3(int n, int j);
/// c_{n,j} of the closed 12-3 recurrence (j >= 1 accepted so the j = 1 term can be inspected).
QPoly c_12_3(int n, int j);
/// sum_{k=1}^{n-2} [k](1+[k]) for 23-1.
QPoly b2_23_1(int n);
/// sum_{k=3}^{n} (k-1)[n-k] for 21-3.
QPoly b2_21_3(int n);

/// Multiplied-through checks of the rational closed forms for b_{n,2}
/// (23-1 over (q-1)^3 (q+1), 21-3 over 2 (q-1)^3). True when the identity holds.
bool b2_23_1_rational_form_holds(int n);
bool b2_21_3_rational_form_holds(int n);

/// Compares the c_{n,j} form of the 12-3 recurrence with the b_{n,j} form.
struct CFormComparison {
  int n = 0;
  /// sum_{j=2}^{n-1} c_{n,j} g_{n-j} == g_n, the range as usually written
  bool stated_range_matches = false;
  /// sum_{j=1}^{n-1} c_{n,j} g_{n-j} == g_n
  bool with_j1_term_matches = false;
  /// c_{n,j} == (1-q)^{j-1} b_{n,j} for every 2 <= j <= n-1
  bool coefficients_match = false;
};
std::vector<CFormComparison> compare_12_3_c_form(int n_max);

/// Table of refined distributions g_n(1k), 2 <= k <= n <= n_max.
class RefinedTable {
 public:
  RefinedTable(PatternId pattern, int n_max);

  PatternId pattern() const { return pattern_; }
  int n_max() const { return n_max_; }
  const QPoly& at(int n, int k) const;
  const DistributionTable& totals() const { return totals_; }

 private:
  void build_31_2();
  void build_32_1();
  void build_12_3();
  void build_23_1();
  void build_21_3();
  void set(int n, int k, QPoly value);
  void require(bool ok, const std::string& what, int n, int k) const;

  PatternId pattern_;
  int n_max_;
  DistributionTable totals_;
  std::vector<std::vector<QPoly>> values_;
};

/// g_n(1k) for 2 <= k <= n. Throws std::invalid_argument outside that range
/// and IdentityViolation if a cleared-denominator recurrence fails.
QPoly refined_g1k(PatternId pattern, int n, int k);

}  // namespace flatperm
