#include "flatperm/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "flatperm/errors.hpp"

namespace flatperm {

SpecialNumberCache::SpecialNumberCache(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("SpecialNumberCache: negative size");
  const auto rows = static_cast<std::size_t>(n_max) + 1;
  stirling_.resize(rows);
  stirling_[0] = {1};
  for (std::size_t n = 1; n < rows; ++n) {
    auto& row = stirling_[n];
    const auto& prev = stirling_[n - 1];
    row.assign(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
      row[k] = prev[k - 1];
      if (k < prev.size()) row[k] += prev[k] * k;
    }
  }
  bell_.resize(rows);
  comp_bell_.resize(rows + 1);
  comp_bell_[0] = -1;
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      bell_[n] += stirling_[n][k];
      if (k % 2 == 0) {
        comp_bell_[n + 1] += stirling_[n][k];
      } else {
        comp_bell_[n + 1] -= stirling_[n][k];
      }
    }
  }
  harmonic_.resize(rows);
  for (std::size_t n = 1; n < rows; ++n) {
    harmonic_[n] = harmonic_[n - 1] + Rational(1, static_cast<unsigned long>(n));
  }
}

void SpecialNumberCache::check(int n, int lowest) const {
  if (n < lowest || n > n_max_) {
    throw std::out_of_range("special number index " + std::to_string(n) + " outside [" +
                            std::to_string(lowest) + ", " + std::to_string(n_max_) + "]");
  }
}

BigInt SpecialNumberCache::stirling2(int n, int k) const {
  check(n, 0);
  if (k < 0 || k > n) return 0;
  return stirling_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const BigInt& SpecialNumberCache::bell(int n) const {
  check(n, 0);
  return bell_[static_cast<std::size_t>(n)];
}

const BigInt& SpecialNumberCache::complementary_bell(int n) const {
  check(n, -1);
  return comp_bell_[static_cast<std::size_t>(n + 1)];
}

const Rational& SpecialNumberCache::harmonic(int n) const {
  check(n, 0);
  return harmonic_[static_cast<std::size_t>(n)];
}

std::string_view name(TablePattern p) {
  switch (p) {
    case TablePattern::P12_3: return "12-3";
    case TablePattern::P21_3: return "21-3";
    case TablePattern::P23_1: return "23-1";
    case TablePattern::P32_1: return "32-1";
    case TablePattern::P31_2: return "31-2";
    case TablePattern::P13_2: return "13-2";
  }
  return "?";
}

const VincularPattern3& vincular(TablePattern p) {
  switch (p) {
    case TablePattern::P12_3: return patterns::p12_3;
    case TablePattern::P21_3: return patterns::p21_3;
    case TablePattern::P23_1: return patterns::p23_1;
    case TablePattern::P32_1: return patterns::p32_1;
    case TablePattern::P31_2: return patterns::p31_2;
    case TablePattern::P13_2: return patterns::p13_2;
  }
  throw std::logic_error("unknown TablePattern");
}

std::optional<TablePattern> parse_table_pattern(std::string_view text) {
  for (TablePattern p : kTablePatterns) {
    if (name(p) == text) return p;
  }
  return std::nullopt;
}

TablePattern to_table_pattern(PatternId id) {
  switch (id) {
    case PatternId::P12_3: return TablePattern::P12_3;
    case PatternId::P21_3: return TablePattern::P21_3;
    case PatternId::P23_1: return TablePattern::P23_1;
    case PatternId::P32_1: return TablePattern::P32_1;
    case PatternId::P31_2: return TablePattern::P31_2;
  }
  throw std::logic_error("unknown PatternId");
}

BigInt avoiders(TablePattern p, int n) {
  if (n < 1) throw std::invalid_argument("avoiders: n must be >= 1");
  if (n == 1) return 1;
  if (n == 2) return 2;
  switch (p) {
    case TablePattern::P31_2:
      return binomial(2L * n - 2, n - 1);
    case TablePattern::P13_2: {
      BigInt r;
      mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
      return r;
    }
    case TablePattern::P23_1:
    case TablePattern::P32_1: {
      const SpecialNumberCache c(n - 1);
      BigInt sum = 0;
      BigInt two_k = 1;
      for (int k = 1; k <= n - 1; ++k) {
        two_k *= 2;
        sum += two_k * c.stirling2(n - 1, k);
      }
      return sum;
    }
    case TablePattern::P21_3: {
      const SpecialNumberCache c(n - 1);
      BigInt sum = 0;
      for (int k = 1; k <= n - 1; ++k) sum += c.stirling2(n - 1, k) * k;
      return 2 * sum;
    }
    case TablePattern::P12_3: {
      const SpecialNumberCache c(n - 1);
      BigInt sum = 0;
      for (int i = 0; i <= n - 2; ++i) {
        sum += binomial(n - 2, i) * (c.bell(i) + c.bell(i + 1)) * c.complementary_bell(n - i - 3);
      }
      return -2 * sum;
    }
  }
  throw std::logic_error("unknown TablePattern");
}

namespace {

Rational average_with(TablePattern p, long n, const Rational& h) {
  const Rational nn(n);
  switch (p) {
    case TablePattern::P31_2:
    case TablePattern::P21_3:
      return (nn * nn * nn - 3 * nn * nn + 26 * nn - 12) / (12 * nn) - h;
    case TablePattern::P32_1:
    case TablePattern::P23_1:
      return (nn * nn - 9 * nn - 4) / 12 + h;
    case TablePattern::P12_3:
      return (nn * nn * nn + 3 * nn * nn - 40 * nn + 24) / (12 * nn) + h;
    case TablePattern::P13_2:
      return (nn * nn + 3 * nn + 8) / 12 - h;
  }
  throw std::logic_error("unknown TablePattern");
}

Rational harmonic_number(int n) {
  Rational h = 0;
  for (int k = 1; k <= n; ++k) h += Rational(1, static_cast<unsigned long>(k));
  return h;
}

BigInt require_integer(const Rational& r, std::string_view what, int n) {
  if (r.get_den() != 1) {
    throw IdentityViolation(std::string(what) + " is not an integer at n=" + std::to_string(n) +
                            ": " + to_string(r));
  }
  return r.get_num();
}

// (n-1)! sum_{i=lo}^{n-1} (n-i) w(i) / i
template <class Weight>
BigInt sum_over_i(int n, int lo, Weight w) {
  if (n < 2) return 0;
  const BigInt f = factorial(static_cast<unsigned long>(n - 1));
  Rational s = 0;
  for (int i = lo; i <= n - 1; ++i) s += Rational(BigInt(n - i) * w(i), BigInt(i));
  s.canonicalize();
  return require_integer(s * f, "total", n);
}

}  // namespace

Rational average_occurrences(TablePattern p, int n) {
  if (n < 1) throw std::invalid_argument("average_occurrences: n must be >= 1");
  return average_with(p, n, harmonic_number(n));
}

std::string_view name(TotalPattern p) {
  switch (p) {
    case TotalPattern::P32_1: return "32-1";
    case TotalPattern::P23_1: return "23-1";
    case TotalPattern::P31_2: return "31-2";
    case TotalPattern::P21_3: return "21-3";
    case TotalPattern::P12_3: return "12-3";
    case TotalPattern::P3_21: return "3-21";
    case TotalPattern::P3_12: return "3-12";
  }
  return "?";
}

const VincularPattern3& vincular(TotalPattern p) {
  switch (p) {
    case TotalPattern::P32_1: return patterns::p32_1;
    case TotalPattern::P23_1: return patterns::p23_1;
    case TotalPattern::P31_2: return patterns::p31_2;
    case TotalPattern::P21_3: return patterns::p21_3;
    case TotalPattern::P12_3: return patterns::p12_3;
    case TotalPattern::P3_21: return patterns::p3_21;
    case TotalPattern::P3_12: return patterns::p3_12;
  }
  throw std::logic_error("unknown TotalPattern");
}

BigInt combined_total_21_3(int n) {
  if (n < 1) throw std::invalid_argument("combined_total_21_3: n must be >= 1");
  return sum_over_i(n, 3, [](int i) { return BigInt(i * (i - 2)); });
}

BigInt combined_total_12_3(int n) {
  if (n < 1) throw std::invalid_argument("combined_total_12_3: n must be >= 1");
  return sum_over_i(n, 2, [](int i) { return BigInt(i * i); });
}

BigInt total_occurrences(TotalPattern p, int n) {
  if (n < 1) throw std::invalid_argument("total_occurrences: n must be >= 1");
  auto c_i1_2 = [](int i) { return binomial(i - 1, 2); };
  auto c_i_2_minus_1 = [](int i) { return BigInt(binomial(i, 2) - 1); };
  switch (p) {
    case TotalPattern::P32_1:
    case TotalPattern::P23_1:
      return sum_over_i(n, 3, c_i1_2);
    case TotalPattern::P31_2:
      return sum_over_i(n, 2, c_i_2_minus_1);
    case TotalPattern::P3_21:
      return sum_over_i(n, 3, c_i1_2);
    case TotalPattern::P3_12:
      return sum_over_i(n, 2, c_i_2_minus_1);
    case TotalPattern::P21_3:
      return combined_total_21_3(n) - total_occurrences(TotalPattern::P3_21, n);
    case TotalPattern::P12_3:
      return combined_total_12_3(n) - total_occurrences(TotalPattern::P3_12, n);
  }
  throw std::logic_error("unknown TotalPattern");
}

std::vector<LimitRow> limit_check(int n_lo, int n_hi) {
  if (n_lo < 3 || n_lo >= n_hi) {
    throw std::invalid_argument("limit_check: need 3 <= n_lo < n_hi");
  }
  std::vector<LimitRow> rows;
  Rational h = harmonic_number(n_lo - 1);
  for (int n = n_lo; n <= n_hi; ++n) {
    h += Rational(1, static_cast<unsigned long>(n));
    LimitRow row;
    row.n = n;
    const Rational n2 = Rational(n) * n;
    for (std::size_t i = 0; i < kAllPatterns.size(); ++i) {
      row.ratio[i] = average_with(to_table_pattern(kAllPatterns[i]), n, h) / n2;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool deviation_strictly_decreasing(PatternId p, int n_lo, int n_hi) {
  const int start = std::max(n_lo, 20);
  if (start >= n_hi) return true;
  std::size_t slot = 0;
  while (kAllPatterns[slot] != p) ++slot;
  const Rational twelfth(1, 12);
  Rational prev = -1;
  for (const LimitRow& row : limit_check(start, n_hi)) {
    const Rational dev = abs(row.ratio[slot] - twelfth);
    if (prev >= 0 && !(dev < prev)) return false;
    prev = dev;
  }
  return true;
}

}  // namespace flatperm
