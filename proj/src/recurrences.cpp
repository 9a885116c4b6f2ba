#include "flatperm/recurrences.hpp"

#include <stdexcept>
#include <utility>

#include "flatperm/errors.hpp"
#include "flatperm/q_analogs.hpp"
#include "flatperm/symmetric.hpp"

namespace flatperm {

namespace {

using std::size_t;

size_t idx(long i) { return static_cast<size_t>(i); }

DistributionTable start_table(PatternId id, int n_max) {
  if (n_max < 1) throw std::invalid_argument("recurrence table: n_max must be >= 1");
  if (n_max > kRecurrenceCap) throw CapExceeded("recurrence table", n_max, kRecurrenceCap);
  DistributionTable t{id, std::vector<QPoly>(idx(n_max) + 1)};
  t.gs[0] = 1;
  t.gs[1] = 1;
  if (n_max >= 2) t.gs[2] = 2;
  return t;
}

QPoly q_pow(long k) { return QPoly::monomial(idx(k)); }

// Weighted elementary sum for 23-1:
// sum over 1 <= i_1 < ... < i_t <= m of (1 + [i_1]) [i_1] [i_2] ... [i_t].
// Rows are advanced one m at a time; row[t] holds the value for the current m.
class WeightedElementaryRow {
 public:
  explicit WeightedElementaryRow(int t_max) : row_(idx(t_max) + 1) {}

  void advance() {
    ++m_;
    const QPoly qm = q_int(m_);
    for (size_t t = row_.size() - 1; t >= 2; --t) row_[t].add_times_q_int(row_[t - 1], m_);
    if (row_.size() > 1) row_[1] += (1 + qm) * qm;
  }
  long m() const { return m_; }
  const QPoly& operator[](long t) const { return row_[idx(t)]; }

 private:
  long m_ = 0;
  std::vector<QPoly> row_;
};

// Weighted complete sums for 21-3 with upper bound h:
// level[t][v] = sum over v <= i_1 <= ... <= i_t <= h of [i_1]...[i_t] (h + 2 - i_t),
// level[0][v] = h + 2 - v. Advancing moves t -> t+1.
class WeightedCompleteLevels {
 public:
  explicit WeightedCompleteLevels(long h) : h_(h), level_(idx(h) + 2) {
    for (long v = 0; v <= h; ++v) level_[idx(v)] = QPoly(h + 2 - v);
  }

  void advance() {
    std::vector<QPoly> next(level_.size());
    for (long v = h_; v >= 0; --v) {
      next[idx(v)] = next[idx(v + 1)];
      next[idx(v)].add_times_q_int(level_[idx(v)], v);
    }
    level_ = std::move(next);
    ++t_;
  }
  long t() const { return t_; }
  const QPoly& at(long v) const { return level_[idx(v)]; }

 private:
  long h_;
  long t_ = 0;
  std::vector<QPoly> level_;  // index h+1 stays zero
};

// For a fixed upper index hi, sums over lo of q^lo h_t({[lo], ..., [hi]}).
// up_to_hi sums lo = 0..hi; up_to_hi_plus_one also includes the empty window
// lo = hi + 1, whose h_t is the plain empty sum delta_{t,0}.
struct WindowSums {
  std::vector<QPoly> up_to_hi;
  std::vector<QPoly> up_to_hi_plus_one;
};

WindowSums window_sums(long hi, long t_max) {
  WindowSums s{std::vector<QPoly>(idx(t_max) + 1), {}};
  std::vector<QPoly> h(idx(t_max) + 1);
  h[0] = 1;
  for (long lo = hi; lo >= 0; --lo) {
    // h_t({[lo..hi]}) = h_t({[lo+1..hi]}) + [lo] h_{t-1}({[lo..hi]})
    for (size_t t = 1; t < h.size(); ++t) h[t].add_times_q_int(h[t - 1], lo);
    for (size_t t = 0; t < h.size(); ++t) s.up_to_hi[t].add_times_q_int(h[t], 1, idx(lo));
  }
  s.up_to_hi_plus_one = s.up_to_hi;
  s.up_to_hi_plus_one[0] += q_pow(hi + 1);
  return s;
}

QPoly c_32_1_with(int n, int j, QBinomialTable& qb) {
  QPoly c;
  for (long a = 1; a <= j; ++a) {
    QPoly inner;
    for (long k = 0; k <= n - 2 - j; ++k) {
      inner += qb.get(j - 1 + k, a - 1) * binomial(j - a + k, k);
    }
    inner = inner.shifted(idx(a * (a - 1) / 2));
    if ((j - a) % 2 != 0) inner = -inner;
    c += inner;
  }
  return c;
}

QPoly c_12_3_with(int n, int j, QBinomialTable& qb) {
  QPoly c;
  for (long i = 0; i <= j - 1; ++i) {
    for (long k = 0; k <= n - 1 - j; ++k) {
      QPoly term = qb.get(k + i, i) * (2 * binomial(k + j - 1, j - i - 1)) -
                   qb.get(k + i - 1, i) * binomial(k + j - 2, j - i - 1);
      term = term.shifted(idx((i + 1) * (n - j - k - 1)));
      if (i % 2 != 0) term = -term;
      c += term;
    }
  }
  return c;
}

// g_n = sum_{j >= 1} coeffs[j] g_{n-j}
QPoly combine(const std::vector<QPoly>& coeffs, const std::vector<QPoly>& gs, int n) {
  std::vector<std::pair<const QPoly*, const QPoly*>> terms;
  for (int j = 1; j < n && idx(j) < coeffs.size(); ++j) {
    terms.emplace_back(&coeffs[idx(j)], &gs[idx(n - j)]);
  }
  return sum_of_products(terms);
}

std::vector<QPoly> q_int_list(long from, long to) {
  std::vector<QPoly> xs;
  for (long i = from; i <= to; ++i) xs.push_back(q_int(i));
  return xs;
}

}  // namespace

std::string_view name(PatternId id) {
  switch (id) {
    case PatternId::P12_3: return "12-3";
    case PatternId::P21_3: return "21-3";
    case PatternId::P23_1: return "23-1";
    case PatternId::P32_1: return "32-1";
    case PatternId::P31_2: return "31-2";
  }
  return "?";
}

const VincularPattern3& vincular(PatternId id) {
  switch (id) {
    case PatternId::P12_3: return patterns::p12_3;
    case PatternId::P21_3: return patterns::p21_3;
    case PatternId::P23_1: return patterns::p23_1;
    case PatternId::P32_1: return patterns::p32_1;
    case PatternId::P31_2: return patterns::p31_2;
  }
  throw std::logic_error("unknown PatternId");
}

std::optional<PatternId> parse_pattern_id(std::string_view text) {
  for (PatternId id : kAllPatterns) {
    if (name(id) == text) return id;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- 31-2

QPoly b_31_2(int n, int j) {
  std::vector<BigInt> c(idx(std::max(n - j, 0)));
  for (long k = 0; k <= n - j - 1; ++k) {
    BigInt num = binomial(n - j - 1 - k, j - 1) * binomial(j - 2 + k, j - 2) * (n - k);
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(j))) {
      throw IdentityViolation("b_{n,j} for 31-2 is not integral at n=" + std::to_string(n) +
                              ", j=" + std::to_string(j));
    }
    mpz_divexact_ui(c[idx(k)].get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(j));
  }
  return QPoly(std::move(c));
}

DistributionTable g_31_2(int n_max) {
  DistributionTable t = start_table(PatternId::P31_2, n_max);
  for (int n = 3; n <= n_max; ++n) {
    std::vector<QPoly> coeffs(idx(n / 2) + 1);
    coeffs[1] = n;
    for (int j = 2; j <= n / 2; ++j) {
      coeffs[idx(j)] = b_31_2(n, j).times_q_minus_one(static_cast<unsigned>(j - 1));
    }
    t.gs[idx(n)] = combine(coeffs, t.gs, n);
  }
  return t;
}

// ---------------------------------------------------------------- 32-1

QPoly c_32_1(int n, int j) {
  QBinomialTable qb;
  return c_32_1_with(n, j, qb);
}

QPoly b_32_1_symmetric(int n, int j) {
  QPoly b;
  for (long k = j + 2; k <= n; ++k) b += elementary_e(j - 1, q_int_list(1, k - 3));
  return b;
}

DistributionTable g_32_1(int n_max) {
  DistributionTable t = start_table(PatternId::P32_1, n_max);
  QBinomialTable qb;
  // e_row[s] = e_s([1], ..., [m]) for the current m
  std::vector<QPoly> e_row(idx(n_max) + 1);
  e_row[0] = 1;
  long m = 0;
  // running values of b_{n,j} (symmetric route) and c_{n,j} (q-binomial route)
  std::vector<QPoly> sym(idx(n_max) + 1);
  std::vector<QPoly> closed(idx(n_max) + 1);
  for (int n = 3; n <= n_max; ++n) {
    while (m < n - 3) {
      ++m;
      for (size_t s = e_row.size() - 1; s >= 1; --s) e_row[s].add_times_q_int(e_row[s - 1], m);
    }
    // k = n term of the e-sum
    for (int j = 2; j <= n - 2; ++j) sym[idx(j)] += e_row[idx(j - 1)];
    // k = n-2-j term of the inner q-binomial sum; c_{n-1,j} had k <= n-3-j
    for (long a = 1; a <= n - 2; ++a) {
      const QPoly base = qb.get(n - 3, a - 1).shifted(idx(a * (a - 1) / 2));
      for (long j = std::max(a, 2L); j <= n - 2; ++j) {
        const BigInt w = binomial(n - 2 - a, n - 2 - j);
        closed[idx(j)].add_scaled(base, (j - a) % 2 == 0 ? w : BigInt(-w));
      }
    }

    closed[1] = n;
    for (int j = 2; j <= n - 2; ++j) {
      const QPoly symmetric = sym[idx(j)].times_q_minus_one(static_cast<unsigned>(j - 1));
      if (closed[idx(j)] != symmetric) {
        throw IdentityViolation("32-1 coefficient routes disagree at n=" + std::to_string(n) +
                                ", j=" + std::to_string(j) + ": " + closed[idx(j)].to_string() +
                                " vs " + symmetric.to_string());
      }
    }
    t.gs[idx(n)] = combine(closed, t.gs, n);
  }
  return t;
}

// ---------------------------------------------------------------- 12-3

QPoly b_12_3(int n, int j) {
  QPoly b;
  for (long k = j + 1; k <= n; ++k) {
    // {[n-i] : j+1 <= i <= k} = {[n-k], ..., [n-j-1]}
    const auto wide = q_int_list(n - k, n - j - 1);
    const auto narrow = q_int_list(n - k, n - j - 2);
    QPoly a = complete_h(j - 1, wide, EmptySetRule::EmptySum) * BigInt(2) -
              complete_h(j - 1, narrow, EmptySetRule::EmptySum);
    b += a.shifted(idx(n - k));
  }
  return b;
}

QPoly c_12_3(int n, int j) {
  QBinomialTable qb;
  return c_12_3_with(n, j, qb);
}

DistributionTable g_12_3(int n_max) {
  DistributionTable t = start_table(PatternId::P12_3, n_max);
  // windows[h + 1] holds the sums for upper index h, h = -1 .. n_max-3
  std::vector<WindowSums> windows;
  for (long h = -1; h <= n_max - 3; ++h) windows.push_back(window_sums(h, n_max - h - 2));

  for (int n = 3; n <= n_max; ++n) {
    std::vector<QPoly> coeffs(idx(n));
    coeffs[1] = q_pow(n - 2) * BigInt(2) + q_int(n - 2);
    for (int j = 2; j <= n - 1; ++j) {
      const long h = n - j - 1;
      const long s = j - 1;
      QPoly b = windows[idx(h + 1)].up_to_hi[idx(s)] * BigInt(2) -
                windows[idx(h)].up_to_hi_plus_one[idx(s)];
      coeffs[idx(j)] = b.times_one_minus_q(static_cast<unsigned>(j - 1));
    }
    t.gs[idx(n)] = combine(coeffs, t.gs, n);
  }
  return t;
}

std::vector<CFormComparison> compare_12_3_c_form(int n_max) {
  const DistributionTable t = g_12_3(n_max);
  QBinomialTable qb;
  std::vector<CFormComparison> out;
  for (int n = 3; n <= n_max; ++n) {
    CFormComparison cmp;
    cmp.n = n;
    QPoly stated;
    cmp.coefficients_match = true;
    for (int j = 2; j <= n - 1; ++j) {
      const QPoly c = c_12_3_with(n, j, qb);
      stated.add_product(c, t[n - j]);
      if (c != b_12_3(n, j).times_one_minus_q(static_cast<unsigned>(j - 1))) {
        cmp.coefficients_match = false;
      }
    }
    cmp.stated_range_matches = stated == t[n];
    QPoly full = stated;
    full.add_product(c_12_3_with(n, 1, qb), t[n - 1]);
    cmp.with_j1_term_matches = full == t[n];
    out.push_back(cmp);
  }
  return out;
}

// ---------------------------------------------------------------- 23-1

QPoly b2_23_1(int n) {
  QPoly b;
  for (long k = 1; k <= n - 2; ++k) {
    const QPoly qk = q_int(k);
    b.add_product(qk, 1 + qk);
  }
  return b;
}

bool b2_23_1_rational_form_holds(int n) {
  const QPoly qm1 = QPoly::q_minus_one();
  const QPoly qp1{1, 1};
  const QPoly lhs = b2_23_1(n) * pow(qm1, 3) * qp1;
  QPoly rhs = QPoly{2, -1} * BigInt(n) * qm1 * qp1;
  rhs += QPoly{4, 1, -3, 1};
  rhs += QPoly{-3, 1} * q_pow(n - 1) * qp1;
  rhs += q_pow(2L * n - 2);
  return lhs == rhs;
}

DistributionTable g_23_1(int n_max) {
  DistributionTable t = start_table(PatternId::P23_1, n_max);
  WeightedElementaryRow weighted(std::max(n_max - 2, 1));
  std::vector<QPoly> sums(idx(n_max) + 1);  // sums[j] = b_{n,j}
  for (int n = 3; n <= n_max; ++n) {
    const QPoly qn2 = q_int(n - 2);
    sums[2].add_product(qn2, 1 + qn2);
    while (weighted.m() < n - 3) weighted.advance();
    for (int j = 3; j <= n - 1; ++j) sums[idx(j)].add_product(qn2, weighted[j - 2]);

    std::vector<QPoly> coeffs(idx(n));
    coeffs[1] = 1 + q_int(n - 1);
    for (int j = 2; j <= n - 1; ++j) {
      coeffs[idx(j)] = sums[idx(j)].times_one_minus_q(static_cast<unsigned>(j - 1));
    }
    t.gs[idx(n)] = combine(coeffs, t.gs, n);
  }
  return t;
}

// ---------------------------------------------------------------- 21-3

QPoly b2_21_3(int n) {
  QPoly b;
  for (long k = 3; k <= n; ++k) b += q_int(n - k) * BigInt(k - 1);
  return b;
}

bool b2_21_3_rational_form_holds(int n) {
  if (n < 3) return false;
  const QPoly qm1 = QPoly::q_minus_one();
  const QPoly lhs = b2_21_3(n) * pow(qm1, 3) * BigInt(2);
  QPoly rhs = -(qm1 * qm1 * BigInt(n) * BigInt(n));
  rhs += QPoly{-3, 1} * BigInt(n) * qm1;
  rhs += QPoly{0, 2} * (q_pow(n - 2) * BigInt(2) - q_pow(n - 3) + QPoly{-2, 1});
  return lhs == rhs;
}

DistributionTable g_21_3(int n_max) {
  DistributionTable t = start_table(PatternId::P21_3, n_max);
  // b[n][j] = level_{h}[j-1] at v = 0 with h = n - j - 1
  std::vector<std::vector<QPoly>> b(idx(n_max) + 1, std::vector<QPoly>(idx(n_max) + 1));
  for (long h = 0; h <= n_max - 3; ++h) {
    WeightedCompleteLevels levels(h);
    for (long j = 2; h + j + 1 <= n_max; ++j) {
      levels.advance();
      b[idx(h + j + 1)][idx(j)] = levels.at(0);
    }
  }
  for (int n = 3; n <= n_max; ++n) {
    std::vector<QPoly> coeffs(idx(n));
    coeffs[1] = n;
    for (int j = 2; j <= n - 1; ++j) {
      coeffs[idx(j)] = b[idx(n)][idx(j)].times_q_minus_one(static_cast<unsigned>(j - 1));
    }
    t.gs[idx(n)] = combine(coeffs, t.gs, n);
  }
  return t;
}

DistributionTable distribution_table(PatternId id, int n_max) {
  switch (id) {
    case PatternId::P12_3: return g_12_3(n_max);
    case PatternId::P21_3: return g_21_3(n_max);
    case PatternId::P23_1: return g_23_1(n_max);
    case PatternId::P32_1: return g_32_1(n_max);
    case PatternId::P31_2: return g_31_2(n_max);
  }
  throw std::logic_error("unknown PatternId");
}

// ---------------------------------------------------------------- refined

RefinedTable::RefinedTable(PatternId pattern, int n_max)
    : pattern_(pattern),
      n_max_(n_max),
      totals_(distribution_table(pattern, n_max)),
      values_(idx(n_max) + 1, std::vector<QPoly>(idx(n_max) + 1)) {
  switch (pattern) {
    case PatternId::P31_2: build_31_2(); break;
    case PatternId::P32_1: build_32_1(); break;
    case PatternId::P12_3: build_12_3(); break;
    case PatternId::P23_1: build_23_1(); break;
    case PatternId::P21_3: build_21_3(); break;
  }
}

const QPoly& RefinedTable::at(int n, int k) const {
  if (n < 2 || n > n_max_ || k < 2 || k > n) {
    throw std::invalid_argument("refined g_n(1k) needs 2 <= k <= n <= " + std::to_string(n_max_) +
                                ", got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  return values_[idx(n)][idx(k)];
}

void RefinedTable::set(int n, int k, QPoly value) { values_[idx(n)][idx(k)] = std::move(value); }

void RefinedTable::require(bool ok, const std::string& what, int n, int k) const {
  if (!ok) {
    throw IdentityViolation(std::string(name(pattern_)) + " refined " + what + " fails at n=" +
                            std::to_string(n) + ", k=" + std::to_string(k));
  }
}

void RefinedTable::build_31_2() {
  const auto& g = totals_;
  const QPoly qm1 = QPoly::q_minus_one();
  for (int n = 2; n <= n_max_; ++n) {
    set(n, 2, g[n - 1] * BigInt(2));
    if (n >= 3) set(n, 3, g[n - 1]);
    if (n >= 4) set(n, 4, g[n - 1] + qm1 * BigInt(2) * g[n - 2]);
    for (int k = 5; k <= n; ++k) {
      set(n, k, QPoly{1, 1} * at(n, k - 1) - QPoly{0, 1} * at(n, k - 2) + qm1 * at(n - 1, k - 2));
    }
  }
}

void RefinedTable::build_32_1() {
  const auto& g = totals_;
  for (int n = 2; n <= n_max_; ++n) {
    set(n, 2, g[n - 1] * BigInt(2));
    if (n >= 3) set(n, 3, g[n - 1]);
    for (int k = 4; k <= n; ++k) {
      set(n, k, at(n, k - 1) + (q_pow(k - 3) - 1) * at(n - 1, k - 1));
    }
  }
}

void RefinedTable::build_12_3() {
  const auto& g = totals_;
  for (int n = 2; n <= n_max_; ++n) {
    set(n, 2, q_pow(n - 2) * BigInt(2) * g[n - 1]);
    for (int k = 3; k <= n; ++k) {
      QPoly sum;
      for (int j = 1; j <= k - 1; ++j) {
        const auto wide = q_int_list(n - k, n - j - 1);
        const auto narrow = q_int_list(n - k, n - j - 2);
        QPoly a = complete_h(j - 1, wide, EmptySetRule::EmptySum) * BigInt(2) -
                  complete_h(j - 1, narrow, EmptySetRule::EmptySum);
        sum.add_product(a.times_one_minus_q(static_cast<unsigned>(j - 1)), g[n - j]);
      }
      set(n, k, sum.shifted(idx(n - k)));
    }
    if (n >= 3) {
      const QPoly p = q_pow(n - 3);
      require(at(n, 3) == p * g[n - 1] - p * BigInt(2) * (p - 1) * g[n - 2], "initial value", n, 3);
    }
    for (int k = 4; k <= n; ++k) {
      // q g_n(1k) = g_n(1(k-1)) + q (1 - q^{n-k}) g_{n-1}(1(k-1))
      const QPoly rhs = at(n, k - 1) + (1 - q_pow(n - k)).shifted(1) * at(n - 1, k - 1);
      require(at(n, k).shifted(1) == rhs, "difference recurrence", n, k);
    }
  }
}

void RefinedTable::build_23_1() {
  const auto& g = totals_;
  const QPoly omq = QPoly::one_minus_q();
  std::vector<std::vector<QPoly>> weighted;  // weighted[m][t]
  {
    WeightedElementaryRow row(std::max(n_max_, 1));
    weighted.emplace_back(idx(n_max_) + 1);
    for (int m = 1; m <= n_max_; ++m) {
      row.advance();
      std::vector<QPoly> snapshot(idx(n_max_) + 1);
      for (int s = 0; s <= n_max_; ++s) snapshot[idx(s)] = row[s];
      weighted.push_back(std::move(snapshot));
    }
  }
  for (int n = 2; n <= n_max_; ++n) {
    set(n, 2, g[n - 1] * BigInt(2));
    for (int k = 3; k <= n; ++k) {
      QPoly sum;
      for (int j = 2; j <= k - 1; ++j) {
        const QPoly a = (j == 2) ? 1 + q_int(k - 2) : weighted[idx(k - 3)][idx(j - 2)];
        sum.add_product(a.times_one_minus_q(static_cast<unsigned>(j - 1)), g[n - j]);
      }
      set(n, k, q_pow(k - 2) * g[n - 1] + sum.times_q_int(k - 2));
    }
    if (n >= 3) {
      require(at(n, 3) == QPoly{0, 1} * g[n - 1] + omq * BigInt(2) * g[n - 2], "initial value", n, 3);
    }
    for (int k = 4; k <= n; ++k) {
      // [k-3] g_n(1k) = -q^{k-3} g_{n-1} + [k-2] g_n(1(k-1)) + (1-q)[k-2][k-3] g_{n-1}(1(k-1))
      const QPoly rhs = -(q_pow(k - 3) * g[n - 1]) + at(n, k - 1).times_q_int(k - 2) +
                        (omq * at(n - 1, k - 1)).times_q_int(k - 2).times_q_int(k - 3);
      require(at(n, k).times_q_int(k - 3) == rhs, "difference recurrence", n, k);
    }
  }
}

void RefinedTable::build_21_3() {
  const auto& g = totals_;
  const QPoly qm1 = QPoly::q_minus_one();
  for (int n = 2; n <= n_max_; ++n) {
    set(n, 2, g[n - 1] * BigInt(2));
    for (int k = 3; k <= n; ++k) {
      QPoly sum = g[n - 2] * BigInt(k - 1) * qm1;
      for (int j = 3; j <= k - 1; ++j) {
        const long h = n - j - 1;
        WeightedCompleteLevels levels(h);
        for (int s = 0; s < j - 2; ++s) levels.advance();
        sum.add_product(levels.at(n - k).times_q_minus_one(static_cast<unsigned>(j - 1)), g[n - j]);
      }
      set(n, k, g[n - 1] + sum.times_q_int(n - k));
    }
    if (n >= 3) {
      require(at(n, 3) == g[n - 1] + (qm1 * BigInt(2) * g[n - 2]).times_q_int(n - 3), "initial value",
              n, 3);
    }
    for (int k = 4; k <= n; ++k) {
      // [n-k+1] g_n(1k) = q^{n-k} g_{n-1} + [n-k] g_n(1(k-1)) + (q-1)[n-k][n-k+1] g_{n-1}(1(k-1))
      const QPoly rhs = q_pow(n - k) * g[n - 1] + at(n, k - 1).times_q_int(n - k) +
                        (qm1 * at(n - 1, k - 1)).times_q_int(n - k).times_q_int(n - k + 1);
      require(at(n, k).times_q_int(n - k + 1) == rhs, "difference recurrence", n, k);
    }
  }
}

QPoly refined_g1k(PatternId pattern, int n, int k) {
  if (k < 2 || k > n) {
    throw std::invalid_argument("refined_g1k: k=" + std::to_string(k) + " outside [2, " +
                                std::to_string(n) + "]");
  }
  return RefinedTable(pattern, n).at(n, k);
}

}  // namespace flatperm
