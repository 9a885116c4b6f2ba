#include "flatperm/symmetric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "flatperm/q_analogs.hpp"

namespace flatperm {

namespace {

// Shared edge handling; returns true when the value is decided without a sum.
bool edge_value(long j, std::span<const QPoly> xs, EmptySetRule rule, QPoly* out) {
  if (j < 0) {
    *out = QPoly();
    return true;
  }
  if (j == 0) {
    *out = 1;
    return true;
  }
  if (xs.empty()) {
    *out = (rule == EmptySetRule::DeltaOne && j == 1) ? QPoly(1) : QPoly();
    return true;
  }
  return false;
}

}  // namespace

QPoly elementary_e(long j, std::span<const QPoly> xs, EmptySetRule rule) {
  QPoly edge;
  if (edge_value(j, xs, rule, &edge)) return edge;
  if (static_cast<std::size_t>(j) > xs.size()) return {};
  std::vector<QPoly> e(static_cast<std::size_t>(j) + 1);
  e[0] = 1;
  std::size_t seen = 0;
  for (const auto& x : xs) {
    ++seen;
    const std::size_t top = std::min(seen, e.size() - 1);
    for (std::size_t t = top; t >= 1; --t) e[t].add_product(x, e[t - 1]);
  }
  return e.back();
}

QPoly nonadjacent_e_prime(long j, std::span<const QPoly> xs, EmptySetRule rule) {
  QPoly edge;
  if (edge_value(j, xs, rule, &edge)) return edge;
  const auto width = static_cast<std::size_t>(j) + 1;
  // rows for prefixes of length m-2 and m-1
  std::vector<QPoly> two_back(width), one_back(width);
  two_back[0] = 1;
  one_back[0] = 1;
  for (const auto& x : xs) {
    std::vector<QPoly> cur = one_back;
    for (std::size_t t = 1; t < width; ++t) cur[t].add_product(x, two_back[t - 1]);
    two_back = std::move(one_back);
    one_back = std::move(cur);
  }
  return one_back.back();
}

QPoly complete_h(long j, std::span<const QPoly> xs, EmptySetRule rule) {
  QPoly edge;
  if (edge_value(j, xs, rule, &edge)) return edge;
  std::vector<QPoly> h(static_cast<std::size_t>(j) + 1);
  h[0] = 1;
  for (const auto& x : xs) {
    for (std::size_t t = 1; t < h.size(); ++t) h[t].add_product(x, h[t - 1]);
  }
  return h.back();
}

QPoly e_on_qints_closed_form(long j, long k) {
  if (k < 3 || j < 1) {
    throw std::invalid_argument("e_on_qints_closed_form: need k >= 3 and j >= 1");
  }
  const long m = k - 3;
  QBinomialTable qb;
  QPoly numerator;
  for (long a = 0; a <= m; ++a) {
    const BigInt c = binomial(m - a, m - j);
    if (c == 0) continue;
    QPoly term = qb.get(m, a).shifted(static_cast<std::size_t>(a * (a + 1) / 2));
    term *= (a % 2 == 0) ? c : BigInt(-c);
    numerator += term;
  }
  return exact_div(numerator, pow(QPoly::one_minus_q(), static_cast<unsigned>(j)));
}

QPoly h_on_qint_window_closed_form(long j, long k, long n) {
  if (n < 0 || j < 0 || j > k - 1) {
    throw std::invalid_argument("h_on_qint_window_closed_form: need n >= 0, 0 <= j <= k-1");
  }
  if (j == 0) return {};
  QBinomialTable qb;
  QPoly numerator;
  for (long i = 0; i <= j - 1; ++i) {
    const BigInt c = binomial(k - 2, j - 1 - i);
    if (c == 0) continue;
    QPoly term = qb.get(k - j - 1 + i, i).shifted(static_cast<std::size_t>(i * n));
    term *= (i % 2 == 0) ? c : BigInt(-c);
    numerator += term;
  }
  return exact_div(numerator, pow(QPoly::one_minus_q(), static_cast<unsigned>(j - 1)));
}

}  // namespace flatperm
