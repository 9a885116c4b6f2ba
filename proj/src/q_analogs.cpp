#include "flatperm/q_analogs.hpp"

#include <stdexcept>

namespace flatperm {

QPoly q_int(long n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument " + std::to_string(n));
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QPoly q_factorial(long m) {
  if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPoly r = 1;
  for (long i = 2; i <= m; ++i) r = r.times_q_int(i);
  return r;
}

QPoly q_binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return {};
  QBinomialTable table;
  return table.get(n, k);
}

const QPoly& QBinomialTable::get(long n, long k) {
  if (n < 0 || k < 0 || k > n) return zero_;
  while (static_cast<long>(rows_.size()) <= n) {
    const long m = static_cast<long>(rows_.size());
    std::vector<QPoly> row(static_cast<std::size_t>(m + 1));
    row[0] = 1;
    row[static_cast<std::size_t>(m)] = 1;
    for (long j = 1; j < m; ++j) {
      const auto& prev = rows_[static_cast<std::size_t>(m - 1)];
      row[static_cast<std::size_t>(j)] =
          prev[static_cast<std::size_t>(j - 1)] + prev[static_cast<std::size_t>(j)].shifted(static_cast<std::size_t>(j));
    }
    rows_.push_back(std::move(row));
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace flatperm
