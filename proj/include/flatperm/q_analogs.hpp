#pragma once

#include <vector>

#include "flatperm/qpoly.hpp"

namespace flatperm {

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0. Negative n is rejected.
QPoly q_int(long n);

/// [m]! = [1][2]...[m]; [0]! = 1.
QPoly q_factorial(long m);

/// Gaussian binomial; zero outside 0 <= k <= n.
QPoly q_binomial(long n, long k);

/// Rows of Gaussian binomials built by the q-Pascal rule
/// [n, k] = [n-1, k-1] + q^k [n-1, k], grown on demand.
class QBinomialTable {
 public:
  const QPoly& get(long n, long k);

 private:
  std::vector<std::vector<QPoly>> rows_;
  QPoly zero_;
};

}  // namespace flatperm
