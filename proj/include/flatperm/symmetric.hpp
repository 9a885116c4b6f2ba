#pragma once

#include <span>

#include "flatperm/qpoly.hpp"

namespace flatperm {

/// How a symmetric function treats an empty argument list.
///
/// DeltaOne: s_0(X) = 1, s_j(X) = 0 for j < 0 and s_j(empty) = delta_{j,1}
/// (so s_1 of the empty list is 1). EmptySum: the plain value of the
/// defining sum, 1 for j = 0 and 0 otherwise.
enum class EmptySetRule { DeltaOne, EmptySum };

/// e_j(X): sum over products of j distinct entries.
QPoly elementary_e(long j, std::span<const QPoly> xs, EmptySetRule rule = EmptySetRule::DeltaOne);

/// e'_j(X): sum over products of j pairwise non-adjacent entries (index gaps >= 2).
QPoly nonadjacent_e_prime(long j, std::span<const QPoly> xs,
                          EmptySetRule rule = EmptySetRule::DeltaOne);

/// h_j(X): sum over products of j entries with repetition.
QPoly complete_h(long j, std::span<const QPoly> xs, EmptySetRule rule = EmptySetRule::DeltaOne);

/// Closed form for e_j([1], ..., [k-3]) as an alternating q-binomial sum
/// over (1-q)^j. k >= 3, j >= 1. The division is exact or IdentityViolation.
QPoly e_on_qints_closed_form(long j, long k);

/// Closed form for h_{j-1}({[n+i] : 0 <= i <= k-j-1}) as an alternating
/// q-binomial sum over (1-q)^{j-1}. n >= 0, 0 <= j <= k-1.
QPoly h_on_qint_window_closed_form(long j, long k, long n);

}  // namespace flatperm
