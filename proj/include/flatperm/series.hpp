#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "flatperm/bigint.hpp"

namespace flatperm {

inline constexpr std::size_t kDefaultSeriesOrder = 24;
inline constexpr std::size_t kMaxSeriesOrder = 64;

/// Power series in x over the rationals, known modulo x^order.
/// Binary operations keep the smaller of the two orders.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  /// Coefficients c[0..], order = c.size().
  explicit PowerSeries(std::vector<Rational> coeffs);
  /// A polynomial in x with integer coefficients, truncated to order.
  static PowerSeries polynomial(std::initializer_list<long> coeffs, std::size_t order);
  static PowerSeries polynomial(const std::vector<long>& coeffs, std::size_t order);
  /// The monomial x, truncated to order.
  static PowerSeries x(std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Throws std::out_of_range at or past the order.
  const Rational& operator[](std::size_t i) const;
  void set(std::size_t i, const Rational& v);

  PowerSeries truncated(std::size_t order) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries operator-() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// True when a and b agree on every coefficient below the smaller order.
bool agree(const PowerSeries& a, const PowerSeries& b);

/// a / b; throws DomainError when b has zero constant term.
PowerSeries exact_div(const PowerSeries& a, const PowerSeries& b);
/// Termwise derivative; the order drops by one.
PowerSeries derive(const PowerSeries& s);
/// Antiderivative with zero constant term; the order grows by one.
PowerSeries integrate(const PowerSeries& s);
/// Requires s(0) = 0 (DomainError otherwise).
PowerSeries exp_series(const PowerSeries& s);
/// Requires s(0) = 1 (DomainError otherwise); the root with constant term 1.
PowerSeries sqrt_series(const PowerSeries& s);
PowerSeries pow(const PowerSeries& s, unsigned e);
/// s / x^k. Throws IdentityViolation if one of the first k coefficients is nonzero.
PowerSeries divide_by_x_power(const PowerSeries& s, std::size_t k);

/// (a_r + b_r sqrt(1-4x)) / sqrt(1-4x)^{2r+1}, whose x^n coefficient counts
/// permutations of [n] with exactly r occurrences of 31-2 (n >= 3).
/// Requires r <= 3 and 4 <= order <= kMaxSeriesOrder.
PowerSeries expand_G_r_31_2(int r, std::size_t order = kDefaultSeriesOrder);

/// 2 e^{e^x + 2x - 1}: n! [x^n] is the number of 21-3 avoiders of length n+2.
PowerSeries expand_egf_21_3_avoid(std::size_t order = kDefaultSeriesOrder);

/// 2 (e^x + 1) e^{e^x - 1} (1 - int_0^x e^{1-e^t} dt) - 2, with e^{1-e^t}
/// taken from the complementary Bell numbers: n! [x^n] is the number of
/// 12-3 avoiders of length n+2.
PowerSeries expand_egf_12_3_avoid(std::size_t order = kDefaultSeriesOrder);

/// sum_n a_n x^n / n! for the given integer sequence.
PowerSeries egf_from_sequence(const std::vector<BigInt>& a);

/// n! [x^n] s; throws IdentityViolation if the result is not an integer.
BigInt egf_coefficient(const PowerSeries& s, std::size_t n);

}  // namespace flatperm
