#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flatperm/bigint.hpp"

namespace flatperm {

/// Polynomial in q with arbitrary-precision integer coefficients.
///
/// Dense storage, index = exponent. The coefficient vector never ends in a
/// zero, so the zero polynomial has no coefficients and equality is plain
/// vector equality.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): constants mix freely
  explicit QPoly(const BigInt& c);
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);

  /// c * q^k
  static QPoly monomial(std::size_t k, const BigInt& c = 1);
  /// q - 1
  static QPoly q_minus_one() { return QPoly{-1, 1}; }
  /// 1 - q
  static QPoly one_minus_q() { return QPoly{1, -1}; }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^i (zero past the degree).
  BigInt coeff(std::size_t i) const;
  /// Coefficient of q^0.
  BigInt constant_term() const { return coeff(0); }

  BigInt eval(const BigInt& q) const;
  BigInt at_one() const;
  QPoly derivative() const;
  /// p'(1) without materializing the derivative.
  BigInt derivative_at_one() const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  QPoly& operator*=(const BigInt& c);

  /// this += a * b, accumulating in place.
  void add_product(const QPoly& a, const QPoly& b);
  /// this += c * p
  void add_scaled(const QPoly& p, const BigInt& c);
  /// this += q^shift [m] p, without a temporary.
  void add_times_q_int(const QPoly& p, long m, std::size_t shift = 0);

  /// p * q^k
  QPoly shifted(std::size_t k) const;
  /// p * [m] for m >= 0, via a sliding window sum.
  QPoly times_q_int(long m) const;
  /// p * (1 - q)^e
  QPoly times_one_minus_q(unsigned e) const;
  /// p * (q - 1)^e
  QPoly times_q_minus_one(unsigned e) const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigInt& c) { return a *= c; }
  friend QPoly operator*(const BigInt& c, QPoly a) { return a *= c; }
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Human-readable form, highest power first: "4q + 2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

QPoly pow(const QPoly& base, unsigned exponent);

/// sum of a_i * b_i, packed into a single big-integer multiply-add chain and
/// unpacked once at the end. Null or zero operands are skipped.
QPoly sum_of_products(std::span<const std::pair<const QPoly*, const QPoly*>> terms);

/// Quotient a / b. Throws IdentityViolation if the remainder is nonzero or
/// the quotient is not integral; std::invalid_argument if b is zero.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// True iff a = b * c for some integer polynomial c.
bool divides(const QPoly& b, const QPoly& a);

}  // namespace flatperm
