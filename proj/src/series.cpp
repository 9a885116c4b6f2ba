#include "flatperm/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flatperm/closed_forms.hpp"
#include "flatperm/errors.hpp"

namespace flatperm {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

PowerSeries PowerSeries::polynomial(std::initializer_list<long> coeffs, std::size_t order) {
  return polynomial(std::vector<long>(coeffs), order);
}

PowerSeries PowerSeries::polynomial(const std::vector<long>& coeffs, std::size_t order) {
  PowerSeries s(order);
  std::size_t i = 0;
  for (long c : coeffs) {
    if (i < order) s.coeffs_[i] = c;
    ++i;
  }
  return s;
}

PowerSeries PowerSeries::x(std::size_t order) { return polynomial({0, 1}, order); }

const Rational& PowerSeries::operator[](std::size_t i) const {
  if (i >= coeffs_.size()) {
    throw std::out_of_range("coefficient x^" + std::to_string(i) + " is past the series order " +
                            std::to_string(coeffs_.size()));
  }
  return coeffs_[i];
}

void PowerSeries::set(std::size_t i, const Rational& v) {
  if (i >= coeffs_.size()) throw std::out_of_range("set past the series order");
  coeffs_[i] = v;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  PowerSeries s(std::min(order, coeffs_.size()));
  std::copy_n(coeffs_.begin(), s.order(), s.coeffs_.begin());
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < r.order(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j < r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

bool agree(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

PowerSeries exact_div(const PowerSeries& a, const PowerSeries& b) {
  if (b.order() == 0 || sgn(b[0]) == 0) {
    throw DomainError("series division by a divisor with zero constant term");
  }
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = a[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= b[j] * q[i - j];
    q[i] = acc / b[0];
  }
  return PowerSeries(std::move(q));
}

PowerSeries derive(const PowerSeries& s) {
  if (s.order() == 0) return s;
  std::vector<Rational> d(s.order() - 1);
  for (std::size_t i = 1; i < s.order(); ++i) d[i - 1] = s[i] * static_cast<unsigned long>(i);
  return PowerSeries(std::move(d));
}

PowerSeries integrate(const PowerSeries& s) {
  std::vector<Rational> r(s.order() + 1);
  for (std::size_t i = 0; i < s.order(); ++i) {
    r[i + 1] = s[i] / Rational(static_cast<unsigned long>(i + 1));
  }
  return PowerSeries(std::move(r));
}

PowerSeries exp_series(const PowerSeries& s) {
  if (s.order() == 0) return s;
  if (sgn(s[0]) != 0) throw DomainError("exp_series needs a zero constant term");
  // E' = s' E, so m E_m = sum_{k=1}^{m} k s_k E_{m-k}
  std::vector<Rational> e(s.order());
  e[0] = 1;
  for (std::size_t m = 1; m < e.size(); ++m) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= m; ++k) acc += s[k] * e[m - k] * static_cast<unsigned long>(k);
    e[m] = acc / Rational(static_cast<unsigned long>(m));
  }
  return PowerSeries(std::move(e));
}

PowerSeries sqrt_series(const PowerSeries& s) {
  if (s.order() == 0) return s;
  if (s[0] != 1) throw DomainError("sqrt_series needs constant term 1");
  // Newton: y <- (y + s / y) / 2, doubling the number of correct terms
  PowerSeries y = PowerSeries::polynomial({1}, 1);
  std::size_t prec = 1;
  const Rational half(1, 2);
  while (prec < s.order()) {
    prec = std::min(2 * prec, s.order());
    PowerSeries wide(prec);
    for (std::size_t i = 0; i < y.order(); ++i) wide.set(i, y[i]);
    y = (wide + exact_div(s.truncated(prec), wide)) * half;
  }
  return y;
}

PowerSeries pow(const PowerSeries& s, unsigned e) {
  PowerSeries r = PowerSeries::polynomial({1}, s.order());
  PowerSeries base = s;
  while (e > 0) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return r;
}

PowerSeries divide_by_x_power(const PowerSeries& s, std::size_t k) {
  if (k > s.order()) throw std::invalid_argument("divide_by_x_power: shift past the order");
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(s[i]) != 0) {
      throw IdentityViolation("series is not divisible by x^" + std::to_string(k) +
                              ": coefficient of x^" + std::to_string(i) + " is " + to_string(s[i]));
    }
  }
  return PowerSeries(std::vector<Rational>(s.coeffs().begin() + static_cast<long>(k), s.coeffs().end()));
}

namespace {

void check_order(std::size_t order, std::size_t lowest, const char* what) {
  if (order < lowest) {
    throw std::invalid_argument(std::string(what) + ": order must be >= " + std::to_string(lowest));
  }
  if (order > kMaxSeriesOrder) {
    throw CapExceeded(what, static_cast<int>(order), static_cast<int>(kMaxSeriesOrder), "order");
  }
}

struct AlgebraicParts {
  std::size_t x_power;  // a_r and b_r carry a 1/x^x_power prefactor
  std::vector<long> a;
  std::vector<long> b;
};

AlgebraicParts parts_31_2(int r) {
  switch (r) {
    case 0:
      return {0, {0, 1}, {0, -1, -2}};
    case 1:
      // (3x - 1)(1 - 5x + 2x^2) expanded
      return {1, {-1, 8, -17, 6}, {1, -6, 7}};
    case 2:
      return {1, {1, -12, 50, -76, 22}, {-1, 10, -32, 28}};
    case 3:
      return {2, {2, -37, 270, -972, 1748, -1346, 220}, {-2, 33, -208, 614, -824, 368}};
    default:
      throw std::invalid_argument("expand_G_r_31_2: r must be in 0..3");
  }
}

}  // namespace

PowerSeries expand_G_r_31_2(int r, std::size_t order) {
  check_order(order, 4, "expand_G_r_31_2");
  const AlgebraicParts parts = parts_31_2(r);
  const std::size_t work = order + parts.x_power;
  const PowerSeries root = sqrt_series(PowerSeries::polynomial({1, -4}, work));
  const PowerSeries numerator =
      PowerSeries::polynomial(parts.a, work) + PowerSeries::polynomial(parts.b, work) * root;
  const PowerSeries denominator = pow(root, static_cast<unsigned>(2 * r + 1));
  return exact_div(divide_by_x_power(numerator, parts.x_power), denominator.truncated(order));
}

PowerSeries egf_from_sequence(const std::vector<BigInt>& a) {
  std::vector<Rational> c(a.size());
  BigInt f = 1;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (n > 0) f *= static_cast<unsigned long>(n);
    c[n] = make_rational(a[n], f);
  }
  return PowerSeries(std::move(c));
}

BigInt egf_coefficient(const PowerSeries& s, std::size_t n) {
  const Rational v = s[n] * Rational(factorial(n));
  if (v.get_den() != 1) {
    throw IdentityViolation("n! [x^n] is not an integer at n=" + std::to_string(n) + ": " +
                            to_string(v));
  }
  return v.get_num();
}

namespace {

// e^x - 1
PowerSeries exp_minus_one(std::size_t order) {
  return exp_series(PowerSeries::x(order)) - PowerSeries::polynomial({1}, order);
}

}  // namespace

PowerSeries expand_egf_21_3_avoid(std::size_t order) {
  check_order(order, 2, "expand_egf_21_3_avoid");
  const PowerSeries inner = exp_minus_one(order) + PowerSeries::polynomial({0, 2}, order);
  return exp_series(inner) * Rational(2);
}

PowerSeries expand_egf_12_3_avoid(std::size_t order) {
  check_order(order, 2, "expand_egf_12_3_avoid");
  const SpecialNumberCache cache(static_cast<int>(order));
  std::vector<BigInt> comp(order);
  for (std::size_t n = 0; n < order; ++n) comp[n] = cache.complementary_bell(static_cast<int>(n));
  const PowerSeries e_one_minus_e = egf_from_sequence(comp);

  const PowerSeries one = PowerSeries::polynomial({1}, order);
  const PowerSeries ex_plus_one = exp_series(PowerSeries::x(order)) + one;
  const PowerSeries bell_egf = exp_series(exp_minus_one(order));
  const PowerSeries tail = one - integrate(e_one_minus_e).truncated(order);
  return ex_plus_one * bell_egf * tail * Rational(2) - one * Rational(2);
}

}  // namespace flatperm
