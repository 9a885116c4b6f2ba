#include "flatperm/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "flatperm/errors.hpp"

namespace flatperm {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(std::size_t k, const BigInt& c) {
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(k + 1, BigInt(0));
  p.coeffs_[k] = c;
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += *it;
  }
  return acc;
}

BigInt QPoly::at_one() const {
  BigInt acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
  return QPoly(std::move(d));
}

BigInt QPoly::derivative_at_one() const {
  BigInt acc = 0;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    mpz_addmul_ui(acc.get_mpz_t(), coeffs_[i].get_mpz_t(), i);
  }
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& other) {
  *this = *this * other;
  return *this;
}

QPoly& QPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

namespace {

// Below this many coefficients in the shorter factor, schoolbook is faster.
constexpr std::size_t kKroneckerThreshold = 12;

std::size_t max_bits(const std::vector<BigInt>& c) {
  std::size_t bits = 0;
  for (const auto& x : c) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  return bits;
}

// sum of c[i] 2^{k (i - lo)} for lo <= i < hi, split in halves so every
// shift and add works on numbers of balanced size
void pack(const std::vector<BigInt>& c, std::size_t lo, std::size_t hi, std::size_t k, mpz_t out) {
  if (hi - lo == 1) {
    mpz_set(out, c[lo].get_mpz_t());
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  mpz_t high;
  mpz_init(high);
  pack(c, mid, hi, k, high);
  pack(c, lo, mid, k, out);
  mpz_mul_2exp(high, high, k * (mid - lo));
  mpz_add(out, out, high);
  mpz_clear(high);
}

// Inverse of pack for digits in (-2^{k-1}, 2^{k-1}): adds digit i to acc[lo + i].
// v is consumed.
void unpack_add(mpz_t v, std::size_t count, std::size_t k, BigInt* acc) {
  if (count == 1) {
    mpz_add(acc->get_mpz_t(), acc->get_mpz_t(), v);
    return;
  }
  const std::size_t half = count / 2;
  const std::size_t bits = k * half;
  mpz_t low;
  mpz_init(low);
  mpz_fdiv_r_2exp(low, v, bits);
  if (mpz_sizeinbase(low, 2) == bits && mpz_sgn(low) != 0) {
    // low >= 2^{bits-1}: take the balanced representative
    mpz_t pw;
    mpz_init(pw);
    mpz_setbit(pw, bits);
    mpz_sub(low, low, pw);
    mpz_clear(pw);
  }
  mpz_sub(v, v, low);
  mpz_fdiv_q_2exp(v, v, bits);
  unpack_add(low, half, k, acc);
  unpack_add(v, count - half, k, acc + half);
  mpz_clear(low);
}

}  // namespace

void QPoly::add_product(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < need) coeffs_.resize(need);
  const std::size_t shorter = std::min(a.coeffs_.size(), b.coeffs_.size());
  if (shorter >= kKroneckerThreshold) {
    // Evaluate both at q = 2^k with k wide enough that no product
    // coefficient overflows its slot, multiply once, read the digits back.
    std::size_t log_len = 0;
    while ((std::size_t{1} << log_len) < shorter) ++log_len;
    const std::size_t k = max_bits(a.coeffs_) + max_bits(b.coeffs_) + log_len + 2;
    mpz_t pa, pb;
    mpz_init(pa);
    mpz_init(pb);
    pack(a.coeffs_, 0, a.coeffs_.size(), k, pa);
    pack(b.coeffs_, 0, b.coeffs_.size(), k, pb);
    mpz_mul(pa, pa, pb);
    unpack_add(pa, need, k, coeffs_.data());
    mpz_clear(pa);
    mpz_clear(pb);
  } else {
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
      if (mpz_sgn(ai) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        mpz_addmul(coeffs_[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
      }
    }
  }
  trim();
}

void QPoly::add_scaled(const QPoly& p, const BigInt& c) {
  if (p.is_zero() || c == 0) return;
  if (coeffs_.size() < p.coeffs_.size()) coeffs_.resize(p.coeffs_.size());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    mpz_addmul(coeffs_[i].get_mpz_t(), p.coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  trim();
}

QPoly sum_of_products(std::span<const std::pair<const QPoly*, const QPoly*>> terms) {
  std::size_t k = 0;
  std::size_t len = 0;
  std::size_t live = 0;
  for (const auto& [a, b] : terms) {
    if (a == nullptr || b == nullptr || a->is_zero() || b->is_zero()) continue;
    ++live;
    const std::size_t shorter = std::min(a->coeffs().size(), b->coeffs().size());
    k = std::max(k, max_bits(a->coeffs()) + max_bits(b->coeffs()) +
                        mpz_sizeinbase(BigInt(shorter).get_mpz_t(), 2));
    len = std::max(len, a->coeffs().size() + b->coeffs().size() - 1);
  }
  if (live == 0) return {};
  k += mpz_sizeinbase(BigInt(live).get_mpz_t(), 2) + 2;

  mpz_t acc, pa, pb;
  mpz_init(acc);
  mpz_init(pa);
  mpz_init(pb);
  for (const auto& [a, b] : terms) {
    if (a == nullptr || b == nullptr || a->is_zero() || b->is_zero()) continue;
    pack(a->coeffs(), 0, a->coeffs().size(), k, pa);
    pack(b->coeffs(), 0, b->coeffs().size(), k, pb);
    mpz_addmul(acc, pa, pb);
  }
  std::vector<BigInt> out(len);
  unpack_add(acc, len, k, out.data());
  mpz_clear(acc);
  mpz_clear(pa);
  mpz_clear(pb);
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.add_product(a, b);
  return r;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> c(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<long>(k));
  return QPoly(std::move(c));
}

QPoly QPoly::times_q_int(long m) const {
  if (m < 0) throw std::invalid_argument("times_q_int: negative q-integer");
  if (m == 0 || is_zero()) return {};
  const std::size_t len = coeffs_.size();
  const auto width = static_cast<std::size_t>(m);
  std::vector<BigInt> out(len + width - 1);
  BigInt window = 0;
  // out[i] = sum_{t = i-m+1}^{i} p[t]
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < len) window += coeffs_[i];
    if (i >= width) window -= coeffs_[i - width];
    out[i] = window;
  }
  return QPoly(std::move(out));
}

void QPoly::add_times_q_int(const QPoly& p, long m, std::size_t shift) {
  if (m < 0) throw std::invalid_argument("add_times_q_int: negative q-integer");
  if (m == 0 || p.is_zero()) return;
  if (&p == this) {
    const QPoly copy = p;
    add_times_q_int(copy, m, shift);
    return;
  }
  const std::size_t len = p.coeffs_.size();
  const auto width = static_cast<std::size_t>(m);
  const std::size_t out_len = len + width - 1;
  if (coeffs_.size() < out_len + shift) coeffs_.resize(out_len + shift);
  BigInt window = 0;
  for (std::size_t i = 0; i < out_len; ++i) {
    if (i < len) window += p.coeffs_[i];
    if (i >= width) window -= p.coeffs_[i - width];
    coeffs_[i + shift] += window;
  }
  trim();
}

QPoly QPoly::times_one_minus_q(unsigned e) const {
  std::vector<BigInt> c = coeffs_;
  for (unsigned step = 0; step < e && !c.empty(); ++step) {
    c.emplace_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= c[i - 1];
  }
  return QPoly(std::move(c));
}

QPoly QPoly::times_q_minus_one(unsigned e) const {
  QPoly r = times_one_minus_q(e);
  return (e % 2 == 0) ? r : -r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "q";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

QPoly pow(const QPoly& base, unsigned exponent) {
  QPoly result = 1;
  QPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

namespace {

// Long division from the top. Returns false on a non-integral quotient
// coefficient or a nonzero remainder.
bool long_divide(const QPoly& a, const QPoly& b, QPoly* quotient) {
  if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  std::vector<BigInt> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size();
  if (rem.size() < db) {
    *quotient = QPoly();
    return rem.empty();
  }
  std::vector<BigInt> q(rem.size() - db + 1);
  const BigInt& lead = d.back();
  for (std::size_t s = q.size(); s-- > 0;) {
    BigInt& top = rem[s + db - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < db; ++j) {
      mpz_submul(rem[s + j].get_mpz_t(), c.get_mpz_t(), d[j].get_mpz_t());
    }
    q[s] = std::move(c);
  }
  for (const auto& r : rem) {
    if (r != 0) return false;
  }
  *quotient = QPoly(std::move(q));
  return true;
}

}  // namespace

QPoly exact_div(const QPoly& a, const QPoly& b) {
  QPoly quotient;
  if (!long_divide(a, b, &quotient)) {
    throw IdentityViolation("exact_div: (" + a.to_string() + ") / (" + b.to_string() +
                            ") leaves a remainder");
  }
  return quotient;
}

bool divides(const QPoly& b, const QPoly& a) {
  QPoly quotient;
  return long_divide(a, b, &quotient);
}

}  // namespace flatperm
