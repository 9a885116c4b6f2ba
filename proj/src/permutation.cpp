#include "flatperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "flatperm/errors.hpp"

namespace flatperm {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.word_.resize(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) p.word_[static_cast<std::size_t>(i)] = i + 1;
  return p;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const auto n = static_cast<int>(word_.size());
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) +
                                  "]: bad or repeated value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> word;
  const bool separated = text.find_first_of(" ,") != std::string_view::npos;
  if (separated) {
    std::string buf(text);
    std::replace(buf.begin(), buf.end(), ',', ' ');
    std::istringstream in(buf);
    int v = 0;
    while (in >> v) word.push_back(v);
    if (!in.eof()) throw std::invalid_argument("cannot parse permutation: " + std::string(text));
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("cannot parse permutation: " + std::string(text));
      }
      word.push_back(ch - '0');
    }
  }
  return Permutation(std::move(word));
}

bool Permutation::advance_lexicographic() {
  return std::next_permutation(word_.begin(), word_.end());
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  const bool wide = size() > 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (wide && i > 0) os << ' ';
    os << word_[i];
  }
  return os.str();
}

bool CycleForm::is_standard() const {
  int prev_first = 0;
  std::vector<int> all;
  for (const auto& c : cycles) {
    if (c.empty()) return false;
    if (*std::min_element(c.begin(), c.end()) != c.front()) return false;
    if (c.front() <= prev_first) return false;
    prev_first = c.front();
    all.insert(all.end(), c.begin(), c.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

int CycleForm::size() const {
  int n = 0;
  for (const auto& c : cycles) n += static_cast<int>(c.size());
  return n;
}

std::string CycleForm::to_string() const {
  std::ostringstream os;
  const bool wide = size() > 9;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (wide && i > 0) os << ',';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

CycleForm to_standard_cycle_form(const Permutation& p) {
  const int n = p.size();
  CycleForm form;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  // Scanning starts in increasing order, so each cycle opens at its minimum.
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

Permutation from_cycle_form(const CycleForm& c) {
  std::vector<int> word(static_cast<std::size_t>(c.size()), 0);
  for (const auto& cycle : c.cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      if (from < 1 || from > static_cast<int>(word.size())) {
        throw std::invalid_argument("cycle letter out of range: " + std::to_string(from));
      }
      word[static_cast<std::size_t>(from - 1)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(word));
}

std::vector<int> flatten_cycles(const CycleForm& c) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(c.size()));
  for (const auto& cycle : c.cycles) out.insert(out.end(), cycle.begin(), cycle.end());
  return out;
}

Permutation flatten(const Permutation& p) {
  return Permutation(flatten_cycles(to_standard_cycle_form(p)));
}

VincularPattern3::Type VincularPattern3::type() const {
  if (glue12 && glue23) return Type::Consecutive;
  if (glue12) return Type::TwoOne;
  if (glue23) return Type::OneTwo;
  return Type::Classical;
}

VincularPattern3 VincularPattern3::parse(std::string_view text) {
  VincularPattern3 pat;
  int count = 0;
  bool dash_pending = false;
  for (char ch : text) {
    if (ch == '-') {
      if (count == 0 || dash_pending) throw std::invalid_argument("bad pattern: " + std::string(text));
      dash_pending = true;
    } else if (ch >= '1' && ch <= '3') {
      if (count == 3) throw std::invalid_argument("bad pattern: " + std::string(text));
      if (count == 1) pat.glue12 = !dash_pending;
      if (count == 2) pat.glue23 = !dash_pending;
      pat.letters[static_cast<std::size_t>(count++)] = ch - '0';
      dash_pending = false;
    } else {
      throw std::invalid_argument("bad pattern: " + std::string(text));
    }
  }
  auto sorted = pat.letters;
  std::sort(sorted.begin(), sorted.end());
  if (count != 3 || dash_pending || sorted != std::array<int, 3>{1, 2, 3}) {
    throw std::invalid_argument("bad pattern: " + std::string(text));
  }
  return pat;
}

std::string VincularPattern3::to_string() const {
  std::string s;
  s += static_cast<char>('0' + letters[0]);
  if (!glue12) s += '-';
  s += static_cast<char>('0' + letters[1]);
  if (!glue23) s += '-';
  s += static_cast<char>('0' + letters[2]);
  return s;
}

std::uint64_t count_occurrences(std::span<const int> host, const VincularPattern3& pat) {
  const std::size_t n = host.size();
  if (n < 3) return 0;
  const auto& l = pat.letters;
  const bool lt01 = l[0] < l[1];
  const bool lt02 = l[0] < l[2];
  const bool lt12 = l[1] < l[2];
  auto first_pair = [&](int a, int b) { return (a < b) == lt01; };
  auto closes = [&](int a, int b, int c) { return (a < c) == lt02 && (b < c) == lt12; };

  std::uint64_t total = 0;
  switch (pat.type()) {
    case VincularPattern3::Type::TwoOne:
      for (std::size_t i = 0; i + 2 < n; ++i) {
        const int a = host[i];
        const int b = host[i + 1];
        if (!first_pair(a, b)) continue;
        for (std::size_t k = i + 2; k < n; ++k) total += closes(a, b, host[k]) ? 1 : 0;
      }
      break;
    case VincularPattern3::Type::OneTwo:
      for (std::size_t j = 1; j + 1 < n; ++j) {
        const int b = host[j];
        const int c = host[j + 1];
        if ((b < c) != lt12) continue;
        for (std::size_t i = 0; i < j; ++i) {
          const int a = host[i];
          total += (first_pair(a, b) && (a < c) == lt02) ? 1 : 0;
        }
      }
      break;
    case VincularPattern3::Type::Consecutive:
      for (std::size_t i = 0; i + 2 < n; ++i) {
        total += (first_pair(host[i], host[i + 1]) && closes(host[i], host[i + 1], host[i + 2])) ? 1 : 0;
      }
      break;
    case VincularPattern3::Type::Classical:
      for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
          if (!first_pair(host[i], host[j])) continue;
          for (std::size_t k = j + 1; k < n; ++k) total += closes(host[i], host[j], host[k]) ? 1 : 0;
        }
      }
      break;
  }
  return total;
}

std::uint64_t count_in_flattened_sense(const Permutation& p, const VincularPattern3& pat) {
  return count_occurrences(flatten(p), pat);
}

PermutationStream enumerate_permutations(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumerate_permutations: n must be >= 1");
  if (n > cap) throw CapExceeded("permutation enumeration", n, cap);
  return PermutationStream(n);
}

namespace {

QPoly histogram_to_poly(const std::vector<std::uint64_t>& hist) {
  std::vector<BigInt> c(hist.size());
  for (std::size_t i = 0; i < hist.size(); ++i) {
    mpz_set_ui(c[i].get_mpz_t(), static_cast<unsigned long>(hist[i]));
  }
  return QPoly(std::move(c));
}

void bump(std::vector<std::uint64_t>& hist, std::uint64_t count) {
  if (hist.size() <= count) hist.resize(count + 1, 0);
  ++hist[count];
}

}  // namespace

BruteSweep brute_sweep(int n, std::span<const VincularPattern3> pats, int cap) {
  BruteSweep sweep;
  sweep.n = n;
  sweep.patterns.assign(pats.begin(), pats.end());
  const std::size_t np = pats.size();
  std::vector<std::vector<std::uint64_t>> hist(np);
  std::vector<std::vector<std::vector<std::uint64_t>>> refined_hist(
      np, std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(n) + 1));

  for (const Permutation& p : enumerate_permutations(n, cap)) {
    const Permutation flat = flatten(p);
    const std::size_t second = n >= 2 ? static_cast<std::size_t>(flat(2)) : 0;
    for (std::size_t i = 0; i < np; ++i) {
      const std::uint64_t c = count_occurrences(flat, pats[i]);
      bump(hist[i], c);
      if (n >= 2) bump(refined_hist[i][second], c);
    }
  }

  sweep.distribution.reserve(np);
  sweep.refined.resize(np);
  for (std::size_t i = 0; i < np; ++i) {
    sweep.distribution.push_back(histogram_to_poly(hist[i]));
    sweep.refined[i].resize(static_cast<std::size_t>(n) + 1);
    for (int k = 2; k <= n; ++k) {
      sweep.refined[i][static_cast<std::size_t>(k)] =
          histogram_to_poly(refined_hist[i][static_cast<std::size_t>(k)]);
    }
  }
  return sweep;
}

QPoly brute_distribution(int n, const VincularPattern3& pat, int cap) {
  return brute_sweep(n, std::span<const VincularPattern3>(&pat, 1), cap).distribution.front();
}

QPoly brute_refined_distribution(int n, const VincularPattern3& pat, int k, int cap) {
  if (k < 2 || k > n) {
    throw std::invalid_argument("brute_refined_distribution: k=" + std::to_string(k) +
                                " outside [2, " + std::to_string(n) + "]");
  }
  return brute_sweep(n, std::span<const VincularPattern3>(&pat, 1), cap)
      .refined.front()[static_cast<std::size_t>(k)];
}

}  // namespace flatperm
