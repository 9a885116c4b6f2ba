#include "flatperm/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "flatperm/bijections.hpp"
#include "flatperm/closed_forms.hpp"
#include "flatperm/errors.hpp"
#include "flatperm/q_analogs.hpp"
#include "flatperm/recurrences.hpp"
#include "flatperm/symmetric.hpp"

namespace flatperm {

std::string_view name(Suite s) {
  switch (s) {
    case Suite::Oracle: return "oracle";
    case Suite::Refined: return "refined";
    case Suite::ClosedForms: return "closed-forms";
    case Suite::Series: return "series";
    case Suite::Bijections: return "bijections";
    case Suite::Identities: return "identities";
    case Suite::All: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
  for (Suite s : {Suite::Oracle, Suite::Refined, Suite::ClosedForms, Suite::Series,
                  Suite::Bijections, Suite::Identities, Suite::All}) {
    if (name(s) == text) return s;
  }
  return std::nullopt;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed || !c.blocking; });
}

namespace {

// Every pattern any suite compares against brute force, swept in one pass per n.
const std::vector<VincularPattern3>& swept_patterns() {
  static const std::vector<VincularPattern3> pats{
      patterns::p12_3, patterns::p21_3, patterns::p23_1, patterns::p32_1, patterns::p31_2,
      patterns::p13_2, patterns::p3_21, patterns::p3_12, patterns::p3_1_2};
  return pats;
}

// The first five table rows are the recurrence patterns, in the same order.
PatternId as_pattern_id(TablePattern p) { return kAllPatterns[static_cast<std::size_t>(p)]; }

std::string range_text(int lo, int hi) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Set partitions of [n] by number of blocks, from restricted growth strings.
std::vector<BigInt> partition_counts(int n) {
  std::vector<BigInt> by_blocks(static_cast<std::size_t>(n) + 1);
  if (n == 0) {
    by_blocks[0] = 1;
    return by_blocks;
  }
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      ++by_blocks[static_cast<std::size_t>(prefix_max[static_cast<std::size_t>(n - 1)] + 1)];
      return;
    }
    const int top = prefix_max[static_cast<std::size_t>(i - 1)] + 1;
    for (int b = 0; b <= top; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      prefix_max[static_cast<std::size_t>(i)] = std::max(prefix_max[static_cast<std::size_t>(i - 1)], b);
      place(i + 1);
    }
  };
  place(1);
  return by_blocks;
}

class Runner {
 public:
  explicit Runner(const VerifyOptions& o) : opt_(o) {
    if (opt_.n_max > opt_.brute_cap) throw CapExceeded("verify brute-force sweep", opt_.n_max, opt_.brute_cap);
    if (opt_.n_max < 1) throw std::invalid_argument("verify: n_max must be >= 1");
  }

  VerifyReport run(Suite s) {
    switch (s) {
      case Suite::Oracle: oracle(); break;
      case Suite::Refined: refined(); break;
      case Suite::ClosedForms: closed_forms(); break;
      case Suite::Series: series(); break;
      case Suite::Bijections: bijections(); break;
      case Suite::Identities: identities(); break;
      case Suite::All:
        oracle();
        refined();
        closed_forms();
        series();
        bijections();
        identities();
        break;
    }
    return std::move(report_);
  }

 private:
  // --- plumbing

  const BruteSweep& brute(int n) {
    auto it = brute_.find(n);
    if (it == brute_.end()) it = brute_.emplace(n, brute_sweep(n, swept_patterns(), opt_.brute_cap)).first;
    return it->second;
  }

  const QPoly& brute_g(int n, const VincularPattern3& pat) {
    const auto& pats = swept_patterns();
    const auto i = static_cast<std::size_t>(std::find(pats.begin(), pats.end(), pat) - pats.begin());
    return brute(n).distribution[i];
  }

  const QPoly& brute_refined(int n, const VincularPattern3& pat, int k) {
    const auto& pats = swept_patterns();
    const auto i = static_cast<std::size_t>(std::find(pats.begin(), pats.end(), pat) - pats.begin());
    return brute(n).refined[i][static_cast<std::size_t>(k)];
  }

  const DistributionTable& table(PatternId id) {
    auto it = tables_.find(id);
    if (it == tables_.end()) {
      it = tables_.emplace(id, distribution_table(id, std::max(opt_.recurrence_n_max, opt_.n_max))).first;
    }
    return it->second;
  }

  // Runs body; an empty string means pass, anything else is the counterexample.
  void check(std::string suite, std::string name, std::string pass_detail,
             const std::function<std::string()>& body, bool blocking = true) {
    CheckResult r{std::move(suite), std::move(name), false, {}, blocking};
    try {
      std::string failure = body();
      r.passed = failure.empty();
      r.detail = r.passed ? std::move(pass_detail) : std::move(failure);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    report_.checks.push_back(std::move(r));
  }

  // --- suites

  void oracle() {
    const int n_max = opt_.n_max;
    for (PatternId id : kAllPatterns) {
      const std::string pname(name(id));
      check("oracle", pname + " recurrence = brute force", range_text(1, n_max), [&]() -> std::string {
        const auto& t = table(id);
        for (int n = 1; n <= n_max; ++n) {
          const QPoly& b = brute_g(n, vincular(id));
          if (t[n] != b) return "n=" + std::to_string(n) + ": recurrence " + t[n].to_string() + ", brute " + b.to_string();
        }
        return {};
      });
      check("oracle", pname + " g_n(1) = n!", range_text(1, opt_.recurrence_n_max), [&]() -> std::string {
        const auto& t = table(id);
        for (int n = 1; n <= opt_.recurrence_n_max; ++n) {
          if (t[n].at_one() != factorial(static_cast<unsigned long>(n))) return "n=" + std::to_string(n);
        }
        return {};
      });
    }
    check("oracle", "flatten starts with 1, cycle form round trip", range_text(1, std::min(n_max, 7)),
          [&]() -> std::string {
            for (int n = 1; n <= std::min(n_max, 7); ++n) {
              for (const Permutation& p : enumerate_permutations(n, opt_.brute_cap)) {
                if (flatten(p)(1) != 1) return "flatten(" + p.to_string() + ")";
                const CycleForm c = to_standard_cycle_form(p);
                if (!c.is_standard() || from_cycle_form(c) != p) return "cycles of " + p.to_string();
              }
            }
            return {};
          });
  }

  void refined() {
    const int n_max = opt_.n_max;
    const int table_n = std::min(std::max(n_max, 12), kRecurrenceCap);
    for (PatternId id : kAllPatterns) {
      const std::string pname(name(id));
      const RefinedTable rt(id, table_n);
      check("refined", pname + " g_n(1k) = brute force", range_text(2, n_max) + ", all k", [&]() -> std::string {
        for (int n = 2; n <= n_max; ++n) {
          for (int k = 2; k <= n; ++k) {
            const QPoly& b = brute_refined(n, vincular(id), k);
            if (rt.at(n, k) != b) {
              return "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ": " + rt.at(n, k).to_string() + " vs " + b.to_string();
            }
          }
        }
        return {};
      });
      check("refined", pname + " sum_k g_n(1k) = g_n", range_text(2, table_n), [&]() -> std::string {
        for (int n = 2; n <= table_n; ++n) {
          QPoly sum;
          for (int k = 2; k <= n; ++k) sum += rt.at(n, k);
          if (sum != rt.totals()[n]) return "n=" + std::to_string(n);
        }
        return {};
      });
      const bool q_shifted = id == PatternId::P12_3;
      check("refined", pname + (q_shifted ? " g_n(12) = 2q^{n-2} g_{n-1}" : " g_n(12) = 2 g_{n-1}"),
            range_text(2, table_n), [&]() -> std::string {
              for (int n = 2; n <= table_n; ++n) {
                QPoly expect = rt.totals()[n - 1] * BigInt(2);
                if (q_shifted) expect = expect.shifted(static_cast<std::size_t>(n - 2));
                if (rt.at(n, 2) != expect) return "n=" + std::to_string(n);
              }
              return {};
            });
    }
  }

  void closed_forms() {
    const int n_max = opt_.n_max;
    check("closed-forms", "Stirling, Bell, complementary Bell = partition enumeration", range_text(0, n_max),
          [&]() -> std::string {
            const SpecialNumberCache c(n_max);
            if (c.complementary_bell(-1) != -1) return "complementary Bell at -1";
            for (int n = 0; n <= n_max; ++n) {
              const auto counts = partition_counts(n);
              BigInt bell = 0, comp = 0;
              for (int k = 0; k <= n; ++k) {
                const BigInt& s = counts[static_cast<std::size_t>(k)];
                if (c.stirling2(n, k) != s) return "S(" + std::to_string(n) + "," + std::to_string(k) + ")";
                bell += s;
                comp += (k % 2 == 0) ? s : BigInt(-s);
              }
              if (c.bell(n) != bell || c.complementary_bell(n) != comp) return "n=" + std::to_string(n);
              if (n > 0 && c.harmonic(n) - c.harmonic(n - 1) != Rational(1, static_cast<unsigned long>(n))) {
                return "H_" + std::to_string(n);
              }
            }
            return {};
          });

    for (TablePattern p : kTablePatterns) {
      const std::string pname(name(p));
      const bool has_recurrence = p != TablePattern::P13_2;
      check("closed-forms", pname + " avoiders = [q^0] g_n = brute count", range_text(1, n_max),
            [&]() -> std::string {
              for (int n = 1; n <= n_max; ++n) {
                const BigInt a = avoiders(p, n);
                const BigInt b = brute_g(n, vincular(p)).constant_term();
                if (a != b) return "n=" + std::to_string(n) + ": formula " + a.get_str() + ", brute " + b.get_str();
                if (has_recurrence) {
                  const BigInt r = table(as_pattern_id(p))[n].constant_term();
                  if (a != r) return "n=" + std::to_string(n) + ": recurrence " + r.get_str();
                }
              }
              return {};
            });
      check("closed-forms", pname + " average * n! = g_n'(1)", range_text(1, n_max), [&]() -> std::string {
        for (int n = 1; n <= n_max; ++n) {
          const Rational scaled = average_occurrences(p, n) * Rational(factorial(static_cast<unsigned long>(n)));
          const BigInt b = brute_g(n, vincular(p)).derivative_at_one();
          if (scaled != Rational(b)) return "n=" + std::to_string(n) + ": formula " + to_string(scaled) + ", brute " + b.get_str();
          if (has_recurrence) {
            const BigInt r = table(as_pattern_id(p))[n].derivative_at_one();
            if (scaled != Rational(r)) return "n=" + std::to_string(n) + ": recurrence " + r.get_str();
          }
        }
        return {};
      });
    }

    for (TotalPattern p : kTotalPatterns) {
      check("closed-forms", "tot(" + std::string(name(p)) + ") = brute total", range_text(1, n_max),
            [&]() -> std::string {
              for (int n = 1; n <= n_max; ++n) {
                const BigInt f = total_occurrences(p, n);
                const BigInt b = brute_g(n, vincular(p)).derivative_at_one();
                if (f != b) return "n=" + std::to_string(n) + ": formula " + f.get_str() + ", brute " + b.get_str();
              }
              return {};
            });
    }

    for (PatternId id : kAllPatterns) {
      check("closed-forms", std::string(name(id)) + " |avr(n)/n^2 - 1/12| decreasing, < 1/100 at 1000",
            "n=20..200 and n=1000", [&]() -> std::string {
              if (!deviation_strictly_decreasing(id, 20, 200)) return "not strictly decreasing on 20..200";
              const auto rows = limit_check(999, 1000);
              std::size_t slot = 0;
              while (kAllPatterns[slot] != id) ++slot;
              const Rational dev = abs(rows.back().ratio[slot] - Rational(1, 12));
              if (!(dev < Rational(1, 100))) return "deviation at 1000 is " + to_string(dev);
              return {};
            });
    }
  }

  void series() {
    const std::size_t order = opt_.order;
    const int last = static_cast<int>(order) - 1;
    for (int r = 0; r <= 3; ++r) {
      check("series", "G_" + std::to_string(r) + " [x^n] = [q^" + std::to_string(r) + "] g_n(31-2)",
            range_text(3, last), [&, r]() -> std::string {
              const PowerSeries g = expand_G_r_31_2(r, order);
              const auto t = g_31_2(std::max(last, 3));
              for (int n = 3; n <= last; ++n) {
                const Rational want(t[n].coeff(static_cast<std::size_t>(r)));
                if (g[static_cast<std::size_t>(n)] != want) {
                  return "n=" + std::to_string(n) + ": series " + to_string(g[static_cast<std::size_t>(n)]) + ", table " + to_string(want);
                }
              }
              return {};
            });
    }
    check("series", "G_0 [x^2] vs g_2 = 2", "", [&]() -> std::string {
      const Rational c = expand_G_r_31_2(0, order)[2];
      if (c == 2) return {};
      return "[x^2] G_0 = " + to_string(c) + " while g_2 = 2; the closed form agrees with g_n only from n = 3";
    }, false);

    auto egf_check = [&](const std::string& what, const PowerSeries& s, TablePattern p) {
      check("series", what, "n=0.." + std::to_string(last) + " (lengths 2.." + std::to_string(last + 2) + ")",
            [&, p]() -> std::string {
              for (int n = 0; n <= last; ++n) {
                const BigInt c = egf_coefficient(s, static_cast<std::size_t>(n));
                const BigInt a = avoiders(p, n + 2);
                if (c != a) return "n=" + std::to_string(n) + ": EGF " + c.get_str() + ", avoiders " + a.get_str();
              }
              return {};
            });
    };
    egf_check("2e^{e^x+2x-1}: n! [x^n] = avoiders(21-3, n+2)", expand_egf_21_3_avoid(order), TablePattern::P21_3);
    egf_check("12-3 EGF: n! [x^n] = avoiders(12-3, n+2)", expand_egf_12_3_avoid(order), TablePattern::P12_3);

    check("series", "e^{e^x-1} and e^{1-e^x} give Bell and complementary Bell numbers", "n=0.." + std::to_string(last),
          [&]() -> std::string {
            const SpecialNumberCache c(last);
            const PowerSeries x = PowerSeries::x(order);
            const PowerSeries em1 = exp_series(x) - PowerSeries::polynomial({1}, order);
            const PowerSeries bell = exp_series(em1);
            const PowerSeries comp = exp_series(-em1);
            for (int n = 0; n <= last; ++n) {
              const auto un = static_cast<std::size_t>(n);
              if (egf_coefficient(bell, un) != c.bell(n)) return "Bell n=" + std::to_string(n);
              if (egf_coefficient(comp, un) != c.complementary_bell(n)) return "complementary Bell n=" + std::to_string(n);
            }
            return {};
          });
  }

  void bijections() {
    const int n_max = opt_.n_max;
    check("bijections", "worked example n=10", "{6,5,2}/{10,7,3}*/{4}*/{9,8} <-> (1,6,5,2,10,7)(3)(4,9,8) <-> (1,5,6,2,7,10)(3)(4,9,8)",
          [&]() -> std::string {
            const auto p = MarkedPartition::canonical({{6, 5, 2}, {10, 7, 3}, {4}, {9, 8}}, {false, true, true, false});
            const CycleForm sigma{{{1, 6, 5, 2, 10, 7}, {3}, {4, 9, 8}}};
            const CycleForm rho{{{1, 5, 6, 2, 7, 10}, {3}, {4, 9, 8}}};
            if (partition_to_23_1_avoider(p) != sigma) return "forward gives " + partition_to_23_1_avoider(p).to_string();
            if (avoider_23_1_to_partition(sigma) != p) return "reverse gives " + avoider_23_1_to_partition(sigma).to_string();
            if (map_23_1_to_32_1(sigma) != rho) return "reversal map gives " + map_23_1_to_32_1(sigma).to_string();
            if (inverse_32_1_to_23_1(rho) != sigma) return "inverse map gives " + inverse_32_1_to_23_1(rho).to_string();
            return {};
          });
    check("bijections", "marked partitions <-> 23-1 avoiders <-> 32-1 avoiders", range_text(1, n_max) + ", exhaustive",
          [&]() -> std::string {
            for (int n = 1; n <= n_max; ++n) {
              const BijectionSweep s = sweep_bijections(n, opt_.brute_cap);
              if (!s.all_ok()) {
                std::ostringstream os;
                os << "n=" << n << ": partitions " << s.marked_partitions << ", images " << s.distinct_partition_images
                   << ", 23-1 avoiders " << s.avoiders_23_1 << ", 32-1 avoiders " << s.avoiders_32_1
                   << ", round trips " << s.partition_round_trip << s.avoider_round_trip << s.map_round_trip
                   << s.inverse_round_trip << ", ascents=blocks " << s.ascents_match_blocks;
                return os.str();
              }
              if (BigInt(static_cast<unsigned long>(s.distinct_partition_images)) != avoiders(TablePattern::P23_1, n)) {
                return "n=" + std::to_string(n) + ": image size differs from sum 2^k S(n-1,k)";
              }
            }
            return {};
          });
    check("bijections", "31-2 avoidance = 3-1-2 avoidance on flattened forms", range_text(1, n_max),
          [&]() -> std::string {
            for (int n = 1; n <= n_max; ++n) {
              if (!check_31_2_equivalence(n, opt_.brute_cap)) return "n=" + std::to_string(n);
            }
            return {};
          });
  }

  void identities() {
    const int n_max = opt_.n_max;
    const int rn = opt_.recurrence_n_max;

    check("identities", "e_j([1..k-3]) closed form = elementary_e", "4 <= k <= 10, 1 <= j <= k-3", []() -> std::string {
      for (long k = 4; k <= 10; ++k) {
        std::vector<QPoly> xs;
        for (long i = 1; i <= k - 3; ++i) xs.push_back(q_int(i));
        for (long j = 1; j <= k - 3; ++j) {
          if (e_on_qints_closed_form(j, k) != elementary_e(j, xs)) return "j=" + std::to_string(j) + ", k=" + std::to_string(k);
        }
      }
      return {};
    });
    check("identities", "h_{j-1}(window) closed form = complete_h", "k <= 10, n <= 5, 0 <= j <= k-1", []() -> std::string {
      for (long k = 1; k <= 10; ++k) {
        for (long n = 0; n <= 5; ++n) {
          for (long j = 0; j <= k - 1; ++j) {
            std::vector<QPoly> xs;
            for (long i = 0; i <= k - j - 1; ++i) xs.push_back(q_int(n + i));
            if (h_on_qint_window_closed_form(j, k, n) != complete_h(j - 1, xs)) {
              return "j=" + std::to_string(j) + ", k=" + std::to_string(k) + ", n=" + std::to_string(n);
            }
          }
        }
      }
      return {};
    });

    check("identities", "tot(32-1) = tot(23-1)", range_text(1, n_max), [&]() -> std::string {
      for (int n = 1; n <= n_max; ++n) {
        if (total_occurrences(TotalPattern::P32_1, n) != total_occurrences(TotalPattern::P23_1, n)) return "formula, n=" + std::to_string(n);
        if (brute_g(n, patterns::p32_1).derivative_at_one() != brute_g(n, patterns::p23_1).derivative_at_one()) {
          return "brute, n=" + std::to_string(n);
        }
      }
      return {};
    });
    check("identities", "tot(21-3) + tot(3-21) = (n-1)! sum (n-i)(i-2)", range_text(1, n_max), [&]() -> std::string {
      for (int n = 1; n <= n_max; ++n) {
        const BigInt b = brute_g(n, patterns::p21_3).derivative_at_one() + brute_g(n, patterns::p3_21).derivative_at_one();
        if (combined_total_21_3(n) != b) return "n=" + std::to_string(n) + ": " + combined_total_21_3(n).get_str() + " vs " + b.get_str();
      }
      return {};
    });
    check("identities", "tot(12-3) + tot(3-12) = (n-1)! sum (n-i)i", range_text(1, n_max), [&]() -> std::string {
      for (int n = 1; n <= n_max; ++n) {
        const BigInt b = brute_g(n, patterns::p12_3).derivative_at_one() + brute_g(n, patterns::p3_12).derivative_at_one();
        if (combined_total_12_3(n) != b) return "n=" + std::to_string(n) + ": " + combined_total_12_3(n).get_str() + " vs " + b.get_str();
      }
      return {};
    });

    check("identities", "[q^0] g_n(23-1) = [q^0] g_n(32-1)", range_text(1, rn), [&]() -> std::string {
      for (int n = 1; n <= rn; ++n) {
        if (table(PatternId::P23_1)[n].constant_term() != table(PatternId::P32_1)[n].constant_term()) return "n=" + std::to_string(n);
      }
      return {};
    });
    check("identities", "g_n'(1): 21-3 = 31-2 and 23-1 = 32-1", range_text(1, rn), [&]() -> std::string {
      for (int n = 1; n <= rn; ++n) {
        if (table(PatternId::P21_3)[n].derivative_at_one() != table(PatternId::P31_2)[n].derivative_at_one()) return "21-3/31-2 n=" + std::to_string(n);
        if (table(PatternId::P23_1)[n].derivative_at_one() != table(PatternId::P32_1)[n].derivative_at_one()) return "23-1/32-1 n=" + std::to_string(n);
      }
      return {};
    });

    check("identities", "q=0 recurrences (23-1, 21-3, 32-1, 12-3)", range_text(4, rn), [&]() -> std::string {
      auto g0 = [&](PatternId id, int n) { return table(id)[n].constant_term(); };
      for (int n = 4; n <= rn; ++n) {
        BigInt a = 0;
        for (int j = 1; j <= n - 1; ++j) a += binomial(n - 2, j - 1) * g0(PatternId::P23_1, n - j);
        if (g0(PatternId::P23_1, n) != 2 * a) return "23-1 n=" + std::to_string(n);

        BigInt b = n * g0(PatternId::P21_3, n - 1) - BigInt(n * (n - 3) / 2) * g0(PatternId::P21_3, n - 2);
        for (int j = 3; j <= n - 1; ++j) {
          const BigInt term = (binomial(n - 2, j) + binomial(n - 3, j - 1)) * g0(PatternId::P21_3, n - j);
          b += (j % 2 == 1) ? term : BigInt(-term);
        }
        if (g0(PatternId::P21_3, n) != b) return "21-3 n=" + std::to_string(n);

        BigInt c = n * g0(PatternId::P32_1, n - 1);
        for (int j = 2; j <= n - 2; ++j) {
          const BigInt term = binomial(n - 2, j) * g0(PatternId::P32_1, n - j);
          c += (j % 2 == 1) ? term : BigInt(-term);
        }
        if (g0(PatternId::P32_1, n) != c) return "32-1 n=" + std::to_string(n);

        BigInt d = 0;
        for (int j = 1; j <= n - 2; ++j) d += (binomial(n - 3, j - 1) + binomial(n - 4, j - 2)) * g0(PatternId::P12_3, n - j);
        if (g0(PatternId::P12_3, n) != d) return "12-3 n=" + std::to_string(n);
      }
      return {};
    });
    check("identities", "g_n'(1) recurrences (21-3, 12-3)", range_text(3, rn), [&]() -> std::string {
      auto d1 = [&](PatternId id, int n) { return table(id)[n].derivative_at_one(); };
      for (int n = 3; n <= rn; ++n) {
        const BigInt tail = BigInt((n + 2) * (n - 2) * (n - 3)) * factorial(static_cast<unsigned long>(n - 2));
        if (d1(PatternId::P21_3, n) * 6 != 6 * n * d1(PatternId::P21_3, n - 1) + tail) return "21-3 n=" + std::to_string(n);
        const BigInt lead = (2 * (n - 2) + binomial(n - 2, 2)) * factorial(static_cast<unsigned long>(n - 1));
        if (d1(PatternId::P12_3, n) * 3 != 3 * (lead + n * d1(PatternId::P12_3, n - 1)) - tail) return "12-3 n=" + std::to_string(n);
      }
      return {};
    });
    check("identities", "b_{n,2} rational closed forms (23-1, 21-3), multiplied through", range_text(3, rn),
          [&]() -> std::string {
            for (int n = 3; n <= rn; ++n) {
              if (!b2_23_1_rational_form_holds(n)) return "23-1 n=" + std::to_string(n);
              if (!b2_21_3_rational_form_holds(n)) return "21-3 n=" + std::to_string(n);
            }
            return {};
          });
    check("identities", "32-1 coefficients: q-binomial form = e_{j-1} sums", range_text(3, rn), [&]() -> std::string {
      // g_32_1 cross-checks every coefficient and throws on the first mismatch
      g_32_1(rn);
      return {};
    });

    const int c_form_n = std::min(rn, 12);
    const auto cmp = compare_12_3_c_form(c_form_n);
    check("identities", "12-3 c_{n,j} = (1-q)^{j-1} b_{n,j}; with the j=1 term the c-form gives g_n",
          range_text(3, c_form_n), [&]() -> std::string {
            for (const auto& c : cmp) {
              if (!c.coefficients_match) return "coefficients differ at n=" + std::to_string(c.n);
              if (!c.with_j1_term_matches) return "j=1..n-1 sum differs at n=" + std::to_string(c.n);
            }
            return {};
          });
    check("identities", "12-3 c_{n,j} form summed over j=2..n-1 only", "", [&]() -> std::string {
      std::string matching;
      std::size_t hits = 0;
      for (const auto& c : cmp) {
        if (c.stated_range_matches) {
          matching += " " + std::to_string(c.n);
          ++hits;
        }
      }
      if (hits == cmp.size()) return {};
      if (hits == 0) {
        return "sum_{j=2}^{n-1} c_{n,j} g_{n-j} differs from g_n for every n=3.." + std::to_string(c_form_n) +
               "; adding the j=1 term c_{n,1} = 2q^{n-2} + [n-2] restores equality";
      }
      return "stated form matches only at n =" + matching;
    }, false);
  }

  VerifyOptions opt_;
  VerifyReport report_;
  std::map<int, BruteSweep> brute_;
  std::map<PatternId, DistributionTable> tables_;
};

}  // namespace

VerifyReport run_suite(Suite suite, const VerifyOptions& options) {
  Runner runner(options);
  return runner.run(suite);
}

}  // namespace flatperm
