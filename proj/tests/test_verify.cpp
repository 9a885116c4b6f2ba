#include <doctest.h>

#include <algorithm>

#include "flatperm/errors.hpp"
#include "flatperm/recurrences.hpp"
#include "flatperm/verify.hpp"

using namespace flatperm;

namespace {

const CheckResult* find_check(const VerifyReport& r, std::string_view fragment) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                               [&](const CheckResult& c) { return c.name.find(fragment) != std::string::npos; });
  return it == r.checks.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("suite names") {
  for (Suite s : {Suite::Oracle, Suite::Refined, Suite::ClosedForms, Suite::Series, Suite::Bijections,
                  Suite::Identities, Suite::All})
    CHECK(parse_suite(name(s)) == s);
  CHECK(parse_suite("closed-forms") == Suite::ClosedForms);
  CHECK_FALSE(parse_suite("everything").has_value());
}

TEST_CASE("oracle suite at n_max 7") {
  VerifyOptions opt;
  opt.n_max = 7;
  const VerifyReport r = run_suite(Suite::Oracle, opt);
  CHECK(r.ok());
  for (PatternId id : kAllPatterns) {
    const CheckResult* c = find_check(r, std::string(name(id)) + " recurrence = brute force");
    REQUIRE(c != nullptr);
    CHECK(c->passed);
    CHECK(c->detail == "n=1..7");
  }
}

TEST_CASE("bijection suite at n_max 6") {
  VerifyOptions opt;
  opt.n_max = 6;
  const VerifyReport r = run_suite(Suite::Bijections, opt);
  CHECK(r.ok());
  CHECK(r.checks.size() == 3);
}

TEST_CASE("documented discrepancies are reported but do not fail") {
  VerifyOptions opt;
  opt.n_max = 5;
  opt.recurrence_n_max = 12;
  const VerifyReport series = run_suite(Suite::Series, opt);
  const CheckResult* g0 = find_check(series, "G_0 [x^2]");
  REQUIRE(g0 != nullptr);
  CHECK_FALSE(g0->passed);
  CHECK_FALSE(g0->blocking);
  CHECK(g0->detail.find("[x^2] G_0 = 0") != std::string::npos);
  CHECK(series.ok());

  const VerifyReport ids = run_suite(Suite::Identities, opt);
  const CheckResult* c_form = find_check(ids, "summed over j=2..n-1 only");
  REQUIRE(c_form != nullptr);
  CHECK_FALSE(c_form->passed);
  CHECK_FALSE(c_form->blocking);
  CHECK(ids.ok());
}

TEST_CASE("a failing blocking check fails the report") {
  VerifyReport r;
  r.checks.push_back({"x", "note", false, "", false});
  CHECK(r.ok());
  r.checks.push_back({"x", "real", false, "n=3", true});
  CHECK_FALSE(r.ok());
}

TEST_CASE("caps") {
  VerifyOptions opt;
  opt.n_max = 11;
  CHECK_THROWS_AS(run_suite(Suite::Oracle, opt), CapExceeded);
  opt.n_max = 0;
  CHECK_THROWS_AS(run_suite(Suite::Oracle, opt), std::invalid_argument);
}
