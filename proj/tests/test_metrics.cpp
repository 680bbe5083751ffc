#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bdris/metrics.hpp"

using namespace bdris;
using doctest::Approx;

namespace {

RateReport make_report(double common, std::vector<double> privates) {
  RateReport rep;
  rep.common_rate = common;
  rep.private_rates = std::move(privates);
  rep.sum_rate = common;
  for (double r : rep.private_rates) rep.sum_rate += r;
  return rep;
}

}  // namespace

TEST_CASE("rate_degradation: identical reports give zero") {
  RateReport rep = make_report(2.0, {4.0, 3.0});
  for (double d : rate_degradation(rep, rep)) CHECK(d == 0.0);
}

TEST_CASE("rate_degradation: single-user direct evaluation") {
  RateReport safe = make_report(2.0, {4.0});
  RateReport attacked = make_report(1.0, {3.0});
  auto delta = rate_degradation(safe, attacked);
  REQUIRE(delta.size() == 1);
  CHECK(delta[0] == Approx(2.0).epsilon(1e-15));  // (4-3) + (2-1)/1
}

TEST_CASE("rate_degradation: total collapse") {
  RateReport safe = make_report(1.5, {4.0, 2.5, 3.0});
  RateReport attacked = make_report(0.0, {0.0, 0.0, 0.0});
  auto delta = rate_degradation(safe, attacked);
  for (size_t u = 0; u < 3; ++u)
    CHECK(delta[u] == Approx(safe.private_rates[u] + 1.5 / 3.0).epsilon(1e-15));
}

TEST_CASE("rate_degradation: user count mismatch rejected") {
  CHECK_THROWS_AS(rate_degradation(make_report(1.0, {1.0}), make_report(1.0, {1.0, 1.0})),
                  std::invalid_argument);
}

TEST_CASE("robustness_index: boundary values") {
  RateReport safe = make_report(2.0, {4.0, 3.0});
  CHECK(robustness_index(safe, safe) == 1.0);
  RateReport dead = make_report(0.0, {0.0, 0.0});
  CHECK(robustness_index(safe, dead) == Approx(0.0).epsilon(1e-15));
}

TEST_CASE("robustness_index: single-user direct evaluation") {
  RateReport safe = make_report(2.0, {4.0});
  RateReport attacked = make_report(1.0, {3.0});
  // delta = 2, baseline = 2/1 + 4 = 6 -> 1 - 2/6
  CHECK(robustness_index(safe, attacked) == Approx(1.0 - 2.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("robustness_index: clamped when an attack helps") {
  RateReport safe = make_report(1.0, {2.0});
  RateReport better = make_report(1.5, {3.0});
  CHECK(robustness_index(safe, better) == 1.0);
}

TEST_CASE("robustness_index: zero baseline rejected") {
  RateReport safe = make_report(0.0, {0.0, 1.0});
  CHECK_THROWS_AS(robustness_index(safe, safe), std::domain_error);
}

TEST_CASE("robustness_index: permutation symmetry") {
  RateReport safe = make_report(2.0, {4.0, 1.0, 2.5});
  RateReport attacked = make_report(1.2, {3.1, 0.4, 2.0});
  const double kappa = robustness_index(safe, attacked);

  std::vector<int> perm{2, 0, 1};
  RateReport safe_p = safe, attacked_p = attacked;
  for (int u = 0; u < 3; ++u) {
    safe_p.private_rates[u] = safe.private_rates[perm[u]];
    attacked_p.private_rates[u] = attacked.private_rates[perm[u]];
  }
  CHECK(robustness_index(safe_p, attacked_p) == Approx(kappa).epsilon(1e-15));
}

TEST_CASE("robustness_index: strictly decreasing in any attacked rate") {
  RateReport safe = make_report(2.0, {4.0, 3.0});
  RateReport attacked = make_report(1.5, {3.5, 2.5});
  const double kappa = robustness_index(safe, attacked);

  RateReport worse_private = attacked;
  worse_private.private_rates[1] -= 0.25;
  CHECK(robustness_index(safe, worse_private) < kappa);

  RateReport worse_common = attacked;
  worse_common.common_rate -= 0.25;
  CHECK(robustness_index(safe, worse_common) < kappa);
}

TEST_CASE("robustness_report: aggregates are consistent") {
  RateReport safe = make_report(2.0, {4.0, 3.0});
  RateReport attacked = make_report(1.0, {3.0, 2.0});
  RobustnessReport rep = robustness_report(safe, attacked);
  double total = 0.0;
  for (double d : rep.per_user_degradation) total += d;
  CHECK(rep.total_degradation == Approx(total).epsilon(1e-15));
  CHECK(rep.robustness_index == Approx(robustness_index(safe, attacked)).epsilon(1e-15));
}
