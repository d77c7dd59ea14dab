#include <cmath>
#include <random>

#include "doctest.h"
#include "pmcover/analysis.hpp"
#include "pmcover/errors.hpp"
#include "pmcover/objectives.hpp"

using namespace pmcover;
using V = std::vector<double>;

namespace {
const double kPi = std::acos(-1.0);
const double kE = std::exp(1.0);
}  // namespace

TEST_CASE("finite-n ratio") {
  CHECK(ratio_exact(1, 2) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  for (double p : {-4.0, -1.0, -0.3, 0.5, 1.0, 7.0}) CHECK(ratio_exact(p, 1) == doctest::Approx(1.0));
  CHECK(ratio_exact(1, 1000000) == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(ratio_exact(1, 1000000) < 2.0);
  // Log-space branch against the direct branch near the switch.
  CHECK(ratio_exact(200, 50) == doctest::Approx(std::exp(std::log(201.0) / 200)).epsilon(0.05));
  CHECK(std::isfinite(ratio_exact(500, 100000)));
  CHECK_THROWS_AS(ratio_exact(0, 4), ValidationError);
  CHECK_THROWS_AS(ratio_exact(1, 0), ValidationError);
  for (double p : {0.25, 0.5, 1.0, 2.0, 5.0})
    for (long n : {1L, 3L, 10L, 1000L}) CHECK(ratio_exact(p, n) <= ratio_asymptotic(p) + 1e-12);
}

TEST_CASE("asymptotic ratio") {
  CHECK(ratio_asymptotic(1) == 2.0);
  CHECK(ratio_asymptotic(1e-6) == doctest::Approx(kE).epsilon(1e-5));
  CHECK(std::fabs(ratio_asymptotic(1e-9) - kE) < 1e-8);
  CHECK(ratio_asymptotic(1e6) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(ratio_asymptotic(CostModel::kInf) == 1.0);
  CHECK_THROWS_AS(ratio_asymptotic(0), ValidationError);
}

TEST_CASE("negative exponents") {
  CHECK(riemann_zeta(2) == doctest::Approx(kPi * kPi / 6).epsilon(1e-15));
  CHECK(riemann_zeta(4) == doctest::Approx(std::pow(kPi, 4) / 90).epsilon(1e-15));
  CHECK(riemann_zeta(3) == doctest::Approx(1.2020569031595942).epsilon(1e-15));
  CHECK(riemann_zeta(1.1) == doctest::Approx(10.584448464950810).epsilon(1e-12));
  CHECK(ratio_negative(2, 6) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(ratio_negative(2, 24) == doctest::Approx(2 * kPi).epsilon(1e-12));
  CHECK(ratio_negative(3, 8) == doctest::Approx(std::pow(8, 2.0 / 3) * std::cbrt(1.2020569031595942)).epsilon(1e-12));
  CHECK_THROWS_AS(ratio_negative(1, 5), ValidationError);
  // The closed form bounds the finite-n expression from above.
  for (double q : {1.5, 2.0, 3.0})
    for (long n : {1L, 5L, 50L}) CHECK(ratio_exact(-q, n) <= ratio_negative(q, n) + 1e-12);
}

TEST_CASE("general cost ratio") {
  CHECK(ratio_general_cost(V{1, 1, 1}, 3) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
  CHECK(ratio_general_cost(V{1, 2, 3, 4}, 4) == doctest::Approx(1.0));
  CHECK(harmonic_exact(3) == BigRational(11, 6));
  CHECK(harmonic(3) == doctest::Approx(11.0 / 6.0));
  CHECK(harmonic(1000000) == doctest::Approx(std::log(1e6) + 0.5772156649015329 + 0.5e-6).epsilon(1e-12));

  const std::vector<BigRational> ones(5, BigRational(1));
  CHECK(ratio_general_cost_exact(ones, 5) == harmonic_exact(5));

  const auto table = rob_table(0.5, 8);
  CHECK(ratio_general_cost(table, 8) <= ratio_rob(0.5) + 1e-12);
  CHECK_THROWS_AS(ratio_general_cost(V{1, 1}, 3), ValidationError);
}

TEST_CASE("rent-or-buy ratio") {
  CHECK(ratio_rob(1 / kE) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ratio_rob(1 - 1e-12) == doctest::Approx(1.0));
  CHECK(ratio_rob(1.0 / 50) == doctest::Approx(1 + std::log(50.0)));
  CHECK_THROWS_AS(ratio_rob(0), ValidationError);
  CHECK_THROWS_AS(ratio_rob(1), ValidationError);
}

TEST_CASE("hardness gap") {
  CHECK(inapprox_gap(1, 1e-9) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::fabs(inapprox_gap(1, 20) - 2.0) < 1e-6);
  for (double p : {0.5, 1.0, 2.0})
    for (double a : {0.1, 1.0, 5.0}) CHECK(inapprox_gap(p, a) < ratio_asymptotic(p));
  CHECK_THROWS_AS(inapprox_gap(0, 1), ValidationError);
  CHECK_THROWS_AS(inapprox_gap(1, 0), ValidationError);
}

TEST_CASE("sum against integral") {
  const auto a = sum_integral_check(0, 5);
  CHECK(a.holds);
  CHECK(a.lhs == 5);
  CHECK(a.rhs == 5);
  CHECK(a.margin == 0);
  const auto b = sum_integral_check(1, 4);
  CHECK(b.lhs == 10);
  CHECK(b.rhs == 8);
  const auto c = sum_integral_check(2, 3);
  CHECK(c.lhs == 14);
  CHECK(c.rhs == 9);
  CHECK_THROWS_AS(sum_integral_check(-0.5, 3), ValidationError);
}

TEST_CASE("domination") {
  CHECK(dominates(V{3, 1}, V{2, 2}));
  CHECK_FALSE(dominates(V{2, 2}, V{3, 1}));
  CHECK(dominates(V{2, 2}, V{2, 2}));
  CHECK(dominates(V{4}, V{2, 1, 1}));
  CHECK_THROWS_AS(dominates(V{1, 2}, V{2, 1}), ValidationError);
}

TEST_CASE("csv rows") {
  CHECK(bounds_csv_header() == "kind,p_or_q,n,beta,a,value");
  CHECK(to_csv_row({BoundKind::kExact, 1.0, 2L, {}, {}, 4.0 / 3.0}) == "exact,1,2,,,1.3333333333333333");
  CHECK(to_csv_row({BoundKind::kRentOrBuy, {}, {}, 0.5, {}, ratio_rob(0.5)}).rfind("rob,,,0.5,,", 0) == 0);
}
