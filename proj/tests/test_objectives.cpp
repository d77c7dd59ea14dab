#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pmcover/errors.hpp"
#include "pmcover/format.hpp"
#include "pmcover/objectives.hpp"

using namespace pmcover;
using V = std::vector<double>;

TEST_CASE("power mean examples") {
  CHECK(eval_pmean(V{2, 3}, 5, 1) == doctest::Approx(2.6).epsilon(1e-14));
  for (double p : {-7.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
    CHECK(eval_pmean(V{6}, 6, p) == doctest::Approx(6).epsilon(1e-14));
    CHECK(eval_pmean(V{1, 1, 1, 1, 1}, 5, p) == doctest::Approx(1).epsilon(1e-14));
  }
  CHECK(eval_geometric(V{4}, 4) == doctest::Approx(4));
  CHECK(eval_geometric(V{1, 1}, 2) == doctest::Approx(1));
  CHECK(eval_geometric(V{2, 2}, 4) == doctest::Approx(2));
  CHECK(eval_pmean(V{3, 0, 1}, 4, CostModel::kInf) == 3);
  CHECK(eval_pmean(V{3, 0, 1}, 4, -CostModel::kInf) == 1);
}

TEST_CASE("power mean rejects inconsistent input") {
  CHECK_THROWS_AS(eval_pmean(V{2, 3}, 6, 1), ValidationError);
  CHECK_THROWS_AS(eval_pmean(V{-1, 3}, 2, 1), ValidationError);
  CHECK_THROWS_AS(eval_pmean(V{0, 0}, 0, 1), ValidationError);
  CHECK_THROWS_AS(eval_pmean(V{}, 0, 1), ValidationError);
}

TEST_CASE("large exponents stay finite") {
  // Direct evaluation of c^{p+1} overflows here; the log-space path must not.
  const double v = eval_pmean(V{1e6, 1e6, 2e6}, 4e6, 80);
  CHECK(std::isfinite(v));
  CHECK(v <= 2e6);
  CHECK(v > 1.9e6);
  const double w = eval_pmean(V{3, 1}, 4, -200);
  CHECK(w >= 1.0);
  CHECK(w < 1.05);
}

TEST_CASE("entropy, unit, rob, max, maxmin") {
  CHECK(eval_entropy(V{5}, 5) == 0.0);
  CHECK(eval_entropy(V{1, 1}, 2) == doctest::Approx(1));
  CHECK(eval_entropy(V{2, 1, 1}, 4) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(eval_unit(V{7}) == 1);
  CHECK(eval_unit(V{1, 1, 1}) == 3);
  CHECK(eval_unit(V{3, 2, 0}) == 2);
  CHECK(eval_rob(V{6}, 6, 0.3) == 1);
  CHECK(eval_rob(V{1, 1, 1, 1}, 4, 0.25) == doctest::Approx(4));
  CHECK(eval_rob(V{2, 2}, 4, 0.75) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(eval_maxmin(V{3, 1}) == 1);
  CHECK(eval_max(V{3, 1}) == 3);
  CHECK(eval_maxmin(V{4}) == 4);
  CHECK(eval_max(V{2, 2}) == 2);
  CHECK(eval_maxmin(V{2, 0, 2}) == 2);
}

TEST_CASE("concave tables") {
  const V ones(6, 1.0);
  CHECK(eval_concave(V{3, 2, 0, 1}, ones) == eval_unit(V{3, 2, 0, 1}));
  const V linear{1, 2, 3, 4, 5, 6};
  CHECK(eval_concave(V{3, 2, 1}, linear) == 6);
  CHECK(eval_concave(V{6}, linear) == 6);

  // Integral beta * n: the table reproduces rent-or-buy exactly.
  const auto table = rob_table(0.5, 8);
  CHECK(eval_concave(V{5, 2, 1}, table) == doctest::Approx(eval_rob(V{5, 2, 1}, 8, 0.5)));

  CHECK_THROWS_AS(CostModel::concave_table({1, 3}), ValidationError);  // convex step
  CHECK_THROWS_AS(eval_concave(V{7}, linear), ValidationError);
  CHECK_THROWS_AS(eval_concave(V{1.5, 0.5}, linear), ValidationError);
  CHECK_NOTHROW(CostModel::concave_table({2, 3, 3.5, 3}));  // not monotone, still concave
}

TEST_CASE("model validation and specs") {
  CHECK_THROWS_AS(CostModel::rent_or_buy(0.0), ValidationError);
  CHECK_THROWS_AS(CostModel::rent_or_buy(1.0), ValidationError);
  CHECK_THROWS_AS(CostModel::pmean(std::nan("")), ValidationError);
  CHECK(CostModel::pmean(1).spec() == "pmean:1");
  CHECK(CostModel::max_part().spec() == "max");
  CHECK(CostModel::max_min().spec() == "maxmin");
  CHECK(CostModel::entropy().orientation() == Orientation::kMinimize);
  CHECK(CostModel::unit().orientation() == Orientation::kMinimize);
  CHECK(CostModel::pmean(-3).orientation() == Orientation::kMaximize);
}

TEST_CASE("decomposition recombines to the value") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 6), size(0, 9);
  const std::vector<CostModel> models{CostModel::pmean(1),     CostModel::pmean(-2.5), CostModel::pmean(0.3),
                                      CostModel::geometric(),  CostModel::entropy(),   CostModel::unit(),
                                      CostModel::rent_or_buy(0.4), CostModel::max_part(), CostModel::max_min()};
  for (int t = 0; t < 200; ++t) {
    V sizes(len(rng));
    for (auto& c : sizes) c = size(rng);
    sizes[0] += 1;
    double n = 0;
    for (double c : sizes) n += c;
    for (const auto& m : models) {
      const auto ov = evaluate(m, sizes, n);
      CHECK(combine(m, ov.decomposition) == doctest::Approx(ov.value).epsilon(1e-12));
    }
  }
}

TEST_CASE("evaluators agree with direct formulas") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(1, 7), size(0, 12);
  for (int t = 0; t < 300; ++t) {
    V sizes(len(rng));
    for (auto& c : sizes) c = size(rng);
    sizes.back() += 1;
    double n = 0;
    for (double c : sizes) n += c;
    for (double p : {-3.0, -1.0, -0.4, 0.0, 0.7, 1.0, 2.0, 6.0}) {
      CHECK(eval_pmean(sizes, n, p) == doctest::Approx(oracle::pmean(sizes, n, p)).epsilon(1e-12));
    }
    CHECK(eval_entropy(sizes, n) == doctest::Approx(oracle::entropy_bits(sizes, n)).epsilon(1e-12));
    CHECK(eval_rob(sizes, n, 0.3) == doctest::Approx(oracle::rob(sizes, n, 0.3)).epsilon(1e-12));
    CHECK(eval_unit(sizes) == oracle::parts(sizes));
  }
}

TEST_CASE("identities linking the objectives") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> len(1, 8), size(0, 10);
  for (int t = 0; t < 300; ++t) {
    V sizes(len(rng));
    for (auto& c : sizes) c = size(rng);
    sizes[0] += 1;
    double n = 0;
    for (double c : sizes) n += c;
    // Entropy and the geometric mean.
    CHECK(eval_entropy(sizes, n) == doctest::Approx(std::log2(n) - std::log2(eval_geometric(sizes, n))).epsilon(1e-12));
    // The harmonic case counts parts.
    CHECK(n / eval_pmean(sizes, n, -1) == doctest::Approx(eval_unit(sizes)).epsilon(1e-12));
    // Edges inside cliques of these sizes.
    double pairs = 0;
    for (double c : sizes) pairs += c * (c - 1) / 2;
    CHECK(pairs == doctest::Approx(n / 2 * (eval_pmean(sizes, n, 1) - 1)).epsilon(1e-12));
  }
}

TEST_CASE("number formatting round-trips") {
  for (double x : {0.1, 2.6, 1.0 / 3.0, 1e-300, 123456789.0, -2.5}) {
    CHECK(std::stod(format_number(x)) == x);
  }
  CHECK(format_number(2.5) == "2.5");
  CHECK(format_number(3.0) == "3");
}
