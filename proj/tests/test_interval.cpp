#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "pmcover/errors.hpp"
#include "pmcover/interval.hpp"

using namespace pmcover;

TEST_CASE("interval validation") {
  CHECK_THROWS_AS(IntervalSet({{2, 1}}), ValidationError);
  CHECK_THROWS_AS(IntervalSet({{0, std::nan("")}}), ValidationError);
  const IntervalSet iv({{0, 1}, {1, 2}, {3, 4}});
  const auto g = iv.to_graph();
  CHECK(g.adjacent(0, 1));  // closed intervals touching at 1
  CHECK_FALSE(g.adjacent(1, 2));
}

TEST_CASE("hand examples") {
  const IntervalSet nested({{0, 10}, {1, 9}, {2, 8}, {3, 7}});
  const auto one = interval_clique_partition(nested, 1);
  CHECK(one.parts.size() == 1);
  CHECK(one.score == 16);

  const IntervalSet apart({{0, 1}, {2, 3}, {4, 5}});
  const auto three = interval_clique_partition(apart, 1);
  CHECK(three.parts.size() == 3);
  CHECK(three.score == 3);

  const IntervalSet mixed({{0, 2}, {1, 3}, {2, 4}, {5, 6}});
  const auto m = interval_clique_partition(mixed, 1);
  CHECK(m.score == oracle::best_interval_partition(mixed, 1));
  CHECK(m.score == 10);  // {0,1,2} share the point 2

  CHECK(interval_clique_partition(IntervalSet({}), 1).parts.empty());
  CHECK_THROWS_AS(interval_clique_partition(mixed, -0.5), ValidationError);
}

TEST_CASE("partitions are valid clique partitions") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto iv = gen_random_intervals(1 + static_cast<int>(seed % 12), 20, 6, seed);
    for (double p : {0.0, 0.5, 1.0, 3.0}) {
      const auto part = interval_clique_partition(iv, p);
      std::vector<int> seen(iv.size(), 0);
      double score = 0;
      for (std::size_t j = 0; j < part.parts.size(); ++j) {
        for (int i : part.parts[j]) {
          ++seen[i];
          CHECK(iv.intervals()[i].left <= part.stab_points[j]);
          CHECK(part.stab_points[j] <= iv.intervals()[i].right);
          CHECK(part.part_of[i] == static_cast<int>(j));
        }
        const double c = static_cast<double>(part.parts[j].size());
        score += p == 0.0 ? c * std::log(c) : std::pow(c, p + 1);
      }
      for (int s : seen) CHECK(s == 1);
      CHECK(part.score == doctest::Approx(score).epsilon(1e-12));
    }
  }
}

TEST_CASE("dynamic program matches exhaustive search") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto iv = gen_random_intervals(1 + static_cast<int>(seed % 9), 15, 5, seed + 1000);
    for (double p : {0.0, 0.5, 1.0, 2.0}) {
      CHECK(interval_clique_partition(iv, p).score ==
            doctest::Approx(oracle::best_interval_partition(iv, p)).epsilon(1e-12));
    }
  }
}

TEST_CASE("real-valued endpoints and duplicates") {
  const IntervalSet iv({{0.5, 1.25}, {0.5, 1.25}, {1.25, 2.0}, {1.3, 1.4}, {-3.0, 0.5}});
  for (double p : {0.0, 1.0, 2.0}) {
    CHECK(interval_clique_partition(iv, p).score == doctest::Approx(oracle::best_interval_partition(iv, p)));
  }
}
