#include <filesystem>

#include "doctest.h"
#include "pmcover/errors.hpp"
#include "pmcover/io.hpp"
#include "pmcover/rational.hpp"
#include "pmcover/report.hpp"

using namespace pmcover;
using nlohmann::json;

namespace {
std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "pmcover_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}
}  // namespace

TEST_CASE("instance files") {
  write_text_file(scratch("a.json"), R"({"n":3,"sets":[[0,1],[1,2]]})");
  CHECK(load_instance(scratch("a.json")).k() == 2);

  write_text_file(scratch("b.json"), R"({"n":2,"sets":[[0]]})");
  CHECK_THROWS_WITH_AS(load_instance(scratch("b.json")), doctest::Contains("element 1 uncovered"), ValidationError);

  write_text_file(scratch("c.json"), R"({"n":2,"sets":[[0,1]],"weights":[2,3]})");
  CHECK(load_instance(scratch("c.json")).total_weight() == 5);

  write_text_file(scratch("d.json"), R"({"n":2,"sets":[[0,1]]")");
  CHECK_THROWS_AS(load_instance(scratch("d.json")), ParseError);
  CHECK_THROWS_AS(load_instance(scratch("missing.json")), ParseError);
  CHECK_THROWS_AS(setsystem_from_json(json::parse(R"({"sets":[[0]]})")), ParseError);
  CHECK_THROWS_AS(setsystem_from_json(json::parse(R"({"n":1,"sets":[[0.5]]})")), ParseError);
  CHECK_THROWS_AS(setsystem_from_json(json::parse(R"({"n":1,"sets":[[0]],"version":2})")), ParseError);
}

TEST_CASE("names and weight spellings") {
  const auto sys = setsystem_from_json(json::parse(
      R"({"n":3,"names":["a","b","c"],"sets":[["a","b"],[2]],"weights":[1,"2/3",0.25]})"));
  CHECK(sys.set(0)[1] == 1);
  CHECK(sys.weights()[1] == Rational(2, 3));
  CHECK(sys.weights()[2] == Rational(1, 4));
  CHECK(setsystem_from_json(to_json(sys)) == sys);
  CHECK_THROWS_AS(setsystem_from_json(json::parse(R"({"n":1,"names":["a"],"sets":[["z"]]})")), ValidationError);
}

TEST_CASE("round trip of generated instances") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto sys = seed % 2 ? gen_random(7, 4, 0.3, seed) : gen_random_weighted(7, 4, 0.3, 9, seed);
    save_instance(sys, scratch("rt.json"));
    CHECK(load_instance(scratch("rt.json")) == sys);
  }
}

TEST_CASE("graphs") {
  const auto g = graph_from_json(json::parse(R"({"n":3,"edges":[[0,1],[1,2]]})"));
  CHECK(g.edge_count() == 2);
  CHECK(graph_from_json(to_json(g)).edges() == g.edges());
  const auto d = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\ne 2 1\n");
  CHECK(d.edge_count() == 3);
  write_text_file(scratch("g.col"), "p edge 2 1\ne 1 2\n");
  CHECK(load_graph(scratch("g.col")).adjacent(0, 1));
  write_text_file(scratch("g.json"), R"({"n":2,"edges":[]})");
  CHECK(load_graph(scratch("g.json")).edge_count() == 0);
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ValidationError);
}

TEST_CASE("intervals") {
  const auto iv = intervals_from_json(json::parse(R"({"intervals":[[0,1],[0.5,2]]})"));
  CHECK(iv.size() == 2);
  CHECK(intervals_from_json(to_json(iv)).intervals()[1].left == 0.5);
  CHECK_THROWS_AS(intervals_from_json(json::parse(R"({"intervals":[[0]]})")), ParseError);
  CHECK_THROWS_AS(intervals_from_json(json::parse(R"({"intervals":[[3,1]]})")), ValidationError);
}

TEST_CASE("model specs") {
  CHECK(parse_model_spec("pmean:2").p() == 2);
  CHECK(parse_model_spec("pmean:-inf").spec() == "maxmin");
  CHECK(parse_model_spec("pmean:inf").spec() == "max");
  CHECK(parse_model_spec("entropy").kind() == CostModel::Kind::kEntropy);
  CHECK(parse_model_spec("unit").kind() == CostModel::Kind::kUnit);
  CHECK(parse_model_spec("rob:0.25").beta() == 0.25);
  CHECK(parse_model_spec("maxmin").spec() == "maxmin");
  CHECK(parse_model_spec("max").spec() == "max");
  write_text_file(scratch("t.json"), "[1, 1.5, 1.75]");
  CHECK(parse_model_spec("table:" + scratch("t.json").string()).table().size() == 3);
  write_text_file(scratch("t2.json"), R"({"values":[1,2]})");
  CHECK(parse_model_spec("table:" + scratch("t2.json").string()).table().size() == 2);
  write_text_file(scratch("t3.json"), "[1, 3]");
  CHECK_THROWS_AS(parse_model_spec("table:" + scratch("t3.json").string()), ValidationError);
  CHECK_THROWS_AS(parse_model_spec("pmean:x"), ParseError);
  CHECK_THROWS_AS(parse_model_spec("pmean"), ParseError);
  CHECK_THROWS_AS(parse_model_spec("rob:2"), ValidationError);
  CHECK_THROWS_AS(parse_model_spec("bogus"), ParseError);
}

TEST_CASE("reports") {
  SetSystem sys(4, {{0, 1, 2}, {2, 3}, {3}});
  const auto doc = cover_report(sys, Cover(sys, {0, 0, 0, 1}), evaluate(CostModel::pmean(1), std::vector<double>{3, 1, 0}, 4));
  CHECK(doc["assignment"] == json({0, 0, 0, 1}));
  CHECK(doc["part_sizes"] == json({3, 1, 0}));
  CHECK(doc["objective"].get<double>() == doctest::Approx(2.5));
  CHECK(doc["model"] == "pmean:1");
  CHECK(doc["model_spec"]["kind"] == "pmean");
  CHECK(doc.dump() == cover_report(sys, Cover(sys, {0, 0, 0, 1}),
                                   evaluate(CostModel::pmean(1), std::vector<double>{3, 1, 0}, 4))
                          .dump());
}
