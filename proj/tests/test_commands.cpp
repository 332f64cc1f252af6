#include <doctest.h>

#include <cstdlib>
#include <regex>
#include <sstream>

#include "tripart/commands.hpp"
#include "tripart/graph_core.hpp"
#include "tripart/records.hpp"

#include <json.hpp>

using namespace tripart;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tripart");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("count") {
  const Run trees = run({"count", "trees", "1", "1", "2", "--format", "json"});
  CHECK(trees.code == kExitOk);
  CHECK(record_from_json(trees.out).value == BigCount(8));

  const Run total = run({"count", "total-forests", "1", "1", "1", "--format", "json"});
  CHECK(record_from_json(total.out).value == BigCount(16));

  const Run too_many = run({"count", "forests-r", "1", "1", "2", "--r", "3"});
  CHECK(too_many.code == kExitUsage);
  CHECK_FALSE(too_many.err.empty());

  CHECK(run({"count", "forests-r", "1", "1", "2"}).code == kExitUsage);
  CHECK(run({"count", "rooted-trees", "2", "2", "0"}).code == kExitUsage);
  CHECK(run({"count", "trees", "0", "0", "0"}).code == kExitUsage);
  CHECK(run({"count", "leaves", "1", "1", "1"}).code == kExitUsage);
  CHECK(run({"count", "trees", "1", "1"}).code == kExitUsage);
}

TEST_CASE("count with oracle fills oracle_value and match") {
  for (const char* q : {"trees", "rooted-trees", "total-forests"}) {
    const Run r = run({"count", q, "2", "1", "3", "--oracle", "--format", "json"});
    CHECK(r.code == kExitOk);
    const OutputRecord rec = record_from_json(r.out);
    REQUIRE(rec.oracle_value.has_value());
    CHECK(*rec.oracle_value == rec.value);
    CHECK(rec.match == true);
  }
  const Run r = run({"count", "forests-r", "2", "2", "2", "--r", "2", "--oracle", "--format", "csv"});
  CHECK(r.out == "quantity,m,n,p,r,value,oracle_value,match\nforests-r,2,2,2,2,192,192,true\n");
}

TEST_CASE("big counts never appear as JSON numbers") {
  const Run r = run({"count", "trees", "20", "20", "20", "--format", "json"});
  CHECK(std::regex_search(r.out, std::regex(R"("value":"[0-9]{60,}")")));
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "4", "4", "4", "--oracles", "kirchhoff,minors,detLI"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("0 mismatches") != std::string::npos);

  const Run census = run({"verify", "2", "2", "2", "--oracles", "census"});
  CHECK(census.code == kExitOk);
  CHECK(census.err.empty());

  CHECK(run({"verify", "0", "1", "1"}).code == kExitUsage);
  CHECK(run({"verify", "1", "1", "1", "--oracles", "astrology"}).code == kExitUsage);
}

TEST_CASE("verify skips over-bound census tuples with a warning") {
  const Run r = run({"verify", "3", "3", "2", "--oracles", "census", "--max-edges", "12"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("warning: skipping census") != std::string::npos);
}

TEST_CASE("verify --all lists every comparison in order") {
  const Run r = run({"verify", "1", "1", "2", "--oracles", "sums,construction", "--all", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto rows = lines(r.out);
  // 7 sum comparisons and 3 construction comparisons.
  REQUIRE(rows.size() == 10);
  CHECK(record_from_json(rows.front()).p == 1);
  CHECK(record_from_json(rows.back()).quantity == "forests-r/construction");
  for (const auto& row : rows) CHECK(record_from_json(row).match == true);
}

TEST_CASE("census") {
  const Run tri = run({"census", "1", "1", "1", "--format", "json"});
  CHECK(tri.code == kExitOk);
  const auto rows = lines(tri.out);
  REQUIRE(rows.size() == 8);
  BigCount sum;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) sum += record_from_json(rows[i]).value;
  CHECK(sum == BigCount(16));
  const OutputRecord total = record_from_json(rows.back());
  CHECK(total.quantity == "census-total");
  CHECK(total.value == BigCount(16));
  CHECK(total.match == true);

  const Run k11 = run({"census", "1", "1", "0", "--format", "csv"});
  CHECK(k11.out ==
        "quantity,m,n,p,r,value,oracle_value,match\n"
        "census-profile(0,1,0),1,1,0,0,1,,\n"
        "census-profile(1,0,0),1,1,0,0,1,,\n"
        "census-profile(1,1,0),1,1,0,0,1,,\n"
        "census-total,1,1,0,,3,3,true\n");

  CHECK(run({"census", "3", "3", "3"}).code == kExitUsage);
  CHECK(run({"census", "2", "2", "2", "--max-edges", "11"}).code == kExitUsage);
}

TEST_CASE("census edge bound from the environment") {
  ::setenv("FOREST_CENSUS_MAX_EDGES", "11", 1);
  CHECK(census_edge_bound_from_env() == 11);
  CHECK(run({"census", "2", "2", "2"}).code == kExitUsage);
  CHECK(run({"census", "2", "2", "2", "--max-edges", "12"}).code == kExitOk);
  ::setenv("FOREST_CENSUS_MAX_EDGES", "lots", 1);
  CHECK(run({"census", "1", "1", "1"}).code == kExitUsage);
  ::unsetenv("FOREST_CENSUS_MAX_EDGES");
  CHECK(census_edge_bound_from_env() == 22);
}

TEST_CASE("sample") {
  const Run first = run({"sample", "1", "1", "2", "--count", "3", "--seed", "7", "--format", "json"});
  CHECK(first.code == kExitOk);
  const Run again = run({"sample", "1", "1", "2", "--count", "3", "--seed", "7", "--format", "json"});
  CHECK(first.out == again.out);

  const LabeledGraph g = build_complete_multipartite({1, 1, 2});
  const auto rows = lines(first.out);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    const auto j = nlohmann::json::parse(row);
    RootedForest t;
    for (const auto& v : j.at("parent")) t.parent.push_back(v.is_null() ? kNoParent : v.get<Vertex>());
    const Vertex root[] = {0};
    CHECK(is_rooted_spanning_forest(g, t, root));
  }

  const Run single = run({"sample", "1", "0", "0", "--count", "1", "--seed", "1"});
  CHECK(single.code == kExitOk);
  CHECK(single.out == "tree 0: -\n");

  CHECK(run({"sample", "3", "0", "0"}).code == kExitUsage);
  CHECK(run({"sample", "0", "0", "0"}).code == kExitUsage);
}

TEST_CASE("bench") {
  const Run one = run({"bench", "1", "1"});
  CHECK(one.code == kExitOk);
  const auto rows = lines(one.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "size,method,nanoseconds");
  CHECK(rows[1].rfind("1,closed-form,", 0) == 0);
  CHECK(rows[2].rfind("1,determinant,", 0) == 0);

  CHECK(run({"bench", "5", "0"}).code == kExitUsage);
}

TEST_CASE("closed form outruns the determinant at size 50") {
  const Run r = run({"bench", "50", "3"});
  REQUIRE(r.code == kExitOk);
  long long closed = -1, det = -1;
  for (const auto& row : lines(r.out)) {
    if (row.rfind("50,closed-form,", 0) == 0) closed = std::stoll(row.substr(15));
    if (row.rfind("50,determinant,", 0) == 0) det = std::stoll(row.substr(15));
  }
  REQUIRE(closed > 0);
  REQUIRE(det > 0);
  CHECK(closed < det);
}
