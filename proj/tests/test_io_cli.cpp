#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

#include "domlat/infinite.hpp"
#include "domlat/io.hpp"
#include "domlat/lattice.hpp"
#include "domlat/oracle.hpp"

using namespace domlat;

namespace {

std::string edges_text(const LatticeDiagram& d) {
  std::ostringstream out;
  write_edges(out, d);
  return out.str();
}

/// Runs the installed command line, captures stdout, returns the exit code.
int run_cli(const std::string& args, std::string* captured = nullptr) {
  std::string cmd = std::string(DOMLAT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  if (captured) *captured = out;
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("edge list golden form") {
  CHECK(edges_text(build_naive(3)) ==
        "n=3\n"
        "2,1\t1\t1,1,1\n"
        "3\t1\t2,1\n");
  CHECK(edges_text(build_naive(0)) == "n=0\n");
  CHECK(edges_text(build_naive(1)) == "n=1\n");
}

TEST_CASE("edge list round trip") {
  for (int n = 0; n <= 7; ++n) {
    std::string text = edges_text(build_naive(n));
    std::istringstream in(text);
    LatticeDiagram back = read_edges(in);
    CHECK(edges_text(back) == text);
    CHECK(back.node_count() == build_naive(n).node_count());
  }
  // Cumulative variant keeps its header and the 0-labeled links.
  std::string text = edges_text(build_L_leq(3));
  CHECK(text.rfind("n<=3\n", 0) == 0);
  std::istringstream in(text);
  LatticeDiagram back = read_edges(in);
  CHECK(back.is_cumulative());
  CHECK(back.node_count() == 7);
  CHECK(edges_text(back) == text);
}

TEST_CASE("edge list reader rejects malformed input") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_edges(in), std::runtime_error);
  };
  reject("weight=3\n");                  // bad header
  reject("n=3\n2,1\t1\n");               // missing field
  reject("n=3\n2,1\tx\t1,1,1\n");        // non-numeric label
  reject("n=3\n2,2\t1\t1,1,1\n");        // wrong weight on a node
}

TEST_CASE("json round trip and shape") {
  for (int n : {0, 1, 5, 7}) {
    LatticeDiagram d = build_naive(n);
    std::ostringstream out;
    write_json(out, d);
    std::istringstream in(out.str());
    LatticeDiagram back = read_json(in);
    CHECK(edges_text(back) == edges_text(d));
  }
  std::ostringstream out;
  write_json(out, build_naive(3));
  auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["n"] == 3);
  CHECK_FALSE(doc.contains("cumulative"));
  CHECK(doc["nodes"].size() == 3);
  CHECK(doc["nodes"][0] == "1,1,1");  // ascending order
  REQUIRE(doc["edges"].size() == 2);
  CHECK(doc["edges"][0].is_array());       // triples, not objects
  CHECK(doc["edges"][0].size() == 3);
  CHECK(doc["edges"][0][0] == "2,1");
  CHECK(doc["edges"][0][1] == 1);
  CHECK(doc["edges"][0][2] == "1,1,1");

  std::ostringstream cumulative;
  write_json(cumulative, build_L_leq(2));
  auto cdoc = nlohmann::json::parse(cumulative.str());
  CHECK(cdoc["cumulative"] == true);
  std::istringstream cin_(cumulative.str());
  CHECK(read_json(cin_).is_cumulative());
}

TEST_CASE("json reader rejects malformed input") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS(read_json(in));
  };
  reject("{}");
  reject(R"({"n": 2, "nodes": ["2"], "edges": [["2", 1, "1,1"]]})");  // endpoint missing
  reject(R"({"n": 2, "nodes": ["2", "1,1"], "edges": [["2", 1]]})");  // short triple
  reject("not json at all");
}

TEST_CASE("dot output parses back") {
  LatticeDiagram d = build_naive(5);
  std::ostringstream out;
  write_dot(out, d);
  std::istringstream in(out.str());
  DotContent dot = parse_dot(in);
  CHECK(dot.graph_name == "lattice");
  CHECK(dot.isolated.empty());  // weight 5 leaves nothing unconnected
  CHECK(dot.edges.size() == static_cast<std::size_t>(d.edge_count()));
  std::set<std::tuple<std::string, int, std::string>> expected;
  d.for_each_edge([&](LatticeDiagram::Handle src, int label, LatticeDiagram::Handle dst) {
    expected.insert({to_text(d.partition_of(src)), label, to_text(d.partition_of(dst))});
  });
  CHECK(std::set<std::tuple<std::string, int, std::string>>(dot.edges.begin(),
                                                            dot.edges.end()) == expected);

  // A one-node diagram renders as a single bare statement.
  std::ostringstream lone;
  write_dot(lone, build_naive(1));
  std::istringstream lone_in(lone.str());
  DotContent lone_dot = parse_dot(lone_in);
  CHECK(lone_dot.isolated == std::vector<std::string>{"1"});
  CHECK(lone_dot.edges.empty());
}

TEST_CASE("cli: build output and method equivalence") {
  std::string incremental, naive;
  CHECK(run_cli("build 3 --format edges", &incremental) == 0);
  CHECK(incremental == "n=3\n2,1\t1\t1,1,1\n3\t1\t2,1\n");
  CHECK(run_cli("build 7 --method naive", &naive) == 0);
  CHECK(run_cli("build 7 --method incremental", &incremental) == 0);
  CHECK(naive == incremental);
  // Deterministic: repeated runs are byte-identical.
  std::string again;
  CHECK(run_cli("build 7 --method incremental", &again) == 0);
  CHECK(again == incremental);
  std::string json_text;
  CHECK(run_cli("build 4 --format json", &json_text) == 0);
  CHECK(nlohmann::json::parse(json_text)["nodes"].size() == 5);
}

TEST_CASE("cli: count") {
  std::string out;
  CHECK(run_cli("count 10", &out) == 0);
  CHECK(out == "42\n");
  CHECK(run_cli("count 10 --check", &out) == 0);
  CHECK(out == "42 42 OK\n");
  CHECK(run_cli("count 6 --length 3", &out) == 0);
  CHECK(out == "3\n");
  CHECK(run_cli("count 30 --length 5 --check", &out) == 0);
  CHECK(out.find(" OK") != std::string::npos);
  CHECK(run_cli("count 100", &out) == 0);
  CHECK(out == "190569292\n");
  CHECK(run_cli("count 6 --length 9", &out) == 2);
  CHECK(run_cli("count -3", &out) == 2);
}

TEST_CASE("cli: meet and join") {
  std::string out;
  CHECK(run_cli("meet 3,1,1,1 2,2,2", &out) == 0);
  CHECK(out == "2,2,1,1\n");
  CHECK(run_cli("join 3,1,1,1 2,2,2", &out) == 0);
  CHECK(out == "3,2,1\n");
  CHECK(run_cli("join 2,1,1 1,1,1,1", &out) == 0);
  CHECK(out == "2,1,1\n");
  CHECK(run_cli("meet inf:2,1 inf:3", &out) == 0);
  CHECK(out == "inf:2,1\n");
  CHECK(run_cli("join inf:2,2 inf:3,1", &out) == 0);
  CHECK(out == "inf:3,1\n");
  CHECK(run_cli("meet inf:2,1 3", &out) == 2);   // mixed kinds
  CHECK(run_cli("meet 2,1 4", &out) == 2);       // weight mismatch
  CHECK(run_cli("meet 1,2 2,1", &out) == 2);     // not a partition
}

TEST_CASE("cli: render") {
  std::string out;
  CHECK(run_cli("render 3,3,1", &out) == 0);
  CHECK(out == "##\n##\n###\n");
  CHECK(run_cli("render 0", &out) == 0);
  CHECK(out.empty());
  CHECK(run_cli("render 2,x", &out) == 2);
}

TEST_CASE("cli: tree and stacked diagram exports") {
  std::string out;
  CHECK(run_cli("tree --depth 2 --format dot", &out) == 0);
  std::istringstream in(out);
  DotContent dot = parse_dot(in);
  CHECK(dot.graph_name == "tree");
  CHECK(dot.edges.size() == 3);
  CHECK(run_cli("linf --bound 2 --format json", &out) == 0);
  auto doc = nlohmann::json::parse(out);
  CHECK(doc["cumulative"] == true);
  CHECK(doc["nodes"].size() == 4);
  CHECK(doc["edges"].size() == 3);
}

TEST_CASE("cli: verify") {
  std::string out;
  CHECK(run_cli("verify 4", &out) == 0);
  CHECK(out.find("length convention") != std::string::npos);
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(out.find("ok - ") != std::string::npos);
  // The cubic-cost guard refuses big weights unless forced.
  CHECK(run_cli("verify 20", &out) == 2);
}

TEST_CASE("cli: bench") {
  std::string out;
  CHECK(run_cli("bench 0 1", &out) == 2);  // nothing measurable: step 0 is warmup
  CHECK(run_cli("bench 3 6", &out) == 0);
  int rows = 0;
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line.find("ratio") == std::string::npos) ++rows;
  CHECK(rows == 3);
  CHECK(out.find("max/min per-item ratio:") != std::string::npos);
}

TEST_CASE("cli: usage errors") {
  std::string out;
  CHECK(run_cli("", &out) == 2);            // a subcommand is required
  CHECK(run_cli("frobnicate", &out) == 2);
  CHECK(run_cli("build", &out) == 2);       // missing weight
  CHECK(run_cli("build -1", &out) == 2);
  CHECK(run_cli("build 3 --format yaml", &out) == 2);
  CHECK(run_cli("--help", &out) == 0);
}
