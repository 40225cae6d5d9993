#include "doctest.h"

#include "bgg/bggcli.hpp"
#include "bgg/error.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace bgg;
using namespace bgg::cli;

namespace {

std::vector<std::string> argv_of(const std::string& line) {
  std::vector<std::string> out{"bggtool"};
  std::istringstream is(line);
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

ErrorKind kind_of(const std::string& line) {
  try {
    parse_args(argv_of(line));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised for: " << line);
  return ErrorKind::ParseError;
}

int run_line(const std::string& line, std::string& out, std::string& err) {
  std::ostringstream o, e;
  int code = main_entry(argv_of(line), o, e);
  out = o.str();
  err = e.str();
  return code;
}

// Structural check of the report layout.
void check_schema(const nlohmann::json& j) {
  REQUIRE(j.is_object());
  CHECK(j.at("algebra").is_string());
  CHECK(j.at("sigma").is_array());
  CHECK(j.at("weight").is_array());
  for (const auto& c : j.at("columns")) {
    CHECK(c.at("level").is_number_integer());
    for (const auto& k : c.at("components")) {
      CHECK(k.at("label").is_string());
      const std::string e = k.at("e_eigenvalue").get<std::string>();
      CHECK(e.find('/') != std::string::npos);
      CHECK(k.at("dim").is_number_integer());
    }
  }
  for (const auto& a : j.at("arrows")) {
    CHECK(a.at("from").size() == 2);
    CHECK(a.at("to").size() == 2);
    CHECK(a.at("order").is_number_integer());
  }
  for (const auto& [name, v] : j.at("verify").items()) {
    const std::string s = v.get<std::string>();
    CHECK((s == "pass" || s == "fail"));
  }
}

}  // namespace

TEST_CASE("parsing a full command line") {
  JobSpec j = parse_args(argv_of("--algebra A3 --cross 1,3 --weight 0,0,0 diagram --emit dot,json"));
  CHECK(j.algebra == "A3");
  CHECK(j.sigma == std::vector<int>{1, 3});
  CHECK(j.weight == std::vector<int>{0, 0, 0});
  CHECK(j.command == Command::Diagram);
  CHECK(j.emit == std::vector<std::string>{"dot", "json"});
  CHECK(j.budgets == Budgets{});
  JobSpec k = parse_args(argv_of("--cartan 2,-1;-1,2 --cross 2 --weight 1,1 --emit json,text --max-jet-dim 900 verify"));
  CHECK(k.cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(k.command == Command::Verify);
  CHECK(k.emit == std::vector<std::string>{"text", "json"});
  CHECK(k.budgets.jet_dim == 900);
  CHECK(algebra_name(k) == "cartan:2,-1;-1,2");
}

TEST_CASE("bad input") {
  CHECK(kind_of("--algebra A3 --cross 0 --weight 0,0,0 diagram") == ErrorKind::ValidationError);
  CHECK(kind_of("--algebra A3 --cross 4 --weight 0,0,0 diagram") == ErrorKind::ValidationError);
  CHECK(kind_of("--algebra A3 --cross 1,3 --weight=1,-1,0 diagram") == ErrorKind::ValidationError);
  CHECK(kind_of("--algebra A3 --weight 0,0,0 diagram") == ErrorKind::ValidationError);
  CHECK(kind_of("--algebra A3 --cross 1 --weight 0,0 diagram") == ErrorKind::ValidationError);
  CHECK(kind_of("--algebra A2 --cartan 2,-1;-1,2 --cross 1 diagram") == ErrorKind::ValidationError);
  CHECK(kind_of("--algebra A2 --cross 1 --emit svg diagram") == ErrorKind::ValidationError);
  CHECK(kind_of("--algebra A2 --cross 1 --max-jet-dim 0 diagram") == ErrorKind::ValidationError);
  CHECK(kind_of("--algebra A2 --cross 1 --bogus 3 diagram") == ErrorKind::ParseError);
  CHECK(kind_of("--algebra Q2 --cross 1 diagram") == ErrorKind::ParseError);
  CHECK(kind_of("--cartan 2,-1;-1,x --cross 1 diagram") == ErrorKind::ParseError);
  try {
    parse_args(argv_of("--algebra A3 --cross 1,3 --weight 1,,0 diagram"));
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("character 3") != std::string::npos);
  }
  std::string out, err;
  CHECK(run_line("--algebra A3 --cross 0 diagram", out, err) == 2);
  CHECK(err.find("numbered from 1") != std::string::npos);
}

TEST_CASE("format then parse gives the same job") {
  for (const auto& line : {"--algebra A3 --cross 3,1 --weight 1,0,1 verify --emit json,text,dot",
                           "--algebra G2 --cross 2 cohomology --max-module-dim 50 --output /tmp/x",
                           "--cartan 2,-2;-1,2 --cross 1,2 --weight 0,3 diagram"}) {
    CAPTURE(line);
    JobSpec a = parse_args(argv_of(line));
    std::vector<std::string> args{"bggtool"};
    for (const auto& s : format_args(a)) args.push_back(s);
    CHECK(parse_args(args) == a);
  }
}

TEST_CASE("config files mirror the flags and flags win") {
  const char* path = "bggcli_test.cfg";
  {
    std::ofstream f(path);
    f << "# comment line\nalgebra = A1\ncross=1\nweight = 3  # m\nemit = \"json\"\ncommand = verify\n";
  }
  JobSpec j = parse_args({"bggtool", "--config", path, "--weight", "2"});
  CHECK(j.algebra == "A1");
  CHECK(j.weight == std::vector<int>{2});
  CHECK(j.emit == std::vector<std::string>{"json"});
  CHECK(j.command == Command::Verify);
  JobSpec k = parse_args({"bggtool", "--config", path, "cohomology"});
  CHECK(k.command == Command::Cohomology);
  CHECK(k.weight == std::vector<int>{3});
  {
    std::ofstream f(path);
    f << "algebra = A1\ncolour = blue\n";
  }
  try {
    parse_args({"bggtool", "--config", path});
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  std::remove(path);
}

TEST_CASE("diagram for the CR case: six columns with dimensions 1,4,5,5,4,1") {
  std::string out, err;
  REQUIRE(run_line("--algebra A3 --cross 1,3 --weight 0,0,0 diagram --emit json", out, err) == 0);
  auto j = nlohmann::json::parse(out);
  check_schema(j);
  REQUIRE(j["columns"].size() == 6);
  std::vector<int> dims;
  for (const auto& c : j["columns"]) {
    int d = 0;
    for (const auto& k : c["components"]) d += k["dim"].get<int>();
    dims.push_back(d);
  }
  CHECK(dims == std::vector<int>{1, 4, 5, 5, 4, 1});
  CHECK(j["arrows"].size() == 19);
  CHECK(j["verify"].empty());
}

TEST_CASE("sl2 diagram: one arrow of order m+1") {
  std::string out, err;
  REQUIRE(run_line("--algebra A1 --cross 1 --weight 3 diagram --emit json,dot", out, err) == 0);
  // formats come out in the fixed order text, dot, json
  auto cut = out.find("}\n{");
  REQUIRE(cut != std::string::npos);
  auto j = nlohmann::json::parse(out.substr(cut + 2));
  REQUIRE(j["arrows"].size() == 1);
  CHECK(j["arrows"][0]["order"] == 4);
  CHECK(j["arrows"][0]["from"] == nlohmann::json::array({0, 0}));
  CHECK(j["arrows"][0]["to"] == nlohmann::json::array({1, 0}));
  CHECK(j["columns"][1]["components"][0]["e_eigenvalue"] == "5/2");
  std::string dot = out.substr(0, cut + 2);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("h0_0 -> h1_0 [label=\"4\"];") != std::string::npos);
}

TEST_CASE("verify passes on a small case and reports every identity") {
  std::string out, err;
  CHECK(run_line("--algebra A2 --cross 1 --weight 1,0 verify --emit json", out, err) == 0);
  auto j = nlohmann::json::parse(out);
  check_schema(j);
  CHECK(j["verify"].size() >= 20);
  for (const auto& [name, v] : j["verify"].items()) {
    CAPTURE(name);
    CHECK(v == "pass");
  }
  CHECK(j["verify"].contains("del squared vanishes"));
  CHECK(j["verify"].contains("cohomology matches the Weyl group prediction"));
  CHECK(j["verify"].contains("equivariance defect of each splitting step"));
}

TEST_CASE("DOT output") {
  std::string out, err;
  // (a,b,c) = (0,0,1): the edge out of the top node towards the first row-two node has order c+1 = 2
  REQUIRE(run_line("--algebra A3 --cross 1,3 --weight 1,0,0 diagram --emit dot", out, err) == 0);
  CHECK(out.rfind("digraph bgg {", 0) == 0);
  CHECK(out.back() == '\n');
  CHECK(std::count(out.begin(), out.end(), '{') == std::count(out.begin(), out.end(), '}'));
  CHECK(out.find("[label=\"2\"]") != std::string::npos);
  CHECK(out.find("dim ") != std::string::npos);
  // cohomology only: columns without edges
  REQUIRE(run_line("--algebra A3 --cross 1,3 --weight 1,0,0 cohomology --emit dot", out, err) == 0);
  CHECK(out.find("->") == std::string::npos);
  CHECK(out.find("h5_0") != std::string::npos);
}

TEST_CASE("output is deterministic and can go to files") {
  std::string a, b, err;
  REQUIRE(run_line("--algebra B2 --cross 2 --weight 1,0 diagram --emit text,dot,json", a, err) == 0);
  REQUIRE(run_line("--algebra B2 --cross 2 --weight 1,0 diagram --emit text,dot,json", b, err) == 0);
  CHECK(a == b);
  CHECK(a.find('\r') == std::string::npos);
  REQUIRE(run_line("--algebra B2 --cross 2 --weight 1,0 diagram --emit dot,json --output bggcli_out", a, err) == 0);
  CHECK(a.empty());
  std::ifstream d("bggcli_out.dot"), j("bggcli_out.json");
  CHECK(d.good());
  CHECK(j.good());
  check_schema(nlohmann::json::parse(j));
  std::remove("bggcli_out.dot");
  std::remove("bggcli_out.json");
}

TEST_CASE("help and computation errors") {
  std::string out, err;
  CHECK(run_line("--help", out, err) == 0);
  CHECK(out.find("--cross") != std::string::npos);
  CHECK(run_line("--algebra A3 --cross 1,3 --weight 5,5,5 --max-module-dim 10 diagram", out, err) == 3);
  CHECK(err.find("DimensionOverBudget") != std::string::npos);
}
