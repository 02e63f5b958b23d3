#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using pathdet::testing::kSampleDetCanonical;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = pathdet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PATHDET_TEST_DATA) + "/" + name; }

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

nlohmann::json first_error(const Outcome& o) {
  return nlohmann::json::parse(o.err.substr(0, o.err.find('\n')));
}

}  // namespace

TEST_CASE("matrix") {
  auto text = run({"matrix", data("sample.json")});
  CHECK(text.code == 0);
  CHECK(count_lines(text.out) == 4);
  CHECK(text.out.find("x1_3") != std::string::npos);

  auto json = run({"matrix", data("sample.json"), "--format", "json"});
  CHECK(json.code == 0);
  CHECK(nlohmann::json::parse(json.out)[0][1] == "x1_3");

  auto stanley = run({"matrix", data("sample.json"), "--stanley"});
  CHECK(stanley.code == 2);
  CHECK(first_error(stanley)["error"] == "precondition");
  CHECK(run({"matrix", data("path3_k1.json"), "--stanley"}).out ==
        run({"matrix", data("path3_k1.json")}).out);
}

TEST_CASE("input errors") {
  auto malformed = run({"det", data("malformed.json")});
  CHECK(malformed.code == 2);
  CHECK(first_error(malformed)["error"] == "parse");
  CHECK(first_error(malformed).contains("detail"));

  auto missing = run({"det", data("no_such_file.json")});
  CHECK(missing.code == 2);
  CHECK(first_error(missing)["error"] == "io");

  CHECK(run({"det"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"det", data("sample.json"), "--algorithm", "gauss"}).code == 2);
  CHECK(run({"paths", data("sample.json")}).code == 2);
  CHECK(run({"paths", data("sample.json"), "--gf", "--list"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("det") {
  for (std::string algorithm : {"leibniz", "division-free", "lsd"}) {
    auto r = run({"det", data("sample.json"), "--algorithm", algorithm});
    CHECK(r.code == 0);
    CHECK(r.out == std::string(kSampleDetCanonical) + "\n");
  }
  CHECK(run({"det", data("empty0.json")}).out == "1\n");
  auto json = run({"det", data("sample.json"), "--format", "json"});
  CHECK(nlohmann::json::parse(json.out).size() == 37);

  auto bound = run({"det", data("n9.json"), "--algorithm", "leibniz"});
  CHECK(bound.code == 3);
  auto e = first_error(bound);
  CHECK(e["error"] == "bound");
  CHECK(e["bound"] == "oracle-n");
  CHECK(run({"det", data("n9.json")}).code == 0);
  CHECK(run({"--oracle-max-n", "9", "det", data("n9.json"), "--algorithm", "leibniz"}).code == 0);
  CHECK(run({"--term-ceiling", "5", "det", data("sample.json")}).code == 3);
}

TEST_CASE("paths") {
  auto list = run({"paths", data("sample.json"), "--list"});
  CHECK(list.code == 0);
  CHECK(count_lines(list.out) == 12);
  CHECK(list.out.find("1 -c1-> 2 -c1-> 4\n") != std::string::npos);
  CHECK(run({"paths", data("sample.json"), "--gf"}).out == run({"det", data("sample.json")}).out);
}

TEST_CASE("verify") {
  auto sample = run({"verify", data("sample.json")});
  CHECK(sample.code == 0);
  CHECK(sample.out.find("all checks passed on 1 graph(s)") != std::string::npos);

  auto random = run({"verify", "--random", "6", "2", "0.4", "7", "100"});
  CHECK(random.code == 0);
  CHECK(random.out.find("all checks passed on 100 graph(s)") != std::string::npos);

  CHECK(run({"verify", data("sample.json"), "--expect", data("sample_det.txt")}).code == 0);
  auto corrupted =
      run({"verify", data("sample.json"), "--expect", data("sample_det_corrupted.txt")});
  CHECK(corrupted.code == 1);
  CHECK(corrupted.out.find("FAIL") != std::string::npos);
  CHECK(corrupted.out.find("x2_1*x3_2") != std::string::npos);
  CHECK(first_error(corrupted)["error"] == "verification");
  CHECK(first_error(corrupted)["check"] == "det == expected");

  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("involution") {
  auto sample = run({"involution", data("sample.json")});
  CHECK(sample.code == 0);
  CHECK(sample.out.find("complex signed-weight sum: 0\n") != std::string::npos);

  auto small = run({"involution", data("empty3.json")});
  CHECK(small.code == 0);
  CHECK(small.out.find("no complex linear subdigraphs") != std::string::npos);

  auto pair = run({"involution", data("pair11_host.json"), "--lsd",
                   "(1 7 6 9 10 3 2)(4 5)(8 11)"});
  CHECK(pair.code == 0);
  CHECK(pair.out.find("-> (1 7 6 9 10 4 5 3 2)(8 11)\n") != std::string::npos);
  CHECK(pair.out.find("-> (1 7 6 9 10 3 2)(4 5)(8 11)\n") != std::string::npos);
  CHECK(pair.out.find("outer edge 10->3") != std::string::npos);
  CHECK(pair.out.find("left from 5") != std::string::npos);
  CHECK(pair.out.find("pair verified") != std::string::npos);

  CHECK(run({"involution", data("sample.json"), "--lsd", "(1 3 2)(4)"}).code == 2);
  CHECK(run({"involution", data("sample.json"), "--lsd", "(1 2)"}).code == 2);
  CHECK(run({"involution", data("n9.json"), "--lsd-max-n", "8"}).code == 2);
  CHECK(run({"--lsd-max-n", "8", "involution", data("n9.json")}).code == 3);
}

TEST_CASE("random") {
  auto r = run({"random", "5", "2", "0.5", "42"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"edges":[{"colors":[2],"from":1,"to":3},{"colors":[2],"from":1,"to":4},)"
        R"({"colors":[2],"from":1,"to":5},{"colors":[1,2],"from":2,"to":3},)"
        R"({"colors":[1],"from":2,"to":4},{"colors":[2],"from":3,"to":5},)"
        R"({"colors":[1,2],"from":4,"to":5}],"k":2,"n":5})"
        "\n");
  CHECK(run({"random", "5", "0", "0.5", "42"}).code == 2);
  CHECK(run({"random", "5", "2", "1.5", "42"}).code == 2);
}
