#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hallmod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string temp_path(const std::string& name) { return "/tmp/hallmod_test_cli_" + name; }

}  // namespace

TEST_CASE("hall example") {
  auto r = run({"hall", "--kind", "alternating", "--mu", "1", "--nu", ""});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == R"j({"kind":"alternating","mu":[1],"nu":[],"entries":[{"lambda":[1],"poly":[1,1]}]})j");
}

TEST_CASE("hl example") {
  auto r = run({"hl", "--lambda", "2", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) ==
        R"j({"lambda":[2],"n":2,"kind":"P","poly":{"nvars":2,"terms":[{"partition":[1,1],"coeff":"(1 + -1*t^1)/(1)"},{"partition":[2],"coeff":"(1)/(1)"}]}})j");
  auto q = run({"hl", "--lambda", "1", "--n", "2", "--which", "Q", "--format", "csv"});
  CHECK(q.out == "partition,coeff\n1,(1 + -1*t^1)/(1)\n");
}

TEST_CASE("enumerate") {
  // Z/4 x Z/2 has one subgroup of type (1,1), with quotient of type (1)
  auto r = run({"enumerate", "--lambda", "2,1", "--mu", "1", "--nu", "1,1", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) ==
        R"j({"kind":"classical","ring":{"p":2,"k":2},"lambda":[2,1],"mu":[1],"nu":[1,1],"count":1})j");
  auto h = run({"enumerate", "--kind", "hermitian", "--lambda", "1", "--p", "3"});
  CHECK(h.code == 0);
  CHECK(h.out.find(R"j("ring":{"p":3,"k":1,"c":2})j") != std::string::npos);
  CHECK(run({"enumerate", "--lambda", "1", "--mu", "1", "--p", "2"}).code == 2);
  CHECK(run({"enumerate", "--lambda", "1", "--p", "4"}).code == 2);
}

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", "--suite", "lemma5.3", "--tmax", "6"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find(R"j("status":"fail")j") == std::string::npos);
  // the default truncation L = 14 is too short for the 1e-5 tolerance
  auto bad = run({"verify", "--suite", "prop1.3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find(R"j("status":"fail")j") != std::string::npos);
  CHECK(run({"verify", "--suite", "prop1.3", "--L", "30", "--tol", "1e-7"}).code == 0);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--suite", "no-such-suite"}).code == 2);
  CHECK(run({"verify", "--suite", "remark-series", "--primes", "4"}).code == 2);
  CHECK(run({"verify", "--suite", "thm1.1-her", "--primes", "2"}).code == 2);
  CHECK(run({"verify", "--suite", "lemma5.3", "--tol", "0"}).code == 2);
  CHECK(run({"hl", "--lambda", "2,a", "--n", "2"}).code == 2);
  CHECK(run({"hl", "--lambda", "1,1,1", "--n", "2"}).code == 2);
  CHECK(run({"hall", "--kind", "symmetric", "--mu", "1", "--nu", "1"}).code == 2);
  CHECK(run({"measure", "--q", "1/2"}).code == 2);
  CHECK(run({"measure", "--q", "x"}).code == 2);
  auto r = run({"measure", "--q", "2", "--L", "3", "--sample", "10"});
  CHECK(r.code == 2);
  CHECK(r.err.find("InsufficientMass") != std::string::npos);
}

TEST_CASE("reports are reproducible") {
  std::vector<std::string> args{"measure", "--q", "3", "--L", "14", "--sample", "50", "--seed", "11"};
  auto a = run(args), b = run(args);
  CHECK(a.out.find("timestamp") != std::string::npos);
  args.push_back("--no-timestamp");
  auto c = run(args), d = run(args);
  CHECK(c.out == d.out);
  CHECK(c.out.find("timestamp") == std::string::npos);
  args[8] = "12";
  CHECK(run(args).out != c.out);

  std::vector<std::string> v{"verify", "--suite", "appendixA", "--tmax", "3", "--no-timestamp"};
  auto serial = run(v);
  v.push_back("--parallelism");
  v.push_back("3");
  CHECK(run(v).out == serial.out);
  setenv("HALLMOD_PARALLELISM", "2", 1);
  auto env = run({"verify", "--suite", "appendixA", "--tmax", "3", "--no-timestamp"});
  unsetenv("HALLMOD_PARALLELISM");
  CHECK(env.out == serial.out);
}

TEST_CASE("measure table") {
  auto r = run({"measure", "--kind", "nopairing", "--u", "0", "--q", "3", "--L", "2", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "lambda,prob,cumprob");
  std::getline(in, line);
  CHECK(line.rfind(",", 0) == 0);  // the empty partition comes first
  auto j = run({"measure", "--kind", "hermitian", "--q", "3", "--L", "1", "--no-timestamp"});
  CHECK(first_line(j.out).rfind(R"j({"lambda":[],"prob":)j", 0) == 0);
}

TEST_CASE("config file and output path") {
  std::string cfg = temp_path("cfg.ini"), outp = temp_path("out.jsonl");
  {
    std::ofstream f(cfg);
    f << "# shared options\nprimes = 3\nno-timestamp = true\n[verify]\ntmax = 2\n";
  }
  auto r = run({"--config", cfg, "verify", "--suite", "remark-series", "--output", outp});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(outp);
  std::stringstream ss;
  ss << in.rdbuf();
  auto direct = run({"verify", "--suite", "remark-series", "--primes", "3", "--tmax", "2", "--no-timestamp"});
  CHECK(ss.str() == direct.out);
  CHECK(ss.str().find(R"j("p":"2")j") == std::string::npos);
  std::remove(cfg.c_str());
  std::remove(outp.c_str());
  CHECK(run({"--config", temp_path("missing.ini"), "verify", "--suite", "lemma5.2"}).code == 2);
}
