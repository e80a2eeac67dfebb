#include <doctest.h>

#include <stdexcept>

#include <sstream>
#include <string>
#include <vector>

#include "antipower/serialize.hpp"
#include "commands.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "antipower");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = antipower::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

antipower::json payload(const std::string& text) {
  auto j = antipower::json::parse(text);
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("generate") {
  CHECK(cli({"generate", "thue-morse", "16"}).out == "0110100110010110\n");
  CHECK(cli({"generate", "periodic:01", "5"}).out == "01010\n");
  CHECK(cli({"generate", "recurrent-avoider", "5"}).out == "01110\n");
  auto j = payload(cli({"generate", "fibonacci", "7", "--format", "json"}).out);
  CHECK(j["command"] == "generate");
  CHECK(j["result"]["word"] == "0100101");
  CHECK(cli({"generate", "nonsense", "5"}).code == 2);
  CHECK(cli({"generate", "thue-morse"}).code == 2);
  CHECK(cli({"generate", "thue-morse", "100", "--cap", "10"}).code == 3);
}

TEST_CASE("ap-table") {
  auto r = cli({"ap-table", "thue-morse", "3-6"});
  CHECK(r.code == 0);
  CHECK(r.out == "k,ap_min,length\n3,5,15\n4,5,20\n5,5,25\n6,5,30\n");
  CHECK(cli({"ap-table", "thue-morse", "30"}).out == "k,ap_min,length\n30,29,870\n");
  CHECK(cli({"ap-table", "periodic:01", "3", "--limit", "1000"}).out == "k,ap_min,length\n3,,\n");
  auto j = payload(cli({"ap-table", "periodic:01", "3", "--limit", "100", "--format", "json"}).out);
  CHECK(j["result"][0]["ap_min"].is_null());
  CHECK(cli({"ap-table", "thue-morse", "1-3"}).code == 2);
  CHECK(cli({"ap-table", "thue-morse", "100", "--cap", "1000"}).code == 3);
}

TEST_CASE("check") {
  CHECK(cli({"check", "literal:aabaaabbbaba", "4"}).code == 0);
  CHECK(cli({"check", "literal:aabaaabbbaba", "4"}).out == "holds\n");
  CHECK(cli({"check", "literal:010101", "3"}).code == 1);
  CHECK(cli({"check", "literal:010101", "3", "--mode", "power"}).code == 0);
  auto scan = cli({"check", "recurrent-avoider", "6", "--mode", "scan", "--limit", "3125"});
  CHECK(scan.code == 1);
  CHECK(scan.out == "not-found\n");
  auto hit = cli({"check", "thue-morse", "2", "--mode", "scan", "--limit", "10"});
  CHECK(hit.code == 0);
  CHECK(hit.out == "found position=1 block_length=1\n");
  auto lit = cli({"check", "literal:0001", "2", "--mode", "scan", "--format", "json"});
  CHECK(payload(lit.out)["result"]["position"] == 3);
  CHECK(cli({"check", "thue-morse", "3", "--limit", "15"}).code == 0);
  CHECK(cli({"check", "thue-morse", "3"}).code == 2);
  CHECK(cli({"check", "literal:01#", "2"}).code == 2);
  CHECK(cli({"check", "literal:0101", "2", "--mode", "bogus"}).code == 2);
}

TEST_CASE("search-n") {
  auto r = cli({"search-n", "3", "3"});
  CHECK(r.code == 0);
  auto j = payload(r.out);
  CHECK(j["result"]["status"] == "exact");
  CHECK(j["result"]["N_or_bound"] == 9);
  CHECK(payload(cli({"search-n", "2", "3"}).out)["result"]["N_or_bound"] == 4);
  auto capped = cli({"search-n", "3", "4", "--cap", "17"});
  CHECK(capped.code == 1);
  CHECK(payload(capped.out)["result"]["status"] == "lower-bound");
  CHECK(payload(capped.out)["result"]["N_or_bound"] == 17);
  CHECK(cli({"search-n", "1", "3"}).code == 2);
  // parallelism changes nothing but the node count
  auto par = payload(cli({"search-n", "4", "3", "--parallel", "3", "--parallel-depth", "3"}).out);
  auto seq = payload(cli({"search-n", "4", "3"}).out);
  par["result"].erase("nodes_explored");
  seq["result"].erase("nodes_explored");
  CHECK(par["result"] == seq["result"]);
}

TEST_CASE("witness") {
  auto p = cli({"witness", "periodic:01", "3", "5"});
  CHECK(p.code == 0);
  auto j = payload(p.out);
  CHECK(j["result"]["branch"] == "power");
  CHECK(j["result"]["evidence"]["M"] == 6);
  auto z = payload(cli({"witness", "periodic:0", "2", "10"}).out);
  CHECK(z["result"]["evidence"]["u"] == "0");
  auto t = cli({"witness", "thue-morse", "3", "3", "--budget", "2000"});
  CHECK(t.code == 0);
  CHECK(payload(t.out)["result"]["branch"] == "anti-power");
  CHECK(cli({"witness", "thue-morse", "3", "3", "--budget", "10"}).code == 4);
  CHECK(cli({"witness", "thue-morse", "1", "3"}).code == 2);
}

TEST_CASE("density") {
  auto r = cli({"density", "thue-morse", "--k", "1", "--horizon", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("10,1,1\n") != std::string::npos);
  CHECK(r.out.find("min_tail,1,1") != std::string::npos);
  CHECK(r.out.find("finite estimate") != std::string::npos);
  auto zero = cli({"density", "ultimately-periodic:0:1", "--k", "3", "--horizon", "50"});
  CHECK(zero.out.find("50,0,1\n") != std::string::npos);
  auto half = cli({"density", "periodic:01", "--k", "2", "--kind", "p", "--horizon", "100"});
  CHECK(half.out.find("\n100,1,2\n") != std::string::npos);
  CHECK(cli({"density", "thue-morse", "--k", "2", "--horizon", "1"}).code == 2);
  CHECK(cli({"density", "thue-morse", "--k", "2", "--horizon", "10", "--kind", "q"}).code == 2);
}

TEST_CASE("identical invocations give identical payloads") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"search-n", "4", "3"},
        std::vector<std::string>{"witness", "periodic:011", "3", "4"},
        std::vector<std::string>{"ap-table", "fibonacci", "2-8", "--format", "json"}}) {
    CHECK(payload(cli(args).out) == payload(cli(args).out));
  }
}
