#include <doctest.h>

#include <omp.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "golden_cases.hpp"
#include "ptm/cli.hpp"
#include "ptm/machine_io.hpp"

using ptm::testing::golden_cases;
using ptm::testing::Outcome;

namespace {

const std::string& golden = ptm::testing::golden_dir;

Outcome call(const std::vector<std::string>& args, const std::string& input = "") {
  return ptm::testing::call_cli(args, input);
}

}  // namespace

TEST_CASE("CLI output matches golden files across runs and thread counts") {
  int saved = omp_get_max_threads();
  for (const auto& gc : golden_cases()) {
    std::string expected = ptm::read_file(golden + "/" + gc.expected);
    for (int threads : {1, 2, 4}) {
      for (int rep = 0; rep < 2; ++rep) {
        std::vector<std::string> args{"--threads", std::to_string(threads)};
        args.insert(args.end(), gc.args.begin(), gc.args.end());
        Outcome o = call(args);
        INFO(gc.expected << " threads=" << threads);
        CHECK(o.code == 0);
        CHECK(o.out == expected);
      }
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("CLI error handling") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"omega", golden + "/does-not-exist.m"}).code == 1);
  Outcome k = call({"kraft-check", golden + "/not_prefix_free.cb"});
  CHECK(k.code == 1);
  CHECK(k.out.find("result=not prefix-free") != std::string::npos);
  CHECK(call({"forge", "--targets", "1/2,1/3"}).code == 1);
  CHECK(call({"forge", "--targets", "1/2,1/4"}).code == 1);
}

TEST_CASE("CLI global options may follow the subcommand") {
  Outcome a = call({"--format", "jsonl", "omega", golden + "/codebook.cb"});
  Outcome b = call({"omega", golden + "/codebook.cb", "--format", "jsonl"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("CLI forge stream mode reads increments") {
  Outcome s = call({"forge", "--stream"}, "1/4\n1/8\n1/2\n");
  Outcome t = call({"forge", "--targets", "1/4,3/8,7/8"});
  CHECK(s.code == 0);
  CHECK(s.out == t.out);
}

TEST_CASE("CLI oracle gives up cleanly on a tiny round budget") {
  Outcome o = call({"oracle", golden + "/universal.m", "--omega-prefix", "1111111111", "--wall-budget", "2"});
  CHECK(o.code == 2);
  CHECK(o.out.find("result=inconclusive") != std::string::npos);
  Outcome ok = call({"oracle", golden + "/codebook.cb", "--omega-prefix", "111"});
  CHECK(ok.code == 0);
}

TEST_CASE("CLI decode and encode are inverse on tables") {
  Outcome e = call({"encode", golden + "/halt0.m"});
  REQUIRE(e.code == 0);
  std::string idx = e.out;
  idx.erase(idx.find_last_not_of("\n") + 1);
  Outcome d = call({"decode", idx});
  CHECK(d.code == 0);
  CHECK(d.out.find("0 B -> read 2 1") != std::string::npos);
  CHECK(call({"decode", "0"}).out == "print\n");
}
