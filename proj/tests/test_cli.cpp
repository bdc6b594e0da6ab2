#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "hmlab/cli.hpp"
#include "hmlab/report.hpp"

using namespace hmlab;

namespace {

struct Run
{
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli")
{
  TEST_CASE("analyze g=0 as json")
  {
    auto r = run({"analyze", "--group", "sym4", "--b", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["results"]["order_factored"] == Json::parse("[[2,22],[3,44],[5,1]]"));
    CHECK(j["results"]["order_decimal"] ==
          (FactoredInteger::of(3).pow(40) * FactoredInteger::of(2).pow(16) *
           FactoredInteger::of(25920))
              .decimal());
    CHECK(j.dump(2) + "\n" == r.out);
    // deterministic
    CHECK(run({"analyze", "--group", "sym4", "--b", "6", "--format", "json"}).out == r.out);
  }

  TEST_CASE("predict")
  {
    auto ok = run({"predict", "thm3", "--b", "6", "--N", "5", "--format", "json"});
    REQUIRE(ok.code == 0);
    CHECK(Json::parse(ok.out)["results"]["order_factored"] == Json::parse("[[2,86],[3,44],[5,41]]"));

    auto bad = run({"predict", "thm3", "--b", "6", "--N", "2"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("b > 8 if N is even") != std::string::npos);
  }

  TEST_CASE("usage errors")
  {
    auto r = run({"frobnicate"});
    CHECK(r.code == 64);
    CHECK(r.err.find("enumerate") != std::string::npos);
    CHECK(run({}).code == 64);
    CHECK(run({"analyze", "--nonsense"}).code == 64);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("budget exhaustion exits 2")
  {
    auto r = run({"coset-rep", "--g", "0", "--cosets", "10"});
    CHECK(r.code == 2);
    CHECK(r.err.find("partial") != std::string::npos);
  }

  TEST_CASE("beyond desk scale needs --stretch")
  {
    CHECK(run({"analyze", "--group", "sym4", "--b", "8"}).code == 1);
  }

  TEST_CASE("cache reuse gives identical output")
  {
    auto path = std::filesystem::temp_directory_path() / "hmlab_cli_test.cache";
    std::filesystem::remove(path);
    std::vector<std::string> args{"enumerate", "--group", "xn5", "--b", "6", "--cache",
                                  path.string(), "--format", "tsv"};
    auto first = run(args);
    REQUIRE(first.code == 0);
    CHECK(std::filesystem::exists(path));
    auto second = run(args);
    CHECK(second.out == first.out);
    CHECK(first.out.find("classes\t240") != std::string::npos);
    auto mismatch = run({"enumerate", "--group", "sym4", "--b", "6", "--cache", path.string()});
    CHECK(mismatch.code != 0);
    std::filesystem::remove(path);
  }

  TEST_CASE("other commands")
  {
    CHECK(run({"chain-check", "--g", "0", "--N", "5"}).code == 0);
    CHECK(run({"cube-check", "--g", "0", "--N", "3", "--format", "tsv"}).out.find("full\tfalse") !=
          std::string::npos);
    CHECK(run({"omega-crosscheck", "--g", "0"}).code == 0);
    CHECK(run({"coset-rep", "--g", "0"}).out.find("degree: 80") != std::string::npos);
    CHECK(run({"verify", "--only", "3,7"}).code == 0);
  }
}
