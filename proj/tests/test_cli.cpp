#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "qbilat/cli.hpp"

using namespace qbilat;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(QBILAT_BIN) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("complex literals") {
  CHECK(parse_complex_literal("0.5") == Complex(0.5, 0.0));
  CHECK(parse_complex_literal("-2") == Complex(-2.0, 0.0));
  CHECK(parse_complex_literal("0.5+1.25i") == Complex(0.5, 1.25));
  CHECK(parse_complex_literal("-1-3i") == Complex(-1.0, -3.0));
  for (const char* bad : {"", "0.5x", ".5", "1e3", "i", "1+i", "1 + 2i", "+1", "1.", "--1"})
    CHECK_THROWS_AS(parse_complex_literal(bad), Error);
  CHECK(parse_complex_list("").empty());
  const auto l = parse_complex_list("0.5,1-1i,-3");
  REQUIRE(l.size() == 3);
  CHECK(l[1] == Complex(1.0, -1.0));
  CHECK_THROWS_AS(parse_complex_list("0.5,"), Error);
}

TEST_CASE("list") {
  const auto r = run({"list"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("bailey_6psi6") != std::string::npos);
  const auto j = run({"list", "--json"});
  CHECK(j.code == kExitPass);
  const auto arr = nlohmann::json::parse(j.out);
  CHECK(arr.size() == 22);
  CHECK(arr[0]["id"] == "bailey_6psi6");
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "bailey_6psi6", "--samples", "5"}).code == kExitPass);
  CHECK(run({"verify", "nosuch"}).code == kExitUnknownId);
  CHECK(run({"verify", "bailey_6psi6", "--param", "zz=1"}).code == kExitUsage);
  CHECK(run({"verify", "bailey_6psi6", "--param", "a"}).code == kExitUsage);
  CHECK(run({"verify", "bailey_6psi6", "--samples", "0"}).code == kExitUsage);
  CHECK(run({"verify", "bailey_6psi6", "--q", "1.5"}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  // a pinned point outside the region leaves nothing to sample
  CHECK(run({"verify", "bailey_6psi6", "--samples", "2", "--param", "a=30", "--param", "b=1.5",
             "--param", "c=1.5", "--param", "d=1.5", "--param", "e=1.5"})
            .code == kExitNumeric);
  // an impossible tolerance
  CHECK(run({"verify", "bailey_6psi6", "--samples", "3", "--tol", "1e-30"}).code == kExitFail);
}

TEST_CASE("verify output") {
  const auto r = run({"verify", "jackson_8phi7", "--samples", "4", "--seed", "3", "--json"});
  REQUIRE(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["id"] == "jackson_8phi7");
  CHECK(j["seed"] == 3);
  CHECK(j["samples"]["accepted"] == 4);
  CHECK(j["pass"] == true);
  const auto again = run({"verify", "jackson_8phi7", "--samples", "4", "--seed", "3", "--json"});
  CHECK(again.out == r.out);
  const auto pinned = run({"verify", "jackson_8phi7", "--samples", "3", "--json", "--q", "0.3",
                           "--param", "N=2"});
  REQUIRE(pinned.code == kExitPass);
  const auto pj = nlohmann::json::parse(pinned.out);
  CHECK(pj["worst_sample"]["q"][0] == 0.3);
  CHECK(pj["worst_sample"]["N"] == 2);
  const auto text = run({"verify", "milne_N0_bailey", "--samples", "3"});
  CHECK(text.code == kExitPass);
  CHECK(text.out.rfind("PASS milne_N0_bailey", 0) == 0);
}

TEST_CASE("ortho") {
  const auto r = run({"ortho", "--q", "0.3", "--a", "4", "--b", "0.5", "--c", "0.7", "--radius", "2"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("max |residual|") != std::string::npos);
  const auto j = run({"ortho", "--q", "0.3", "--a", "4", "--b", "0.5", "--c", "0.7", "--radius",
                      "1", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["residuals"].size() == 3);
  CHECK(doc["max_abs_residual"].get<double>() < 1e-10);
  // b c / a on the lattice
  CHECK(run({"ortho", "--q", "0.5", "--a", "1", "--b", "0.5", "--c", "2"}).code == kExitNumeric);
  CHECK(run({"ortho", "--q", "0.5", "--a", "1x", "--b", "0.5", "--c", "2"}).code == kExitUsage);
}

TEST_CASE("eval") {
  // 1phi0(a; -; q, z) = (az; q)_inf / (z; q)_inf
  const auto r = run({"eval", "--kind", "phi", "--upper", "0.5", "--lower", "", "--q", "0.5",
                      "--z", "0.25", "--json"});
  REQUIRE(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  double num = 1, den = 1;
  for (int k = 0; k < 200; ++k) {
    num *= 1 - 0.125 * std::pow(0.5, k);
    den *= 1 - 0.25 * std::pow(0.5, k);
  }
  CHECK(j["value"][0].get<double>() == doctest::Approx(num / den).epsilon(1e-13));
  CHECK(j["status"] == "Converged");
  CHECK(run({"eval", "--kind", "phi", "--upper", "0.5x", "--lower", "", "--q", "0.5", "--z",
             "0.25"})
            .code == kExitUsage);
  CHECK(run({"eval", "--kind", "chi", "--upper", "0.5", "--lower", "", "--q", "0.5", "--z",
             "0.25"})
            .code == kExitUsage);
  // argument outside the disc of convergence
  CHECK(run({"eval", "--kind", "phi", "--upper", "0.5", "--lower", "", "--q", "0.5", "--z", "2"})
            .code == kExitNumeric);
  CHECK(run({"eval", "--kind", "psi", "--upper", "0.5", "--lower", "0.7", "--q", "1.5", "--z",
             "0.5"})
            .code == kExitNumeric);
}

TEST_CASE("help and environment") {
  CHECK(run({"--help"}).code == kExitPass);
  CHECK(run({"verify", "--help"}).code == kExitPass);
  ::setenv("QBILAT_MAX_TERMS", "abc", 1);
  CHECK(run({"list"}).code == kExitUsage);
  ::setenv("QBILAT_MAX_TERMS", "500", 1);
  CHECK(run({"verify", "bailey_6psi6", "--samples", "2", "--json"}).code == kExitPass);
  ::unsetenv("QBILAT_MAX_TERMS");
}

TEST_CASE("binary exit codes") {
  CHECK(run_binary("list") == 0);
  CHECK(run_binary("verify nosuch") == 2);
  CHECK(run_binary("verify bailey_6psi6 --samples 3") == 0);
  CHECK(run_binary("eval --kind phi --upper 0.5x --lower '' --q 0.5 --z 0.25") == 4);
  CHECK(run_binary("bogus") == 4);
}

}  // TEST_SUITE
