#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "jordan/serialize.hpp"

using jordan::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(JORDANCTL) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("verify") {
  Run r = run("verify 'VIV(n=2,ring=F5)'");
  CHECK(r.code == 0);
  CHECK(r.json()["axioms"]["status"] == "pass");
  CHECK(run("verify 'Mplus(2,F3)'").code == 0);

  r = run(std::string("verify ") + JORDAN_FIXTURES + "/bad_toy.json");
  CHECK(r.code == 1);
  CHECK(r.json()["axioms"]["identity"] == "D-identity");
  CHECK(run(std::string("verify ") + JORDAN_FIXTURES + "/good_toy.json").code == 0);

  r = run("verify 'VhI(1,2'");
  CHECK(r.code == 2);
  CHECK(r.json()["error"] == "ParseError");
  CHECK(run("verify 'VhI(3,2,F3)'").code == 2);
  CHECK(run("verify 'ThI(3,F3)'").code == 3);  // dim 9 is above the axiom-check limit
}

TEST_CASE("check") {
  Run r = run("check autV-IV --ring F5 --n 2");
  CHECK(r.code == 0);
  CHECK(r.json()["comparisons"][0]["comparison"]["equal"] == true);

  r = run("check vhi-rect --ring F3 --m 1 --n 2");
  CHECK(r.code == 0);
  CHECK(r.json()["comparisons"][0]["exhaustive"]["order"] == 48);
  CHECK(r.json()["comparisons"][0]["comparison"]["equal"] == true);

  r = run("check lambda-iso --ring F3 --n 2");
  CHECK(r.code == 1);
  CHECK(r.json()["error"] == "NoSquareRootOfMinusOne");

  r = run("check nope");
  CHECK(r.code == 2);
  CHECK(r.json()["error"] == "UnknownClaim");

  CHECK(run("check aut-TJI --ring F5 --n 2").code == 1);
  CHECK(run("check autV-IV --ring F5 --n 4 --budget 100").code == 3);
}

TEST_CASE("enumerate") {
  Run r = run("enumerate 'ThatIV(2,F3)' --mode exhaustive");
  CHECK(r.code == 0);
  CHECK(r.json()["order"] == 8);
  CHECK(r.json()["mode"] == "exhaustive");

  r = run("enumerate 'VhI(2,2,F3)' --mode generated");
  CHECK(r.code == 0);
  CHECK(r.json()["order"] == 2304);

  r = run("enumerate 'VIV(2,Q)'");
  CHECK(r.code == 1);
  CHECK(r.json()["error"] == "NonEnumerableRing");

  CHECK(run("enumerate 'VhI(2,2,F5)' --budget 1000").code == 3);
  CHECK(run("enumerate 'VIV(2,F3)' --mode sideways").code == 2);
  CHECK(run("frobnicate").code == 2);

  r = run("enumerate 'Mplus(2,F3)' --as algebra --dump-elements");
  CHECK(r.code == 0);
  CHECK(r.json()["elements"].size() == 48);

  // byte-identical output for any worker count
  const Run a = run("enumerate 'VhI(1,2,F5)' --dump-elements --jobs 1");
  const Run b = run("enumerate 'VhI(1,2,F5)' --dump-elements --jobs 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("output options") {
  const auto path = std::filesystem::temp_directory_path() / "jordanctl_test_out.json";
  std::filesystem::remove(path);
  Run r = run("enumerate 'VIV(1,F3)' --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in);
  CHECK(Json::parse(in)["order"] == 2);
  std::filesystem::remove(path);

  r = run("enumerate 'VIV(1,F3)' --pretty");
  CHECK(r.code == 0);
  CHECK(r.out.find("order") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);

  r = run("list-claims");
  CHECK(r.code == 0);
  CHECK(r.json().size() == 15);
}
