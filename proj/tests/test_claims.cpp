#include <doctest.h>

#include "jordan/claims.hpp"

using namespace jordan;

TEST_CASE("catalog") {
  const auto& cat = claim_catalog();
  CHECK(cat.size() == 15);
  for (const auto& c : cat) {
    CHECK_FALSE(c.statement.empty());
    CHECK(&find_claim(c.id) == &c);
  }
  try {
    find_claim("no-such-claim");
    FAIL("expected UnknownClaim");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownClaim);
  }
}

TEST_CASE("cheap claims pass at their defaults") {
  for (const char* id : {"autV-IV", "autT-IV", "aut-TJI", "detSim", "phi-n-kernel", "vhi-rect", "tti-multiplier",
                         "schemesJandJTS", "block-grading", "lambda-iso", "vti-vhi-iso"}) {
    const std::string name = id;
    CAPTURE(name);
    const ClaimResult r = run_claim(id, {});
    CHECK(r.passed);
    CHECK(r.report["claim"] == id);
    CHECK(r.report["passed"] == true);
  }
}

TEST_CASE("claims on other parameters") {
  ClaimParams p;
  p.ring = "F3";
  p.n = 2;
  CHECK(run_claim("autV-IV", p).passed);
  p.ring = "F3xF3";
  p.n = 1;
  CHECK(run_claim("autV-IV", p).passed);

  // the factorization needs J(V,b) simple; dim V = 1 gives F x F and extra automorphisms
  ClaimParams small;
  small.ring = "F5";
  small.n = 2;
  const ClaimResult r = run_claim("aut-TJI", small);
  CHECK_FALSE(r.passed);
  CHECK(r.report["comparisons"][0]["exhaustive"]["order"] == 8);
  CHECK(r.report["comparisons"][0]["generated"]["order"] == 4);

  ClaimParams f3;
  f3.ring = "F3";
  f3.n = 2;
  try {
    run_claim("lambda-iso", f3);
    FAIL("expected NoSquareRootOfMinusOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSquareRootOfMinusOne);
  }

  ClaimParams bad;
  bad.ring = "F2";
  CHECK_THROWS_AS(run_claim("autV-IV", bad), Error);
}
