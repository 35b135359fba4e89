#include <doctest.h>

#include "cjp/verify.hpp"

using namespace cjp::verify;

TEST_SUITE("verify") {
  TEST_CASE("check names") {
    for (int i = 1; i <= kCheckCount; ++i) CHECK(!check_name(i).empty());
  }

  TEST_CASE("unknown checks are rejected") {
    CHECK_THROWS(run_check(0, {}));
    CHECK_THROWS(run_check(kCheckCount + 1, {}));
  }

  TEST_CASE("oracle checks pass and catch a shifted twist coefficient") {
    VerifyOptions good, bad;
    bad.twist_half_offset = 1;
    for (int id : {1, 2}) {
      CAPTURE(id);
      auto g = run_check(id, good);
      CHECK(g.pass);
      CHECK(g.id == id);
      CHECK(!run_check(id, bad).pass);
    }
  }

  TEST_CASE("fast projector and theta checks") {
    CHECK(run_check(6, {}).pass);
    CHECK(run_check(7, {}).pass);
  }
}
