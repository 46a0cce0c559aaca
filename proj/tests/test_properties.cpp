#include "doctest.h"
#include "properties.hpp"

TEST_CASE("randomized property suite") {
  auto T = props::run(200, 20261016);
  INFO(T.summary());
  CHECK(T.instances == 200);
  CHECK(T.total_violations() == 0);
  for (const char* k : {"symmetry", "shift invariance", "constant shift invariance", "slope sum (d-1)/2",
                        "L* integrality", "carry condition <=> congruence", "parity of non-simple permutations",
                        "valuation >= sum u / d", "proved lambda_s = oracle L0* ord c_s", "proved lambda_s = oracle L* ord c_s", "tables ord = oracle L0* ord"})
    CHECK_MESSAGE(T.checks[k] > 0, k);
  MESSAGE(T.summary());
}
