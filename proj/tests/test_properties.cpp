#include <doctest.h>

#include "support/properties.hpp"

using namespace isolab;

// Smaller sample counts than the acceptance run; same checks.

TEST_CASE("deletion inequality") {
  const auto r = testing::deletion_inequality(17, 1500);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("component additivity") {
  const auto r = testing::component_additivity(18, 200);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("beta over partitions and subgraphs") {
  const auto p = testing::beta_partition(19, 500);
  CHECK_MESSAGE(p.ok(), p.first_failure);
  const auto s = testing::beta_subgraph(20, 500);
  CHECK_MESSAGE(s.ok(), s.first_failure);
}

TEST_CASE("monotonicity in the family") {
  const auto r = testing::monotonicity(6);
  CHECK(r.checked == 1 + 1 + 2 + 6 + 21 + 112);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("patterns") {
  const auto r = testing::patterns(4, 20);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}
