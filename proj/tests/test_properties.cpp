#include <doctest.h>

#include "properties.hpp"

TEST_SUITE("properties") {
  TEST_CASE("parabolics do not depend on the cone") {
    const auto out = properties::cone_independence();
    CHECK_MESSAGE(out.ok, out.failure);
    CHECK(out.instances >= properties::kInstances);
  }

  TEST_CASE("Aut does not depend on the base cone up to conjugation") {
    const auto out = properties::base_independence();
    CHECK_MESSAGE(out.ok, out.failure);
  }

  TEST_CASE("centre containment") {
    const auto out = properties::centre_containment();
    CHECK_MESSAGE(out.ok, out.failure);
  }

  TEST_CASE("cocycle identities") {
    const auto out = properties::cocycle_identities();
    CHECK_MESSAGE(out.ok, out.failure);
  }

  TEST_CASE("Aut agrees with the Laurent oracle") {
    const auto out = properties::aut_oracle_agreement();
    CHECK_MESSAGE(out.ok, out.failure);
  }

  TEST_CASE("I + tX lies in the group") {
    const auto out = properties::lie_group_consistency();
    CHECK_MESSAGE(out.ok, out.failure);
  }

  TEST_CASE("splitting consistency") {
    const auto out = properties::splitting_consistency();
    CHECK_MESSAGE(out.ok, out.failure);
  }
}
