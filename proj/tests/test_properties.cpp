#include "doctest.h"
#include "properties.hpp"

namespace {

void require(const props::Outcome& o) {
    INFO(o.first_failure);
    CHECK(o.trials > 0);
    CHECK(o.ok());
}

}  // namespace

// Smaller runs than the acceptance suite, with different seeds.
TEST_SUITE("properties") {

TEST_CASE("ring axioms") { require(props::ring_axioms(101, 200)); }
TEST_CASE("leibniz rule") { require(props::leibniz(102, 200)); }
TEST_CASE("mixed partials commute") { require(props::mixed_partials(103, 200)); }
TEST_CASE("substitution is a homomorphism") { require(props::substitution_homomorphism(104, 200)); }
TEST_CASE("parse of render is the identity") { require(props::parse_render_identity(105, 200)); }
TEST_CASE("dense oracle agrees") { require(props::dense_oracle_equivalence(106, 200)); }

}
