#include "properties.hpp"

#include <doctest.h>

namespace {

constexpr int kCases = 50;

void expect(const props::Outcome& o) {
    INFO(o.name << ": " << o.passed << "/" << o.cases << " " << o.first_failure);
    CHECK(o.ok());
}

}  // namespace

TEST_CASE("property: field inverses") { expect(props::field_inverses(101, kCases)); }
TEST_CASE("property: factorization of products") { expect(props::factor_merge(102, kCases)); }
TEST_CASE("property: resultant multiplicativity") { expect(props::resultant_multiplicative(103, kCases)); }
TEST_CASE("property: composition associativity") { expect(props::compose_associative(104, kCases)); }
TEST_CASE("property: fibre sums") { expect(props::fibre_sums(105, kCases)); }
TEST_CASE("property: Riemann-Hurwitz") { expect(props::riemann_hurwitz(106, kCases)); }
TEST_CASE("property: Moebius invariance") { expect(props::mobius_invariance(107, kCases)); }
TEST_CASE("property: associated orbifolds cover") { expect(props::associated_covering(108, kCases)); }
TEST_CASE("property: minimal pullback inequality") { expect(props::minimal_pullback_inequality(109, kCases)); }
TEST_CASE("property: Fried symmetry") { expect(props::fried_symmetry(110, kCases)); }
TEST_CASE("property: hyperbolic genus bound") { expect(props::hyperbolic_bound(111, kCases)); }
TEST_CASE("property: parser round trip") { expect(props::parse_round_trip(112, kCases)); }
TEST_CASE("property: JSON determinism") { expect(props::json_determinism(113, kCases)); }
TEST_CASE("property: intertwining iterates") { expect(props::intertwining_iterates(114, kCases)); }
TEST_CASE("property: equivariance under words") { expect(props::equivariance_words(115, kCases)); }
TEST_CASE("property: family genus zero") { expect(props::family_genus_zero(116, kCases)); }
