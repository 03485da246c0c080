#include "oracles.hpp"
#include "sepvar/expression.hpp"
#include "sepvar/genus.hpp"

#include <doctest.h>

using namespace sepvar;

namespace {

RationalFunction rf(const char* text) { return parse_expression(text); }

}  // namespace

TEST_CASE("Fried formula on Chebyshev pairs") {
    GenusReport g = fried_genus(rf("T(2)"), rf("T(3)"));
    // Fibres over -1, 1, infinity.
    long expected = oracle::gcd_sum({{2}, {1, 1}, {2}}, {{2, 1}, {2, 1}, {3}});
    CHECK(g.gcd_sum == expected);
    CHECK(g.gcd_sum == 8);
    CHECK(g.r == 3);
    CHECK(g.genus == 0);
    CHECK(g.irreducibility == Irreducibility::Proven);
    CHECK(g.degree_a == 2);
    CHECK(g.degree_b == 3);
}

TEST_CASE("Fried formula on the quartic-sextic pair") {
    GenusReport g = fried_genus(rf("3*z^4 - 4*z^3"), rf("(z^2 - 1)^3"));
    // Fibres over -1, 0, infinity.
    long expected = oracle::gcd_sum({{2, 1, 1}, {3, 1}, {4}}, {{2, 1, 1, 1, 1}, {3, 3}, {6}});
    CHECK(g.gcd_sum == expected);
    CHECK(g.gcd_sum == 26);
    CHECK(g.r == 3);
    CHECK(g.genus == 0);
    CHECK(g.irreducibility == Irreducibility::Unknown);
}

TEST_CASE("Fried formula: conjugate classes and one-sided values") {
    // x^2 = y^3 + 1 is an elliptic curve.
    GenusReport e = fried_genus(rf("z^2"), rf("z^3 + 1"));
    CHECK(e.genus == 1);
    CHECK(e.irreducibility == Irreducibility::Proven);
    // Hyperelliptic x^2 = y^5 + y: genus 2, critical values of y^5 + y form a class of size 4.
    GenusReport h = fried_genus(rf("z^2"), rf("z^5 + z"));
    CHECK(h.genus == 2);
    // A reducible pair: x^2 - y^2 splits, the formula goes negative.
    GenusReport red = fried_genus(rf("z^2"), rf("z^2"));
    CHECK(red.genus < 0);
    CHECK(red.irreducibility == Irreducibility::Unknown);
}

TEST_CASE("portrait validation") {
    RamificationPortrait bad;
    bad.map_degree = 3;
    bad.classes.push_back({PointClass::point(0), {{2, 1}}});
    CHECK_THROWS_AS(fried_genus(bad, ramification_portrait(rf("z^2"))), IntegrityError);
    RamificationPortrait twice = ramification_portrait(rf("z^2"));
    twice.classes.push_back(twice.classes.front());
    CHECK_THROWS_AS(fried_genus(twice, ramification_portrait(rf("z^3"))), IntegrityError);
    // Odd right-hand side: a synthetic portrait violating Riemann-Hurwitz.
    RamificationPortrait odd;
    odd.map_degree = 2;
    odd.classes.push_back({PointClass::point(0), {{2, 1}}});
    CHECK_THROWS_AS(fried_genus(odd, ramification_portrait(rf("z^3"))), IntegrityError);
}

TEST_CASE("coprime irreducibility") {
    CHECK(coprime_irreducibility(4, 5) == Irreducibility::Proven);
    CHECK(coprime_irreducibility(4, 6) == Irreducibility::Unknown);
    CHECK_THROWS_AS(coprime_irreducibility(0, 3), std::invalid_argument);
}

TEST_CASE("hyperbolic lower bound") {
    CHECK(genus_lower_bound(5, 421) == BigRational(169, 168));
    CHECK(minimum_genus(5, 421) == 2);
    CHECK(minimum_genus(5, 420) == 2);
    CHECK(minimum_genus(5, 419) == 1);
    CHECK(genus_lower_bound(4, 168) == 0);
    CHECK(minimum_genus(4, 168) == 1);
    CHECK(minimum_genus(4, 10) == 0);
}

TEST_CASE("hyperbolic bound check") {
    HyperbolicBoundCheck pass = check_hyperbolic_bound(rf("z^5 + z"), rf("z^7"));
    CHECK(pass.verdict == Verdict::Pass);
    CHECK(pass.chi_target == BigRational(-4, 5));
    CHECK(pass.chi_gap_ok);
    CHECK(pass.genus.genus > 0);
    CHECK(check_hyperbolic_bound(rf("z^3"), rf("z^7")).verdict == Verdict::NotApplicable);
    CHECK(check_hyperbolic_bound(rf("z^5 + z"), rf("z^10")).verdict == Verdict::NotApplicable);
}
