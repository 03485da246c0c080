#include "sepvar/expression.hpp"
#include "sepvar/klein_s4.hpp"
#include "sepvar/series.hpp"

#include <doctest.h>

using namespace sepvar;

namespace {

RationalFunction rf(const char* text) { return parse_expression(text); }

FamilyParams params(int n, int m, int s, std::optional<RationalFunction> poly = std::nullopt) {
    FamilyParams p;
    p.n = n;
    p.m = m;
    p.s = s;
    p.poly = std::move(poly);
    return p;
}

}  // namespace

TEST_CASE("basis decision") {
    BasisVerdict quartic = is_basis_of_series(rf("3*z^4 - 4*z^3"));
    CHECK(quartic.is_basis);
    CHECK(quartic.chi_target == BigRational(1, 12));
    CHECK(quartic.orbifold_class.name == "S4");
    BasisVerdict power = is_basis_of_series(rf("z^7"));
    CHECK(power.is_basis);
    CHECK(power.orbifold_class.name == "C7");
    BasisVerdict cheb = is_basis_of_series(rf("T(6)"));
    CHECK(cheb.orbifold_class.name == "D12");
    BasisVerdict hyper = is_basis_of_series(rf("z^5 + z"));
    CHECK_FALSE(hyper.is_basis);
    CHECK(hyper.orbifold_class.geometry == Geometry::Hyperbolic);
    CHECK(hyper.chi_target == BigRational(-4, 5));
    CHECK(hyper.genus_two_from_degree == 421);
    // z^3 - 3z^2: critical values 0 and -4 with multiplicity 2, infinity with 3: (2, 2, 3) dihedral.
    CHECK(is_basis_of_series(rf("z^3 - 3*z^2")).orbifold_class.name == "D6");
    // A cubic with four simple critical values has signature (2, 2, 2, 2).
    BasisVerdict lattes = is_basis_of_series(rf("(z^3 + 2)/(z^2 + 1)"));
    CHECK(lattes.orbifold_class.geometry == Geometry::Euclidean);
    CHECK(lattes.is_basis);
    CHECK(lattes.orbifold_class.name == "(2,2,2,2)");
    // The Lattes doubling map: infinity is not a critical value, so O2 is only (2, 2, 2).
    CHECK(is_basis_of_series(rf("(z^2 + 1)^2/(4*z*(z^2 - 1))")).orbifold_class.name == "D4");
    CHECK_THROWS(is_basis_of_series(rf("3")));
}

TEST_CASE("family construction") {
    FamilyInstance lau = make_family(Family::Lau, params(2, 0, 3));
    CHECK(lau.a == rf("z^2"));
    CHECK(lau.b == rf("z^3"));
    FamilyInstance che = make_family(Family::Che, params(2, 3, 0));
    CHECK(che.a == rf("T(2)"));
    CHECK(che.b == rf("T(3)"));
    FamilyInstance j = make_family(Family::J, params(3, 2, 0));
    CHECK(j.a == rf("T(3)"));
    CHECK(j.b == rf("(z^2 + 1/z^2)/2"));
    FamilyInstance che2 = make_family(Family::Che2, params(1, 2, 0));
    CHECK(che2.b == -rf("T(4)"));
    FamilyInstance s = make_family(Family::S, params(0, 0, 0, rf("z + 2")));
    CHECK(s.b == rf("(1 - z^2)*(z + 2)^2"));
    FamilyInstance last = make_family(Family::Last, params(0, 0, 0));
    CHECK(last.a == rf("3*z^4 - 4*z^3"));
    CHECK(last.b == rf("(z^2 - 1)^3"));
    FamilyInstance laurent = make_family(Family::Lau, params(3, 0, 2, rf("z + 1/z")));
    CHECK(laurent.b == rf("z^2*(z + 1/z)^3"));

    CHECK_THROWS_AS(make_family(Family::Lau, params(2, 0, 4)), std::invalid_argument);
    CHECK_THROWS_AS(make_family(Family::Che, params(2, 4, 0)), std::invalid_argument);
    CHECK_THROWS_AS(make_family(Family::J, params(3, 6, 0)), std::invalid_argument);
    CHECK_THROWS_AS(make_family(Family::Lau, params(2, 0, 3, rf("1/(z + 1)"))), std::invalid_argument);
    CHECK_THROWS_AS(make_family(Family::S, params(0, 0, 0, rf("1/z"))), std::invalid_argument);
    CHECK(family_from_string("CHE2") == Family::Che2);
    CHECK_THROWS(family_from_string("cheb"));
}

TEST_CASE("family certification") {
    GenusReport che = certify_family(make_family(Family::Che, params(2, 3, 0)));
    CHECK(che.genus == 0);
    CHECK(che.irreducibility == Irreducibility::Proven);
    GenusReport lau = certify_family(make_family(Family::Lau, params(2, 0, 3)));
    CHECK(lau.genus == 0);
    GenusReport last = certify_family(make_family(Family::Last, params(0, 0, 0)));
    CHECK(last.genus == 0);
    CHECK(last.irreducibility == Irreducibility::Unknown);
}

TEST_CASE("intertwining, equivariance and parametrization") {
    CHECK_FALSE(verify_intertwining(rf("z^2"), rf("z + 1"), rf("z + 1")));
    CHECK(verify_intertwining(rf("z^3"), rf("z^2"), rf("z^2")));
    CHECK(verify_intertwining(rf("T(3)"), rf("T(2)"), rf("T(2)")));

    auto f = rf("(-z^5 + 5*z)/(5*z^4 - 1)");
    CHECK(verify_equivariance(f, {rf("i*z")}).holds);
    EquivarianceCheck sq = verify_equivariance(rf("z^2"), {rf("-z"), rf("i*z")});
    CHECK_FALSE(sq.holds);
    CHECK(sq.failing_generator == std::size_t{0});
    CHECK(verify_equivariance(rf("z^3"), {rf("-z")}).holds);
    CHECK_THROWS_AS(verify_equivariance(f, {rf("z^2")}), std::invalid_argument);

    CHECK(parametrization_check(rf("z^2"), rf("z^3"), rf("z^3"), rf("z^2")));
    CHECK_FALSE(parametrization_check(rf("z^2"), rf("z^3"), rf("z^3"), rf("z^2 + 1")));
}

TEST_CASE("separated numerator") {
    auto terms = separated_numerator(rf("z^2"), rf("1/z"));
    // x^2 y - 1
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].x_degree == 0);
    CHECK(terms[0].y_degree == 0);
    CHECK(terms[0].coeff == GaussianRational(-1));
    CHECK(terms[1].x_degree == 2);
    CHECK(terms[1].y_degree == 1);
}

TEST_CASE("series generation") {
    SeriesCertificate lau = generate_series(rf("z^3"), rf("z^2"), 3);
    REQUIRE(lau.terms.size() == 3);
    CHECK(lau.all_genus_zero);
    CHECK(lau.terms[2].b == rf("z^8"));
    CHECK(lau.terms[2].genus.degree_b == 8);
    CHECK_THROWS_AS(generate_series(rf("z^2"), rf("z^4"), 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_series(rf("z^2"), rf("z^3"), 0), std::invalid_argument);
    Limits tight;
    tight.iterate_budget = 50;
    CHECK_THROWS_AS(generate_series(rf("z^2"), rf("z^3 + z"), 4, tight), ResourceError);
}

TEST_CASE("semiconjugacy solver") {
    // T2 o T3 = T3 o T2: the solver recovers T3 from g = T2 and F = T3.
    auto r = solve_semiconjugacy(rf("T(2)"), rf("T(3)"), 3);
    REQUIRE(r);
    CHECK(*r == rf("T(3)"));
    auto s = solve_semiconjugacy(rf("z^2"), rf("z + 1"), 2);
    CHECK_FALSE(s);
    CHECK_THROWS(solve_semiconjugacy(rf("z^2"), rf("z"), 0));
}

TEST_CASE("octahedral certificate") {
    KleinS4Certificate c = klein_s4_certificate();
    auto passed = [&](const char* name) {
        const NamedCheck* k = c.find(name);
        REQUIRE(k != nullptr);
        return k->passed;
    };
    CHECK(passed("portrait_A"));
    CHECK(passed("chi_O2_A"));
    CHECK(passed("chi_O1_A"));
    CHECK(passed("f_equals_A_of_p"));
    CHECK(passed("portrait_f"));
    CHECK(passed("galois_chi_f"));
    CHECK(passed("equivariance_F"));
    CHECK(passed("series_k1"));
    CHECK(passed("series_k2"));
    // The embedded S has the wrong sign; -S satisfies the relation.
    CHECK_FALSE(passed("intertwining_A_S_R"));
    CHECK(passed("intertwining_with_negated_S"));
    CHECK(passed("recovered_R_equals_embedded_R"));
    CHECK(passed("recovered_S_equals_negated_embedded_S"));
    CHECK_FALSE(c.passed());
    CHECK(c.f.degree() == 24);
    CHECK(c.r.degree() == 5);
    CHECK(c.s.degree() == 5);
}
