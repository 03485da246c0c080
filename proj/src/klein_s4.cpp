#include "sepvar/klein_s4.hpp"

#include "sepvar/expression.hpp"

#include <algorithm>

namespace sepvar {

bool KleinS4Certificate::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.informational || c.passed; });
}

const NamedCheck* KleinS4Certificate::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

std::string describe(const RamificationPortrait& p) {
    std::string out;
    for (const auto& c : p.classes) {
        if (!out.empty()) out += " | ";
        out += c.value.to_string() + ":";
        for (int m : expand(c.multiplicities)) out += " " + std::to_string(m);
    }
    return out;
}

bool portrait_is(const RamificationPortrait& p, const std::vector<std::pair<PointClass, Multiplicities>>& expected) {
    if (p.classes.size() != expected.size()) return false;
    for (const auto& [value, mult] : expected)
        if (p.over(value) != mult) return false;
    return true;
}

std::string rational_text(const BigRational& q) { return to_string(q); }

}  // namespace

KleinS4Certificate klein_s4_certificate(const Limits& limits) {
    using namespace klein_s4;
    KleinS4Certificate cert;
    cert.a = parse_expression(kA);
    cert.f = parse_expression(kF);
    cert.p = parse_expression(kP);
    cert.equivariant = parse_expression(kEquivariant);
    cert.equivariant11 = parse_expression(kEquivariant11);
    cert.r = parse_expression(kR);
    cert.s = parse_expression(kS);
    std::vector<RationalFunction> generators;
    for (const char* g : kGenerators) generators.push_back(parse_expression(g));

    auto add = [&](std::string name, bool ok, std::string detail, bool informational = false) {
        cert.checks.push_back({std::move(name), ok, std::move(detail), informational});
    };
    const PointClass zero = PointClass::point(0), minus_one = PointClass::point(-1), inf = PointClass::infinity();

    cert.portrait_a = ramification_portrait(cert.a, limits);
    add("portrait_A",
        portrait_is(cert.portrait_a, {{zero, {{3, 1}, {1, 1}}}, {minus_one, {{2, 1}, {1, 2}}}, {inf, {{4, 1}}}}),
        describe(cert.portrait_a));

    AssociatedOrbifolds orb = orbifolds_of_function(cert.a, limits);
    bool nu2 = orb.target.nu_at(minus_one) == 2 && orb.target.nu_at(zero) == 3 && orb.target.nu_at(inf) == 4 &&
               orb.target.indices() == std::vector<int>{2, 3, 4};
    add("nu2_A", nu2, "nu2(-1), nu2(0), nu2(inf) = " + std::to_string(orb.target.nu_at(minus_one)) + ", " +
                          std::to_string(orb.target.nu_at(zero)) + ", " + std::to_string(orb.target.nu_at(inf)));

    // Unramified preimages of -1 are the roots of 3z^2 + 2z + 1.
    PointClass over_minus_one = PointClass::roots_of(parse_expression("3*z^2 + 2*z + 1").num());
    PointClass four_thirds = PointClass::point(BigRational(4, 3));
    bool nu1 = orb.source.nu_at(four_thirds) == 3 && orb.source.nu_at(over_minus_one) == 2 &&
               orb.source.indices() == std::vector<int>{2, 2, 3};
    add("nu1_A", nu1, "nu1(4/3) = " + std::to_string(orb.source.nu_at(four_thirds)) + ", nu1 on roots of " +
                          over_minus_one.minpoly().to_string() + " = " +
                          std::to_string(orb.source.nu_at(over_minus_one)));

    // Listed fibre points -1/3 +- i sqrt(3)/2, minimal polynomial z^2 + 2/3 z + 31/36.
    PointClass listed = PointClass::roots_of(parse_expression("36*z^2 + 24*z + 31").num());
    add("listed_fibre_points_over_minus_one", image_class(cert.a, listed) == minus_one,
        "A maps the roots of " + listed.minpoly().to_string() + " to " + image_class(cert.a, listed).to_string(),
        true);

    BigRational chi2 = euler_char(orb.target), chi1 = euler_char(orb.source);
    add("chi_O2_A", chi2 == BigRational(1, 12), "chi(O2) = " + rational_text(chi2));
    add("chi_O1_A", chi1 == BigRational(1, 3), "chi(O1) = " + rational_text(chi1));

    OrbifoldClass cls = classify(orb.target);
    add("group_A", cls.geometry == Geometry::Spherical && cls.name == "S4" && cls.group_order == 24,
        to_string(cls.geometry) + " " + cls.name);

    add("degree_f", cert.f.degree() == 24, "deg f = " + std::to_string(cert.f.degree()));
    add("f_equals_A_of_p", compose(cert.a, cert.p) == cert.f, "deg p = " + std::to_string(cert.p.degree()));

    cert.portrait_f = ramification_portrait(cert.f, limits);
    add("portrait_f", portrait_is(cert.portrait_f, {{zero, {{3, 8}}}, {minus_one, {{2, 12}}}, {inf, {{4, 6}}}}),
        describe(cert.portrait_f));

    OrbifoldSignature o2f = target_orbifold(cert.portrait_f);
    BigRational chi2f = euler_char(o2f);
    BigRational galois = BigRational(2 - 2 * 0, cert.f.degree());
    galois.canonicalize();
    add("galois_chi_f", chi2f == galois && chi2f == chi2 && o2f == orb.target,
        "chi(O2 of f) = " + rational_text(chi2f) + ", (2 - 2g)/deg f = " + rational_text(galois));

    OrbifoldSignature o1f = minimal_pullback(cert.f, o2f);
    MapCheck cover = is_covering_map(cert.f, o1f, o2f);
    add("f_is_universal_covering", o1f.points().empty() && euler_char(o1f) == 2 && cover.holds,
        "O1 of f has " + std::to_string(o1f.indices().size()) + " marked points, chi = " +
            rational_text(euler_char(o1f)));

    MapCheck p_cover = is_covering_map(cert.p, OrbifoldSignature(), orb.source);
    add("p_covers_O1_A", p_cover.holds, "p: sphere -> O1 of A");

    bool intertwines = verify_intertwining(cert.a, cert.s, cert.r);
    add("intertwining_A_S_R", intertwines,
        intertwines ? "A o S == R o A" : "A o S != R o A; difference " + (compose(cert.a, cert.s) - compose(cert.r, cert.a)).to_string());
    add("intertwining_with_negated_S", verify_intertwining(cert.a, -cert.s, cert.r), "A o (-S) == R o A", true);

    EquivarianceCheck eq = verify_equivariance(cert.equivariant, generators);
    add("equivariance_F", eq.holds,
        eq.holds ? "F commutes with i*z and (z+i)/(z-i)"
                 : std::string("fails for generator ") + kGenerators[*eq.failing_generator]);
    EquivarianceCheck eq11 = verify_equivariance(cert.equivariant11, generators);
    add("equivariance_F11", eq11.holds,
        eq11.holds ? "degree-11 function commutes with both generators"
                   : std::string("degree-11 function fails for generator ") + kGenerators[*eq11.failing_generator],
        true);

    cert.recovered_r = solve_semiconjugacy(cert.f, cert.equivariant, 5);
    cert.recovered_s = solve_semiconjugacy(cert.p, cert.equivariant, 5);
    add("recovered_R_equals_embedded_R", cert.recovered_r && *cert.recovered_r == cert.r,
        cert.recovered_r ? "R from R o f = f o F: " + cert.recovered_r->to_string() : "no solution", true);
    add("recovered_S_equals_embedded_S", cert.recovered_s && *cert.recovered_s == cert.s,
        cert.recovered_s ? "S from S o p = p o F: " + cert.recovered_s->to_string() : "no solution", true);
    add("recovered_S_equals_negated_embedded_S", cert.recovered_s && *cert.recovered_s == -cert.s,
        "S o p = p o F solved by -S", true);

    cert.series = generate_series(cert.a, cert.r, 2, limits);
    for (const auto& t : cert.series.terms) {
        int expected_b = 1;
        for (unsigned l = 0; l < t.l; ++l) expected_b *= 5;
        bool ok = t.genus.degree_a == 4 && t.genus.degree_b == expected_b && t.genus.genus == 0 &&
                  t.genus.irreducibility == Irreducibility::Proven;
        add("series_k" + std::to_string(t.l), ok,
            "degrees (" + std::to_string(t.genus.degree_a) + ", " + std::to_string(t.genus.degree_b) +
                "), genus " + std::to_string(t.genus.genus) + ", irreducibility " + to_string(t.genus.irreducibility));
    }

    bool param = parametrization_check(cert.a, cert.r, cert.s, cert.a);
    add("parametrization_k1", param, param ? "A(S(t)) == R(A(t))" : "A(S(t)) != R(A(t))");
    add("parametrization_k1_negated_S", parametrization_check(cert.a, cert.r, -cert.s, cert.a),
        "A(-S(t)) == R(A(t))", true);
    return cert;
}

}  // namespace sepvar
