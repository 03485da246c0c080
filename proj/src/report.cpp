#include "sepvar/report.hpp"

namespace sepvar::report {

Json rational(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json gaussian(const GaussianRational& c) {
    Json j;
    j["re"] = rational(c.re());
    j["im"] = rational(c.im());
    return j;
}

Json function(const RationalFunction& f) {
    Json j;
    j["expression"] = f.to_string();
    j["degree"] = f.degree();
    return j;
}

Json point_class(const PointClass& c) {
    Json j;
    if (c.is_infinity()) {
        j["kind"] = "infinity";
    } else if (c.is_explicit()) {
        j["kind"] = "point";
        j["value"] = gaussian(c.value());
    } else {
        j["kind"] = "class";
        j["minpoly"] = c.minpoly().to_string();
        j["size"] = c.size();
    }
    return j;
}

Json multiplicities(const Multiplicities& m) {
    return Json(expand(m));
}

Json portrait(const RamificationPortrait& p) {
    Json j;
    j["degree"] = p.map_degree;
    Json classes = Json::array();
    for (const auto& c : p.classes) {
        Json e;
        e["value"] = point_class(c.value);
        e["multiplicities"] = multiplicities(c.multiplicities);
        classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
    return j;
}

Json signature(const OrbifoldSignature& o) {
    Json j;
    j["base_genus"] = o.base_genus();
    Json points = Json::array();
    for (const auto& p : o.points()) {
        Json e;
        e["support"] = p.support ? point_class(*p.support) : Json(nullptr);
        e["nu"] = p.nu;
        e["count"] = p.count;
        points.push_back(std::move(e));
    }
    j["points"] = std::move(points);
    j["indices"] = o.indices();
    j["chi"] = rational(euler_char(o));
    return j;
}

Json orbifold_class(const OrbifoldClass& c) {
    Json j;
    j["geometry"] = to_string(c.geometry);
    j["name"] = c.name;
    j["group_order"] = c.group_order;
    j["chi"] = rational(c.chi);
    return j;
}

Json genus(const GenusReport& g) {
    Json j;
    j["genus"] = g.genus;
    j["r"] = g.r;
    j["gcd_sum"] = g.gcd_sum;
    j["degree_a"] = g.degree_a;
    j["degree_b"] = g.degree_b;
    j["irreducibility"] = to_string(g.irreducibility);
    return j;
}

Json basis(const BasisVerdict& v) {
    Json j;
    j["is_basis"] = v.is_basis;
    j["class"] = to_string(v.orbifold_class.geometry);
    j["chi_target"] = rational(v.chi_target);
    j["orbifold_class"] = orbifold_class(v.orbifold_class);
    j["target"] = signature(v.target);
    j["rationale"] = v.rationale;
    if (v.orbifold_class.geometry == Geometry::Hyperbolic) {
        Json b;
        b["formula"] = "(m - 84 n + 168)/168";
        b["genus_at_least_two_from_degree"] = v.genus_two_from_degree;
        j["bound"] = std::move(b);
    }
    return j;
}

Json family(const FamilyInstance& f, const GenusReport& g) {
    Json j;
    j["family"] = to_string(f.family);
    Json params;
    params["n"] = f.params.n;
    params["m"] = f.params.m;
    params["s"] = f.params.s;
    params["poly"] = f.params.poly ? Json(f.params.poly->to_string()) : Json(nullptr);
    j["params"] = std::move(params);
    j["a"] = function(f.a);
    j["b"] = function(f.b);
    j["genus"] = genus(g);
    j["caveat"] = g.irreducibility == Irreducibility::Proven
                      ? Json(nullptr)
                      : Json("degrees not coprime: genus is the formula value, irreducibility not proven");
    return j;
}

Json series(const SeriesCertificate& s) {
    Json j;
    j["all_genus_zero"] = s.all_genus_zero;
    Json terms = Json::array();
    for (const auto& t : s.terms) {
        Json e;
        e["l"] = t.l;
        e["b"] = function(t.b);
        e["numerator_terms"] = t.numerator_terms;
        e["genus"] = genus(t.genus);
        terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json bound_check(const HyperbolicBoundCheck& b) {
    Json j;
    j["verdict"] = to_string(b.verdict);
    j["chi_target"] = rational(b.chi_target);
    j["bound"] = rational(b.bound);
    j["chi_gap_ok"] = b.chi_gap_ok;
    j["genus"] = b.verdict == Verdict::NotApplicable ? Json(nullptr) : genus(b.genus);
    j["reason"] = b.reason;
    return j;
}

Json certificate(const KleinS4Certificate& c) {
    Json j;
    j["passed"] = c.passed();
    Json data;
    data["A"] = function(c.a);
    data["f"] = function(c.f);
    data["p"] = function(c.p);
    data["F"] = function(c.equivariant);
    data["R"] = function(c.r);
    data["S"] = function(c.s);
    data["F11"] = function(c.equivariant11);
    j["data"] = std::move(data);
    Json checks = Json::array();
    for (const auto& k : c.checks) {
        Json e;
        e["name"] = k.name;
        e["passed"] = k.passed;
        e["informational"] = k.informational;
        e["detail"] = k.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["series"] = series(c.series);
    return j;
}

}  // namespace sepvar::report
