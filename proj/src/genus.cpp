#include "sepvar/genus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sepvar {

std::string to_string(Irreducibility i) {
    return i == Irreducibility::Proven ? "proven" : "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

namespace {

void validate(const RamificationPortrait& p, const char* which) {
    if (p.map_degree < 1) throw IntegrityError(std::string("portrait ") + which + " has no positive degree");
    std::set<std::string> seen;
    for (const auto& c : p.classes) {
        if (multiplicity_total(c.multiplicities) != p.map_degree)
            throw IntegrityError(std::string("portrait ") + which + ": fibre over " + c.value.to_string() +
                                 " does not sum to the degree");
        if (!seen.insert(c.value.to_string()).second)
            throw IntegrityError(std::string("portrait ") + which + ": class " + c.value.to_string() +
                                 " listed twice");
    }
}

}  // namespace

Irreducibility coprime_irreducibility(int degree_a, int degree_b) {
    if (degree_a < 1 || degree_b < 1) throw std::invalid_argument("irreducibility test needs nonconstant maps");
    return std::gcd(degree_a, degree_b) == 1 ? Irreducibility::Proven : Irreducibility::Unknown;
}

Irreducibility coprime_irreducibility(const RationalFunction& a, const RationalFunction& b) {
    return coprime_irreducibility(a.degree(), b.degree());
}

GenusReport fried_genus(const RamificationPortrait& pa, const RamificationPortrait& pb) {
    validate(pa, "A");
    validate(pb, "B");
    std::vector<PointClass> values;
    for (const auto& c : pa.classes) values.push_back(c.value);
    for (const auto& c : pb.classes) values.push_back(c.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    GenusReport rep;
    rep.degree_a = pa.map_degree;
    rep.degree_b = pb.map_degree;
    rep.irreducibility = coprime_irreducibility(pa.map_degree, pb.map_degree);
    for (const auto& v : values) {
        Multiplicities fa = pa.over(v), fb = pb.over(v);
        long s = 0;
        for (auto [ma, ca] : fa)
            for (auto [mb, cb] : fb) s += static_cast<long>(ca) * cb * std::gcd(ma, mb);
        rep.gcd_sum += s * v.size();
        rep.r += v.size();
    }
    long rhs = rep.gcd_sum - (rep.r - 2) * static_cast<long>(rep.degree_a) * rep.degree_b;
    if ((2 - rhs) % 2 != 0)
        throw IntegrityError("Fried formula right-hand side " + std::to_string(rhs) + " is odd");
    rep.genus = (2 - rhs) / 2;
    if (rep.genus < 0) rep.irreducibility = Irreducibility::Unknown;
    return rep;
}

GenusReport fried_genus(const RationalFunction& a, const RationalFunction& b, const Limits& limits) {
    return fried_genus(ramification_portrait(a, limits), ramification_portrait(b, limits));
}

BigRational genus_lower_bound(long n, long m) {
    BigRational b{BigInt(m - 84 * n + 168), BigInt(168)};
    b.canonicalize();
    return b;
}

long minimum_genus(long n, long m) {
    BigRational b = genus_lower_bound(n, m);
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    long g = fl.get_si() + 1;
    return g < 0 ? 0 : g;
}

HyperbolicBoundCheck check_hyperbolic_bound(const RationalFunction& a, const RationalFunction& b,
                                            const Limits& limits) {
    HyperbolicBoundCheck out;
    out.bound = genus_lower_bound(a.degree(), b.degree());
    RamificationPortrait pa = ramification_portrait(a, limits);
    out.chi_target = euler_char(target_orbifold(pa));
    out.chi_gap_ok = out.chi_target <= BigRational(-1, 42);
    if (coprime_irreducibility(a, b) != Irreducibility::Proven) {
        out.reason = "degrees not coprime; irreducibility unknown";
        return out;
    }
    if (sgn(out.chi_target) >= 0) {
        out.reason = "chi(O_2^A) >= 0";
        return out;
    }
    out.genus = fried_genus(pa, ramification_portrait(b, limits));
    bool ok = BigRational(out.genus.genus) > out.bound && out.chi_gap_ok;
    out.verdict = ok ? Verdict::Pass : Verdict::Fail;
    out.reason = ok ? "genus exceeds the bound" : "bound violated";
    return out;
}

}  // namespace sepvar
