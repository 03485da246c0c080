#include "sepvar/orbifold.hpp"

#include "sepvar/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace sepvar {

namespace {

bool point_less(const OrbifoldPoint& a, const OrbifoldPoint& b) {
    if (a.support.has_value() != b.support.has_value()) return b.support.has_value();
    if (a.support && !(*a.support == *b.support)) return *a.support < *b.support;
    return std::tie(a.nu, a.count) < std::tie(b.nu, b.count);
}

bool point_equal(const OrbifoldPoint& a, const OrbifoldPoint& b) {
    return a.support == b.support && a.nu == b.nu && a.count == b.count;
}

}  // namespace

void OrbifoldSignature::check_genus() const {
    if (base_genus_ != 0 && base_genus_ != 1) throw std::invalid_argument("orbifold base genus must be 0 or 1");
}

OrbifoldSignature OrbifoldSignature::abstract(const std::vector<int>& nus, int base_genus) {
    OrbifoldSignature o(base_genus);
    for (int nu : nus) o.add(nu, 1);
    return o;
}

void OrbifoldSignature::add(int nu, int count) {
    if (nu < 1 || count < 1) throw std::invalid_argument("ramification index and count must be positive");
    if (nu == 1) return;
    OrbifoldPoint p{std::nullopt, nu, count};
    points_.insert(std::upper_bound(points_.begin(), points_.end(), p, point_less), p);
}

void OrbifoldSignature::add(const PointClass& support, int nu) {
    if (nu < 1) throw std::invalid_argument("ramification index must be positive");
    std::erase_if(points_, [&](const OrbifoldPoint& p) { return p.support && *p.support == support; });
    if (nu == 1) return;
    OrbifoldPoint p{support, nu, support.size()};
    points_.insert(std::upper_bound(points_.begin(), points_.end(), p, point_less), p);
}

int OrbifoldSignature::nu_at(const PointClass& c) const {
    for (const auto& p : points_)
        if (p.support && *p.support == c) return p.nu;
    return 1;
}

bool OrbifoldSignature::has_explicit_support() const {
    return std::all_of(points_.begin(), points_.end(), [](const OrbifoldPoint& p) { return p.support.has_value(); });
}

std::vector<int> OrbifoldSignature::indices() const {
    std::vector<int> out;
    for (const auto& p : points_)
        for (int k = 0; k < p.count; ++k) out.push_back(p.nu);
    std::sort(out.begin(), out.end());
    return out;
}

bool operator==(const OrbifoldSignature& a, const OrbifoldSignature& b) {
    return a.base_genus_ == b.base_genus_ &&
           std::equal(a.points_.begin(), a.points_.end(), b.points_.begin(), b.points_.end(), point_equal);
}

BigRational euler_char(const OrbifoldSignature& o) {
    BigRational chi(2 - 2 * o.base_genus());
    for (const auto& p : o.points()) chi += BigRational(p.count) * (BigRational(1, p.nu) - 1);
    chi.canonicalize();
    return chi;
}

std::string to_string(Geometry g) {
    switch (g) {
        case Geometry::Spherical: return "spherical";
        case Geometry::Euclidean: return "euclidean";
        case Geometry::Hyperbolic: return "hyperbolic";
        case Geometry::NoUniversalCover: return "no_universal_cover";
    }
    return "unknown";
}

OrbifoldClass classify(const OrbifoldSignature& o) {
    if (o.base_genus() != 0) throw std::invalid_argument("classification is defined for sphere orbifolds only");
    OrbifoldClass out;
    out.chi = euler_char(o);
    const std::vector<int> v = o.indices();
    auto spherical = [&](std::string name, int order) {
        out.geometry = Geometry::Spherical;
        out.name = std::move(name);
        out.group_order = order;
        return out;
    };
    auto euclidean = [&](std::string name) {
        out.geometry = Geometry::Euclidean;
        out.name = std::move(name);
        return out;
    };
    if (sgn(out.chi) < 0) {
        out.geometry = Geometry::Hyperbolic;
        out.name = "hyperbolic";
        return out;
    }
    if (v.empty()) return spherical("C1", 1);
    if (v.size() == 1 || (v.size() == 2 && v[0] != v[1])) {
        out.geometry = Geometry::NoUniversalCover;
        out.name = "no_universal_cover";
        return out;
    }
    if (v.size() == 2) return spherical("C" + std::to_string(v[0]), v[0]);
    if (v.size() == 3) {
        if (v[0] == 2 && v[1] == 2) return spherical("D" + std::to_string(2 * v[2]), 2 * v[2]);
        if (v == std::vector<int>{2, 3, 3}) return spherical("A4", 12);
        if (v == std::vector<int>{2, 3, 4}) return spherical("S4", 24);
        if (v == std::vector<int>{2, 3, 5}) return spherical("A5", 60);
        if (v == std::vector<int>{3, 3, 3}) return euclidean("(3,3,3)");
        if (v == std::vector<int>{2, 4, 4}) return euclidean("(2,4,4)");
        if (v == std::vector<int>{2, 3, 6}) return euclidean("(2,3,6)");
    }
    if (v == std::vector<int>{2, 2, 2, 2}) return euclidean("(2,2,2,2)");
    throw std::logic_error("signature with nonnegative Euler characteristic outside the known lists");
}

OrbifoldSignature target_orbifold(const RamificationPortrait& portrait) {
    OrbifoldSignature o(0);
    for (const auto& cls : portrait.classes) {
        int nu = 1;
        for (auto [m, count] : cls.multiplicities) nu = std::lcm(nu, m);
        o.add(cls.value, nu);
    }
    return o;
}

OrbifoldSignature minimal_pullback(const RationalFunction& f, const OrbifoldSignature& o2) {
    if (o2.base_genus() != 0 || !o2.has_explicit_support())
        throw std::invalid_argument("minimal pullback needs a sphere orbifold with explicit support");
    OrbifoldSignature o1(0);
    std::vector<PointClass> critical = critical_point_classes(f), images;
    for (const auto& s : critical) images.push_back(image_class(f, s));
    const PointClass infinity_image = image_class(f, PointClass::infinity());
    for (const auto& entry : o2.points()) {
        const PointClass& target = *entry.support;
        if (target.is_infinity()) {
            for (const auto& s : preimage_classes(f, target))
                o1.add(s, entry.nu / std::gcd(local_degree(f, s), entry.nu));
            continue;
        }
        QiPoly rest = homogeneous_compose(target.minpoly(), f.num(), f.den(),
                                          static_cast<std::size_t>(target.minpoly().degree()));
        for (std::size_t k = 0; k < critical.size(); ++k) {
            const PointClass& s = critical[k];
            if (!(images[k] == target)) continue;
            o1.add(s, entry.nu / std::gcd(local_degree(f, s), entry.nu));
            if (s.is_infinity()) continue;
            while (rest.degree() >= 1 && s.minpoly().divides(rest)) rest = rest.divrem(s.minpoly()).first;
        }
        if (rest.degree() >= 1)
            for (const auto& fac : factor_gaussian(rest)) o1.add(PointClass::roots_of(fac.factor), entry.nu);
        if (infinity_image == target && local_degree(f, PointClass::infinity()) == 1)
            o1.add(PointClass::infinity(), entry.nu);
    }
    return o1;
}

AssociatedOrbifolds orbifolds_of_function(const RationalFunction& a, const Limits& limits) {
    OrbifoldSignature target = target_orbifold(ramification_portrait(a, limits));
    return {minimal_pullback(a, target), target};
}

namespace {

enum class Relation { Covering, Holomorphic, Minimal };

bool relation_holds(Relation r, int nu1, int d, int nu2) {
    switch (r) {
        case Relation::Covering: return nu2 == nu1 * d;
        case Relation::Holomorphic: return (nu1 * d) % nu2 == 0;
        case Relation::Minimal: return nu2 == nu1 * std::gcd(d, nu2);
    }
    return false;
}

MapCheck check_pointwise(Relation r, const RationalFunction& f, const OrbifoldSignature& o1,
                         const OrbifoldSignature& o2) {
    if (o1.base_genus() != 0 || o2.base_genus() != 0)
        throw std::invalid_argument("pointwise map checks need sphere orbifolds");
    if (!o1.has_explicit_support() || !o2.has_explicit_support())
        throw std::invalid_argument("unsupported input: pointwise map checks need explicitly supported signatures");
    std::vector<PointClass> sources = critical_point_classes(f);
    for (const auto& p : o1.points()) sources.push_back(*p.support);
    sources.push_back(PointClass::infinity());
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    std::vector<PointClass> images;
    for (const auto& s : sources) images.push_back(image_class(f, s));
    for (std::size_t k = 0; k < sources.size(); ++k) {
        const PointClass& s = sources[k];
        const PointClass& image = images[k];
        int d = local_degree(f, s);
        int nu1 = o1.nu_at(s), nu2 = o2.nu_at(image);
        if (!relation_holds(r, nu1, d, nu2)) return {false, MapWitness{s, image, nu1, d, nu2}};
    }
    // Every other preimage of a cone point is unramified and carries nu1 = 1.
    for (const auto& p : o2.points()) {
        const PointClass& target = *p.support;
        if (relation_holds(r, 1, 1, p.nu)) continue;
        QiPoly rest = target.is_infinity()
                          ? f.den()
                          : homogeneous_compose(target.minpoly(), f.num(), f.den(),
                                                static_cast<std::size_t>(target.minpoly().degree()));
        for (std::size_t k = 0; k < sources.size(); ++k) {
            const PointClass& s = sources[k];
            if (s.is_infinity() || !(images[k] == target)) continue;
            while (rest.degree() >= 1 && s.minpoly().divides(rest)) rest = rest.divrem(s.minpoly()).first;
        }
        if (rest.degree() < 1) continue;
        PointClass witness = PointClass::roots_of(factor_gaussian(rest).front().factor);
        return {false, MapWitness{witness, target, 1, 1, p.nu}};
    }
    return {true, std::nullopt};
}

}  // namespace

MapCheck is_covering_map(const RationalFunction& f, const OrbifoldSignature& o1, const OrbifoldSignature& o2) {
    return check_pointwise(Relation::Covering, f, o1, o2);
}

MapCheck is_holomorphic_map(const RationalFunction& f, const OrbifoldSignature& o1, const OrbifoldSignature& o2) {
    return check_pointwise(Relation::Holomorphic, f, o1, o2);
}

MapCheck is_minimal_holomorphic_map(const RationalFunction& f, const OrbifoldSignature& o1,
                                    const OrbifoldSignature& o2) {
    return check_pointwise(Relation::Minimal, f, o1, o2);
}

bool check_covering_rh(const OrbifoldSignature& o1, const OrbifoldSignature& o2, int d) {
    return euler_char(o1) == BigRational(d) * euler_char(o2);
}

}  // namespace sepvar
