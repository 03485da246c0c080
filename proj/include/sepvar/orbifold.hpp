#pragma once

// Two-dimensional orbifolds over the sphere (and their Euler characteristics
// for torus bases), the orbifolds associated with a rational map, and the
// pointwise covering / holomorphic / minimal-holomorphic predicates.

#include "sepvar/rational_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepvar {

/// One marked entry of a signature: `count` points with ramification `nu` >= 2.
/// With a support class the points are exactly that class (count = class size);
/// without one the entry is abstract and only its multiset matters.
struct OrbifoldPoint {
    std::optional<PointClass> support;
    int nu = 2;
    int count = 1;
};

class OrbifoldSignature {
public:
    OrbifoldSignature() = default;
    explicit OrbifoldSignature(int base_genus) : base_genus_(base_genus) { check_genus(); }

    /// Abstract signature on the sphere, e.g. {2, 3, 7}.
    static OrbifoldSignature abstract(const std::vector<int>& nus, int base_genus = 0);

    int base_genus() const { return base_genus_; }
    const std::vector<OrbifoldPoint>& points() const { return points_; }

    /// Adds an abstract entry; ignored when nu == 1.
    void add(int nu, int count = 1);
    /// Adds an entry supported on a class; replaces a previous entry on the same class.
    void add(const PointClass& support, int nu);

    /// Ramification at a point of `c` (1 when unmarked). Abstract entries never match.
    int nu_at(const PointClass& c) const;
    bool has_explicit_support() const;

    /// Multiset of ramification indices, ascending, each repeated by its count.
    std::vector<int> indices() const;

    friend bool operator==(const OrbifoldSignature& a, const OrbifoldSignature& b);

private:
    void check_genus() const;

    int base_genus_ = 0;
    std::vector<OrbifoldPoint> points_;
};

/// chi = (2 - 2 genus) + sum count (1/nu - 1).
BigRational euler_char(const OrbifoldSignature& o);

enum class Geometry { Spherical, Euclidean, Hyperbolic, NoUniversalCover };

struct OrbifoldClass {
    Geometry geometry = Geometry::Hyperbolic;
    /// Spherical: "C1", "C<n>", "D<2n>", "A4", "S4", "A5". Euclidean: "(2,2,2,2)" etc.
    std::string name;
    /// Order of the spherical group (degree of the universal covering), else 0.
    int group_order = 0;
    BigRational chi;
};

std::string to_string(Geometry g);

/// Genus-0 signatures only; a torus base throws std::invalid_argument.
OrbifoldClass classify(const OrbifoldSignature& o);

struct AssociatedOrbifolds {
    OrbifoldSignature source;  // O_1^A
    OrbifoldSignature target;  // O_2^A
};

/// nu_2 = lcm of the local degrees over each critical value; O_1 is the minimal pullback.
AssociatedOrbifolds orbifolds_of_function(const RationalFunction& a, const Limits& limits = {});
OrbifoldSignature target_orbifold(const RamificationPortrait& portrait);

/// A point class where a pointwise condition fails.
struct MapWitness {
    PointClass source;
    PointClass image;
    int nu_source = 1;
    int local_degree = 1;
    int nu_image = 1;
};

struct MapCheck {
    bool holds = true;
    std::optional<MapWitness> witness;
};

/// nu2(f(z)) == nu1(z) deg_z f everywhere.
MapCheck is_covering_map(const RationalFunction& f, const OrbifoldSignature& o1, const OrbifoldSignature& o2);
/// nu2(f(z)) divides nu1(z) deg_z f everywhere.
MapCheck is_holomorphic_map(const RationalFunction& f, const OrbifoldSignature& o1, const OrbifoldSignature& o2);
/// nu2(f(z)) == nu1(z) gcd(deg_z f, nu2(f(z))) everywhere.
MapCheck is_minimal_holomorphic_map(const RationalFunction& f, const OrbifoldSignature& o1,
                                    const OrbifoldSignature& o2);

/// The unique source orbifold making f a minimal holomorphic map onto o2.
OrbifoldSignature minimal_pullback(const RationalFunction& f, const OrbifoldSignature& o2);

/// chi(o1) == d chi(o2).
bool check_covering_rh(const OrbifoldSignature& o1, const OrbifoldSignature& o2, int d);

}  // namespace sepvar
