#pragma once

// Rational maps of the projective line over Q(i).

#include "sepvar/ext_field.hpp"
#include "sepvar/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sepvar {

/// num/den in lowest terms with monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(GaussianRational(1)) {}
    RationalFunction(QiPoly p) : num_(std::move(p)), den_(GaussianRational(1)) {}  // NOLINT
    RationalFunction(GaussianRational c) : RationalFunction(QiPoly(std::move(c))) {}  // NOLINT
    RationalFunction(int c) : RationalFunction(GaussianRational(c)) {}  // NOLINT

    /// Throws std::domain_error on 0/0 and DivisionByZero on c/0.
    static RationalFunction normalize(const QiPoly& num, const QiPoly& den);
    static RationalFunction identity() { return RationalFunction(QiPoly::x()); }

    const QiPoly& num() const { return num_; }
    const QiPoly& den() const { return den_; }
    int degree() const { return std::max(num_.degree(), den_.degree()); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    RationalFunction pow(unsigned n) const;

    /// Value at a finite point; nullopt for a pole.
    std::optional<GaussianRational> evaluate(const GaussianRational& z) const;

    std::string to_string(const std::string& var = "z") const;

private:
    RationalFunction(QiPoly num, QiPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

    QiPoly num_;
    QiPoly den_;
};

/// A Galois-stable set of points of the projective line: either the point at
/// infinity or all roots of one monic irreducible polynomial over Q(i).
/// Degree-one classes are explicit points.
class PointClass {
public:
    static PointClass infinity() { return PointClass(); }
    static PointClass point(const GaussianRational& value);
    /// `minpoly` must be irreducible over Q(i); it is made monic.
    static PointClass roots_of(const QiPoly& minpoly);

    bool is_infinity() const { return infinite_; }
    bool is_explicit() const { return infinite_ || minpoly_.degree() == 1; }
    /// Number of points in the class.
    int size() const { return infinite_ ? 1 : minpoly_.degree(); }
    const QiPoly& minpoly() const { return minpoly_; }
    /// Value of an explicit finite point.
    GaussianRational value() const;

    friend bool operator==(const PointClass& a, const PointClass& b) {
        return a.infinite_ == b.infinite_ && a.minpoly_ == b.minpoly_;
    }
    /// Finite before infinite; by class size; explicit points by value.
    friend bool operator<(const PointClass& a, const PointClass& b);

    std::string to_string(const std::string& var = "z") const;

private:
    PointClass() : infinite_(true) {}
    explicit PointClass(QiPoly minpoly) : infinite_(false), minpoly_(std::move(minpoly)) {}

    bool infinite_;
    QiPoly minpoly_;
};

/// Local multiplicity m -> number of points with that multiplicity.
using Multiplicities = std::map<int, int>;

int multiplicity_total(const Multiplicities& m);  // sum of m * count
int ramification_total(const Multiplicities& m);  // sum of (m - 1) * count
std::vector<int> expand(const Multiplicities& m);  // descending list, e.g. {3, 1}

struct CriticalValueClass {
    PointClass value;
    Multiplicities multiplicities;  // fibre over one (any) point of the class
};

struct RamificationPortrait {
    int map_degree = 0;
    std::vector<CriticalValueClass> classes;

    /// Fibre multiplicities over a class; all ones when the class is not critical.
    Multiplicities over(const PointClass& c) const;
};

struct Limits {
    int max_portrait_degree = 64;
    std::uint64_t iterate_budget = 200000;  // estimated coefficient operations
};

RationalFunction compose(const RationalFunction& a, const RationalFunction& b);

/// R composed with itself k times. Throws ResourceError when the estimated cost exceeds the budget.
RationalFunction iterate(const RationalFunction& r, unsigned k, const Limits& limits = {});

/// mu1 o a o mu2 for Moebius mu1, mu2.
RationalFunction mobius_conjugate(const RationalFunction& a, const RationalFunction& mu1,
                                  const RationalFunction& mu2);

/// Local multiplicities of the fibre of `a` over a point of `c` (any one, by conjugacy).
Multiplicities fiber_multiplicities(const RationalFunction& a, const PointClass& c);
Multiplicities fiber_multiplicities(const RationalFunction& a, const GaussianRational& c);
/// Fibre over an element of an extension field.
Multiplicities fiber_multiplicities(const RationalFunction& a, const ExtElement& c);

/// num' den - num den'. Its roots are the finite critical points.
QiPoly wronskian(const RationalFunction& a);

std::vector<PointClass> critical_values(const RationalFunction& a, const Limits& limits = {});

RamificationPortrait ramification_portrait(const RationalFunction& a, const Limits& limits = {});

/// Image class of a source class: the class of a(z) for z in `source`.
PointClass image_class(const RationalFunction& a, const PointClass& source);

/// Local degree of `a` at any point of `source`.
int local_degree(const RationalFunction& a, const PointClass& source);

/// All irreducible classes of points mapped into `target`.
std::vector<PointClass> preimage_classes(const RationalFunction& a, const PointClass& target);

/// All classes of critical points (local degree >= 2).
std::vector<PointClass> critical_point_classes(const RationalFunction& a);

}  // namespace sepvar
