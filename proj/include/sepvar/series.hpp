#pragma once

// Bases of series of genus-zero curves A(x) - B(y) = 0: the decision by the
// sign of chi(O_2^A), the classical genus-zero families, intertwining and
// equivariance identities, and iterated series built from A o S = R o A.

#include "sepvar/genus.hpp"
#include "sepvar/orbifold.hpp"
#include "sepvar/rational_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepvar {

struct BasisVerdict {
    BigRational chi_target;  // chi(O_2^A)
    bool is_basis = false;
    OrbifoldClass orbifold_class;
    OrbifoldSignature target;
    std::string rationale;
    /// Hyperbolic case only: every B with deg B >= this has genus >= 2.
    long genus_two_from_degree = 0;
};

/// A is a basis iff chi(O_2^A) >= 0.
BasisVerdict is_basis_of_series(const RationalFunction& a, const Limits& limits = {});

enum class Family { Lau, Che, S, Che2, Last, J };

std::string to_string(Family f);
Family family_from_string(const std::string& name);

struct FamilyParams {
    int n = 0;
    int m = 0;
    int s = 0;
    /// Lau: R (a polynomial or Laurent polynomial); S: the polynomial S.
    std::optional<RationalFunction> poly;
};

struct FamilyInstance {
    Family family;
    FamilyParams params;
    RationalFunction a;
    RationalFunction b;
};

/// Throws std::invalid_argument when a gcd or degree constraint is violated.
FamilyInstance make_family(Family family, const FamilyParams& params);

/// Fried genus of the instance; irreducibility is Unknown whenever the degrees share a factor.
GenusReport certify_family(const FamilyInstance& instance, const Limits& limits = {});

/// True iff A o S == R o A.
bool verify_intertwining(const RationalFunction& a, const RationalFunction& s, const RationalFunction& r);

struct EquivarianceCheck {
    bool holds = true;
    std::optional<std::size_t> failing_generator;
};

/// F o sigma == sigma o F for every generator; generators must be Moebius.
EquivarianceCheck verify_equivariance(const RationalFunction& f, const std::vector<RationalFunction>& generators);

/// A o x_t == B o y_t.
bool parametrization_check(const RationalFunction& a, const RationalFunction& b, const RationalFunction& x_t,
                           const RationalFunction& y_t);

/// Term c x^i y^j of a bivariate polynomial.
struct BivariateTerm {
    int x_degree;
    int y_degree;
    GaussianRational coeff;
};

/// Numerator a_num(x) b_den(y) - b_num(y) a_den(x) of A(x) - B(y), sorted by (x, y) degree.
std::vector<BivariateTerm> separated_numerator(const RationalFunction& a, const RationalFunction& b);

struct SeriesTerm {
    unsigned l = 0;
    RationalFunction b;  // R composed with itself l times
    std::size_t numerator_terms = 0;
    GenusReport genus;
};

struct SeriesCertificate {
    std::vector<SeriesTerm> terms;
    bool all_genus_zero = true;
};

/// Curves A(x) - R^l(y) = 0 for l = 1..k. Requires gcd(deg A, deg R) == 1.
SeriesCertificate generate_series(const RationalFunction& a, const RationalFunction& r, unsigned k,
                                  const Limits& limits = {});

/// A rational function R of degree <= d with R o g == g o F, if one exists.
std::optional<RationalFunction> solve_semiconjugacy(const RationalFunction& g, const RationalFunction& f, int d);

}  // namespace sepvar
