#pragma once

// Genus of separated-variable curves A(x) - B(y) = 0 from ramification data,
// the coprime-degree irreducibility criterion and the hyperbolic lower bound.

#include "sepvar/orbifold.hpp"
#include "sepvar/rational_function.hpp"

#include <string>

namespace sepvar {

enum class Irreducibility { Proven, Unknown };

std::string to_string(Irreducibility i);

struct GenusReport {
    /// From 2 - 2g = gcd_sum - (r - 2) deg A deg B. Negative values mean the
    /// curve cannot be irreducible.
    long genus = 0;
    long r = 0;         // critical values in the union, conjugates counted individually
    long gcd_sum = 0;
    Irreducibility irreducibility = Irreducibility::Unknown;
    int degree_a = 0;
    int degree_b = 0;
};

/// Fried's formula on portraits. Irreducibility is Proven iff the degrees are coprime.
/// Throws IntegrityError on inconsistent portraits or an odd right-hand side.
GenusReport fried_genus(const RamificationPortrait& pa, const RamificationPortrait& pb);
GenusReport fried_genus(const RationalFunction& a, const RationalFunction& b, const Limits& limits = {});

Irreducibility coprime_irreducibility(const RationalFunction& a, const RationalFunction& b);
Irreducibility coprime_irreducibility(int degree_a, int degree_b);

/// (m - 84 n + 168) / 168.
BigRational genus_lower_bound(long n, long m);

/// Smallest integer strictly greater than genus_lower_bound(n, m), clamped at 0.
long minimum_genus(long n, long m);

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

struct HyperbolicBoundCheck {
    Verdict verdict = Verdict::NotApplicable;
    BigRational chi_target;  // chi(O_2^A)
    BigRational bound;       // genus must exceed this
    GenusReport genus;
    bool chi_gap_ok = false;  // chi(O_2^A) <= -1/42
    std::string reason;
};

/// For coprime degrees and chi(O_2^A) < 0: genus > bound and chi <= -1/42.
HyperbolicBoundCheck check_hyperbolic_bound(const RationalFunction& a, const RationalFunction& b,
                                            const Limits& limits = {});

}  // namespace sepvar
