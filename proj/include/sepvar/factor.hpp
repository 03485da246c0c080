#pragma once

// Irreducible factorization over Q and Q(i).
//
// Over Q: squarefree decomposition, then per squarefree part a modular
// factorization (distinct-degree + Cantor-Zassenhaus) at a good prime,
// multifactor Hensel lifting, and exhaustive recombination.
// Over Q(i): rational inputs are factored over Q first and each factor is split
// through the norm; genuinely Gaussian inputs go through the norm directly
// (Trager's algorithm).

#include "sepvar/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace sepvar {

struct IrreducibleFactor {
    QiPoly factor;  // monic
    int multiplicity;
};

/// Factorization over Q. Requires real coefficients. Factors are sorted by
/// (degree, coefficients) and the product reproduces f up to lc(f).
std::vector<IrreducibleFactor> factor_rational(const QiPoly& f);

/// Factorization over Q(i), same ordering and reconstruction guarantees.
std::vector<IrreducibleFactor> factor_gaussian(const QiPoly& f);

bool is_irreducible_gaussian(const QiPoly& f);

namespace zfactor {

/// Integer polynomial, lowest degree first, no trailing zeros.
using ZPoly = std::vector<BigInt>;

/// Irreducible factors over Z of a primitive squarefree polynomial with positive
/// leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

/// Primitive integer polynomial proportional to a rational one, positive lc.
ZPoly primitive_from_rational(const QiPoly& f);
QiPoly to_rational(const ZPoly& f);

/// First prime >= 3 (scanning upward) modulo which f keeps its degree and stays squarefree.
std::uint64_t first_good_prime(const ZPoly& f);

/// Number of irreducible factors of f modulo p (f squarefree mod p).
std::size_t count_modular_factors(const ZPoly& f, std::uint64_t p);

}  // namespace zfactor

}  // namespace sepvar
