#pragma once

// The octahedral worked example: A = 3z^4 - 4z^3, its Galois closure f with
// group S4, the factor p with f = A o p, an S4-equivariant F and the pair
// (R, S) with A o S = R o A. Literals are embedded verbatim and
// every identity is re-checked.

#include "sepvar/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sepvar {

namespace klein_s4 {

inline constexpr const char* kA = "3*z^4 - 4*z^3";
inline constexpr const char* kF = "-(z^8 + 14*z^4 + 1)^3/(108*z^4*(z^4 - 1)^4)";
inline constexpr const char* kP =
    "((1+i)/6*z^2 - i/3*z + (1-i)/6)*(z^4 + 2*z^3 + 2*z^2 - 2*z + 1)/((z^2 + 1)*(z + 1)*(z - 1)*z)";
inline constexpr const char* kEquivariant = "(-z^5 + 5*z)/(5*z^4 - 1)";
inline constexpr const char* kEquivariant11 = "(z^11 + 66*z^6 - 11*z)/(-11*z^10 - 66*z^5 + 1)";
inline constexpr const char* kR =
    "z^2*(z^3 - 240*z^2 + 19200*z - 512000)/(1048576 + 625*z^4 + 16000*z^3 + 153600*z^2 + 655360*z)";
inline constexpr const char* kS = "z^2*(3*z^3 - 10*z^2 + 20*z - 40)/(32 - 20*z^3 + 15*z^4)";
inline constexpr const char* kGenerators[] = {"i*z", "(z + i)/(z - i)"};

}  // namespace klein_s4

struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
    /// Reported without an expectation; does not affect the verdict.
    bool informational = false;
};

struct KleinS4Certificate {
    RationalFunction a, f, p, equivariant, r, s, equivariant11;
    RamificationPortrait portrait_a, portrait_f;
    SeriesCertificate series;
    /// Solutions of R o f = f o F and S o p = p o F recovered from f, p and F alone.
    std::optional<RationalFunction> recovered_r, recovered_s;
    std::vector<NamedCheck> checks;

    /// True iff every non-informational check passed.
    bool passed() const;
    const NamedCheck* find(const std::string& name) const;
};

KleinS4Certificate klein_s4_certificate(const Limits& limits = {});

}  // namespace sepvar
