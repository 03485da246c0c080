#pragma once

// Simple algebraic extensions Q(i)(alpha) = Q(i)[t] / (m(t)).

#include "sepvar/gaussian.hpp"
#include "sepvar/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sepvar {

class ExtField {
public:
    /// `minpoly` is made monic. Irreducibility is the caller's responsibility;
    /// use make_certified() to have it checked by factorization.
    explicit ExtField(QiPoly minpoly, std::string generator = "a");

    static std::shared_ptr<const ExtField> make(QiPoly minpoly, std::string generator = "a");
    /// Throws IntegrityError unless minpoly is irreducible over Q(i).
    static std::shared_ptr<const ExtField> make_certified(QiPoly minpoly, std::string generator = "a");

    const QiPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    const std::string& generator() const { return generator_; }

    /// Reduce a polynomial in the generator modulo the minimal polynomial.
    QiPoly reduce(const QiPoly& p) const { return p % minpoly_; }

private:
    QiPoly minpoly_;
    std::string generator_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

/// Element of an ExtField, or a bare Q(i) scalar when no field is attached.
/// Bare scalars combine with elements of any field; elements of two different
/// fields never combine.
class ExtElement {
public:
    ExtElement() = default;
    ExtElement(int v) : value_(GaussianRational(v)) {}  // NOLINT
    ExtElement(GaussianRational v) : value_(std::move(v)) {}  // NOLINT
    ExtElement(ExtFieldPtr field, QiPoly value);

    static ExtElement generator(const ExtFieldPtr& field);

    const ExtFieldPtr& field() const { return field_; }
    /// Representation as a polynomial in the generator of degree < field degree.
    const QiPoly& value() const { return value_; }
    /// Coordinates on the power basis 1, a, ..., a^(d-1).
    std::vector<GaussianRational> coords() const;

    bool is_zero() const { return value_.is_zero(); }
    bool is_scalar() const { return value_.degree() <= 0; }
    GaussianRational scalar() const { return value_.coeff(0); }

    ExtElement inverse() const;

    ExtElement operator-() const { return {field_, -value_, Raw{}}; }
    ExtElement& operator+=(const ExtElement& o);
    ExtElement& operator-=(const ExtElement& o);
    ExtElement& operator*=(const ExtElement& o);
    ExtElement& operator/=(const ExtElement& o) { return *this *= o.inverse(); }

    friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
    friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
    friend ExtElement operator*(ExtElement a, const ExtElement& b) { return a *= b; }
    friend ExtElement operator/(ExtElement a, const ExtElement& b) { return a /= b; }

    /// Equal values; bare scalars compare equal to the same scalar in any field.
    friend bool operator==(const ExtElement& a, const ExtElement& b);

    std::string to_string() const;

private:
    struct Raw {};
    ExtElement(ExtFieldPtr field, QiPoly value, Raw) : field_(std::move(field)), value_(std::move(value)) {}
    const ExtFieldPtr& join(const ExtElement& o) const;

    ExtFieldPtr field_;
    QiPoly value_;
};

using ExtPoly = Polynomial<ExtElement>;

/// Lift a Q(i) polynomial to coefficients in an extension.
ExtPoly lift(const QiPoly& p);

/// Minimal polynomial over Q(i) of an element, found from the first linear
/// dependence among its powers. Always irreducible.
QiPoly minimal_polynomial(const ExtElement& e);

}  // namespace sepvar
