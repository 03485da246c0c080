#pragma once

// Exact scalars: arbitrary-precision rationals and the Gaussian rationals Q(i).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sepvar {

/// Canonical rational p/q with q > 0 and gcd(p, q) = 1 (GMP keeps this form).
using BigRational = mpq_class;
using BigInt = mpz_class;

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_string(const BigRational& q);
BigRational parse_rational(const std::string& text);

/// Three-way comparison of rationals by value.
inline std::strong_ordering compare(const BigRational& a, const BigRational& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Element re + im*i of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int v) : re_(v) {}  // NOLINT: integers embed implicitly
    GaussianRational(long v) : re_(v) {}  // NOLINT
    GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    BigRational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(i)");
        BigRational n = norm();
        return {BigRational(re_ / n), BigRational(-im_ / n)};
    }

    GaussianRational operator-() const { return {BigRational(-re_), BigRational(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (o.is_real()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        BigRational r = re_ * o.re_ - im_ * o.im_;
        BigRational s = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(s);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw DivisionByZero("division by zero in Q(i)");
        if (o.is_real()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Lexicographic on (re, im).
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        auto c = compare(a.re_, b.re_);
        if (c != 0) return c;
        return compare(a.im_, b.im_);
    }

    std::string to_string() const;

private:
    BigRational re_{0};
    BigRational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

/// Least common multiple of all denominators of re and im.
BigInt denominator_lcm(const GaussianRational& g);

}  // namespace sepvar
