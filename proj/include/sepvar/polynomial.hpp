#pragma once

// Dense univariate polynomials over an exact field K.
//
// K must provide construction from int, the field operations, operator==,
// is_zero() and inverse(). GaussianRational and ExtElement both qualify.

#include "sepvar/gaussian.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sepvar {

template <class K>
class Polynomial {
public:
    using coeff_type = K;

    Polynomial() = default;
    Polynomial(K c) {  // NOLINT: constants embed implicitly
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    explicit Polynomial(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial x() { return Polynomial(std::vector<K>{K(0), K(1)}); }
    static Polynomial monomial(K c, std::size_t n) {
        std::vector<K> v(n + 1, K(0));
        v[n] = std::move(c);
        return Polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const std::vector<K>& coeffs() const { return coeffs_; }
    K coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : K(0); }
    const K& lc() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        K inv = lc().inverse();
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c *= inv;
        return r;
    }

    template <class T>
    T evaluate(const T& at) const {
        T acc = T(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= at;
            acc += T(*it);
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<K> d;
        d.reserve(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * K(static_cast<int>(k)));
        return Polynomial(std::move(d));
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(Polynomial a, const K& c) {
        if (c.is_zero()) return {};
        for (auto& x : a.coeffs_) x *= c;
        a.trim();
        return a;
    }
    friend Polynomial operator*(const K& c, Polynomial a) { return std::move(a) * c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(unsigned n) const {
        Polynomial result(K(1)), base = *this;
        while (n) {
            if (n & 1u) result *= base;
            n >>= 1u;
            if (n) base = base * base;
        }
        return result;
    }

    /// this = q * d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (degree() < d.degree()) return {Polynomial(), *this};
        std::vector<K> r = coeffs_;
        std::vector<K> q(coeffs_.size() - d.coeffs_.size() + 1, K(0));
        K inv = d.lc().inverse();
        const std::size_t dn = d.coeffs_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            K c = r[k + dn] * inv;
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j <= dn; ++j) r[k + j] -= c * d.coeffs_[j];
            q[k] = std::move(c);
        }
        r.resize(dn);
        return {Polynomial(std::move(q)), Polynomial(std::move(r))};
    }
    Polynomial operator/(const Polynomial& d) const { return divrem(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divrem(d).second; }

    bool divides(const Polynomial& f) const { return f.divrem(*this).second.is_zero(); }

    /// Shift coefficients: returns x^k * this.
    Polynomial shift_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<K> v(k, K(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }

    /// Coefficients in reverse order: x^n f(1/x) for n = degree.
    Polynomial reversed(std::size_t n) const {
        std::vector<K> v(n + 1, K(0));
        for (std::size_t k = 0; k < coeffs_.size() && k <= n; ++k) v[n - k] = coeffs_[k];
        return Polynomial(std::move(v));
    }

    /// Order of vanishing at x = 0.
    std::size_t low_order() const {
        std::size_t k = 0;
        while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
        return k;
    }

    std::string to_string(const std::string& var = "z") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

using QiPoly = Polynomial<GaussianRational>;

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline std::string coeff_text(const GaussianRational& c, bool& negative) {
    negative = false;
    if (c.is_real()) {
        if (sgn(c.re()) < 0) {
            negative = true;
            return to_string(BigRational(-c.re()));
        }
        return to_string(c.re());
    }
    if (sgn(c.re()) == 0) {
        if (sgn(c.im()) < 0) {
            negative = true;
            BigRational m = -c.im();
            return m == 1 ? std::string("i") : to_string(m) + "*i";
        }
        return c.im() == 1 ? std::string("i") : to_string(c.im()) + "*i";
    }
    return "(" + c.to_string() + ")";
}

template <class K>
std::string coeff_text(const K& c, bool& negative) {
    negative = false;
    return "(" + c.to_string() + ")";
}

}  // namespace detail

template <class K>
std::string Polynomial<K>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const K& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool neg = false;
        std::string body = detail::coeff_text(c, neg);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool unit = body == "1";
        if (k == 0) {
            os << body;
            continue;
        }
        if (!unit) os << body << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Algorithms

/// Monic greatest common divisor. Throws when both inputs are zero.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Polynomial<K> r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

template <class K>
struct ExtGcd {
    Polynomial<K> g, s, t;
};

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
ExtGcd<K> ext_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> s0(K(1)), s1, t0, t1(K(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial<K> s2 = s0 - q * s1;
        Polynomial<K> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    K inv = r0.lc().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

template <class K>
struct SquarefreePart {
    Polynomial<K> factor;  // monic, squarefree
    int multiplicity;
};

/// Yun's algorithm. Parts are pairwise coprime; the product of factor^multiplicity
/// equals f up to its leading coefficient. Ordered by (degree, multiplicity).
template <class K>
std::vector<SquarefreePart<K>> squarefree_decompose(const Polynomial<K>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreePart<K>> parts;
    if (f.degree() == 0) return parts;
    Polynomial<K> fm = f.monic();
    Polynomial<K> d = fm.derivative();
    Polynomial<K> a = gcd(fm, d);
    Polynomial<K> b = fm / a;
    Polynomial<K> c = d / a;
    Polynomial<K> e = c - b.derivative();
    int k = 1;
    while (b.degree() > 0) {
        Polynomial<K> g = gcd(b, e);
        if (g.degree() > 0) parts.push_back({g.monic(), k});
        b = b / g;
        c = e / g;
        e = c - b.derivative();
        ++k;
    }
    std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        return x.multiplicity < y.multiplicity;
    });
    return parts;
}

/// Product of the distinct monic irreducible factors of f.
template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& f) {
    if (f.degree() <= 0) return Polynomial<K>(K(1));
    return (f / gcd(f, f.derivative())).monic();
}

/// Res(f, g) = lc(f)^deg(g) * prod over roots a of f of g(a).
/// Hence Res(x - a, x - b) = a - b. Zero when either input is zero.
template <class K>
K resultant(const Polynomial<K>& f, const Polynomial<K>& g) {
    if (f.is_zero() || g.is_zero()) return K(0);
    if (f.degree() == 0) {
        K r(1);
        for (int k = 0; k < g.degree(); ++k) r *= f.lc();
        return r;
    }
    if (g.degree() == 0) {
        K r(1);
        for (int k = 0; k < f.degree(); ++k) r *= g.lc();
        return r;
    }
    // Res(f, g) = (-1)^(deg f deg g) Res(g, f); Res(g, f) = lc(g)^(deg f - deg r) Res(g, r) with r = f mod g.
    Polynomial<K> a = f, b = g;
    K acc(1);
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            for (int k = 0; k < da; ++k) acc *= b.lc();
            return acc;
        }
        Polynomial<K> r = a % b;
        if (r.is_zero()) return K(0);
        // Res(a, b) = (-1)^(da db) Res(b, a) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
        if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
        for (int k = 0; k < da - r.degree(); ++k) acc *= b.lc();
        a = std::move(b);
        b = std::move(r);
    }
}

/// f(g(x)) by Horner's scheme.
template <class K>
Polynomial<K> compose(const Polynomial<K>& f, const Polynomial<K>& g) {
    Polynomial<K> acc;
    const auto& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * g;
        acc += Polynomial<K>(c[k]);
    }
    return acc;
}

/// Chebyshev polynomial of the first kind; T_0 = 1.
template <class K = GaussianRational>
Polynomial<K> chebyshev(unsigned n) {
    Polynomial<K> prev(K(1));
    if (n == 0) return prev;
    Polynomial<K> cur = Polynomial<K>::x();
    Polynomial<K> two_x = Polynomial<K>::monomial(K(2), 1);
    for (unsigned k = 1; k < n; ++k) {
        Polynomial<K> next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Homogenised evaluation sum_k c_k p^k q^(n-k) with n >= deg f.
template <class K>
Polynomial<K> homogeneous_compose(const Polynomial<K>& f, const Polynomial<K>& p, const Polynomial<K>& q,
                                  std::size_t n) {
    Polynomial<K> acc;
    const auto& c = f.coeffs();
    std::vector<Polynomial<K>> qpow{Polynomial<K>(K(1))};
    for (std::size_t k = 1; k <= n; ++k) qpow.push_back(qpow.back() * q);
    Polynomial<K> ppow(K(1));
    for (std::size_t k = 0; k <= n; ++k) {
        if (k < c.size() && !c[k].is_zero()) acc += c[k] * (ppow * qpow[n - k]);
        if (k < n) ppow = ppow * p;
    }
    return acc;
}

/// Canonical ordering of polynomials: degree first, then coefficients from the top down.
template <class K>
bool canonical_less(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t k = x.size(); k-- > 0;) {
        if (x[k] == y[k]) continue;
        return x[k] < y[k];
    }
    return false;
}

// Q(i)-specific helpers.

/// Coefficient-wise complex conjugate.
QiPoly conjugate(const QiPoly& f);
bool has_real_coefficients(const QiPoly& f);
/// f(x + c).
QiPoly taylor_shift(const QiPoly& f, const GaussianRational& c);

}  // namespace sepvar
