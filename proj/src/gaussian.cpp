#include "sepvar/gaussian.hpp"
#include "sepvar/polynomial.hpp"

#include <sstream>

namespace sepvar {

std::string to_string(const BigRational& q) {
    return q.get_str();
}

BigRational parse_rational(const std::string& text) {
    BigRational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (sgn(q.get_den()) == 0) throw DivisionByZero("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return sepvar::to_string(re_);
    std::ostringstream os;
    auto imag = [](const BigRational& v) { return v == 1 ? std::string("i") : sepvar::to_string(v) + "*i"; };
    if (sgn(re_) == 0) {
        if (sgn(im_) < 0) return "-" + imag(BigRational(-im_));
        return imag(im_);
    }
    os << sepvar::to_string(re_) << (sgn(im_) < 0 ? " - " : " + ") << imag(BigRational(abs(im_)));
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << g.to_string();
}

BigInt denominator_lcm(const GaussianRational& g) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), g.re().get_den_mpz_t(), g.im().get_den_mpz_t());
    return l;
}

QiPoly conjugate(const QiPoly& f) {
    std::vector<GaussianRational> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(x.conj());
    return QiPoly(std::move(c));
}

bool has_real_coefficients(const QiPoly& f) {
    for (const auto& x : f.coeffs())
        if (!x.is_real()) return false;
    return true;
}

QiPoly taylor_shift(const QiPoly& f, const GaussianRational& c) {
    return compose(f, QiPoly(std::vector<GaussianRational>{c, GaussianRational(1)}));
}

}  // namespace sepvar
