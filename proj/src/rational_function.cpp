#include "sepvar/rational_function.hpp"

#include "sepvar/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepvar {

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction RationalFunction::normalize(const QiPoly& num, const QiPoly& den) {
    if (den.is_zero()) {
        if (num.is_zero()) throw std::domain_error("0/0 is not a rational function");
        throw DivisionByZero("rational function with zero denominator");
    }
    if (num.is_zero()) return RationalFunction();
    QiPoly g = gcd(num, den);
    QiPoly n = num, d = den;
    if (g.degree() > 0) {
        n = num / g;
        d = den / g;
    }
    GaussianRational inv = d.lc().inverse();
    return RationalFunction(n * inv, d * inv, 0);
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, 0);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction::normalize(a.num_ + b.num_, a.den_);
    return RationalFunction::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero function");
    return RationalFunction::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(unsigned n) const {
    return RationalFunction(num_.pow(n), den_.pow(n), 0);
}

std::optional<GaussianRational> RationalFunction::evaluate(const GaussianRational& z) const {
    GaussianRational d = den_.evaluate(z);
    if (d.is_zero()) return std::nullopt;
    return num_.evaluate(z) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ---------------------------------------------------------------------------
// PointClass and multiplicities

PointClass PointClass::point(const GaussianRational& value) {
    return PointClass(QiPoly(std::vector<GaussianRational>{-value, GaussianRational(1)}));
}

PointClass PointClass::roots_of(const QiPoly& minpoly) {
    if (minpoly.degree() < 1) throw std::invalid_argument("point class needs a nonconstant polynomial");
    return PointClass(minpoly.monic());
}

GaussianRational PointClass::value() const {
    if (infinite_ || minpoly_.degree() != 1) throw std::logic_error("point class is not an explicit finite point");
    return -minpoly_.coeff(0);
}

bool operator<(const PointClass& a, const PointClass& b) {
    if (a.infinite_ != b.infinite_) return b.infinite_;
    if (a.infinite_) return false;
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.size() == 1) return a.value() < b.value();
    return canonical_less(a.minpoly_, b.minpoly_);
}

std::string PointClass::to_string(const std::string& var) const {
    if (infinite_) return "infinity";
    if (minpoly_.degree() == 1) return value().to_string();
    return "roots of " + minpoly_.to_string(var);
}

int multiplicity_total(const Multiplicities& m) {
    int s = 0;
    for (auto [mult, count] : m) s += mult * count;
    return s;
}

int ramification_total(const Multiplicities& m) {
    int s = 0;
    for (auto [mult, count] : m) s += (mult - 1) * count;
    return s;
}

std::vector<int> expand(const Multiplicities& m) {
    std::vector<int> out;
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        for (int k = 0; k < it->second; ++k) out.push_back(it->first);
    return out;
}

Multiplicities RamificationPortrait::over(const PointClass& c) const {
    for (const auto& cls : classes)
        if (cls.value == c) return cls.multiplicities;
    return {{1, map_degree}};
}

// ---------------------------------------------------------------------------
// Composition

RationalFunction compose(const RationalFunction& a, const RationalFunction& b) {
    auto n = static_cast<std::size_t>(std::max(a.degree(), 0));
    QiPoly num = homogeneous_compose(a.num(), b.num(), b.den(), n);
    QiPoly den = homogeneous_compose(a.den(), b.num(), b.den(), n);
    return RationalFunction::normalize(num, den);
}

RationalFunction iterate(const RationalFunction& r, unsigned k, const Limits& limits) {
    if (k == 0) throw std::invalid_argument("iterate needs k >= 1");
    RationalFunction cur = r;
    const auto dr = static_cast<std::uint64_t>(std::max(r.degree(), 1));
    std::uint64_t spent = 0;
    for (unsigned step = 1; step < k; ++step) {
        auto dcur = static_cast<std::uint64_t>(std::max(cur.degree(), 1));
        spent += dr * (dr * dcur) * dcur;
        if (spent > limits.iterate_budget)
            throw ResourceError("iterate: estimated cost " + std::to_string(spent) + " exceeds budget " +
                                std::to_string(limits.iterate_budget));
        cur = compose(r, cur);
    }
    return cur;
}

RationalFunction mobius_conjugate(const RationalFunction& a, const RationalFunction& mu1,
                                  const RationalFunction& mu2) {
    if (mu1.degree() != 1 || mu2.degree() != 1) throw std::invalid_argument("Moebius transformations must have degree 1");
    return compose(mu1, compose(a, mu2));
}

// ---------------------------------------------------------------------------
// Fibres

namespace {

void require_nonconstant(const RationalFunction& a) {
    if (a.degree() < 1) throw std::domain_error("operation needs a nonconstant rational function");
}

template <class K>
Multiplicities fiber_of(const Polynomial<K>& g, int map_degree) {
    Multiplicities m;
    for (const auto& part : squarefree_decompose(g)) m[part.multiplicity] += part.factor.degree();
    int deficiency = map_degree - g.degree();
    if (deficiency > 0) m[deficiency] += 1;
    return m;
}

int multiplicity_in(const QiPoly& p, QiPoly f) {
    int k = 0;
    while (!f.is_zero()) {
        auto [q, r] = f.divrem(p);
        if (!r.is_zero()) break;
        f = std::move(q);
        ++k;
    }
    return k;
}

int local_degree_at_infinity(const RationalFunction& a) {
    int dn = a.num().degree(), dd = a.den().degree();
    if (dn != dd) return std::abs(dn - dd);
    GaussianRational c = a.num().lc() / a.den().lc();
    return a.degree() - (a.num() - c * a.den()).degree();
}

void append_irreducibles(const QiPoly& f, std::vector<PointClass>& out) {
    if (f.degree() < 1) return;
    for (const auto& fac : factor_gaussian(f)) out.push_back(PointClass::roots_of(fac.factor));
}

void sort_unique(std::vector<PointClass>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_degree(const RationalFunction& a, const Limits& limits) {
    if (a.degree() > limits.max_portrait_degree)
        throw ResourceError("degree " + std::to_string(a.degree()) + " exceeds the portrait degree cap " +
                            std::to_string(limits.max_portrait_degree));
}

}  // namespace

Multiplicities fiber_multiplicities(const RationalFunction& a, const GaussianRational& c) {
    require_nonconstant(a);
    return fiber_of(a.num() - c * a.den(), a.degree());
}

Multiplicities fiber_multiplicities(const RationalFunction& a, const ExtElement& c) {
    require_nonconstant(a);
    if (c.is_scalar()) return fiber_multiplicities(a, c.scalar());
    return fiber_of(lift(a.num()) - c * lift(a.den()), a.degree());
}

Multiplicities fiber_multiplicities(const RationalFunction& a, const PointClass& c) {
    require_nonconstant(a);
    if (c.is_infinity()) {
        Multiplicities m;
        for (const auto& part : squarefree_decompose(a.den())) m[part.multiplicity] += part.factor.degree();
        int excess = a.num().degree() - a.den().degree();
        if (excess > 0) m[excess] += 1;
        return m;
    }
    if (c.size() == 1) return fiber_multiplicities(a, c.value());
    auto field = ExtField::make(c.minpoly(), "c");
    return fiber_multiplicities(a, ExtElement::generator(field));
}

QiPoly wronskian(const RationalFunction& a) {
    return a.num().derivative() * a.den() - a.num() * a.den().derivative();
}

PointClass image_class(const RationalFunction& a, const PointClass& source) {
    require_nonconstant(a);
    if (source.is_infinity()) {
        int dn = a.num().degree(), dd = a.den().degree();
        if (dn > dd) return PointClass::infinity();
        if (dn < dd) return PointClass::point(GaussianRational(0));
        return PointClass::point(a.num().lc() / a.den().lc());
    }
    if (source.size() == 1) {
        auto v = a.evaluate(source.value());
        return v ? PointClass::point(*v) : PointClass::infinity();
    }
    if (source.minpoly().divides(a.den())) return PointClass::infinity();
    auto field = ExtField::make(source.minpoly(), "x");
    ExtElement alpha = ExtElement::generator(field);
    ExtElement value = a.num().evaluate(alpha) / a.den().evaluate(alpha);
    return PointClass::roots_of(minimal_polynomial(value));
}

int local_degree(const RationalFunction& a, const PointClass& source) {
    require_nonconstant(a);
    if (source.is_infinity()) return local_degree_at_infinity(a);
    int pole_order = multiplicity_in(source.minpoly(), a.den());
    if (pole_order > 0) return pole_order;
    return 1 + multiplicity_in(source.minpoly(), wronskian(a));
}

std::vector<PointClass> preimage_classes(const RationalFunction& a, const PointClass& target) {
    require_nonconstant(a);
    std::vector<PointClass> out;
    if (target.is_infinity()) {
        append_irreducibles(a.den(), out);
    } else {
        const QiPoly& m = target.minpoly();
        append_irreducibles(homogeneous_compose(m, a.num(), a.den(), static_cast<std::size_t>(m.degree())), out);
    }
    if (image_class(a, PointClass::infinity()) == target) out.push_back(PointClass::infinity());
    sort_unique(out);
    return out;
}

std::vector<PointClass> critical_point_classes(const RationalFunction& a) {
    require_nonconstant(a);
    std::vector<PointClass> out;
    append_irreducibles(wronskian(a), out);
    if (local_degree_at_infinity(a) >= 2) out.push_back(PointClass::infinity());
    sort_unique(out);
    return out;
}

std::vector<PointClass> critical_values(const RationalFunction& a, const Limits& limits) {
    require_nonconstant(a);
    check_degree(a, limits);
    std::vector<PointClass> out;
    for (const auto& p : critical_point_classes(a)) out.push_back(image_class(a, p));
    sort_unique(out);
    return out;
}

RamificationPortrait ramification_portrait(const RationalFunction& a, const Limits& limits) {
    RamificationPortrait portrait;
    portrait.map_degree = a.degree();
    int rh = 0;
    for (const auto& c : critical_values(a, limits)) {
        Multiplicities m = fiber_multiplicities(a, c);
        if (multiplicity_total(m) != a.degree())
            throw IntegrityError("fibre over " + c.to_string() + " does not sum to the degree");
        rh += c.size() * ramification_total(m);
        portrait.classes.push_back({c, std::move(m)});
    }
    if (rh != 2 * a.degree() - 2)
        throw IntegrityError("Riemann-Hurwitz total " + std::to_string(rh) + " differs from 2d-2 = " +
                             std::to_string(2 * a.degree() - 2));
    return portrait;
}

}  // namespace sepvar
