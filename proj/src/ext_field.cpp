#include "sepvar/ext_field.hpp"

#include "sepvar/factor.hpp"

namespace sepvar {

ExtField::ExtField(QiPoly minpoly, std::string generator)
    : minpoly_(minpoly.monic()), generator_(std::move(generator)) {
    if (minpoly_.degree() < 1) throw std::invalid_argument("extension minimal polynomial must have degree >= 1");
}

ExtFieldPtr ExtField::make(QiPoly minpoly, std::string generator) {
    return std::make_shared<const ExtField>(std::move(minpoly), std::move(generator));
}

ExtFieldPtr ExtField::make_certified(QiPoly minpoly, std::string generator) {
    auto factors = factor_gaussian(minpoly);
    if (factors.size() != 1 || factors.front().multiplicity != 1)
        throw IntegrityError("extension polynomial " + minpoly.to_string("t") + " is reducible over Q(i); factor " +
                             factors.front().factor.to_string("t"));
    return make(std::move(minpoly), std::move(generator));
}

ExtElement::ExtElement(ExtFieldPtr field, QiPoly value) : field_(std::move(field)), value_(std::move(value)) {
    if (field_) value_ = field_->reduce(value_);
}

ExtElement ExtElement::generator(const ExtFieldPtr& field) {
    return ExtElement(field, QiPoly::x());
}

std::vector<GaussianRational> ExtElement::coords() const {
    std::size_t d = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
    std::vector<GaussianRational> c(d);
    for (std::size_t k = 0; k < d; ++k) c[k] = value_.coeff(k);
    return c;
}

const ExtFieldPtr& ExtElement::join(const ExtElement& o) const {
    if (!field_) return o.field_;
    if (o.field_ && o.field_ != field_ && !(o.field_->minpoly() == field_->minpoly()))
        throw std::invalid_argument("arithmetic between elements of different extension fields");
    return field_;
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
    field_ = join(o);
    value_ += o.value_;
    return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
    field_ = join(o);
    value_ -= o.value_;
    return *this;
}

ExtElement& ExtElement::operator*=(const ExtElement& o) {
    field_ = join(o);
    if (o.is_scalar() || is_scalar()) {
        value_ *= o.value_;
        return *this;
    }
    value_ = field_->reduce(value_ * o.value_);
    return *this;
}

ExtElement ExtElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in extension field");
    if (is_scalar()) return {field_, QiPoly(scalar().inverse()), Raw{}};
    auto eg = ext_gcd(value_, field_->minpoly());
    if (eg.g.degree() > 0)
        throw IntegrityError("element not invertible: minimal polynomial has factor " + eg.g.to_string("t"));
    return {field_, field_->reduce(eg.s), Raw{}};
}

bool operator==(const ExtElement& a, const ExtElement& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_ && !(a.field_->minpoly() == b.field_->minpoly())) return false;
    return a.value_ == b.value_;
}

std::string ExtElement::to_string() const {
    return value_.to_string(field_ ? field_->generator() : "a");
}

ExtPoly lift(const QiPoly& p) {
    std::vector<ExtElement> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return ExtPoly(std::move(c));
}

QiPoly minimal_polynomial(const ExtElement& e) {
    if (e.is_scalar()) return QiPoly(std::vector<GaussianRational>{-e.scalar(), GaussianRational(1)});
    const int d = e.field()->degree();
    // Row-reduce the coordinate vectors of 1, e, e^2, ... until one is dependent.
    // Each stored row carries the combination of powers that produced it.
    struct Row {
        std::vector<GaussianRational> v;
        std::vector<GaussianRational> combo;
        int pivot;
    };
    std::vector<Row> basis;
    ExtElement power(e.field(), QiPoly(GaussianRational(1)));
    for (int k = 0; k <= d; ++k) {
        Row row{power.coords(), std::vector<GaussianRational>(d + 1), -1};
        row.combo[k] = 1;
        for (const auto& b : basis) {
            if (row.v[b.pivot].is_zero()) continue;
            GaussianRational c = row.v[b.pivot];
            for (int j = 0; j < d; ++j) row.v[j] -= c * b.v[j];
            for (int j = 0; j <= d; ++j) row.combo[j] -= c * b.combo[j];
        }
        int pivot = -1;
        for (int j = 0; j < d; ++j)
            if (!row.v[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot < 0) return QiPoly(row.combo).monic();
        GaussianRational inv = row.v[pivot].inverse();
        for (auto& x : row.v) x *= inv;
        for (auto& x : row.combo) x *= inv;
        row.pivot = pivot;
        // Keep the basis fully reduced on pivot columns.
        for (auto& b : basis) {
            if (b.v[pivot].is_zero()) continue;
            GaussianRational c = b.v[pivot];
            for (int j = 0; j < d; ++j) b.v[j] -= c * row.v[j];
            for (int j = 0; j <= d; ++j) b.combo[j] -= c * row.combo[j];
        }
        basis.push_back(std::move(row));
        power *= e;
    }
    throw IntegrityError("no linear dependence among powers; extension degree inconsistent");
}

}  // namespace sepvar
