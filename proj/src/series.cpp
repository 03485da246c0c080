#include "sepvar/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sepvar {

BasisVerdict is_basis_of_series(const RationalFunction& a, const Limits& limits) {
    if (a.degree() < 1) throw std::domain_error("basis test needs a nonconstant rational function");
    BasisVerdict v;
    v.target = target_orbifold(ramification_portrait(a, limits));
    v.chi_target = euler_char(v.target);
    v.orbifold_class = classify(v.target);
    v.is_basis = sgn(v.chi_target) >= 0;
    switch (v.orbifold_class.geometry) {
        case Geometry::Spherical:
            v.rationale = "chi(O_2^A) > 0: A is a left factor of a Galois covering of the sphere by the sphere "
                          "with group " + v.orbifold_class.name;
            break;
        case Geometry::Euclidean:
            v.rationale = "chi(O_2^A) = 0: A is a left factor of a Galois covering of the sphere by a torus, "
                          "signature " + v.orbifold_class.name;
            break;
        case Geometry::Hyperbolic:
            v.rationale = "chi(O_2^A) < 0: for irreducible A(x) - B(y) = 0 the genus exceeds "
                          "(deg B - 84 deg A + 168)/168";
            v.genus_two_from_degree = 84L * a.degree() + 1;
            break;
        case Geometry::NoUniversalCover:
            v.rationale = "target orbifold has no universal covering";
            break;
    }
    return v;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::Lau: return "lau";
        case Family::Che: return "che";
        case Family::S: return "s";
        case Family::Che2: return "che2";
        case Family::Last: return "last";
        case Family::J: return "j";
    }
    return "unknown";
}

Family family_from_string(const std::string& name) {
    static const std::map<std::string, Family> names{{"lau", Family::Lau},   {"che", Family::Che},
                                                     {"s", Family::S},       {"che2", Family::Che2},
                                                     {"last", Family::Last}, {"j", Family::J}};
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    auto it = names.find(lower);
    if (it == names.end()) throw std::invalid_argument("unknown family '" + name + "'");
    return it->second;
}

namespace {

void require_positive(int v, const char* name) {
    if (v < 1) throw std::invalid_argument(std::string("family parameter ") + name + " must be >= 1");
}

void require_coprime(int a, int b, const char* what) {
    if (std::gcd(a, b) != 1) throw std::invalid_argument(std::string("family constraint violated: gcd") + what + " != 1");
}

bool is_laurent(const RationalFunction& r) {
    const QiPoly& d = r.den();
    return d.low_order() == static_cast<std::size_t>(d.degree());
}

RationalFunction x_power(int k) {
    return RationalFunction(QiPoly::monomial(GaussianRational(1), static_cast<std::size_t>(k)));
}

}  // namespace

FamilyInstance make_family(Family family, const FamilyParams& p) {
    FamilyInstance inst{family, p, RationalFunction(), RationalFunction()};
    switch (family) {
        case Family::Lau: {
            require_positive(p.n, "n");
            require_positive(p.s, "s");
            require_coprime(p.s, p.n, "(s, n)");
            RationalFunction r = p.poly.value_or(RationalFunction(1));
            if (r.is_zero()) throw std::invalid_argument("family lau: R must be nonzero");
            if (!is_laurent(r)) throw std::invalid_argument("family lau: R must be a (Laurent) polynomial");
            inst.a = x_power(p.n);
            inst.b = x_power(p.s) * r.pow(static_cast<unsigned>(p.n));
            break;
        }
        case Family::Che:
            require_positive(p.n, "n");
            require_positive(p.m, "m");
            require_coprime(p.n, p.m, "(n, m)");
            inst.a = RationalFunction(chebyshev(static_cast<unsigned>(p.n)));
            inst.b = RationalFunction(chebyshev(static_cast<unsigned>(p.m)));
            break;
        case Family::S: {
            RationalFunction s = p.poly.value_or(RationalFunction(1));
            if (s.is_zero()) throw std::invalid_argument("family s: S must be nonzero");
            if (!s.is_polynomial()) throw std::invalid_argument("family s: S must be a polynomial");
            inst.a = x_power(2);
            inst.b = (RationalFunction(1) - x_power(2)) * s.pow(2);
            break;
        }
        case Family::Che2:
            require_positive(p.n, "n");
            require_positive(p.m, "m");
            require_coprime(p.n, p.m, "(n, m)");
            inst.a = RationalFunction(chebyshev(static_cast<unsigned>(2 * p.n)));
            inst.b = -RationalFunction(chebyshev(static_cast<unsigned>(2 * p.m)));
            break;
        case Family::Last: {
            RationalFunction x = RationalFunction::identity();
            inst.a = RationalFunction(3) * x.pow(4) - RationalFunction(4) * x.pow(3);
            inst.b = (x.pow(2) - RationalFunction(1)).pow(3);
            break;
        }
        case Family::J: {
            require_positive(p.n, "n");
            require_positive(p.m, "m");
            require_coprime(p.n, p.m, "(n, m)");
            inst.a = RationalFunction(chebyshev(static_cast<unsigned>(p.n)));
            RationalFunction ym = x_power(p.m);
            inst.b = (ym + RationalFunction(1) / ym) / RationalFunction(2);
            break;
        }
    }
    return inst;
}

GenusReport certify_family(const FamilyInstance& instance, const Limits& limits) {
    return fried_genus(instance.a, instance.b, limits);
}

bool verify_intertwining(const RationalFunction& a, const RationalFunction& s, const RationalFunction& r) {
    return compose(a, s) == compose(r, a);
}

EquivarianceCheck verify_equivariance(const RationalFunction& f, const std::vector<RationalFunction>& generators) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto& g = generators[k];
        if (g.degree() != 1) throw std::invalid_argument("equivariance generators must be Moebius transformations");
        if (!(compose(f, g) == compose(g, f))) return {false, k};
    }
    return {true, std::nullopt};
}

bool parametrization_check(const RationalFunction& a, const RationalFunction& b, const RationalFunction& x_t,
                           const RationalFunction& y_t) {
    return compose(a, x_t) == compose(b, y_t);
}

std::vector<BivariateTerm> separated_numerator(const RationalFunction& a, const RationalFunction& b) {
    std::map<std::pair<int, int>, GaussianRational> acc;
    auto add = [&](const QiPoly& px, const QiPoly& py, int sign) {
        for (std::size_t i = 0; i < px.coeffs().size(); ++i) {
            if (px.coeffs()[i].is_zero()) continue;
            for (std::size_t j = 0; j < py.coeffs().size(); ++j) {
                if (py.coeffs()[j].is_zero()) continue;
                GaussianRational c = px.coeffs()[i] * py.coeffs()[j];
                if (sign < 0) c = -c;
                acc[{static_cast<int>(i), static_cast<int>(j)}] += c;
            }
        }
    };
    add(a.num(), b.den(), 1);
    add(a.den(), b.num(), -1);
    std::vector<BivariateTerm> out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.push_back({k.first, k.second, c});
    return out;
}

SeriesCertificate generate_series(const RationalFunction& a, const RationalFunction& r, unsigned k,
                                  const Limits& limits) {
    if (a.degree() < 1 || r.degree() < 1) throw std::domain_error("series needs nonconstant A and R");
    if (std::gcd(a.degree(), r.degree()) != 1)
        throw std::invalid_argument("series needs gcd(deg A, deg R) = 1");
    if (k == 0) throw std::invalid_argument("series length must be >= 1");
    SeriesCertificate cert;
    RamificationPortrait pa = ramification_portrait(a, limits);
    for (unsigned l = 1; l <= k; ++l) {
        SeriesTerm t;
        t.l = l;
        t.b = iterate(r, l, limits);
        t.numerator_terms = separated_numerator(a, t.b).size();
        t.genus = fried_genus(pa, ramification_portrait(t.b, limits));
        cert.all_genus_zero = cert.all_genus_zero && t.genus.genus == 0 &&
                              t.genus.irreducibility == Irreducibility::Proven;
        cert.terms.push_back(std::move(t));
    }
    return cert;
}

std::optional<RationalFunction> solve_semiconjugacy(const RationalFunction& g, const RationalFunction& f, int d) {
    if (d < 1) throw std::invalid_argument("semiconjugacy degree must be >= 1");
    RationalFunction h = compose(g, f);
    const auto n = static_cast<std::size_t>(d);
    // Columns: a_0..a_d multiply E_k * Hd, b_0..b_d multiply -E_k * Hn, E_k = gn^k gd^(d-k).
    std::vector<QiPoly> columns;
    std::vector<QiPoly> gn_pow{QiPoly(GaussianRational(1))}, gd_pow{QiPoly(GaussianRational(1))};
    for (std::size_t k = 1; k <= n; ++k) {
        gn_pow.push_back(gn_pow.back() * g.num());
        gd_pow.push_back(gd_pow.back() * g.den());
    }
    for (std::size_t k = 0; k <= n; ++k) columns.push_back(gn_pow[k] * gd_pow[n - k] * h.den());
    for (std::size_t k = 0; k <= n; ++k) columns.push_back(-(gn_pow[k] * gd_pow[n - k] * h.num()));
    std::size_t rows = 0;
    for (const auto& c : columns) rows = std::max(rows, c.coeffs().size());
    const std::size_t cols = columns.size();
    std::vector<std::vector<GaussianRational>> m(rows, std::vector<GaussianRational>(cols));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < columns[j].coeffs().size(); ++i) m[i][j] = columns[j].coeffs()[i];

    // Reduced row echelon form.
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        GaussianRational inv = m[row][col].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            GaussianRational c = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= c * m[row][j];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    std::size_t free_col = cols;
    for (std::size_t j = 0; j < cols; ++j)
        if (pivot_of_col[j] < 0) {
            free_col = j;
            break;
        }
    if (free_col == cols) return std::nullopt;
    std::vector<GaussianRational> x(cols);
    x[free_col] = 1;
    for (std::size_t j = 0; j < cols; ++j)
        if (pivot_of_col[j] >= 0) x[j] = -m[pivot_of_col[j]][free_col];
    QiPoly p(std::vector<GaussianRational>(x.begin(), x.begin() + static_cast<long>(n + 1)));
    QiPoly q(std::vector<GaussianRational>(x.begin() + static_cast<long>(n + 1), x.end()));
    if (q.is_zero()) return std::nullopt;
    RationalFunction r = RationalFunction::normalize(p, q);
    if (!(compose(r, g) == h)) return std::nullopt;
    return r;
}

}  // namespace sepvar
