#include "sepvar/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sepvar {
namespace zfactor {
namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p < 2^32.

using Fp = std::uint64_t;
using FpPoly = std::vector<Fp>;

struct Zp {
    Fp p;

    Fp add(Fp a, Fp b) const { return (a + b) % p; }
    Fp sub(Fp a, Fp b) const { return (a + p - b) % p; }
    Fp mul(Fp a, Fp b) const { return (a * b) % p; }
    Fp pow(Fp a, Fp e) const {
        Fp r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Fp inv(Fp a) const {
        if (a % p == 0) throw DivisionByZero("inverse of zero mod p");
        return pow(a, p - 2);
    }

    static void trim(FpPoly& f) {
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    static int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] = sub(k < a.size() ? a[k] : 0, k < b.size() ? b[k] : 0);
        trim(r);
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    FpPoly scale(FpPoly a, Fp c) const {
        for (auto& x : a) x = mul(x, c);
        trim(a);
        return a;
    }
    FpPoly monic(const FpPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

    void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) const {
        if (b.empty()) throw DivisionByZero("polynomial division by zero mod p");
        r = a;
        if (a.size() < b.size()) {
            q.clear();
            return;
        }
        q.assign(a.size() - b.size() + 1, 0);
        Fp il = inv(b.back());
        const std::size_t db = b.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            Fp c = mul(r[k + db], il);
            q[k] = c;
            if (!c) continue;
            for (std::size_t j = 0; j <= db; ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
        }
        r.resize(db);
        trim(r);
        trim(q);
    }
    FpPoly rem(const FpPoly& a, const FpPoly& b) const {
        FpPoly q, r;
        divrem(a, b, q, r);
        return r;
    }
    FpPoly quo(const FpPoly& a, const FpPoly& b) const {
        FpPoly q, r;
        divrem(a, b, q, r);
        return q;
    }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        while (!b.empty()) {
            FpPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    /// s*a + t*b = 1 for coprime a, b.
    void ext_gcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const {
        FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
        while (!r1.empty()) {
            FpPoly q, r;
            divrem(r0, r1, q, r);
            FpPoly s2 = sub(s0, mul(q, s1));
            FpPoly t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.size() != 1) throw IntegrityError("modular factors not coprime");
        Fp il = inv(r0[0]);
        s = scale(s0, il);
        t = scale(t0, il);
    }
    FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) const { return rem(mul(a, b), m); }
    FpPoly powmod(FpPoly base, const BigInt& e, const FpPoly& m) const {
        FpPoly r{1};
        base = rem(base, m);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t k = bits; k-- > 0;) {
            r = mulmod(r, r, m);
            if (mpz_tstbit(e.get_mpz_t(), k)) r = mulmod(r, base, m);
        }
        return r;
    }
    FpPoly derivative(const FpPoly& f) const {
        if (f.size() <= 1) return {};
        FpPoly d(f.size() - 1);
        for (std::size_t k = 1; k < f.size(); ++k) d[k - 1] = mul(f[k], k % p);
        trim(d);
        return d;
    }

    FpPoly reduce(const ZPoly& f) const {
        FpPoly r(f.size());
        BigInt pz(static_cast<unsigned long>(p));
        for (std::size_t k = 0; k < f.size(); ++k) {
            BigInt m;
            mpz_fdiv_r(m.get_mpz_t(), f[k].get_mpz_t(), pz.get_mpz_t());
            r[k] = m.get_ui();
        }
        trim(r);
        return r;
    }

    /// Monic irreducible factors of a monic squarefree f.
    std::vector<FpPoly> factor(const FpPoly& f) const {
        std::vector<FpPoly> out;
        // Distinct-degree split.
        FpPoly rest = f;
        FpPoly h{0, 1};
        const FpPoly x{0, 1};
        BigInt pz(static_cast<unsigned long>(p));
        for (int d = 1; 2 * d <= deg(rest); ++d) {
            h = powmod(h, pz, rest);
            FpPoly g = gcd(sub(h, x), rest);
            if (deg(g) > 0) {
                equal_degree(g, d, out);
                rest = quo(rest, g);
                h = rem(h, rest);
            }
        }
        if (deg(rest) > 0) out.push_back(monic(rest));
        return out;
    }

    void equal_degree(const FpPoly& g, int d, std::vector<FpPoly>& out) const {
        if (deg(g) == d) {
            out.push_back(monic(g));
            return;
        }
        std::mt19937_64 rng(0x5eb7a2u + static_cast<unsigned>(deg(g)) * 977u + static_cast<unsigned>(d));
        BigInt pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
        BigInt e = (pd - 1) / 2;
        while (true) {
            FpPoly a(static_cast<std::size_t>(deg(g)));
            for (auto& c : a) c = rng() % p;
            trim(a);
            if (deg(a) < 1) continue;
            FpPoly b = powmod(a, e, g);
            b = sub(b, FpPoly{1});
            FpPoly s = gcd(b, g);
            if (deg(s) > 0 && deg(s) < deg(g)) {
                equal_degree(s, d, out);
                equal_degree(quo(g, s), d, out);
                return;
            }
        }
    }
};

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Integer polynomials and arithmetic modulo m.

void trim(ZPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt symmetric_mod(const BigInt& a, const BigInt& m) {
    BigInt r = mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

ZPoly mod(ZPoly f, const BigInt& m) {
    for (auto& c : f) c = mod(c, m);
    trim(f);
    return f;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    trim(r);
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    trim(r);
    return r;
}

ZPoly from_fp(const FpPoly& f) {
    ZPoly r;
    r.reserve(f.size());
    for (Fp c : f) r.emplace_back(static_cast<unsigned long>(c));
    trim(r);
    return r;
}

/// Division by a polynomial whose leading coefficient is a unit mod m.
void divrem_mod(const ZPoly& a, const ZPoly& b, const BigInt& m, ZPoly& q, ZPoly& r) {
    r = mod(a, m);
    if (r.size() < b.size()) {
        q.clear();
        return;
    }
    BigInt il;
    if (mpz_invert(il.get_mpz_t(), b.back().get_mpz_t(), m.get_mpz_t()) == 0)
        throw IntegrityError("leading coefficient not invertible in Hensel lifting");
    q.assign(r.size() - b.size() + 1, BigInt(0));
    const std::size_t db = b.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt c = mod(r[k + db] * il, m);
        q[k] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = mod(r[k + j] - c * b[j], m);
    }
    r.resize(db);
    trim(r);
    trim(q);
}

/// Exact division over Z; false when b does not divide a.
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (b.empty()) return false;
    ZPoly r = a;
    if (r.size() < b.size()) return r.empty();
    q.assign(r.size() - b.size() + 1, BigInt(0));
    const std::size_t db = b.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        if (sgn(r[k + db]) == 0) continue;
        if (!mpz_divisible_p(r[k + db].get_mpz_t(), b.back().get_mpz_t())) return false;
        BigInt c = r[k + db] / b.back();
        q[k] = c;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b[j];
    }
    for (std::size_t k = 0; k < db; ++k)
        if (sgn(r[k]) != 0) return false;
    trim(q);
    return true;
}

BigInt content(const ZPoly& f) {
    BigInt g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive(ZPoly f) {
    BigInt c = content(f);
    if (sgn(c) == 0) return f;
    if (sgn(f.back()) < 0) c = -c;
    for (auto& x : f) x /= c;
    return f;
}

/// One quadratic Hensel step (h monic): f = g h mod m, s g + t h = 1 mod m,
/// lifted to modulus m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const BigInt& m) {
    BigInt m2 = m * m;
    ZPoly e = mod(zsub(f, zmul(g, h)), m2);
    ZPoly q, r;
    divrem_mod(zmul(s, e), h, m2, q, r);
    ZPoly g1 = mod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
    ZPoly h1 = mod(zadd(h, r), m2);
    ZPoly b = mod(zsub(zadd(zmul(s, g1), zmul(t, h1)), ZPoly{BigInt(1)}), m2);
    ZPoly c, d;
    divrem_mod(zmul(s, b), h1, m2, c, d);
    s = mod(zsub(s, d), m2);
    t = mod(zsub(t, zadd(zmul(t, b), zmul(c, g1))), m2);
    g = std::move(g1);
    h = std::move(h1);
}

/// Lift f = lc * prod(u) mod p to modulus `target` = p^(2^k). Returns monic lifts.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& u, const Zp& zp, const BigInt& target) {
    std::vector<ZPoly> lifted;
    ZPoly current = mod(f, target);
    const BigInt pz(static_cast<unsigned long>(zp.p));
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        FpPoly gp = FpPoly{zp.reduce(ZPoly{f.back()})};
        for (std::size_t j = i + 1; j < u.size(); ++j) gp = zp.mul(gp, u[j]);
        FpPoly sp, tp;
        zp.ext_gcd(gp, u[i], sp, tp);
        ZPoly g = from_fp(gp), h = from_fp(u[i]), s = from_fp(sp), t = from_fp(tp);
        BigInt m = pz;
        while (m < target) {
            hensel_step(current, g, h, s, t, m);
            m *= m;
        }
        lifted.push_back(mod(h, target));
        current = mod(g, target);
    }
    // The remaining cofactor carries lc(f); make it monic.
    BigInt il;
    mpz_invert(il.get_mpz_t(), current.back().get_mpz_t(), target.get_mpz_t());
    for (auto& c : current) c = mod(c * il, target);
    lifted.push_back(current);
    return lifted;
}

/// Coefficient bound for any factor of f (Mignotte-style: 2^n ||f||_2).
BigInt factor_bound(const ZPoly& f) {
    BigInt sq = 0;
    for (const auto& c : f) sq += c * c;
    BigInt norm;
    mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
    norm += 1;
    BigInt two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, f.size() - 1);
    return two_n * norm;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::uint64_t first_good_prime(const ZPoly& f) {
    for (std::uint64_t p = 3;; p += 2) {
        if (!is_prime(p)) continue;
        Zp zp{p};
        if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
        FpPoly fp = zp.reduce(f);
        if (Zp::deg(zp.gcd(fp, zp.derivative(fp))) != 0) continue;
        return p;
    }
}

std::size_t count_modular_factors(const ZPoly& f, std::uint64_t p) {
    Zp zp{p};
    return zp.factor(zp.monic(zp.reduce(f))).size();
}

std::vector<ZPoly> factor_squarefree(const ZPoly& input) {
    ZPoly f = primitive(input);
    if (f.size() <= 2) return {f};
    // Prime choice: among the first five good primes (scanning upward from 3),
    // the one giving the fewest modular factors.
    std::uint64_t best_p = 0;
    std::vector<FpPoly> best;
    int good = 0;
    for (std::uint64_t p = 3; good < 5; p += 2) {
        if (!is_prime(p)) continue;
        if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
        Zp zp{p};
        FpPoly fp = zp.reduce(f);
        if (Zp::deg(zp.gcd(fp, zp.derivative(fp))) != 0) continue;
        ++good;
        auto fac = zp.factor(zp.monic(fp));
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (best.size() == 1) return {f};
    }
    Zp zp{best_p};
    const BigInt pz(static_cast<unsigned long>(best_p));
    BigInt bound = 2 * factor_bound(f) * abs(f.back()) + 1;
    BigInt target = pz;
    while (target < bound) target *= target;

    std::vector<ZPoly> lifted = hensel_lift(f, best, zp, target);

    std::vector<ZPoly> result;
    ZPoly rest = f;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t k = 0; k < s; ++k) idx[k] = k;
        do {
            const BigInt& lc = rest.back();
            // Constant-term screen before the full product.
            BigInt c0 = lc;
            for (auto k : idx) c0 = mod(c0 * (lifted[k].empty() ? BigInt(0) : lifted[k][0]), target);
            c0 = symmetric_mod(c0, target);
            if (sgn(c0) != 0 && !mpz_divisible_p(BigInt(lc * rest[0]).get_mpz_t(), c0.get_mpz_t())) continue;
            ZPoly cand{lc};
            for (auto k : idx) cand = mod(zmul(cand, lifted[k]), target);
            for (auto& c : cand) c = symmetric_mod(c, target);
            trim(cand);
            cand = primitive(cand);
            ZPoly q;
            if (exact_divide(rest, cand, q)) {
                result.push_back(cand);
                rest = q;
                std::vector<ZPoly> remaining;
                for (std::size_t k = 0; k < lifted.size(); ++k)
                    if (std::find(idx.begin(), idx.end(), k) == idx.end()) remaining.push_back(lifted[k]);
                lifted = std::move(remaining);
                found = true;
                break;
            }
        } while (next_combination(idx, lifted.size()));
        if (!found) ++s;
    }
    if (rest.size() > 1) result.push_back(primitive(rest));
    return result;
}

ZPoly primitive_from_rational(const QiPoly& f) {
    BigInt l = 1;
    for (const auto& c : f.coeffs()) {
        if (!c.is_real()) throw std::invalid_argument("polynomial has non-real coefficients");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    }
    ZPoly z;
    for (const auto& c : f.coeffs()) z.push_back(BigInt(c.re() * l));
    return primitive(z);
}

QiPoly to_rational(const ZPoly& f) {
    std::vector<GaussianRational> c;
    for (const auto& x : f) c.emplace_back(BigRational(x));
    return QiPoly(std::move(c));
}

}  // namespace zfactor

namespace {

void sort_factors(std::vector<IrreducibleFactor>& v) {
    std::sort(v.begin(), v.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
        if (!(a.factor == b.factor)) return canonical_less(a.factor, b.factor);
        return a.multiplicity < b.multiplicity;
    });
}

std::vector<QiPoly> rational_irreducibles(const QiPoly& squarefree) {
    std::vector<QiPoly> out;
    for (const auto& z : zfactor::factor_squarefree(zfactor::primitive_from_rational(squarefree)))
        out.push_back(zfactor::to_rational(z).monic());
    return out;
}

/// Irreducible factors over Q(i) of a monic squarefree polynomial via the norm.
/// `rational_irreducible` marks inputs already known irreducible over Q.
std::vector<QiPoly> split_by_norm(const QiPoly& g, bool rational_irreducible) {
    if (g.degree() <= 1) return {g};
    if (rational_irreducible && g.degree() % 2 == 1) return {g};
    for (int step = 0;; ++step) {
        // Shifts 0, 1, -1, 2, -2, ... times i.
        int s = (step + 1) / 2 * (step % 2 == 1 ? 1 : -1);
        if (s == 0 && has_real_coefficients(g)) continue;
        QiPoly shifted = taylor_shift(g, GaussianRational(BigRational(0), BigRational(s)));
        QiPoly norm = shifted * conjugate(shifted);
        if (gcd(norm, norm.derivative()).degree() != 0) continue;
        std::vector<QiPoly> out;
        for (const auto& nj : rational_irreducibles(norm)) {
            QiPoly h = gcd(shifted, nj);
            if (h.degree() <= 0) continue;
            out.push_back(taylor_shift(h, GaussianRational(BigRational(0), BigRational(-s))).monic());
        }
        return out;
    }
}

}  // namespace

std::vector<IrreducibleFactor> factor_rational(const QiPoly& f) {
    if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
    if (!has_real_coefficients(f)) throw std::invalid_argument("factor_rational: non-real coefficients");
    std::vector<IrreducibleFactor> out;
    for (const auto& part : squarefree_decompose(f))
        for (auto& q : rational_irreducibles(part.factor)) out.push_back({q, part.multiplicity});
    sort_factors(out);
    return out;
}

std::vector<IrreducibleFactor> factor_gaussian(const QiPoly& f) {
    if (f.is_zero()) throw std::domain_error("factorization of the zero polynomial");
    std::vector<IrreducibleFactor> out;
    for (const auto& part : squarefree_decompose(f)) {
        if (has_real_coefficients(part.factor)) {
            for (const auto& q : rational_irreducibles(part.factor))
                for (auto& h : split_by_norm(q, true)) out.push_back({h, part.multiplicity});
        } else {
            for (auto& h : split_by_norm(part.factor, false)) out.push_back({h, part.multiplicity});
        }
    }
    sort_factors(out);
    return out;
}

bool is_irreducible_gaussian(const QiPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_gaussian(f);
    return fac.size() == 1 && fac.front().multiplicity == 1;
}

}  // namespace sepvar
