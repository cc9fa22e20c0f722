#include "cyclic/algebra.hpp"

#include <cmath>
#include <numbers>

#include "cyclic/residue.hpp"

namespace cyclic {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeff_(std::move(coeffs)) {
    trim();
}

IntPoly IntPoly::constant(const BigInt& c) {
    return IntPoly{{c}};
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> coeffs(degree + 1, BigInt{0});
    coeffs[degree] = c;
    return IntPoly{std::move(coeffs)};
}

void IntPoly::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

const BigInt& IntPoly::operator[](std::size_t i) const {
    static const BigInt zero{0};
    return i < coeff_.size() ? coeff_[i] : zero;
}

BigInt IntPoly::leading() const {
    return coeff_.empty() ? BigInt{0} : coeff_.back();
}

bool IntPoly::is_monic() const {
    return !coeff_.empty() && coeff_.back() == 1;
}

bool IntPoly::is_palindromic() const {
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] != coeff_[coeff_.size() - 1 - i]) return false;
    }
    return !coeff_.empty();
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    std::vector<BigInt> out(std::max(coeff_.size(), other.coeff_.size()), BigInt{0});
    for (std::size_t i = 0; i < coeff_.size(); ++i) out[i] += coeff_[i];
    for (std::size_t i = 0; i < other.coeff_.size(); ++i) out[i] += other.coeff_[i];
    return IntPoly{std::move(out)};
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    std::vector<BigInt> out(std::max(coeff_.size(), other.coeff_.size()), BigInt{0});
    for (std::size_t i = 0; i < coeff_.size(); ++i) out[i] += coeff_[i];
    for (std::size_t i = 0; i < other.coeff_.size(); ++i) out[i] -= other.coeff_[i];
    return IntPoly{std::move(out)};
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<BigInt> out(coeff_.size() + other.coeff_.size() - 1, BigInt{0});
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeff_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), coeff_[i].get_mpz_t(),
                       other.coeff_[j].get_mpz_t());
        }
    }
    return IntPoly{std::move(out)};
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> out(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i) out[i] = -coeff_[i];
    return IntPoly{std::move(out)};
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("divide_exact: division by zero");
    if (is_zero()) return {};
    if (degree() < divisor.degree()) {
        throw std::logic_error("divide_exact: nonzero remainder");
    }
    std::vector<BigInt> rem = coeff_;
    std::vector<BigInt> quot(rem.size() - divisor.coeff_.size() + 1, BigInt{0});
    const auto& d = divisor.coeff_;
    for (std::size_t i = rem.size(); i-- >= d.size();) {
        if (rem[i] == 0) {
            if (i == 0) break;
            continue;
        }
        BigInt q;
        mpz_tdiv_qr(q.get_mpz_t(), rem[i].get_mpz_t(), rem[i].get_mpz_t(),
                    d.back().get_mpz_t());
        if (rem[i] != 0) throw std::logic_error("divide_exact: nonzero remainder");
        quot[i - d.size() + 1] = q;
        for (std::size_t j = 0; j + 1 < d.size(); ++j) {
            mpz_submul(rem[i - d.size() + 1 + j].get_mpz_t(), q.get_mpz_t(),
                       d[j].get_mpz_t());
        }
        if (i == 0) break;
    }
    for (std::size_t j = 0; j + 1 < d.size(); ++j) {
        if (rem[j] != 0) throw std::logic_error("divide_exact: nonzero remainder");
    }
    return IntPoly{std::move(quot)};
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
    mpq_class value{0};
    for (std::size_t i = coeff_.size(); i-- > 0;) {
        value = value * x + coeff_[i];
        if (i == 0) break;
    }
    return value;
}

IntPoly chebyshev_R(i64 n) {
    require(n >= 0, "chebyshev_R: n must be non-negative");
    IntPoly prev = IntPoly::constant(2);
    if (n == 0) return prev;
    IntPoly cur = IntPoly::monomial(1, 1);
    const IntPoly x = cur;
    for (i64 i = 2; i <= n; ++i) {
        IntPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

int moebius(i64 n) {
    int result = 1;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

IntPoly z_power_minus_one(i64 d) {
    IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(d));
    return p - IntPoly::constant(1);
}

} // namespace

IntPoly cyclotomic(i64 n) {
    require(n >= 1, "cyclotomic: n must be positive");
    IntPoly numerator = IntPoly::constant(1);
    IntPoly denominator = IntPoly::constant(1);
    for (i64 d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(n / d);
        if (mu == 1) numerator = numerator * z_power_minus_one(d);
        if (mu == -1) denominator = denominator * z_power_minus_one(d);
    }
    return numerator.divide_exact(denominator);
}

IntPoly fold_palindromic(const IntPoly& p) {
    require(!p.is_zero() && p.degree() % 2 == 0 && p.is_palindromic(),
            "fold_palindromic: polynomial must be palindromic of even degree");
    std::size_t d = static_cast<std::size_t>(p.degree()) / 2;
    IntPoly out = IntPoly::constant(p[d]);
    IntPoly r_prev = IntPoly::constant(2);
    IntPoly r_cur = IntPoly::monomial(1, 1);
    const IntPoly x = r_cur;
    for (std::size_t j = 1; j <= d; ++j) {
        out = out + IntPoly::constant(p[d + j]) * r_cur;
        IntPoly next = x * r_cur - r_prev;
        r_prev = std::move(r_cur);
        r_cur = std::move(next);
    }
    return out;
}

IntPoly minimal_poly_C(i64 n) {
    require(n >= 1, "minimal_poly_C: n must be positive");
    if (n == 1) return IntPoly{{2, 1}};   // 2 cos(pi) = -2
    return fold_palindromic(cyclotomic(2 * n));
}

IntPoly mpr2(i64 n) {
    require(n >= 1, "mpr2: n must be positive");
    if (n == 1) return IntPoly{{-2, 1}};  // 2 cos(2 pi) = 2
    if (n == 2) return IntPoly{{2, 1}};
    return fold_palindromic(cyclotomic(n));
}

bool RhoElement::is_constant() const {
    for (std::size_t i = 1; i < coeff.size(); ++i) {
        if (coeff[i] != 0) return false;
    }
    return true;
}

RhoRing::RhoRing(i64 n) : n_(n), modulus_(minimal_poly_C(n)) {
    degree_ = modulus_.degree();
}

void RhoRing::check(const RhoElement& u) const {
    if (u.n != n_ || static_cast<i64>(u.coeff.size()) != degree_) {
        throw std::invalid_argument("RhoRing: element belongs to a different ring");
    }
}

RhoElement RhoRing::from_int(const BigInt& c) const {
    RhoElement e{n_, std::vector<BigInt>(degree_, BigInt{0})};
    e.coeff[0] = c;
    return e;
}

RhoElement RhoRing::rho() const {
    return reduce(IntPoly::monomial(1, 1));
}

RhoElement RhoRing::reduce(const IntPoly& p) const {
    std::vector<BigInt> acc(std::max<std::size_t>(p.coeffs().size(),
                                                  static_cast<std::size_t>(degree_)),
                            BigInt{0});
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) acc[i] = p.coeffs()[i];
    for (std::size_t i = acc.size(); i-- > static_cast<std::size_t>(degree_);) {
        if (acc[i] == 0) continue;
        for (i64 j = 0; j < degree_; ++j) {
            mpz_submul(acc[i - degree_ + j].get_mpz_t(), acc[i].get_mpz_t(),
                       modulus_[j].get_mpz_t());
        }
        acc[i] = 0;
    }
    acc.resize(degree_);
    return RhoElement{n_, std::move(acc)};
}

RhoElement RhoRing::add(const RhoElement& u, const RhoElement& v) const {
    check(u);
    check(v);
    RhoElement out = u;
    for (i64 i = 0; i < degree_; ++i) out.coeff[i] += v.coeff[i];
    return out;
}

RhoElement RhoRing::sub(const RhoElement& u, const RhoElement& v) const {
    check(u);
    check(v);
    RhoElement out = u;
    for (i64 i = 0; i < degree_; ++i) out.coeff[i] -= v.coeff[i];
    return out;
}

RhoElement RhoRing::neg(const RhoElement& u) const {
    check(u);
    RhoElement out = u;
    for (i64 i = 0; i < degree_; ++i) out.coeff[i] = -out.coeff[i];
    return out;
}

RhoElement RhoRing::mul(const RhoElement& u, const RhoElement& v) const {
    check(u);
    check(v);
    std::vector<BigInt> acc(2 * degree_ - 1, BigInt{0});
    for (i64 i = 0; i < degree_; ++i) {
        if (u.coeff[i] == 0) continue;
        for (i64 j = 0; j < degree_; ++j) {
            mpz_addmul(acc[i + j].get_mpz_t(), u.coeff[i].get_mpz_t(),
                       v.coeff[j].get_mpz_t());
        }
    }
    for (std::size_t i = acc.size(); i-- > static_cast<std::size_t>(degree_);) {
        if (acc[i] == 0) continue;
        for (i64 j = 0; j < degree_; ++j) {
            mpz_submul(acc[i - degree_ + j].get_mpz_t(), acc[i].get_mpz_t(),
                       modulus_[j].get_mpz_t());
        }
        acc[i] = 0;
    }
    acc.resize(degree_);
    return RhoElement{n_, std::move(acc)};
}

RhoElement RhoRing::chebyshev_of_rho(i64 m) const {
    require(m >= 0, "chebyshev_of_rho: m must be non-negative");
    RhoElement prev = from_int(2);
    if (m == 0) return prev;
    RhoElement cur = rho();
    const RhoElement r = cur;
    for (i64 i = 2; i <= m; ++i) {
        RhoElement next = sub(mul(r, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RhoElement rho_mul(const RhoElement& u, const RhoElement& v) {
    if (u.n != v.n) throw std::invalid_argument("rho_mul: modulus mismatch");
    return RhoRing(u.n).mul(u, v);
}

namespace {

// R(m, rho) for m = 0..max_m in one recurrence pass.
std::vector<RhoElement> chebyshev_table(const RhoRing& ring, i64 max_m) {
    std::vector<RhoElement> table;
    table.reserve(max_m + 1);
    table.push_back(ring.from_int(2));
    if (max_m >= 1) table.push_back(ring.rho());
    const RhoElement r = ring.rho();
    for (i64 m = 2; m <= max_m; ++m) {
        table.push_back(ring.sub(ring.mul(r, table[m - 1]), table[m - 2]));
    }
    return table;
}

// prod over roots of (x - root), coefficients in the ring.
std::vector<RhoElement> linear_product(const RhoRing& ring,
                                       const std::vector<RhoElement>& roots) {
    std::vector<RhoElement> poly{ring.one()};
    for (const RhoElement& root : roots) {
        std::vector<RhoElement> next(poly.size() + 1, ring.zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = ring.add(next[i + 1], poly[i]);
            next[i] = ring.sub(next[i], ring.mul(root, poly[i]));
        }
        poly = std::move(next);
    }
    return poly;
}

} // namespace

IntPoly mpr2_via_product(i64 n) {
    require(n >= 1, "mpr2_via_product: n must be positive");
    RhoRing ring(n);
    std::vector<i64> reps = rrs_star(n).elements;
    i64 max_m = 0;
    for (i64 r : reps) max_m = std::max(max_m, 2 * r);
    std::vector<RhoElement> table = chebyshev_table(ring, max_m);
    std::vector<RhoElement> roots;
    roots.reserve(reps.size());
    for (i64 r : reps) roots.push_back(table[2 * r]);
    std::vector<RhoElement> poly = linear_product(ring, roots);
    std::vector<BigInt> coeffs;
    coeffs.reserve(poly.size());
    for (const RhoElement& e : poly) {
        if (!e.is_constant()) {
            throw std::logic_error("mpr2_via_product: coefficient not rational");
        }
        coeffs.push_back(e.coeff[0]);
    }
    return IntPoly{std::move(coeffs)};
}

RhoPoly p_star(i64 b) {
    require_odd_modulus(b);
    RhoRing ring(b);
    std::vector<i64> reps = rrs_star(b).elements;
    std::vector<RhoElement> table = chebyshev_table(ring, reps.back());
    std::vector<RhoElement> roots;
    roots.reserve(reps.size());
    for (i64 r : reps) roots.push_back(table[r]);
    return RhoPoly{b, linear_product(ring, roots)};
}

double evaluate_at_cos(const IntPoly& p, i64 num, i64 den) {
    require(den >= 1, "evaluate_at_cos: bad angle");
    double x = 2.0 * std::cos(std::numbers::pi * static_cast<double>(num) /
                              static_cast<double>(den));
    mpq_class exact_x{x};   // doubles are dyadic rationals
    mpq_class value = p.evaluate(exact_x);
    return value.get_d();
}

} // namespace cyclic
