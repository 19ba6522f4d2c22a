#pragma once

// Exact arithmetic in the coefficient field Q(q): rational functions in the
// deformation symbol q over the integers. Internally the variable is
// u = q^(1/2), so that half-integer powers of q (which show up when passing
// between the a+/a- and z/z* generator systems) stay in the field.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdisc {

using BigInt = boost::multiprecision::cpp_int;

struct division_by_zero : std::runtime_error {
    division_by_zero() : std::runtime_error("division by zero in Q(q)") {}
};

struct evaluation_pole : std::runtime_error {
    explicit evaluation_pole(double q0)
        : std::runtime_error("pole of rational function at q0 = " + std::to_string(q0)) {}
};

namespace detail {

// Dense polynomial in u with integer coefficients; empty vector is zero,
// otherwise the trailing coefficient is nonzero.
using Poly = std::vector<BigInt>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const Poly& p) { return p.empty(); }

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly poly_const(BigInt c) {
    Poly p;
    if (c != 0) p.push_back(std::move(c));
    return p;
}

inline Poly poly_monomial(BigInt c, int k) {
    Poly p;
    if (c != 0) {
        p.assign(static_cast<size_t>(k) + 1, BigInt(0));
        p.back() = std::move(c);
    }
    return p;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Poly neg(Poly a) {
    for (auto& c : a) c = -c;
    return a;
}

inline Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

inline Poly mul(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline BigInt int_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

inline BigInt content(const Poly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

inline Poly divide_scalar_exact(Poly p, const BigInt& s) {
    for (auto& c : p) c /= s;
    return p;
}

inline Poly primitive_part(const Poly& p) {
    if (is_zero(p)) return p;
    BigInt c = content(p);
    if (p.back() < 0) c = -c;
    return divide_scalar_exact(p, c);
}

// Exact division; requires b | a in Z[u].
inline Poly div_exact(Poly a, const Poly& b) {
    if (is_zero(a)) return {};
    if (is_zero(b)) throw division_by_zero{};
    Poly q(a.size() - b.size() + 1, BigInt(0));
    while (!is_zero(a) && a.size() >= b.size()) {
        BigInt c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

// Pseudo-remainder of a by b (b nonzero).
inline Poly pseudo_rem(Poly a, const Poly& b) {
    const BigInt lc = b.back();
    while (!is_zero(a) && a.size() >= b.size()) {
        const size_t sh = a.size() - b.size();
        const BigInt top = a.back();
        for (auto& c : a) c *= lc;
        for (size_t i = 0; i < b.size(); ++i) a[sh + i] -= top * b[i];
        trim(a);
    }
    return a;
}

// gcd in Z[u], primitive with positive leading coefficient times the
// gcd of the contents (primitive PRS).
inline Poly normalize_sign(Poly p) {
    if (!is_zero(p) && p.back() < 0) p = neg(p);
    return p;
}

inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (is_zero(a)) return normalize_sign(b);
    if (is_zero(b)) return normalize_sign(a);
    BigInt cg = int_gcd(content(a), content(b));
    Poly x = primitive_part(a), y = primitive_part(b);
    if (degree(x) < degree(y)) std::swap(x, y);
    while (!is_zero(y)) {
        Poly r = pseudo_rem(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return mul(poly_const(cg), x);
}

inline double eval(const Poly& p, double u) {
    double r = 0.0;
    for (size_t i = p.size(); i-- > 0;) r = r * u + static_cast<double>(p[i]);
    return r;
}

inline bool equal(const Poly& a, const Poly& b) { return a == b; }

}  // namespace detail

/// An element of Q(q), stored as a reduced fraction of integer polynomials
/// in u = q^(1/2). The denominator has positive leading coefficient and is
/// coprime to the numerator, so equality is representation equality.
class QScalar {
public:
    QScalar() : den_(detail::poly_const(1)) {}
    QScalar(long long n) : num_(detail::poly_const(BigInt(n))), den_(detail::poly_const(1)) {}

    static QScalar from_fraction(detail::Poly num, detail::Poly den) {
        QScalar r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.reduce();
        return r;
    }

    /// The symbol q itself (u^2).
    static QScalar q() { return half_power(2); }

    /// q^(k/2), k any integer.
    static QScalar half_power(long long k) {
        if (k >= 0)
            return from_fraction(detail::poly_monomial(1, static_cast<int>(k)), detail::poly_const(1));
        return from_fraction(detail::poly_const(1), detail::poly_monomial(1, static_cast<int>(-k)));
    }

    /// q^k, k any integer.
    static QScalar q_power(long long k) { return half_power(2 * k); }

    bool is_zero() const { return detail::is_zero(num_); }
    bool is_one() const { return num_ == detail::poly_const(1) && den_ == detail::poly_const(1); }

    friend QScalar operator+(const QScalar& a, const QScalar& b) {
        return from_fraction(
            detail::add(detail::mul(a.num_, b.den_), detail::mul(b.num_, a.den_)),
            detail::mul(a.den_, b.den_));
    }
    friend QScalar operator-(const QScalar& a, const QScalar& b) {
        return from_fraction(
            detail::sub(detail::mul(a.num_, b.den_), detail::mul(b.num_, a.den_)),
            detail::mul(a.den_, b.den_));
    }
    friend QScalar operator*(const QScalar& a, const QScalar& b) {
        return from_fraction(detail::mul(a.num_, b.num_), detail::mul(a.den_, b.den_));
    }
    friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inv(); }

    QScalar operator-() const {
        QScalar r = *this;
        r.num_ = detail::neg(r.num_);
        return r;
    }

    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    QScalar inv() const {
        if (is_zero()) throw division_by_zero{};
        return from_fraction(den_, num_);
    }

    QScalar pow(long long k) const {
        if (k < 0) return inv().pow(-k);
        QScalar r(1), base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    // Canonical total order on stored form, for use as a map key.
    friend bool operator<(const QScalar& a, const QScalar& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    /// prod_{k=1..j} (q^{-2k}-1)/(q^{-2}-1); j = 0 gives 1.
    static QScalar q_product(unsigned j) {
        QScalar r(1);
        const QScalar d = q_power(-2) - QScalar(1);
        for (unsigned k = 1; k <= j; ++k) r *= (q_power(-2 * static_cast<long long>(k)) - QScalar(1)) / d;
        return r;
    }

    /// Numeric evaluation at q = q0; throws evaluation_pole on a zero denominator.
    double eval_at_q(double q0) const {
        const double u = std::sqrt(q0);
        const double dn = detail::eval(den_, u);
        if (dn == 0.0) throw evaluation_pole(q0);
        return detail::eval(num_, u) / dn;
    }

    const detail::Poly& numerator() const { return num_; }
    const detail::Poly& denominator() const { return den_; }

    /// Expanded rendering in the CLI grammar; Laurent form `q^k` when the
    /// denominator is a monomial, `(num)/(den)` otherwise.
    std::string str() const;

private:
    void reduce() {
        if (detail::is_zero(den_)) throw division_by_zero{};
        if (detail::is_zero(num_)) {
            den_ = detail::poly_const(1);
            return;
        }
        detail::Poly g = detail::poly_gcd(num_, den_);
        num_ = detail::div_exact(num_, g);
        den_ = detail::div_exact(den_, g);
        if (den_.back() < 0) {
            num_ = detail::neg(num_);
            den_ = detail::neg(den_);
        }
    }

    detail::Poly num_, den_;
};

namespace detail {

// Renders c * q^(k/2) with k the u-exponent.
inline std::string render_term(const BigInt& c, int uexp, bool first) {
    std::string s;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (c < 0)
        s += first ? "-" : " - ";
    else if (!first)
        s += " + ";
    std::string coeff = a.str();
    if (uexp == 0) {
        s += coeff;
        return s;
    }
    if (a != 1) s += coeff + "*";
    s += "q";
    if (uexp != 2) {
        if (uexp % 2 == 0)
            s += "^" + std::to_string(uexp / 2);
        else
            s += "^(" + std::to_string(uexp) + "/2)";
    }
    return s;
}

// Renders a Laurent polynomial given by coeffs of u^(k+shift).
inline std::string render_laurent(const Poly& p, int shift) {
    std::string s;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        s += render_term(p[i], static_cast<int>(i) + shift, first);
        first = false;
    }
    return first ? "0" : s;
}

inline bool is_monomial(const Poly& p) {
    if (is_zero(p)) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] != 0) return false;
    return true;
}

}  // namespace detail

inline std::string QScalar::str() const {
    if (is_zero()) return "0";
    if (detail::is_monomial(den_)) {
        // Fold the monomial denominator into Laurent exponents.
        int shift = -detail::degree(den_);
        const BigInt& d = den_.back();
        if (d == 1) return detail::render_laurent(num_, shift);
        // Non-unit leading integer; fall through to fraction form.
    }
    std::string n = detail::render_laurent(num_, 0);
    std::string d = detail::render_laurent(den_, 0);
    return "(" + n + ")/(" + d + ")";
}

}  // namespace qdisc
