#pragma once

// Generalized Verma modules V+-(lambda) for U_q(sl2): one-generator modules
// with monomial weight bases E^j v+ (sign +, F v+ = 0) and F^j v- (sign -,
// E v- = 0), K acting on the generator by q^m. On top of the action sit the
// coalgebra structure of V+-(0), the morphisms delta_+-, the left/right
// comodule maps and the involution into the opposite-sign module.

#include "hopf.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qdisc {

struct VermaModule {
    int sign;     // +1 or -1
    long long m;  // Cartan parameter: K v = q^m v on the generator
    friend bool operator==(const VermaModule& a, const VermaModule& b) {
        return a.sign == b.sign && a.m == b.m;
    }
    friend bool operator!=(const VermaModule& a, const VermaModule& b) { return !(a == b); }
    /// Weight of the degree-j basis vector: m + 2j (sign +) or m - 2j (sign -).
    long long weight(int j) const { return m + 2LL * sign * j; }
};

class VermaVector {
public:
    VermaVector() : mod_{+1, 0} {}
    explicit VermaVector(VermaModule mod) : mod_(mod) {}

    static VermaVector basis(VermaModule mod, int j, QScalar c = QScalar(1)) {
        VermaVector v(mod);
        v.add(j, std::move(c));
        return v;
    }
    static VermaVector generator(VermaModule mod) { return basis(mod, 0); }

    const VermaModule& module() const { return mod_; }
    const std::map<int, QScalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(int j, const QScalar& c) {
        if (j < 0) throw std::invalid_argument("negative basis index");
        if (c.is_zero()) return;
        auto it = coeffs_.find(j);
        if (it == coeffs_.end()) {
            coeffs_.emplace(j, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    friend VermaVector operator+(const VermaVector& a, const VermaVector& b) {
        a.require_same(b);
        VermaVector r = a;
        for (const auto& [j, c] : b.coeffs_) r.add(j, c);
        return r;
    }
    friend VermaVector operator-(const VermaVector& a, const VermaVector& b) {
        a.require_same(b);
        VermaVector r = a;
        for (const auto& [j, c] : b.coeffs_) r.add(j, -c);
        return r;
    }
    VermaVector operator-() const { return QScalar(-1) * *this; }
    friend VermaVector operator*(const QScalar& s, const VermaVector& v) {
        VermaVector r(v.mod_);
        for (const auto& [j, c] : v.coeffs_) r.add(j, s * c);
        return r;
    }
    friend bool operator==(const VermaVector& a, const VermaVector& b) {
        return a.mod_ == b.mod_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const VermaVector& a, const VermaVector& b) { return !(a == b); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        const char* gen = mod_.sign > 0 ? "E" : "F";
        const char* vac = mod_.sign > 0 ? "v+" : "v-";
        std::ostringstream os;
        bool first = true;
        for (const auto& [j, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (c != QScalar(1)) os << "(" << c.str() << ")*";
            if (j > 0) {
                os << gen;
                if (j > 1) os << "^" << j;
                os << "*";
            }
            os << vac << "(" << mod_.m << ")";
        }
        return os.str();
    }

private:
    void require_same(const VermaVector& o) const {
        if (mod_ != o.mod_) throw std::invalid_argument("mixed Verma modules");
    }
    VermaModule mod_;
    std::map<int, QScalar> coeffs_;
};

namespace detail_verma {

// Lowering eigenvalue: for sign +, F E^j v = phi_j E^{j-1} v with
// phi_j = phi_{j-1} - (q^{m+2(j-1)} - q^{-m-2(j-1)})/(q - q^-1); for sign -,
// E F^j v = psi_j F^{j-1} v with the mirrored recursion. Both follow from
// one application of the E,F commutation rule against the highest/lowest
// weight condition.
inline QScalar lowering_coeff(const VermaModule& mod, int j) {
    QScalar c = (QScalar::q() - QScalar::q_power(-1)).inv();
    QScalar r(0);
    for (int i = 0; i < j; ++i) {
        long long w = mod.m + 2LL * mod.sign * i;
        QScalar cartan = c * (QScalar::q_power(w) - QScalar::q_power(-w));
        r += mod.sign > 0 ? -cartan : cartan;
    }
    return r;
}

}  // namespace detail_verma

/// Action of a single generator letter (qdisc::gens indices).
inline VermaVector act_letter(int letter, const VermaVector& v) {
    const VermaModule mod = v.module();
    VermaVector r(mod);
    for (const auto& [j, c] : v.coeffs()) {
        switch (letter) {
            case gens::K:
                r.add(j, c * QScalar::q_power(mod.weight(j)));
                break;
            case gens::Kinv:
                r.add(j, c * QScalar::q_power(-mod.weight(j)));
                break;
            case gens::E:
                if (mod.sign > 0)
                    r.add(j + 1, c);
                else if (j > 0)
                    r.add(j - 1, c * detail_verma::lowering_coeff(mod, j));
                break;
            case gens::F:
                if (mod.sign < 0)
                    r.add(j + 1, c);
                else if (j > 0)
                    r.add(j - 1, c * detail_verma::lowering_coeff(mod, j));
                break;
            default:
                throw std::invalid_argument("unknown generator letter");
        }
    }
    return r;
}

/// Action of an arbitrary U_q(sl2) element: reduce to the F^a K^b E^c
/// normal form, then apply the normal words letter by letter.
inline VermaVector act(const NCPoly& xi, const VermaVector& v) {
    NCPoly nf = uqsl2().rw.normal_form(xi);
    VermaVector r(v.module());
    for (const auto& [w, c] : nf.terms()) {
        VermaVector t = c * v;
        for (size_t i = w.size(); i-- > 0;) t = act_letter(w[i], t);
        r = r + t;
    }
    return r;
}

/// Element of a tensor product of two Verma modules, carrying the
/// opposite-coproduct module structure.
class VermaTensor {
public:
    VermaTensor(VermaModule left, VermaModule right) : left_(left), right_(right) {}

    const VermaModule& left_module() const { return left_; }
    const VermaModule& right_module() const { return right_; }
    const std::map<std::pair<int, int>, QScalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(int i, int j, const QScalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(i, j);
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    static VermaTensor pure(const VermaVector& a, const VermaVector& b) {
        VermaTensor t(a.module(), b.module());
        for (const auto& [i, ci] : a.coeffs())
            for (const auto& [j, cj] : b.coeffs()) t.add(i, j, ci * cj);
        return t;
    }

    friend VermaTensor operator+(const VermaTensor& a, const VermaTensor& b) {
        VermaTensor r = a;
        for (const auto& [k, c] : b.coeffs_) r.add(k.first, k.second, c);
        return r;
    }
    friend bool operator==(const VermaTensor& a, const VermaTensor& b) {
        return a.left_ == b.left_ && a.right_ == b.right_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const VermaTensor& a, const VermaTensor& b) { return !(a == b); }

private:
    VermaModule left_, right_;
    std::map<std::pair<int, int>, QScalar> coeffs_;
};

/// Action of xi on a tensor through the OPPOSITE comultiplication
/// Delta^op = sigma Delta sigma (the tensor-module convention used for the
/// coalgebra structure on V+-(0) and the comodule maps).
inline VermaTensor tensor_act_op(const NCPoly& xi, const VermaTensor& t) {
    const auto& pres = uqsl2();
    NCPoly nf = pres.rw.normal_form(xi);
    VermaTensor r(t.left_module(), t.right_module());
    for (const auto& [w, c] : nf.terms()) {
        // Apply letters right to left; each letter acts by sigma(Delta(letter)).
        VermaTensor work = t;
        for (size_t i = w.size(); i-- > 0;) {
            VermaTensor next(t.left_module(), t.right_module());
            for (const auto& [a, b] : pres.coproduct_on_gens.at(w[i])) {
                // sigma swaps the legs: b acts on the left slot, a on the right.
                for (const auto& [key, kc] : work.coeffs()) {
                    VermaVector l =
                        act(b, VermaVector::basis(t.left_module(), key.first, QScalar(1)));
                    VermaVector rr =
                        act(a, VermaVector::basis(t.right_module(), key.second, QScalar(1)));
                    VermaTensor p = VermaTensor::pure(l, rr);
                    for (const auto& [pk, pc] : p.coeffs()) next.add(pk.first, pk.second, kc * pc);
                }
            }
            work = next;
        }
        for (const auto& [key, kc] : work.coeffs()) r.add(key.first, key.second, c * kc);
    }
    return r;
}

/// The comultiplication of V+-(0): the unique module morphism (for the
/// opposite-coproduct tensor structure) sending the generator to
/// v+-(0) (x) v+-(0).
inline VermaTensor coproduct_v0(const VermaVector& v) {
    const VermaModule mod = v.module();
    if (mod.m != 0) throw std::invalid_argument("coproduct_v0 requires V+-(0)");
    const int raise = mod.sign > 0 ? gens::E : gens::F;
    VermaTensor r(mod, mod);
    VermaTensor gen2 = VermaTensor::pure(VermaVector::generator(mod), VermaVector::generator(mod));
    for (const auto& [j, c] : v.coeffs()) {
        NCPoly word = NCPoly::monomial(Word(static_cast<size_t>(j), raise), QScalar(1));
        VermaTensor t = tensor_act_op(word, gen2);
        for (const auto& [key, kc] : t.coeffs()) r.add(key.first, key.second, c * kc);
    }
    return r;
}

/// Counit of V+-(0): coefficient of the generator.
inline QScalar counit_v0(const VermaVector& v) {
    if (v.module().m != 0) throw std::invalid_argument("counit_v0 requires V+-(0)");
    auto it = v.coeffs().find(0);
    return it == v.coeffs().end() ? QScalar(0) : it->second;
}

/// delta_+: V+(lambda_+) -> V+(0), v+(lambda_+) |-> E v+(0) (module
/// morphism; on the monomial basis an index shift).
inline VermaVector delta_plus(const VermaVector& v) {
    if (v.module() != VermaModule{+1, 2})
        throw std::invalid_argument("delta_plus requires V+(lambda_+)");
    VermaVector r(VermaModule{+1, 0});
    for (const auto& [j, c] : v.coeffs()) r.add(j + 1, c);
    return r;
}

/// delta_-: V-(lambda_-) -> V-(0), v-(lambda_-) |-> F v-(0).
inline VermaVector delta_minus(const VermaVector& v) {
    if (v.module() != VermaModule{-1, -2})
        throw std::invalid_argument("delta_minus requires V-(lambda_-)");
    VermaVector r(VermaModule{-1, 0});
    for (const auto& [j, c] : v.coeffs()) r.add(j + 1, c);
    return r;
}

namespace detail_verma {

inline VermaTensor comodule(const VermaVector& v, bool left) {
    const VermaModule mod = v.module();
    if (mod.sign != -1) throw std::invalid_argument("comodule maps live on V-(mu)");
    const VermaModule zero{-1, 0};
    VermaModule lm = left ? zero : mod, rm = left ? mod : zero;
    VermaTensor gen2 =
        VermaTensor::pure(VermaVector::generator(lm), VermaVector::generator(rm));
    VermaTensor r(lm, rm);
    for (const auto& [j, c] : v.coeffs()) {
        NCPoly word = NCPoly::monomial(Word(static_cast<size_t>(j), gens::F), QScalar(1));
        VermaTensor t = tensor_act_op(word, gen2);
        for (const auto& [key, kc] : t.coeffs()) r.add(key.first, key.second, c * kc);
    }
    return r;
}

}  // namespace detail_verma

/// Delta_L: V-(mu) -> V-(0) (x) V-(mu), generator to generator (x) generator.
inline VermaTensor comodule_left(const VermaVector& v) {
    return detail_verma::comodule(v, true);
}

/// Delta_R: V-(mu) -> V-(mu) (x) V-(0).
inline VermaTensor comodule_right(const VermaVector& v) {
    return detail_verma::comodule(v, false);
}

/// The involution V+-(lambda) -> V-+(-lambda): (xi v)* = (S^-1(xi))* v*,
/// generators mapped to generators. Antilinear; over Q(q) with real q the
/// coefficient conjugation is the identity.
inline VermaVector involution_v(const VermaVector& v) {
    const auto& pres = uqsl2();
    const VermaModule mod = v.module();
    const VermaModule opp{-mod.sign, -mod.m};
    const int raise = mod.sign > 0 ? gens::E : gens::F;
    VermaVector r(opp);
    for (const auto& [j, c] : v.coeffs()) {
        NCPoly word = NCPoly::monomial(Word(static_cast<size_t>(j), raise), QScalar(1));
        NCPoly theta = star(pres, antipode_inverse(pres, word));
        r = r + c * act(theta, VermaVector::generator(opp));
    }
    return r;
}

}  // namespace qdisc
