#pragma once

// The covariant algebras dual to the Verma coalgebras: the holomorphic
// polynomial algebra with basis a+^j (graded dual of V-(0)) and the
// antiholomorphic one with basis a-^j (graded dual of V+(0)), the
// antipode-twisted pairing and dual U_q(sl2)-action, the R-matrix flip that
// assembles the quantum-disc polynomial algebra Pol, its involution and
// covariant action, and an exact verifier/solver for invariant integrals.

#include "verma.hpp"

#include <stdexcept>
#include <vector>

namespace qdisc {

enum class Side {
    holomorphic,      // dual of V-(0), basis a+^j
    antiholomorphic,  // dual of V+(0), basis a-^j
};

struct DualFunctional {
    Side side;
    std::map<int, QScalar> coeffs;

    static DualFunctional basis(Side s, int j, QScalar c = QScalar(1)) {
        DualFunctional f{s, {}};
        f.add(j, c);
        return f;
    }
    static DualFunctional unit(Side s) { return basis(s, 0); }

    bool is_zero() const { return coeffs.empty(); }
    void add(int j, const QScalar& c) {
        if (c.is_zero()) return;
        auto it = coeffs.find(j);
        if (it == coeffs.end()) {
            coeffs.emplace(j, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    friend DualFunctional operator+(const DualFunctional& a, const DualFunctional& b) {
        if (a.side != b.side) throw std::invalid_argument("mixed dual sides");
        DualFunctional r = a;
        for (const auto& [j, c] : b.coeffs) r.add(j, c);
        return r;
    }
    friend DualFunctional operator*(const QScalar& s, const DualFunctional& f) {
        DualFunctional r{f.side, {}};
        for (const auto& [j, c] : f.coeffs) r.add(j, s * c);
        return r;
    }
    friend bool operator==(const DualFunctional& a, const DualFunctional& b) {
        return a.side == b.side && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const DualFunctional& a, const DualFunctional& b) { return !(a == b); }
};

namespace detail_cov {

/// The Verma module a side is dual to.
inline VermaModule paired_module(Side s) {
    return s == Side::antiholomorphic ? VermaModule{+1, 0} : VermaModule{-1, 0};
}

/// Coefficient of basis_{i} (x) basis_{j} in the coproduct of basis_n.
inline QScalar coproduct_coeff(const VermaModule& mod, int n, int i, int j) {
    VermaTensor d = coproduct_v0(VermaVector::basis(mod, n));
    auto it = d.coeffs().find({i, j});
    return it == d.coeffs().end() ? QScalar(0) : it->second;
}

/// t_j = <a^j, basis_j>: the diagonal pairing values. The generator a is
/// normalized by <a, S(X) v(0)> = 1 (X = E for a-, F for a+), and powers
/// are the dual products, so t_n = c * t_{n-1} * t_1 with c the coefficient
/// of basis_{n-1} (x) basis_1 in the coproduct of basis_n.
inline const QScalar& pairing_diagonal(Side s, int j) {
    static std::map<Side, std::vector<QScalar>> cache;
    auto& t = cache[s];
    if (t.empty()) {
        t.push_back(QScalar(1));
        const VermaModule mod = paired_module(s);
        // <a, basis_1> from S(X) v(0) = c1 * basis_1: a(basis_1) = 1/c1.
        const int raise = mod.sign > 0 ? gens::E : gens::F;
        VermaVector sv = act(antipode(uqsl2(), NCPoly::letter(raise)),
                             VermaVector::generator(mod));
        t.push_back(sv.coeffs().at(1).inv());
    }
    const VermaModule mod = paired_module(s);
    while (static_cast<int>(t.size()) <= j) {
        int n = static_cast<int>(t.size());
        t.push_back(coproduct_coeff(mod, n, n - 1, 1) * t[static_cast<size_t>(n - 1)] * t[1]);
    }
    return t[static_cast<size_t>(j)];
}

}  // namespace detail_cov

/// The pairing <f, v>; diagonal in the power/monomial bases.
inline QScalar pair(const DualFunctional& f, const VermaVector& v) {
    if (v.module() != detail_cov::paired_module(f.side))
        throw std::invalid_argument("functional and vector sides do not match");
    QScalar r(0);
    for (const auto& [j, c] : f.coeffs) {
        auto it = v.coeffs().find(j);
        if (it != v.coeffs().end()) r += c * it->second * detail_cov::pairing_diagonal(f.side, j);
    }
    return r;
}

/// The dual action (xi f)(v) = f(S(xi) v), computed through the pairing.
inline DualFunctional dual_action(const NCPoly& xi, const DualFunctional& f) {
    const VermaModule mod = detail_cov::paired_module(f.side);
    NCPoly nf = uqsl2().rw.normal_form(xi);
    int reach = 0;
    for (const auto& [w, c] : nf.terms())
        reach = std::max(reach, static_cast<int>(w.size()));
    int jmax = f.coeffs.empty() ? -1 : f.coeffs.rbegin()->first;
    NCPoly s_xi = antipode(uqsl2(), xi);
    DualFunctional r{f.side, {}};
    for (int j = 0; j <= jmax + reach; ++j) {
        QScalar val = pair(f, act(s_xi, VermaVector::basis(mod, j)));
        r.add(j, val / detail_cov::pairing_diagonal(f.side, j));
    }
    return r;
}

/// Product of two functionals on the same side: (fg)(v) = (f (x) g)(Delta v).
inline DualFunctional dual_product(const DualFunctional& f, const DualFunctional& g) {
    if (f.side != g.side) throw std::invalid_argument("mixed dual sides");
    const VermaModule mod = detail_cov::paired_module(f.side);
    DualFunctional r{f.side, {}};
    for (const auto& [m, cm] : f.coeffs)
        for (const auto& [n, cn] : g.coeffs) {
            QScalar c = detail_cov::coproduct_coeff(mod, m + n, m, n) *
                        detail_cov::pairing_diagonal(f.side, m) *
                        detail_cov::pairing_diagonal(f.side, n) /
                        detail_cov::pairing_diagonal(f.side, m + n);
            r.add(m + n, cm * cn * c);
        }
    return r;
}

/// Element of Pol: normal-ordered sum of a+^i a-^j.
struct PolElement {
    std::map<std::pair<int, int>, QScalar> coeffs;

    static PolElement monomial(int i, int j, QScalar c = QScalar(1)) {
        PolElement p;
        p.add(i, j, std::move(c));
        return p;
    }
    static PolElement one() { return monomial(0, 0); }

    bool is_zero() const { return coeffs.empty(); }
    void add(int i, int j, const QScalar& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(i, j);
        auto it = coeffs.find(key);
        if (it == coeffs.end()) {
            coeffs.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    friend PolElement operator+(const PolElement& a, const PolElement& b) {
        PolElement r = a;
        for (const auto& [k, c] : b.coeffs) r.add(k.first, k.second, c);
        return r;
    }
    friend PolElement operator-(const PolElement& a, const PolElement& b) {
        PolElement r = a;
        for (const auto& [k, c] : b.coeffs) r.add(k.first, k.second, -c);
        return r;
    }
    friend PolElement operator*(const QScalar& s, const PolElement& p) {
        PolElement r;
        for (const auto& [k, c] : p.coeffs) r.add(k.first, k.second, s * c);
        return r;
    }
    friend bool operator==(const PolElement& a, const PolElement& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const PolElement& a, const PolElement& b) { return !(a == b); }
};

/// The coordinate sugar z = q^{1/2} a+ and z* = q^{-3/2} a-.
inline PolElement pol_z() { return PolElement::monomial(1, 0, QScalar::half_power(1)); }
inline PolElement pol_zstar() { return PolElement::monomial(0, 1, QScalar::half_power(-3)); }

/// The quantum-disc rewrite presentation of Pol (precedence a+ < a-):
/// a- a+ -> q^2 a+ a- + q(1-q^2).
inline const RewriteSystem& pol_rewrite_system() {
    static const RewriteSystem rw = [] {
        Alphabet alpha({{"a+", 1, 2, 0}, {"a-", -1, -2, 0}});
        RewriteSystem sys(alpha);
        sys.add_rule(Word{1, 0},
                     NCPoly::monomial({0, 1}, QScalar::q_power(2)) +
                         NCPoly::monomial({}, QScalar::q() * (QScalar(1) - QScalar::q_power(2))));
        return sys;
    }();
    return rw;
}

namespace detail_cov {

// Closed dual-action ladders used inside the terminating R-matrix series:
// E a-^n = (q^{-2n}-1)/(q^{-2}-1) a-^{n-1} and F a+^k with the mirrored
// coefficient (both are the q-difference operators of the dual picture).
inline QScalar lower_coeff(int n) {
    return (QScalar::q_power(-2 * n) - QScalar(1)) / (QScalar::q_power(-2) - QScalar(1));
}

}  // namespace detail_cov

/// R-matrix flip: for f antiholomorphic and g holomorphic returns
/// sigma(R (f (x) g)) as a normal-ordered element of Pol. The Cartan factor
/// contributes q^{-wt(f) wt(g)/2} on the original weights, then the
/// terminating series sum_k c_k E^k f (x) F^k g with
/// c_k = (q^-1 - q)^k prod_{j<=k} (1-q^2)/(1-q^{2j}).
inline PolElement rmatrix_flip(const DualFunctional& f, const DualFunctional& g) {
    if (f.side != Side::antiholomorphic || g.side != Side::holomorphic)
        throw std::invalid_argument("rmatrix_flip takes (antiholomorphic, holomorphic)");
    PolElement r;
    for (const auto& [n, cn] : f.coeffs)
        for (const auto& [k, dk] : g.coeffs) {
            // wt(a-^n) = -2n, wt(a+^k) = 2k.
            QScalar cartan = QScalar::half_power(4LL * n * k);
            QScalar series_c(1);
            QScalar e_ladder(1), f_ladder(1);
            for (int m = 0; m <= std::min(n, k); ++m) {
                if (m > 0) {
                    series_c *= (QScalar::q_power(-1) - QScalar::q()) *
                                (QScalar(1) - QScalar::q_power(2)) /
                                (QScalar(1) - QScalar::q_power(2 * m));
                    e_ladder *= detail_cov::lower_coeff(n - m + 1);
                    f_ladder *= detail_cov::lower_coeff(k - m + 1);
                }
                r.add(k - m, n - m, cn * dk * cartan * series_c * e_ladder * f_ladder);
            }
        }
    return r;
}

/// Multiplication in Pol via the R-matrix cross relation: the inner legs
/// a-^j a+^k are flipped by rmatrix_flip, the outer legs multiply within
/// their own (power-basis) algebras.
inline PolElement pol_product(const PolElement& x, const PolElement& y) {
    PolElement r;
    for (const auto& [kx, cx] : x.coeffs)
        for (const auto& [ky, cy] : y.coeffs) {
            PolElement mid =
                rmatrix_flip(DualFunctional::basis(Side::antiholomorphic, kx.second),
                             DualFunctional::basis(Side::holomorphic, ky.first));
            for (const auto& [km, cm] : mid.coeffs)
                r.add(kx.first + km.first, km.second + ky.second, cx * cy * cm);
        }
    return r;
}

/// The involution: (a+)* = q^-2 a-, (a-)* = q^2 a+, antimultiplicative and
/// antilinear (identity conjugation on Q(q), q real).
inline PolElement pol_involution(const PolElement& x) {
    PolElement r;
    for (const auto& [k, c] : x.coeffs) {
        auto [i, j] = k;
        r.add(j, i, c * QScalar::q_power(2LL * (j - i)));
    }
    return r;
}

/// The covariant U_q(sl2)-action on Pol: the tensor-module structure on
/// (holomorphic) (x) (antiholomorphic) through Delta, each leg acting by the
/// dual action.
inline PolElement pol_action(const NCPoly& xi, const PolElement& x) {
    const auto& pres = uqsl2();
    NCPoly nf = pres.rw.normal_form(xi);
    PolElement r;
    for (const auto& [w, c] : nf.terms()) {
        PolElement cur = c * x;
        for (size_t i = w.size(); i-- > 0;) {
            PolElement next;
            for (const auto& [a, b] : pres.coproduct_on_gens.at(w[i])) {
                for (const auto& [k, kc] : cur.coeffs) {
                    DualFunctional h =
                        dual_action(a, DualFunctional::basis(Side::holomorphic, k.first));
                    DualFunctional ah =
                        dual_action(b, DualFunctional::basis(Side::antiholomorphic, k.second));
                    for (const auto& [p, pc] : h.coeffs)
                        for (const auto& [q2, qc] : ah.coeffs)
                            next.add(p, q2, kc * pc * qc);
                }
            }
            cur = next;
        }
        r = r + cur;
    }
    return r;
}

/// Checks nu(xi f) = eps(xi) nu(f) for xi in {E, F, K} on all normal
/// monomials of total degree <= depth. Entries absent from nu are treated
/// as zero.
inline Report verify_invariant_integral(const std::map<std::pair<int, int>, QScalar>& nu,
                                        int depth) {
    Report rep;
    auto nu_of = [&](const PolElement& p) {
        QScalar r(0);
        for (const auto& [k, c] : p.coeffs) {
            auto it = nu.find(k);
            if (it != nu.end()) r += c * it->second;
        }
        return r;
    };
    struct GenCase {
        int letter;
        QScalar eps;
        const char* name;
    };
    const GenCase cases[] = {{gens::E, QScalar(0), "E"},
                             {gens::F, QScalar(0), "F"},
                             {gens::K, QScalar(1), "K"}};
    for (int i = 0; i <= depth; ++i)
        for (int j = 0; i + j <= depth; ++j) {
            PolElement m = PolElement::monomial(i, j);
            for (const auto& gc : cases) {
                QScalar lhs = nu_of(pol_action(NCPoly::letter(gc.letter), m));
                QScalar rhs = gc.eps * nu_of(m);
                if (lhs != rhs)
                    rep.fail(std::string("nu(") + gc.name + " a+^" + std::to_string(i) + " a-^" +
                                 std::to_string(j) + ") != eps " ,
                             (lhs - rhs).str());
            }
        }
    return rep;
}

/// Exact nullspace of an m x n matrix over Q(q) (rows are equations).
inline std::vector<std::vector<QScalar>> nullspace(std::vector<std::vector<QScalar>> a) {
    if (a.empty()) return {};
    const size_t rows = a.size(), cols = a[0].size();
    std::vector<int> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        QScalar inv = a[r][c].inv();
        for (size_t k = 0; k < cols; ++k) a[r][k] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            QScalar f = a[i][c];
            for (size_t k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<QScalar>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<QScalar> v(cols, QScalar(0));
        v[free_c] = QScalar(1);
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[static_cast<size_t>(pivot_col_of_row[i])] = -a[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves the invariance equations nu(xi m) = eps(xi) nu(m) for all normal
/// monomials m with deg <= N whose acted image stays inside the support
/// i+j <= N (equations that escape the truncation are dropped) and returns
/// a basis of the solution space as coefficient maps.
inline std::vector<std::map<std::pair<int, int>, QScalar>> solve_invariant_integral(int N) {
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) idx.emplace_back(i, j);
    auto col = [&](int i, int j) {
        for (size_t c = 0; c < idx.size(); ++c)
            if (idx[c] == std::make_pair(i, j)) return static_cast<int>(c);
        return -1;
    };
    std::vector<std::vector<QScalar>> rows;
    struct GenCase {
        int letter;
        QScalar eps;
    };
    const GenCase cases[] = {{gens::E, QScalar(0)}, {gens::F, QScalar(0)}, {gens::K, QScalar(1)}};
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) {
            for (const auto& gc : cases) {
                std::vector<QScalar> row(idx.size(), QScalar(0));
                PolElement acted = pol_action(NCPoly::letter(gc.letter), PolElement::monomial(i, j));
                bool in_support = true;
                for (const auto& [k, c] : acted.coeffs) {
                    int cc = col(k.first, k.second);
                    if (cc < 0) {
                        in_support = false;
                        break;
                    }
                    row[static_cast<size_t>(cc)] += c;
                }
                if (!in_support) continue;
                row[static_cast<size_t>(col(i, j))] -= gc.eps;
                rows.push_back(std::move(row));
            }
        }
    std::vector<std::map<std::pair<int, int>, QScalar>> out;
    for (const auto& v : nullspace(std::move(rows))) {
        std::map<std::pair<int, int>, QScalar> nu;
        for (size_t c = 0; c < idx.size(); ++c)
            if (!v[c].is_zero()) nu[idx[c]] = v[c];
        out.push_back(std::move(nu));
    }
    return out;
}

}  // namespace qdisc
