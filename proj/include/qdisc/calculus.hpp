#pragma once

// The q-differential calculus over the quantum disc: the graded algebra
// with normal monomials z^a z*^b (dz)^eps (dz*)^delta, the differentials
// partial, dbar, d with graded Leibniz rule, first-order-calculus span
// verification, and the per-mu Dolbeault bimodules with generator m and
// differential dbar_mu.

#include "covalg.hpp"

#include <array>

namespace qdisc {

namespace forms {
inline constexpr int z = 0, zs = 1, dz = 2, dzs = 3;
}

/// The full form algebra: relations z* z = q^2 z z* + (1-q^2),
/// dz z = q^2 z dz, dz* z* = q^-2 z* dz*, dz z* = q^-2 z* dz,
/// dz* z = q^2 z dz*, dz^2 = dz*^2 = 0, dz* dz = -q^2 dz dz*.
inline const RewriteSystem& forms_system() {
    static const RewriteSystem rw = [] {
        Alphabet alpha({
            {"z", 1, 2, 0},
            {"z*", -1, -2, 0},
            {"dz", 1, 2, 1},
            {"dz*", -1, -2, 1},
        });
        RewriteSystem sys(alpha);
        using namespace forms;
        const QScalar q2 = QScalar::q_power(2), qm2 = QScalar::q_power(-2);
        auto mono = [](std::initializer_list<int> w, QScalar c) {
            return NCPoly::monomial(Word(w), std::move(c));
        };
        sys.add_rule(Word{zs, z},
                     mono({z, zs}, q2) + NCPoly::monomial({}, QScalar(1) - q2));
        sys.add_rule(Word{dz, z}, mono({z, dz}, q2));
        sys.add_rule(Word{dzs, zs}, mono({zs, dzs}, qm2));
        sys.add_rule(Word{dz, zs}, mono({zs, dz}, qm2));
        sys.add_rule(Word{dzs, z}, mono({z, dzs}, q2));
        sys.add_rule(Word{dz, dz}, NCPoly::zero());
        sys.add_rule(Word{dzs, dzs}, NCPoly::zero());
        sys.add_rule(Word{dzs, dz}, mono({dz, dzs}, -q2));
        return sys;
    }();
    return rw;
}

/// Normal monomial z^a z*^b (dz)^eps (dz*)^delta.
inline NCPoly form_monomial(int a, int b, int eps, int delta, QScalar c = QScalar(1)) {
    Word w;
    w.insert(w.end(), static_cast<size_t>(a), forms::z);
    w.insert(w.end(), static_cast<size_t>(b), forms::zs);
    if (eps) w.push_back(forms::dz);
    if (delta) w.push_back(forms::dzs);
    return NCPoly::monomial(std::move(w), std::move(c));
}

inline NCPoly form_product(const NCPoly& x, const NCPoly& y) {
    return forms_system().normal_form(x * y);
}

namespace detail_calc {

/// Graded Leibniz extension of a letter-level differential:
/// D(l_1...l_n) = sum_i (-1)^{parity(l_1..l_{i-1})} l_1..l_{i-1} D(l_i) l_{i+1}..l_n.
inline NCPoly leibniz(const RewriteSystem& rw, const std::map<int, NCPoly>& on_letters,
                      const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms()) {
        int sign_parity = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            auto it = on_letters.find(w[i]);
            if (it != on_letters.end() && !it->second.is_zero()) {
                Word prefix(w.begin(), w.begin() + static_cast<long>(i));
                Word suffix(w.begin() + static_cast<long>(i) + 1, w.end());
                QScalar s = (sign_parity % 2) ? -c : c;
                r += s * (NCPoly::monomial(prefix, QScalar(1)) * it->second *
                          NCPoly::monomial(suffix, QScalar(1)));
            }
            sign_parity += rw.alphabet()[w[i]].parity;
        }
    }
    return rw.normal_form(r);
}

}  // namespace detail_calc

/// The holomorphic differential: z -> dz, everything else -> 0.
inline NCPoly partial(const NCPoly& x) {
    static const std::map<int, NCPoly> table = {{forms::z, NCPoly::letter(forms::dz)}};
    return detail_calc::leibniz(forms_system(), table, x);
}

/// The antiholomorphic differential: z* -> dz*.
inline NCPoly dbar(const NCPoly& x) {
    static const std::map<int, NCPoly> table = {{forms::zs, NCPoly::letter(forms::dzs)}};
    return detail_calc::leibniz(forms_system(), table, x);
}

/// d = partial + dbar.
inline NCPoly dtot(const NCPoly& x) { return partial(x) + dbar(x); }

/// The U_q(sl2) action on the form algebra by generator tables (indices of
/// qdisc::gens); extended as a module-algebra action through Delta.
inline NCPoly uq_action_forms(const NCPoly& xi, const NCPoly& x);

namespace detail_calc {

// table[form letter][u letter] = action of the U-generator on that letter.
using ActionTable = std::map<int, std::array<NCPoly, 4>>;

inline const ActionTable& forms_action_table() {
    using namespace forms;
    static const ActionTable table = [] {
        ActionTable t;
        const QScalar h = QScalar::half_power(1);     // q^{1/2}
        const QScalar q2 = QScalar::q_power(2), qm2 = QScalar::q_power(-2);
        auto mono = [](std::initializer_list<int> w, QScalar c) {
            return NCPoly::monomial(Word(w), std::move(c));
        };
        // z: K z = q^2 z, F z = q^{1/2}, E z = -q^{1/2} z^2.
        t[z][gens::K] = mono({z}, q2);
        t[z][gens::Kinv] = mono({z}, qm2);
        t[z][gens::F] = NCPoly::monomial({}, h);
        t[z][gens::E] = mono({z, z}, -h);
        // z*: K z* = q^-2 z*, E z* = q^{-3/2}, F z* = -q^{5/2} z*^2.
        t[zs][gens::K] = mono({zs}, qm2);
        t[zs][gens::Kinv] = mono({zs}, q2);
        t[zs][gens::E] = NCPoly::monomial({}, QScalar::half_power(-3));
        t[zs][gens::F] = mono({zs, zs}, -QScalar::half_power(5));
        // dz: K dz = q^2 dz, F dz = 0, E dz = -q^{1/2}(1+q^2) z dz.
        t[dz][gens::K] = mono({dz}, q2);
        t[dz][gens::Kinv] = mono({dz}, qm2);
        t[dz][gens::F] = NCPoly::zero();
        t[dz][gens::E] = mono({z, dz}, -h * (QScalar(1) + q2));
        // dz*: K dz* = q^-2 dz*, E dz* = 0, F dz* = -q^{5/2}(1+q^-2) z* dz*.
        t[dzs][gens::K] = mono({dzs}, qm2);
        t[dzs][gens::Kinv] = mono({dzs}, q2);
        t[dzs][gens::E] = NCPoly::zero();
        t[dzs][gens::F] = mono({zs, dzs}, -QScalar::half_power(5) * (QScalar(1) + qm2));
        return t;
    }();
    return table;
}

NCPoly act_u_word(const RewriteSystem& rw, const ActionTable& table, const Word& u,
                  const NCPoly& x);

/// Action of one U-generator letter g, recursive over the leading letter:
/// g(l w) = sum over Delta(g) legs (a l)(b w).
inline NCPoly act_u_gen(const RewriteSystem& rw, const ActionTable& table, int g,
                        const NCPoly& x) {
    const auto& pres = uqsl2();
    NCPoly r;
    for (const auto& [w, c] : x.terms()) {
        if (w.empty()) {
            r += c * NCPoly::monomial({}, pres.counit_on_gens.at(g));
            continue;
        }
        int l = w[0];
        NCPoly rest = NCPoly::monomial(Word(w.begin() + 1, w.end()), c);
        for (const auto& [a, b] : pres.coproduct_on_gens.at(g)) {
            // Both legs of the sl2 coproducts are single U-monomials.
            NCPoly head = act_u_word(rw, table, a.terms().begin()->first,
                                     NCPoly::letter(l));
            head = a.terms().begin()->second * head;
            NCPoly tail = act_u_word(rw, table, b.terms().begin()->first, rest);
            tail = b.terms().begin()->second * tail;
            r += head * tail;
        }
    }
    return rw.normal_form(r);
}

inline NCPoly act_u_word(const RewriteSystem& rw, const ActionTable& table, const Word& u,
                         const NCPoly& x) {
    NCPoly cur = x;
    for (size_t i = u.size(); i-- > 0;) {
        // Single letters on single letters come straight from the table.
        NCPoly next;
        for (const auto& [w, c] : cur.terms()) {
            if (w.size() == 1) {
                auto it = table.find(w[0]);
                next += c * it->second[static_cast<size_t>(u[i])];
            } else {
                next += act_u_gen(rw, table, u[i], NCPoly::monomial(w, c));
            }
        }
        cur = rw.normal_form(next);
    }
    return cur;
}

inline NCPoly act_u(const RewriteSystem& rw, const ActionTable& table, const NCPoly& xi,
                    const NCPoly& x) {
    NCPoly nf = uqsl2().rw.normal_form(xi);
    NCPoly r;
    for (const auto& [w, c] : nf.terms()) r += c * act_u_word(rw, table, w, x);
    return rw.normal_form(r);
}

}  // namespace detail_calc

inline NCPoly uq_action_forms(const NCPoly& xi, const NCPoly& x) {
    return detail_calc::act_u(forms_system(), detail_calc::forms_action_table(), xi, x);
}

enum class Calculus {
    lambda_holomorphic,      // C[z] with dz
    lambda_antiholomorphic,  // C[z*] with dz*
    omega10,                 // Pol with dz
    omega01,                 // Pol with dz*
    omega1,                  // Pol with dz and dz*
};

namespace detail_calc {

/// Incremental row basis over form words for exact span checks.
struct SpanBasis {
    const RewriteSystem& rw;
    std::map<Word, NCPoly, std::function<bool(const Word&, const Word&)>> rows;

    explicit SpanBasis(const RewriteSystem& r)
        : rw(r), rows([&r](const Word& a, const Word& b) { return r.word_less(a, b); }) {}

    Word pivot(const NCPoly& p) const {
        Word best;
        bool have = false;
        for (const auto& [w, c] : p.terms())
            if (!have || rw.word_less(best, w)) {
                best = w;
                have = true;
            }
        return best;
    }

    // Reduces p by the stored rows; returns the remainder.
    NCPoly reduce(NCPoly p) const {
        while (!p.is_zero()) {
            Word pv = pivot(p);
            auto it = rows.find(pv);
            if (it == rows.end()) break;
            QScalar c = p.terms().at(pv);
            p = p - c * it->second;
        }
        return p;
    }

    void insert(NCPoly p) {
        p = reduce(std::move(p));
        if (p.is_zero()) return;
        Word pv = pivot(p);
        QScalar lead = p.terms().at(pv);
        rows.emplace(pv, lead.inv() * p);
    }

    bool contains(const NCPoly& p) const { return reduce(p).is_zero(); }
};

}  // namespace detail_calc

/// Checks the first-order-calculus property A dA A = M on every graded
/// component up to degree_bound: the span of products f dg h with monomial
/// f, g, h from the coordinate algebra must contain every normal one-form
/// monomial of the calculus, including through the one-sided spans A dA
/// and dA A.
inline Report verify_first_order(Calculus calc, int degree_bound) {
    Report rep;
    const RewriteSystem& rw = forms_system();
    const bool holo_only = calc == Calculus::lambda_holomorphic;
    const bool anti_only = calc == Calculus::lambda_antiholomorphic;
    std::function<NCPoly(const NCPoly&)> diff;
    switch (calc) {
        case Calculus::lambda_holomorphic:
        case Calculus::omega10:
            diff = [](const NCPoly& p) { return partial(p); };
            break;
        case Calculus::lambda_antiholomorphic:
        case Calculus::omega01:
            diff = [](const NCPoly& p) { return dbar(p); };
            break;
        case Calculus::omega1:
            diff = [](const NCPoly& p) { return dtot(p); };
            break;
    }

    // Coordinate-algebra monomials of total letter count <= degree_bound.
    std::vector<NCPoly> algebra;
    for (int a = 0; a <= degree_bound; ++a)
        for (int b = 0; a + b <= degree_bound; ++b) {
            if (holo_only && b > 0) continue;
            if (anti_only && a > 0) continue;
            algebra.push_back(form_monomial(a, b, 0, 0));
        }

    // Target one-form monomials of the calculus.
    std::vector<NCPoly> targets;
    for (int a = 0; a <= degree_bound; ++a)
        for (int b = 0; a + b + 1 <= degree_bound; ++b) {
            if (holo_only && b > 0) continue;
            if (anti_only && a > 0) continue;
            bool want_dz = calc == Calculus::lambda_holomorphic || calc == Calculus::omega10 ||
                           calc == Calculus::omega1;
            bool want_dzs = calc == Calculus::lambda_antiholomorphic ||
                            calc == Calculus::omega01 || calc == Calculus::omega1;
            if (want_dz) targets.push_back(form_monomial(a, b, 1, 0));
            if (want_dzs) targets.push_back(form_monomial(a, b, 0, 1));
        }

    auto letters = [](const NCPoly& p) {
        return p.is_zero() ? 0 : static_cast<int>(p.terms().begin()->first.size());
    };
    auto check_span = [&](const char* label, bool left, bool right) {
        detail_calc::SpanBasis span(rw);
        for (const NCPoly& g : algebra) {
            NCPoly dg = diff(g);
            if (dg.is_zero()) continue;
            for (const NCPoly& f : algebra) {
                if (!left && f != NCPoly::one()) continue;
                for (const NCPoly& h : algebra) {
                    if (!right && h != NCPoly::one()) continue;
                    if (letters(f) + letters(g) + letters(h) > degree_bound) continue;
                    span.insert(form_product(form_product(f, dg), h));
                }
            }
        }
        for (const NCPoly& t : targets)
            if (!span.contains(t)) rep.fail(label, rw.render(t));
    };
    check_span("A dA A spans", true, true);
    check_span("A dA spans", true, false);
    check_span("dA A spans", false, true);
    return rep;
}

namespace dolb {
inline constexpr int m = 0, z = 1, zs = 2, dzs = 3;
}

/// The Dolbeault bimodule presentation for weight mu: one generator m with
/// z m = q^-mu m z, z* m = q^mu m z*, dz* m = q^mu m dz*, over the
/// antiholomorphic part of the form algebra.
inline const RewriteSystem& dolbeault_system(int mu) {
    static std::map<int, RewriteSystem> cache;
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    Alphabet alpha({
        {"m", 0, mu, 0},
        {"z", 1, 2, 0},
        {"z*", -1, -2, 0},
        {"dz*", -1, -2, 1},
    });
    RewriteSystem sys(alpha);
    using namespace dolb;
    const QScalar q2 = QScalar::q_power(2);
    auto mono = [](std::initializer_list<int> w, QScalar c) {
        return NCPoly::monomial(Word(w), std::move(c));
    };
    sys.add_rule(Word{z, m}, mono({m, z}, QScalar::q_power(-mu)));
    sys.add_rule(Word{zs, m}, mono({m, zs}, QScalar::q_power(mu)));
    sys.add_rule(Word{dzs, m}, mono({m, dzs}, QScalar::q_power(mu)));
    sys.add_rule(Word{zs, z}, mono({z, zs}, q2) + NCPoly::monomial({}, QScalar(1) - q2));
    sys.add_rule(Word{dzs, zs}, mono({zs, dzs}, QScalar::q_power(-2)));
    sys.add_rule(Word{dzs, z}, mono({z, dzs}, q2));
    sys.add_rule(Word{dzs, dzs}, NCPoly::zero());
    return cache.emplace(mu, std::move(sys)).first->second;
}

/// The generator m as a normal-form element.
inline NCPoly dolbeault_m() { return NCPoly::letter(dolb::m); }

/// Normal monomial m z^a z*^b (dz*)^delta.
inline NCPoly dolbeault_monomial(int a, int b, int delta, QScalar c = QScalar(1)) {
    Word w{dolb::m};
    w.insert(w.end(), static_cast<size_t>(a), dolb::z);
    w.insert(w.end(), static_cast<size_t>(b), dolb::zs);
    if (delta) w.push_back(dolb::dzs);
    return NCPoly::monomial(std::move(w), std::move(c));
}

enum class BimoduleSide { left, right };

/// Multiplication by a coefficient polynomial (in letters z, z*, dz* of the
/// Dolbeault alphabet) on the chosen side, normal-ordered by (15.2).
inline NCPoly dolbeault_product(int mu, const NCPoly& p, const NCPoly& x, BimoduleSide side) {
    const RewriteSystem& rw = dolbeault_system(mu);
    return rw.normal_form(side == BimoduleSide::left ? p * x : x * p);
}

/// dbar_mu: graded Leibniz with z* -> dz* and m, z, dz* annihilated.
inline NCPoly dbar_mu(int mu, const NCPoly& x) {
    static const std::map<int, NCPoly> table = {{dolb::zs, NCPoly::letter(dolb::dzs)}};
    return detail_calc::leibniz(dolbeault_system(mu), table, x);
}

namespace detail_calc {

inline const ActionTable& dolbeault_action_table(int mu) {
    static std::map<int, ActionTable> cache;
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    using namespace dolb;
    ActionTable t;
    const QScalar h = QScalar::half_power(1);
    const QScalar q2 = QScalar::q_power(2), qm2 = QScalar::q_power(-2);
    auto mono = [](std::initializer_list<int> w, QScalar c) {
        return NCPoly::monomial(Word(w), std::move(c));
    };
    // m: K m = q^mu m, F m = 0, E m = -q^{1/2}(1-q^{2 mu})/(1-q^2) z m.
    t[m][gens::K] = mono({dolb::m}, QScalar::q_power(mu));
    t[m][gens::Kinv] = mono({dolb::m}, QScalar::q_power(-mu));
    t[m][gens::F] = NCPoly::zero();
    t[m][gens::E] = dolbeault_system(mu).normal_form(
        mono({z, dolb::m}, -h * (QScalar(1) - QScalar::q_power(2LL * mu)) /
                               (QScalar(1) - q2)));
    t[z][gens::K] = mono({z}, q2);
    t[z][gens::Kinv] = mono({z}, qm2);
    t[z][gens::F] = NCPoly::monomial({}, h);
    t[z][gens::E] = mono({z, z}, -h);
    t[zs][gens::K] = mono({zs}, qm2);
    t[zs][gens::Kinv] = mono({zs}, q2);
    t[zs][gens::E] = NCPoly::monomial({}, QScalar::half_power(-3));
    t[zs][gens::F] = mono({zs, zs}, -QScalar::half_power(5));
    t[dzs][gens::K] = mono({dzs}, qm2);
    t[dzs][gens::Kinv] = mono({dzs}, q2);
    t[dzs][gens::E] = NCPoly::zero();
    t[dzs][gens::F] = mono({zs, dzs}, -QScalar::half_power(5) * (QScalar(1) + qm2));
    return cache.emplace(mu, std::move(t)).first->second;
}

}  // namespace detail_calc

/// The U_q(sl2) action on the Dolbeault bimodule M_mu.
inline NCPoly uq_action_dolbeault(int mu, const NCPoly& xi, const NCPoly& x) {
    return detail_calc::act_u(dolbeault_system(mu), detail_calc::dolbeault_action_table(mu), xi,
                              x);
}

}  // namespace qdisc
