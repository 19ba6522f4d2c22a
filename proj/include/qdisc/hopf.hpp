#pragma once

// The Hopf *-algebra U_q(sl2): generators K, K^-1, E, F with the standard
// comultiplication, counit, antipode and the su(1,1) involution, presented
// as a confluent rewrite system with normal form F^a K^b E^c. The
// presentation container also carries general Cartan data for the root
// combinatorics; only sl2 ships with verified Hopf structure.

#include "ncpoly.hpp"

#include <functional>
#include <map>
#include <utility>

namespace qdisc {

struct Report {
    struct Failure {
        std::string check;
        std::string witness;
    };
    std::vector<Failure> failures;
    bool pass() const { return failures.empty(); }
    void fail(std::string check, std::string witness) {
        failures.push_back({std::move(check), std::move(witness)});
    }
};

/// Tensor summand a (x) b of a coproduct value.
using TensorSummand = std::pair<NCPoly, NCPoly>;

struct HopfPresentation {
    RewriteSystem rw;
    std::map<int, std::vector<TensorSummand>> coproduct_on_gens;
    std::map<int, QScalar> counit_on_gens;
    std::map<int, NCPoly> antipode_on_gens;
    std::map<int, NCPoly> star_on_gens;

    std::vector<std::vector<int>> cartan_matrix;
    std::vector<int> d;
    int j0 = 0;

    // Relation text for non-sl2 types, carried for documentation only; the
    // verifiers refuse presentations whose Cartan matrix is not [[2]].
    std::vector<std::string> unverified_relations;

    bool is_sl2() const {
        return cartan_matrix.size() == 1 && cartan_matrix[0].size() == 1 &&
               cartan_matrix[0][0] == 2;
    }
};

/// The shipped U_q(sl2) presentation. Letter precedence F < K^-1 < K < E,
/// normal form F^a K^b E^c.
inline const HopfPresentation& uqsl2() {
    static const HopfPresentation pres = [] {
        Alphabet alpha({
            {"F", -1, -2, 0},
            {"K^-1", 0, 0, 0},
            {"K", 0, 0, 0},
            {"E", 1, 2, 0},
        });
        RewriteSystem rw(alpha);
        const int F = 0, Ki = 1, K = 2, E = 3;
        const QScalar q = QScalar::q();
        const QScalar q2 = QScalar::q_power(2), qm2 = QScalar::q_power(-2);
        auto mono = [](std::initializer_list<int> w, QScalar c) {
            return NCPoly::monomial(Word(w), std::move(c));
        };
        rw.add_rule(Word{K, Ki}, NCPoly::one());
        rw.add_rule(Word{Ki, K}, NCPoly::one());
        rw.add_rule(Word{E, K}, mono({K, E}, qm2));
        rw.add_rule(Word{E, Ki}, mono({Ki, E}, q2));
        rw.add_rule(Word{K, F}, mono({F, K}, qm2));
        rw.add_rule(Word{Ki, F}, mono({F, Ki}, q2));
        const QScalar c = (q - QScalar::q_power(-1)).inv();
        rw.add_rule(Word{E, F},
                    mono({F, E}, QScalar(1)) + mono({K}, c) + mono({Ki}, -c));

        HopfPresentation p{std::move(rw), {}, {}, {}, {}, {{2}}, {1}, 0, {}};
        auto one = NCPoly::one();
        auto L = [](int i) { return NCPoly::letter(i); };
        p.coproduct_on_gens[E] = {{L(E), one}, {L(K), L(E)}};
        p.coproduct_on_gens[F] = {{L(F), L(Ki)}, {one, L(F)}};
        p.coproduct_on_gens[K] = {{L(K), L(K)}};
        p.coproduct_on_gens[Ki] = {{L(Ki), L(Ki)}};
        p.counit_on_gens = {{F, QScalar(0)}, {Ki, QScalar(1)}, {K, QScalar(1)}, {E, QScalar(0)}};
        p.antipode_on_gens[E] = mono({Ki, E}, QScalar(-1));
        p.antipode_on_gens[F] = mono({F, K}, QScalar(-1));
        p.antipode_on_gens[K] = L(Ki);
        p.antipode_on_gens[Ki] = L(K);
        p.star_on_gens[E] = mono({K, F}, QScalar(-1));
        p.star_on_gens[F] = mono({E, Ki}, QScalar(-1));
        p.star_on_gens[K] = L(K);
        p.star_on_gens[Ki] = L(Ki);
        return p;
    }();
    return pres;
}

namespace gens {
inline constexpr int F = 0, Kinv = 1, K = 2, E = 3;
}

/// n-fold tensor power of a rewrite system: n commuting (graded-commuting
/// for odd-parity letters) copies, slot-0 letters smallest.
inline RewriteSystem tensor_power(const RewriteSystem& base, int n) {
    const int B = base.alphabet().size();
    std::vector<GeneratorSymbol> letters;
    for (int s = 0; s < n; ++s)
        for (const auto& g : base.alphabet().letters())
            letters.push_back({g.name + "#" + std::to_string(s), g.degree, g.weight, g.parity});
    RewriteSystem rw{Alphabet(std::move(letters))};
    auto shift = [B](const Word& w, int s) {
        Word r;
        for (int i : w) r.push_back(i + s * B);
        return r;
    };
    for (int s = 0; s < n; ++s) {
        for (const auto& rule : base.rules()) {
            NCPoly rhs;
            for (const auto& [w, c] : rule.rhs.terms()) rhs.add_term(shift(w, s), c);
            rw.add_rule(shift(rule.lhs, s), rhs);
        }
    }
    for (int s1 = 1; s1 < n; ++s1)
        for (int s2 = 0; s2 < s1; ++s2)
            for (int a = 0; a < B; ++a)
                for (int b = 0; b < B; ++b) {
                    int pa = base.alphabet()[a].parity, pb = base.alphabet()[b].parity;
                    QScalar sign((pa * pb) % 2 ? -1 : 1);
                    rw.add_rule(Word{s1 * B + a, s2 * B + b},
                                NCPoly::monomial(Word{s2 * B + b, s1 * B + a}, sign));
                }
    return rw;
}

/// Embeds a base-algebra polynomial into slot s of a tensor power.
inline NCPoly embed_slot(const RewriteSystem& base, const NCPoly& p, int s) {
    const int B = base.alphabet().size();
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        Word nw;
        for (int i : w) nw.push_back(i + s * B);
        r.add_term(nw, c);
    }
    return r;
}

inline QScalar counit(const HopfPresentation& pres, const NCPoly& x) {
    QScalar r(0);
    for (const auto& [w, c] : x.terms()) {
        QScalar t = c;
        for (int i : w) t *= pres.counit_on_gens.at(i);
        r += t;
    }
    return r;
}

/// Antimultiplicative extension of a generator table (used for S and *).
inline NCPoly antihom_extend(const std::map<int, NCPoly>& table, const RewriteSystem& rw,
                             const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms()) {
        NCPoly t = NCPoly::monomial({}, c);
        for (size_t i = w.size(); i-- > 0;) t *= table.at(w[i]);
        r += t;
    }
    return rw.normal_form(r);
}

inline NCPoly antipode(const HopfPresentation& pres, const NCPoly& x) {
    return antihom_extend(pres.antipode_on_gens, pres.rw, x);
}

inline NCPoly star(const HopfPresentation& pres, const NCPoly& x) {
    // Antilinear over Q(q): the conjugation is the identity since q is real.
    return antihom_extend(pres.star_on_gens, pres.rw, x);
}

/// S^-1 through the sl2 identity S^2(x) = q^{-wt(x)} x (S^2 is conjugation
/// by K), so S^-1 = S on a weight-w component rescaled by q^w.
inline NCPoly antipode_inverse(const HopfPresentation& pres, const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms()) {
        int wt = pres.rw.weight_of(w);
        r += QScalar::q_power(wt) * antipode(pres, NCPoly::monomial(w, c));
    }
    return pres.rw.normal_form(r);
}

/// Multiplicative coproduct of x, reduced in the tensor square `sq`
/// (which must be tensor_power(pres.rw, 2)).
inline NCPoly coproduct(const HopfPresentation& pres, const RewriteSystem& sq, const NCPoly& x) {
    NCPoly r;
    for (const auto& [w, c] : x.terms()) {
        NCPoly t = NCPoly::monomial({}, c);
        for (int i : w) {
            NCPoly d;
            for (const auto& [a, b] : pres.coproduct_on_gens.at(i))
                d += embed_slot(pres.rw, a, 0) * embed_slot(pres.rw, b, 1);
            t *= d;
        }
        r += t;
    }
    return sq.normal_form(r);
}

namespace detail_hopf {

// Splits a tensor-power word into its per-slot subwords (order preserved;
// exact for parity-0 alphabets).
inline std::vector<Word> split_slots(const RewriteSystem& base, const Word& w, int n) {
    const int B = base.alphabet().size();
    std::vector<Word> slots(static_cast<size_t>(n));
    for (int i : w) slots[static_cast<size_t>(i / B)].push_back(i % B);
    return slots;
}

}  // namespace detail_hopf

/// Applies the coproduct to slot `slot` of an n-slot tensor element,
/// producing an (n+1)-slot element reduced in `bigger`.
inline NCPoly coproduct_in_slot(const HopfPresentation& pres, const RewriteSystem& bigger,
                                const NCPoly& x, int slot, int n) {
    const int B = pres.rw.alphabet().size();
    NCPoly r;
    for (const auto& [w, c] : x.terms()) {
        NCPoly t = NCPoly::monomial({}, c);
        for (int i : w) {
            int s = i / B, g = i % B;
            if (s < slot) {
                t *= NCPoly::letter(s * B + g);
            } else if (s > slot) {
                t *= NCPoly::letter((s + 1) * B + g);
            } else {
                NCPoly d;
                for (const auto& [a, b] : pres.coproduct_on_gens.at(g))
                    d += embed_slot(pres.rw, a, slot) * embed_slot(pres.rw, b, slot + 1);
                t *= d;
            }
        }
        r += t;
    }
    (void)n;
    return bigger.normal_form(r);
}

/// Checks the Hopf axioms (coassociativity, counit, antipode, morphism
/// properties of all structure maps and the involution) on every word of
/// length <= depth. Only the sl2 presentation is accepted.
inline Report verify_hopf_axioms(const HopfPresentation& pres, int depth) {
    Report rep;
    if (!pres.is_sl2()) {
        rep.fail("presentation", "verification is only available for the sl2 presentation");
        return rep;
    }
    const RewriteSystem& rw = pres.rw;
    const RewriteSystem sq = tensor_power(rw, 2);
    const RewriteSystem cube = tensor_power(rw, 3);
    const int B = rw.alphabet().size();

    auto lin = [&](const NCPoly& p, auto&& word_map) {
        NCPoly r;
        for (const auto& [w, c] : p.terms()) r += c * word_map(w);
        return r;
    };

    std::vector<Word> words;
    Word cur;
    std::function<void(int)> gen = [&](int remaining) {
        if (!cur.empty()) words.push_back(cur);
        if (remaining == 0) return;
        for (int g = 0; g < B; ++g) {
            cur.push_back(g);
            gen(remaining - 1);
            cur.pop_back();
        }
    };
    gen(depth);

    for (const Word& w : words) {
        const std::string witness = rw.render_word(w);
        NCPoly x = NCPoly::monomial(w, QScalar(1));
        NCPoly nfx = rw.normal_form(x);

        // Counit is an algebra morphism.
        QScalar eps_direct(1);
        for (int i : w) eps_direct *= pres.counit_on_gens.at(i);
        if (counit(pres, nfx) != eps_direct) rep.fail("counit morphism", witness);

        // Coproduct is an algebra morphism.
        NCPoly dw = coproduct(pres, sq, x);
        NCPoly dnf = lin(nfx, [&](const Word& m) {
            return coproduct(pres, sq, NCPoly::monomial(m, QScalar(1)));
        });
        dnf = sq.normal_form(dnf);
        if (dw != dnf) rep.fail("coproduct morphism", witness);

        // Coassociativity.
        NCPoly left = coproduct_in_slot(pres, cube, dw, 0, 2);
        NCPoly right = coproduct_in_slot(pres, cube, dw, 1, 2);
        if (left != right) rep.fail("coassociativity", witness);

        // Counit axioms (eps (x) id) Delta = id = (id (x) eps) Delta.
        NCPoly eps_left, eps_right;
        for (const auto& [tw, tc] : dw.terms()) {
            auto slots = detail_hopf::split_slots(rw, tw, 2);
            QScalar e0(1), e1(1);
            for (int i : slots[0]) e0 *= pres.counit_on_gens.at(i);
            for (int i : slots[1]) e1 *= pres.counit_on_gens.at(i);
            eps_left.add_term(slots[1], tc * e0);
            eps_right.add_term(slots[0], tc * e1);
        }
        if (rw.normal_form(eps_left) != nfx) rep.fail("left counit axiom", witness);
        if (rw.normal_form(eps_right) != nfx) rep.fail("right counit axiom", witness);

        // Antipode axioms m(S (x) id) Delta = eta eps = m(id (x) S) Delta.
        NCPoly s_left, s_right;
        for (const auto& [tw, tc] : dw.terms()) {
            auto slots = detail_hopf::split_slots(rw, tw, 2);
            NCPoly a = NCPoly::monomial(slots[0], QScalar(1));
            NCPoly b = NCPoly::monomial(slots[1], QScalar(1));
            s_left += tc * (antipode(pres, a) * b);
            s_right += tc * (a * antipode(pres, b));
        }
        NCPoly target = NCPoly::monomial({}, eps_direct);
        if (rw.normal_form(s_left) != target) rep.fail("left antipode axiom", witness);
        if (rw.normal_form(s_right) != target) rep.fail("right antipode axiom", witness);

        // S and * respect the relations (antimorphism consistency).
        NCPoly sw = antipode(pres, x);
        NCPoly snf = rw.normal_form(lin(nfx, [&](const Word& m) {
            return antipode(pres, NCPoly::monomial(m, QScalar(1)));
        }));
        if (sw != snf) rep.fail("antipode antimorphism", witness);
        NCPoly stw = star(pres, x);
        NCPoly stnf = rw.normal_form(lin(nfx, [&](const Word& m) {
            return star(pres, NCPoly::monomial(m, QScalar(1)));
        }));
        if (stw != stnf) rep.fail("star antimorphism", witness);
        if (star(pres, stw) != nfx) rep.fail("star involutive", witness);
    }
    return rep;
}

/// Checks S((S(xi))*) = xi* and (S^-1((S^-1(xi))*))* = xi on all words of
/// length <= depth.
inline Report verify_star_antipode(const HopfPresentation& pres, int depth) {
    Report rep;
    if (!pres.is_sl2()) {
        rep.fail("presentation", "verification is only available for the sl2 presentation");
        return rep;
    }
    const RewriteSystem& rw = pres.rw;
    const int B = rw.alphabet().size();
    std::vector<Word> words;
    Word cur;
    std::function<void(int)> gen = [&](int remaining) {
        if (!cur.empty()) words.push_back(cur);
        if (remaining == 0) return;
        for (int g = 0; g < B; ++g) {
            cur.push_back(g);
            gen(remaining - 1);
            cur.pop_back();
        }
    };
    gen(depth);
    for (const Word& w : words) {
        const std::string witness = rw.render_word(w);
        NCPoly x = rw.normal_form(NCPoly::monomial(w, QScalar(1)));
        if (antipode(pres, star(pres, antipode(pres, x))) != star(pres, x))
            rep.fail("S((S(xi))*) = xi*", witness);
        if (star(pres, antipode_inverse(pres, star(pres, antipode_inverse(pres, x)))) != x)
            rep.fail("(S^-1((S^-1(xi))*))* = xi", witness);
        if (antipode(pres, antipode_inverse(pres, x)) != x)
            rep.fail("S S^-1 = id", witness);
    }
    return rep;
}

}  // namespace qdisc
