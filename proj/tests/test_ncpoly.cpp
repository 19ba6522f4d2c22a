#include <doctest.h>

#include <qdisc/hopf.hpp>
#include <qdisc/ncpoly.hpp>

#include <random>

using namespace qdisc;

namespace {

QScalar q() { return QScalar::q(); }
QScalar qp(long long k) { return QScalar::q_power(k); }

// The quantum-disc coordinate relations: a- * a+ = q^2 a+ a- + q(1-q^2).
RewriteSystem pol_system() {
    Alphabet alpha({{"a+", 1, 0, 0}, {"a-", -1, 0, 0}});
    RewriteSystem rw(alpha);
    rw.add_rule_named({"a-", "a+"}, NCPoly::monomial({0, 1}, qp(2)) +
                                  NCPoly::monomial({}, q() * (QScalar(1) - qp(2))));
    return rw;
}

NCPoly random_poly(const RewriteSystem& rw, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), wlen(0, 4), coeff(-3, 3),
        letter(0, rw.alphabet().size() - 1);
    NCPoly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Word w;
        int len = wlen(rng);
        for (int i = 0; i < len; ++i) w.push_back(letter(rng));
        p.add_term(w, QScalar(coeff(rng)) * qp(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("sl2 commutation relation reduces as expected") {
    const auto& rw = uqsl2().rw;
    using namespace gens;
    NCPoly ef = rw.normal_form(NCPoly::letter(E) * NCPoly::letter(F));
    QScalar c = (q() - qp(-1)).inv();
    NCPoly expect = NCPoly::monomial({F, E}, QScalar(1)) + NCPoly::monomial({K}, c) +
                    NCPoly::monomial({Kinv}, -c);
    CHECK(ef == expect);
    CHECK(rw.render(ef).substr(0, 3) == "F*E");

    // K K^-1 = 1 both ways.
    CHECK(rw.normal_form(NCPoly::monomial({K, Kinv}, QScalar(1))) == NCPoly::one());
    CHECK(rw.normal_form(NCPoly::monomial({Kinv, K}, QScalar(1))) == NCPoly::one());
    // E K = q^-2 K E.
    CHECK(rw.normal_form(NCPoly::monomial({E, K}, QScalar(1))) ==
          NCPoly::monomial({K, E}, qp(-2)));
}

TEST_CASE("disc relation reduces as expected") {
    RewriteSystem rw = pol_system();
    NCPoly p = rw.normal_form(NCPoly::monomial({1, 0}, QScalar(1)));
    NCPoly expect = NCPoly::monomial({0, 1}, qp(2)) +
                    NCPoly::monomial({}, q() * (QScalar(1) - qp(2)));
    CHECK(p == expect);
    CHECK(rw.is_normal({0, 1}));
    CHECK(!rw.is_normal({1, 0}));
}

TEST_CASE("shipped systems are confluent") {
    CHECK(uqsl2().rw.check_confluence().empty());
    CHECK(pol_system().check_confluence().empty());
}

TEST_CASE("an inconsistent deformation breaks confluence") {
    // Same presentation but with the K,F commutation factor dropped: the
    // overlap E K F now resolves two incompatible ways.
    Alphabet alpha({{"F", -1, -2, 0}, {"K^-1", 0, 0, 0}, {"K", 0, 0, 0}, {"E", 1, 2, 0}});
    RewriteSystem rw(alpha);
    const int F = 0, Ki = 1, K = 2, E = 3;
    QScalar c = (q() - qp(-1)).inv();
    rw.add_rule(Word{K, Ki}, NCPoly::one());
    rw.add_rule(Word{Ki, K}, NCPoly::one());
    rw.add_rule(Word{E, K}, NCPoly::monomial({K, E}, qp(-2)));
    rw.add_rule(Word{E, Ki}, NCPoly::monomial({Ki, E}, qp(2)));
    rw.add_rule(Word{K, F}, NCPoly::monomial({F, K}, QScalar(1)));
    rw.add_rule(Word{Ki, F}, NCPoly::monomial({F, Ki}, QScalar(1)));
    rw.add_rule(Word{E, F}, NCPoly::monomial({F, E}, QScalar(1)) +
                                NCPoly::monomial({K}, c) + NCPoly::monomial({Ki}, -c));
    auto bad = rw.check_confluence();
    CHECK(!bad.empty());
}

TEST_CASE("rules must decrease the monomial order") {
    Alphabet alpha({{"x", 1, 0, 0}, {"y", 1, 0, 0}});
    RewriteSystem rw(alpha);
    // y x -> x y is oriented correctly; x y -> y x is not.
    CHECK_NOTHROW(rw.add_rule(Word{1, 0}, NCPoly::monomial({0, 1}, QScalar(1))));
    CHECK_THROWS_AS(rw.add_rule(Word{0, 1}, NCPoly::monomial({1, 0}, QScalar(1))),
                    std::invalid_argument);
}

TEST_CASE("rules must be homogeneous") {
    Alphabet alpha({{"x", 1, 2, 0}, {"y", -1, -2, 0}});
    RewriteSystem rw(alpha);
    CHECK_THROWS_AS(rw.add_rule(Word{1, 0}, NCPoly::monomial({0}, QScalar(1))),
                    std::invalid_argument);
}

TEST_CASE("normal form is idempotent and linear") {
    const auto& rw = uqsl2().rw;
    std::mt19937 rng(2024);
    for (int i = 0; i < 40; ++i) {
        NCPoly a = random_poly(rw, rng), b = random_poly(rw, rng);
        NCPoly na = rw.normal_form(a);
        CHECK(rw.normal_form(na) == na);
        CHECK(rw.normal_form(a + b) == na + rw.normal_form(b));
        for (const auto& [w, c] : na.terms()) CHECK(rw.is_normal(w));
    }
}

TEST_CASE("normal form preserves degree, weight and parity") {
    const auto& rw = uqsl2().rw;
    using namespace gens;
    Word w{E, F, E, K, F};
    NCPoly nf = rw.normal_form(NCPoly::monomial(w, QScalar(1)));
    for (const auto& [m, c] : nf.terms()) {
        CHECK(rw.degree_of(m) == rw.degree_of(w));
        CHECK(rw.weight_of(m) == rw.weight_of(w));
        CHECK(rw.parity_of(m) == rw.parity_of(w));
    }
}

TEST_CASE("graded components") {
    RewriteSystem rw = pol_system();
    NCPoly p = rw.normal_form(NCPoly::monomial({1, 0}, QScalar(1)));  // a- a+
    CHECK(graded_component(rw, p, 0) == p);
    CHECK(graded_component(rw, p, 1) == NCPoly::zero());
    NCPoly mixed = NCPoly::letter(0) + NCPoly::letter(1);  // a+ + a-
    CHECK(graded_component(rw, mixed, 1) == NCPoly::letter(0));
    CHECK(graded_component(rw, mixed, -1) == NCPoly::letter(1));
}

TEST_CASE("rendering and round-trip text") {
    const auto& rw = uqsl2().rw;
    using namespace gens;
    CHECK(rw.render_word({F, F, K, E}) == "F^2*K*E");
    CHECK(rw.render_word({}) == "1");
    CHECK(rw.render(NCPoly::zero()) == "0");
    std::string text = rw.to_text();
    CHECK(text.find("K*K^-1 -> 1") != std::string::npos);
    CHECK(text.find("E*F -> ") != std::string::npos);
}
