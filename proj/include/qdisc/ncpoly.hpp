#pragma once

// Free noncommutative polynomials over a declared generator alphabet and
// oriented rewrite systems with canonical normal forms. Confluence is
// checked exactly by resolving all overlap and inclusion ambiguities of the
// rule set (diamond lemma).

#include "qscalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdisc {

/// A generator letter. `degree` is the Z-grading, `weight` the Cartan
/// eigenvalue (H-weight) and `parity` the form degree (0 or 1).
struct GeneratorSymbol {
    std::string name;
    int degree = 0;
    int weight = 0;
    int parity = 0;
};

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<GeneratorSymbol> letters) : letters_(std::move(letters)) {
        for (size_t i = 0; i < letters_.size(); ++i) {
            for (size_t j = i + 1; j < letters_.size(); ++j)
                if (letters_[i].name == letters_[j].name)
                    throw std::invalid_argument("duplicate generator name: " + letters_[i].name);
        }
    }

    int size() const { return static_cast<int>(letters_.size()); }
    const GeneratorSymbol& operator[](int i) const { return letters_[static_cast<size_t>(i)]; }
    const std::vector<GeneratorSymbol>& letters() const { return letters_; }

    int index(const std::string& name) const {
        for (size_t i = 0; i < letters_.size(); ++i)
            if (letters_[i].name == name) return static_cast<int>(i);
        return -1;
    }

private:
    std::vector<GeneratorSymbol> letters_;
};

using Word = std::vector<int>;

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

class NCPoly {
public:
    NCPoly() = default;
    static NCPoly zero() { return {}; }
    static NCPoly one() { return monomial({}, QScalar(1)); }
    static NCPoly monomial(Word w, QScalar c) {
        NCPoly p;
        if (!c.is_zero()) p.terms_[std::move(w)] = std::move(c);
        return p;
    }
    static NCPoly letter(int idx) { return monomial(Word{idx}, QScalar(1)); }

    const std::map<Word, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const QScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
        NCPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b) {
        NCPoly r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
        return r;
    }
    friend NCPoly operator*(const QScalar& s, const NCPoly& p) {
        NCPoly r;
        for (const auto& [w, c] : p.terms_) r.add_term(w, s * c);
        return r;
    }
    NCPoly operator-() const { return QScalar(-1) * *this; }
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

private:
    std::map<Word, QScalar> terms_;
};

struct RewriteRule {
    Word lhs;
    NCPoly rhs;
};

/// An unresolved overlap found by the confluence checker.
struct CriticalPair {
    Word overlap;
    NCPoly nf_left;
    NCPoly nf_right;
};

/// Oriented rewrite system. The monomial order is total word length first,
/// ties broken lexicographically by the declared letter precedence (the
/// alphabet's letter order: earlier letters are smaller). Every rule must
/// strictly decrease this order and be degree-, weight- and
/// parity-homogeneous.
class RewriteSystem {
public:
    explicit RewriteSystem(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    int degree_of(const Word& w) const { return sum_label(w, &GeneratorSymbol::degree); }
    int weight_of(const Word& w) const { return sum_label(w, &GeneratorSymbol::weight); }
    int parity_of(const Word& w) const { return sum_label(w, &GeneratorSymbol::parity) % 2; }

    /// Strict monomial order: true when a < b.
    bool word_less(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;  // letter indices are the precedence ranks
    }

    void add_rule(Word lhs, NCPoly rhs) {
        if (lhs.empty()) throw std::invalid_argument("empty rule LHS");
        for (const auto& [w, c] : rhs.terms()) {
            if (!word_less(w, lhs))
                throw std::invalid_argument("rule does not decrease the monomial order");
            if (degree_of(w) != degree_of(lhs) || weight_of(w) != weight_of(lhs) ||
                parity_of(w) != parity_of(lhs))
                throw std::invalid_argument("rule is not grading/weight/parity homogeneous");
        }
        rules_.push_back({std::move(lhs), std::move(rhs)});
    }

    /// Convenience: rule given by generator names.
    void add_rule_named(const std::vector<std::string>& lhs, NCPoly rhs) {
        Word w;
        for (const auto& n : lhs) {
            int i = alphabet_.index(n);
            if (i < 0) throw std::invalid_argument("unknown generator: " + n);
            w.push_back(i);
        }
        add_rule(std::move(w), std::move(rhs));
    }

    NCPoly normal_form(const NCPoly& p) const {
        NCPoly done;
        std::map<Word, QScalar> work(p.terms().begin(), p.terms().end());
        while (!work.empty()) {
            auto it = work.begin();
            Word w = it->first;
            QScalar c = it->second;
            work.erase(it);
            if (c.is_zero()) continue;
            auto hit = find_redex(w);
            if (!hit) {
                done.add_term(w, c);
                continue;
            }
            auto [pos, rule_idx] = *hit;
            const RewriteRule& rule = rules_[static_cast<size_t>(rule_idx)];
            Word prefix(w.begin(), w.begin() + pos);
            Word suffix(w.begin() + pos + static_cast<long>(rule.lhs.size()), w.end());
            for (const auto& [rw, rc] : rule.rhs.terms()) {
                Word nw = concat(concat(prefix, rw), suffix);
                auto jt = work.find(nw);
                if (jt == work.end())
                    work.emplace(std::move(nw), c * rc);
                else {
                    jt->second += c * rc;
                    if (jt->second.is_zero()) work.erase(jt);
                }
            }
        }
        return done;
    }

    bool is_normal(const Word& w) const { return !find_redex(w); }

    /// Resolves every overlap and inclusion ambiguity of the rule set and
    /// returns the unresolved ones. The check is exact (no sampling).
    std::vector<CriticalPair> check_confluence() const {
        std::vector<CriticalPair> bad;
        const size_t n = rules_.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                const Word& l1 = rules_[i].lhs;
                const Word& l2 = rules_[j].lhs;
                // Overlap: a proper suffix of l1 equals a prefix of l2.
                size_t kmax = std::min(l1.size(), l2.size());
                for (size_t k = 1; k < kmax; ++k) {
                    if (!std::equal(l1.end() - static_cast<long>(k), l1.end(), l2.begin()))
                        continue;
                    Word w = l1;
                    w.insert(w.end(), l2.begin() + static_cast<long>(k), l2.end());
                    // Reduce the two ways.
                    Word suffix(l2.begin() + static_cast<long>(k), l2.end());
                    Word prefix(l1.begin(), l1.end() - static_cast<long>(k));
                    NCPoly left = rules_[i].rhs * NCPoly::monomial(suffix, QScalar(1));
                    NCPoly right = NCPoly::monomial(prefix, QScalar(1)) * rules_[j].rhs;
                    record_if_distinct(bad, w, left, right);
                }
                // Two rules with the same LHS must agree.
                if (i < j && l1 == l2)
                    record_if_distinct(bad, l1, rules_[i].rhs, rules_[j].rhs);
                // Inclusion: l2 occurs strictly inside l1.
                if (i != j && l2.size() < l1.size()) {
                    for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
                        if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<long>(pos)))
                            continue;
                        Word prefix(l1.begin(), l1.begin() + static_cast<long>(pos));
                        Word suffix(l1.begin() + static_cast<long>(pos + l2.size()), l1.end());
                        NCPoly left = rules_[i].rhs;
                        NCPoly right = NCPoly::monomial(prefix, QScalar(1)) * rules_[j].rhs *
                                       NCPoly::monomial(suffix, QScalar(1));
                        record_if_distinct(bad, l1, left, right);
                    }
                }
            }
        }
        return bad;
    }

    std::string render_word(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        size_t i = 0;
        while (i < w.size()) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!s.empty()) s += "*";
            s += alphabet_[w[i]].name;
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }

    std::string render(const NCPoly& p) const {
        if (p.is_zero()) return "0";
        // Highest-order monomials first.
        std::vector<const std::pair<const Word, QScalar>*> items;
        for (const auto& t : p.terms()) items.push_back(&t);
        std::sort(items.begin(), items.end(), [this](auto* a, auto* b) {
            return word_less(b->first, a->first);
        });
        std::string s;
        for (auto* t : items) {
            const auto& [w, c] = *t;
            if (!s.empty()) s += " + ";
            std::string cs = c.str();
            bool needs_paren = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            if (w.empty()) {
                s += needs_paren ? "(" + cs + ")" : cs;
            } else if (c == QScalar(1)) {
                s += render_word(w);
            } else if (c == QScalar(-1)) {
                s += "-" + render_word(w);
            } else {
                s += (needs_paren ? "(" + cs + ")" : cs) + "*" + render_word(w);
            }
        }
        return s;
    }

    /// One rule per line, `LHS -> RHS`.
    std::string to_text() const {
        std::string s;
        for (const auto& r : rules_)
            s += render_word(r.lhs) + " -> " + render(r.rhs) + "\n";
        return s;
    }

private:
    template <typename M>
    int sum_label(const Word& w, M member) const {
        int s = 0;
        for (int idx : w) s += alphabet_[idx].*member;
        return s;
    }

    std::optional<std::pair<size_t, int>> find_redex(const Word& w) const {
        for (size_t pos = 0; pos < w.size(); ++pos) {
            for (size_t r = 0; r < rules_.size(); ++r) {
                const Word& l = rules_[r].lhs;
                if (pos + l.size() > w.size()) continue;
                if (std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(pos)))
                    return std::make_pair(pos, static_cast<int>(r));
            }
        }
        return std::nullopt;
    }

    void record_if_distinct(std::vector<CriticalPair>& bad, const Word& w, const NCPoly& left,
                            const NCPoly& right) const {
        NCPoly nl = normal_form(left), nr = normal_form(right);
        if (nl != nr) bad.push_back({w, std::move(nl), std::move(nr)});
    }

    Alphabet alphabet_;
    std::vector<RewriteRule> rules_;
};

/// Projection onto the total-degree-d graded component.
inline NCPoly graded_component(const RewriteSystem& sys, const NCPoly& p, int degree) {
    NCPoly r;
    for (const auto& [w, c] : p.terms())
        if (sys.degree_of(w) == degree) r.add_term(w, c);
    return r;
}

}  // namespace qdisc
