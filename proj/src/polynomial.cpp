#include "fairclear/polynomial.hpp"

#include "fairclear/errors.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>

namespace fairclear {

bool grlexLess(const Monomial& a, const Monomial& b) {
    unsigned da = 0, db = 0;
    for (const auto& [id, e] : a) da += e;
    for (const auto& [id, e] : b) db += e;
    if (da != db) return da < db;
    // lex with the earlier-interned indeterminate more significant
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first)
            // the monomial actually containing the smaller id is lex-greater
            return a[i].first > b[j].first;
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i;
        ++j;
    }
    return i == a.size() && j < b.size();
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

Polynomial Polynomial::indeterminate(IndetId id) {
    Polynomial p;
    p.terms_[Monomial{{id, 1}}] = 1;
    return p;
}

bool Polynomial::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constantValue() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

void Polynomial::add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
}

static Monomial monoMul(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add(monoMul(m1, m2), c1 * c2);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

unsigned Polynomial::degreeIn(IndetId id) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [i, e] : m)
            if (i == id) d = std::max(d, e);
    return d;
}

bool Polynomial::mentions(IndetId id) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [i, e] : m)
            if (i == id) return true;
    return false;
}

std::set<IndetId> Polynomial::indeterminates() const {
    std::set<IndetId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [i, e] : m) out.insert(i);
    return out;
}

std::vector<Polynomial> Polynomial::coefficientsDescIn(IndetId id) const {
    unsigned M = degreeIn(id);
    std::vector<Polynomial> out(M + 1);
    for (const auto& [m, c] : terms_) {
        unsigned d = 0;
        Monomial rest;
        for (const auto& [i, e] : m) {
            if (i == id)
                d = e;
            else
                rest.emplace_back(i, e);
        }
        out[M - d].add(rest, c);
    }
    return out;
}

Polynomial Polynomial::substitute(const std::map<IndetId, Rational>& env) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial rest;
        for (const auto& [i, e] : m) {
            auto it = env.find(i);
            if (it == env.end()) {
                rest.emplace_back(i, e);
            } else {
                Rational v = 1;
                for (unsigned k = 0; k < e; ++k) v *= it->second;
                coeff *= v;
            }
        }
        r.add(rest, coeff);
    }
    return r;
}

Rational Polynomial::evaluate(const std::map<IndetId, Rational>& env) const {
    Polynomial r = substitute(env);
    if (!r.isConstant())
        throw OrderIncomplete("evaluate: unassigned indeterminate remains");
    return r.constantValue();
}

Polynomial Polynomial::clearedOfFractions() const {
    Integer l = 1;
    for (const auto& [m, c] : terms_) l = lcm(l, ratDen(c));
    if (l == 1) return *this;
    return *this * Polynomial::constant(Rational(l));
}

const Monomial& Polynomial::leadingMonomial() const {
    return terms_.begin()->first;
}

const Rational& Polynomial::leadingCoefficient() const {
    return terms_.begin()->second;
}

// m1 divisible by m2? If so, quotient monomial into out.
static bool monoDivides(const Monomial& m2, const Monomial& m1, Monomial& out) {
    out.clear();
    std::size_t i = 0;
    for (const auto& [id, e] : m2) {
        while (i < m1.size() && m1[i].first < id) {
            out.push_back(m1[i]);
            ++i;
        }
        if (i == m1.size() || m1[i].first != id || m1[i].second < e) return false;
        if (m1[i].second > e) out.emplace_back(id, m1[i].second - e);
        ++i;
    }
    while (i < m1.size()) {
        out.push_back(m1[i]);
        ++i;
    }
    return true;
}

std::optional<Polynomial> Polynomial::dividedExactlyBy(const Polynomial& o) const {
    if (o.isZero()) return std::nullopt;
    Polynomial rem = *this;
    Polynomial quot;
    const Monomial& lmO = o.leadingMonomial();
    const Rational& lcO = o.leadingCoefficient();
    while (!rem.isZero()) {
        Monomial q;
        if (!monoDivides(lmO, rem.leadingMonomial(), q)) return std::nullopt;
        Rational c = rem.leadingCoefficient() / lcO;
        Polynomial step;
        step.add(q, c);
        quot = quot + step;
        rem = rem - step * o;
    }
    return quot;
}

Polynomial Polynomial::reducedBy(const std::vector<Polynomial>& reducers) const {
    Polynomial rem;
    Polynomial work = *this;
    Monomial q;
    while (!work.isZero()) {
        bool reduced = false;
        for (const auto& r : reducers) {
            if (r.isZero()) continue;
            if (monoDivides(r.leadingMonomial(), work.leadingMonomial(), q)) {
                Polynomial step;
                step.add(q, work.leadingCoefficient() / r.leadingCoefficient());
                work = work - step * r;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move the irreducible leading term over to the remainder
            Polynomial lead;
            lead.add(work.leadingMonomial(), work.leadingCoefficient());
            rem = rem + lead;
            work = work - lead;
        }
    }
    return rem;
}

std::vector<std::pair<Polynomial, Monomial>> groupByIndets(
    const Polynomial& p, const std::set<IndetId>& ids) {
    std::map<Monomial, Polynomial, GrlexGreater> groups;
    for (const auto& [m, c] : p.terms()) {
        Monomial in, rest;
        for (const auto& [i, e] : m) {
            if (ids.count(i))
                in.emplace_back(i, e);
            else
                rest.emplace_back(i, e);
        }
        groups[in].add(rest, c);
    }
    std::vector<std::pair<Polynomial, Monomial>> out;
    for (auto& [m, coeff] : groups) out.emplace_back(std::move(coeff), m);
    return out;
}

std::vector<Polynomial> polynomialCoefficients(const Polynomial& p,
                                               const std::set<IndetId>& ids) {
    std::vector<Polynomial> out;
    for (auto& [coeff, m] : groupByIndets(p, ids)) out.push_back(std::move(coeff));
    return out;
}

Polynomial termToPolynomial(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Const:
            return Polynomial::constant(t->value);
        case TermKind::VarRef:
            return Polynomial::indeterminate(t->var.id);
        case TermKind::Neg:
            return -termToPolynomial(t->a);
        case TermKind::Add:
            return termToPolynomial(t->a) + termToPolynomial(t->b);
        case TermKind::Sub:
            return termToPolynomial(t->a) - termToPolynomial(t->b);
        case TermKind::Mul:
            return termToPolynomial(t->a) * termToPolynomial(t->b);
        case TermKind::Pow:
            return termToPolynomial(t->a).pow(t->exponent);
        case TermKind::Div:
            throw DivPresent("termToPolynomial: division present");
    }
    throw Error("unreachable term kind");
}

static TermPtr monomialTerm(const Monomial& m, const Rational& absCoeff) {
    TermPtr prod;
    if (absCoeff != 1 || m.empty()) prod = tConst(absCoeff);
    for (const auto& [id, e] : m) {
        TermPtr v = tVar(Var{id});
        if (e > 1) v = tPow(v, e);
        prod = prod ? tMul(prod, v) : v;
    }
    return prod;
}

TermPtr polynomialToTerm(const Polynomial& p) {
    if (p.isZero()) return tConst(0);
    TermPtr acc;
    for (const auto& [m, c] : p.terms()) {
        bool neg = c < 0;
        TermPtr mono = monomialTerm(m, neg ? Rational(-c) : c);
        if (!acc)
            acc = neg ? tNeg(mono) : mono;
        else
            acc = neg ? tSub(acc, mono) : tAdd(acc, mono);
    }
    return acc;
}

}  // namespace fairclear
