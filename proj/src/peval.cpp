#include "fairclear/peval.hpp"

#include "fairclear/errors.hpp"
#include "fairclear/nullify.hpp"

#include <algorithm>
#include <functional>

namespace fairclear {

namespace {

Rational applyBinop(TermKind k, const Rational& l, const Rational& r) {
    switch (k) {
        case TermKind::Add: return l + r;
        case TermKind::Sub: return l - r;
        case TermKind::Mul: return l * r;
        default: return l / r;  // Div, denominator nonzero by caller
    }
}

bool isConst(const TermResult& r) {
    return !r.failed() && r.term->kind == TermKind::Const;
}

}  // namespace

TermResult pevalTerm(const TermPtr& t, Var x, const Rational& a) {
    // case 1: x does not occur — the term is untouched (laziness)
    if (!termMentions(t, x)) return TermResult::ok(t);
    switch (t->kind) {
        case TermKind::Const:
            return TermResult::ok(t);  // unreachable: no x inside
        case TermKind::VarRef:
            return TermResult::ok(tConst(a));
        case TermKind::Neg: {
            TermResult s = pevalTerm(t->a, x, a);
            if (s.failed()) return TermResult::fail();
            if (isConst(s)) return TermResult::ok(tConst(-s.term->value));
            return TermResult::ok(tNeg(s.term));
        }
        case TermKind::Pow: {
            TermResult s = pevalTerm(t->a, x, a);
            if (s.failed()) return TermResult::fail();
            if (isConst(s)) {
                Rational v = 1;
                for (unsigned k = 0; k < t->exponent; ++k) v *= s.term->value;
                return TermResult::ok(tConst(v));
            }
            return TermResult::ok(tPow(s.term, t->exponent));
        }
        case TermKind::Add:
        case TermKind::Sub:
        case TermKind::Mul: {
            TermResult l = pevalTerm(t->a, x, a);
            if (l.failed()) return TermResult::fail();
            TermResult r = pevalTerm(t->b, x, a);
            if (r.failed()) return TermResult::fail();
            if (isConst(l) && isConst(r))
                return TermResult::ok(
                    tConst(applyBinop(t->kind, l.term->value, r.term->value)));
            TermPtr lt = l.term, rt = r.term;
            switch (t->kind) {
                case TermKind::Add: return TermResult::ok(tAdd(lt, rt));
                case TermKind::Sub: return TermResult::ok(tSub(lt, rt));
                default: return TermResult::ok(tMul(lt, rt));
            }
        }
        case TermKind::Div: {
            TermResult l = pevalTerm(t->a, x, a);
            if (l.failed()) return TermResult::fail();
            TermResult r = pevalTerm(t->b, x, a);
            if (r.failed()) return TermResult::fail();
            if (isConst(r) && r.term->value == 0) return TermResult::fail();
            if (isConst(l) && isConst(r))
                return TermResult::ok(tConst(l.term->value / r.term->value));
            return TermResult::ok(tDiv(l.term, r.term));
        }
    }
    return TermResult::ok(t);
}

TermResult pevalpTerm(const TermPtr& t, const std::vector<Var>& xs,
                      const std::vector<Rational>& g) {
    if (xs.size() != g.size())
        throw LengthMismatch("pevalpTerm: |xs| != |g|");
    TermResult r = TermResult::ok(t);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (r.failed()) return r;
        r = pevalTerm(r.term, xs[i], g[i]);
    }
    return r;
}

namespace {

// Clear divisions bottom-up exactly as the translation's inner loop does,
// collecting the final denominator polynomials.  Returns the div-free
// numerator-style polynomial of t (unused by callers that only need dens).
Polynomial collectDenominators(const TermPtr& t, std::vector<Polynomial>& dens);

// A div whose denominator still contains divs is resolved recursively: the
// denominator becomes a div-free polynomial first, with its own recorded
// denominators p; the enclosing div(d, sum c_m T^m) then becomes
// div(p^M d, sum c_m q^m p^(M-m)) in polynomial form.
struct Fraction {
    Polynomial num;
    Polynomial den;  // div-free; constant 1 when no division was involved
};

Fraction toFraction(const TermPtr& t, std::vector<Polynomial>& dens) {
    switch (t->kind) {
        case TermKind::Const:
            return {Polynomial::constant(t->value), Polynomial::constant(1)};
        case TermKind::VarRef:
            return {Polynomial::indeterminate(t->var.id), Polynomial::constant(1)};
        case TermKind::Neg: {
            Fraction f = toFraction(t->a, dens);
            return {-f.num, f.den};
        }
        case TermKind::Pow: {
            Fraction f = toFraction(t->a, dens);
            return {f.num.pow(t->exponent), f.den.pow(t->exponent)};
        }
        case TermKind::Add:
        case TermKind::Sub: {
            Fraction l = toFraction(t->a, dens);
            Fraction r = toFraction(t->b, dens);
            Polynomial num = t->kind == TermKind::Add
                                 ? l.num * r.den + r.num * l.den
                                 : l.num * r.den - r.num * l.den;
            return {num, l.den * r.den};
        }
        case TermKind::Mul: {
            Fraction l = toFraction(t->a, dens);
            Fraction r = toFraction(t->b, dens);
            return {l.num * r.num, l.den * r.den};
        }
        case TermKind::Div: {
            Fraction num = toFraction(t->a, dens);
            Fraction den = toFraction(t->b, dens);
            // the final denominator polynomial of this div node is the
            // cleared image of its denominator term
            dens.push_back(den.num);
            return {num.num * den.den, num.den * den.num};
        }
    }
    return {Polynomial(), Polynomial::constant(1)};
}

}  // namespace

std::vector<Polynomial> finalDenominators(const TermPtr& t) {
    std::vector<Polynomial> dens;
    toFraction(t, dens);
    return dens;
}

bool isLegal(const TermPtr& t, const std::vector<Var>& order,
             const std::vector<Rational>& g) {
    if (g.size() > order.size()) throw LengthMismatch("isLegal: |g| > |order|");
    std::set<Var> vs = termVars(t);
    for (Var v : vs)
        if (std::find(order.begin(), order.end(), v) == order.end())
            throw OrderIncomplete("isLegal: order misses variable " + varName(v));
    std::vector<Var> prefix(order.begin(), order.begin() + g.size());
    TermResult r = pevalpTerm(t, prefix, g);
    if (r.failed()) return false;
    for (const Polynomial& p : finalDenominators(t)) {
        if (p.isZero()) return false;  // literal zero denominator
        if (isNullified(p, prefix, g)) return false;
    }
    return true;
}

namespace {

bool sideIllegalAt(const TermPtr& side, Var x, const Rational& a) {
    // single-step legality: remaining-variable order is irrelevant for a
    // one-variable prefix
    TermResult r = pevalTerm(side, x, a);
    if (r.failed()) return true;
    for (const Polynomial& p : finalDenominators(side)) {
        if (p.isZero()) return true;
        if (isNullified(p, {x}, {a})) return true;
    }
    return false;
}

}  // namespace

FormulaPtr pevalFormula(const FormulaPtr& f, Var x, const Rational& a,
                        FreshState& fs) {
    switch (f->kind) {
        case FormulaKind::True:
        case FormulaKind::False:
        case FormulaKind::Prop:
            return f;
        case FormulaKind::AtomF: {
            const Atom& at = f->atom;
            if (sideIllegalAt(at.lhs, x, a) || sideIllegalAt(at.rhs, x, a))
                return fProp(PropVar{PropVar::Kind::U, fs.next++});
            TermResult l = pevalTerm(at.lhs, x, a);
            TermResult r = pevalTerm(at.rhs, x, a);
            if (l.term->kind == TermKind::Const &&
                r.term->kind == TermKind::Const)
                return fBool(relOpHolds(at.op, l.term->value, r.term->value));
            return fAtom(l.term, at.op, r.term);
        }
        case FormulaKind::Not:
            return fNot(pevalFormula(f->a, x, a, fs));
        case FormulaKind::And:
            return fAnd(pevalFormula(f->a, x, a, fs),
                        pevalFormula(f->b, x, a, fs));
        case FormulaKind::Or:
            return fOr(pevalFormula(f->a, x, a, fs),
                       pevalFormula(f->b, x, a, fs));
        case FormulaKind::Implies:
            throw NotNormalized("pevalFormula: ==> must be lowered first");
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            // shadowing: a quantifier binding x shields its body
            if (std::find(f->vars.begin(), f->vars.end(), x) != f->vars.end())
                return f;
            FormulaPtr body = pevalFormula(f->a, x, a, fs);
            return f->kind == FormulaKind::Exists ? fExists(f->vars, body)
                                                  : fForall(f->vars, body);
        }
    }
    return f;
}

FormulaPtr pevalpFormula(const FormulaPtr& f, const std::vector<Var>& xs,
                         const std::vector<Rational>& g, FreshState& fs) {
    if (xs.size() != g.size())
        throw LengthMismatch("pevalpFormula: |xs| != |g|");
    FormulaPtr r = f;
    for (std::size_t i = 0; i < xs.size(); ++i)
        r = pevalFormula(r, xs[i], g[i], fs);
    return r;
}

unsigned nextFreshIndex(const FormulaPtr& f) {
    unsigned maxIdx = 0;
    std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
        if (!g) return;
        if (g->kind == FormulaKind::Prop)
            maxIdx = std::max(maxIdx, g->prop.index);
        walk(g->a);
        walk(g->b);
    };
    walk(f);
    return maxIdx + 1;
}

}  // namespace fairclear
