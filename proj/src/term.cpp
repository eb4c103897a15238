#include "fairclear/term.hpp"

#include "fairclear/errors.hpp"

namespace fairclear {

namespace {
TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }
}  // namespace

TermPtr tConst(const Rational& v) {
    Term t;
    t.kind = TermKind::Const;
    t.value = v;
    return make(std::move(t));
}

TermPtr tVar(Var v) {
    Term t;
    t.kind = TermKind::VarRef;
    t.var = v;
    return make(std::move(t));
}

TermPtr tVar(const std::string& name) { return tVar(internVar(name)); }

TermPtr tNeg(TermPtr a) {
    // fold constants so every printable term has one canonical negative form
    if (a->kind == TermKind::Const) return tConst(-a->value);
    Term t;
    t.kind = TermKind::Neg;
    t.a = std::move(a);
    return make(std::move(t));
}

static TermPtr binary(TermKind k, TermPtr a, TermPtr b) {
    Term t;
    t.kind = k;
    t.a = std::move(a);
    t.b = std::move(b);
    return make(std::move(t));
}

TermPtr tAdd(TermPtr a, TermPtr b) { return binary(TermKind::Add, std::move(a), std::move(b)); }
TermPtr tSub(TermPtr a, TermPtr b) { return binary(TermKind::Sub, std::move(a), std::move(b)); }
TermPtr tMul(TermPtr a, TermPtr b) { return binary(TermKind::Mul, std::move(a), std::move(b)); }
TermPtr tDiv(TermPtr a, TermPtr b) { return binary(TermKind::Div, std::move(a), std::move(b)); }

TermPtr tPow(TermPtr a, unsigned e) {
    if (e < 1) throw ArityMismatch("Pow exponent must be >= 1");
    Term t;
    t.kind = TermKind::Pow;
    t.a = std::move(a);
    t.exponent = e;
    return make(std::move(t));
}

bool termEq(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case TermKind::Const:
            return a->value == b->value;
        case TermKind::VarRef:
            return a->var == b->var;
        case TermKind::Neg:
            return termEq(a->a, b->a);
        case TermKind::Pow:
            return a->exponent == b->exponent && termEq(a->a, b->a);
        default:
            return termEq(a->a, b->a) && termEq(a->b, b->b);
    }
}

bool termHasDiv(const TermPtr& t) {
    if (!t) return false;
    if (t->kind == TermKind::Div) return true;
    return termHasDiv(t->a) || termHasDiv(t->b);
}

bool termMentions(const TermPtr& t, Var v) {
    if (!t) return false;
    if (t->kind == TermKind::VarRef) return t->var == v;
    return termMentions(t->a, v) || termMentions(t->b, v);
}

void termVars(const TermPtr& t, std::set<Var>& out) {
    if (!t) return;
    if (t->kind == TermKind::VarRef) {
        out.insert(t->var);
        return;
    }
    termVars(t->a, out);
    termVars(t->b, out);
}

std::set<Var> termVars(const TermPtr& t) {
    std::set<Var> out;
    termVars(t, out);
    return out;
}

}  // namespace fairclear
