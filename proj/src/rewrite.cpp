#include "fairclear/rewrite.hpp"

#include "fairclear/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fairclear {

namespace {

TermPtr normalizeDivsTerm(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Const:
        case TermKind::VarRef:
            return t;
        case TermKind::Neg:
            return tNeg(normalizeDivsTerm(t->a));
        case TermKind::Pow:
            return tPow(normalizeDivsTerm(t->a), t->exponent);
        case TermKind::Add:
            return tAdd(normalizeDivsTerm(t->a), normalizeDivsTerm(t->b));
        case TermKind::Sub:
            return tSub(normalizeDivsTerm(t->a), normalizeDivsTerm(t->b));
        case TermKind::Mul:
            return tMul(normalizeDivsTerm(t->a), normalizeDivsTerm(t->b));
        case TermKind::Div: {
            TermPtr num = normalizeDivsTerm(t->a);
            TermPtr den = normalizeDivsTerm(t->b);
            if (num->kind == TermKind::Const && num->value == 1)
                return tDiv(num, den);
            return tMul(num, tDiv(tConst(1), den));
        }
    }
    return t;
}

FormulaPtr lowerImplies(const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::Implies:
            return fOr(fNot(lowerImplies(f->a)), lowerImplies(f->b));
        case FormulaKind::Not:
            return fNot(lowerImplies(f->a));
        case FormulaKind::And:
            return fAnd(lowerImplies(f->a), lowerImplies(f->b));
        case FormulaKind::Or:
            return fOr(lowerImplies(f->a), lowerImplies(f->b));
        case FormulaKind::Exists:
            return fExists(f->vars, lowerImplies(f->a));
        case FormulaKind::Forall:
            return fForall(f->vars, lowerImplies(f->a));
        default:
            return f;
    }
}

FormulaPtr mapAtoms(const FormulaPtr& f,
                    const std::function<Atom(const Atom&)>& fn) {
    switch (f->kind) {
        case FormulaKind::AtomF:
            return fAtom(fn(f->atom));
        case FormulaKind::Not:
            return fNot(mapAtoms(f->a, fn));
        case FormulaKind::And:
            return fAnd(mapAtoms(f->a, fn), mapAtoms(f->b, fn));
        case FormulaKind::Or:
            return fOr(mapAtoms(f->a, fn), mapAtoms(f->b, fn));
        case FormulaKind::Implies:
            return fImplies(mapAtoms(f->a, fn), mapAtoms(f->b, fn));
        case FormulaKind::Exists:
            return fExists(f->vars, mapAtoms(f->a, fn));
        case FormulaKind::Forall:
            return fForall(f->vars, mapAtoms(f->a, fn));
        default:
            return f;
    }
}

}  // namespace

FormulaPtr normalizeDivs(const FormulaPtr& f) {
    return mapAtoms(lowerImplies(f), [](const Atom& a) {
        return Atom{normalizeDivsTerm(a.lhs), a.op, normalizeDivsTerm(a.rhs)};
    });
}

namespace {

TermPtr renameTerm(const TermPtr& t, const std::map<Var, Var>& env) {
    switch (t->kind) {
        case TermKind::Const:
            return t;
        case TermKind::VarRef: {
            auto it = env.find(t->var);
            return it == env.end() ? t : tVar(it->second);
        }
        case TermKind::Neg:
            return tNeg(renameTerm(t->a, env));
        case TermKind::Pow:
            return tPow(renameTerm(t->a, env), t->exponent);
        case TermKind::Add:
            return tAdd(renameTerm(t->a, env), renameTerm(t->b, env));
        case TermKind::Sub:
            return tSub(renameTerm(t->a, env), renameTerm(t->b, env));
        case TermKind::Mul:
            return tMul(renameTerm(t->a, env), renameTerm(t->b, env));
        case TermKind::Div:
            return tDiv(renameTerm(t->a, env), renameTerm(t->b, env));
    }
    return t;
}

struct Apart {
    std::set<Var> used;
    FreshState* fs;

    Var freshLike(Var v) {
        const std::string base = varName(v);
        for (;;) {
            std::string cand = base + "_" + std::to_string(fs->next++);
            Var w = internVar(cand);
            if (used.insert(w).second) return w;
        }
    }

    FormulaPtr walk(const FormulaPtr& f, std::map<Var, Var> env) {
        switch (f->kind) {
            case FormulaKind::AtomF:
                return fAtom(Atom{renameTerm(f->atom.lhs, env), f->atom.op,
                                  renameTerm(f->atom.rhs, env)});
            case FormulaKind::Not:
                return fNot(walk(f->a, env));
            case FormulaKind::And: {
                // sequence explicitly: fresh names must go left to right
                FormulaPtr l = walk(f->a, env);
                FormulaPtr r = walk(f->b, env);
                return fAnd(l, r);
            }
            case FormulaKind::Or: {
                FormulaPtr l = walk(f->a, env);
                FormulaPtr r = walk(f->b, env);
                return fOr(l, r);
            }
            case FormulaKind::Implies: {
                FormulaPtr l = walk(f->a, env);
                FormulaPtr r = walk(f->b, env);
                return fImplies(l, r);
            }
            case FormulaKind::Exists:
            case FormulaKind::Forall: {
                std::vector<Var> vs;
                for (Var v : f->vars) {
                    Var w = used.insert(v).second ? v : freshLike(v);
                    env[v] = w;
                    vs.push_back(w);
                }
                FormulaPtr body = walk(f->a, env);
                return f->kind == FormulaKind::Exists ? fExists(vs, body)
                                                      : fForall(vs, body);
            }
            default:
                return f;
        }
    }
};

}  // namespace

FormulaPtr standardizeApart(const FormulaPtr& f, FreshState& fs) {
    Apart ap;
    ap.fs = &fs;
    // free variables are reserved so binders never capture them
    for (Var v : freeVars(f)) ap.used.insert(v);
    return ap.walk(f, {});
}

namespace {

FormulaPtr posformRec(const FormulaPtr& f, bool negate) {
    switch (f->kind) {
        case FormulaKind::True:
            return fBool(!negate);
        case FormulaKind::False:
            return fBool(negate);
        case FormulaKind::Prop:
            return negate ? fNot(f) : f;
        case FormulaKind::AtomF:
            return negate ? fAtom(Atom{f->atom.lhs, relOpFlop(f->atom.op),
                                       f->atom.rhs})
                          : f;
        case FormulaKind::Not:
            return posformRec(f->a, !negate);
        case FormulaKind::And: {
            FormulaPtr l = posformRec(f->a, negate);
            FormulaPtr r = posformRec(f->b, negate);
            return negate ? fOr(l, r) : fAnd(l, r);
        }
        case FormulaKind::Or: {
            FormulaPtr l = posformRec(f->a, negate);
            FormulaPtr r = posformRec(f->b, negate);
            return negate ? fAnd(l, r) : fOr(l, r);
        }
        case FormulaKind::Implies:
            throw NotNormalized("posform: ==> must be lowered first");
        case FormulaKind::Exists: {
            FormulaPtr body = posformRec(f->a, negate);
            return negate ? fForall(f->vars, body) : fExists(f->vars, body);
        }
        case FormulaKind::Forall: {
            FormulaPtr body = posformRec(f->a, negate);
            return negate ? fExists(f->vars, body) : fForall(f->vars, body);
        }
    }
    return f;
}

}  // namespace

FormulaPtr posform(const FormulaPtr& f) { return posformRec(f, false); }

namespace {

void checkApart(const FormulaPtr& f) {
    std::set<Var> bound;
    std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
        if (!g) return;
        if (g->kind == FormulaKind::Exists || g->kind == FormulaKind::Forall)
            for (Var v : g->vars)
                if (!bound.insert(v).second)
                    throw NotStandardizedApart("variable bound twice: " +
                                               varName(v));
        walk(g->a);
        walk(g->b);
    };
    walk(f);
    for (Var v : freeVars(f))
        if (bound.count(v))
            throw NotStandardizedApart("bound variable shadows free " +
                                       varName(v));
}

void checkPositive(const FormulaPtr& f) {
    if (!f) return;
    if (f->kind == FormulaKind::Implies)
        throw NotPositivePrenex("prenex: ==> present");
    if (f->kind == FormulaKind::Not && f->a->kind != FormulaKind::Prop)
        throw NotPositivePrenex("prenex: input not in positive form");
    checkPositive(f->a);
    checkPositive(f->b);
}

struct PrefixEntry {
    bool isForall;
    std::vector<Var> vars;
};

FormulaPtr stripQuantifiers(const FormulaPtr& f,
                            std::vector<PrefixEntry>& prefix) {
    switch (f->kind) {
        case FormulaKind::Exists:
        case FormulaKind::Forall:
            prefix.push_back(
                PrefixEntry{f->kind == FormulaKind::Forall, f->vars});
            return stripQuantifiers(f->a, prefix);
        case FormulaKind::And: {
            FormulaPtr l = stripQuantifiers(f->a, prefix);
            FormulaPtr r = stripQuantifiers(f->b, prefix);
            return fAnd(l, r);
        }
        case FormulaKind::Or: {
            FormulaPtr l = stripQuantifiers(f->a, prefix);
            FormulaPtr r = stripQuantifiers(f->b, prefix);
            return fOr(l, r);
        }
        case FormulaKind::Not:
            return fNot(stripQuantifiers(f->a, prefix));
        default:
            return f;
    }
}

}  // namespace

FormulaPtr prenex(const FormulaPtr& f) {
    checkPositive(f);
    checkApart(f);
    std::vector<PrefixEntry> prefix;
    FormulaPtr matrix = stripQuantifiers(f, prefix);
    // merge adjacent same-kind entries into blocks
    FormulaPtr out = matrix;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        if (out->kind ==
                (it->isForall ? FormulaKind::Forall : FormulaKind::Exists) &&
            (out.get() != matrix.get())) {
            std::vector<Var> vs = it->vars;
            vs.insert(vs.end(), out->vars.begin(), out->vars.end());
            out = it->isForall ? fForall(vs, out->a) : fExists(vs, out->a);
        } else {
            out = it->isForall ? fForall(it->vars, out)
                               : fExists(it->vars, out);
        }
    }
    return out;
}

namespace {

void checkPevalSafe(const FormulaPtr& f) {
    if (formulaHasImplies(f))
        throw NotPevalSafe("flip/flop: ==> present");
    // each propositional index occurs exactly once, as U or V but not both
    std::set<unsigned> seen;
    std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
        if (!g) return;
        if (g->kind == FormulaKind::Prop) {
            if (!seen.insert(g->prop.index).second)
                throw NotPevalSafe("flip/flop: propositional index " +
                                   std::to_string(g->prop.index) +
                                   " occurs more than once");
        }
        walk(g->a);
        walk(g->b);
    };
    walk(f);
    try {
        checkApart(f);
    } catch (const NotStandardizedApart& e) {
        throw NotPevalSafe(std::string("flip/flop: ") + e.what());
    }
}

PropVar dualProp(PropVar p) {
    PropVar q = p;
    q.kind = p.kind == PropVar::Kind::U ? PropVar::Kind::V : PropVar::Kind::U;
    return q;
}

FormulaPtr flipRec(const FormulaPtr& f);
FormulaPtr flopRec(const FormulaPtr& f);

// flip: U_i <-> V_i exchange; under a negation it hands off to flop
// (flip(~F) = flop(F)), which is what makes both maps involutions.
FormulaPtr flipRec(const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::True:
        case FormulaKind::False:
            return f;
        case FormulaKind::Prop:
            return fProp(dualProp(f->prop));
        case FormulaKind::AtomF:
            return f;
        case FormulaKind::Not:
            return flopRec(f->a);  // flip(~F) = flop(F)
        case FormulaKind::And:
            return fAnd(flipRec(f->a), flipRec(f->b));
        case FormulaKind::Or:
            return fOr(flipRec(f->a), flipRec(f->b));
        case FormulaKind::Exists:
            return fExists(f->vars, flipRec(f->a));
        case FormulaKind::Forall:
            return fForall(f->vars, flipRec(f->a));
        default:
            throw NotPevalSafe("flip: unsupported connective");
    }
}

FormulaPtr flopRec(const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::True:
            return fFalse();
        case FormulaKind::False:
            return fTrue();
        case FormulaKind::Prop:
            return fNot(fProp(dualProp(f->prop)));
        case FormulaKind::AtomF:
            return fAtom(
                Atom{f->atom.lhs, relOpFlop(f->atom.op), f->atom.rhs});
        case FormulaKind::Not:
            return flipRec(f->a);
        case FormulaKind::And:
            return fOr(flopRec(f->a), flopRec(f->b));
        case FormulaKind::Or:
            return fAnd(flopRec(f->a), flopRec(f->b));
        case FormulaKind::Exists:
            return fForall(f->vars, flopRec(f->a));
        case FormulaKind::Forall:
            return fExists(f->vars, flopRec(f->a));
        default:
            throw NotPevalSafe("flop: unsupported connective");
    }
}

}  // namespace

FormulaPtr flip(const FormulaPtr& f) {
    checkPevalSafe(f);
    return flipRec(f);
}

FormulaPtr flop(const FormulaPtr& f) {
    checkPevalSafe(f);
    return flopRec(f);
}

}  // namespace fairclear
