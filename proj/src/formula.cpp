#include "fairclear/formula.hpp"

#include "fairclear/errors.hpp"

#include <algorithm>
#include <functional>

namespace fairclear {

RelOp relOpFlop(RelOp op) {
    switch (op) {
        case RelOp::Eq: return RelOp::Ne;
        case RelOp::Ne: return RelOp::Eq;
        case RelOp::Lt: return RelOp::Ge;
        case RelOp::Le: return RelOp::Gt;
        case RelOp::Gt: return RelOp::Le;
        case RelOp::Ge: return RelOp::Lt;
    }
    return RelOp::Eq;
}

bool relOpIsOrder(RelOp op) {
    return op == RelOp::Lt || op == RelOp::Le || op == RelOp::Gt ||
           op == RelOp::Ge;
}

const char* relOpText(RelOp op) {
    switch (op) {
        case RelOp::Eq: return "=";
        case RelOp::Ne: return "/=";
        case RelOp::Lt: return "<";
        case RelOp::Le: return "<=";
        case RelOp::Gt: return ">";
        case RelOp::Ge: return ">=";
    }
    return "?";
}

bool relOpHolds(RelOp op, const Rational& l, const Rational& r) {
    switch (op) {
        case RelOp::Eq: return l == r;
        case RelOp::Ne: return l != r;
        case RelOp::Lt: return l < r;
        case RelOp::Le: return l <= r;
        case RelOp::Gt: return l > r;
        case RelOp::Ge: return l >= r;
    }
    return false;
}

namespace {
FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }
}  // namespace

FormulaPtr fTrue() {
    static FormulaPtr t = make(Formula{FormulaKind::True});
    return t;
}

FormulaPtr fFalse() {
    static FormulaPtr f = make(Formula{FormulaKind::False});
    return f;
}

FormulaPtr fBool(bool v) { return v ? fTrue() : fFalse(); }

FormulaPtr fProp(PropVar p) {
    Formula f;
    f.kind = FormulaKind::Prop;
    f.prop = p;
    return make(std::move(f));
}

FormulaPtr fAtom(Atom a) {
    Formula f;
    f.kind = FormulaKind::AtomF;
    f.atom = std::move(a);
    return make(std::move(f));
}

FormulaPtr fAtom(TermPtr l, RelOp op, TermPtr r) {
    return fAtom(Atom{std::move(l), op, std::move(r)});
}

FormulaPtr fNot(FormulaPtr g) {
    Formula f;
    f.kind = FormulaKind::Not;
    f.a = std::move(g);
    return make(std::move(f));
}

static FormulaPtr binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
    Formula f;
    f.kind = k;
    f.a = std::move(a);
    f.b = std::move(b);
    return make(std::move(f));
}

FormulaPtr fAnd(FormulaPtr a, FormulaPtr b) {
    return binary(FormulaKind::And, std::move(a), std::move(b));
}
FormulaPtr fOr(FormulaPtr a, FormulaPtr b) {
    return binary(FormulaKind::Or, std::move(a), std::move(b));
}
FormulaPtr fImplies(FormulaPtr a, FormulaPtr b) {
    return binary(FormulaKind::Implies, std::move(a), std::move(b));
}

static FormulaPtr quant(FormulaKind k, std::vector<Var> vs, FormulaPtr body) {
    if (vs.empty()) throw ArityMismatch("quantifier needs at least one variable");
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j])
                throw ArityMismatch("duplicate variable in quantifier list: " +
                                    varName(vs[i]));
    Formula f;
    f.kind = k;
    f.vars = std::move(vs);
    f.a = std::move(body);
    return make(std::move(f));
}

FormulaPtr fExists(std::vector<Var> vs, FormulaPtr body) {
    return quant(FormulaKind::Exists, std::move(vs), std::move(body));
}
FormulaPtr fForall(std::vector<Var> vs, FormulaPtr body) {
    return quant(FormulaKind::Forall, std::move(vs), std::move(body));
}

bool formulaEq(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case FormulaKind::True:
        case FormulaKind::False:
            return true;
        case FormulaKind::Prop:
            return a->prop == b->prop;
        case FormulaKind::AtomF:
            return a->atom.op == b->atom.op && termEq(a->atom.lhs, b->atom.lhs) &&
                   termEq(a->atom.rhs, b->atom.rhs);
        case FormulaKind::Not:
            return formulaEq(a->a, b->a);
        case FormulaKind::Exists:
        case FormulaKind::Forall:
            return a->vars == b->vars && formulaEq(a->a, b->a);
        default:
            return formulaEq(a->a, b->a) && formulaEq(a->b, b->b);
    }
}

bool formulaHasDiv(const FormulaPtr& f) {
    if (!f) return false;
    if (f->kind == FormulaKind::AtomF)
        return termHasDiv(f->atom.lhs) || termHasDiv(f->atom.rhs);
    return formulaHasDiv(f->a) || formulaHasDiv(f->b);
}

bool formulaHasProp(const FormulaPtr& f) {
    if (!f) return false;
    if (f->kind == FormulaKind::Prop) return true;
    return formulaHasProp(f->a) || formulaHasProp(f->b);
}

bool formulaHasImplies(const FormulaPtr& f) {
    if (!f) return false;
    if (f->kind == FormulaKind::Implies) return true;
    return formulaHasImplies(f->a) || formulaHasImplies(f->b);
}

bool formulaHasQuantifier(const FormulaPtr& f) {
    if (!f) return false;
    if (f->kind == FormulaKind::Exists || f->kind == FormulaKind::Forall)
        return true;
    return formulaHasQuantifier(f->a) || formulaHasQuantifier(f->b);
}

static void freeVarsRec(const FormulaPtr& f, std::set<Var>& bound,
                        std::set<Var>& out) {
    if (!f) return;
    switch (f->kind) {
        case FormulaKind::AtomF: {
            for (Var v : termVars(f->atom.lhs))
                if (!bound.count(v)) out.insert(v);
            for (Var v : termVars(f->atom.rhs))
                if (!bound.count(v)) out.insert(v);
            return;
        }
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            std::vector<Var> added;
            for (Var v : f->vars)
                if (bound.insert(v).second) added.push_back(v);
            freeVarsRec(f->a, bound, out);
            for (Var v : added) bound.erase(v);
            return;
        }
        default:
            freeVarsRec(f->a, bound, out);
            freeVarsRec(f->b, bound, out);
    }
}

std::set<Var> freeVars(const FormulaPtr& f) {
    std::set<Var> bound, out;
    freeVarsRec(f, bound, out);
    return out;
}

static void allVarsRec(const FormulaPtr& f, std::set<Var>& out) {
    if (!f) return;
    if (f->kind == FormulaKind::AtomF) {
        termVars(f->atom.lhs, out);
        termVars(f->atom.rhs, out);
        return;
    }
    for (Var v : f->vars) out.insert(v);
    allVarsRec(f->a, out);
    allVarsRec(f->b, out);
}

std::set<Var> allVars(const FormulaPtr& f) {
    std::set<Var> out;
    allVarsRec(f, out);
    return out;
}

unsigned BlockStructure::maxLevelOf(const std::set<Var>& vs) const {
    unsigned level = 0;
    for (unsigned i = 0; i < blocks.size(); ++i)
        for (Var v : blocks[i].vars)
            if (vs.count(v)) level = std::max(level, i + 1);
    return level;
}

std::set<Var> BlockStructure::varsFromLevel(unsigned i) const {
    std::set<Var> out;
    for (unsigned j = (i == 0 ? 0 : i - 1); j < blocks.size(); ++j)
        out.insert(blocks[j].vars.begin(), blocks[j].vars.end());
    return out;
}

bool isPrenex(const FormulaPtr& f) {
    FormulaPtr g = f;
    while (g && (g->kind == FormulaKind::Exists || g->kind == FormulaKind::Forall))
        g = g->a;
    return !formulaHasQuantifier(g);
}

BlockStructure blockStructureOf(const FormulaPtr& f) {
    if (!isPrenex(f)) throw NotPrenex("formula is not in prenex form");
    BlockStructure bs;
    FormulaPtr g = f;
    while (g->kind == FormulaKind::Exists || g->kind == FormulaKind::Forall) {
        bool isForall = g->kind == FormulaKind::Forall;
        if (!bs.blocks.empty() && bs.blocks.back().isForall == isForall) {
            auto& vs = bs.blocks.back().vars;
            vs.insert(vs.end(), g->vars.begin(), g->vars.end());
        } else {
            bs.blocks.push_back(Block{isForall, g->vars});
        }
        g = g->a;
    }
    std::set<Var> bound;
    for (const auto& b : bs.blocks) bound.insert(b.vars.begin(), b.vars.end());
    // free variables in order of first appearance in the matrix
    std::set<Var> seen;
    std::function<void(const TermPtr&)> scanTerm = [&](const TermPtr& t) {
        if (!t) return;
        if (t->kind == TermKind::VarRef) {
            if (!bound.count(t->var) && seen.insert(t->var).second)
                bs.free.push_back(t->var);
            return;
        }
        scanTerm(t->a);
        scanTerm(t->b);
    };
    std::function<void(const FormulaPtr&)> scan = [&](const FormulaPtr& h) {
        if (!h) return;
        if (h->kind == FormulaKind::AtomF) {
            scanTerm(h->atom.lhs);
            scanTerm(h->atom.rhs);
            return;
        }
        scan(h->a);
        scan(h->b);
    };
    scan(g);
    return bs;
}

}  // namespace fairclear
