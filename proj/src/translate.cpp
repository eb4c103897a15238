#include "fairclear/translate.hpp"

#include "fairclear/errors.hpp"
#include "fairclear/nullify.hpp"
#include "fairclear/syntax.hpp"

#include <algorithm>
#include <map>

namespace fairclear {

namespace {

// One division subterm, interned structurally so that equal div terms share
// an indeterminate (and are eliminated together).
struct DivHandle {
    TermPtr source;
    Polynomial num;  // over variables and other handles
    Polynomial den;
    bool processed = false;
};

struct HandleTable {
    std::vector<DivHandle> handles;

    IndetId idOf(std::size_t idx) const {
        return kHandleBit | static_cast<IndetId>(idx);
    }

    Polynomial convert(const TermPtr& t) {
        switch (t->kind) {
            case TermKind::Const:
                return Polynomial::constant(t->value);
            case TermKind::VarRef:
                return Polynomial::indeterminate(t->var.id);
            case TermKind::Neg:
                return -convert(t->a);
            case TermKind::Pow:
                return convert(t->a).pow(t->exponent);
            case TermKind::Add:
                return convert(t->a) + convert(t->b);
            case TermKind::Sub:
                return convert(t->a) - convert(t->b);
            case TermKind::Mul:
                return convert(t->a) * convert(t->b);
            case TermKind::Div: {
                for (std::size_t i = 0; i < handles.size(); ++i)
                    if (termEq(handles[i].source, t))
                        return Polynomial::indeterminate(idOf(i));
                // children first, so inner divs get smaller handle ids
                Polynomial num = convert(t->a);
                Polynomial den = convert(t->b);
                handles.push_back(DivHandle{t, num, den});
                return Polynomial::indeterminate(idOf(handles.size() - 1));
            }
        }
        return Polynomial();
    }

    bool mentionsUnprocessed(const Polynomial& p) const {
        for (IndetId id : p.indeterminates())
            if ((id & kHandleBit) && !handles[id & ~kHandleBit].processed)
                return true;
        return false;
    }

    // nesting level of each unprocessed handle: 0 at the atom's top level,
    // one more per enclosing denominator
    std::vector<unsigned> nestLevels() const {
        std::vector<unsigned> level(handles.size(), 0);
        for (std::size_t round = 0; round < handles.size(); ++round) {
            bool changed = false;
            for (std::size_t i = 0; i < handles.size(); ++i) {
                if (handles[i].processed) continue;
                for (IndetId id : handles[i].den.indeterminates()) {
                    if (!(id & kHandleBit)) continue;
                    std::size_t j = id & ~kHandleBit;
                    if (handles[j].processed) continue;
                    if (level[j] < level[i] + 1) {
                        level[j] = level[i] + 1;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        return level;
    }
};

// Substitute div(q,p) into a polynomial containing its handle:
// sum c_m h^m (degree M) becomes sum c_m q^m p^(exp-m), with exp = M for a
// denominator rewrite, or the parity-adjusted j' for an atom clearing.
Polynomial eliminateHandle(const Polynomial& host, IndetId h,
                           const Polynomial& q, const Polynomial& p,
                           unsigned exp) {
    std::vector<Polynomial> cs = host.coefficientsDescIn(h);
    unsigned M = static_cast<unsigned>(cs.size()) - 1;
    Polynomial out;
    for (unsigned d = 0; d <= M; ++d) {
        const Polynomial& c = cs[M - d];  // coefficient of h^d
        if (c.isZero()) continue;
        out = out + c * q.pow(d) * p.pow(exp - d);
    }
    return out;
}

// Inputs must be div-normalized: every division is a reciprocal 1/p.
void checkUnitNumerators(const TermPtr& t) {
    if (!t) return;
    if (t->kind == TermKind::Div &&
        !(t->a->kind == TermKind::Const && t->a->value == 1))
        throw NotNormalized("clearAtom: non-unit numerator; "
                            "apply div normalization first");
    checkUnitNumerators(t->a);
    checkUnitNumerators(t->b);
}

// Shared core of Algorithms 1 and 2: eliminates every division from the
// atom, reporting each denominator polynomial (div-free, innermost first)
// as it goes, and returns the final all-on-the-left polynomial.
Polynomial clearAtomCore(const Atom& a,
                         const std::function<void(const Polynomial&)>& onDen) {
    checkUnitNumerators(a.lhs);
    checkUnitNumerators(a.rhs);
    HandleTable ht;
    Polynomial P = ht.convert(a.lhs) - ht.convert(a.rhs);
    bool order = relOpIsOrder(a.op);

    for (;;) {
        // candidates: unprocessed handles whose denominator is div-free
        auto levels = ht.nestLevels();
        int pick = -1;
        for (std::size_t i = 0; i < ht.handles.size(); ++i) {
            if (ht.handles[i].processed) continue;
            if (ht.mentionsUnprocessed(ht.handles[i].den)) continue;
            if (pick < 0 || levels[i] > levels[pick]) pick = static_cast<int>(i);
        }
        if (pick < 0) break;
        DivHandle& h = ht.handles[pick];
        h.processed = true;
        const IndetId hid = ht.idOf(pick);
        if (onDen) onDen(h.den);

        // absorb into every enclosing denominator
        for (std::size_t i = 0; i < ht.handles.size(); ++i) {
            if (ht.handles[i].processed) continue;
            DivHandle& outer = ht.handles[i];
            if (outer.den.mentions(hid)) {
                unsigned M = outer.den.degreeIn(hid);
                outer.num = outer.num * h.den.pow(M);
                outer.den = eliminateHandle(outer.den, hid, h.num, h.den, M);
            }
            if (outer.num.mentions(hid)) {
                // normalized numerators are division-free; rewrites keep
                // them that way
                throw NotNormalized("clearAtom: division inside a numerator");
            }
        }
        // clear from the atom itself
        unsigned M = P.degreeIn(hid);
        unsigned jp = (M % 2 == 1 && order) ? M + 1 : M;
        P = eliminateHandle(P, hid, h.num, h.den, jp);
    }
    return P.clearedOfFractions();
}

}  // namespace

Atom clearAtom(const Atom& a,
               const std::function<void(const Polynomial&)>& onDenominator) {
    if (!termHasDiv(a.lhs) && !termHasDiv(a.rhs)) return a;
    Polynomial P = clearAtomCore(a, onDenominator);
    return Atom{polynomialToTerm(P), a.op, tConst(0)};
}

namespace {

// Guard bookkeeping: a disjunct is a conjunction of equations e = 0.
struct Disjunct {
    std::vector<Polynomial> eqs;
};

bool sameDisjunct(const Disjunct& a, const Disjunct& b) {
    if (a.eqs.size() != b.eqs.size()) return false;
    std::vector<bool> used(b.eqs.size(), false);
    for (const auto& e : a.eqs) {
        bool found = false;
        for (std::size_t i = 0; i < b.eqs.size(); ++i) {
            if (!used[i] && b.eqs[i] == e) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

FormulaPtr disjunctFormula(const Disjunct& d) {
    FormulaPtr out;
    for (const Polynomial& e : d.eqs) {
        FormulaPtr eq = fAtom(polynomialToTerm(e), RelOp::Eq, tConst(0));
        out = out ? fAnd(out, eq) : eq;
    }
    return out;
}

FormulaPtr guardFormula(const std::vector<Disjunct>& g, bool isTrue) {
    if (isTrue) return fTrue();
    FormulaPtr out;
    for (const Disjunct& d : g) {
        FormulaPtr df = disjunctFormula(d);
        out = out ? fOr(out, df) : df;
    }
    return out ? out : fFalse();
}

// ~G in positive form: a conjunction over disjuncts of (e1 /= 0 \/ ...).
FormulaPtr negatedGuardFormula(const std::vector<Disjunct>& g) {
    FormulaPtr out;
    for (const Disjunct& d : g) {
        FormulaPtr df;
        for (const Polynomial& e : d.eqs) {
            FormulaPtr ne = fAtom(polynomialToTerm(e), RelOp::Ne, tConst(0));
            df = df ? fOr(df, ne) : ne;
        }
        out = out ? fAnd(out, df) : df;
    }
    return out ? out : fTrue();
}

struct GuardState {
    bool isTrue = false;  // TrueC dominated
    std::vector<Disjunct> disjuncts;
};

}  // namespace

FormulaPtr simplifyGuard(const FormulaPtr& w, const FormulaPtr& context) {
    // collect disjuncts of w and of context
    std::vector<FormulaPtr> ws, cs;
    std::function<void(const FormulaPtr&, std::vector<FormulaPtr>&)> split =
        [&](const FormulaPtr& f, std::vector<FormulaPtr>& out) {
            if (f->kind == FormulaKind::Or) {
                split(f->a, out);
                split(f->b, out);
            } else {
                out.push_back(f);
            }
        };
    split(w, ws);
    if (context) split(context, cs);

    std::vector<FormulaPtr> kept;
    for (const auto& d : ws) {
        if (d->kind == FormulaKind::False) continue;
        if (d->kind == FormulaKind::True) return fTrue();
        bool drop = false;
        for (const auto& prev : kept)
            if (formulaEq(prev, d)) drop = true;
        for (const auto& c : cs)
            if (formulaEq(c, d)) drop = true;
        if (!drop) kept.push_back(d);
    }
    if (kept.empty()) return fFalse();
    FormulaPtr out = kept[0];
    for (std::size_t i = 1; i < kept.size(); ++i) out = fOr(out, kept[i]);
    return out;
}

namespace {

// Context-aware refinement licensed by Algorithm 2's "W or an appropriate
// simplification": under ~C, the polynomial of any single-equation context
// disjunct is nonzero, so it can be cancelled out of an equation exactly.
// A quotient that is a nonzero constant makes that equation — hence its
// whole conjunction — impossible under ~C.
bool refineDisjunct(Disjunct& d, const std::vector<Disjunct>& context) {
    for (auto& e : d.eqs) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& c : context) {
                if (c.eqs.size() != 1) continue;
                const Polynomial& q = c.eqs[0];
                if (q.isConstant()) continue;
                if (auto r = e.dividedExactlyBy(q)) {
                    if (r->isConstant()) {
                        if (r->constantValue() != 0) return false;  // drop
                        continue;
                    }
                    e = r->clearedOfFractions();
                    changed = true;
                }
            }
        }
    }
    return true;
}

GuardState simplifyAgainst(const std::vector<NullCondition>& recorded,
                           const std::vector<Disjunct>& context) {
    GuardState g;
    for (const auto& n : recorded) {
        if (n.kind == NullCondition::Kind::False) continue;
        if (n.kind == NullCondition::Kind::True) {
            g.isTrue = true;
            g.disjuncts.clear();
            return g;
        }
        Disjunct d{n.eqs};
        if (!refineDisjunct(d, context)) continue;
        bool drop = false;
        for (const auto& prev : g.disjuncts)
            if (sameDisjunct(prev, d)) drop = true;
        for (const auto& c : context)
            if (sameDisjunct(c, d)) drop = true;
        if (!drop) g.disjuncts.push_back(d);
    }
    return g;
}

}  // namespace

FormulaPtr translateAtom(const BlockStructure& bs, const Atom& a,
                         GuardLadder* trace) {
    const unsigned k = static_cast<unsigned>(bs.blocks.size());
    {
        std::set<Var> known(bs.free.begin(), bs.free.end());
        for (const auto& b : bs.blocks)
            known.insert(b.vars.begin(), b.vars.end());
        std::set<Var> used = termVars(a.lhs);
        termVars(a.rhs, used);
        for (Var v : used)
            if (!known.count(v))
                throw BlockMismatch("translateAtom: variable " + varName(v) +
                                    " not in block structure");
    }

    if (!termHasDiv(a.lhs) && !termHasDiv(a.rhs)) {
        if (trace) {
            trace->N.assign(k + 2, {});
            trace->G.assign(k + 2, fFalse());
            trace->H.assign(k + 2, fAtom(a));
            trace->cleared = a;
        }
        return fAtom(a);
    }

    // record nullifying conditions per level while clearing
    std::vector<std::vector<NullCondition>> N(k + 2);
    std::vector<Polynomial> dens;
    Polynomial P = clearAtomCore(a, [&](const Polynomial& p) {
        dens.push_back(p);
        std::set<Var> pv;
        for (IndetId id : p.indeterminates())
            if (!(id & kHandleBit)) pv.insert(Var{id});
        unsigned s = bs.maxLevelOf(pv);
        for (unsigned i = 1; i <= s + 1; ++i)
            N[i].push_back(nullsysCondition(p, i, bs));
    });
    Atom cleared{polynomialToTerm(P), a.op, tConst(0)};

    if (trace) {
        trace->N.assign(k + 2, {});
        trace->G.assign(k + 2, nullptr);
        trace->H.assign(k + 2, nullptr);
        trace->cleared = cleared;
        trace->denominators = dens;
        for (unsigned i = 1; i <= k + 1; ++i)
            for (const auto& n : N[i]) {
                FormulaPtr cond;
                switch (n.kind) {
                    case NullCondition::Kind::False: cond = fFalse(); break;
                    case NullCondition::Kind::True: cond = fTrue(); break;
                    case NullCondition::Kind::Eqs:
                        cond = disjunctFormula(Disjunct{n.eqs});
                        break;
                }
                bool dup = false;  // the N_i are sets
                for (const auto& prev : trace->N[i])
                    if (formulaEq(prev, cond)) dup = true;
                if (!dup) trace->N[i].push_back(cond);
            }
    }

    // guards under accumulated context, then the ladder from the inside out
    std::vector<GuardState> G(k + 2);
    std::vector<Disjunct> context;
    bool contextTrue = false;
    for (unsigned i = 1; i <= k + 1; ++i) {
        G[i] = contextTrue ? GuardState{} : simplifyAgainst(N[i], context);
        if (trace) trace->G[i] = guardFormula(G[i].disjuncts, G[i].isTrue);
        if (G[i].isTrue) contextTrue = true;
        for (const auto& d : G[i].disjuncts) {
            bool dup = false;
            for (const auto& c : context)
                if (sameDisjunct(c, d)) dup = true;
            if (!dup) context.push_back(d);
        }
    }

    FormulaPtr H = fAtom(cleared);
    if (trace) trace->H[k + 1] = H;
    for (unsigned i = k + 1; i >= 1; --i) {
        // block i-1 binds the variables evaluated just before level i;
        // level 0 (free variables) behaves existentially
        bool forall = i >= 2 && bs.blocks[i - 2].isForall;
        const GuardState& g = G[i];
        if (forall) {
            if (g.isTrue)
                H = fTrue();
            else if (!g.disjuncts.empty())
                H = fOr(guardFormula(g.disjuncts, false), H);
        } else {
            if (g.isTrue)
                H = fFalse();
            else if (!g.disjuncts.empty())
                H = fAnd(negatedGuardFormula(g.disjuncts), H);
        }
        if (trace) trace->H[i - 1] = H;
    }
    return H;
}

namespace {

void checkTranslatable(const FormulaPtr& f) {
    if (formulaHasProp(f))
        throw PropVarPresent("translateFormula: U/V variables present");
    if (formulaHasImplies(f))
        throw NotPositivePrenex("translateFormula: ==> present");
    if (!isPrenex(f))
        throw NotPositivePrenex("translateFormula: input not prenex");
    std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
        if (!g) return;
        if (g->kind == FormulaKind::Not)
            throw NotPositivePrenex("translateFormula: input not positive");
        walk(g->a);
        walk(g->b);
    };
    walk(f);
}

FormulaPtr mapMatrix(const FormulaPtr& f,
                     const std::function<FormulaPtr(const Atom&)>& fn) {
    switch (f->kind) {
        case FormulaKind::AtomF:
            return termHasDiv(f->atom.lhs) || termHasDiv(f->atom.rhs)
                       ? fn(f->atom)
                       : f;
        case FormulaKind::And:
            return fAnd(mapMatrix(f->a, fn), mapMatrix(f->b, fn));
        case FormulaKind::Or:
            return fOr(mapMatrix(f->a, fn), mapMatrix(f->b, fn));
        case FormulaKind::Exists:
            return fExists(f->vars, mapMatrix(f->a, fn));
        case FormulaKind::Forall:
            return fForall(f->vars, mapMatrix(f->a, fn));
        default:
            return f;
    }
}

}  // namespace

FormulaPtr translateFormula(const FormulaPtr& f, ClearMode mode,
                            std::vector<GuardLadder>* traces) {
    checkTranslatable(f);
    BlockStructure bs = blockStructureOf(f);
    return mapMatrix(f, [&](const Atom& a) -> FormulaPtr {
        switch (mode) {
            case ClearMode::NoGuard:
                return fAtom(clearAtom(a));
            case ClearMode::Naive: {
                std::vector<Polynomial> dens;
                Atom c = clearAtom(a, [&](const Polynomial& p) {
                    Polynomial q = p.clearedOfFractions();
                    for (const auto& prev : dens)
                        if (prev == q) return;
                    dens.push_back(q);
                });
                FormulaPtr out = fAtom(c);
                for (const Polynomial& p : dens) {
                    if (p.isConstant()) {
                        if (p.constantValue() == 0) out = fAnd(out, fFalse());
                        continue;  // nonzero constant: trivially true guard
                    }
                    out = fAnd(out,
                               fAtom(polynomialToTerm(p), RelOp::Ne, tConst(0)));
                }
                return out;
            }
            case ClearMode::Fair: {
                GuardLadder trace;
                FormulaPtr h = translateAtom(bs, a, traces ? &trace : nullptr);
                if (traces) traces->push_back(std::move(trace));
                return h;
            }
        }
        return fAtom(a);
    });
}

}  // namespace fairclear
