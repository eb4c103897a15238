#include "fairclear/oracle.hpp"

#include "fairclear/errors.hpp"
#include "fairclear/nullify.hpp"
#include "fairclear/peval.hpp"
#include "fairclear/rewrite.hpp"
#include "fairclear/syntax.hpp"
#include "fairclear/translate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

namespace fairclear {

const std::vector<Rational>* CandidateGrid::candidatesFor(Var v) const {
    auto it = values.find(v);
    return it == values.end() ? nullptr : &it->second;
}

void CandidateGrid::addValue(Var v, const Rational& r) {
    auto& vs = values[v];
    if (std::find(vs.begin(), vs.end(), r) == vs.end()) vs.push_back(r);
}

void CandidateGrid::merge(const CandidateGrid& o) {
    for (const auto& [v, vs] : o.values)
        for (const Rational& r : vs) addValue(v, r);
}

std::vector<Rational> baseGridValues() {
    return {Rational(0),          Rational(1),  Rational(-1),
            Rational(2),          Rational(-2), Rational(1, 2),
            Rational(-1, 2)};
}

namespace {

constexpr unsigned kMaxOtherVars = 3;
const Integer kMaxRootCoeff = 1000000;

std::vector<Integer> divisorsOf(const Integer& nIn) {
    std::vector<Integer> out;
    Integer n = abs(nIn);
    if (n == 0 || n > kMaxRootCoeff) return out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    return out;
}

// Rational roots of a univariate polynomial (rational root theorem after
// integer clearing).
std::vector<Rational> rationalRoots(const Polynomial& pIn, IndetId v) {
    std::vector<Rational> roots;
    Polynomial p = pIn.clearedOfFractions();
    if (p.isConstant()) return roots;
    std::vector<Polynomial> cs = p.coefficientsDescIn(v);
    // every coefficient must be constant (univariate in v)
    std::vector<Rational> c;
    for (const auto& q : cs) {
        if (!q.isConstant()) return roots;
        c.push_back(q.constantValue());
    }
    // factor out v^m: constant term at the end of c
    while (!c.empty() && c.back() == 0) {
        c.pop_back();
        if (std::find(roots.begin(), roots.end(), Rational(0)) == roots.end())
            roots.push_back(0);
    }
    if (c.size() < 2) return roots;
    Integer a0 = ratNum(c.back());
    Integer an = ratNum(c.front());
    auto evalAt = [&](const Rational& r) {
        Rational acc = 0;
        for (const Rational& ci : c) acc = acc * r + ci;
        return acc;
    };
    for (const Integer& num : divisorsOf(a0))
        for (const Integer& den : divisorsOf(an))
            for (int sign : {1, -1}) {
                Rational cand(sign * num, den);
                if (evalAt(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

void collectFormulaDenominators(const FormulaPtr& f,
                                std::vector<Polynomial>& out) {
    if (!f) return;
    if (f->kind == FormulaKind::AtomF) {
        for (const auto& side : {f->atom.lhs, f->atom.rhs})
            for (const Polynomial& p : finalDenominators(side)) out.push_back(p);
        return;
    }
    collectFormulaDenominators(f->a, out);
    collectFormulaDenominators(f->b, out);
}

void enumerateAssignments(const std::vector<IndetId>& ids,
                          const std::vector<Rational>& base, std::size_t i,
                          std::map<IndetId, Rational>& env,
                          const std::function<void()>& fn) {
    if (i == ids.size()) {
        fn();
        return;
    }
    for (const Rational& r : base) {
        env[ids[i]] = r;
        enumerateAssignments(ids, base, i + 1, env, fn);
    }
}

}  // namespace

CandidateGrid autoGrid(const FormulaPtr& f) {
    CandidateGrid grid;
    std::vector<Rational> base = baseGridValues();
    for (Var v : allVars(f))
        for (const Rational& r : base) grid.addValue(v, r);

    std::vector<Polynomial> dens;
    collectFormulaDenominators(f, dens);
    for (const Polynomial& p : dens) {
        std::set<IndetId> idSet = p.indeterminates();
        std::vector<IndetId> ids(idSet.begin(), idSet.end());
        for (IndetId v : ids) {
            std::vector<IndetId> others;
            for (IndetId o : ids)
                if (o != v) others.push_back(o);
            if (others.size() > kMaxOtherVars) continue;
            std::map<IndetId, Rational> env;
            enumerateAssignments(others, base, 0, env, [&]() {
                Polynomial uni = p.substitute(env);
                for (const Rational& r : rationalRoots(uni, v))
                    grid.addValue(Var{v}, r);
            });
        }
    }
    return grid;
}

// ---------------- QBF base case ----------------

namespace {

void checkPropOnly(const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::True:
        case FormulaKind::False:
        case FormulaKind::Prop:
            return;
        case FormulaKind::Not:
        case FormulaKind::And:
        case FormulaKind::Or:
            checkPropOnly(f->a);
            if (f->b) checkPropOnly(f->b);
            return;
        default:
            throw RealVarsPresent(
                "qbfBaseEval: atoms or quantifiers present");
    }
}

// occurrence polarity: +1 positive only, -1 negative only, 0 mixed
void polarities(const FormulaPtr& f, bool neg, std::map<PropVar, int>& out) {
    switch (f->kind) {
        case FormulaKind::Prop: {
            int want = neg ? -1 : 1;
            auto it = out.find(f->prop);
            if (it == out.end())
                out[f->prop] = want;
            else if (it->second != want)
                it->second = 0;
            return;
        }
        case FormulaKind::Not:
            polarities(f->a, !neg, out);
            return;
        case FormulaKind::And:
        case FormulaKind::Or:
            polarities(f->a, neg, out);
            polarities(f->b, neg, out);
            return;
        default:
            return;
    }
}

bool evalProps(const FormulaPtr& f, const std::map<PropVar, bool>& env) {
    switch (f->kind) {
        case FormulaKind::True:
            return true;
        case FormulaKind::False:
            return false;
        case FormulaKind::Prop:
            return env.at(f->prop);
        case FormulaKind::Not:
            return !evalProps(f->a, env);
        case FormulaKind::And:
            return evalProps(f->a, env) && evalProps(f->b, env);
        case FormulaKind::Or:
            return evalProps(f->a, env) || evalProps(f->b, env);
        default:
            throw RealVarsPresent("evalProps: non-propositional node");
    }
}

bool bruteForceUV(const FormulaPtr& f, std::vector<PropVar>& us,
                  std::vector<PropVar>& vs, std::map<PropVar, bool>& env,
                  std::size_t ui, std::size_t vi) {
    if (ui < us.size()) {
        // universal over U
        for (bool b : {false, true}) {
            env[us[ui]] = b;
            if (!bruteForceUV(f, us, vs, env, ui + 1, vi)) return false;
        }
        return true;
    }
    if (vi < vs.size()) {
        for (bool b : {false, true}) {
            env[vs[vi]] = b;
            if (bruteForceUV(f, us, vs, env, ui, vi + 1)) return true;
        }
        return false;
    }
    return evalProps(f, env);
}

}  // namespace

bool qbfBaseEval(const FormulaPtr& f) {
    checkPropOnly(f);
    std::map<PropVar, int> pol;
    polarities(f, false, pol);
    bool mixed = false;
    for (const auto& [p, s] : pol)
        if (s == 0) mixed = true;
    if (!mixed) {
        // adversarial U, favourable V: every U literal false, V literal true
        std::map<PropVar, bool> env;
        for (const auto& [p, s] : pol) {
            bool positive = s > 0;
            env[p] = p.kind == PropVar::Kind::U ? !positive : positive;
        }
        return evalProps(f, env);
    }
    // repeated mixed-polarity occurrences: fall back to the definition
    std::vector<PropVar> us, vs;
    for (const auto& [p, s] : pol)
        (p.kind == PropVar::Kind::U ? us : vs).push_back(p);
    std::map<PropVar, bool> env;
    return bruteForceUV(f, us, vs, env, 0, 0);
}

bool qbfBruteForceEval(const Qbf& q) {
    std::function<bool(std::size_t, std::map<PropVar, bool>&)> rec =
        [&](std::size_t i, std::map<PropVar, bool>& env) -> bool {
        if (i == q.prefix.size()) return evalProps(q.matrix, env);
        auto [forall, p] = q.prefix[i];
        bool acc = forall;
        for (bool b : {false, true}) {
            env[p] = b;
            bool r = rec(i + 1, env);
            acc = forall ? (acc && r) : (acc || r);
        }
        return acc;
    };
    std::map<PropVar, bool> env;
    return rec(0, env);
}

std::string printQbf(const Qbf& q) {
    std::ostringstream os;
    for (const auto& [forall, p] : q.prefix)
        os << (forall ? "all " : "ex ") << propVarName(p) << "[";
    os << printFormula(q.matrix);
    for (std::size_t i = 0; i < q.prefix.size(); ++i) os << "]";
    return os.str();
}

// ---------------- fair-SAT over a grid ----------------

namespace {

struct GroundValue {
    bool failed = false;
    Rational value;
};

GroundValue evalGround(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Const:
            return {false, t->value};
        case TermKind::VarRef:
            throw NotClosed("evalGround: free variable " + varName(t->var));
        case TermKind::Neg: {
            GroundValue a = evalGround(t->a);
            if (a.failed) return a;
            return {false, -a.value};
        }
        case TermKind::Pow: {
            GroundValue a = evalGround(t->a);
            if (a.failed) return a;
            Rational v = 1;
            for (unsigned k = 0; k < t->exponent; ++k) v *= a.value;
            return {false, v};
        }
        default: {
            GroundValue a = evalGround(t->a);
            if (a.failed) return a;
            GroundValue b = evalGround(t->b);
            if (b.failed) return b;
            switch (t->kind) {
                case TermKind::Add: return {false, a.value + b.value};
                case TermKind::Sub: return {false, a.value - b.value};
                case TermKind::Mul: return {false, a.value * b.value};
                default:
                    if (b.value == 0) return {true, 0};
                    return {false, a.value / b.value};
            }
        }
    }
}

// Replace every ground atom by its truth value, or by a fresh U when a
// side fails (mirrors the peval rule for the empty remaining prefix).
FormulaPtr foldGroundAtoms(const FormulaPtr& f, FreshState& fs) {
    switch (f->kind) {
        case FormulaKind::AtomF: {
            GroundValue l = evalGround(f->atom.lhs);
            if (l.failed) return fProp(PropVar{PropVar::Kind::U, fs.next++});
            GroundValue r = evalGround(f->atom.rhs);
            if (r.failed) return fProp(PropVar{PropVar::Kind::U, fs.next++});
            return fBool(relOpHolds(f->atom.op, l.value, r.value));
        }
        case FormulaKind::Not:
            return fNot(foldGroundAtoms(f->a, fs));
        case FormulaKind::And:
            return fAnd(foldGroundAtoms(f->a, fs), foldGroundAtoms(f->b, fs));
        case FormulaKind::Or:
            return fOr(foldGroundAtoms(f->a, fs), foldGroundAtoms(f->b, fs));
        default:
            return f;
    }
}

TriState negateTri(TriState t) {
    switch (t) {
        case TriState::FairSat: return TriState::NotFairSatOnGrid;
        case TriState::NotFairSatOnGrid: return TriState::FairSat;
        default: return TriState::Unknown;
    }
}

struct FairSearch {
    const CandidateGrid& grid;
    FreshState& fs;

    FairSatResult run(const FormulaPtr& f) {
        if (!formulaHasQuantifier(f)) {
            FormulaPtr folded = foldGroundAtoms(f, fs);
            bool v = qbfBaseEval(folded);
            return {v ? TriState::FairSat : TriState::NotFairSatOnGrid, {}};
        }
        switch (f->kind) {
            case FormulaKind::Not: {
                // push the negation one step and recurse
                const FormulaPtr& g = f->a;
                switch (g->kind) {
                    case FormulaKind::Not:
                        return run(g->a);
                    case FormulaKind::And:
                        return run(fOr(fNot(g->a), fNot(g->b)));
                    case FormulaKind::Or:
                        return run(fAnd(fNot(g->a), fNot(g->b)));
                    case FormulaKind::Exists:
                        return run(fForall(g->vars, fNot(g->a)));
                    case FormulaKind::Forall:
                        return run(fExists(g->vars, fNot(g->a)));
                    default: {
                        FairSatResult r = run(g);
                        return {negateTri(r.verdict), {}};
                    }
                }
            }
            case FormulaKind::And: {
                FairSatResult l = run(f->a);
                if (l.verdict == TriState::NotFairSatOnGrid) return l;
                FairSatResult r = run(f->b);
                if (r.verdict == TriState::NotFairSatOnGrid) return r;
                if (l.verdict == TriState::Unknown ||
                    r.verdict == TriState::Unknown)
                    return {TriState::Unknown, {}};
                FairSatResult out{TriState::FairSat, l.witness};
                out.witness.insert(out.witness.end(), r.witness.begin(),
                                   r.witness.end());
                return out;
            }
            case FormulaKind::Or: {
                FairSatResult l = run(f->a);
                if (l.verdict == TriState::FairSat) return l;
                FairSatResult r = run(f->b);
                if (r.verdict == TriState::FairSat) return r;
                if (l.verdict == TriState::Unknown ||
                    r.verdict == TriState::Unknown)
                    return {TriState::Unknown, {}};
                return {TriState::NotFairSatOnGrid, {}};
            }
            case FormulaKind::Exists: {
                Var x = f->vars[0];
                FormulaPtr inner =
                    f->vars.size() == 1
                        ? f->a
                        : fExists(std::vector<Var>(f->vars.begin() + 1,
                                                   f->vars.end()),
                                  f->a);
                const std::vector<Rational>* cands = grid.candidatesFor(x);
                if (!cands || cands->empty()) return {TriState::Unknown, {}};
                bool sawUnknown = false;
                for (const Rational& a : *cands) {
                    FormulaPtr h = pevalFormula(inner, x, a, fs);
                    FairSatResult r = run(h);
                    if (r.verdict == TriState::FairSat) {
                        FairSatResult out{TriState::FairSat, {}};
                        out.witness.push_back(WitnessStep{x, a, h});
                        out.witness.insert(out.witness.end(),
                                           r.witness.begin(), r.witness.end());
                        return out;
                    }
                    if (r.verdict == TriState::Unknown) sawUnknown = true;
                }
                return {sawUnknown ? TriState::Unknown
                                   : TriState::NotFairSatOnGrid,
                        {}};
            }
            case FormulaKind::Forall: {
                // F is fair-SAT iff ex x[flop F'] is not
                FairSatResult r = run(fExists(f->vars, flop(f->a)));
                return {negateTri(r.verdict), {}};
            }
            case FormulaKind::Implies:
                throw NotNormalized("fairSatGrid: ==> must be lowered first");
            default:
                throw NotClosed("fairSatGrid: unexpected node");
        }
    }
};

}  // namespace

FairSatResult fairSatGrid(const FormulaPtr& f, const CandidateGrid& grid,
                          FreshState& fs) {
    if (!freeVars(f).empty())
        throw NotClosed("fairSatGrid: formula has free variables");
    if (formulaHasImplies(f))
        throw NotNormalized("fairSatGrid: ==> must be lowered first");
    FairSearch search{grid, fs};
    return search.run(f);
}

FairSatResult fairSatGrid(const FormulaPtr& f, const CandidateGrid& grid) {
    FreshState fs;
    fs.next = std::max(1u, nextFreshIndex(f));
    return fairSatGrid(f, grid, fs);
}

// ---------------- fse ----------------

unsigned countIntroductions(const FormulaPtr& f) {
    if (!f) return 0;
    unsigned n = 0;
    if (f->kind == FormulaKind::Exists || f->kind == FormulaKind::Forall)
        n += static_cast<unsigned>(f->vars.size());
    return n + countIntroductions(f->a) + countIntroductions(f->b);
}

namespace {

void collectPrefix(const FormulaPtr& f,
                   std::vector<std::pair<bool, PropVar>>& prefix,
                   std::set<PropVar>& seen) {
    if (!f) return;
    if (f->kind == FormulaKind::Prop) {
        if (seen.insert(f->prop).second)
            prefix.emplace_back(f->prop.kind == PropVar::Kind::U, f->prop);
        return;
    }
    collectPrefix(f->a, prefix, seen);
    collectPrefix(f->b, prefix, seen);
}

Qbf negateQbf(Qbf q) {
    for (auto& [forall, p] : q.prefix) forall = !forall;
    if (q.matrix->kind == FormulaKind::Not)
        q.matrix = q.matrix->a;
    else
        q.matrix = fNot(q.matrix);
    return q;
}

Qbf fseRec(const FormulaPtr& f, const std::vector<Rational>& alpha,
           std::size_t lo, std::size_t hi, FreshState& fs) {
    if (!formulaHasQuantifier(f)) {
        FormulaPtr folded = foldGroundAtoms(f, fs);
        Qbf q;
        std::set<PropVar> seen;
        collectPrefix(folded, q.prefix, seen);
        q.matrix = folded;
        return q;
    }
    switch (f->kind) {
        case FormulaKind::And:
        case FormulaKind::Or: {
            unsigned nl = countIntroductions(f->a);
            Qbf l = fseRec(f->a, alpha, lo, lo + nl, fs);
            Qbf r = fseRec(f->b, alpha, lo + nl, hi, fs);
            Qbf q;
            q.prefix = l.prefix;
            q.prefix.insert(q.prefix.end(), r.prefix.begin(), r.prefix.end());
            q.matrix = f->kind == FormulaKind::And ? fAnd(l.matrix, r.matrix)
                                                   : fOr(l.matrix, r.matrix);
            return q;
        }
        case FormulaKind::Not:
            return negateQbf(fseRec(f->a, alpha, lo, hi, fs));
        case FormulaKind::Exists: {
            Var x = f->vars[0];
            FormulaPtr inner =
                f->vars.size() == 1
                    ? f->a
                    : fExists(std::vector<Var>(f->vars.begin() + 1,
                                               f->vars.end()),
                              f->a);
            FormulaPtr h = pevalFormula(inner, x, alpha[lo], fs);
            return fseRec(h, alpha, lo + 1, hi, fs);
        }
        case FormulaKind::Forall:
            return negateQbf(
                fseRec(fExists(f->vars, flop(f->a)), alpha, lo, hi, fs));
        default:
            throw NotPevalSafe("fse: unexpected connective above quantifier");
    }
}

}  // namespace

Qbf fse(const FormulaPtr& f, const std::vector<Rational>& alpha) {
    if (!freeVars(f).empty()) throw NotClosed("fse: formula has free variables");
    unsigned n = countIntroductions(f);
    if (alpha.size() != n)
        throw ArityMismatch("fse: expected " + std::to_string(n) +
                            " values, got " + std::to_string(alpha.size()));
    FreshState fs{std::max(1u, nextFreshIndex(f))};
    return fseRec(f, alpha, 0, alpha.size(), fs);
}

// ---------------- sampling checks ----------------

namespace {

// quantified variables of f in order of first appearance, with their kind
void introductionOrder(const FormulaPtr& f,
                       std::vector<std::pair<bool, Var>>& out) {
    if (!f) return;
    if (f->kind == FormulaKind::Exists || f->kind == FormulaKind::Forall)
        for (Var v : f->vars)
            out.emplace_back(f->kind == FormulaKind::Forall, v);
    introductionOrder(f->a, out);
    introductionOrder(f->b, out);
}

// free variables of f in order of first appearance
std::vector<Var> freeVarOrder(const FormulaPtr& f) {
    std::set<Var> fv = freeVars(f);
    std::vector<Var> order;
    std::set<Var> seen;
    std::function<void(const TermPtr&)> scanTerm = [&](const TermPtr& t) {
        if (!t) return;
        if (t->kind == TermKind::VarRef) {
            if (fv.count(t->var) && seen.insert(t->var).second)
                order.push_back(t->var);
            return;
        }
        scanTerm(t->a);
        scanTerm(t->b);
    };
    std::function<void(const FormulaPtr&)> scan = [&](const FormulaPtr& g) {
        if (!g) return;
        if (g->kind == FormulaKind::AtomF) {
            scanTerm(g->atom.lhs);
            scanTerm(g->atom.rhs);
            return;
        }
        scan(g->a);
        scan(g->b);
    };
    scan(f);
    return order;
}

FormulaPtr clearFormulaAtoms(const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::AtomF:
            return fAtom(clearAtom(f->atom));
        case FormulaKind::Not:
            return fNot(clearFormulaAtoms(f->a));
        case FormulaKind::And:
            return fAnd(clearFormulaAtoms(f->a), clearFormulaAtoms(f->b));
        case FormulaKind::Or:
            return fOr(clearFormulaAtoms(f->a), clearFormulaAtoms(f->b));
        case FormulaKind::Exists:
            return fExists(f->vars, clearFormulaAtoms(f->a));
        case FormulaKind::Forall:
            return fForall(f->vars, clearFormulaAtoms(f->a));
        default:
            return f;
    }
}

}  // namespace

bool checkFsfse(const FormulaPtr& f, const CandidateGrid& grid) {
    FairSatResult lhs = fairSatGrid(f, grid);
    if (lhs.verdict == TriState::Unknown) return true;

    std::vector<std::pair<bool, Var>> intro;
    introductionOrder(f, intro);
    std::vector<Rational> alpha(intro.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == intro.size()) return qbfBruteForceEval(fse(f, alpha));
        const std::vector<Rational>* cands = grid.candidatesFor(intro[i].second);
        if (!cands || cands->empty())
            throw NotClosed("checkFsfse: grid misses a variable");
        bool forall = intro[i].first;
        for (const Rational& a : *cands) {
            alpha[i] = a;
            bool r = rec(i + 1);
            if (forall && !r) return false;
            if (!forall && r) return true;
        }
        return forall;
    };
    bool rhs = rec(0);
    return (lhs.verdict == TriState::FairSat) == rhs;
}

bool equivOnSamples(const FormulaPtr& f, const FormulaPtr& g,
                    const std::vector<std::vector<Rational>>& points) {
    std::vector<Var> order = freeVarOrder(f);
    CandidateGrid grid = autoGrid(f);
    grid.merge(autoGrid(g));
    for (const auto& pt : points) {
        if (pt.size() != order.size())
            throw LengthMismatch("equivOnSamples: point arity mismatch");
        FreshState fsF{nextFreshIndex(f)}, fsG{nextFreshIndex(g)};
        FormulaPtr fp = pevalpFormula(f, order, pt, fsF);
        FormulaPtr gp = pevalpFormula(g, order, pt, fsG);
        TriState a = fairSatGrid(fp, grid).verdict;
        TriState b = fairSatGrid(gp, grid).verdict;
        if (a == TriState::Unknown || b == TriState::Unknown) continue;
        if (a != b) return false;
    }
    return true;
}

bool checkWellDefinedOnGrid(const FormulaPtr& f, const CandidateGrid& grid) {
    FormulaPtr f0 = normalizeDivs(f);
    FormulaPtr cleared = clearFormulaAtoms(f0);
    std::vector<Var> order = freeVarOrder(f0);
    for (Var v : order)
        if (!grid.candidatesFor(v))
            throw NotClosed("checkWellDefinedOnGrid: grid misses free variable " +
                            varName(v));

    std::vector<Rational> point(order.size());
    bool agree = true;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (!agree) return;
        if (i == order.size()) {
            FreshState fs1{1}, fs2{nextFreshIndex(f0)};
            FormulaPtr lhsF = pevalpFormula(cleared, order, point, fs1);
            FormulaPtr rhsF = pevalpFormula(f0, order, point, fs2);
            TriState a = fairSatGrid(lhsF, grid).verdict;
            TriState b = fairSatGrid(rhsF, grid).verdict;
            if (a == TriState::Unknown || b == TriState::Unknown) return;
            if (a != b) agree = false;
            return;
        }
        for (const Rational& r : *grid.candidatesFor(order[i])) {
            point[i] = r;
            rec(i + 1);
        }
    };
    rec(0);
    return agree;
}

}  // namespace fairclear
