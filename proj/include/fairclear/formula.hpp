#pragma once

#include "fairclear/term.hpp"

#include <memory>
#include <vector>

namespace fairclear {

enum class RelOp { Eq, Ne, Lt, Le, Gt, Ge };

// The involution used when a relation's sides are multiplied by a quantity
// of unknown sign: order relations swap direction, =/!= are fixed.
RelOp relOpFlop(RelOp op);
bool relOpIsOrder(RelOp op);  // < <= > >=
const char* relOpText(RelOp op);
bool relOpHolds(RelOp op, const Rational& l, const Rational& r);

struct Atom {
    TermPtr lhs;
    RelOp op = RelOp::Eq;
    TermPtr rhs;
};

// Propositional placeholder: U-variables stand for "illegal here", their
// V-duals appear under flop.  Identity is (kind, index).
struct PropVar {
    enum class Kind { U, V };
    Kind kind = Kind::U;
    unsigned index = 0;

    friend bool operator==(PropVar a, PropVar b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator<(PropVar a, PropVar b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.index < b.index;
    }
};

enum class FormulaKind {
    True,
    False,
    Prop,
    AtomF,
    Not,
    And,
    Or,
    Implies,
    Exists,
    Forall
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    FormulaKind kind;
    PropVar prop;           // Prop
    Atom atom;              // AtomF
    FormulaPtr a, b;        // Not uses a; quantifiers use a as body
    std::vector<Var> vars;  // Exists / Forall; nonempty
};

FormulaPtr fTrue();
FormulaPtr fFalse();
FormulaPtr fBool(bool v);
FormulaPtr fProp(PropVar p);
FormulaPtr fAtom(Atom a);
FormulaPtr fAtom(TermPtr l, RelOp op, TermPtr r);
FormulaPtr fNot(FormulaPtr f);
FormulaPtr fAnd(FormulaPtr a, FormulaPtr b);
FormulaPtr fOr(FormulaPtr a, FormulaPtr b);
FormulaPtr fImplies(FormulaPtr a, FormulaPtr b);
FormulaPtr fExists(std::vector<Var> vs, FormulaPtr body);
FormulaPtr fForall(std::vector<Var> vs, FormulaPtr body);

bool formulaEq(const FormulaPtr& a, const FormulaPtr& b);
bool formulaHasDiv(const FormulaPtr& f);
bool formulaHasProp(const FormulaPtr& f);
bool formulaHasImplies(const FormulaPtr& f);
bool formulaHasQuantifier(const FormulaPtr& f);
std::set<Var> freeVars(const FormulaPtr& f);
std::set<Var> allVars(const FormulaPtr& f);

// Counter for generated U/V indices (and generated variable names).
struct FreshState {
    unsigned next = 1;
};

// Quantifier blocks of a prenex formula, outermost first.  Adjacent blocks
// with the same quantifier are merged; free variables sit conceptually
// before block 1 (level 0).
struct Block {
    bool isForall = false;
    std::vector<Var> vars;
};

struct BlockStructure {
    std::vector<Block> blocks;
    std::vector<Var> free;  // free variables, in order of first use

    // Smallest block index (1-based) whose variables intersect vs; 0 when
    // only free variables occur.  Returns the max over vs.
    unsigned maxLevelOf(const std::set<Var>& vs) const;
    // Union of variables of blocks i..k (1-based); empty when i == k+1.
    std::set<Var> varsFromLevel(unsigned i) const;
};

// Requires f prenex; throws NotPrenex otherwise.
BlockStructure blockStructureOf(const FormulaPtr& f);
bool isPrenex(const FormulaPtr& f);

}  // namespace fairclear
