#include "fairclear/syntax.hpp"

#include <sstream>

namespace fairclear {

namespace {

bool isPowOfVar(const TermPtr& t) {
    return t->kind == TermKind::Pow && t->a->kind == TermKind::VarRef;
}

// Can `r` be written directly after `l` with a space (juxtaposed product)?
bool juxtaposable(const TermPtr& r) {
    return r->kind == TermKind::VarRef || isPowOfVar(r);
}

void printTermRec(std::ostream& os, const TermPtr& t);

void printWithParens(std::ostream& os, const TermPtr& t, bool parens) {
    if (parens) os << '(';
    printTermRec(os, t);
    if (parens) os << ')';
}

bool isNegConst(const TermPtr& t) {
    return t->kind == TermKind::Const && t->value < 0;
}

void printTermRec(std::ostream& os, const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Const:
            os << ratToString(t->value);
            return;
        case TermKind::VarRef:
            os << varName(t->var);
            return;
        case TermKind::Neg:
            // anything but a bare variable is ambiguous after '-' in some
            // context (e.g. -x^2 regroups inside a product), so parenthesize
            os << '-';
            printWithParens(os, t->a, t->a->kind != TermKind::VarRef);
            return;
        case TermKind::Add:
        case TermKind::Sub: {
            printTermRec(os, t->a);
            os << (t->kind == TermKind::Add ? " + " : " - ");
            // right-nested additive terms and negative leads need parens to
            // round-trip structurally
            const TermPtr& r = t->b;
            bool rp = r->kind == TermKind::Add || r->kind == TermKind::Sub ||
                      r->kind == TermKind::Neg || isNegConst(r);
            printWithParens(os, r, rp);
            return;
        }
        case TermKind::Mul: {
            const TermPtr& l = t->a;
            const TermPtr& r = t->b;
            bool lparens = l->kind == TermKind::Add || l->kind == TermKind::Sub ||
                           l->kind == TermKind::Neg;
            printWithParens(os, l, lparens);
            if (juxtaposable(r)) {
                os << ' ';
                printTermRec(os, r);
            } else {
                os << '*';
                bool rp = r->kind == TermKind::Add || r->kind == TermKind::Sub ||
                          r->kind == TermKind::Neg || r->kind == TermKind::Mul ||
                          r->kind == TermKind::Div || isNegConst(r) ||
                          (r->kind == TermKind::Const && ratDen(r->value) != 1);
                printWithParens(os, r, rp);
            }
            return;
        }
        case TermKind::Div: {
            const TermPtr& l = t->a;
            const TermPtr& r = t->b;
            bool lp = l->kind == TermKind::Add || l->kind == TermKind::Sub ||
                      l->kind == TermKind::Neg;
            printWithParens(os, l, lp);
            os << '/';
            bool rp = r->kind == TermKind::Add || r->kind == TermKind::Sub ||
                      r->kind == TermKind::Neg || r->kind == TermKind::Mul ||
                      r->kind == TermKind::Div || isNegConst(r) ||
                      (r->kind == TermKind::Const && ratDen(r->value) != 1);
            printWithParens(os, r, rp);
            return;
        }
        case TermKind::Pow: {
            const TermPtr& base = t->a;
            bool bp = !(base->kind == TermKind::VarRef ||
                        (base->kind == TermKind::Const && base->value >= 0 &&
                         ratDen(base->value) == 1));
            printWithParens(os, base, bp);
            os << '^' << t->exponent;
            return;
        }
    }
}

enum class FLevel { Or, And, Unit };

void printFormulaRec(std::ostream& os, const FormulaPtr& f, FLevel level);

void printBracketed(std::ostream& os, const FormulaPtr& f, bool brackets) {
    if (brackets) os << '[';
    printFormulaRec(os, f, FLevel::Or);
    if (brackets) os << ']';
}

bool needsBracketAt(const FormulaPtr& f, FLevel level) {
    switch (f->kind) {
        case FormulaKind::Or:
            return level != FLevel::Or;
        case FormulaKind::And:
            return level == FLevel::Unit;
        case FormulaKind::Implies:
            // ==> sits inside unit; chains reparse right-associatively
            return level == FLevel::Unit;
        default:
            return false;
    }
}

void printFormulaRec(std::ostream& os, const FormulaPtr& f, FLevel level) {
    switch (f->kind) {
        case FormulaKind::True:
            os << "true";
            return;
        case FormulaKind::False:
            os << "false";
            return;
        case FormulaKind::Prop:
            os << propVarName(f->prop);
            return;
        case FormulaKind::AtomF:
            os << printAtom(f->atom);
            return;
        case FormulaKind::Not:
            os << '~';
            printBracketed(os, f->a, needsBracketAt(f->a, FLevel::Unit));
            return;
        case FormulaKind::And:
            printBracketed(os, f->a, needsBracketAt(f->a, FLevel::And));
            os << " /\\ ";
            // right-nested conjunctions need brackets to round-trip
            printBracketed(os, f->b,
                           f->b->kind == FormulaKind::And ||
                               needsBracketAt(f->b, FLevel::And));
            return;
        case FormulaKind::Or:
            printBracketed(os, f->a, needsBracketAt(f->a, FLevel::Or));
            os << " \\/ ";
            printBracketed(os, f->b,
                           f->b->kind == FormulaKind::Or ||
                               needsBracketAt(f->b, FLevel::Or));
            return;
        case FormulaKind::Implies:
            printBracketed(os, f->a,
                           f->a->kind == FormulaKind::Implies ||
                               needsBracketAt(f->a, FLevel::Unit));
            os << " ==> ";
            printBracketed(os, f->b, needsBracketAt(f->b, FLevel::Unit));
            return;
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            os << (f->kind == FormulaKind::Forall ? "all " : "ex ");
            for (std::size_t i = 0; i < f->vars.size(); ++i) {
                if (i) os << ',';
                os << varName(f->vars[i]);
            }
            os << '[';
            printFormulaRec(os, f->a, FLevel::Or);
            os << ']';
            return;
        }
    }
}

}  // namespace

std::string propVarName(PropVar p) {
    return (p.kind == PropVar::Kind::U ? "U" : "V") + std::to_string(p.index);
}

std::string printTerm(const TermPtr& t) {
    std::ostringstream os;
    printTermRec(os, t);
    return os.str();
}

std::string printAtom(const Atom& a) {
    std::ostringstream os;
    printTermRec(os, a.lhs);
    os << ' ' << relOpText(a.op) << ' ';
    printTermRec(os, a.rhs);
    return os.str();
}

std::string printFormula(const FormulaPtr& f) {
    std::ostringstream os;
    printFormulaRec(os, f, FLevel::Or);
    return os.str();
}

}  // namespace fairclear
