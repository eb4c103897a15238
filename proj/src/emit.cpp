#include "fairclear/errors.hpp"
#include "fairclear/syntax.hpp"

#include <sstream>

namespace fairclear {

namespace {

void emitSmt2Term(std::ostream& os, const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Const: {
            const Rational& v = t->value;
            bool neg = v < 0;
            if (neg) os << "(- ";
            Rational a = neg ? Rational(-v) : v;
            if (ratDen(a) == 1)
                os << ratNum(a).str();
            else
                os << "(/ " << ratNum(a).str() << " " << ratDen(a).str() << ")";
            if (neg) os << ")";
            return;
        }
        case TermKind::VarRef:
            os << varName(t->var);
            return;
        case TermKind::Neg:
            os << "(- ";
            emitSmt2Term(os, t->a);
            os << ")";
            return;
        case TermKind::Add:
        case TermKind::Sub:
        case TermKind::Mul:
        case TermKind::Div: {
            const char* op = t->kind == TermKind::Add   ? "+"
                             : t->kind == TermKind::Sub ? "-"
                             : t->kind == TermKind::Mul ? "*"
                                                        : "/";
            os << "(" << op << " ";
            emitSmt2Term(os, t->a);
            os << " ";
            emitSmt2Term(os, t->b);
            os << ")";
            return;
        }
        case TermKind::Pow: {
            // no standard power operator in NRA scripts; expand
            if (t->exponent == 1) {
                emitSmt2Term(os, t->a);
                return;
            }
            os << "(* ";
            for (unsigned k = 0; k < t->exponent; ++k) {
                if (k) os << " ";
                emitSmt2Term(os, t->a);
            }
            os << ")";
            return;
        }
    }
}

void emitSmt2Formula(std::ostream& os, const FormulaPtr& f) {
    switch (f->kind) {
        case FormulaKind::True:
            os << "true";
            return;
        case FormulaKind::False:
            os << "false";
            return;
        case FormulaKind::Prop:
            throw PropVarPresent("emitSmt2: propositional variable " +
                                 propVarName(f->prop));
        case FormulaKind::AtomF: {
            const char* op = nullptr;
            switch (f->atom.op) {
                case RelOp::Eq: op = "="; break;
                case RelOp::Ne: op = nullptr; break;
                case RelOp::Lt: op = "<"; break;
                case RelOp::Le: op = "<="; break;
                case RelOp::Gt: op = ">"; break;
                case RelOp::Ge: op = ">="; break;
            }
            if (!op) os << "(not (= ";
            else os << "(" << op << " ";
            emitSmt2Term(os, f->atom.lhs);
            os << " ";
            emitSmt2Term(os, f->atom.rhs);
            os << ")";
            if (!op) os << ")";
            return;
        }
        case FormulaKind::Not:
            os << "(not ";
            emitSmt2Formula(os, f->a);
            os << ")";
            return;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies: {
            const char* op = f->kind == FormulaKind::And  ? "and"
                             : f->kind == FormulaKind::Or ? "or"
                                                          : "=>";
            os << "(" << op << " ";
            emitSmt2Formula(os, f->a);
            os << " ";
            emitSmt2Formula(os, f->b);
            os << ")";
            return;
        }
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            os << (f->kind == FormulaKind::Exists ? "(exists (" : "(forall (");
            for (std::size_t i = 0; i < f->vars.size(); ++i) {
                if (i) os << " ";
                os << "(" << varName(f->vars[i]) << " Real)";
            }
            os << ") ";
            emitSmt2Formula(os, f->a);
            os << ")";
            return;
        }
    }
}

}  // namespace

std::string emitSmt2(const FormulaPtr& f) {
    if (formulaHasProp(f))
        throw PropVarPresent("emitSmt2: U/V variables have no SMT-LIB image");
    std::ostringstream os;
    os << "(set-logic NRA)\n";
    for (Var v : freeVars(f))
        os << "(declare-const " << varName(v) << " Real)\n";
    os << "(assert ";
    emitSmt2Formula(os, f);
    os << ")\n(check-sat)\n";
    return os.str();
}

namespace {

// QEPCAD-flavoured matrix text: same infix shapes as the native printer
// but with /\ \/ ~ on a single line; the native term syntax is already
// QEPCAD-compatible (juxtaposition products, ^ powers).
void emitQepMatrix(std::ostream& os, const FormulaPtr& f, bool parenOr) {
    switch (f->kind) {
        case FormulaKind::True:
            os << "0 = 0";
            return;
        case FormulaKind::False:
            os << "0 /= 0";
            return;
        case FormulaKind::AtomF:
            os << printAtom(f->atom);
            return;
        case FormulaKind::Not:
            os << "[~";
            emitQepMatrix(os, f->a, false);
            os << "]";
            return;
        case FormulaKind::And:
            emitQepMatrix(os, f->a, true);
            os << " /\\ ";
            emitQepMatrix(os, f->b, true);
            return;
        case FormulaKind::Or: {
            if (parenOr) os << "[";
            emitQepMatrix(os, f->a, false);
            os << " \\/ ";
            emitQepMatrix(os, f->b, false);
            if (parenOr) os << "]";
            return;
        }
        default:
            throw NotPrenex("emitQepcadStyle: matrix must be quantifier-free");
    }
}

}  // namespace

std::string emitQepcadStyle(const FormulaPtr& f) {
    if (formulaHasProp(f))
        throw PropVarPresent("emitQepcadStyle: U/V variables present");
    if (formulaHasDiv(f)) throw DivPresent("emitQepcadStyle: division present");
    if (!isPrenex(f)) throw NotPrenex("emitQepcadStyle: input not prenex");

    BlockStructure bs = blockStructureOf(f);
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (Var v : bs.free) {
        if (!first) os << ",";
        os << varName(v);
        first = false;
    }
    for (const auto& b : bs.blocks)
        for (Var v : b.vars) {
            if (!first) os << ",";
            os << varName(v);
            first = false;
        }
    os << ")\n";
    os << bs.free.size() << "\n";

    FormulaPtr g = f;
    std::ostringstream line;
    while (g->kind == FormulaKind::Exists || g->kind == FormulaKind::Forall) {
        for (Var v : g->vars)
            line << "(" << (g->kind == FormulaKind::Forall ? "A " : "E ")
                 << varName(v) << ")";
        g = g->a;
    }
    line << "[";
    emitQepMatrix(line, g, false);
    line << "].";
    os << line.str() << "\nfinish\n";
    return os.str();
}

}  // namespace fairclear
