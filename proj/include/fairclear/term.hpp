#pragma once

#include "fairclear/rational.hpp"
#include "fairclear/var.hpp"

#include <memory>
#include <set>
#include <vector>

namespace fairclear {

enum class TermKind { Const, VarRef, Neg, Add, Sub, Mul, Pow, Div };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term tree.  Div is a first-class node; nothing simplifies a
// division away except parse-time folding of literal/literal with a nonzero
// literal denominator.
struct Term {
    TermKind kind;
    Rational value;         // Const
    Var var;                // VarRef
    TermPtr a, b;           // children: Neg/Pow use a only
    unsigned exponent = 0;  // Pow, always >= 1
};

TermPtr tConst(const Rational& v);
TermPtr tVar(Var v);
TermPtr tVar(const std::string& name);
TermPtr tNeg(TermPtr t);
TermPtr tAdd(TermPtr a, TermPtr b);
TermPtr tSub(TermPtr a, TermPtr b);
TermPtr tMul(TermPtr a, TermPtr b);
TermPtr tPow(TermPtr a, unsigned e);
TermPtr tDiv(TermPtr num, TermPtr den);

bool termEq(const TermPtr& a, const TermPtr& b);
bool termHasDiv(const TermPtr& t);
bool termMentions(const TermPtr& t, Var v);
void termVars(const TermPtr& t, std::set<Var>& out);
std::set<Var> termVars(const TermPtr& t);

}  // namespace fairclear
