#pragma once

#include "fairclear/formula.hpp"

#include <string>

namespace fairclear {

// Concrete syntax
//   formula  :=  quant | disj
//   quant    :=  ("all" | "ex") varlist "[" formula "]"  |  "[" formula "]"
//   disj     :=  conj { "\/" conj }
//   conj     :=  unit { "/\" unit }
//   unit     :=  "~" unit | "true" | "false" | U<n> | V<n> | quant
//             |  atom | unit "==>" unit
//   atom     :=  term relop term      relop in  =  /=  <  <=  >  >=
//   term     :=  sums of products with - * / ^ and juxtaposition ("4 a",
//                "a x + b"), parentheses, integer and ratio literals.
// Identifiers match [A-Za-z_][A-Za-z0-9_]*; an exact U<digits> / V<digits>
// is a propositional variable, and all/ex/true/false are keywords.
FormulaPtr parseFormula(const std::string& text);
TermPtr parseTerm(const std::string& text);

std::string printFormula(const FormulaPtr& f);
std::string printTerm(const TermPtr& t);
std::string printAtom(const Atom& a);
std::string propVarName(PropVar p);

// SMT-LIB 2 rendering: declarations for free variables, one assert, and
// (check-sat).  Throws PropVarPresent if U/V variables remain and
// DivPresent if divisions remain.
std::string emitSmt2(const FormulaPtr& f);

// QEPCAD-style surface syntax: declared variable order (free variables
// first, then quantifier block order), prenex prefix like (A x)(E y),
// bracketed matrix.  Same preconditions as emitSmt2, plus prenex input.
std::string emitQepcadStyle(const FormulaPtr& f);

}  // namespace fairclear
