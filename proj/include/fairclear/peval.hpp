#pragma once

#include "fairclear/formula.hpp"
#include "fairclear/polynomial.hpp"

#include <optional>
#include <vector>

namespace fairclear {

// Result of partially evaluating a term: either a residual term or the
// failure mark raised by division whose denominator evaluated to 0.
struct TermResult {
    TermPtr term;  // null means FAIL
    bool failed() const { return term == nullptr; }
    static TermResult fail() { return TermResult{nullptr}; }
    static TermResult ok(TermPtr t) { return TermResult{std::move(t)}; }
};

// Lazy partial evaluation of a term at x = a.  Folds an operation only when
// every operand came out constant; a subterm without x is left untouched,
// so e.g. 0 * (1/y) survives as written.
TermResult pevalTerm(const TermPtr& t, Var x, const Rational& a);

// Left-to-right evaluation at a tuple; throws LengthMismatch.
TermResult pevalpTerm(const TermPtr& t, const std::vector<Var>& xs,
                      const std::vector<Rational>& g);

// Denominator polynomials remaining after clearing all divisions out of t.
// These decide legality: t is legal at a prefix iff evaluation so far has
// not failed and none of them is nullified by the prefix.
std::vector<Polynomial> finalDenominators(const TermPtr& t);

// Is t legal at the prefix assignment order[0..gamma.size()) = gamma?
// `order` must cover all variables of t (OrderIncomplete otherwise);
// gamma may be shorter than order (LengthMismatch when longer).
bool isLegal(const TermPtr& t, const std::vector<Var>& order,
             const std::vector<Rational>& gamma);

// Partial evaluation of a formula at x = a.  An atom with an illegal side
// becomes a fresh U variable (a new one per occurrence); atoms whose sides
// both fold to constants become true/false; a quantifier binding x shields
// its body.
FormulaPtr pevalFormula(const FormulaPtr& f, Var x, const Rational& a,
                        FreshState& fs);

FormulaPtr pevalpFormula(const FormulaPtr& f, const std::vector<Var>& xs,
                         const std::vector<Rational>& g, FreshState& fs);

// Smallest index not used by any U/V variable in f, for seeding FreshState.
unsigned nextFreshIndex(const FormulaPtr& f);

}  // namespace fairclear
