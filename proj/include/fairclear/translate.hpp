#pragma once

#include "fairclear/formula.hpp"
#include "fairclear/polynomial.hpp"

#include <functional>
#include <vector>

namespace fairclear {

enum class ClearMode { NoGuard, Naive, Fair };

// Removes every division from an atom by repeated denominator
// multiplication: innermost divisions are folded into their enclosing
// denominator first, then top-level divisions are cleared against the
// relation (multiplying by an even power when the relation is an order
// relation and the degree is odd).  The result is the canonical
// "everything on the left" atom p sigma 0 with integer coefficients.
// A division-free atom is returned unchanged.
//
// onDenominator, when set, observes each denominator polynomial in the
// order it is eliminated.
Atom clearAtom(const Atom& a,
               const std::function<void(const Polynomial&)>& onDenominator =
                   nullptr);

// Full record of one atom translation, for tracing and tests.
struct GuardLadder {
    // N[i] for level i (1-based; size k+2, index 0 unused): recorded
    // nullification conditions, in recording order.
    std::vector<std::vector<FormulaPtr>> N;
    std::vector<FormulaPtr> G;  // G[i] for i in 1..k+1; G[0] unused
    std::vector<FormulaPtr> H;  // H[i] for i in 0..k+1
    Atom cleared;               // division-free canonical atom
    std::vector<Polynomial> denominators;  // elimination order
};

// Guarded translation of one atom under a block structure: clears the atom
// while recording, for every denominator p and every level i up to one
// past p's deepest block, the condition nullsys(p, i); builds the guards
// G_i (simplified against the accumulated context) and the ladder
//   H_k+1 = cleared atom
//   H_i-1 = G_i \/ H_i   when block i-1 is universal
//   H_i-1 = ~G_i /\ H_i  otherwise (negation pushed onto the equations),
// returning H_0.  Atom variables must occur in bs (BlockMismatch).
FormulaPtr translateAtom(const BlockStructure& bs, const Atom& a,
                         GuardLadder* trace = nullptr);

// Syntactic simplification of a guard disjunction W against the already
// emitted context C (a disjunction): drops false disjuncts, lets true
// dominate, deduplicates, and drops disjuncts structurally present in C.
// The result G satisfies ~C => (G <=> W).
FormulaPtr simplifyGuard(const FormulaPtr& w, const FormulaPtr& context);

// Whole-formula translation.  Requires prenex, positive, implication-free
// input without U/V variables.  Every atom containing a division is
// replaced according to the mode:
//   NoGuard - the cleared atom alone (loses fairness),
//   Naive   - cleared atom /\ p /= 0 for each distinct final denominator,
//   Fair    - the guard ladder from translateAtom.
// Division-free atoms are left untouched.
FormulaPtr translateFormula(const FormulaPtr& f, ClearMode mode,
                            std::vector<GuardLadder>* traces = nullptr);

}  // namespace fairclear
