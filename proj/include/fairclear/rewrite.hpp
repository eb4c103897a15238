#pragma once

#include "fairclear/formula.hpp"

namespace fairclear {

// Lowers ==> to ~/\/ and rewrites every division, innermost first, to a
// product with a reciprocal: div(a, b) becomes a * div(1, b).  After this
// every Div node has numerator 1.
FormulaPtr normalizeDivs(const FormulaPtr& f);

// Renames bound variables so that no variable is bound twice and no bound
// variable shadows a free one.  Fresh names are base_<n> using fs.
FormulaPtr standardizeApart(const FormulaPtr& f, FreshState& fs);

// Negation normal form over ~ /\ \/ and quantifiers; ==> is lowered first.
// Negation survives only directly on U/V variables.
FormulaPtr posform(const FormulaPtr& f);

// Hoists quantifiers to a prefix, left to right in order of first
// appearance.  Requires positive, standardized-apart input
// (NotPositivePrenex / NotStandardizedApart).
FormulaPtr prenex(const FormulaPtr& f);

// The syntactic duals used by the universal-quantifier rule: flip swaps
// U_i with ~V_i (and vice versa), flop additionally dualizes /\ with \/,
// quantifiers, and every relation with its complement.  Both are
// involutions; flop(~F) = flip(F).  Input must use only ~ /\ \/ and
// quantifiers (NotPevalSafe otherwise).
FormulaPtr flip(const FormulaPtr& f);
FormulaPtr flop(const FormulaPtr& f);

}  // namespace fairclear
