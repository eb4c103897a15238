#pragma once

#include "fairclear/formula.hpp"
#include "fairclear/polynomial.hpp"

#include <vector>

namespace fairclear {

// Does p become identically zero (as a polynomial in the remaining
// variables) once fixedVars are substituted by g?  Exact coefficient
// vanishing, not sampling.  |fixedVars| must equal |g| (LengthMismatch).
bool isNullified(const Polynomial& p, const std::vector<Var>& fixedVars,
                 const std::vector<Rational>& g);

// Condition on the variables before level i under which p is nullified:
// the conjunction of c = 0 over the coefficients of p with respect to the
// variables of blocks i..k (descending degree order).  When i = k+1 or p
// has none of those variables, this is just [p = 0].
//
// The coefficient set is inter-reduced (each coefficient reduced modulo
// the original others; kept as-is when the remainder vanishes), nonzero
// constant coefficients fold the whole condition to false, and duplicate
// conjuncts are dropped.  i ranges over 1..k+1 (LevelOutOfRange).
FormulaPtr nullsys(const Polynomial& p, unsigned i, const BlockStructure& bs);

// Polynomial-level form of the same condition, used by the guard ladder:
// False when a nonzero constant coefficient appears, True when everything
// folded away, otherwise the equation polynomials (integer-cleared, in
// conjunct order).
struct NullCondition {
    enum class Kind { False, True, Eqs } kind = Kind::Eqs;
    std::vector<Polynomial> eqs;
};

NullCondition nullsysCondition(const Polynomial& p, unsigned i,
                               const BlockStructure& bs);

}  // namespace fairclear
