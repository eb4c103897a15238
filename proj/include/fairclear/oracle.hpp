#pragma once

#include "fairclear/formula.hpp"
#include "fairclear/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace fairclear {

// Finite candidate sets per variable for the desk-scale search.
struct CandidateGrid {
    std::map<Var, std::vector<Rational>> values;

    const std::vector<Rational>* candidatesFor(Var v) const;
    void addValue(Var v, const Rational& r);
    void merge(const CandidateGrid& o);
};

// Verdict of the grid search.  FairSat is certified over the grid
// (including refutations-by-duality that are themselves grid-relative);
// NotFairSatOnGrid means every grid branch was exhausted; Unknown means the
// grid lacked candidates somewhere.
enum class TriState { FairSat, NotFairSatOnGrid, Unknown };

// Base grid {0, 1, -1, 2, -2, 1/2, -1/2} for every variable of f, widened
// by rational roots of the final denominator polynomials specialized at
// base-grid points (small caps keep this desk-scale).
CandidateGrid autoGrid(const FormulaPtr& f);
std::vector<Rational> baseGridValues();

// One step of a satisfied existential on the certifying branch.
struct WitnessStep {
    Var var;
    Rational value;
    FormulaPtr after;  // formula remaining after the substitution
};

struct FairSatResult {
    TriState verdict = TriState::Unknown;
    std::vector<WitnessStep> witness;  // only meaningful for FairSat
};

// Fair satisfiability over a grid: existentials range over the grid,
// universals go through the duality rule (not fair-sat of the flopped
// existential), propositional leftovers are decided by their polarity.
// f must be closed (NotClosed).  The first overload seeds fresh U/V
// numbering at 1 for every top-level call.
FairSatResult fairSatGrid(const FormulaPtr& f, const CandidateGrid& grid);
FairSatResult fairSatGrid(const FormulaPtr& f, const CandidateGrid& grid,
                          FreshState& fs);

// Decides a formula of U/V variables and boolean connectives, reading each
// variable's value off its polarity: a U is false when it occurs
// positively (true otherwise), a V true when positive.  Real variables or
// atoms raise RealVarsPresent.
bool qbfBaseEval(const FormulaPtr& f);

// Quantified boolean formula with an explicit prefix, as produced by the
// symbolic expansion below.
struct Qbf {
    // (isForall, variable), outermost first.
    std::vector<std::pair<bool, PropVar>> prefix;
    FormulaPtr matrix;
};

bool qbfBruteForceEval(const Qbf& q);
std::string printQbf(const Qbf& q);

// Symbolic expansion of f at the point alpha (one value per quantified
// variable, in order of first appearance): existentials are partially
// evaluated at their value, universals go through the flop duality with
// the surrounding negations cancelling pairwise.  The result's prefix
// quantifies the U/V variables in order of appearance (U universal,
// V existential).  f must be closed and peval-safe.
Qbf fse(const FormulaPtr& f, const std::vector<Rational>& alpha);

// Number of quantified-variable introductions in f (the length fse's alpha
// must have).
unsigned countIntroductions(const FormulaPtr& f);

// Metamorphic check: the grid verdict of f agrees with evaluating
//   Q1 a1 ... Qn an [ fse(f, a) ]
// over the same grid (Qi the quantifier introducing variable i).
// Returns true when the lhs verdict is Unknown or the two sides agree.
bool checkFsfse(const FormulaPtr& f, const CandidateGrid& grid);

// Do f and g (same free variables) agree at each sample point, comparing
// the grid verdicts of their partial evaluations?  Points are tuples over
// the shared free-variable order (order of first appearance in f).
bool equivOnSamples(const FormulaPtr& f, const FormulaPtr& g,
                    const std::vector<std::vector<Rational>>& points);

// Is the formula's division structure immaterial over the grid: does the
// division-free fair translation, partially evaluated at every grid point
// of the free variables, decide the same way as the original?
bool checkWellDefinedOnGrid(const FormulaPtr& f, const CandidateGrid& grid);

}  // namespace fairclear
