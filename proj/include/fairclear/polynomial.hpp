#pragma once

#include "fairclear/rational.hpp"
#include "fairclear/term.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace fairclear {

// Indeterminate of a polynomial.  Usually a Var id; ids with the high bit
// set are locally allocated handles for division subterms during clearing.
using IndetId = std::uint32_t;
constexpr IndetId kHandleBit = 0x80000000u;

// Sorted by id ascending, exponents >= 1.
using Monomial = std::vector<std::pair<IndetId, unsigned>>;

// Graded lexicographic: higher total degree first; ties broken by the
// smaller (earlier-interned) indeterminate being more significant.
bool grlexLess(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlexLess(b, a);
    }
};

// Sparse multivariate polynomial with rational coefficients, kept in
// canonical form: no zero coefficients, terms ordered grlex-descending.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial indeterminate(IndetId id);

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    Rational constantValue() const;  // requires isConstant()

    const TermMap& terms() const { return terms_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(unsigned e) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    void add(const Monomial& m, const Rational& c);

    unsigned degreeIn(IndetId id) const;
    bool mentions(IndetId id) const;
    std::set<IndetId> indeterminates() const;

    // Descending-degree coefficients with respect to `id`:
    // [c_M, ..., c_0] with degree M = degreeIn(id); [p] when absent.
    std::vector<Polynomial> coefficientsDescIn(IndetId id) const;

    // Partial evaluation: substitute rational values for some indeterminates.
    Polynomial substitute(const std::map<IndetId, Rational>& env) const;
    // Full evaluation; every indeterminate must be in env.
    Rational evaluate(const std::map<IndetId, Rational>& env) const;

    // Multiply by the positive lcm of coefficient denominators so all
    // coefficients become integers.  Content is deliberately not removed.
    Polynomial clearedOfFractions() const;

    // Exact division.  Returns nullopt unless o divides *this with zero
    // remainder.
    std::optional<Polynomial> dividedExactlyBy(const Polynomial& o) const;

    // Single reduction pass: subtract multiples of the reducers' leading
    // terms until no term of the result is divisible by any reducer's
    // leading monomial.  Reducers must be nonzero.
    Polynomial reducedBy(const std::vector<Polynomial>& reducers) const;

    const Monomial& leadingMonomial() const;  // requires !isZero()
    const Rational& leadingCoefficient() const;

private:
    TermMap terms_;
};

// Projection of monomials onto an indeterminate subset, used to split a
// polynomial into coefficients with respect to a variable group.
// Result pairs are (coefficient, projected monomial), projected monomials
// grlex-descending.  A zero polynomial yields an empty list.
std::vector<std::pair<Polynomial, Monomial>> groupByIndets(
    const Polynomial& p, const std::set<IndetId>& ids);

// Descending coefficient list of p with respect to the given variable set
// (projected-monomial order).  Mirrors groupByIndets but drops the monomials.
std::vector<Polynomial> polynomialCoefficients(const Polynomial& p,
                                               const std::set<IndetId>& ids);

// Conversion from a division-free term.  Throws DivPresent on Div nodes.
Polynomial termToPolynomial(const TermPtr& t);

// Canonical term image of a polynomial: monomials grlex-descending,
// negative coefficients rendered via subtraction.
TermPtr polynomialToTerm(const Polynomial& p);

}  // namespace fairclear
