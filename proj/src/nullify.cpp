#include "fairclear/nullify.hpp"

#include "fairclear/errors.hpp"
#include "fairclear/syntax.hpp"

namespace fairclear {

bool isNullified(const Polynomial& p, const std::vector<Var>& fixedVars,
                 const std::vector<Rational>& g) {
    if (fixedVars.size() != g.size())
        throw LengthMismatch("isNullified: |fixedVars| != |g|");
    std::map<IndetId, Rational> env;
    for (std::size_t i = 0; i < fixedVars.size(); ++i)
        env[fixedVars[i].id] = g[i];
    return p.substitute(env).isZero();
}

NullCondition nullsysCondition(const Polynomial& p, unsigned i,
                               const BlockStructure& bs) {
    const unsigned k = static_cast<unsigned>(bs.blocks.size());
    if (i < 1 || i > k + 1)
        throw LevelOutOfRange("nullsys: level " + std::to_string(i) +
                              " outside 1.." + std::to_string(k + 1));

    std::set<IndetId> ids;
    for (Var v : bs.varsFromLevel(i)) ids.insert(v.id);
    bool mentionsAny = false;
    for (IndetId id : ids)
        if (p.mentions(id)) mentionsAny = true;

    std::vector<Polynomial> coeffs;
    if (i == k + 1 || !mentionsAny) {
        coeffs.push_back(p);
    } else {
        coeffs = polynomialCoefficients(p, ids);
        // Inter-reduce: each coefficient reduced modulo the other original
        // coefficients; a zero remainder keeps the original (so nothing is
        // silently dropped), a nonzero one replaces it.  Only multiples of
        // sibling coefficients are subtracted, so the common zero set —
        // which is all nullsys asserts — is unchanged.
        std::vector<Polynomial> reduced;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            std::vector<Polynomial> others;
            for (std::size_t l = 0; l < coeffs.size(); ++l)
                if (l != j) others.push_back(coeffs[l]);
            Polynomial r = coeffs[j].reducedBy(others);
            reduced.push_back(r.isZero() ? coeffs[j] : r);
        }
        coeffs = std::move(reduced);
    }

    NullCondition out;
    for (const Polynomial& c : coeffs) {
        if (c.isConstant()) {
            if (c.constantValue() != 0) {
                out.kind = NullCondition::Kind::False;
                out.eqs.clear();
                return out;
            }
            continue;  // literal 0 coefficient contributes true, dropped
        }
        Polynomial e = c.clearedOfFractions();
        bool dup = false;
        for (const auto& prev : out.eqs)
            if (prev == e) dup = true;
        if (!dup) out.eqs.push_back(e);
    }
    out.kind = out.eqs.empty() ? NullCondition::Kind::True
                               : NullCondition::Kind::Eqs;
    return out;
}

FormulaPtr nullsys(const Polynomial& p, unsigned i, const BlockStructure& bs) {
    NullCondition c = nullsysCondition(p, i, bs);
    switch (c.kind) {
        case NullCondition::Kind::False:
            return fFalse();
        case NullCondition::Kind::True:
            return fTrue();
        case NullCondition::Kind::Eqs:
            break;
    }
    FormulaPtr out;
    for (const Polynomial& e : c.eqs) {
        FormulaPtr eq = fAtom(polynomialToTerm(e), RelOp::Eq, tConst(0));
        out = out ? fAnd(out, eq) : eq;
    }
    return out;
}

}  // namespace fairclear
