#include <doctest.h>

#include "fairclear/errors.hpp"
#include "fairclear/peval.hpp"
#include "fairclear/syntax.hpp"

#include "gen.hpp"

#include <functional>

using namespace fairclear;

namespace {

Var vx() { return internVar("x"); }
Var vy() { return internVar("y"); }

// fold a ground term (peval is lazy, so residuals keep ground subtrees)
std::optional<Rational> foldGround(const TermPtr& t) {
    switch (t->kind) {
        case TermKind::Const: return t->value;
        case TermKind::VarRef: throw Error("not ground");
        case TermKind::Neg: {
            auto a = foldGround(t->a);
            if (!a) return std::nullopt;
            return -*a;
        }
        case TermKind::Pow: {
            auto a = foldGround(t->a);
            if (!a) return std::nullopt;
            Rational v = 1;
            for (unsigned k = 0; k < t->exponent; ++k) v *= *a;
            return v;
        }
        default: {
            auto a = foldGround(t->a), b = foldGround(t->b);
            if (!a || !b) return std::nullopt;
            switch (t->kind) {
                case TermKind::Add: return *a + *b;
                case TermKind::Sub: return *a - *b;
                case TermKind::Mul: return *a * *b;
                default:
                    if (*b == 0) return std::nullopt;
                    return *a / *b;
            }
        }
    }
}

// full evaluation via peval over all variables of t; nullopt means FAIL
std::optional<Rational> evalAt(const TermPtr& t, const std::vector<Var>& xs,
                               const std::vector<Rational>& g) {
    TermResult r = pevalpTerm(t, xs, g);
    if (r.failed()) return std::nullopt;
    return foldGround(r.term);
}

void collectPropIndices(const FormulaPtr& f, std::vector<unsigned>& out) {
    if (!f) return;
    if (f->kind == FormulaKind::Prop) out.push_back(f->prop.index);
    collectPropIndices(f->a, out);
    collectPropIndices(f->b, out);
}

}  // namespace

TEST_CASE("term evaluation cases") {
    TermPtr t = parseTerm("x*(1/y)");

    SUBCASE("substituting the factor keeps the division untouched") {
        TermResult r = pevalTerm(t, vx(), 0);
        REQUIRE(!r.failed());
        CHECK(printTerm(r.term) == "0*(1/y)");  // lazy: no 0-absorption
    }
    SUBCASE("zero denominator fails") {
        CHECK(pevalTerm(t, vy(), 0).failed());
    }
    SUBCASE("constants fold only when fully determined") {
        TermResult r = pevalTerm(parseTerm("x*2 - y"), vx(), Rational(3, 4));
        REQUIRE(!r.failed());
        CHECK(printTerm(r.term) == "3/2 - y");
    }
    SUBCASE("absent variable leaves the term untouched") {
        TermPtr u = parseTerm("1 + 2");
        TermResult r = pevalTerm(u, vx(), 5);
        CHECK(r.term == u);  // same node, not just equal
    }
    SUBCASE("tuple evaluation is left to right") {
        TermResult r = pevalpTerm(t, {vx(), vy()}, {Rational(0), Rational(0)});
        CHECK(r.failed());  // y=0 still fails even after x=0
        CHECK_THROWS_AS(pevalpTerm(t, {vx()}, {Rational(0), Rational(1)}),
                        LengthMismatch);
    }
}

TEST_CASE("final denominators") {
    TermPtr t = parseTerm("x - 1/(a x + b*(1/(b+1)))");
    std::vector<Polynomial> dens = finalDenominators(t);
    REQUIRE(dens.size() == 2);
    // innermost first, and the outer denominator is division-cleared
    CHECK(dens[0] == termToPolynomial(parseTerm("b + 1")));
    CHECK(dens[1] == termToPolynomial(parseTerm("(b+1) a x + b")));
}

TEST_CASE("legality at a prefix") {
    TermPtr t = parseTerm("3 x/(x - y)");
    std::vector<Var> order = {vx(), vy()};
    CHECK(isLegal(t, order, {}));
    CHECK(isLegal(t, order, {Rational(2)}));           // x - y not nullified
    CHECK(!isLegal(t, order, {Rational(2), Rational(2)}));
    CHECK(isLegal(t, order, {Rational(2), Rational(3)}));
    CHECK_THROWS_AS(isLegal(t, {vx()}, {}), OrderIncomplete);

    // nullification without full evaluation: x/(x y) illegal once x = 0
    TermPtr u = parseTerm("1/(x y)");
    CHECK(!isLegal(u, order, {Rational(0)}));
}

TEST_CASE("formula evaluation cases") {
    FormulaPtr f = parseFormula("x*(1/y) > 0 /\\ x < 5 \\/ U1");

    SUBCASE("legal sides rewrite in place, constant atoms fold") {
        FreshState fs{2};
        FormulaPtr g = pevalFormula(f, vx(), 0, fs);
        CHECK(printFormula(g) == "0*(1/y) > 0 /\\ true \\/ U1");
    }
    SUBCASE("illegal side becomes a fresh U") {
        FreshState fs{2};
        FormulaPtr g = pevalFormula(f, vy(), 0, fs);
        CHECK(printFormula(g) == "U2 /\\ x < 5 \\/ U1");
        CHECK(fs.next == 3);
    }
    SUBCASE("nested evaluation: two steps") {
        FormulaPtr h = parseFormula("x*(y^2 - 1) /= 0 /\\ y*(1/x) < 3");
        FreshState fs{1};
        FormulaPtr g =
            pevalFormula(pevalFormula(h, vy(), 0, fs), vx(), 0, fs);
        CHECK(printFormula(g) == "false /\\ U1");
    }
    SUBCASE("evaluation reaches under other quantifiers") {
        FormulaPtr h = parseFormula("[ex x[x/y > 1 /\\ x/(y - 3) > x^2]]");
        FreshState fs{1};
        FormulaPtr g = pevalFormula(h, vy(), 3, fs);
        CHECK(printFormula(g) == "ex x[x/3 > 1 /\\ U1]");
    }
    SUBCASE("a quantifier binding x shields its body") {
        FormulaPtr h = parseFormula("[ex x[x = 0]]");
        FreshState fs{1};
        CHECK(pevalFormula(h, vx(), 7, fs) == h);
    }
    SUBCASE("implication is rejected") {
        FreshState fs{1};
        CHECK_THROWS_AS(
            pevalFormula(parseFormula("U1 ==> U2"), vx(), 0, fs),
            NotNormalized);
    }
}

TEST_CASE("nextFreshIndex skips used indices") {
    CHECK(nextFreshIndex(parseFormula("x = 0")) == 1);
    CHECK(nextFreshIndex(parseFormula("U1 \\/ x = 0")) == 2);
    CHECK(nextFreshIndex(parseFormula("U3 /\\ V5")) == 6);
}

TEST_CASE("property: illegal at a prefix stays illegal at every extension") {
    gen::Rng rng(140984);
    std::vector<Var> vars = {internVar("x"), internVar("y"), internVar("z")};
    int cases = 0;
    while (cases < 200) {
        TermPtr t = gen::divTerm(rng, vars, 3);
        if (!termHasDiv(t)) continue;
        std::vector<Rational> gamma = {gen::rat(rng)};
        if (isLegal(t, vars, gamma)) continue;
        for (int k = 0; k < 5; ++k) {
            std::vector<Rational> ext = gamma;
            ext.push_back(gen::rat(rng));
            CHECK(!isLegal(t, vars, ext));
            ext.push_back(gen::rat(rng));
            CHECK(!isLegal(t, vars, ext));
        }
        ++cases;
    }
}

TEST_CASE("property: legality matches exhaustive evaluation behaviour") {
    // a term is legal at a prefix iff some full extension avoids FAIL
    gen::Rng rng(777001);
    std::vector<Var> vars = {internVar("x"), internVar("y")};
    int points = 0, mismatches = 0;
    while (points < 1200) {
        TermPtr t = gen::divTerm(rng, vars, 3);
        std::vector<Rational> gamma = {gen::rat(rng)};
        ++points;
        bool legal = isLegal(t, vars, gamma);
        bool foundOk = false;
        // wide deterministic sample of extensions for y
        for (int n = -12; n <= 12 && !foundOk; ++n)
            for (int d = 1; d <= 3 && !foundOk; ++d) {
                std::vector<Rational> full = gamma;
                full.emplace_back(n * 7 + d, d);
                if (evalAt(t, vars, full).has_value()) foundOk = true;
            }
        if (legal != foundOk) ++mismatches;
    }
    CHECK(points >= 1000);
    CHECK(mismatches == 0);
}

TEST_CASE("property: introduced U indices are unique") {
    gen::Rng rng(90210);
    for (int i = 0; i < 200; ++i) {
        gen::SafeGen sg{rng};
        sg.allowDiv = true;
        FormulaPtr f = sg.closed(4);
        std::vector<std::pair<bool, Var>> dummy;
        // evaluate the outermost bound variable wherever it is free inside
        FreshState fs;
        fs.next = std::max(1u, nextFreshIndex(f));
        FormulaPtr g = pevalFormula(f->a, f->vars[0], gen::rat(rng), fs);
        std::vector<unsigned> idx;
        collectPropIndices(g, idx);
        std::sort(idx.begin(), idx.end());
        CHECK(std::adjacent_find(idx.begin(), idx.end()) == idx.end());
    }
}
