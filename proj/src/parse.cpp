#include "fairclear/errors.hpp"
#include "fairclear/syntax.hpp"

#include <cctype>
#include <optional>

namespace fairclear {

namespace {

enum class Tok {
    Ident,
    Nat,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eq,     // =
    Ne,     // /=
    Lt,     // <
    Le,     // <=
    Gt,     // >
    Ge,     // >=
    AndOp,  // /\ .
    OrOp,   // \/
    Tilde,
    ImpliesOp,  // ==>
    End
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    std::vector<Token> tokens;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(std::size_t at, const std::string& msg) {
        throw ParseError(SourceSpan{at, at + 1},
                         msg + " at offset " + std::to_string(at));
    }

    void run() {
        while (pos < src.size()) {
            char c = src[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
                continue;
            }
            std::size_t start = pos;
            auto emit = [&](Tok k, std::size_t len) {
                tokens.push_back(
                    Token{k, src.substr(start, len), SourceSpan{start, start + len}});
                pos = start + len;
            };
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = pos;
                while (j < src.size() &&
                       std::isdigit(static_cast<unsigned char>(src[j])))
                    ++j;
                emit(Tok::Nat, j - start);
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = pos;
                while (j < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[j])) ||
                        src[j] == '_'))
                    ++j;
                emit(Tok::Ident, j - start);
                continue;
            }
            auto two = src.substr(pos, 2);
            auto three = src.substr(pos, 3);
            if (three == "==>") {
                emit(Tok::ImpliesOp, 3);
            } else if (two == "/=") {
                emit(Tok::Ne, 2);
            } else if (two == "/\\") {
                emit(Tok::AndOp, 2);
            } else if (two == "\\/") {
                emit(Tok::OrOp, 2);
            } else if (two == "<=") {
                emit(Tok::Le, 2);
            } else if (two == ">=") {
                emit(Tok::Ge, 2);
            } else {
                switch (c) {
                    case '[': emit(Tok::LBrack, 1); break;
                    case ']': emit(Tok::RBrack, 1); break;
                    case '(': emit(Tok::LParen, 1); break;
                    case ')': emit(Tok::RParen, 1); break;
                    case ',': emit(Tok::Comma, 1); break;
                    case '+': emit(Tok::Plus, 1); break;
                    case '-': emit(Tok::Minus, 1); break;
                    case '*': emit(Tok::Star, 1); break;
                    case '/': emit(Tok::Slash, 1); break;
                    case '^': emit(Tok::Caret, 1); break;
                    case '=': emit(Tok::Eq, 1); break;
                    case '<': emit(Tok::Lt, 1); break;
                    case '>': emit(Tok::Gt, 1); break;
                    case '~': emit(Tok::Tilde, 1); break;
                    default:
                        fail(pos, std::string("unexpected character '") + c + "'");
                }
            }
        }
        tokens.push_back(Token{Tok::End, "", SourceSpan{src.size(), src.size()}});
    }
};

bool isKeyword(const std::string& s) {
    return s == "all" || s == "ex" || s == "true" || s == "false";
}

std::optional<PropVar> asPropVar(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'U' && s[0] != 'V')) return std::nullopt;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    PropVar p;
    p.kind = s[0] == 'U' ? PropVar::Kind::U : PropVar::Kind::V;
    p.index = static_cast<unsigned>(std::stoul(s.substr(1)));
    return p;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t i = 0;

    const Token& peek(std::size_t ahead = 0) const {
        return toks[std::min(i + ahead, toks.size() - 1)];
    }
    const Token& next() { return toks[i == toks.size() - 1 ? i : i++]; }

    [[noreturn]] void fail(const Token& t, const std::string& expected) {
        throw ParseError(t.span, "expected " + expected + ", found '" +
                                     (t.kind == Tok::End ? "<end>" : t.text) +
                                     "' at offset " + std::to_string(t.span.start));
    }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(peek(), what);
        ++i;
    }

    // ---- terms ----

    bool startsFactor(const Token& t) const {
        if (t.kind == Tok::Nat || t.kind == Tok::LParen) return true;
        if (t.kind != Tok::Ident) return false;
        return !isKeyword(t.text) && !asPropVar(t.text);
    }

    TermPtr parseFactor() {
        const Token& t = peek();
        if (t.kind == Tok::Minus) {
            // negative literal constant; anything else under unary minus
            ++i;
            if (peek().kind == Tok::Nat) {
                Rational v(Integer(next().text));
                return tConst(-v);
            }
            return tNeg(parseFactor());
        }
        if (t.kind == Tok::Nat) {
            ++i;
            return tConst(Rational(Integer(t.text)));
        }
        if (t.kind == Tok::Ident) {
            if (isKeyword(t.text)) fail(t, "a term");
            if (asPropVar(t.text)) fail(t, "a term (U/V names are propositional)");
            ++i;
            return tVar(internVar(t.text));
        }
        if (t.kind == Tok::LParen) {
            ++i;
            TermPtr inner = parseTermExpr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        fail(t, "a term");
    }

    TermPtr parsePow() {
        TermPtr base = parseFactor();
        while (peek().kind == Tok::Caret) {
            ++i;
            const Token& e = peek();
            if (e.kind != Tok::Nat) fail(e, "an exponent");
            unsigned long exp = std::stoul(e.text);
            if (exp < 1)
                throw ParseError(e.span, "exponent must be >= 1 at offset " +
                                             std::to_string(e.span.start));
            ++i;
            base = tPow(base, static_cast<unsigned>(exp));
        }
        return base;
    }

    TermPtr parseMul() {
        TermPtr acc = parsePow();
        for (;;) {
            const Token& t = peek();
            if (t.kind == Tok::Star) {
                ++i;
                acc = tMul(acc, parsePow());
            } else if (t.kind == Tok::Slash) {
                ++i;
                TermPtr den = parsePow();
                // literal/literal with nonzero literal denominator folds now
                if (acc->kind == TermKind::Const && den->kind == TermKind::Const &&
                    den->value != 0) {
                    acc = tConst(acc->value / den->value);
                } else {
                    acc = tDiv(acc, den);
                }
            } else if (startsFactor(t)) {
                acc = tMul(acc, parsePow());  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    TermPtr parseTermExpr() {
        TermPtr acc;
        if (peek().kind == Tok::Minus && peek(1).kind != Tok::Nat) {
            ++i;
            acc = tNeg(parseMul());
        } else {
            acc = parseMul();
        }
        for (;;) {
            const Token& t = peek();
            if (t.kind == Tok::Plus) {
                ++i;
                acc = tAdd(acc, parseMul());
            } else if (t.kind == Tok::Minus) {
                ++i;
                acc = tSub(acc, parseMul());
            } else {
                return acc;
            }
        }
    }

    std::optional<RelOp> peekRelOp() {
        switch (peek().kind) {
            case Tok::Eq: return RelOp::Eq;
            case Tok::Ne: return RelOp::Ne;
            case Tok::Lt: return RelOp::Lt;
            case Tok::Le: return RelOp::Le;
            case Tok::Gt: return RelOp::Gt;
            case Tok::Ge: return RelOp::Ge;
            default: return std::nullopt;
        }
    }

    // ---- formulas ----

    std::vector<Var> parseVarList() {
        std::vector<Var> vs;
        for (;;) {
            const Token& t = peek();
            if (t.kind != Tok::Ident || isKeyword(t.text) || asPropVar(t.text))
                fail(t, "a variable name");
            ++i;
            vs.push_back(internVar(t.text));
            if (peek().kind != Tok::Comma) break;
            ++i;
        }
        return vs;
    }

    FormulaPtr parseQuant() {
        const Token& t = peek();
        if (t.kind == Tok::LBrack) {
            ++i;
            FormulaPtr inner = parseFormulaExpr();
            expect(Tok::RBrack, "']'");
            return inner;
        }
        bool isAll = t.text == "all";
        ++i;
        std::vector<Var> vs = parseVarList();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (vs[a] == vs[b])
                    throw ParseError(t.span,
                                     "duplicate quantified variable: " +
                                         varName(vs[a]));
        expect(Tok::LBrack, "'['");
        FormulaPtr body = parseFormulaExpr();
        expect(Tok::RBrack, "']'");
        return isAll ? fForall(std::move(vs), std::move(body))
                     : fExists(std::move(vs), std::move(body));
    }

    FormulaPtr parseUnitBase() {
        const Token& t = peek();
        if (t.kind == Tok::Tilde) {
            ++i;
            return fNot(parseUnit());
        }
        if (t.kind == Tok::LBrack) return parseQuant();
        if (t.kind == Tok::Ident) {
            if (t.text == "true") {
                ++i;
                return fTrue();
            }
            if (t.text == "false") {
                ++i;
                return fFalse();
            }
            if (t.text == "all" || t.text == "ex") return parseQuant();
            if (auto p = asPropVar(t.text)) {
                ++i;
                return fProp(*p);
            }
        }
        // atom
        TermPtr lhs = parseTermExpr();
        auto op = peekRelOp();
        if (!op) fail(peek(), "a relational operator");
        ++i;
        TermPtr rhs = parseTermExpr();
        return fAtom(std::move(lhs), *op, std::move(rhs));
    }

    FormulaPtr parseUnit() {
        FormulaPtr lhs = parseUnitBase();
        if (peek().kind == Tok::ImpliesOp) {
            ++i;
            return fImplies(std::move(lhs), parseUnit());
        }
        return lhs;
    }

    FormulaPtr parseConj() {
        FormulaPtr acc = parseUnit();
        while (peek().kind == Tok::AndOp) {
            ++i;
            acc = fAnd(std::move(acc), parseUnit());
        }
        return acc;
    }

    FormulaPtr parseDisj() {
        FormulaPtr acc = parseConj();
        while (peek().kind == Tok::OrOp) {
            ++i;
            acc = fOr(std::move(acc), parseConj());
        }
        return acc;
    }

    // disj subsumes the quant alternative (a quant is a unit), so the
    // formula := quant | disj split needs no lookahead here.
    FormulaPtr parseFormulaExpr() { return parseDisj(); }
};

Parser makeParser(const std::string& text) {
    Lexer lex(text);
    lex.run();
    Parser p;
    p.toks = std::move(lex.tokens);
    return p;
}

}  // namespace

FormulaPtr parseFormula(const std::string& text) {
    Parser p = makeParser(text);
    FormulaPtr f = p.parseFormulaExpr();
    if (p.peek().kind != Tok::End) p.fail(p.peek(), "end of input");
    return f;
}

TermPtr parseTerm(const std::string& text) {
    Parser p = makeParser(text);
    TermPtr t = p.parseTermExpr();
    if (p.peek().kind != Tok::End) p.fail(p.peek(), "end of input");
    return t;
}

}  // namespace fairclear
