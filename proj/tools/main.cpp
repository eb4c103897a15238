#include "fairclear/backend.hpp"
#include "fairclear/errors.hpp"
#include "fairclear/oracle.hpp"
#include "fairclear/peval.hpp"
#include "fairclear/rewrite.hpp"
#include "fairclear/syntax.hpp"
#include "fairclear/translate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fairclear;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSpawn = 4;
constexpr int kExitTimeout = 5;
constexpr int kExitUnparseable = 6;

std::string readInput(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Rational ratArg(const std::string& s) {
    auto r = ratFromString(s);
    if (!r) throw Error("not a rational: " + s);
    return *r;
}

FormulaPtr parseOrExit(const std::string& text) {
    try {
        return parseFormula(text);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        std::exit(kExitParse);
    }
}

// normalizeDivs -> standardizeApart -> posform -> prenex
FormulaPtr preparePipeline(const FormulaPtr& f) {
    FreshState fs;
    return prenex(posform(standardizeApart(normalizeDivs(f), fs)));
}

std::string emitAs(const FormulaPtr& f, const std::string& fmt) {
    if (fmt == "smt2") return emitSmt2(f);
    if (fmt == "qepcad") return emitQepcadStyle(f);
    return printFormula(f) + "\n";
}

void printTrace(const std::vector<GuardLadder>& traces) {
    for (std::size_t a = 0; a < traces.size(); ++a) {
        const GuardLadder& t = traces[a];
        std::cout << "atom " << (a + 1) << ": "
                  << printAtom(t.cleared) << "\n";
        for (std::size_t i = 1; i < t.N.size(); ++i) {
            std::cout << "N" << i << " = {";
            for (std::size_t j = 0; j < t.N[i].size(); ++j)
                std::cout << (j ? ", " : " ") << printFormula(t.N[i][j]);
            std::cout << (t.N[i].empty() ? "}" : " }") << "\n";
        }
        for (std::size_t i = 1; i < t.G.size(); ++i)
            std::cout << "G" << i << " = " << printFormula(t.G[i]) << "\n";
        for (std::size_t i = t.H.size(); i-- > 0;)
            std::cout << "H" << i << " = " << printFormula(t.H[i]) << "\n";
    }
}

int cmdClear(const std::string& input, const std::string& mode,
             const std::string& emitFmt, bool trace) {
    FormulaPtr f = parseOrExit(readInput(input));
    ClearMode m = mode == "noguard"  ? ClearMode::NoGuard
                  : mode == "naive" ? ClearMode::Naive
                                    : ClearMode::Fair;
    std::vector<GuardLadder> traces;
    FormulaPtr out = translateFormula(preparePipeline(f), m,
                                      trace ? &traces : nullptr);
    if (trace) printTrace(traces);
    std::cout << emitAs(out, emitFmt);
    return 0;
}

int cmdPeval(const std::string& input,
             const std::vector<std::string>& atFlags) {
    FormulaPtr f = parseOrExit(readInput(input));
    std::vector<Var> xs;
    std::vector<Rational> g;
    for (const std::string& at : atFlags) {
        std::size_t eq = at.find('=');
        if (eq == std::string::npos)
            throw Error("--at expects var=rational, got: " + at);
        xs.push_back(internVar(at.substr(0, eq)));
        g.push_back(ratArg(at.substr(eq + 1)));
    }
    FreshState fs;
    fs.next = std::max(1u, nextFreshIndex(f));
    std::cout << printFormula(pevalpFormula(f, xs, g, fs)) << "\n";
    return 0;
}

CandidateGrid parseGrid(const std::string& spec, const FormulaPtr& f) {
    if (spec == "auto") return autoGrid(f);
    CandidateGrid grid;
    std::istringstream is(spec);
    std::string part;
    while (std::getline(is, part, ';')) {
        std::size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw Error("--grid expects var:v1,v2,...;...  got: " + part);
        Var v = internVar(part.substr(0, colon));
        std::istringstream vs(part.substr(colon + 1));
        std::string val;
        while (std::getline(vs, val, ','))
            grid.addValue(v, ratArg(val));
    }
    return grid;
}

int cmdCheck(const std::string& input, const std::string& gridSpec) {
    FormulaPtr f = parseOrExit(readInput(input));
    FormulaPtr prepared = normalizeDivs(f);
    if (formulaHasImplies(prepared)) {
        FreshState fs;
        prepared = posform(standardizeApart(prepared, fs));
    }
    CandidateGrid grid = parseGrid(gridSpec, prepared);
    FairSatResult res = fairSatGrid(prepared, grid);
    switch (res.verdict) {
        case TriState::FairSat: std::cout << "fair-sat\n"; break;
        case TriState::NotFairSatOnGrid:
            std::cout << "not-fair-sat-on-grid\n";
            break;
        default: std::cout << "unknown\n"; break;
    }
    for (std::size_t i = 0; i < res.witness.size(); ++i) {
        const WitnessStep& s = res.witness[i];
        std::cout << "step " << (i + 1) << ": " << varName(s.var) << "="
                  << ratToString(s.value) << " -> " << printFormula(s.after)
                  << "\n";
    }
    return 0;
}

int cmdSolve(const std::string& input, const std::string& backendExe,
             const std::string& configPath, const std::string& emitFmt,
             int timeoutSeconds) {
    FormulaPtr f = parseOrExit(readInput(input));
    FormulaPtr out = translateFormula(preparePipeline(f), ClearMode::Fair);

    BackendConfig cfg;
    cfg.exe = backendExe;
    if (!configPath.empty()) {
        std::string err;
        if (!loadBackendConfig(configPath, cfg, err)) {
            std::cerr << err << "\n";
            return kExitPrecondition;
        }
    }
    std::string payload =
        emitFmt == "smt2" ? emitSmt2(out) : emitQepcadStyle(out);
    BackendResult res = runBackend(cfg, payload, timeoutSeconds);
    switch (res.outcome) {
        case BackendOutcome::True:
            std::cout << "true\n";
            return 0;
        case BackendOutcome::False:
            std::cout << "false\n";
            return 1;
        case BackendOutcome::SpawnFailed:
            std::cerr << "backend spawn failure: " << cfg.exe << "\n";
            return kExitSpawn;
        case BackendOutcome::TimedOut:
            std::cerr << "backend timed out after " << timeoutSeconds
                      << "s\n";
            return kExitTimeout;
        default:
            std::cerr << "unparseable backend reply\n";
            return kExitUnparseable;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-order real-arithmetic formulas with division: "
                 "partial evaluation, grid satisfiability, and "
                 "division clearing"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string mode = "fair";
    std::string emitFmt = "text";
    bool trace = false;
    auto* clear = app.add_subcommand("clear", "translate away divisions");
    clear->add_option("input", input, "input file ('-' for stdin)");
    clear->add_option("--mode", mode, "noguard|naive|fair")
        ->check(CLI::IsMember({"noguard", "naive", "fair"}));
    clear->add_option("--emit", emitFmt, "text|smt2|qepcad")
        ->check(CLI::IsMember({"text", "smt2", "qepcad"}));
    clear->add_flag("--trace", trace, "print per-atom guard-ladder trace");

    std::string pevalInput = "-";
    std::vector<std::string> atFlags;
    auto* peval = app.add_subcommand("peval", "partially evaluate");
    peval->add_option("input", pevalInput, "input file ('-' for stdin)");
    peval->add_option("--at", atFlags, "var=rational (repeatable, in order)");

    std::string checkInput = "-";
    std::string gridSpec = "auto";
    auto* check = app.add_subcommand("check", "grid fair-satisfiability");
    check->add_option("input", checkInput, "input file ('-' for stdin)");
    check->add_option("--grid", gridSpec, "auto or \"x:-1,0,1;y:0,2\"");

    std::string solveInput = "-";
    std::string backendExe;
    std::string configPath;
    std::string solveEmit = "qepcad";
    int timeoutSeconds = 60;
    auto* solve = app.add_subcommand("solve", "fair-translate and hand to "
                                              "an external decision backend");
    solve->add_option("input", solveInput, "input file ('-' for stdin)");
    solve->add_option("--backend", backendExe, "backend executable")
        ->required();
    solve->add_option("--config", configPath, "key=value backend config");
    solve->add_option("--emit", solveEmit, "smt2|qepcad")
        ->check(CLI::IsMember({"smt2", "qepcad"}));
    solve->add_option("--timeout-seconds", timeoutSeconds,
                      "backend timeout (default 60)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (clear->parsed()) return cmdClear(input, mode, emitFmt, trace);
        if (peval->parsed()) return cmdPeval(pevalInput, atFlags);
        if (check->parsed()) return cmdCheck(checkInput, gridSpec);
        if (solve->parsed())
            return cmdSolve(solveInput, backendExe, configPath, solveEmit,
                            timeoutSeconds);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
