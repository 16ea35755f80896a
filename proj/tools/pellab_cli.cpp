// Command-line frontend for the Pell-Fermat and a x^2 - b y^2 = 1 solvers.
//
// Exit codes are a stable contract:
//   0   success / solvable
//   1   decidably no solutions
//   2   domain error (perfect square, non-coprime inputs, ...)
//   64  usage error
//   70  internal error (a bug, never an input problem)
//
// --json switches to the machine format: a single JSON object with a
// schema_version field and every big integer serialized as a decimal string.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "pellab/ab.hpp"
#include "pellab/cf.hpp"
#include "pellab/ints.hpp"
#include "pellab/oracle.hpp"
#include "pellab/pell.hpp"

using json = nlohmann::ordered_json;
using namespace pellab;

namespace {

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Accepts "123", "-3", "+5" and the key form "m=-3".
Int parse_int(std::string s) {
    if (s.rfind("m=", 0) == 0) s = s.substr(2);
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    try {
        if (s.empty()) throw std::invalid_argument("empty");
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw UsageError("not an integer: '" + s + "'");
    }
}

Int parse_natural(const std::string& s) {
    Int n = parse_int(s);
    if (n < 0) throw UsageError("expected a natural number, got '" + s + "'");
    return n;
}

std::uint64_t parse_bound(const std::string& s) {
    Int n = parse_natural(s);
    if (!fits_u64(n)) throw UsageError("bound too large: '" + s + "'");
    return to_u64(n);
}

json solutions_json(const std::vector<Solution>& sols) {
    json arr = json::array();
    for (const Solution& s : sols) arr.push_back({{"x", to_string(s.x)}, {"y", to_string(s.y)}});
    return arr;
}

void print_solutions_text(const std::vector<Solution>& sols) {
    std::size_t i = 0;
    for (const Solution& s : sols)
        std::cout << "  solution " << ++i << ": (" << to_string(s.x) << ", " << to_string(s.y) << ")\n";
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

/// "oracle pellgen" etc., following the chain of parsed subcommands.
std::string command_path(const CLI::App& app) {
    std::string path;
    const CLI::App* cur = &app;
    while (!cur->get_subcommands().empty()) {
        const CLI::App* sub = cur->get_subcommands().front();
        path += (path.empty() ? "" : " ") + sub->get_name();
        cur = sub;
    }
    return path;
}

// ---- cf -------------------------------------------------------------------

struct CfArgs {
    std::string d;
    std::size_t terms = 8;
};

int run_cf(const CfArgs& args, bool as_json) {
    Int d = parse_natural(args.d);
    SurdExpansion e = expand_sqrt(d);

    std::vector<Convergent> convs;
    ConvergentStream stream(e);
    for (std::size_t i = 0; i < args.terms; ++i) convs.push_back(stream.next());

    if (as_json) {
        json period = json::array(), u = json::array(), v = json::array();
        for (const Int& a : e.period) period.push_back(to_string(a));
        for (const Int& x : e.u_seq) u.push_back(to_string(x));
        for (const Int& x : e.v_seq) v.push_back(to_string(x));
        json cj = json::array();
        for (const Convergent& c : convs)
            cj.push_back({{"n", c.index}, {"p", to_string(c.p)}, {"q", to_string(c.q)}});
        emit({{"schema_version", kSchemaVersion},
              {"command", "cf"},
              {"inputs", {{"d", to_string(d)}, {"terms", args.terms}}},
              {"result",
               {{"a0", to_string(e.a0)},
                {"period", period},
                {"period_length", e.period_length()},
                {"u", u},
                {"v", v},
                {"convergents", cj}}}});
        return kExitOk;
    }

    std::cout << "sqrt(" << to_string(d) << ") = [" << to_string(e.a0) << ";";
    for (std::size_t j = 0; j < e.period.size(); ++j)
        std::cout << (j ? ", " : " ") << to_string(e.period[j]);
    std::cout << ", ...] with period length " << e.period_length() << "\n\n";
    std::cout << "  n    a_n    u_n    v_n\n";
    for (std::size_t j = 0; j < e.period.size(); ++j)
        std::cout << "  " << j + 1 << "    " << to_string(e.period[j]) << "    " << to_string(e.u_seq[j])
                  << "    " << to_string(e.v_seq[j]) << "\n";
    std::cout << "\nconvergents:\n";
    for (const Convergent& c : convs)
        std::cout << "  R_" << c.index << " = " << to_string(c.p) << "/" << to_string(c.q) << "\n";
    return kExitOk;
}

// ---- pell -----------------------------------------------------------------

struct PellArgs {
    std::string d;
    std::size_t count = 1;
};

int run_pell(const PellArgs& args, bool as_json) {
    Int d = parse_natural(args.d);
    PellResult r = solve_pell(d);
    std::vector<Solution> sols = enumerate_family(r.family, args.count);

    if (as_json) {
        emit({{"schema_version", kSchemaVersion},
              {"command", "pell"},
              {"inputs", {{"d", to_string(d)}, {"count", args.count}}},
              {"result",
               {{"period_length", r.family.expansion.period_length()},
                {"fundamental", {{"x", to_string(r.fundamental.x)}, {"y", to_string(r.fundamental.y)}}},
                {"solutions", solutions_json(sols)}}}});
        return kExitOk;
    }

    std::cout << "x^2 - " << to_string(d) << " y^2 = 1   (period length "
              << r.family.expansion.period_length() << ")\n";
    std::cout << "  fundamental solution: (" << to_string(r.fundamental.x) << ", "
              << to_string(r.fundamental.y) << ")\n";
    print_solutions_text(sols);
    return kExitOk;
}

// ---- pellgen --------------------------------------------------------------

struct PellGenArgs {
    std::string d, m;
    std::size_t count = 1;
    bool trivial = false;
    bool imprimitive = false;
};

json residues_json(const ResidueSets& r) {
    return {{"positive", r.pos}, {"negative", r.neg}};
}

int run_pellgen(const PellGenArgs& args, bool as_json) {
    Int d = parse_natural(args.d);
    Int m = parse_int(args.m);
    SolutionFamily f = solve_pell_general(d, m);
    std::vector<Solution> sols = enumerate_family(f, args.count, args.trivial, args.imprimitive);
    const bool solvable = !f.empty() || (args.trivial && f.trivial.has_value());

    if (as_json) {
        json branches = json::array();
        for (const Branch& b : f.branches) branches.push_back({{"start", b.start}, {"stride", b.stride}});
        json trivial = f.trivial ? json({{"x", to_string(f.trivial->x)}, {"y", to_string(f.trivial->y)}})
                                 : json(nullptr);
        emit({{"schema_version", kSchemaVersion},
              {"command", "pellgen"},
              {"inputs",
               {{"d", to_string(d)},
                {"m", to_string(m)},
                {"count", args.count},
                {"include_trivial", args.trivial},
                {"include_imprimitive", args.imprimitive}}},
              {"result",
               {{"solvable", solvable},
                {"residues", residues_json(f.residues)},
                {"branches", branches},
                {"trivial", trivial},
                {"solutions", solutions_json(sols)}}}});
        return solvable ? kExitOk : kExitNoSolution;
    }

    std::cout << "x^2 - " << to_string(d) << " y^2 = " << to_string(m) << "\n";
    auto print_set = [](const char* name, const std::vector<std::uint64_t>& v) {
        std::cout << "  " << name << " = {";
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
        std::cout << "}\n";
    };
    print_set("E_m", f.residues.pos);
    print_set("E_-m", f.residues.neg);
    if (f.trivial)
        std::cout << "  trivial solution: (" << to_string(f.trivial->x) << ", 0)"
                  << (args.trivial ? "" : "  [not enumerated; pass --trivial]") << "\n";
    if (!solvable) {
        std::cout << "  no nontrivial coprime solutions\n";
        return kExitNoSolution;
    }
    print_solutions_text(sols);
    return kExitOk;
}

// ---- ab -------------------------------------------------------------------

struct AbArgs {
    std::string a, b;
    std::size_t count = 1;
    bool negate = false;
};

const char* failure_name(AbFailure f) {
    switch (f) {
        case AbFailure::PerfectSquareAB: return "perfect_square_ab";
        case AbFailure::OddPeriod: return "odd_period";
        case AbFailure::PeriodParityMismatch: return "period_parity_mismatch";
        case AbFailure::MidpointValueMismatch: return "midpoint_value_mismatch";
        case AbFailure::MidpointDivisibilityFails: return "midpoint_divisibility_fails";
    }
    return "unknown";
}

int run_ab(const AbArgs& args, bool as_json) {
    Int a = parse_natural(args.a);
    Int b = parse_natural(args.b);
    // a x^2 - b y^2 = -1 is solved as b y^2 - a x^2 = 1 with coordinates swapped.
    AbVerdict verdict = args.negate ? solve_ab(b, a) : solve_ab(a, b);
    const Int rhs = args.negate ? Int(-1) : Int(1);

    std::vector<Solution> sols = enumerate_ab(verdict, args.count);
    if (args.negate)
        for (Solution& s : sols) std::swap(s.x, s.y);
    for (const Solution& s : sols)
        if (a * s.x * s.x - b * s.y * s.y != rhs) throw internal_error("ab: emitted solution failed recheck");

    json doc = {{"schema_version", kSchemaVersion},
                {"command", "ab"},
                {"inputs",
                 {{"a", to_string(a)}, {"b", to_string(b)}, {"count", args.count}, {"negate", args.negate}}}};
    const std::string equation =
        to_string(a) + " x^2 - " + to_string(b) + " y^2 = " + to_string(rhs);

    if (const auto* ns = std::get_if<AbNoSolution>(&verdict)) {
        if (as_json) {
            doc["result"] = {{"verdict", "no_solution"},
                             {"reason", failure_name(ns->reason)},
                             {"period_length", ns->period_length}};
            emit(doc);
        } else {
            std::cout << equation << "\n  no solutions: " << failure_name(ns->reason) << "\n";
        }
        return kExitNoSolution;
    }

    if (const auto* pc = std::get_if<AbPellCase>(&verdict)) {
        const bool any = !sols.empty();
        if (as_json) {
            doc["result"] = {{"verdict", "pell_case"}, {"solutions", solutions_json(sols)}};
            emit(doc);
        } else {
            std::cout << equation << "\n  Pell-Fermat case (a = 1 or b = 1)\n";
            if (any)
                print_solutions_text(sols);
            else
                std::cout << "  no solutions\n";
        }
        return any ? kExitOk : kExitNoSolution;
    }

    const auto& s = std::get<AbSolvable>(verdict);
    const std::uint64_t N = s.branch.start;
    // With --neg the verdict describes the swapped problem, so the divided
    // coordinate flips along with the swap above.
    bool divides_x = (s.orientation == AbOrientation::DivideX) != args.negate;
    if (as_json) {
        doc["result"] = {
            {"verdict", "solvable"},
            {"d", to_string(s.a * s.b)},
            {"period_length", s.expansion.period_length()},
            {"midpoint",
             {{"n", N}, {"u", to_string(s.expansion.u_seq[N - 1])}, {"v", to_string(s.expansion.v_seq[N - 1])}}},
            {"divisor", to_string(s.divisor)},
            {"divides", divides_x ? "x" : "y"},
            {"branch", {{"start", s.branch.start}, {"stride", s.branch.stride}}},
            {"solutions", solutions_json(sols)}};
        emit(doc);
        return kExitOk;
    }

    std::cout << equation << "\n";
    std::cout << "  d = " << to_string(s.a * s.b) << ", period length " << s.expansion.period_length()
              << ", midpoint N = " << N << ": u_N = " << to_string(s.expansion.u_seq[N - 1])
              << ", v_N = " << to_string(s.expansion.v_seq[N - 1]) << "\n";
    std::cout << "  solvable: " << (divides_x ? "x" : "y") << " = p/" << to_string(s.divisor)
              << " at convergent indices " << N - 1 << " + " << s.branch.stride << "k\n";
    print_solutions_text(sols);
    return kExitOk;
}

// ---- oracle ---------------------------------------------------------------

json report_json(const std::string& command, const json& inputs, const oracle::SearchReport& r,
                 bool with_coprime) {
    json result = {{"bound", to_string(r.bound)},
                   {"iterations", r.iterations},
                   {"solutions", solutions_json(r.solutions)}};
    if (with_coprime) result["coprime"] = solutions_json(r.coprime);
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", inputs}, {"result", result}};
}

void print_report_text(const std::string& header, const oracle::SearchReport& r) {
    std::cout << header << "  (bound " << to_string(r.bound) << ", " << r.iterations << " candidates)\n";
    if (r.solutions.empty()) {
        std::cout << "  no solutions within bound\n";
        return;
    }
    print_solutions_text(r.solutions);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact continued-fraction expansions of sqrt(d) and solvers for "
                 "x^2 - d y^2 = m and a x^2 - b y^2 = 1"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output (schema_version " +
                                        std::to_string(kSchemaVersion) + ")");

    CfArgs cf_args;
    CLI::App* cf = app.add_subcommand("cf", "periodic continued fraction of sqrt(d)");
    cf->add_option("d", cf_args.d, "radicand (natural, not a perfect square)")->required();
    cf->add_option("--terms", cf_args.terms, "number of convergents to print");
    cf->fallthrough();

    PellArgs pell_args;
    CLI::App* pell = app.add_subcommand("pell", "solve x^2 - d y^2 = 1");
    pell->add_option("d", pell_args.d)->required();
    pell->add_option("--count", pell_args.count, "number of solutions");
    pell->fallthrough();

    PellGenArgs pg_args;
    CLI::App* pellgen = app.add_subcommand("pellgen", "solve x^2 - d y^2 = m");
    pellgen->add_option("d", pg_args.d)->required();
    pellgen->add_option("m", pg_args.m, "accepts -3, m=-3, or -- -3")->required();
    pellgen->add_option("--count", pg_args.count);
    pellgen->add_flag("--trivial", pg_args.trivial, "include the trivial solution (sqrt(m), 0)");
    pellgen->add_flag("--imprimitive", pg_args.imprimitive, "include gcd(x, y) > 1 solutions");
    pellgen->fallthrough();

    AbArgs ab_args;
    CLI::App* ab = app.add_subcommand("ab", "solve a x^2 - b y^2 = 1 for coprime a, b");
    ab->add_option("a", ab_args.a)->required();
    ab->add_option("b", ab_args.b)->required();
    ab->add_option("--count", ab_args.count);
    ab->add_flag("--neg", ab_args.negate, "solve a x^2 - b y^2 = -1 instead");
    ab->fallthrough();

    CLI::App* orc = app.add_subcommand("oracle", "bounded brute-force searches");
    orc->require_subcommand(1);
    orc->fallthrough();

    struct {
        std::string d, m, bound = "10000";
    } opg;
    CLI::App* opellgen = orc->add_subcommand("pellgen", "scan y = 0..bound for x^2 - d y^2 = m");
    opellgen->add_option("d", opg.d)->required();
    opellgen->add_option("m", opg.m)->required();
    opellgen->add_option("--bound", opg.bound);
    opellgen->fallthrough();

    struct {
        std::string a, b, bound = "100000";
    } oab;
    CLI::App* oracle_ab = orc->add_subcommand("ab", "scan x = 1..bound for a x^2 - b y^2 = 1");
    oracle_ab->add_option("a", oab.a)->required();
    oracle_ab->add_option("b", oab.b)->required();
    oracle_ab->add_option("--bound", oab.bound);
    oracle_ab->fallthrough();

    struct {
        std::string a, b, n, bound = "1000";
    } oth;
    CLI::App* othue = orc->add_subcommand("thue", "scan the box |x|,|y| <= bound for a x^n - b y^n = 1");
    othue->add_option("a", oth.a)->required();
    othue->add_option("b", oth.b)->required();
    othue->add_option("n", oth.n)->required();
    othue->add_option("--bound", oth.bound);
    othue->fallthrough();

    struct {
        std::string d, bound = "200";
    } olg;
    CLI::App* olegendre =
        orc->add_subcommand("legendre", "coprime p/q with |sqrt(d) - p/q| < 1/(2q^2), q <= bound");
    olegendre->add_option("d", olg.d)->required();
    olegendre->add_option("--bound", olg.bound);
    olegendre->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cf->parsed()) return run_cf(cf_args, as_json);
        if (pell->parsed()) return run_pell(pell_args, as_json);
        if (pellgen->parsed()) return run_pellgen(pg_args, as_json);
        if (ab->parsed()) return run_ab(ab_args, as_json);

        if (opellgen->parsed()) {
            Int d = parse_natural(opg.d), m = parse_int(opg.m);
            oracle::SearchReport r = oracle::pell_general(d, m, parse_bound(opg.bound));
            if (as_json)
                emit(report_json("oracle pellgen",
                                 {{"d", to_string(d)}, {"m", to_string(m)}, {"bound", to_string(r.bound)}}, r,
                                 true));
            else
                print_report_text("search x^2 - " + to_string(d) + " y^2 = " + to_string(m), r);
            return kExitOk;
        }
        if (oracle_ab->parsed()) {
            Int a = parse_natural(oab.a), b = parse_natural(oab.b);
            oracle::SearchReport r = oracle::ab(a, b, parse_bound(oab.bound));
            if (as_json)
                emit(report_json("oracle ab",
                                 {{"a", to_string(a)}, {"b", to_string(b)}, {"bound", to_string(r.bound)}}, r,
                                 false));
            else
                print_report_text("search " + to_string(a) + " x^2 - " + to_string(b) + " y^2 = 1", r);
            return kExitOk;
        }
        if (othue->parsed()) {
            Int a = parse_int(oth.a), b = parse_int(oth.b);
            Int n = parse_natural(oth.n);
            if (n < 3 || n > 64) throw UsageError("n must be in [3, 64]");
            oracle::SearchReport r =
                oracle::thue(a, b, static_cast<unsigned>(to_u64(n)), parse_bound(oth.bound));
            if (as_json)
                emit(report_json("oracle thue",
                                 {{"a", to_string(a)},
                                  {"b", to_string(b)},
                                  {"n", static_cast<std::uint64_t>(to_u64(n))},
                                  {"bound", to_string(r.bound)}},
                                 r, false));
            else
                print_report_text("search " + to_string(a) + " x^" + to_string(n) + " - " + to_string(b) +
                                      " y^" + to_string(n) + " = 1 over the signed box",
                                  r);
            return kExitOk;
        }
        if (olegendre->parsed()) {
            Int d = parse_natural(olg.d);
            oracle::SearchReport r = oracle::legendre(d, parse_bound(olg.bound));
            if (as_json)
                emit(report_json("oracle legendre", {{"d", to_string(d)}, {"bound", to_string(r.bound)}}, r,
                                 false));
            else
                print_report_text("strong rational approximations of sqrt(" + to_string(d) + ")", r);
            return kExitOk;
        }
        std::cerr << "usage error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const error& e) {
        if (as_json) {
            emit({{"schema_version", kSchemaVersion}, {"command", command_path(app)}, {"error", e.what()}});
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return kExitDomain;
    }
}
