#include "pellab/ab.hpp"

#include <utility>

namespace pellab {

namespace {

Solution make_checked_ab(Int x, Int y, const Int& a, const Int& b) {
    if (a * x * x - b * y * y != 1)
        throw internal_error("ab solution check failed: (" + x.get_str() + ", " + y.get_str() + ") for a = " +
                             a.get_str() + ", b = " + b.get_str());
    return Solution{std::move(x), std::move(y)};
}

Solution from_convergent(const AbSolvable& s, const Convergent& c) {
    if (!divides(s.divisor, c.p))
        throw divisibility_error("enumerate_ab: " + s.divisor.get_str() + " does not divide p_" +
                                 std::to_string(c.index));
    Int quotient = exact_div(c.p, s.divisor);
    if (s.orientation == AbOrientation::DivideX)
        return make_checked_ab(std::move(quotient), c.q, s.a, s.b);
    return make_checked_ab(c.q, std::move(quotient), s.a, s.b);
}

/// Natural solutions of the a = 1 / b = 1 degenerate cases, ordered by y
/// (equivalently by x: both coordinates grow together). Exactly one of
/// `count` / `x_bound` limits the enumeration.
std::vector<Solution> enumerate_pell_case(const AbPellCase& pc, std::size_t count, const Int* x_bound) {
    std::vector<Solution> out;

    if (pc.a == 1) {
        // x^2 - b y^2 = 1; (1, 0) is always a solution, and the only one
        // when b is a perfect square.
        if (x_bound ? *x_bound >= 1 : count > 0)
            out.push_back(make_checked_ab(Int(1), Int(0), pc.a, pc.b));
        if (pc.b == 1 || is_perfect_square(pc.b) || out.empty()) return out;
        SolutionFamily fam = solve_pell_general(pc.b, Int(1));
        // y < x for every solution, so y <= x_bound captures all of them.
        std::vector<Solution> sols =
            x_bound ? enumerate_family_up_to_y(fam, *x_bound) : enumerate_family(fam, count - 1);
        for (Solution& s : sols) {
            if (x_bound && s.x > *x_bound) break;
            out.push_back(make_checked_ab(std::move(s.x), std::move(s.y), pc.a, pc.b));
        }
        return out;
    }

    // b = 1, a >= 2 nonsquare: a x^2 - y^2 = 1 is Y^2 - a X^2 = -1 with
    // (x, y) = (X, Y); the family's y coordinate is exactly our x.
    SolutionFamily fam = solve_pell_general(pc.a, Int(-1));
    std::vector<Solution> sols =
        x_bound ? enumerate_family_up_to_y(fam, *x_bound) : enumerate_family(fam, count);
    for (Solution& s : sols) out.push_back(make_checked_ab(std::move(s.y), std::move(s.x), pc.a, pc.b));
    return out;
}

}  // namespace

AbVerdict solve_ab(const Int& a, const Int& b) {
    if (a < 1 || b < 1 || gcd(a, b) != 1)
        throw not_coprime_error("solve_ab: a and b must be coprime naturals, got a = " + a.get_str() +
                                ", b = " + b.get_str());

    if (a == 1) return AbPellCase{a, b};
    if (b == 1) {
        if (is_perfect_square(a)) return AbNoSolution{a, b, AbFailure::PerfectSquareAB};
        return AbPellCase{a, b};
    }

    const Int d = a * b;
    if (is_perfect_square(d)) return AbNoSolution{a, b, AbFailure::PerfectSquareAB};

    SurdExpansion exp = expand_sqrt(d);
    const std::uint64_t T = exp.period_length();
    if (T % 2 != 0) return AbNoSolution{a, b, AbFailure::OddPeriod, T};

    // gcd(a, b) = 1 and a, b >= 2 rule out a == b.
    const bool a_smaller = a < b;
    if (a_smaller ? (T % 4 != 0) : (T % 4 != 2))
        return AbNoSolution{a, b, AbFailure::PeriodParityMismatch, T};

    const std::uint64_t N = T / 2;
    const Int& vN = exp.v_seq[N - 1];
    const Int& uN = exp.u_seq[N - 1];
    const Int& divisor = a_smaller ? a : b;
    if (vN != divisor) return AbNoSolution{a, b, AbFailure::MidpointValueMismatch, T};
    if (!divides(vN, uN)) return AbNoSolution{a, b, AbFailure::MidpointDivisibilityFails, T};

    return AbSolvable{a, b, std::move(exp), Branch{N, T}, divisor,
                      a_smaller ? AbOrientation::DivideX : AbOrientation::DivideY};
}

std::vector<Solution> enumerate_ab(const AbVerdict& verdict, std::size_t count) {
    std::vector<Solution> out;
    if (const auto* pc = std::get_if<AbPellCase>(&verdict)) return enumerate_pell_case(*pc, count, nullptr);
    const auto* s = std::get_if<AbSolvable>(&verdict);
    if (!s) return out;  // NoSolution

    ConvergentStream stream(s->expansion);
    std::uint64_t index = s->branch.start - 1;
    while (out.size() < count) {
        Convergent c;
        do {
            c = stream.next();
        } while (static_cast<std::uint64_t>(c.index) != index);
        out.push_back(from_convergent(*s, c));
        index += s->branch.stride;
    }
    return out;
}

std::vector<Solution> enumerate_ab_up_to_x(const AbVerdict& verdict, const Int& x_bound) {
    std::vector<Solution> out;
    if (const auto* pc = std::get_if<AbPellCase>(&verdict)) return enumerate_pell_case(*pc, 0, &x_bound);
    const auto* s = std::get_if<AbSolvable>(&verdict);
    if (!s) return out;

    ConvergentStream stream(s->expansion);
    std::uint64_t index = s->branch.start - 1;
    for (;;) {
        Convergent c;
        do {
            c = stream.next();
        } while (static_cast<std::uint64_t>(c.index) != index);
        Solution sol = from_convergent(*s, c);
        if (sol.x > x_bound) return out;
        out.push_back(std::move(sol));
        index += s->branch.stride;
    }
}

std::optional<bool> check_corollary21(const Int& a, const Int& b) {
    if (a < 1 || b < 1 || gcd(a, b) != 1)
        throw not_coprime_error("check_corollary21: a and b must be coprime naturals");
    if (a < 2 || b < 2 || a == b || is_perfect_square(a * b)) return std::nullopt;

    const bool direct = a < b;           // Corollaire 21 proper
    const Int& small = direct ? a : b;   // mirrored case per Remarque 22.2
    if (small % 2 == 0) return std::nullopt;

    SurdExpansion exp = expand_sqrt(a * b);
    const std::uint64_t T = exp.period_length();
    if (T % 2 != 0) return std::nullopt;
    if (direct ? (T % 4 != 0) : (T % 4 != 2)) return std::nullopt;

    return exp.v_seq[T / 2 - 1] == small;
}

}  // namespace pellab
