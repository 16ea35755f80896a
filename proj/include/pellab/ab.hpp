#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pellab/cf.hpp"
#include "pellab/ints.hpp"
#include "pellab/pell.hpp"

namespace pellab {

/// Why a x^2 - b y^2 = 1 has no natural solution, in the order the
/// conditions are checked (the first failing one is reported).
enum class AbFailure {
    PerfectSquareAB,            // a, b >= 2 (or b = 1, a >= 4 square) with ab a perfect square
    OddPeriod,                  // T odd
    PeriodParityMismatch,       // T mod 4 does not match the a<b / b<a orientation
    MidpointValueMismatch,      // v_{T/2} != min(a, b)
    MidpointDivisibilityFails,  // v_{T/2} does not divide u_{T/2}
};

/// Which coordinate carries the exact division by the midpoint value:
/// a < b divides x by a; b < a divides y by b.
enum class AbOrientation { DivideX, DivideY };

/// Solvable case: solutions are, for l = 0, 1, 2, ...,
///   (p_{N-1+lT}/a, q_{N-1+lT})   when a < b (DivideX), or
///   (q_{N-1+lT}, p_{N-1+lT}/b)   when b < a (DivideY),
/// with N = T/2. branch = (N, T) on convergent indices.
struct AbSolvable {
    Int a;
    Int b;
    SurdExpansion expansion;  // of sqrt(ab)
    Branch branch;
    Int divisor;  // a or b
    AbOrientation orientation;
};

struct AbNoSolution {
    Int a;
    Int b;
    AbFailure reason;
    std::uint64_t period_length = 0;  // 0 when the expansion was never needed
};

/// a = 1 and/or b = 1: the equation is a plain Pell-Fermat instance.
/// a = 1: x^2 - b y^2 = 1 directly (solutions include (1, 0); only (1, 0)
///        when b is a perfect square).
/// b = 1: y^2 - a x^2 = -1 with coordinates swapped.
struct AbPellCase {
    Int a;
    Int b;
};

using AbVerdict = std::variant<AbSolvable, AbNoSolution, AbPellCase>;

/// Decides a x^2 - b y^2 = 1 for coprime naturals a, b >= 1. Conditions are
/// checked in a fixed order so NoSolution reasons are deterministic:
/// square ab, then period parity (odd, then mod 4 against the orientation),
/// then the midpoint value v_{T/2}, then divisibility v_{T/2} | u_{T/2}.
/// Throws not_coprime_error when gcd(a, b) != 1.
AbVerdict solve_ab(const Int& a, const Int& b);

/// The first `count` solutions of a Solvable or PellCase verdict, ordered by
/// y ascending. Exactness of the division by a (or b) and of the equation is
/// verified on every emission (divisibility_error / internal_error signal
/// bugs, never inputs).
std::vector<Solution> enumerate_ab(const AbVerdict& verdict, std::size_t count);

/// All solutions with x <= x_bound.
std::vector<Solution> enumerate_ab_up_to_x(const AbVerdict& verdict, const Int& x_bound);

/// Corollaire-21 fast path, used as a consistency oracle against solve_ab:
/// when 2 <= a < b, a odd, ab nonsquare and T = 0 (mod 4), solvability is
/// equivalent to v_{T/2} == a (mirrored: 2 <= b < a, b odd, T = 2 (mod 4),
/// v_{T/2} == b). Returns the truth of that equation, or nullopt when the
/// hypotheses do not apply.
std::optional<bool> check_corollary21(const Int& a, const Int& b);

}  // namespace pellab
