#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pellab/cf.hpp"
#include "pellab/ints.hpp"

namespace pellab {

/// A natural solution (x, y) of x^2 - d y^2 = m (or a x^2 - b y^2 = 1 in the
/// ab context). Emission sites verify the equation exactly before handing
/// one out.
struct Solution {
    Int x;
    Int y;

    friend bool operator==(const Solution& a, const Solution& b) { return a.x == b.x && a.y == b.y; }
};

/// One arithmetic progression of convergent indices: the branch generates
/// indices start + k*stride - 1 for k = 0, 1, 2, ...
struct Branch {
    std::uint64_t start = 0;
    std::uint64_t stride = 0;
};

/// E_m and E_{-m}: the indices j in [1, T] with (-1)^j v_j = m (resp. -m).
struct ResidueSets {
    std::vector<std::uint64_t> pos;  // E_m
    std::vector<std::uint64_t> neg;  // E_{-m}
};

/// Residue sets for m restricted to 1 <= |m| < sqrt(d) (checked exactly as
/// m^2 < d); throws magnitude_error otherwise.
ResidueSets residue_sets(const SurdExpansion& exp, const Int& m);

/// Finite description of the solution set of x^2 - d y^2 = m in coprime
/// naturals: each branch generates the convergent indices of one arithmetic
/// progression of solutions (stride T when T is even, 2T when odd).
///
/// For 1 <= |m| < sqrt(d) the family is complete: it is empty exactly when
/// the equation has no nontrivial coprime solution. For larger |m| the
/// branch solutions are still genuine (each emitted pair is verified
/// exactly), but solutions that are not convergents of sqrt(d) fall outside
/// the method, so emptiness is not a proof.
struct SolutionFamily {
    Int d;
    Int m;
    SurdExpansion expansion;
    std::vector<Branch> branches;
    std::optional<Solution> trivial;  // (sqrt(m), 0) when m is a perfect square
    ResidueSets residues;

    bool empty() const { return branches.empty(); }
};

/// Builds the family for x^2 - d y^2 = m. Throws perfect_square_error for
/// square (or < 2) d and magnitude_error for m = 0.
SolutionFamily solve_pell_general(const Int& d, const Int& m);

/// Same, reusing an existing expansion of sqrt(d).
SolutionFamily solve_pell_general(const SurdExpansion& exp, const Int& m);

/// x^2 - d y^2 = 1: the fundamental solution (convergent T-1 for even T,
/// 2T-1 for odd T) together with the full family.
struct PellResult {
    Solution fundamental;
    SolutionFamily family;
};

PellResult solve_pell(const Int& d);

/// The first `count` solutions ordered by y ascending. With
/// include_trivial, (sqrt(m), 0) is emitted first when m is a perfect
/// square; with include_imprimitive, solutions delta * (x', y') for every
/// delta >= 2 with delta^2 | m are merged in, (x', y') ranging over the
/// primitive solutions of x^2 - d y^2 = m / delta^2.
std::vector<Solution> enumerate_family(const SolutionFamily& f, std::size_t count,
                                       bool include_trivial = false, bool include_imprimitive = false);

/// All solutions with y <= y_bound, same ordering and flags.
std::vector<Solution> enumerate_family_up_to_y(const SolutionFamily& f, const Int& y_bound,
                                               bool include_trivial = false,
                                               bool include_imprimitive = false);

}  // namespace pellab
