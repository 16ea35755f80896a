#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pellab/ints.hpp"
#include "pellab/pell.hpp"

namespace pellab::oracle {

/// Result of one bounded brute-force search. Every reported pair has been
/// re-verified by exact substitution into the equation, and the list is
/// sorted by y then x. Emptiness means "none within the bound", never a
/// global statement.
struct SearchReport {
    std::string kind;  // "pell_general" | "ab" | "thue" | "legendre"
    std::vector<Int> params;
    Int bound;
    std::vector<Solution> solutions;
    std::vector<Solution> coprime;  // pell_general only: x, y >= 1 with gcd(x, y) = 1
    std::uint64_t iterations = 0;

    friend bool operator==(const SearchReport& a, const SearchReport& b) {
        return a.kind == b.kind && a.params == b.params && a.bound == b.bound &&
               a.solutions == b.solutions && a.coprime == b.coprime && a.iterations == b.iterations;
    }
};

// The searches below are OpenMP kernels: the candidate range is cut into
// fixed blocks scanned in parallel and reassembled in block order, so the
// report is identical for any thread count. oracle::serial holds the plain
// single-loop reference implementations the tests compare against, and
// tools/bench_oracle.cpp times one against the other.
//
// Candidate tests run on exact integers only. A 64-bit kernel is used when
// the largest intermediate provably fits (checked in bigint arithmetic);
// otherwise the same scan runs on bigints.

/// x^2 - d y^2 = m for y = 0..y_bound: reports every natural (x, y), and in
/// `coprime` the nontrivial coprime subset (x, y >= 1, gcd = 1) that
/// solve_pell_general must reproduce.
SearchReport pell_general(const Int& d, const Int& m, std::uint64_t y_bound);

/// a x^2 - b y^2 = 1 for x = 1..x_bound, natural y.
SearchReport ab(const Int& a, const Int& b, std::uint64_t x_bound);

/// a x^n - b y^n = 1 over the box x, y in [-bound, bound], n >= 3.
/// y is recovered from each x by exact divisibility and an exact integer
/// n-th root, which reports exactly the solutions in the box.
SearchReport thue(const Int& a, const Int& b, unsigned n, std::uint64_t bound);

/// All coprime p/q with 1 <= q <= q_bound and |sqrt(d) - p/q| < 1/(2q^2),
/// tested exactly: with K = 2pq >= 2 the inequality is equivalent to
///   (K - 1)^2 < 4 q^4 d < (K + 1)^2,
/// obtained by clearing the radical (|2q^2 sqrt(d) - K| < 1 and squaring,
/// valid since both sides are positive). At most one p qualifies per q, and
/// only p in {floor(q sqrt(d)), floor(q sqrt(d)) + 1} can. Every hit is
/// verified to be a convergent of sqrt(d); a miss would disprove Legendre
/// and raises internal_error.
SearchReport legendre(const Int& d, std::uint64_t q_bound);

namespace serial {

SearchReport pell_general(const Int& d, const Int& m, std::uint64_t y_bound);
SearchReport ab(const Int& a, const Int& b, std::uint64_t x_bound);
SearchReport thue(const Int& a, const Int& b, unsigned n, std::uint64_t bound);
SearchReport legendre(const Int& d, std::uint64_t q_bound);

}  // namespace serial

}  // namespace pellab::oracle
