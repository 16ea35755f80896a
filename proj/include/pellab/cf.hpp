#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pellab/ints.hpp"

namespace pellab {

/// Periodic continued-fraction data of sqrt(d) for a nonsquare d >= 2:
///
///   sqrt(d) = [a0; a_1, a_2, ..., a_T, a_1, a_2, ...]
///
/// with the complete quotients x_n = (u_n + sqrt(d)) / v_n for n >= 1.
/// One minimal period is stored (indices 1..T); index 0 (u_0 = a0, v_0 = 1)
/// is implicit, and all three sequences extend T-periodically for n >= 1.
///
/// Structural guarantees (checked by the construction and asserted in tests):
///   - period.back() == 2*a0, and no earlier entry equals 2*a0;
///   - (a_1, ..., a_{T-1}) is a palindrome;
///   - 1 <= u_n <= a0, v_n >= 1, and v_n divides d - u_n^2;
///   - v_n == 1 within one period only at n == T.
struct SurdExpansion {
    Int d;
    Int a0;
    std::vector<Int> period;  // a_1 .. a_T
    std::vector<Int> u_seq;   // u_1 .. u_T
    std::vector<Int> v_seq;   // v_1 .. v_T

    std::uint64_t period_length() const { return period.size(); }

    /// Partial quotient a_n for any n >= 0 under the periodic extension.
    const Int& quotient_at(std::uint64_t n) const {
        return n == 0 ? a0 : period[(n - 1) % period.size()];
    }
};

/// Expands sqrt(d). The recurrence
///   u_{n+1} = a_n v_n - u_n,   v_{n+1} = (d - u_{n+1}^2) / v_n
/// runs from (u_0, v_0) = (a0, 1) and stops at the first index k >= 1 with
/// a_k == 2*a0, which is exactly the minimal period length.
///
/// Throws perfect_square_error when d < 2 or d is a perfect square, and
/// period_overflow_error if the safety cap of max(1e6, 100*ceil(sqrt(d)))
/// iterations is exceeded (an implementation bug: termination is guaranteed).
SurdExpansion expand_sqrt(const Int& d);

/// (u_r, v_r) with r = ((n-1) mod T) + 1, the T-periodic extension; n >= 1.
std::pair<Int, Int> uv_at(const SurdExpansion& exp, std::uint64_t n);

/// Convergent p_n / q_n of sqrt(d), in lowest terms.
struct Convergent {
    std::int64_t index = -1;
    Int p;
    Int q;
};

/// Pull-cursor over the convergents of sqrt(d) for n = 0, 1, 2, ...
/// Cursors are independent and cheap; construct a new one to restart.
/// The referenced expansion must outlive the stream.
class ConvergentStream {
public:
    explicit ConvergentStream(const SurdExpansion& exp) : exp_(&exp) {}

    Convergent next();

private:
    const SurdExpansion* exp_;
    std::int64_t n_ = 0;
    Int p_prev1_{1}, p_prev2_{0};  // p_{n-1}, p_{n-2}
    Int q_prev1_{0}, q_prev2_{1};
};

/// Convergent at a single index n >= 0 (walks the recurrence from scratch).
Convergent convergent_at(const SurdExpansion& exp, std::int64_t n);

/// p_{n-1}^2 - d q_{n-1}^2, computed directly from the convergents.
/// Equals (-1)^n v_n under the periodic extension, with v_0 = 1.
Int pell_value(const SurdExpansion& exp, std::uint64_t n);

}  // namespace pellab
