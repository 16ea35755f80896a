#include "pellab/cf.hpp"

#include <limits>

namespace pellab {

namespace {

std::uint64_t expansion_cap(const Int& a0) {
    // max(1e6, 100 * ceil(sqrt(d))), saturated; hitting it is a bug, not input.
    Int cap = 100 * (a0 + 1);
    if (!fits_u64(cap)) return std::numeric_limits<std::uint64_t>::max();
    std::uint64_t c = to_u64(cap);
    return c < 1000000 ? 1000000 : c;
}

}  // namespace

SurdExpansion expand_sqrt(const Int& d) {
    if (d < 2 || is_perfect_square(d))
        throw perfect_square_error("expand_sqrt: " + d.get_str() +
                                   " is a perfect square (or < 2); sqrt has no periodic expansion");

    SurdExpansion e;
    e.d = d;
    e.a0 = isqrt(d);
    const Int two_a0 = 2 * e.a0;
    const std::uint64_t cap = expansion_cap(e.a0);

    // (u, v, a) start at index 0: u_0 = a0, v_0 = 1, a'_0 = 2*a0.
    Int u = e.a0, v = 1, a = two_a0;
    for (std::uint64_t n = 1;; ++n) {
        if (n > cap)
            throw period_overflow_error("expand_sqrt: iteration cap exceeded for d = " + d.get_str());
        Int u_next = a * v - u;
        Int v_next = exact_div(d - u_next * u_next, v);
        Int a_next = (u_next + e.a0) / v_next;  // v_next >= 1, so plain division is floor
        e.u_seq.push_back(u_next);
        e.v_seq.push_back(v_next);
        e.period.push_back(a_next);
        if (a_next == two_a0) break;
        u = std::move(u_next);
        v = std::move(v_next);
        a = std::move(a_next);
    }
    return e;
}

std::pair<Int, Int> uv_at(const SurdExpansion& exp, std::uint64_t n) {
    const std::size_t r = static_cast<std::size_t>((n - 1) % exp.period_length());
    return {exp.u_seq[r], exp.v_seq[r]};
}

Convergent ConvergentStream::next() {
    Convergent c;
    const Int& a = exp_->quotient_at(static_cast<std::uint64_t>(n_));
    c.index = n_;
    c.p = a * p_prev1_ + p_prev2_;
    c.q = a * q_prev1_ + q_prev2_;
    p_prev2_ = std::move(p_prev1_);
    p_prev1_ = c.p;
    q_prev2_ = std::move(q_prev1_);
    q_prev1_ = c.q;
    ++n_;
    return c;
}

Convergent convergent_at(const SurdExpansion& exp, std::int64_t n) {
    ConvergentStream s(exp);
    Convergent c;
    for (std::int64_t i = 0; i <= n; ++i) c = s.next();
    return c;
}

Int pell_value(const SurdExpansion& exp, std::uint64_t n) {
    if (n == 0) return 1;  // p_{-1} = 1, q_{-1} = 0
    Convergent c = convergent_at(exp, static_cast<std::int64_t>(n) - 1);
    return c.p * c.p - exp.d * c.q * c.q;
}

}  // namespace pellab
