#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <string>

#include "pellab/errors.hpp"

namespace pellab {

// Exact arbitrary-precision integer used throughout. The complete-quotient
// data u_n, v_n, a_n is bounded by 2*sqrt(d) but shares this representation
// with the unbounded convergent numerators and denominators.
using Int = mpz_class;

/// floor(sqrt(n)) for n >= 0, computed on integers (GMP sqrtrem).
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// floor(a / b) for b != 0 (rounds toward -inf, unlike C++ '/').
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// a / b when b divides a exactly; throws divisibility_error otherwise.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw divisibility_error("exact_div: " + b.get_str() + " does not divide " + a.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Int& b, const Int& a) {
    return b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline bool fits_u64(const Int& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& n) {
    // mpz_get_ui truncates to unsigned long; assemble from limbs to stay
    // correct on 32-bit longs as well.
    std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
    if (mp_bits_per_limb == 32 && mpz_size(n.get_mpz_t()) > 1)
        lo |= static_cast<std::uint64_t>(mpz_getlimbn(n.get_mpz_t(), 1)) << 32;
    return lo;
}

/// floor(sqrt(n)) on uint64, integer Newton iteration.
inline std::uint64_t isqrt64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t x = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);  // x >= sqrt(n)
    for (;;) {
        std::uint64_t y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

inline bool is_square64(std::uint64_t n, std::uint64_t* root = nullptr) {
    // Quick residue filter: squares mod 64 take only 12 values.
    static constexpr std::uint64_t kMask = [] {
        std::uint64_t m = 0;
        for (unsigned i = 0; i < 64; ++i) m |= std::uint64_t{1} << ((i * i) % 64);
        return m;
    }();
    if (!((kMask >> (n % 64)) & 1)) return false;
    std::uint64_t r = isqrt64(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

}  // namespace pellab
