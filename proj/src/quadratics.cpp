#include "pellab/quadratics.hpp"

#include <limits>
#include <utility>

namespace pellab {

QuadraticSurd::QuadraticSurd(Int d, Int u, Int v) : d_(std::move(d)), u_(std::move(u)), v_(std::move(v)) {
    if (d_ < 2 || is_perfect_square(d_))
        throw perfect_square_error("QuadraticSurd: radicand " + d_.get_str() + " is a perfect square or < 2");
    if (v_ == 0) throw normalization_error("QuadraticSurd: v must be nonzero");
    if (!divides(v_, d_ - u_ * u_))
        throw normalization_error("QuadraticSurd: " + v_.get_str() + " does not divide d - u^2; use canonical_scaled");
}

QuadraticSurd canonical_scaled(const Int& d, const Int& u, const Int& v) {
    Int av = abs(v);
    return QuadraticSurd(d * v * v, u * av, v * av);
}

int compare_with_int(const QuadraticSurd& s, const Int& c) {
    Int w = s.u() - c * s.v();
    int sign;
    if (w >= 0) {
        sign = +1;
    } else {
        sign = (w * w < s.d()) ? +1 : -1;
    }
    return s.v() > 0 ? sign : -sign;
}

QuadraticSurd conjugate(const QuadraticSurd& s) { return QuadraticSurd(s.d(), -s.u(), -s.v()); }

QuadraticSurd add_int(const QuadraticSurd& s, const Int& c) {
    return QuadraticSurd(s.d(), s.u() + c * s.v(), s.v());
}

QuadraticSurd inverse(const QuadraticSurd& s) {
    return QuadraticSurd(s.d(), -s.u(), exact_div(s.d() - s.u() * s.u(), s.v()));
}

bool is_reduced(const QuadraticSurd& s) {
    if (compare_with_int(s, 1) < 0) return false;
    QuadraticSurd conj = conjugate(s);
    return compare_with_int(conj, -1) > 0 && compare_with_int(conj, 0) < 0;
}

namespace {

/// floor((u + sqrt(d)) / v). For v > 0 this is floor((u + isqrt(d)) / v);
/// for v < 0 the surd is never an integer, so floor(x) = -floor(-x) - 1.
Int floor_surd(const Int& u, const Int& v, const Int& a0) {
    if (v > 0) return floor_div(u + a0, v);
    return -(floor_div(u + a0, -v) + 1);
}

}  // namespace

std::vector<Int> expand_reduced(const QuadraticSurd& s) {
    if (!is_reduced(s))
        throw not_reduced_error("expand_reduced: (" + s.u().get_str() + "+sqrt(" + s.d().get_str() + "))/" +
                                s.v().get_str() + " is not reduced");

    const Int a0 = isqrt(s.d());
    std::vector<Int> period;
    Int u = s.u(), v = s.v();
    // Reduced surds have 0 < u < sqrt(d) and 0 < v < 2 sqrt(d), so the state
    // space is finite; the cap below only guards against bugs.
    std::uint64_t cap = 1000000;
    {
        Int c = 100 * (a0 + 1) * (a0 + 1);
        if (fits_u64(c) && to_u64(c) > cap) cap = to_u64(c);
    }
    for (std::uint64_t n = 0;; ++n) {
        if (n > cap)
            throw period_overflow_error("expand_reduced: iteration cap exceeded");
        Int a = floor_surd(u, v, a0);
        Int u_next = a * v - u;
        Int v_next = exact_div(s.d() - u_next * u_next, v);
        if (v_next <= 0)
            throw internal_error("expand_reduced: complete quotient left the reduced domain");
        period.push_back(std::move(a));
        u = std::move(u_next);
        v = std::move(v_next);
        if (u == s.u() && v == s.v()) break;
    }
    return period;
}

QuadraticSurd reversed_surd(const QuadraticSurd& s) {
    if (!is_reduced(s))
        throw not_reduced_error("reversed_surd: input is not reduced");
    return QuadraticSurd(s.d(), s.u(), exact_div(s.d() - s.u() * s.u(), s.v()));
}

}  // namespace pellab
