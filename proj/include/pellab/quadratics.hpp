#pragma once

#include <vector>

#include "pellab/ints.hpp"

namespace pellab {

/// A quadratic surd (u + sqrt(d)) / v in canonical integer form:
/// d >= 2 nonsquare, v != 0, and v divides d - u^2.
///
/// Construction rejects non-canonical triples (normalization_error) instead
/// of rescaling d behind the caller's back; canonical_scaled() builds the
/// equivalent canonical surd over d * v^2 when needed.
class QuadraticSurd {
public:
    QuadraticSurd(Int d, Int u, Int v);

    const Int& d() const { return d_; }
    const Int& u() const { return u_; }
    const Int& v() const { return v_; }

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
        return a.d_ == b.d_ && a.u_ == b.u_ && a.v_ == b.v_;
    }

private:
    Int d_, u_, v_;
};

/// The equivalent canonical surd for an arbitrary triple:
/// (u + sqrt(d))/v == (u|v| + sqrt(d v^2)) / (v|v|), and v|v| always divides
/// d v^2 - (u|v|)^2. Note the radicand changes to d * v^2.
QuadraticSurd canonical_scaled(const Int& d, const Int& u, const Int& v);

/// Exact sign of s - c for an integer c, by case analysis and squaring;
/// never floats. With w = u - c*v:
///
///     v > 0, w >= 0            ->  +1
///     v > 0, w < 0, w^2 < d    ->  +1   (sqrt(d) > -w)
///     v > 0, w < 0, w^2 > d    ->  -1
///     v < 0, w >= 0            ->  -1   (the v > 0 case, negated)
///     v < 0, w < 0, w^2 < d    ->  -1
///     v < 0, w < 0, w^2 > d    ->  +1
///
/// w^2 == d cannot occur since d is not a perfect square, so the result is
/// never 0.
int compare_with_int(const QuadraticSurd& s, const Int& c);

/// (u - sqrt(d)) / v, represented as ((-u) + sqrt(d)) / (-v). Involution;
/// commutes with add_int and inverse.
QuadraticSurd conjugate(const QuadraticSurd& s);

/// c + s = ((u + c v) + sqrt(d)) / v.
QuadraticSurd add_int(const QuadraticSurd& s, const Int& c);

/// 1 / s = ((-u) + sqrt(d)) / ((d - u^2) / v).
QuadraticSurd inverse(const QuadraticSurd& s);

/// True iff s > 1 and -1 < conjugate(s) < 0 (exact comparisons only).
/// These are exactly the surds with purely periodic expansions.
bool is_reduced(const QuadraticSurd& s);

/// One minimal period (a_0, ..., a_{T-1}) of the purely periodic expansion
/// of a reduced surd: runs x_{k+1} = 1 / (x_k - a_k) in canonical (u, v)
/// arithmetic until the state returns to the start. Throws not_reduced_error
/// when the precondition fails.
std::vector<Int> expand_reduced(const QuadraticSurd& s);

/// -1 / conjugate(s) = (u + sqrt(d)) / ((d - u^2) / v), for reduced s.
/// Its minimal period is the reverse of expand_reduced(s).
QuadraticSurd reversed_surd(const QuadraticSurd& s);

}  // namespace pellab
