#include "pellab/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "pellab/cf.hpp"

namespace pellab::oracle {

namespace {

constexpr std::uint64_t kBlock = 8192;

/// Scans [lo, lo + n) in fixed blocks, parallel across blocks, and
/// concatenates the per-block hits in block order: the result is identical
/// to a plain ascending loop regardless of thread count.
template <typename PerIndex>
std::vector<Solution> blocked_scan(std::uint64_t lo, std::uint64_t n, const PerIndex& test) {
    const std::int64_t nblocks = static_cast<std::int64_t>((n + kBlock - 1) / kBlock);
    std::vector<std::vector<Solution>> hits(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t blk = 0; blk < nblocks; ++blk) {
        const std::uint64_t begin = lo + static_cast<std::uint64_t>(blk) * kBlock;
        const std::uint64_t end = std::min(lo + n, begin + kBlock);
        std::vector<Solution>& out = hits[static_cast<std::size_t>(blk)];
        for (std::uint64_t i = begin; i < end; ++i) test(i, out);
    }
    std::vector<Solution> all;
    for (std::vector<Solution>& h : hits)
        for (Solution& s : h) all.push_back(std::move(s));
    return all;
}

template <typename PerIndex>
std::vector<Solution> plain_scan(std::uint64_t lo, std::uint64_t n, const PerIndex& test) {
    std::vector<Solution> all;
    for (std::uint64_t i = lo; i < lo + n; ++i) test(i, all);
    return all;
}

// ---- x^2 - d y^2 = m ------------------------------------------------------

struct PellScan {
    Int d, m;
    bool fast = false;  // 64-bit kernel is exact for the whole range
    std::uint64_t d64 = 0, am64 = 0;
    bool m_neg = false;

    PellScan(const Int& d_in, const Int& m_in, std::uint64_t y_bound) : d(d_in), m(m_in) {
        if (d < 2 || is_perfect_square(d))
            throw perfect_square_error("oracle::pell_general: d must be a nonsquare >= 2");
        if (m == 0) throw magnitude_error("oracle::pell_general: m must be nonzero");
        Int yb(static_cast<unsigned long>(y_bound));
        Int worst = d * yb * yb + abs(m);
        fast = fits_u64(worst) && to_u64(worst) <= std::uint64_t(-1) - 2;
        if (fast) {
            d64 = to_u64(d);
            am64 = to_u64(Int(abs(m)));
            m_neg = m < 0;
        }
    }

    void operator()(std::uint64_t y, std::vector<Solution>& out) const {
        if (fast) {
            std::uint64_t t = d64 * y * y;
            if (m_neg) {
                if (t < am64) return;
                t -= am64;
            } else {
                t += am64;
            }
            std::uint64_t x;
            if (is_square64(t, &x))
                out.push_back(Solution{Int(static_cast<unsigned long>(x)), Int(static_cast<unsigned long>(y))});
            return;
        }
        Int yy(static_cast<unsigned long>(y));
        Int t = d * yy * yy + m;
        if (t >= 0 && is_perfect_square(t)) out.push_back(Solution{isqrt(t), std::move(yy)});
    }

    SearchReport finish(std::vector<Solution> sols, std::uint64_t y_bound) const {
        SearchReport r;
        r.kind = "pell_general";
        r.params = {d, m};
        r.bound = Int(static_cast<unsigned long>(y_bound));
        r.iterations = y_bound + 1;
        for (const Solution& s : sols) {
            if (s.x * s.x - d * s.y * s.y != m)
                throw internal_error("oracle::pell_general: verification failed");
            if (s.x >= 1 && s.y >= 1 && gcd(s.x, s.y) == 1) r.coprime.push_back(s);
        }
        r.solutions = std::move(sols);
        return r;
    }
};

// ---- a x^2 - b y^2 = 1 ----------------------------------------------------

struct AbScan {
    Int a, b;
    bool fast = false;
    std::uint64_t a64 = 0, b64 = 0;

    AbScan(const Int& a_in, const Int& b_in, std::uint64_t x_bound) : a(a_in), b(b_in) {
        if (a < 1 || b < 1) throw error("oracle::ab: a and b must be naturals >= 1");
        Int xb(static_cast<unsigned long>(x_bound));
        Int worst = a * xb * xb;
        fast = fits_u64(worst) && fits_u64(b);
        if (fast) {
            a64 = to_u64(a);
            b64 = to_u64(b);
        }
    }

    void operator()(std::uint64_t x, std::vector<Solution>& out) const {
        if (fast) {
            std::uint64_t t = a64 * x * x - 1;
            if (t % b64 != 0) return;
            std::uint64_t y;
            if (is_square64(t / b64, &y))
                out.push_back(Solution{Int(static_cast<unsigned long>(x)), Int(static_cast<unsigned long>(y))});
            return;
        }
        Int xx(static_cast<unsigned long>(x));
        Int t = a * xx * xx - 1;
        if (!divides(b, t)) return;
        Int w = exact_div(t, b);
        if (is_perfect_square(w)) out.push_back(Solution{std::move(xx), isqrt(w)});
    }

    SearchReport finish(std::vector<Solution> sols, std::uint64_t x_bound) const {
        SearchReport r;
        r.kind = "ab";
        r.params = {a, b};
        r.bound = Int(static_cast<unsigned long>(x_bound));
        r.iterations = x_bound;
        for (const Solution& s : sols)
            if (a * s.x * s.x - b * s.y * s.y != 1)
                throw internal_error("oracle::ab: verification failed");
        r.solutions = std::move(sols);
        return r;
    }
};

// ---- a x^n - b y^n = 1 ----------------------------------------------------

Int int_pow(const Int& base, unsigned n) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), n);
    return r;
}

struct ThueScan {
    Int a, b;
    unsigned n;
    Int bound;

    ThueScan(const Int& a_in, const Int& b_in, unsigned n_in, std::uint64_t bound_in)
        : a(a_in), b(b_in), n(n_in), bound(static_cast<unsigned long>(bound_in)) {
        if (a == 0 || b == 0) throw error("oracle::thue: a and b must be nonzero");
        if (n < 3) throw error("oracle::thue: n must be >= 3");
    }

    // i ranges over [0, 2*bound]; x = i - bound.
    void operator()(std::uint64_t i, std::vector<Solution>& out) const {
        Int x = Int(static_cast<unsigned long>(i)) - bound;
        Int r = a * int_pow(x, n) - 1;
        if (!divides(b, r)) return;
        Int w = exact_div(r, b);
        if (n % 2 == 0 && w < 0) return;
        Int y;
        if (mpz_root(y.get_mpz_t(), w.get_mpz_t(), n) == 0) return;  // not an exact n-th power
        if (abs(y) > bound) return;
        out.push_back(Solution{x, y});
        if (n % 2 == 0 && y != 0) out.push_back(Solution{std::move(x), -y});
    }

    SearchReport finish(std::vector<Solution> sols, std::uint64_t bound_in) const {
        for (const Solution& s : sols)
            if (a * int_pow(s.x, n) - b * int_pow(s.y, n) != 1)
                throw internal_error("oracle::thue: verification failed");
        std::sort(sols.begin(), sols.end(), [](const Solution& l, const Solution& r) {
            return l.y != r.y ? l.y < r.y : l.x < r.x;
        });
        SearchReport rep;
        rep.kind = "thue";
        rep.params = {a, b, Int(n)};
        rep.bound = Int(static_cast<unsigned long>(bound_in));
        rep.iterations = 2 * bound_in + 1;
        rep.solutions = std::move(sols);
        return rep;
    }
};

// ---- Legendre hits --------------------------------------------------------

struct LegendreScan {
    Int d;

    explicit LegendreScan(const Int& d_in) : d(d_in) {
        if (d < 2 || is_perfect_square(d))
            throw perfect_square_error("oracle::legendre: d must be a nonsquare >= 2");
    }

    // |sqrt(d) - p/q| < 1/(2 q^2)  <=>  (2pq - 1)^2 < 4 q^4 d < (2pq + 1)^2;
    // only p = floor(q sqrt(d)) or p + 1 can satisfy it, and at most one does.
    void operator()(std::uint64_t q_in, std::vector<Solution>& out) const {
        Int q(static_cast<unsigned long>(q_in));
        Int qq = q * q;
        Int mid = 4 * qq * qq * d;
        Int base = isqrt(d * qq);
        for (int step = 0; step <= 1; ++step) {
            Int p = base + step;
            if (p < 1 || gcd(p, q) != 1) continue;
            Int K = 2 * p * q;
            if ((K - 1) * (K - 1) < mid && mid < (K + 1) * (K + 1)) out.push_back(Solution{p, q});
        }
    }

    SearchReport finish(std::vector<Solution> hits, std::uint64_t q_bound) const {
        // Legendre's theorem: every hit must be a convergent of sqrt(d).
        SurdExpansion exp = expand_sqrt(d);
        std::vector<Solution> convergents;
        ConvergentStream stream(exp);
        for (;;) {
            Convergent c = stream.next();
            if (c.q > static_cast<unsigned long>(q_bound)) break;
            convergents.push_back(Solution{c.p, c.q});
        }
        for (const Solution& h : hits) {
            if (std::find(convergents.begin(), convergents.end(), h) == convergents.end())
                throw internal_error("oracle::legendre: hit " + h.x.get_str() + "/" + h.y.get_str() +
                                     " is not a convergent of sqrt(" + d.get_str() + ")");
        }
        SearchReport r;
        r.kind = "legendre";
        r.params = {d};
        r.bound = Int(static_cast<unsigned long>(q_bound));
        r.iterations = q_bound;
        r.solutions = std::move(hits);
        return r;
    }
};

}  // namespace

SearchReport pell_general(const Int& d, const Int& m, std::uint64_t y_bound) {
    PellScan scan(d, m, y_bound);
    return scan.finish(blocked_scan(0, y_bound + 1, scan), y_bound);
}

SearchReport ab(const Int& a, const Int& b, std::uint64_t x_bound) {
    AbScan scan(a, b, x_bound);
    return scan.finish(blocked_scan(1, x_bound, scan), x_bound);
}

SearchReport thue(const Int& a, const Int& b, unsigned n, std::uint64_t bound) {
    ThueScan scan(a, b, n, bound);
    return scan.finish(blocked_scan(0, 2 * bound + 1, scan), bound);
}

SearchReport legendre(const Int& d, std::uint64_t q_bound) {
    LegendreScan scan(d);
    return scan.finish(blocked_scan(1, q_bound, scan), q_bound);
}

namespace serial {

SearchReport pell_general(const Int& d, const Int& m, std::uint64_t y_bound) {
    PellScan scan(d, m, y_bound);
    return scan.finish(plain_scan(0, y_bound + 1, scan), y_bound);
}

SearchReport ab(const Int& a, const Int& b, std::uint64_t x_bound) {
    AbScan scan(a, b, x_bound);
    return scan.finish(plain_scan(1, x_bound, scan), x_bound);
}

SearchReport thue(const Int& a, const Int& b, unsigned n, std::uint64_t bound) {
    ThueScan scan(a, b, n, bound);
    return scan.finish(plain_scan(0, 2 * bound + 1, scan), bound);
}

SearchReport legendre(const Int& d, std::uint64_t q_bound) {
    LegendreScan scan(d);
    return scan.finish(plain_scan(1, q_bound, scan), q_bound);
}

}  // namespace serial

}  // namespace pellab::oracle
