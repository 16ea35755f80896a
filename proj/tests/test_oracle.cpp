#include <doctest.h>

#include <vector>

#include "pellab/ints.hpp"
#include "pellab/oracle.hpp"

using namespace pellab;
using oracle::SearchReport;

namespace {

std::vector<Solution> sols(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Solution> v;
    for (auto [x, y] : xs) v.push_back(Solution{Int(x), Int(y)});
    return v;
}

}  // namespace

TEST_CASE("pell_general oracle reproduces the F_21 searches") {
    SearchReport r = oracle::pell_general(21, 1, 2000);
    CHECK(r.coprime == sols({{55, 12}, {6049, 1320}}));
    CHECK(r.solutions.front() == Solution{Int(1), Int(0)});  // trivial
    CHECK(r.iterations == 2001);

    SearchReport empty = oracle::pell_general(7, 5, 10000);
    CHECK(empty.solutions.empty());
    CHECK(empty.coprime.empty());

    SearchReport m4 = oracle::pell_general(21, 4, 100);
    CHECK(m4.solutions == sols({{2, 0}, {5, 1}, {23, 5}, {110, 24}}));
    CHECK(m4.coprime == sols({{5, 1}, {23, 5}}));

    SearchReport neg = oracle::pell_general(21, -3, 100);
    CHECK(neg.solutions == sols({{9, 2}}));
}

TEST_CASE("pell_general oracle input guards") {
    CHECK_THROWS_AS(oracle::pell_general(25, 1, 10), perfect_square_error);
    CHECK_THROWS_AS(oracle::pell_general(21, 0, 10), magnitude_error);
}

TEST_CASE("ab oracle reproduces the E_2 searches") {
    CHECK(oracle::ab(18, 23, 10000).solutions == sols({{26, 23}}));
    CHECK(oracle::ab(19, 25, 100000).solutions.empty());
    CHECK(oracle::ab(1, 21, 100).solutions == sols({{1, 0}, {55, 12}}));
    CHECK(oracle::ab(25, 19, 100).solutions == sols({{34, 39}}));
    CHECK(oracle::ab(18, 23, 10000).iterations == 10000);
}

TEST_CASE("thue oracle scans the signed box") {
    SearchReport r = oracle::thue(2, 1, 3, 100);
    bool has11 = false;
    for (const Solution& s : r.solutions) has11 = has11 || (s.x == 1 && s.y == 1);
    CHECK(has11);

    // x^3 - y^3 = 1 has only the axis solutions in the box.
    SearchReport axis = oracle::thue(1, 1, 3, 1000);
    CHECK(axis.solutions == sols({{0, -1}, {1, 0}}));
    CHECK(axis.iterations == 2001);

    SearchReport bennett = oracle::thue(6, 5, 3, 1000);
    CHECK(bennett.solutions == sols({{1, 1}}));

    // even exponent: both y signs are reported
    SearchReport even = oracle::thue(1, 1, 4, 10);
    // x^4 - y^4 = 1: (+-1, 0)
    CHECK(even.solutions == sols({{-1, 0}, {1, 0}}));
}

TEST_CASE("legendre oracle finds exactly the strong-approximation convergents") {
    SearchReport r = oracle::legendre(2, 50);
    CHECK(r.solutions == sols({{1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29}}));

    SearchReport d21 = oracle::legendre(21, 12);
    bool has55 = false, has5 = false;
    for (const Solution& s : d21.solutions) {
        has55 = has55 || (s.x == 55 && s.y == 12);
        has5 = has5 || (s.x == 5 && s.y == 1);
    }
    CHECK(has55);
    CHECK(has5);
    CHECK(oracle::legendre(21, 1).solutions == sols({{5, 1}}));
}

TEST_CASE("legendre exact cleared form agrees with a high-precision check") {
    // |sqrt(d) - p/q| < 1/(2q^2) evaluated with 256-bit floats must give the
    // same verdict as the integer form (K-1)^2 < 4q^4 d < (K+1)^2 on a grid
    // around each floor(q sqrt(d)).
    for (long d : {2, 3, 5, 7, 21, 50}) {
        mpf_class fd(d, 256), root(0, 256);
        mpf_sqrt(root.get_mpf_t(), fd.get_mpf_t());
        for (long q = 1; q <= 40; ++q) {
            Int base = isqrt(Int(d) * q * q);
            for (long off = -2; off <= 2; ++off) {
                Int p = base + off;
                if (p < 1) continue;
                mpf_class fp(0, 256);
                mpf_set_z(fp.get_mpf_t(), p.get_mpz_t());
                mpf_class lhs(0, 256);
                lhs = abs(root - fp / q);
                bool approx = lhs < mpf_class(1.0, 256) / (2 * q * q);
                Int K = 2 * p * q;
                Int mid = 4 * Int(q) * q * q * q * d;
                bool exact = (K - 1) * (K - 1) < mid && mid < (K + 1) * (K + 1);
                CAPTURE(d);
                CAPTURE(q);
                CHECK(approx == exact);
            }
        }
    }
}

TEST_CASE("parallel kernels match the serial reference") {
    CHECK(oracle::pell_general(21, 4, 5000) == oracle::serial::pell_general(21, 4, 5000));
    CHECK(oracle::pell_general(13, -3, 5000) == oracle::serial::pell_general(13, -3, 5000));
    CHECK(oracle::ab(18, 23, 20000) == oracle::serial::ab(18, 23, 20000));
    CHECK(oracle::ab(7, 9, 20000) == oracle::serial::ab(7, 9, 20000));
    CHECK(oracle::thue(6, 5, 3, 500) == oracle::serial::thue(6, 5, 3, 500));
    CHECK(oracle::thue(-2, 3, 4, 200) == oracle::serial::thue(-2, 3, 4, 200));
    CHECK(oracle::legendre(414, 300) == oracle::serial::legendre(414, 300));
}

TEST_CASE("searches are deterministic across runs") {
    SearchReport a = oracle::pell_general(61, 1, 30000);
    SearchReport b = oracle::pell_general(61, 1, 30000);
    CHECK(a == b);
}

TEST_CASE("bigint kernel handles radicands beyond 64 bits") {
    // d = 2^65 + 1 forces the mpz path; plant a solution at y = 3.
    Int d("36893488147419103233");
    Int x = Int(1) << 40;
    Int m = x * x - d * 9;
    SearchReport r = oracle::pell_general(d, m, 10);
    bool found = false;
    for (const Solution& s : r.solutions) found = found || (s.x == x && s.y == 3);
    CHECK(found);
}

TEST_CASE("64-bit square helpers agree with the bigint versions") {
    for (std::uint64_t n :
         {std::uint64_t(0), std::uint64_t(1), std::uint64_t(2), std::uint64_t(3), std::uint64_t(4),
          std::uint64_t(24), std::uint64_t(25), std::uint64_t(26), std::uint64_t(1) << 62,
          (std::uint64_t(1) << 62) - 1, std::uint64_t(-1), std::uint64_t(-1) - 1,
          std::uint64_t(4294967295) * 4294967295}) {
        Int z(static_cast<unsigned long>(n));
        CHECK(Int(static_cast<unsigned long>(isqrt64(n))) == isqrt(z));
        std::uint64_t root = 0;
        CHECK(is_square64(n, &root) == is_perfect_square(z));
        if (is_square64(n)) CHECK(Int(static_cast<unsigned long>(root)) * root == z);
    }
    // dense range plus perfect squares around the top of the range
    for (std::uint64_t n = 0; n < 5000; ++n) {
        CHECK(is_square64(n) == is_perfect_square(Int(static_cast<unsigned long>(n))));
    }
    for (std::uint64_t r = (std::uint64_t(1) << 32) - 100; r < (std::uint64_t(1) << 32); ++r) {
        CHECK(is_square64(r * r));
        CHECK_FALSE(is_square64(r * r - 1));
    }
}
