#include <doctest.h>

#include <vector>

#include "pellab/cf.hpp"

using namespace pellab;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("sqrt(21) expands to the reference data") {
    SurdExpansion e = expand_sqrt(21);
    CHECK(e.a0 == 4);
    CHECK(e.period == ints({1, 1, 2, 1, 1, 8}));
    CHECK(e.period_length() == 6);
    CHECK(e.u_seq == ints({4, 1, 3, 3, 1, 4}));
    CHECK(e.v_seq == ints({5, 4, 3, 4, 5, 1}));
}

TEST_CASE("small and larger radicands") {
    SurdExpansion two = expand_sqrt(2);
    CHECK(two.a0 == 1);
    CHECK(two.period == ints({2}));
    CHECK(two.period_length() == 1);

    SurdExpansion e = expand_sqrt(414);
    CHECK(e.period_length() == 8);
    CHECK(e.u_seq[3] == 18);
    CHECK(e.v_seq[3] == 18);
}

TEST_CASE("perfect squares and tiny d are rejected") {
    CHECK_THROWS_AS(expand_sqrt(4), perfect_square_error);
    CHECK_THROWS_AS(expand_sqrt(1), perfect_square_error);
    CHECK_THROWS_AS(expand_sqrt(0), perfect_square_error);
    CHECK_THROWS_AS(expand_sqrt(10201), perfect_square_error);  // 101^2
}

TEST_CASE("uv_at extends the complete-quotient data periodically") {
    SurdExpansion e = expand_sqrt(21);
    CHECK(uv_at(e, 3) == std::pair<Int, Int>(3, 3));
    CHECK(uv_at(e, 6) == std::pair<Int, Int>(4, 1));
    CHECK(uv_at(e, 9) == std::pair<Int, Int>(3, 3));
    CHECK(uv_at(e, 600) == std::pair<Int, Int>(4, 1));
}

TEST_CASE("convergents of sqrt(21)") {
    SurdExpansion e = expand_sqrt(21);
    ConvergentStream s(e);
    Convergent c = s.next();
    CHECK((c.index == 0 && c.p == 4 && c.q == 1));
    c = s.next();
    CHECK((c.index == 1 && c.p == 5 && c.q == 1));
    c = s.next();
    CHECK((c.index == 2 && c.p == 9 && c.q == 2));
    c = s.next();
    CHECK((c.index == 3 && c.p == 23 && c.q == 5));
    s.next();
    c = s.next();
    CHECK((c.index == 5 && c.p == 55 && c.q == 12));

    // streams restart independently
    ConvergentStream t(e);
    CHECK(t.next().p == 4);
    CHECK(s.next().index == 6);
}

TEST_CASE("pell_value at the reference indices") {
    SurdExpansion e = expand_sqrt(21);
    CHECK(pell_value(e, 6) == 1);   // 55^2 - 21 * 12^2
    CHECK(pell_value(e, 0) == 1);
    CHECK(pell_value(e, 3) == -3);  // 9^2 - 21 * 2^2
}

TEST_CASE("structural invariants over all nonsquare d <= 150") {
    for (long d = 2; d <= 150; ++d) {
        if (is_perfect_square(d)) continue;
        CAPTURE(d);
        SurdExpansion e = expand_sqrt(d);
        const std::size_t T = e.period.size();
        REQUIRE(T >= 1);
        REQUIRE(e.u_seq.size() == T);
        REQUIRE(e.v_seq.size() == T);

        // terminal quotient 2*a0, and only there
        CHECK(e.period.back() == 2 * e.a0);
        for (std::size_t k = 0; k + 1 < T; ++k) CHECK(e.period[k] != 2 * e.a0);

        // palindrome a_k = a_{T-k} for 1 <= k <= T-1
        for (std::size_t k = 1; k <= T - 1; ++k) CHECK(e.period[k - 1] == e.period[T - k - 1]);

        // bounds and divisibility of the complete-quotient data
        for (std::size_t j = 0; j < T; ++j) {
            CHECK(e.u_seq[j] >= 1);
            CHECK(e.u_seq[j] <= e.a0);
            CHECK(e.v_seq[j] >= 1);
            CHECK(divides(e.v_seq[j], e.d - e.u_seq[j] * e.u_seq[j]));
        }

        // v_j = 1 within one period only at j = T
        CHECK(e.v_seq.back() == 1);
        for (std::size_t j = 0; j + 1 < T; ++j) CHECK(e.v_seq[j] != 1);

        // midpoint criterion: v_N | u_N for N in [1, T-1] forces T = 2N
        for (std::size_t N = 1; N <= T - 1; ++N)
            if (divides(e.v_seq[N - 1], e.u_seq[N - 1])) CHECK(T == 2 * N);
    }
}

TEST_CASE("determinant and value identities over all nonsquare d <= 150") {
    for (long d = 2; d <= 150; ++d) {
        if (is_perfect_square(d)) continue;
        CAPTURE(d);
        SurdExpansion e = expand_sqrt(d);
        const std::uint64_t T = e.period_length();

        ConvergentStream s(e);
        Int p_prev2 = 0, p_prev1 = 1;  // p_{-2}, p_{-1}
        Int q_prev2 = 1, q_prev1 = 0;
        Int last_q = 0;
        for (std::uint64_t n = 0; n <= 4 * T; ++n) {
            // determinant identity at n: p_{n-1} q_{n-2} - q_{n-1} p_{n-2} = (-1)^n
            Int det = p_prev1 * q_prev2 - q_prev1 * p_prev2;
            CHECK(det == (n % 2 == 0 ? 1 : -1));

            // value identity: p_{n-1}^2 - d q_{n-1}^2 = (-1)^n v_n (v_0 = 1)
            Int v_n = n == 0 ? Int(1) : uv_at(e, n).second;
            Int val = p_prev1 * p_prev1 - e.d * q_prev1 * q_prev1;
            CHECK(val == (n % 2 == 0 ? v_n : -v_n));
            CHECK(val == pell_value(e, n));

            Convergent c = s.next();
            if (n >= 2) CHECK(c.q > last_q);  // q_1 < q_2 < ... (q_1 may equal q_0 = 1)
            last_q = c.q;
            p_prev2 = std::move(p_prev1);
            p_prev1 = c.p;
            q_prev2 = std::move(q_prev1);
            q_prev1 = c.q;
        }

        // v_j = 1 exactly when T | j, for j up to 4T
        for (std::uint64_t j = 1; j <= 4 * T; ++j)
            CHECK((uv_at(e, j).second == 1) == (j % T == 0));
    }
}
