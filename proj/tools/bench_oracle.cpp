// Times each oracle search kernel against its serial reference on a fixed
// workload and verifies both produce identical reports. Run it with
// different OMP_NUM_THREADS settings to see the scan scaling.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
static int omp_get_max_threads() { return 1; }
#endif

#include "pellab/oracle.hpp"

using namespace pellab;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<oracle::SearchReport()>& fn, oracle::SearchReport& out) {
    auto t0 = Clock::now();
    out = fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Workload {
    std::string name;
    std::function<oracle::SearchReport()> parallel;
    std::function<oracle::SearchReport()> serial;
};

}  // namespace

int main() {
    const std::uint64_t pell_bound = 4000000;
    const std::uint64_t ab_bound = 4000000;
    const std::uint64_t thue_bound = 60000;
    const std::uint64_t legendre_bound = 6000;
    const Int big_d("36893488147419103233");  // 2^65 + 1: forces the bigint kernel

    const std::vector<Workload> workloads = {
        {"pell_general d=61 m=1    y<=4e6 (64-bit kernel)",
         [&] { return oracle::pell_general(61, 1, pell_bound); },
         [&] { return oracle::serial::pell_general(61, 1, pell_bound); }},
        {"pell_general d=2^65+1    y<=2e4 (bigint kernel)",
         [&] { return oracle::pell_general(big_d, 7, 20000); },
         [&] { return oracle::serial::pell_general(big_d, 7, 20000); }},
        {"ab           a=18 b=23   x<=4e6 (64-bit kernel)",
         [&] { return oracle::ab(18, 23, ab_bound); },
         [&] { return oracle::serial::ab(18, 23, ab_bound); }},
        {"thue         6x^3-5y^3   |x|<=6e4",
         [&] { return oracle::thue(6, 5, 3, thue_bound); },
         [&] { return oracle::serial::thue(6, 5, 3, thue_bound); }},
        {"legendre     d=414       q<=6e3",
         [&] { return oracle::legendre(414, legendre_bound); },
         [&] { return oracle::serial::legendre(414, legendre_bound); }},
    };

    std::printf("oracle kernels, %d thread(s)\n", omp_get_max_threads());
    std::printf("%-45s %12s %12s %8s %6s\n", "workload", "serial ms", "parallel ms", "speedup", "hits");
    for (const Workload& w : workloads) {
        oracle::SearchReport rs, rp;
        double serial_ms = time_ms(w.serial, rs);
        double parallel_ms = time_ms(w.parallel, rp);
        const bool same = rs == rp;
        std::printf("%-45s %12.1f %12.1f %7.2fx %5zu%s\n", w.name.c_str(), serial_ms, parallel_ms,
                    serial_ms / parallel_ms, rp.solutions.size(), same ? "" : "  REPORTS DIFFER");
        if (!same) return 1;
    }
    return 0;
}
