// Timing harness comparing the OpenMP kernels against their serial
// reference implementations. Build target only; not part of ctest.

#include <chrono>
#include <cstdio>

#include "tfg/classify.hpp"
#include "tfg/rank.hpp"

using namespace tfg;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double time_ms(F&& fn) {
    auto t0 = Clock::now();
    fn();
    return ms_since(t0);
}

void bench_max_pair_delta(Int rm, Int rn) {
    auto ps = partitions_of(rm);
    auto qs = partitions_of(rn);
    Int serial_result = 0, parallel_result = 0;
    double serial = time_ms([&] { serial_result = max_pair_delta_serial(ps, qs); });
    double parallel = time_ms([&] { parallel_result = max_pair_delta(ps, qs); });
    std::printf("max_pair_delta (%2lld,%2lld)  %8.1f ms serial  %8.1f ms parallel  x%.2f  %s\n",
                static_cast<long long>(rm), static_cast<long long>(rn), serial, parallel,
                serial / parallel, serial_result == parallel_result ? "agree" : "DISAGREE");
}

void bench_enumerate(Int rm, Int rn) {
    double t = time_ms([&] { enumerate_genus_one(rm, rn); });
    std::printf("enumerate      (%2lld,%2lld)  %8.1f ms\n", static_cast<long long>(rm),
                static_cast<long long>(rn), t);
}

void bench_c2_sweep() {
    SurfaceConfig cfg;
    cfg.f = FunctionDatum{Partition{6}, Partition{6}};
    cfg.g = FunctionDatum{Partition{12, 5, 4, 3}, Partition{23, 1}};
    std::vector<Int> a, b;
    double serial = time_ms([&] { a = c2_sweep_serial(cfg, 1, 200000); });
    double parallel = time_ms([&] { b = c2_sweep(cfg, 1, 200000); });
    std::printf("c2_sweep 2e5 values      %8.1f ms serial  %8.1f ms parallel  x%.2f  %s\n", serial,
                parallel, serial / parallel, a == b ? "agree" : "DISAGREE");
}

} // namespace

int main() {
    bench_max_pair_delta(16, 16);
    bench_max_pair_delta(20, 20);
    bench_max_pair_delta(24, 24);
    bench_enumerate(6, 24);
    bench_enumerate(20, 20);
    bench_c2_sweep();
    return 0;
}
