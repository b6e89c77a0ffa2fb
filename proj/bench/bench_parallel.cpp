// Serial reference vs OpenMP kernels: timings and a result-equality check.
#include "viracomb/characters.hpp"
#include "viracomb/halfpath.hpp"
#include "viracomb/parallel.hpp"
#include "viracomb/rsos.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace viracomb;

template <class F>
static double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class R>
static bool row(const char* name, std::function<R()> serial, std::function<R()> parallel) {
    R a, b;
    double ts = seconds([&] { a = serial(); });
    double tp = seconds([&] { b = parallel(); });
    bool same = a == b;
    std::printf("%-34s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name, ts, tp,
                tp > 0 ? ts / tp : 0.0, same ? "equal" : "DIFFERENT");
    return same;
}

int main() {
    std::printf("threads: %d\n", thread_count());
    bool ok = true;
    ok &= row<std::vector<RsosPath>>(
        "rsos (5,11) a=5 b=6 N=18", [] { return enumerate_rsos_serial(5, 11, 5, 6, 18); },
        [] { return enumerate_rsos(5, 11, 5, 6, 18); });
    ok &= row<std::vector<RsosPath>>(
        "rsos (4,9) a=8 b=6 N=20", [] { return enumerate_rsos_serial(4, 9, 8, 6, 20); },
        [] { return enumerate_rsos(4, 9, 8, 6, 20); });
    ok &= row<std::vector<HalfPath>>(
        "half T=10 A=2 B=2 N=14", [] { return enumerate_half_serial(10, 2, 2, 14); },
        [] { return enumerate_half(10, 2, 2, 14); });
    ok &= row<QSeries>(
        "fermionic T=10 N=60", [] { return fermionic_character_12_serial(10, 60); },
        [] { return fermionic_character_12(10, 60); });
    return ok ? 0 : 1;
}
