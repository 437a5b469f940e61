// Benchmark: parallel monopole enumeration against the serial reference.
// Checks bit-identical output while timing both paths.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mono/engine.hpp"
#include "mono/gauge.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

struct Case {
    std::string name;
    mono::Theory theory;
    int degree;
};

mono::Theory sqed(int flavors) {
    mono::Theory t;
    t.group.factors = {1};
    t.matter.push_back({mono::IntVec{1}, flavors});
    return t;
}

mono::Theory gl2_adjoint_flavored(int flavors) {
    mono::Theory t;
    t.group.factors = {2};
    t.matter.push_back({mono::IntVec{0, 0}, 2});
    t.matter.push_back({mono::IntVec{1, -1}, 1});
    t.matter.push_back({mono::IntVec{-1, 1}, 1});
    t.matter.push_back({mono::IntVec{1, 0}, flavors});
    t.matter.push_back({mono::IntVec{0, 1}, flavors});
    return t;
}

mono::Theory a3_quiver_chain() {
    mono::QuiverTheory q;
    q.vertices = 3;
    q.edges = {{0, 1}, {1, 2}};
    q.dim_v = {1, 2, 1};
    q.dim_w = {0, 4, 0};
    return mono::quiver_to_theory(q);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif

    const std::vector<Case> cases = {
        {"sqed-2flavor d=120", sqed(2), 120},
        {"gl2-adjoint-4flavor d=40", gl2_adjoint_flavored(4), 40},
        {"a3-chain d=30", a3_quiver_chain(), 30},
    };

    bool all_equal = true;
    for (const auto& c : cases) {
        auto t0 = std::chrono::steady_clock::now();
        const mono::TruncatedSeries serial = mono::hilbert_series_serial(c.theory, c.degree);
        const double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const mono::TruncatedSeries parallel = mono::hilbert_series(c.theory, c.degree);
        const double tp = seconds_since(t0);

        const bool equal = mono::ts_equal_up_to(serial, parallel, c.degree);
        all_equal = all_equal && equal;
        std::printf("%-28s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n",
                    c.name.c_str(), ts, tp, tp > 0 ? ts / tp : 0.0,
                    equal ? "identical" : "MISMATCH");
    }
    return all_equal ? 0 : 1;
}
