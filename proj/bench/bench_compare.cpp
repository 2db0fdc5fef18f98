// Timing comparison of the OpenMP kernels against their serial references:
// mutation-class BFS, the seed engine BFS, and the compatibility table.

#include "mutant/engine.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mutant;

namespace {

template <typename F>
double time_s(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, size_t size) {
    std::printf("%-34s %10.3fs %10.3fs %8.2fx   (%zu items)\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, size);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        Diagram e8 = dynkin_diagram({'E', 8});
        MutationClassOptions ser, par;
        ser.parallel = false;
        MutationClassResult r1, r2;
        double ts = time_s([&] { r1 = mutation_class_serial(e8, ser); });
        double tp = time_s([&] { r2 = mutation_class(e8, par); });
        if (!(r1.members == r2.members)) {
            std::printf("mutation_class results differ!\n");
            return 1;
        }
        row("mutation_class E8 (weight cap 3)", ts, tp, r1.members.size());
    }
    {
        RootSystem d5(CartanKillingType('D', 5));
        Seed s0 = initial_seed(initial_bipartite_matrix(d5));
        EngineOptions ser, par;
        ser.parallel = false;
        EngineGraph g1, g2;
        double ts = time_s([&] { g1 = build_exchange_graph_serial(s0, ser); });
        double tp = time_s([&] { g2 = build_exchange_graph(s0, par); });
        if (!(g1.variables == g2.variables)) {
            std::printf("engine results differ!\n");
            return 1;
        }
        row("seed engine D5", ts, tp, g1.seeds.size());
    }
    {
        RootSystem a6(CartanKillingType('A', 6));
        Seed s0 = initial_seed(initial_bipartite_matrix(a6));
        EngineOptions ser, par;
        ser.parallel = false;
        EngineGraph g1, g2;
        double ts = time_s([&] { g1 = build_exchange_graph_serial(s0, ser); });
        double tp = time_s([&] { g2 = build_exchange_graph(s0, par); });
        if (!(g1.variables == g2.variables)) {
            std::printf("engine results differ!\n");
            return 1;
        }
        row("seed engine A6", ts, tp, g1.seeds.size());
    }
    {
        RootSystem e8(CartanKillingType('E', 8), false);
        std::vector<int> t1, t2;
        double ts = time_s([&] { t1 = compatibility_table_serial(e8); });
        double tp = time_s([&] { t2 = compatibility_table(e8, true); });
        if (t1 != t2) {
            std::printf("compatibility tables differ!\n");
            return 1;
        }
        row("compatibility table E8", ts, tp, t1.size());
    }
    return 0;
}
