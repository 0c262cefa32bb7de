// Serial vs OpenMP timings for the CIM kernels, plus an end-to-end fit.
//
//   cae_bench            full sizes
//   cae_bench --quick    tiny sizes (smoke test)

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#include "cae/datagen.hpp"
#include "cae/kernels.hpp"
#include "cae/learner.hpp"

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

std::vector<double> random_matrix(std::size_t rows, std::size_t dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> m(rows * dim);
    for (double& v : m) v = u(rng);
    return m;
}

void report(const char* name, double serial_ms, double parallel_ms, bool same) {
    std::printf("%-22s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                same ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const std::size_t nodes = quick ? 64 : 4000;
    const std::size_t dim = quick ? 4 : 16;
    const std::size_t points = quick ? 128 : 20000;
    const int repeats = quick ? 1 : 5;
    const double sigma = 0.3;

    std::printf("OpenMP kernels: %s, threads: %d\n",
                cae::kernels::parallel_enabled() ? "on" : "off", cae::kernels::max_threads());

    std::mt19937_64 rng(7);
    const auto rows = random_matrix(nodes, dim, rng);
    const auto queries = random_matrix(points, dim, rng);
    bool all_same = true;

    {
        std::vector<double> a(nodes), b(nodes);
        const auto& x = queries;
        const std::span<const double> q(x.data(), dim);
        const double s = time_ms([&] { cae::kernels::serial::cim_to_rows(q, rows, dim, sigma, a); }, repeats);
        const double p = time_ms([&] { cae::kernels::parallel::cim_to_rows(q, rows, dim, sigma, b); }, repeats);
        report("cim_to_rows", s, p, a == b);
        all_same = all_same && a == b;
    }
    {
        const std::size_t n = quick ? nodes : 800;
        const std::span<const double> sub(rows.data(), n * dim);
        std::vector<double> a(n * n), b(n * n);
        const double s = time_ms([&] { cae::kernels::serial::similarity_matrix(sub, dim, sigma, a); }, repeats);
        const double p = time_ms([&] { cae::kernels::parallel::similarity_matrix(sub, dim, sigma, b); }, repeats);
        report("similarity_matrix", s, p, a == b);
        all_same = all_same && a == b;
    }
    {
        std::vector<double> a(nodes), b(nodes);
        const double s = time_ms([&] { cae::kernels::serial::nearest_other_cim(rows, dim, sigma, a); }, repeats);
        const double p = time_ms([&] { cae::kernels::parallel::nearest_other_cim(rows, dim, sigma, b); }, repeats);
        report("nearest_other_cim", s, p, a == b);
        all_same = all_same && a == b;
    }
    {
        std::vector<std::size_t> a(points), b(points);
        const double s = time_ms([&] { cae::kernels::serial::nearest_rows(queries, rows, dim, sigma, a); }, repeats);
        const double p = time_ms([&] { cae::kernels::parallel::nearest_rows(queries, rows, dim, sigma, b); }, repeats);
        report("nearest_rows", s, p, a == b);
        all_same = all_same && a == b;
    }

    const auto data = cae::generate(cae::default_stream_spec(quick ? 100 : 1500, 0.1, 1));
    cae::LearnerState state(data.dim);
    const double fit_ms = time_ms(
        [&] {
            state = cae::LearnerState(data.dim);
            cae::train(state, data.values);
        },
        1);
    std::printf("fit %zu points: %.1f ms, %zu nodes, %zu clusters\n", data.size(), fit_ms,
                state.net.size(), state.net.component_count());

    return all_same ? 0 : 1;
}
