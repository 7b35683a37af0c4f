// Timing comparison of the serial reference kernels against the OpenMP
// variants: dense product, LU determinant, Pade exponential, Jacobi
// eigensolver. Build and run:  ./bench_kernels [max_n]

#include "commdet/hermitian_eig.hpp"
#include "commdet/kernels.hpp"
#include "commdet/lu.hpp"
#include "commdet/matrix_exp.hpp"
#include "commdet/prng.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace commdet;

namespace {

double time_once(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DenseMatrix random_matrix(int n, SplitMix64& rng) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = 0.3 * rng.unit_square();
    return m;
}

DenseMatrix random_hermitian(int n, SplitMix64& rng) {
    DenseMatrix m = random_matrix(n, rng);
    DenseMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

} // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 768;
    SplitMix64 rng(42);

    std::printf("%-10s %6s %12s %12s %8s\n", "kernel", "n", "serial[s]", "parallel[s]",
                "speedup");
    for (int n = 192; n <= max_n; n *= 2) {
        DenseMatrix a = random_matrix(n, rng);
        DenseMatrix b = random_matrix(n, rng);
        DenseMatrix h = random_hermitian(n, rng);

        const double ts_mm = time_once([&] { matmul(a, b, ExecPolicy::Serial); });
        const double tp_mm = time_once([&] { matmul(a, b, ExecPolicy::Parallel); });
        std::printf("%-10s %6d %12.4f %12.4f %8.2f\n", "matmul", n, ts_mm, tp_mm, ts_mm / tp_mm);

        const double ts_lu = time_once([&] { lu_det(a, ExecPolicy::Serial); });
        const double tp_lu = time_once([&] { lu_det(a, ExecPolicy::Parallel); });
        std::printf("%-10s %6d %12.4f %12.4f %8.2f\n", "lu_det", n, ts_lu, tp_lu, ts_lu / tp_lu);

        const double ts_exp = time_once([&] { mat_exp(a, ExecPolicy::Serial); });
        const double tp_exp = time_once([&] { mat_exp(a, ExecPolicy::Parallel); });
        std::printf("%-10s %6d %12.4f %12.4f %8.2f\n", "mat_exp", n, ts_exp, tp_exp,
                    ts_exp / tp_exp);

        const double ts_eig = time_once([&] { hermitian_eig(h, ExecPolicy::Serial); });
        const double tp_eig = time_once([&] { hermitian_eig(h, ExecPolicy::Parallel); });
        std::printf("%-10s %6d %12.4f %12.4f %8.2f\n", "eig", n, ts_eig, tp_eig,
                    ts_eig / tp_eig);
    }
    return 0;
}
