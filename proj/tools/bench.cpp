// Benchmark comparing the serial reference kernels against the OpenMP
// parallel ones: operator-matrix construction and structure-table build.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef HILBK_OPENMP
#include <omp.h>
#endif

#include "hilbk/operators.hpp"
#include "hilbk/product.hpp"

using namespace hilbk;

namespace {

double seconds(void (*fn)(int, int), int n, int k) {
    auto start = std::chrono::steady_clock::now();
    fn(n, k);
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

void matrix_serial(int n, int k) {
    LinearOp<QFrac> op = [k](const SymFunc<QFrac>& f) { return nabla_q_closed(f, k); };
    volatile std::size_t sink = to_matrix_serial(op, n).e.size();
    (void)sink;
}

void matrix_parallel(int n, int k) {
    LinearOp<QFrac> op = [k](const SymFunc<QFrac>& f) { return nabla_q_closed(f, k); };
    volatile std::size_t sink = to_matrix(op, n).e.size();
    (void)sink;
}

void table_serial(int n, int) {
    volatile std::size_t sink = build_structure_table_serial(n, false).rows.size();
    (void)sink;
}

void table_parallel(int n, int) {
    volatile std::size_t sink = build_structure_table(n, false).rows.size();
    (void)sink;
}

} // namespace

int main(int argc, char** argv) {
    int n_matrix = 9;
    int n_table = 7;
    int k = 2;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        int value = std::atoi(argv[i + 1]);
        if (flag == "--n-matrix") n_matrix = value;
        else if (flag == "--n-table") n_table = value;
        else if (flag == "--k") k = value;
        else {
            std::fprintf(stderr, "usage: hilbk_bench [--n-matrix N] [--n-table N] [--k K]\n");
            return 2;
        }
    }

#ifdef HILBK_OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    // warm shared caches so both variants measure the kernel alone
    degree_tables(n_matrix);
    degree_tables(n_table);

    double ms = seconds(matrix_serial, n_matrix, k);
    double mp = seconds(matrix_parallel, n_matrix, k);
    std::printf("operator matrix  n=%d k=%d   serial %8.3fs   parallel %8.3fs   speedup %.2fx\n",
                n_matrix, k, ms, mp, ms / mp);

    double ts = seconds(table_serial, n_table, 0);
    double tp = seconds(table_parallel, n_table, 0);
    std::printf("structure table  n=%d       serial %8.3fs   parallel %8.3fs   speedup %.2fx\n",
                n_table, ts, tp, ts / tp);
    return 0;
}
