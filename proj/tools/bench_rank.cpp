// Compares the serial and OpenMP rank kernels on real graded pieces and
// sizes the dense reference for context.

#include <chrono>
#include <iostream>

#include "binform/graded.hpp"

using namespace binform;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int d = argc > 1 ? std::atoi(argv[1]) : 10;
    int m = argc > 2 ? std::atoi(argv[2]) : 5;
    RankOptions opts;
    opts.prime_seed = 1;

    GradedEngine eng(d);
    int q_max = d / 2;
    auto t0 = std::chrono::steady_clock::now();
    auto blocks = eng.assemble_blocks(m, q_max, opts);
    double t_assemble = seconds_since(t0);

    int64_t rows = 0, cols = 0, nnz = 0;
    for (const auto& b : blocks) {
        rows += b.num_rows;
        cols += static_cast<int64_t>(b.columns.size());
        for (const auto& c : b.columns) nnz += static_cast<int64_t>(c.entries.size());
    }
    std::cout << "graded piece d=" << d << " m=" << m << " q<=" << q_max << ": " << rows << " rows, " << cols
              << " cols, " << nnz << " nonzeros in " << blocks.size() << " blocks (assembled in " << t_assemble
              << " s)\n";

    uint32_t p = select_primes(opts.prime_seed, 1)[0];

    t0 = std::chrono::steady_clock::now();
    auto serial = blocks_rank_serial(blocks, p, q_max);
    double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto parallel = blocks_rank_parallel(blocks, p, q_max);
    double t_parallel = seconds_since(t0);

    if (serial != parallel) {
        std::cerr << "MISMATCH between serial and parallel kernels\n";
        return 1;
    }
    int64_t rank = 0;
    for (const auto& br : serial) rank += br.back();
    std::cout << "rank " << rank << "\n";
    std::cout << "serial:   " << t_serial << " s\n";
    std::cout << "parallel: " << t_parallel << " s  (speedup " << (t_parallel > 0 ? t_serial / t_parallel : 0.0)
              << "x)\n";

    if (rows <= 3000) {
        auto dense = eng.assemble_dense(m, q_max);
        t0 = std::chrono::steady_clock::now();
        int64_t dense_rank = dense_rank_mod_p(dense, p);
        double t_dense = seconds_since(t0);
        std::cout << "dense reference: rank " << dense_rank << " in " << t_dense << " s\n";
        if (dense_rank != rank) {
            std::cerr << "MISMATCH between blocked and dense reference\n";
            return 1;
        }
    }
    return 0;
}
