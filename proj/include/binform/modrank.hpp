#ifndef BINFORM_MODRANK_HPP
#define BINFORM_MODRANK_HPP

#include <cstdint>
#include <vector>

#include "binform/numeric.hpp"

namespace binform {

// A sparse column: (row index, value) pairs, rows within a block.
struct SparseColumn {
    std::vector<std::pair<int32_t, Int>> entries;
};

// One weight block of a RankProblem: its own row space and columns,
// with columns grouped (group g = columns contributed by generator
// group g; ranks are reported cumulatively per group).
struct Block {
    int32_t num_rows = 0;
    std::vector<SparseColumn> columns;
    std::vector<int32_t> group_of_column;  // parallel to columns, nondecreasing
    // Rank of the block never exceeds this (0 = no cap). Used for early
    // exit when the target space has known codimension in the row space.
    int32_t rank_cap = 0;
};

// Deterministic prime selection: first two distinct probable primes in
// (2^30, 2^31) drawn from a seeded generator (deterministic witnesses
// make them actual primes at this size).
std::vector<uint32_t> select_primes(uint64_t seed, int count);

bool is_prime_u64(uint64_t n);

// Rank of one block modulo p, cumulative per column group:
// result[g] = rank of the submatrix with columns of groups <= g.
std::vector<int32_t> block_rank_mod_p(const Block& block, uint32_t p, int num_groups);

// All blocks, serial loop. result[b][g].
std::vector<std::vector<int32_t>> blocks_rank_serial(const std::vector<Block>& blocks,
                                                     uint32_t p, int num_groups);

// Same computation parallelized over blocks with OpenMP.
std::vector<std::vector<int32_t>> blocks_rank_parallel(const std::vector<Block>& blocks,
                                                       uint32_t p, int num_groups);

// Textbook dense elimination mod p over the whole (unblocked) matrix;
// reference implementation for testing the blocked kernels.
int64_t dense_rank_mod_p(const std::vector<std::vector<Int>>& matrix, uint32_t p);

// Exact fraction-free (Bareiss) rank of one block, cumulative per group.
std::vector<int32_t> block_rank_bareiss(const Block& block, int num_groups);

}  // namespace binform

#endif
