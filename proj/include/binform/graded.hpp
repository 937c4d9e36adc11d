#ifndef BINFORM_GRADED_HPP
#define BINFORM_GRADED_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "binform/modrank.hpp"
#include "binform/poly.hpp"

namespace binform {

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankOptions {
    uint64_t prime_seed = 1;
    int num_primes = 2;
    bool parallel = true;
    bool certify = false;       // additionally run exact Bareiss and compare
    int64_t max_rows = 400000;  // dim R_m bound
    int64_t max_cols = 2000000;
    // Checked before each elimination; expiry raises ResourceLimit.
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void check_deadline() const {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw ResourceLimit("time budget exhausted");
    }
};

// dim (I_C)_m = binom(m+d, d) - (m d + 1) for m >= 1, else 0.
int64_t ic_dim(int d, int m);

// Sum of dim S_{2d-4i} for i = 1..q: the column-group sizes of W_{2q}.
int64_t w_dim(int d, int q);

// The multiplication map  (+)_{i<=q} W-coefficients (x) R_{m-2} -> R_m,
// assembled per torus-weight block. Row index: monomials of R_m of the
// block's coweight; column index: (coefficient of H_{2i}, monomial of
// R_{m-2}) pairs. Entries are integers (each generator coefficient is
// scaled by its denominator lcm, which leaves every rank unchanged).
class GradedEngine {
public:
    explicit GradedEngine(int d);

    int d() const { return d_; }
    int e() const { return d_ / 2; }

    // dim (J_{2q})_m for q = 1..q_max in one multi-group elimination.
    // Modular ranks over opts.num_primes primes must agree.
    std::vector<int64_t> dims(int m, int q_max, const RankOptions& opts) const;

    // Exact fraction-free ranks over the same blocks.
    std::vector<int64_t> dims_bareiss(int m, int q_max, const RankOptions& opts) const;

    std::vector<Block> assemble_blocks(int m, int q_max, const RankOptions& opts) const;

    // Unblocked dense matrix (rows = all monomials of R_m); for the
    // reference backend on small instances.
    std::vector<std::vector<Int>> assemble_dense(int m, int q_max) const;

private:
    struct GenCoefficient {
        int group = 0;     // i, for H_{2i}
        int coweight = 0;  // 2i + j for the j-th coefficient
        // quadratic terms: (p, q, value) meaning value * a_p * a_q
        std::vector<std::tuple<int, int, Int>> terms;
    };

    int d_;
    std::vector<GenCoefficient> gens_;  // all groups, ascending (group, coefficient index)
};

}  // namespace binform

#endif
