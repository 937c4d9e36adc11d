#include "binform/graded.hpp"

#include <algorithm>
#include <unordered_map>

#include "binform/covariant.hpp"
#include "binform/repdim.hpp"

namespace binform {

namespace {

using Code = unsigned __int128;

// Monomials of degree m in a_0..a_d, 6 bits per exponent. Enough for
// every degree this engine accepts (m < 64) and d <= 20.
Code pack(const std::vector<int>& exps) {
    Code c = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) c |= static_cast<Code>(exps[i]) << (6 * i);
    return c;
}

void enumerate_monomials(int d, int m, std::vector<std::vector<Code>>& by_coweight) {
    // by_coweight[k] = sorted packed monomials with sum(i * e_i) = k.
    by_coweight.assign(static_cast<std::size_t>(m) * d + 1, {});
    std::vector<int> exps(static_cast<std::size_t>(d) + 1, 0);
    std::function<void(int, int, long)> rec = [&](int var, int remaining, long coweight) {
        if (var == d) {
            exps[static_cast<std::size_t>(d)] = remaining;
            by_coweight[static_cast<std::size_t>(coweight + static_cast<long>(remaining) * d)].push_back(pack(exps));
            exps[static_cast<std::size_t>(d)] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(var)] = e;
            rec(var + 1, remaining - e, coweight + static_cast<long>(e) * var);
            exps[static_cast<std::size_t>(var)] = 0;
        }
    };
    rec(0, m, 0);
    for (auto& v : by_coweight) std::sort(v.begin(), v.end());
}

int32_t locate(const std::vector<Code>& sorted, Code c) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
    if (it == sorted.end() || *it != c) return -1;
    return static_cast<int32_t>(it - sorted.begin());
}

}  // namespace

int64_t ic_dim(int d, int m) {
    if (m < 1) return 0;
    Int dim = dim_graded_ring(d, m);
    Int cut = Int(m) * d + 1;
    Int res = dim - cut;
    if (res < 0) throw std::logic_error("ic_dim: negative");
    return res.get_si();
}

int64_t w_dim(int d, int q) {
    int64_t s = 0;
    for (int i = 1; i <= q; ++i) s += 2 * d - 4 * i + 1;
    return s;
}

GradedEngine::GradedEngine(int d) : d_(d) {
    if (d < 2) throw std::invalid_argument("GradedEngine: d >= 2 required");
    for (int i = 1; i <= e(); ++i) {
        Covariant h = hessian_covariant(d, i);
        auto coeffs = coefficient_list(h);
        for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
            const SparsePoly& c = coeffs[static_cast<std::size_t>(j)];
            GenCoefficient gc;
            gc.group = i;
            gc.coweight = 2 * i + j;
            Int scale = c.denominator_lcm();
            for (const auto& [mono, val] : c.terms()) {
                int p = -1, q = -1;
                for (int v = 0; v <= d; ++v) {
                    for (int rep = 0; rep < mono[static_cast<std::size_t>(v)]; ++rep) {
                        if (p < 0)
                            p = v;
                        else
                            q = v;
                    }
                }
                if (q < 0) throw std::logic_error("GradedEngine: generator coefficient not quadratic");
                Rat scaled = val * Rat(scale);
                if (scaled.get_den() != 1) throw std::logic_error("GradedEngine: scaling failed");
                gc.terms.emplace_back(p, q, Int(scaled.get_num()));
            }
            // check isobarity: every a_p a_q term has p + q = coweight - 0
            for (const auto& [p, q, v] : gc.terms)
                if (p + q != gc.coweight) throw std::logic_error("GradedEngine: coefficient not isobaric");
            gens_.push_back(std::move(gc));
        }
    }
}

std::vector<Block> GradedEngine::assemble_blocks(int m, int q_max, const RankOptions& opts) const {
    opts.check_deadline();
    if (m < 2) throw std::invalid_argument("assemble_blocks: m >= 2 required");
    if (q_max < 1 || q_max > e()) throw std::invalid_argument("assemble_blocks: q out of range");
    // 6-bit packed exponents over d+1 slots
    if (d_ > 20 || m > 63)
        throw ResourceLimit("graded piece outside the packed-monomial range (d <= 20, m <= 63)");
    Int rows_total = dim_graded_ring(d_, m);
    if (rows_total > opts.max_rows)
        throw ResourceLimit("graded piece exceeds row limit: d=" + std::to_string(d_) + " m=" + std::to_string(m));
    Int cols_total = Int(w_dim(d_, q_max)) * dim_graded_ring(d_, m - 2);
    if (cols_total > opts.max_cols)
        throw ResourceLimit("graded piece exceeds column limit: d=" + std::to_string(d_) + " m=" + std::to_string(m));

    std::vector<std::vector<Code>> rows_by_k, mus_by_k;
    enumerate_monomials(d_, m, rows_by_k);
    enumerate_monomials(d_, m - 2, mus_by_k);

    long kmax = static_cast<long>(m) * d_;
    std::vector<Block> blocks(static_cast<std::size_t>(kmax) + 1);
    for (long k = 0; k <= kmax; ++k) {
        Block& blk = blocks[static_cast<std::size_t>(k)];
        const auto& rows = rows_by_k[static_cast<std::size_t>(k)];
        blk.num_rows = static_cast<int32_t>(rows.size());
        // (R/I_C)_m is one-dimensional in every coweight 0..md, so the
        // block rank can never exceed rows-1.
        blk.rank_cap = blk.num_rows > 0 ? blk.num_rows - 1 : 0;
        for (const auto& gen : gens_) {
            if (gen.group > q_max) break;
            long kk = k - gen.coweight;
            if (kk < 0 || kk > static_cast<long>(m - 2) * d_) continue;
            for (Code mu : mus_by_k[static_cast<std::size_t>(kk)]) {
                SparseColumn colv;
                for (const auto& [p, q, val] : gen.terms) {
                    Code rowcode = mu + (static_cast<Code>(1) << (6 * p)) + (static_cast<Code>(1) << (6 * q));
                    int32_t r = locate(rows, rowcode);
                    if (r < 0) throw std::logic_error("assemble_blocks: row lookup failed");
                    colv.entries.emplace_back(r, val);
                }
                blk.columns.push_back(std::move(colv));
                blk.group_of_column.push_back(gen.group - 1);
            }
        }
    }
    return blocks;
}

std::vector<int64_t> GradedEngine::dims(int m, int q_max, const RankOptions& opts) const {
    auto blocks = assemble_blocks(m, q_max, opts);
    auto primes = select_primes(opts.prime_seed, opts.num_primes);
    std::vector<int64_t> agreed;
    for (uint32_t p : primes) {
        auto per_block = opts.parallel ? blocks_rank_parallel(blocks, p, q_max)
                                       : blocks_rank_serial(blocks, p, q_max);
        std::vector<int64_t> totals(static_cast<std::size_t>(q_max), 0);
        for (const auto& br : per_block)
            for (int g = 0; g < q_max; ++g) totals[static_cast<std::size_t>(g)] += br[static_cast<std::size_t>(g)];
        if (agreed.empty()) {
            agreed = totals;
        } else if (agreed != totals) {
            throw std::runtime_error("modular ranks disagree between primes; rerun with a new seed");
        }
    }
    if (opts.certify) {
        auto exact = dims_bareiss(m, q_max, opts);
        if (exact != agreed) throw std::runtime_error("modular rank disagrees with fraction-free rank");
    }
    return agreed;
}

std::vector<int64_t> GradedEngine::dims_bareiss(int m, int q_max, const RankOptions& opts) const {
    auto blocks = assemble_blocks(m, q_max, opts);
    std::vector<int64_t> totals(static_cast<std::size_t>(q_max), 0);
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks.size()); ++b) {
        auto br = block_rank_bareiss(blocks[static_cast<std::size_t>(b)], q_max);
#pragma omp critical
        for (int g = 0; g < q_max; ++g) totals[static_cast<std::size_t>(g)] += br[static_cast<std::size_t>(g)];
    }
    return totals;
}

std::vector<std::vector<Int>> GradedEngine::assemble_dense(int m, int q_max) const {
    RankOptions opts;
    opts.max_rows = 5000;
    opts.max_cols = 500000;
    auto blocks = assemble_blocks(m, q_max, opts);
    // Stack the blocks along the diagonal (row/column order is irrelevant
    // to the rank; this is only used by the reference backend).
    int64_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.num_rows;
        cols += static_cast<int64_t>(b.columns.size());
    }
    std::vector<std::vector<Int>> mat(static_cast<std::size_t>(rows),
                                      std::vector<Int>(static_cast<std::size_t>(cols), Int(0)));
    int64_t row0 = 0, col0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t c = 0; c < b.columns.size(); ++c)
            for (const auto& [r, v] : b.columns[c].entries)
                mat[static_cast<std::size_t>(row0 + r)][static_cast<std::size_t>(col0 + static_cast<int64_t>(c))] += v;
        row0 += b.num_rows;
        col0 += static_cast<int64_t>(b.columns.size());
    }
    return mat;
}

}  // namespace binform
