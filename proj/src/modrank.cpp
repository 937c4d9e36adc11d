#include "binform/modrank.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace binform {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

uint32_t inv_mod(uint32_t a, uint32_t p) { return static_cast<uint32_t>(powmod_u64(a, p - 2, p)); }

uint32_t int_mod(const Int& v, uint32_t p) {
    unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), p);
    return static_cast<uint32_t>(r);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for n < 3.3e24 with these witnesses.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<uint32_t> select_primes(uint64_t seed, int count) {
    // mt19937_64 output mapped with an explicit reduction, so the chosen
    // primes depend only on the seed, not on the standard library.
    std::mt19937_64 rng(seed);
    const uint64_t lo = 1ull << 30;
    const uint64_t span = 1ull << 30;
    std::vector<uint32_t> primes;
    while (static_cast<int>(primes.size()) < count) {
        uint64_t candidate = (lo + rng() % span) | 1;
        if (!is_prime_u64(candidate)) continue;
        if (std::find(primes.begin(), primes.end(), candidate) != primes.end()) continue;
        primes.push_back(static_cast<uint32_t>(candidate));
    }
    return primes;
}

std::vector<int32_t> block_rank_mod_p(const Block& block, uint32_t p, int num_groups) {
    const int32_t rows = block.num_rows;
    std::vector<int32_t> result(static_cast<std::size_t>(num_groups), 0);
    if (rows == 0 || block.columns.empty()) return result;
    const int32_t cap = block.rank_cap > 0 ? std::min(block.rank_cap, rows) : rows;

    // Echelon basis indexed by pivot row: basis[pos] is a normalized dense
    // vector with leading 1 at pos, stored from pos to rows-1.
    std::vector<std::vector<uint32_t>> basis(static_cast<std::size_t>(rows));
    int32_t rank = 0;
    std::vector<uint64_t> v(static_cast<std::size_t>(rows));

    std::size_t col = 0;
    for (int g = 0; g < num_groups; ++g) {
        for (; col < block.columns.size() && block.group_of_column[col] <= g; ++col) {
            if (rank >= cap) continue;  // group ranks below are clamped anyway
            std::fill(v.begin(), v.end(), 0);
            for (const auto& [r, val] : block.columns[col].entries) {
                uint32_t m = int_mod(val, p);
                v[static_cast<std::size_t>(r)] = (v[static_cast<std::size_t>(r)] + m) % p;
            }
            int32_t pos = 0;
            while (pos < rows) {
                if (v[static_cast<std::size_t>(pos)] == 0) {
                    ++pos;
                    continue;
                }
                auto& b = basis[static_cast<std::size_t>(pos)];
                if (b.empty()) break;  // new pivot
                uint64_t factor = p - (v[static_cast<std::size_t>(pos)] % p);
                for (int32_t t = pos; t < rows; ++t)
                    v[static_cast<std::size_t>(t)] =
                        (v[static_cast<std::size_t>(t)] + factor * b[static_cast<std::size_t>(t - pos)]) % p;
                ++pos;
            }
            if (pos < rows) {
                uint32_t inv = inv_mod(static_cast<uint32_t>(v[static_cast<std::size_t>(pos)]), p);
                auto& b = basis[static_cast<std::size_t>(pos)];
                b.resize(static_cast<std::size_t>(rows - pos));
                for (int32_t t = pos; t < rows; ++t)
                    b[static_cast<std::size_t>(t - pos)] =
                        static_cast<uint32_t>(mulmod_u64(v[static_cast<std::size_t>(t)], inv, p));
                ++rank;
            }
        }
        result[static_cast<std::size_t>(g)] = rank;
    }
    return result;
}

std::vector<std::vector<int32_t>> blocks_rank_serial(const std::vector<Block>& blocks,
                                                     uint32_t p, int num_groups) {
    std::vector<std::vector<int32_t>> out(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        out[b] = block_rank_mod_p(blocks[b], p, num_groups);
    return out;
}

std::vector<std::vector<int32_t>> blocks_rank_parallel(const std::vector<Block>& blocks,
                                                       uint32_t p, int num_groups) {
    std::vector<std::vector<int32_t>> out(blocks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks.size()); ++b)
        out[static_cast<std::size_t>(b)] = block_rank_mod_p(blocks[static_cast<std::size_t>(b)], p, num_groups);
    return out;
}

int64_t dense_rank_mod_p(const std::vector<std::vector<Int>>& matrix, uint32_t p) {
    if (matrix.empty()) return 0;
    std::size_t rows = matrix.size(), cols = matrix[0].size();
    std::vector<std::vector<uint32_t>> m(rows, std::vector<uint32_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = int_mod(matrix[i][j], p);
    int64_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int64_t>(rows); ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = static_cast<std::size_t>(rank); i < rows; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        uint64_t inv = inv_mod(m[static_cast<std::size_t>(rank)][col], p);
        for (std::size_t j = col; j < cols; ++j)
            m[static_cast<std::size_t>(rank)][j] =
                static_cast<uint32_t>(mulmod_u64(m[static_cast<std::size_t>(rank)][j], inv, p));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(rank) || m[i][col] == 0) continue;
            uint64_t factor = p - m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = static_cast<uint32_t>((m[i][j] + factor * m[static_cast<std::size_t>(rank)][j]) % p);
        }
        ++rank;
    }
    return rank;
}

std::vector<int32_t> block_rank_bareiss(const Block& block, int num_groups) {
    // Column-incremental exact elimination: keep an echelon basis of exact
    // rational-free rows (Int with a shared denominator story avoided by
    // scaling each reduced vector to integers).
    const int32_t rows = block.num_rows;
    std::vector<int32_t> result(static_cast<std::size_t>(num_groups), 0);
    if (rows == 0 || block.columns.empty()) return result;

    std::vector<std::vector<Int>> basis(static_cast<std::size_t>(rows));
    int32_t rank = 0;
    std::size_t col = 0;
    for (int g = 0; g < num_groups; ++g) {
        for (; col < block.columns.size() && block.group_of_column[col] <= g; ++col) {
            std::vector<Int> v(static_cast<std::size_t>(rows), Int(0));
            for (const auto& [r, val] : block.columns[col].entries) v[static_cast<std::size_t>(r)] += val;
            int32_t pos = 0;
            while (pos < rows) {
                if (v[static_cast<std::size_t>(pos)] == 0) {
                    ++pos;
                    continue;
                }
                auto& b = basis[static_cast<std::size_t>(pos)];
                if (b.empty()) break;
                // v <- (b_lead * v - v_lead * b), fraction-free.
                Int vlead = v[static_cast<std::size_t>(pos)];
                Int blead = b[0];
                for (int32_t t = pos; t < rows; ++t) {
                    v[static_cast<std::size_t>(t)] =
                        blead * v[static_cast<std::size_t>(t)] - vlead * b[static_cast<std::size_t>(t - pos)];
                }
                ++pos;
            }
            if (pos < rows) {
                // Normalize by content to tame growth.
                Int content = 0;
                for (int32_t t = pos; t < rows; ++t)
                    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                            v[static_cast<std::size_t>(t)].get_mpz_t());
                auto& b = basis[static_cast<std::size_t>(pos)];
                b.resize(static_cast<std::size_t>(rows - pos));
                for (int32_t t = pos; t < rows; ++t) b[static_cast<std::size_t>(t - pos)] = v[static_cast<std::size_t>(t)] / content;
                if (b[0] < 0)
                    for (auto& x : b) x = -x;
                ++rank;
            }
        }
        result[static_cast<std::size_t>(g)] = rank;
    }
    return result;
}

}  // namespace binform
