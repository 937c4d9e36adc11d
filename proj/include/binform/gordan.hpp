#ifndef BINFORM_GORDAN_HPP
#define BINFORM_GORDAN_HPP

#include <optional>
#include <vector>

#include "binform/covariant.hpp"

namespace binform {

struct GordanParameters {
    int m = 0, n = 0, p = 0;  // orders of f, phi, psi
    int a1 = 0, a2 = 0, a3 = 0;
};

// ((X, Y)_inner, Z)_outer where (X, Y, Z) is a fixed pairing of the three
// forms: lhs pairs (f, phi) against psi, rhs pairs (f, psi) against phi.
struct CompoundTransvectant {
    int inner = 0;
    int outer = 0;
};

using GordanSide = std::vector<std::pair<CompoundTransvectant, Rat>>;

// The three-form series: both sides as finite formal sums (the binomial
// convention truncates them). Throws on invalid parameters.
std::pair<GordanSide, GordanSide> gordan_general(const GordanParameters& params);

// Expands both sides on concrete covariants and compares exactly.
bool verify_gordan_syzygy(const Covariant& f, const Covariant& phi, const Covariant& psi,
                          const GordanParameters& params);

// Coefficient of {m, w-m} in the weight-w syzygy family with a1 = 0,
// a2 = k, a3 = w-k. The (d, k, w) ranges are validated; m outside the
// summation range simply yields 0 by the binomial convention.
Rat theta(int d, int k, int w, int m);

// Coefficient of {m, w-m} in the family with a1 = w-d, a2 = d-k, a3 = k.
Rat vartheta(int d, int k, int w, int m);

struct SyzygyCombination {
    int d = 0;
    int weight = 0;
    // ((a, b), coefficient); odd-a pairs are kept even though {a,b} = 0,
    // so positions match the even-only counting used by the matrices.
    std::vector<std::pair<std::pair<int, int>, Rat>> terms;
};

SyzygyCombination gordan_lower(int d, int k, int w);
SyzygyCombination gordan_upper(int d, int k, int w);

// True iff sum coeff * {a,b} is the zero polynomial. d <= 12.
bool expand_to_zero(int d, const SyzygyCombination& c);

// Number of admissible (a', b') of the same weight with a' >= a.
int position(int d, int a, int b);

// The square coefficient matrices whose nonvanishing determinants force
// the tails of threes: rows are syzygies of weight w = 2(n-s+1)+t,
// columns the pairs {2m, w-2m} with m = n-s+1..n-s+p.
struct GordanMatrix {
    int d = 0, s = 0, t = 0;
    int w = 0;
    int p = 0;              // size
    bool case_two = false;  // true: vartheta entries, false: theta entries
    std::vector<int> row_k;
    std::vector<int> col_m;
    std::vector<std::vector<Rat>> entries;
};

// Throws std::domain_error when the construction is out of range at this
// (d, s, t); p = 0 yields an empty matrix (determinant 1).
GordanMatrix build_matrix(int d, int s, int t);

enum class Parity { even, odd };

// det of build_matrix(d, s, t); parity must match d.
Rat delta(int d, int s, int t, Parity parity);

struct ThresholdScan {
    int s = 0;
    int d_max = 0;
    int threshold = 0;            // least N with all d in [N, d_max] passing
    std::vector<int> failing_d;   // every d <= d_max that fails
};

// A d passes when every matrix in the family is constructible with a
// nonzero determinant.
ThresholdScan threshold_search(int s, int d_max);

Rat determinant(const std::vector<std::vector<Rat>>& m);

}  // namespace binform

#endif
