#ifndef BINFORM_SATUR_HPP
#define BINFORM_SATUR_HPP

#include <functional>
#include <map>
#include <optional>

#include "binform/graded.hpp"

namespace binform {

// zeta(d) = (1/(d-2)) * sqrt((d-1)(d^2-2)/2), kept exact: all comparisons
// go through cross-multiplied squares.
struct ZetaValue {
    int d = 0;
    Int radicand_num;  // (d-1)(d^2-2)
    Int radicand_den;  // 2
    int prefactor_den = 1;  // d-2
};

ZetaValue zeta(int d);

// sign of (m - zeta(d)) decided exactly; m >= 0.
int cmp_int_vs_zeta(long m, int d);

// (2d-3) binom(m+d-2, d) >= binom(m+d, d) - (m d + 1)
bool check_counting_inequality(int d, int m);

// Both sides of the factorization Q(d,m) = 2(d-2)(m-xi_1)(m-xi_2),
// expanded over Q so the identity is checkable exactly.
std::pair<Rat, Rat> counting_quadratic_both_routes(int d, long m);

struct GradedPieceDim {
    int d = 0, q = 0, m = 0;
    int64_t dim = 0;
    std::string method;  // "modular" | "rational" | "formula"
};

struct SaturationOptions {
    RankOptions rank;
    // Optional cache hooks keyed by (q, m); the method/seed scoping is the
    // caller's responsibility (the CLI store does it).
    std::function<std::optional<int64_t>(int q, int m)> lookup;
    std::function<void(int q, int m, int64_t dim, const std::string& method)> store;
};

struct SaturationRecord {
    int d = 0;
    std::vector<int> alphas;     // alpha_1 .. alpha_{e-1}
    std::vector<int> satieties;  // satiety of J_{2q}, q = 1 .. e-1
    int big_s = 0;               // S(d) = max alphas
    ZetaValue zeta_value;
    bool bounds_ok = false;  // zeta(d) <= S(d) <= d+2
    std::vector<GradedPieceDim> dims_used;
};

// dim (J_{2q})_m; scans stop at the satiety boundary, everything above is
// ic_dim by upward propagation (I_C is generated in degree 2).
int64_t ideal_dim(int d, int q, int m, const SaturationOptions& opts);

SaturationRecord saturation_sequence(int d, const SaturationOptions& opts);

// The lower-bound probes behind the (q, b, N) triples.
std::vector<std::array<int, 3>> alpha_probe_quadruples();

// True iff the probe certifies alpha_q > b at this d (d >= N required).
bool run_triple_bound(int q, int b, int N, int d);

// (d^3 - 8d^2 + 19d - 14) + (-1)^d binom(2d-6, d-3)
Int alpha1_gt4_discriminant(int d);

// The closed form of the (2,1) matrix entry in the (2,3,12) probe.
Rat probe_2312_entry21(int d);

// The 3x3 probe matrix for (2,3,12) at this d (specialized covariant
// coefficients); exposed for tests.
std::vector<std::vector<Rat>> probe_2312_matrix(int d);

// rank of {G^(q) = (H_2q, H_2q)_{2d-4q} : q in qs} as degree-4 invariants.
int quartic_invariants_rank(int d, const std::vector<int>& qs);

}  // namespace binform

#endif
