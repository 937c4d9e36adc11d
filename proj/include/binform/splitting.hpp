#ifndef BINFORM_SPLITTING_HPP
#define BINFORM_SPLITTING_HPP

#include <map>

#include "binform/laurent.hpp"
#include "binform/poly.hpp"

namespace binform {

// (f, f)_2 for the affine form f = F/a_0, split per the x2-exponent:
// index t runs 2..2d-2, with binom(2d-4, t-2) divided out; u covers
// t = 2..d, v covers t = d+1..2d-2. Entries live in Q[l1..ld], isobaric
// of weight t when l_i has weight i.
struct AffineHessianData {
    int d = 0;
    UniversePtr universe;          // l1..ld, no x
    std::map<int, SparsePoly> u;   // r -> u_r
    std::map<int, SparsePoly> v;   // s -> v_s
};

AffineHessianData affine_hessian(int d);

enum class CofactorRule { lowest_index, highest_index };

// v_s = sum_r g[s][r] * u_r with g[s][r] isobaric of weight s - r.
// The identity is re-expanded and checked before returning.
struct CofactorDecomposition {
    int d = 0;
    CofactorRule rule = CofactorRule::lowest_index;
    UniversePtr universe;
    std::map<int, std::map<int, SparsePoly>> g;
};

CofactorDecomposition cofactor_decomposition(int d, CofactorRule rule = CofactorRule::lowest_index);
CofactorDecomposition cofactor_decomposition(const AffineHessianData& data, CofactorRule rule);

enum class Chart { lower, upper };

// Kernel generator xi_s reduced to the curve: coordinates over the module
// basis U_2..U_d, V_{d+1}..V_{2d-2} (in that order). The V_s coordinate
// is 1; the U_r coordinates are -g[s][r] restricted to the curve, which
// isobarity collapses to single monomials c l^(s-r) (or c l^(r-s) on the
// upper chart).
struct XiGenerator {
    int s = 0;
    std::vector<LaurentPoly> coords;
};

std::vector<XiGenerator> xi_generators(int d, Chart chart,
                                       CofactorRule rule = CofactorRule::lowest_index);

// The chart-transition matrix Q with Q xi^- = l^-(3d-1) xi^+; entries are
// monomials c l^(i-j).
LaurentMatrix transition_matrix(int d, CofactorRule rule = CofactorRule::lowest_index);

struct SplittingResult {
    int d = 0;
    LaurentMatrix q;
    BirkhoffFactorization factorization;
    std::vector<int> twists;  // t_i = -(3d-1) + k_i, sorted ascending
};

SplittingResult splitting_type(int d, CofactorRule rule = CofactorRule::lowest_index);

}  // namespace binform

#endif
