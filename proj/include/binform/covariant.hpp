#ifndef BINFORM_COVARIANT_HPP
#define BINFORM_COVARIANT_HPP

#include <array>
#include <vector>

#include "binform/poly.hpp"

namespace binform {

// A bihomogeneous element of Q[a_0..a_d; x1, x2]: degree m in the a's,
// order n in the x's. A vanishing covariant keeps its declared (m, n).
struct Covariant {
    int d = 0;
    int degree = 0;  // a-degree m
    int order = 0;   // x-order n
    SparsePoly body;

    bool is_zero() const { return body.is_zero(); }
};

// Checks that body is bihomogeneous of the declared bidegree (or zero).
Covariant make_covariant(int d, int degree, int order, SparsePoly body);

// F = sum_i binom(d,i) a_i x1^(d-i) x2^i, degree-order (1, d).
Covariant generic_form(int d);

// Core transvectant on raw polynomials with declared x-orders p and q.
// Returns zero when r > min(p, q).
SparsePoly transvect_poly(const SparsePoly& a, const SparsePoly& b, int p, int q, int r);

Covariant transvect(const Covariant& a, const Covariant& b, int r);

// H_{2q} = (F, F)_{2q}: degree 2, order 2d - 4q.
Covariant hessian_covariant(int d, int q);

// {a, b} = ((F,F)_a, F)_b of order 3d - 2(a+b); identically zero outside
// the admissible range, with the (3, n) metadata retained.
Covariant cubic_covariant(int d, int a, int b);

// 0 <= a, b <= d, a even, 2a + b <= 2d.
bool is_admissible(int d, int a, int b);

// Substitutes a_i <- coeffs[i] / binom(d, i), so coeffs lists the raw
// x1^(d-i) x2^i coefficients of the target binary form.
Covariant specialize(const Covariant& c, const std::vector<Rat>& coeffs);

// phi_0..phi_n with body = sum_j phi_j x1^(n-j) x2^j.
std::vector<SparsePoly> coefficient_list(const Covariant& c);

// x-substitution action for g in SL2 (det g = 1); intended for forms in
// x alone (a-degree 0), which is all the equivariance tests need.
Covariant apply_sl2(const Covariant& c, const std::array<std::array<Rat, 2>, 2>& g);

Covariant covariant_product(const Covariant& a, const Covariant& b);

// Binary form in x only from raw coefficients (degree-0 covariant).
Covariant binary_form(int d, const std::vector<Rat>& raw_coeffs);

// Rank of the coefficient vectors of a family of covariants of equal
// (d, degree, order), by exact elimination over Q. Used for linear
// independence questions inside covariant spaces.
int covariant_family_rank(const std::vector<Covariant>& family);

}  // namespace binform

#endif
