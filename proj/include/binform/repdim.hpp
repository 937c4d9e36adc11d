#ifndef BINFORM_REPDIM_HPP
#define BINFORM_REPDIM_HPP

#include <string>
#include <vector>

#include "binform/numeric.hpp"

namespace binform {

struct IsotypicDecomposition {
    int d = 0;
    int m = 0;
    // (order n, multiplicity), descending in n, multiplicities >= 1.
    std::vector<std::pair<int, long>> parts;
};

// Number of partitions of k into at most parts parts, each at most maxpart.
Int partition_count(long k, int parts, int maxpart);

// Multiplicity of S_n inside Sym^m S_d (Cayley–Sylvester count):
// P((md-n)/2) - P((md-n)/2 - 1) with P the box-bounded partition counter;
// zero when md - n is odd or negative.
long eta(int d, int m, int n);

IsotypicDecomposition decompose_sym(int d, int m);

// Direct-sum display, e.g. "S_18 + S_14 + ... + 2*S_6 + S_2".
std::string decomposition_to_string(const IsotypicDecomposition& dec);

// dim of degree-4 invariants of a d-ic: write d = 6e + k, h = e + delta_k
// with delta_1 = 0 and delta_k = 1 otherwise.
long h_invariant_dim(int d);

// Brute-force oracle for h: #{(a,b) in N^2 : 2a + 3b = d}.
long h_invariant_dim_bruteforce(int d);

// binom(m+d, d)
Int dim_graded_ring(int d, int m);

}  // namespace binform

#endif
