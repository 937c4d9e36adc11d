#ifndef BINFORM_LAURENT_HPP
#define BINFORM_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "binform/numeric.hpp"

namespace binform {

// Univariate Laurent polynomial over Q in the chart coordinate.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(const Rat& c, int e);
    static LaurentPoly constant(const Rat& c) { return monomial(c, 0); }

    const std::map<int, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    int min_exp() const;  // requires nonzero
    int max_exp() const;
    Rat coefficient(int e) const;
    void add_term(int e, const Rat& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly shifted(int e) const;                  // multiply by l^e
    LaurentPoly scaled(const Rat& c) const;
    // Terms with exponent <= cut / >= cut.
    LaurentPoly low_part(int cut) const;
    LaurentPoly high_part(int cut) const;

    std::string to_string(const std::string& var = "l") const;

private:
    std::map<int, Rat> coeffs_;
};

struct LaurentMatrix {
    int n = 0;
    std::vector<std::vector<LaurentPoly>> a;

    LaurentMatrix() = default;
    explicit LaurentMatrix(int size) : n(size), a(static_cast<std::size_t>(size), std::vector<LaurentPoly>(static_cast<std::size_t>(size))) {}

    static LaurentMatrix identity(int size);
    LaurentPoly& at(int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const LaurentPoly& at(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    LaurentMatrix operator*(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const { return n == o.n && a == o.a; }

    // Substitute l -> l^-1 in every entry.
    LaurentMatrix mirrored() const;

    std::string to_string(const std::string& var = "l") const;
};

LaurentPoly laurent_determinant(const LaurentMatrix& m);

// Inverse via adjugate; requires det to be a monomial (unit), which makes
// the division exact.
LaurentMatrix laurent_inverse(const LaurentMatrix& m);

// Q = E^-1 D F with E in GL(n, Q[l]), F in GL(n, Q[l^-1]) and D diagonal
// with entries l^(k_i). Requires det Q to be a unit c l^k.
struct BirkhoffFactorization {
    LaurentMatrix E, D, F;
    std::vector<int> exponents;  // k_i in row order of D
};

BirkhoffFactorization birkhoff_factorize(const LaurentMatrix& q);

}  // namespace binform

#endif
