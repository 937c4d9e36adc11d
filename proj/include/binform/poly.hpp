#ifndef BINFORM_POLY_HPP
#define BINFORM_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "binform/numeric.hpp"

namespace binform {

// A fixed, dense list of variable names. Polynomials over different
// universes never mix. The x-pair (x1, x2), when present, occupies the
// last two slots; everything before it counts toward the "a-degree".
class VariableUniverse {
public:
    VariableUniverse(std::vector<std::string> names, int num_x);

    int size() const { return static_cast<int>(names_.size()); }
    int num_x() const { return num_x_; }
    int num_a() const { return size() - num_x_; }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;  // -1 if absent
    bool is_x(int i) const { return i >= num_a(); }

    bool same_as(const VariableUniverse& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    int num_x_;
};

using UniversePtr = std::shared_ptr<const VariableUniverse>;

// a_0..a_d, x1, x2
UniversePtr covariant_universe(int d);
// l1..ld, x1, x2  (affine-chart coefficients)
UniversePtr lambda_universe(int d);
// l1..ld, u2..ud  (chart coefficients plus formal ideal generators)
UniversePtr lambda_u_universe(int d);

using Mono = std::vector<uint16_t>;

int mono_degree(const Mono& m);

// Degree, then lexicographic on the exponent vector.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(UniversePtr u) : u_(std::move(u)) {}

    static SparsePoly zero(UniversePtr u) { return SparsePoly(std::move(u)); }
    static SparsePoly constant(UniversePtr u, const Rat& c);
    static SparsePoly variable(UniversePtr u, int var, int exp = 1);
    static SparsePoly monomial(UniversePtr u, Mono m, const Rat& c);

    const UniversePtr& universe() const { return u_; }
    const std::map<Mono, Rat, MonoLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Mono& m, const Rat& c);  // accumulates, drops zeros

    SparsePoly operator-() const;
    SparsePoly operator+(const SparsePoly& q) const;
    SparsePoly operator-(const SparsePoly& q) const;
    SparsePoly operator*(const SparsePoly& q) const;
    SparsePoly operator*(const Rat& c) const;
    SparsePoly& operator+=(const SparsePoly& q);
    SparsePoly& operator-=(const SparsePoly& q);
    SparsePoly& operator*=(const Rat& c);
    bool operator==(const SparsePoly& q) const;
    bool operator!=(const SparsePoly& q) const { return !(*this == q); }

    // k-th partial derivative in variable var.
    SparsePoly derivative(int var, int k = 1) const;

    // Simultaneous substitution; unbound variables map to themselves.
    SparsePoly substitute(const std::map<int, SparsePoly>& bindings) const;

    Rat evaluate(const std::vector<Rat>& point) const;

    Rat coefficient(const Mono& m) const;

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;

    struct Bidegree {
        bool any = false;  // zero polynomial: every bidegree fits
        std::optional<std::pair<int, int>> mn;
    };
    Bidegree bidegree() const;

    // Weighted degree with weight w[i] on variable i; nullopt unless all
    // terms share it (the zero polynomial reports 0).
    std::optional<long> isobaric_weight(const std::vector<long>& weights) const;

    // Least common multiple of coefficient denominators.
    Int denominator_lcm() const;

    std::string to_string() const;

private:
    UniversePtr u_;
    std::map<Mono, Rat, MonoLess> terms_;
};

SparsePoly parse_poly(const UniversePtr& u, const std::string& text);

void require_same_universe(const SparsePoly& p, const SparsePoly& q);

// Re-express p in another universe by matching variable names; every
// variable actually used must exist in the target.
SparsePoly transport(const SparsePoly& p, const UniversePtr& target);

}  // namespace binform

#endif
