#include "binform/covariant.hpp"

#include <algorithm>
#include <stdexcept>

namespace binform {

Covariant make_covariant(int d, int degree, int order, SparsePoly body) {
    auto bd = body.bidegree();
    if (!bd.any) {
        if (!bd.mn) throw std::invalid_argument("make_covariant: body not bihomogeneous");
        if (bd.mn->first != degree || bd.mn->second != order)
            throw std::invalid_argument("make_covariant: declared bidegree does not match body");
    }
    return Covariant{d, degree, order, std::move(body)};
}

Covariant generic_form(int d) {
    if (d < 1) throw std::invalid_argument("generic_form: d >= 1 required");
    auto u = covariant_universe(d);
    SparsePoly f(u);
    int x1 = u->size() - 2, x2 = u->size() - 1;
    for (int i = 0; i <= d; ++i) {
        Mono m(u->size(), 0);
        m[i] = 1;
        m[x1] = static_cast<uint16_t>(d - i);
        m[x2] = static_cast<uint16_t>(i);
        f.add_term(m, Rat(binomial(d, i)));
    }
    return Covariant{d, 1, d, std::move(f)};
}

SparsePoly transvect_poly(const SparsePoly& a, const SparsePoly& b, int p, int q, int r) {
    if (r < 0) throw std::domain_error("transvect: negative index");
    require_same_universe(a, b);
    const auto& u = a.universe();
    if (u->num_x() != 2) throw std::invalid_argument("transvect: universe has no x-pair");
    if (r > std::min(p, q)) return SparsePoly::zero(u);
    int x1 = u->size() - 2, x2 = u->size() - 1;

    // (p-r)! (q-r)! / (p! q!)
    Rat prefactor = rat(Int(factorial(p - r) * factorial(q - r)), Int(factorial(p) * factorial(q)));

    std::vector<SparsePoly> da(r + 1), db(r + 1);
    // da[i] = d^r a / dx1^(r-i) dx2^i, likewise db with the roles swapped.
    for (int i = 0; i <= r; ++i) {
        da[i] = a.derivative(x1, r - i).derivative(x2, i);
        db[i] = b.derivative(x1, i).derivative(x2, r - i);
    }
    SparsePoly sum(u);
    for (int i = 0; i <= r; ++i) {
        SparsePoly prod = da[i] * db[i];
        Rat c = Rat(binomial(r, i));
        if (i % 2 == 1) c = -c;
        sum += prod * c;
    }
    return sum * prefactor;
}

Covariant transvect(const Covariant& a, const Covariant& b, int r) {
    if (a.d != b.d) throw std::invalid_argument("transvect: covariants over different d");
    SparsePoly body = transvect_poly(a.body, b.body, a.order, b.order, r);
    return Covariant{a.d, a.degree + b.degree, a.order + b.order - 2 * r, std::move(body)};
}

Covariant hessian_covariant(int d, int q) {
    if (q < 1 || 2 * q > d) throw std::domain_error("hessian_covariant: q out of range");
    Covariant f = generic_form(d);
    return transvect(f, f, 2 * q);
}

Covariant cubic_covariant(int d, int a, int b) {
    Covariant f = generic_form(d);
    Covariant h = transvect(f, f, a);
    return transvect(h, f, b);
}

bool is_admissible(int d, int a, int b) {
    return 0 <= a && a <= d && 0 <= b && b <= d && a % 2 == 0 && 2 * a + b <= 2 * d;
}

Covariant specialize(const Covariant& c, const std::vector<Rat>& coeffs) {
    int d = c.d;
    if (static_cast<int>(coeffs.size()) != d + 1)
        throw std::invalid_argument("specialize: expected d+1 coefficients");
    UniversePtr u = c.body.universe();
    if (!u) u = covariant_universe(d);
    std::map<int, SparsePoly> bindings;
    for (int i = 0; i <= d; ++i)
        bindings.emplace(i, SparsePoly::constant(u, coeffs[i] / Rat(binomial(d, i))));
    SparsePoly body = c.body.substitute(bindings);
    return Covariant{d, 0, c.order, std::move(body)};
}

std::vector<SparsePoly> coefficient_list(const Covariant& c) {
    const auto& u = c.body.universe();
    if (!u) throw std::invalid_argument("coefficient_list: covariant without universe");
    int n = c.order;
    int x1 = u->size() - 2, x2 = u->size() - 1;
    std::vector<SparsePoly> coeffs(static_cast<std::size_t>(n) + 1, SparsePoly::zero(u));
    for (const auto& [m, v] : c.body.terms()) {
        int j = m[x2];
        if (m[x1] + j != n) throw std::invalid_argument("coefficient_list: order mismatch");
        Mono mm = m;
        mm[x1] = 0;
        mm[x2] = 0;
        coeffs.at(j).add_term(mm, v);
    }
    return coeffs;
}

Covariant apply_sl2(const Covariant& c, const std::array<std::array<Rat, 2>, 2>& g) {
    Rat det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (det != 1) throw std::invalid_argument("apply_sl2: determinant must be 1");
    const auto& u = c.body.universe();
    int x1 = u->size() - 2, x2 = u->size() - 1;
    std::map<int, SparsePoly> bindings;
    bindings.emplace(x1, SparsePoly::variable(u, x1) * g[0][0] + SparsePoly::variable(u, x2) * g[0][1]);
    bindings.emplace(x2, SparsePoly::variable(u, x1) * g[1][0] + SparsePoly::variable(u, x2) * g[1][1]);
    return Covariant{c.d, c.degree, c.order, c.body.substitute(bindings)};
}

Covariant covariant_product(const Covariant& a, const Covariant& b) {
    if (a.d != b.d) throw std::invalid_argument("covariant_product: different d");
    return Covariant{a.d, a.degree + b.degree, a.order + b.order, a.body * b.body};
}

Covariant binary_form(int d, const std::vector<Rat>& raw_coeffs) {
    if (static_cast<int>(raw_coeffs.size()) != d + 1)
        throw std::invalid_argument("binary_form: expected d+1 coefficients");
    auto u = covariant_universe(d);
    SparsePoly f(u);
    int x1 = u->size() - 2, x2 = u->size() - 1;
    for (int i = 0; i <= d; ++i) {
        if (is_zero(raw_coeffs[i])) continue;
        Mono m(u->size(), 0);
        m[x1] = static_cast<uint16_t>(d - i);
        m[x2] = static_cast<uint16_t>(i);
        f.add_term(m, raw_coeffs[i]);
    }
    return Covariant{d, 0, d, std::move(f)};
}

int covariant_family_rank(const std::vector<Covariant>& family) {
    if (family.empty()) return 0;
    // Collect every monomial that occurs, then exact Gauss on the rows.
    std::map<Mono, int, MonoLess> columns;
    for (const auto& c : family)
        for (const auto& [m, v] : c.body.terms())
            columns.emplace(m, 0);
    int idx = 0;
    for (auto& [m, i] : columns) i = idx++;
    std::vector<std::vector<Rat>> rows;
    for (const auto& c : family) {
        std::vector<Rat> row(columns.size(), Rat(0));
        for (const auto& [m, v] : c.body.terms()) row[columns[m]] = v;
        rows.push_back(std::move(row));
    }
    int rank = 0;
    std::size_t ncols = columns.size();
    for (std::size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (!is_zero(rows[i][col])) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == rank || is_zero(rows[i][col])) continue;
            Rat f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace binform
