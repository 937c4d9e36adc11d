#include "binform/splitting.hpp"

#include <algorithm>

#include "binform/covariant.hpp"

namespace binform {

namespace {

UniversePtr lambda_plain_universe(int d) {
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back("l" + std::to_string(i));
    return std::make_shared<VariableUniverse>(std::move(names), 0);
}

std::vector<long> lambda_weights(const UniversePtr& u) {
    // weight of l_i is i, of u_r is r, of x is 0.
    std::vector<long> w(static_cast<std::size_t>(u->size()), 0);
    for (int i = 0; i < u->size(); ++i) {
        const std::string& name = u->name(i);
        if (name[0] == 'l' || name[0] == 'u') w[static_cast<std::size_t>(i)] = std::stol(name.substr(1));
    }
    return w;
}

}  // namespace

AffineHessianData affine_hessian(int d) {
    if (d < 3) throw std::domain_error("affine_hessian: d >= 3 required");
    auto u_full = lambda_universe(d);  // l1..ld, x1, x2
    int x1 = u_full->size() - 2, x2 = u_full->size() - 1;
    SparsePoly f(u_full);
    {
        Mono lead(static_cast<std::size_t>(u_full->size()), 0);
        lead[static_cast<std::size_t>(x1)] = static_cast<uint16_t>(d);
        f.add_term(lead, Rat(1));
    }
    for (int i = 1; i <= d; ++i) {
        Mono m(static_cast<std::size_t>(u_full->size()), 0);
        m[static_cast<std::size_t>(i - 1)] = 1;
        m[static_cast<std::size_t>(x1)] = static_cast<uint16_t>(d - i);
        m[static_cast<std::size_t>(x2)] = static_cast<uint16_t>(i);
        f.add_term(m, Rat(binomial(d, i)));
    }
    SparsePoly hess = transvect_poly(f, f, d, d, 2);

    AffineHessianData data;
    data.d = d;
    data.universe = lambda_plain_universe(d);
    auto weights = lambda_weights(data.universe);
    // Coefficient of x1^(2d-t-2) x2^(t-2) carries binom(2d-4, t-2) * w_t.
    std::map<int, SparsePoly> by_t;
    for (const auto& [m, c] : hess.terms()) {
        int t = m[static_cast<std::size_t>(x2)] + 2;
        Mono mm = m;
        mm[static_cast<std::size_t>(x1)] = 0;
        mm[static_cast<std::size_t>(x2)] = 0;
        auto it = by_t.find(t);
        if (it == by_t.end()) it = by_t.emplace(t, SparsePoly(u_full)).first;
        it->second.add_term(mm, c);
    }
    for (int t = 2; t <= 2 * d - 2; ++t) {
        SparsePoly w_t(data.universe);
        auto it = by_t.find(t);
        if (it != by_t.end())
            w_t = transport(it->second, data.universe) * (Rat(1) / Rat(binomial(2 * d - 4, t - 2)));
        auto weight = w_t.isobaric_weight(weights);
        if (!weight || (!w_t.is_zero() && *weight != t))
            throw std::logic_error("affine_hessian: entry not isobaric of its index");
        if (t <= d)
            data.u.emplace(t, std::move(w_t));
        else
            data.v.emplace(t, std::move(w_t));
    }
    // kappa u_r = l_r - P_r: the l_r coefficient must be nonzero.
    for (int r = 2; r <= d; ++r) {
        Mono m(static_cast<std::size_t>(d), 0);
        m[static_cast<std::size_t>(r - 1)] = 1;
        if (is_zero(data.u.at(r).coefficient(m)))
            throw std::logic_error("affine_hessian: u_r has no l_r term");
    }
    return data;
}

CofactorDecomposition cofactor_decomposition(int d, CofactorRule rule) {
    return cofactor_decomposition(affine_hessian(d), rule);
}

CofactorDecomposition cofactor_decomposition(const AffineHessianData& data, CofactorRule rule) {
    const int d = data.d;
    auto u_lu = lambda_u_universe(d);  // l1..ld, u2..ud
    auto u_plain = data.universe;

    // Triangular change of coordinates: l_r = expr_r(l_1, U_2..U_r) built
    // from u_r = c_r l_r + rest_r(l_1..l_{r-1}).
    std::map<int, SparsePoly> bindings;  // index of l_r in u_lu -> expr
    for (int r = 2; r <= d; ++r) {
        Mono lr(static_cast<std::size_t>(d), 0);
        lr[static_cast<std::size_t>(r - 1)] = 1;
        Rat c_r = data.u.at(r).coefficient(lr);
        SparsePoly rest = data.u.at(r) - SparsePoly::monomial(u_plain, lr, c_r);
        SparsePoly rest_lu = transport(rest, u_lu).substitute(bindings);
        int ur_index = u_lu->index_of("u" + std::to_string(r));
        SparsePoly expr = (SparsePoly::variable(u_lu, ur_index) - rest_lu) * (Rat(1) / c_r);
        bindings.emplace(u_lu->index_of("l" + std::to_string(r)), std::move(expr));
    }

    // Back-substitution map U_r -> u_r(l).
    std::map<int, SparsePoly> back;
    for (int r = 2; r <= d; ++r)
        back.emplace(u_lu->index_of("u" + std::to_string(r)), transport(data.u.at(r), u_lu));

    CofactorDecomposition dec;
    dec.d = d;
    dec.rule = rule;
    dec.universe = u_plain;
    auto weights = lambda_weights(u_plain);

    for (const auto& [s, v_s] : data.v) {
        SparsePoly rewritten = transport(v_s, u_lu).substitute(bindings);
        // Attribute each monomial to one of its U factors.
        std::map<int, SparsePoly> cofactor_u;  // r -> cofactor in (l1, U) coords
        for (const auto& [m, c] : rewritten.terms()) {
            int chosen = -1;
            for (int r = 2; r <= d; ++r) {
                int idx = u_lu->index_of("u" + std::to_string(r));
                if (m[static_cast<std::size_t>(idx)] == 0) continue;
                chosen = r;
                if (rule == CofactorRule::lowest_index) break;
            }
            if (chosen < 0)
                throw std::logic_error("cofactor_decomposition: residual term outside the ideal");
            Mono mm = m;
            mm[static_cast<std::size_t>(u_lu->index_of("u" + std::to_string(chosen)))] -= 1;
            auto it = cofactor_u.find(chosen);
            if (it == cofactor_u.end()) it = cofactor_u.emplace(chosen, SparsePoly(u_lu)).first;
            it->second.add_term(mm, c);
        }
        // Map cofactors back to the l-variables and verify the identity.
        SparsePoly recombined(u_plain);
        std::map<int, SparsePoly> g_s;
        for (int r = 2; r <= d; ++r) {
            SparsePoly g(u_plain);
            auto it = cofactor_u.find(r);
            if (it != cofactor_u.end()) g = transport(it->second.substitute(back), u_plain);
            auto w = g.isobaric_weight(weights);
            if (!w || (!g.is_zero() && *w != s - r))
                throw std::logic_error("cofactor_decomposition: cofactor not isobaric of weight s-r");
            recombined += g * data.u.at(r);
            g_s.emplace(r, std::move(g));
        }
        if (recombined != v_s)
            throw std::logic_error("cofactor_decomposition: re-expansion does not match v_s");
        dec.g.emplace(s, std::move(g_s));
    }
    return dec;
}

namespace {

// Curve restriction l_i -> l^i collapses an isobaric polynomial of weight
// w to (sum of coefficients) * l^w.
Rat curve_constant(const SparsePoly& g) {
    Rat total(0);
    for (const auto& [m, c] : g.terms()) total += c;
    return total;
}

// c[s][r] with g[s][r] -> c[s][r] * l^(s-r) on the curve.
std::map<int, std::map<int, Rat>> curve_cofactors(int d, CofactorRule rule) {
    auto dec = cofactor_decomposition(d, rule);
    std::map<int, std::map<int, Rat>> c;
    for (const auto& [s, gs] : dec.g)
        for (const auto& [r, g] : gs) c[s][r] = curve_constant(g);
    return c;
}

}  // namespace

std::vector<XiGenerator> xi_generators(int d, Chart chart, CofactorRule rule) {
    auto c = curve_cofactors(d, rule);
    std::vector<XiGenerator> out;
    int basis_size = 2 * d - 3;  // U_2..U_d, V_{d+1}..V_{2d-2}
    for (int s = d + 1; s <= 2 * d - 2; ++s) {
        XiGenerator xi;
        xi.s = chart == Chart::lower ? s : -s;
        xi.coords.assign(static_cast<std::size_t>(basis_size), LaurentPoly());
        for (int r = 2; r <= d; ++r) {
            int e = chart == Chart::lower ? s - r : r - s;
            xi.coords[static_cast<std::size_t>(r - 2)] = LaurentPoly::monomial(-c.at(s).at(r), e);
        }
        xi.coords[static_cast<std::size_t>(d - 1 + (s - d - 1))] = LaurentPoly::constant(Rat(1));
        out.push_back(std::move(xi));
    }
    return out;
}

LaurentMatrix transition_matrix(int d, CofactorRule rule) {
    // In the primary chart, the dual-chart generator xi_{-s} reads
    //   class(xi_{-s}) = -l^(-2d) sum_{r=2}^{d-1} c[s][r] l^(r-s) xi_{2d-r},
    // because the basis slots transport as W'_{-t} = l^(-2d) W_{2d-t} and
    // a class is read off its V-coordinates. With rows t_i = d+i and
    // columns s_j = 2d-1-j this gives a separable matrix
    //   B[i][j] = C[i][j] l^(-(s_j + t_i)),  C[i][j] = -c[s_j][2d - t_i],
    // and Q = l^-(3d-1) (B^-1)^T = (C^-1)^T with entries c l^(i-j).
    auto c = curve_cofactors(d, rule);
    int n = d - 2;
    if (n < 1) throw std::domain_error("transition_matrix: d >= 3 required");
    std::vector<std::vector<Rat>> cmat(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int t = d + i;
            int s = 2 * d - 1 - j;
            cmat[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -c.at(s).at(2 * d - t);
        }
    // Exact inverse of the constant matrix.
    std::vector<std::vector<Rat>> inv(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    {
        auto a = cmat;
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int i = col; i < n; ++i)
                if (!is_zero(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)])) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) throw std::runtime_error("transition_matrix: singular chart-overlap system");
            std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
            std::swap(inv[static_cast<std::size_t>(col)], inv[static_cast<std::size_t>(pivot)]);
            Rat lead = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int j = 0; j < n; ++j) {
                a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= lead;
                inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] /= lead;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col) continue;
                Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
                if (is_zero(f)) continue;
                for (int j = 0; j < n; ++j) {
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                    inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                }
            }
        }
    }
    LaurentMatrix q(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            q.at(i - 1, j - 1) = LaurentPoly::monomial(inv[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)], i - j);
    return q;
}

SplittingResult splitting_type(int d, CofactorRule rule) {
    SplittingResult res;
    res.d = d;
    res.q = transition_matrix(d, rule);
    res.factorization = birkhoff_factorize(res.q);
    for (int k : res.factorization.exponents) {
        if (std::abs(k) > d - 3) throw std::logic_error("splitting_type: exponent outside [-(d-3), d-3]");
        res.twists.push_back(-(3 * d - 1) + k);
    }
    std::sort(res.twists.begin(), res.twists.end());
    for (int t : res.twists)
        if (t < -4 * d + 4 || t > -2 * d - 2) throw std::logic_error("splitting_type: twist outside the proven range");
    return res;
}

}  // namespace binform
