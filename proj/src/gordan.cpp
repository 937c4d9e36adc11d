#include "binform/gordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "binform/graded.hpp"

namespace binform {

namespace {

void validate_params(const GordanParameters& g) {
    if (g.a1 < 0 || g.a2 < 0 || g.a3 < 0) throw std::domain_error("gordan: negative exponent");
    if (g.a2 + g.a3 > g.m || g.a1 + g.a3 > g.n || g.a1 + g.a2 > g.p)
        throw std::domain_error("gordan: exponents exceed orders");
    if (g.a1 != 0 && g.a2 + g.a3 != g.m)
        throw std::domain_error("gordan: need a1 = 0 or a2 + a3 = m");
}

// binom(a, b) with the convention binom(a, b) = 0 for a < b or b < 0.
Rat qbin(long a, long b) { return Rat(binomial(Int(a), b)); }

}  // namespace

std::pair<GordanSide, GordanSide> gordan_general(const GordanParameters& g) {
    validate_params(g);
    GordanSide lhs, rhs;
    for (int i = 0;; ++i) {
        Rat num = qbin(g.n - g.a1 - g.a3, i) * qbin(g.a2, i);
        if (is_zero(num)) break;
        Rat den = qbin(g.m + g.n - 2 * g.a3 - i + 1, i);
        if (is_zero(den)) throw std::logic_error("gordan_general: zero denominator binomial");
        lhs.emplace_back(CompoundTransvectant{g.a3 + i, g.a1 + g.a2 - i}, num / den);
    }
    for (int i = 0;; ++i) {
        Rat num = qbin(g.p - g.a1 - g.a2, i) * qbin(g.a3, i);
        if (is_zero(num)) break;
        Rat den = qbin(g.m + g.p - 2 * g.a2 - i + 1, i);
        if (is_zero(den)) throw std::logic_error("gordan_general: zero denominator binomial");
        Rat c = num / den;
        if (g.a1 % 2 == 1) c = -c;
        rhs.emplace_back(CompoundTransvectant{g.a2 + i, g.a1 + g.a3 - i}, c);
    }
    return {lhs, rhs};
}

bool verify_gordan_syzygy(const Covariant& f, const Covariant& phi, const Covariant& psi,
                          const GordanParameters& g) {
    if (f.order != g.m || phi.order != g.n || psi.order != g.p)
        throw std::invalid_argument("verify_gordan_syzygy: orders do not match parameters");
    auto [lhs, rhs] = gordan_general(g);
    // The three forms may have different orders; bring everything into
    // one universe and expand at the polynomial level.
    const auto& u = f.body.universe();
    SparsePoly fb = f.body;
    SparsePoly yb = transport(phi.body, u);
    SparsePoly zb = transport(psi.body, u);
    auto expand = [&](const SparsePoly& y, int ny, const SparsePoly& z, int nz, const GordanSide& side) {
        SparsePoly acc(u);
        for (const auto& [ct, coeff] : side) {
            SparsePoly inner = transvect_poly(fb, y, g.m, ny, ct.inner);
            SparsePoly full = transvect_poly(inner, z, g.m + ny - 2 * ct.inner, nz, ct.outer);
            acc += full * coeff;
        }
        return acc;
    };
    SparsePoly left = expand(yb, g.n, zb, g.p, lhs);
    SparsePoly right = expand(zb, g.p, yb, g.n, rhs);
    return left == right;
}

Rat theta(int d, int k, int w, int m) {
    if (!(0 <= w && w <= d && 0 <= k && 2 * k < w))
        throw std::domain_error("theta: (d, k, w) out of range");
    Rat den1 = qbin(2 * d - k - m + 1, m - k);
    Rat first = is_zero(den1) ? Rat(0) : qbin(d - k, m - k) * qbin(w - k, m - k) / den1;
    Rat second(0);
    if (m >= w - k) {
        Rat den2 = qbin(2 * d - w + k - m + 1, m - w + k);
        if (!is_zero(den2)) second = qbin(d - w + k, m - w + k) * qbin(k, m - w + k) / den2;
    }
    return first - second;
}

Rat vartheta(int d, int k, int w, int m) {
    if (!(d <= w && 2 * w <= 3 * d && w - d <= k && 2 * k <= d))
        throw std::domain_error("vartheta: (d, k, w) out of range");
    Rat den1 = qbin(2 * d - k - m + 1, m - k);
    Rat first = is_zero(den1) ? Rat(0) : qbin(2 * d - w - k, m - k) * qbin(d - k, m - k) / den1;
    Rat second(0);
    if (m >= d - k) {
        Rat den2 = qbin(d - m + k + 1, m - d + k);
        if (!is_zero(den2)) second = qbin(d - w + k, m - d + k) * qbin(k, m - d + k) / den2;
    }
    if ((w + d + 1) % 2 == 1) second = -second;
    return first + second;
}

SyzygyCombination gordan_lower(int d, int k, int w) {
    SyzygyCombination c;
    c.d = d;
    c.weight = w;
    for (int m = k; m <= w; ++m) {
        Rat coeff = theta(d, k, w, m);
        if (!is_zero(coeff)) c.terms.push_back({{m, w - m}, coeff});
    }
    return c;
}

SyzygyCombination gordan_upper(int d, int k, int w) {
    SyzygyCombination c;
    c.d = d;
    c.weight = w;
    for (int m = k; m <= 2 * d - w; ++m) {
        Rat coeff = vartheta(d, k, w, m);
        if (!is_zero(coeff)) c.terms.push_back({{m, w - m}, coeff});
    }
    return c;
}

bool expand_to_zero(int d, const SyzygyCombination& c) {
    if (d > 12) throw ResourceLimit("expand_to_zero: d exceeds the symbolic expansion budget");
    auto u = covariant_universe(d);
    SparsePoly acc(u);
    for (const auto& [pair, coeff] : c.terms) {
        Covariant cc = cubic_covariant(d, pair.first, pair.second);
        if (cc.is_zero()) continue;
        acc += cc.body * coeff;
    }
    return acc.is_zero();
}

int position(int d, int a, int b) {
    if (!is_admissible(d, a, b)) throw std::domain_error("position: pair not admissible");
    int w = a + b;
    int count = 0;
    for (int aa = a; aa <= d; aa += 2) {
        int bb = w - aa;
        if (bb < 0 || bb > d) continue;
        if (2 * aa + bb > 2 * d) continue;
        ++count;
    }
    return count;
}

GordanMatrix build_matrix(int d, int s, int t) {
    if (s < 1) throw std::domain_error("build_matrix: s >= 1 required");
    bool even = d % 2 == 0;
    int n = even ? d / 2 : (d - 1) / 2;
    int t_limit = even ? 4 * s - 4 : 4 * s - 2;
    if (t < 0 || t > t_limit) throw std::domain_error("build_matrix: t out of range");
    if (n - s + 1 < 1) throw std::domain_error("build_matrix: d too small for this s");
    GordanMatrix gm;
    gm.d = d;
    gm.s = s;
    gm.t = t;
    gm.w = 2 * (n - s + 1) + t;
    int case1_limit = even ? 2 * s - 2 : 2 * s - 1;
    if (t <= case1_limit) {
        gm.case_two = false;
        gm.p = t / 2 + 1;
        if (gm.w > d) throw std::domain_error("build_matrix: weight exceeds d in the low-weight case");
        for (int k = 1; k <= gm.p; ++k) {
            if (2 * k >= gm.w) throw std::domain_error("build_matrix: row index out of the theta family range");
            gm.row_k.push_back(k);
        }
    } else {
        gm.case_two = true;
        gm.p = even ? 2 * s - 1 - (t + 1) / 2 : 2 * s - (t + 1) / 2;
        if (gm.w < d + 1 || 2 * gm.w > 3 * d)
            throw std::domain_error("build_matrix: weight out of the high-weight range");
        for (int k = gm.w - d; k <= gm.w - d + gm.p - 1; ++k) {
            if (2 * k > d) throw std::domain_error("build_matrix: row index out of the vartheta family range");
            gm.row_k.push_back(k);
        }
    }
    for (int m = n - s + 1; m <= n - s + gm.p; ++m) gm.col_m.push_back(m);
    gm.entries.assign(static_cast<std::size_t>(gm.p), std::vector<Rat>(static_cast<std::size_t>(gm.p)));
    for (int i = 0; i < gm.p; ++i)
        for (int j = 0; j < gm.p; ++j) {
            int k = gm.row_k[static_cast<std::size_t>(i)];
            int m2 = 2 * gm.col_m[static_cast<std::size_t>(j)];
            gm.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                gm.case_two ? vartheta(d, k, gm.w, m2) : theta(d, k, gm.w, m2);
        }
    return gm;
}

Rat determinant(const std::vector<std::vector<Rat>>& m) {
    std::size_t n = m.size();
    if (n == 0) return Rat(1);  // empty-product convention
    std::vector<std::vector<Rat>> a = m;
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = col; i < n; ++i)
            if (!is_zero(a[i][col])) {
                pivot = i;
                break;
            }
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (is_zero(a[i][col])) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

Rat delta(int d, int s, int t, Parity parity) {
    bool even = d % 2 == 0;
    if ((parity == Parity::even) != even)
        throw std::domain_error("delta: parity does not match d");
    return determinant(build_matrix(d, s, t).entries);
}

ThresholdScan threshold_search(int s, int d_max) {
    if (s < 1) throw std::domain_error("threshold_search: s >= 1 required");
    ThresholdScan scan;
    scan.s = s;
    scan.d_max = d_max;
    std::vector<char> ok(static_cast<std::size_t>(d_max) + 1, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int d = 2; d <= d_max; ++d) {
        bool pass = true;
        int t_limit = d % 2 == 0 ? 4 * s - 4 : 4 * s - 2;
        for (int t = 0; t <= t_limit && pass; ++t) {
            try {
                if (is_zero(determinant(build_matrix(d, s, t).entries))) pass = false;
            } catch (const std::domain_error&) {
                pass = false;
            }
        }
        ok[static_cast<std::size_t>(d)] = pass ? 1 : 0;
    }
    scan.threshold = 2;
    for (int d = 2; d <= d_max; ++d)
        if (!ok[static_cast<std::size_t>(d)]) {
            scan.failing_d.push_back(d);
            scan.threshold = d + 1;
        }
    return scan;
}

}  // namespace binform
