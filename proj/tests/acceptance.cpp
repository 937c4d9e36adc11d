// Acceptance suite: every release criterion in one binary, one line per
// criterion, exact arithmetic throughout (zero tolerance). Exits nonzero
// if anything fails.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "binform/covariant.hpp"
#include "binform/gordan.hpp"
#include "binform/repdim.hpp"
#include "binform/satur.hpp"
#include "binform/splitting.hpp"

using namespace binform;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, bool ok, double seconds) {
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// independent enumeration oracle for the multiplicity count
long eta_oracle(int d, int m, int n) {
    long md = static_cast<long>(m) * d;
    if ((md - n) % 2 != 0 || md - n < 0 || n < 0) return 0;
    long k = (md - n) / 2;
    std::vector<long> counts(static_cast<std::size_t>(md) + 1, 0);
    std::vector<int> pick(static_cast<std::size_t>(m), 0);
    while (true) {
        long w = 0;
        for (int v : pick) w += v;
        ++counts[static_cast<std::size_t>(w)];
        int pos = m - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == d) --pos;
        if (pos < 0) break;
        int next = pick[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < m; ++i) pick[static_cast<std::size_t>(i)] = next;
    }
    return counts[static_cast<std::size_t>(k)] - (k >= 1 ? counts[static_cast<std::size_t>(k - 1)] : 0);
}

}  // namespace

int main(int argc, char** argv) {
    bool stretch = argc > 1 && std::string(argv[1]) == "--stretch";
    SaturationOptions opts;
    opts.rank.prime_seed = 1;

    // Criterion 1: the saturation table rows for d = 4..12, exactly.
    // With --stretch the optional d = 13, 14 rows join at the same
    // exactness (a few extra minutes).
    std::map<int, SaturationRecord> rows;
    {
        auto t0 = std::chrono::steady_clock::now();
        std::map<int, std::vector<int>> expected = {
            {4, {3}},          {5, {3}},          {6, {5, 3}},          {7, {4, 3}},
            {8, {5, 3, 3}},    {9, {5, 3, 3}},    {10, {5, 3, 3, 3}},   {11, {5, 3, 3, 3}},
            {12, {7, 5, 3, 3, 3}},
        };
        if (stretch) {
            expected[13] = {5, 4, 3, 3, 3};
            expected[14] = {7, 5, 3, 3, 3, 3};
        }
        bool ok = true;
        for (const auto& [d, expect] : expected) {
            rows[d] = saturation_sequence(d, opts);
            if (rows[d].alphas != expect) {
                ok = false;
                std::cout << "  row d=" << d << " mismatch\n";
            }
        }
        criterion(1, stretch ? "saturation table d = 4..14 matches exactly"
                             : "saturation table d = 4..12 matches exactly",
                  ok, elapsed(t0));
    }

    // Criterion 2: zeta(d) <= S(d) <= d+2 for every computed row, and the
    // counting inequality is false below zeta for d <= 60.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& [d, rec] : rows)
            ok = ok && rec.bounds_ok && cmp_int_vs_zeta(rec.big_s, d) >= 0 && rec.big_s <= d + 2;
        for (int d = 4; d <= 60 && ok; ++d)
            for (int m = 2; cmp_int_vs_zeta(m, d) < 0 && ok; ++m) ok = !check_counting_inequality(d, m);
        criterion(2, "bounds zeta <= S <= d+2 and the counting inequality below zeta", ok, elapsed(t0));
    }

    // Criterion 3: the transvectant identity suite.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int d : {3, 4, 5}) {
            Covariant f = generic_form(d);
            for (int r = 1; r <= d; r += 2) ok = ok && transvect(f, f, r).is_zero();
        }
        {
            Covariant a = binary_form(5, {rat(1), rat(-2), rat(3), rat(0), rat(1), rat(2)});
            Covariant b = binary_form(5, {rat(2), rat(1), rat(-1), rat(1), rat(0), rat(-3)});
            for (int r = 0; r <= 5; ++r) {
                SparsePoly flip = r % 2 == 0 ? transvect(b, a, r).body : -transvect(b, a, r).body;
                ok = ok && transvect(a, b, r).body == flip;
                if (!transvect(a, b, r).is_zero())
                    ok = ok && transvect(a, b, r).order == a.order + b.order - 2 * r;
            }
        }
        {
            Covariant f = generic_form(6);
            ok = ok && transvect(f, transvect(f, f, 2), 3).body * rat(7) == transvect(f, transvect(f, f, 4), 1).body;
        }
        {
            Covariant f = generic_form(4);
            ok = ok && covariant_product(hessian_covariant(4, 2), f).body ==
                           transvect(hessian_covariant(4, 1), f, 2).body * rat(6);
        }
        {
            Covariant f = generic_form(7);
            Covariant h2 = hessian_covariant(7, 1), h4 = hessian_covariant(7, 2), h6 = hessian_covariant(7, 3);
            SparsePoly rhs = transvect(h2, covariant_product(f, f), 10).body * rat(42, 13) +
                             transvect(h2, h2, 8).body * rat(15876, 845) +
                             transvect(h2, h4, 6).body * rat(10332, 715);
            ok = ok && transvect(h4, h6, 2).body == rhs;
        }
        ok = ok && cubic_covariant(5, 2, 5).is_zero();
        criterion(3, "transvectant identities (odd vanishing, antisymmetry, d=6, d=4, d=7, {2,5})", ok,
                  elapsed(t0));
    }

    // Criterion 4: the syzygy suite.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int d = 4; d <= 10 && ok; ++d) {
            for (int w = 0; w <= d && ok; ++w)
                for (int k = 0; 2 * k < w && ok; ++k) ok = expand_to_zero(d, gordan_lower(d, k, w));
            for (int w = d; 2 * w <= 3 * d && ok; ++w)
                for (int k = w - d; 2 * k <= d && ok; ++k) ok = expand_to_zero(d, gordan_upper(d, k, w));
        }
        ok = ok && theta(7, 1, 6, 2) == rat(5, 2) && theta(7, 1, 6, 4) == rat(5, 3) &&
             theta(7, 1, 6, 6) == rat(-11, 28);
        ok = ok && vartheta(11, 4, 13, 4) == rat(1) && vartheta(11, 4, 13, 6) == rat(35, 13) &&
             vartheta(11, 4, 13, 8) == rat(-31, 66);
        for (int d = 4; d <= 40 && ok; d += 2) ok = theta(d, 1, d, d) == rat(1, d) - rat(1, 2);
        for (int d : {8, 10, 12, 20}) {
            Rat num = rat(3780) * rat(d - 4) * rat(d - 5) * rat(d - 6) * rat(d + 7) *
                      rat(static_cast<long>(d) * d + 3 * d + 10);
            Rat den = rat(d - 1) * rat(d - 1) * rat(d - 2) * rat(d + 2) * rat(d + 1) * rat(d + 1) * rat(d) *
                      rat(d) * rat(d + 3);
            ok = ok && delta(d, 3, 6, Parity::even) == num / den;
        }
        const std::map<int, int> thresholds = {{1, 4}, {2, 8}, {3, 10}, {4, 14}, {5, 18}};
        for (const auto& [s, n] : thresholds) ok = ok && threshold_search(s, 40).threshold == n;
        criterion(4, "syzygy families expand to zero (d <= 10), worked coefficients, delta closed form, thresholds",
                  ok, elapsed(t0));
    }

    // Criterion 5: representation dimensions.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = decomposition_to_string(decompose_sym(6, 3)) == "S_18 + S_14 + S_12 + S_10 + S_8 + 2*S_6 + S_2";
        for (int d = 1; d <= 8 && ok; ++d)
            for (int m = 0; m <= 4 && ok; ++m)
                for (int n = 0; n <= m * d && ok; ++n) ok = eta(d, m, n) == eta_oracle(d, m, n);
        ok = ok && h_invariant_dim(75) == 13;
        for (int d = 1; d <= 200 && ok; ++d) ok = h_invariant_dim(d) == h_invariant_dim_bruteforce(d);
        criterion(5, "isotypic decompositions, eta against the enumeration oracle, h(d)", ok, elapsed(t0));
    }

    // Criterion 6: splitting types.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        {
            auto data = affine_hessian(4);
            auto u = data.universe;
            ok = ok && data.u.at(2) == parse_poly(u, "2*l2 - 2*l1^2");
            ok = ok && data.u.at(3) == parse_poly(u, "l3 - l1*l2");
            ok = ok && data.u.at(4) == parse_poly(u, "1/3*l4 + 2/3*l1*l3 - l2^2");
            ok = ok && data.v.at(5) == parse_poly(u, "3*l1") * data.u.at(4) - parse_poly(u, "3*l2") * data.u.at(3) +
                                           parse_poly(u, "l3") * data.u.at(2);
            ok = ok && data.v.at(6) == parse_poly(u, "6*l2") * data.u.at(4) -
                                           parse_poly(u, "2*l3 + 6*l1*l2") * data.u.at(3) +
                                           parse_poly(u, "3*l2^2") * data.u.at(2);
            auto xis = xi_generators(4, Chart::lower);
            ok = ok && xis[0].coords[0] == LaurentPoly::monomial(rat(-1), 3) &&
                 xis[0].coords[1] == LaurentPoly::monomial(rat(3), 2) &&
                 xis[0].coords[2] == LaurentPoly::monomial(rat(-3), 1);
            ok = ok && xis[1].coords[0] == LaurentPoly::monomial(rat(-3), 4) &&
                 xis[1].coords[1] == LaurentPoly::monomial(rat(8), 3) &&
                 xis[1].coords[2] == LaurentPoly::monomial(rat(-6), 2);
            auto res = splitting_type(4);
            ok = ok && res.q.at(0, 0) == LaurentPoly::monomial(rat(-1), 0) &&
                 res.q.at(0, 1) == LaurentPoly::monomial(rat(3), -1) &&
                 res.q.at(1, 0) == LaurentPoly::monomial(rat(-3), 1) &&
                 res.q.at(1, 1) == LaurentPoly::monomial(rat(8), 0);
            ok = ok && res.factorization.D == LaurentMatrix::identity(2);
            ok = ok && res.factorization.E * res.q == res.factorization.D * res.factorization.F;
            {
                // the worked E, D, F: D exactly, E and F up to the joint
                // constant gauge W of the factorization
                LaurentMatrix e_ref(2), f_ref(2);
                e_ref.at(0, 0) = LaurentPoly::monomial(rat(3), 1);
                e_ref.at(0, 1) = LaurentPoly::monomial(rat(-1), 0);
                e_ref.at(1, 0) = LaurentPoly::monomial(rat(-1), 0);
                f_ref.at(0, 1) = LaurentPoly::monomial(rat(1), 0);
                f_ref.at(1, 0) = LaurentPoly::monomial(rat(1), 0);
                f_ref.at(1, 1) = LaurentPoly::monomial(rat(-3), -1);
                LaurentMatrix w = e_ref * laurent_inverse(res.factorization.E);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        if (!w.at(i, j).is_zero()) ok = ok && w.at(i, j).min_exp() == 0 && w.at(i, j).max_exp() == 0;
                ok = ok && w * res.factorization.F == f_ref;
            }
            ok = ok && res.twists == std::vector<int>{-11, -11};
        }
        for (int d = 3; d <= 8 && ok; ++d) {
            auto res = splitting_type(d);
            ok = ok && static_cast<int>(res.twists.size()) == d - 2;
            for (int t : res.twists) ok = ok && t >= -4 * d + 4 && t <= -2 * d - 2;
            auto res2 = splitting_type(d, CofactorRule::highest_index);
            ok = ok && res.twists == res2.twists;
            auto xa = xi_generators(d, Chart::lower, CofactorRule::lowest_index);
            auto xb = xi_generators(d, Chart::lower, CofactorRule::highest_index);
            for (std::size_t i = 0; i < xa.size(); ++i) ok = ok && xa[i].coords == xb[i].coords;
        }
        criterion(6, "splitting types: d=4 worked data, ranks and twist ranges d = 3..8, rule independence", ok,
                  elapsed(t0));
    }

    // Criterion 7: rank-backend equivalence and the Hilbert cross-check.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int d = 4; d <= 8 && ok; ++d) {
            GradedEngine eng(d);
            int e = d / 2;
            for (int m = 2; m <= d + 2 && ok; ++m) {
                if (dim_graded_ring(d, m) > 2000) continue;
                auto modular = eng.dims(m, e, opts.rank);
                auto exact = eng.dims_bareiss(m, e, opts.rank);
                ok = ok && modular == exact;
                ok = ok && modular[static_cast<std::size_t>(e - 1)] == ic_dim(d, m);
            }
        }
        criterion(7, "modular vs fraction-free ranks and the Hilbert cross-check for d <= 8", ok, elapsed(t0));
    }

    // Criterion 8: the tails of threes at the proven thresholds.
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        const std::map<int, int> ns = {{1, 4}, {2, 8}, {3, 10}};
        for (const auto& [s, n] : ns)
            for (int d = n; d <= 12; ++d) {
                const auto& a = rows.at(d).alphas;
                if (static_cast<int>(a.size()) < s) {
                    ok = false;
                    continue;
                }
                for (int i = 0; i < s; ++i) ok = ok && a[a.size() - 1 - static_cast<std::size_t>(i)] == 3;
            }
        criterion(8, "the last s entries equal 3 for s <= 3 whenever d is at or past its threshold", ok,
                  elapsed(t0));
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
    return failures == 0 ? 0 : 1;
}
