#include <random>

#include "binform/covariant.hpp"
#include "doctest.h"

using namespace binform;

namespace {

Covariant power_form(int d, const Rat& t1, const Rat& t2) {
    // (t1 x1 + t2 x2)^d as raw coefficients
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Rat v = Rat(binomial(d, i));
        for (int j = 0; j < d - i; ++j) v *= t1;
        for (int j = 0; j < i; ++j) v *= t2;
        c[static_cast<std::size_t>(i)] = v;
    }
    return binary_form(d, c);
}

Covariant random_form(int d, std::mt19937& rng) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = rat(coeff(rng));
    return binary_form(d, c);
}

}  // namespace

TEST_CASE("generic form") {
    Covariant f1 = generic_form(1);
    CHECK(f1.body.to_string() == "a0*x1 + a1*x2");
    Covariant f2 = generic_form(2);
    CHECK(f2.body.to_string() == "a0*x1^2 + 2*a1*x1*x2 + a2*x2^2");
    auto bd = generic_form(4).body.bidegree();
    REQUIRE(bd.mn.has_value());
    CHECK(*bd.mn == std::make_pair(1, 4));
}

TEST_CASE("transvectant basics") {
    // (x1^p, x2^q)_r = x1^(p-r) x2^(q-r): only the i = 0 summand survives
    // and the factorial prefactor cancels it exactly (hand evaluation).
    for (auto [p, q, r] : {std::array<int, 3>{3, 3, 2}, {5, 2, 1}, {4, 6, 3}}) {
        auto u = covariant_universe(1);
        int x1 = u->index_of("x1"), x2 = u->index_of("x2");
        auto a = SparsePoly::variable(u, x1, p);
        auto b = SparsePoly::variable(u, x2, q);
        auto t = transvect_poly(a, b, p, q, r);
        CHECK(t == SparsePoly::variable(u, x1, p - r) * SparsePoly::variable(u, x2, q - r));
    }

    // r beyond min order vanishes
    Covariant f = generic_form(3);
    CHECK(transvect(f, f, 4).is_zero());
    CHECK_THROWS_AS(transvect(f, f, -1), std::domain_error);

    // (A, A)_r = 0 for odd r
    for (int d : {2, 3, 4, 5}) {
        Covariant g = generic_form(d);
        for (int r = 1; r <= d; r += 2) CHECK(transvect(g, g, r).is_zero());
    }

    // power forms have vanishing Hessian
    Covariant pf = power_form(4, rat(1), rat(1));
    CHECK(transvect(pf, pf, 2).is_zero());
}

TEST_CASE("antisymmetry and bilinearity") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        Covariant a = random_form(4, rng);
        Covariant b = random_form(4, rng);
        for (int r = 0; r <= 4; ++r) {
            Covariant ab = transvect(a, b, r);
            Covariant ba = transvect(b, a, r);
            SparsePoly flipped = r % 2 == 0 ? ba.body : -ba.body;
            CHECK(ab.body == flipped);
        }
        // bilinearity in the first slot
        Covariant c = random_form(4, rng);
        Rat s = rat(3, 2);
        Covariant lhs{4, 0, 4, a.body * s + b.body};
        CHECK(transvect(lhs, c, 2).body == (transvect(a, c, 2).body * s + transvect(b, c, 2).body));
    }
}

TEST_CASE("order arithmetic") {
    Covariant f = generic_form(6);
    Covariant h2 = transvect(f, f, 2);
    CHECK(h2.order == 2 * 6 - 4);
    CHECK(h2.degree == 2);
    Covariant t = transvect(h2, f, 3);
    CHECK_FALSE(t.is_zero());
    CHECK(t.order == h2.order + 6 - 6);
    auto bd = t.body.bidegree();
    REQUIRE(bd.mn.has_value());
    CHECK(bd.mn->second == t.order);
}

TEST_CASE("hessian covariants") {
    // order formula and the d = 4 invariant
    for (int d : {3, 4, 5, 6, 7}) {
        for (int q = 1; 2 * q <= d; ++q) {
            Covariant h = hessian_covariant(d, q);
            CHECK(h.order == 2 * d - 4 * q);
            CHECK(h.degree == 2);
        }
    }
    CHECK(hessian_covariant(4, 2).order == 0);
    CHECK_THROWS_AS(hessian_covariant(4, 3), std::domain_error);

    // d = 2: H_2 = 2(a0 a2 - a1^2), derived by expanding the formula on
    // the generic quadratic by hand.
    Covariant h = hessian_covariant(2, 1);
    auto u = h.body.universe();
    auto a0 = SparsePoly::variable(u, 0);
    auto a1 = SparsePoly::variable(u, 1);
    auto a2 = SparsePoly::variable(u, 2);
    CHECK(h.body == (a0 * a2 - a1 * a1) * rat(2));
}

TEST_CASE("classical identity d=6: 7(F,(F,F)_2)_3 = (F,(F,F)_4)_1") {
    Covariant f = generic_form(6);
    Covariant lhs = transvect(f, transvect(f, f, 2), 3);
    Covariant rhs = transvect(f, transvect(f, f, 4), 1);
    CHECK(lhs.body * rat(7) == rhs.body);
}

TEST_CASE("classical identity d=4: H_4 F = 6 (H_2, F)_2") {
    Covariant f = generic_form(4);
    Covariant h4 = hessian_covariant(4, 2);
    Covariant h2 = hessian_covariant(4, 1);
    CHECK(covariant_product(h4, f).body == transvect(h2, f, 2).body * rat(6));
}

TEST_CASE("classical identity d=7: (H_4,H_6)_2 three-term relation") {
    Covariant f = generic_form(7);
    Covariant h2 = hessian_covariant(7, 1);
    Covariant h4 = hessian_covariant(7, 2);
    Covariant h6 = hessian_covariant(7, 3);
    Covariant f2 = covariant_product(f, f);
    SparsePoly lhs = transvect(h4, h6, 2).body;
    SparsePoly rhs = transvect(h2, f2, 10).body * rat(42, 13) +
                     transvect(h2, h2, 8).body * rat(15876, 845) +
                     transvect(h2, h4, 6).body * rat(10332, 715);
    CHECK(lhs == rhs);
}

TEST_CASE("classical basis fact d=7: {(H_4,F)_2, (H_2,F)_4} independent") {
    Covariant f = generic_form(7);
    Covariant g1 = transvect(hessian_covariant(7, 2), f, 2);
    Covariant g2 = transvect(hessian_covariant(7, 1), f, 4);
    CHECK(covariant_family_rank({g1, g2}) == 2);
}

TEST_CASE("cubic covariants") {
    // {2,5} vanishes identically at d = 5
    CHECK(cubic_covariant(5, 2, 5).is_zero());
    // odd a vanishes
    CHECK(cubic_covariant(6, 3, 1).is_zero());
    // order bookkeeping at d = 13
    CHECK(cubic_covariant(13, 6, 9).order == 3 * 13 - 2 * (6 + 9));

    CHECK(is_admissible(13, 6, 9));
    CHECK(is_admissible(5, 2, 5));
    CHECK_FALSE(is_admissible(6, 3, 0));
    CHECK_FALSE(is_admissible(4, 4, 2));  // 2a + b > 2d
}

TEST_CASE("specialize") {
    int d = 5;
    Covariant f = generic_form(d);
    std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1, Rat(0));
    coeffs[0] = 1;
    coeffs[static_cast<std::size_t>(d)] = 1;
    Covariant s = specialize(f, coeffs);
    auto u = s.body.universe();
    CHECK(s.body == SparsePoly::variable(u, u->index_of("x1"), d) + SparsePoly::variable(u, u->index_of("x2"), d));

    // H_2 of (x1 + x2)^d specializes to zero
    std::vector<Rat> pw(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) pw[static_cast<std::size_t>(i)] = Rat(binomial(d, i));
    CHECK(specialize(hessian_covariant(d, 1), pw).is_zero());
    CHECK_THROWS_AS(specialize(f, std::vector<Rat>(3)), std::invalid_argument);
}

TEST_CASE("specialization commutes with transvection") {
    std::mt19937 rng(555);
    int d = 4;
    Covariant f = generic_form(d);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1);
        for (auto& v : coeffs) v = rat(coeff(rng));
        for (int r = 0; r <= 2; ++r) {
            Covariant big = transvect(f, transvect(f, f, 2), r);
            Covariant spec_then = specialize(big, coeffs);
            Covariant a = specialize(f, coeffs);
            Covariant direct = transvect(a, transvect(a, a, 2), r);
            CHECK(spec_then.body == direct.body);
        }
    }
}

TEST_CASE("coefficient_list") {
    Covariant f2 = generic_form(2);
    auto coeffs = coefficient_list(f2);
    REQUIRE(coeffs.size() == 3);
    auto u = f2.body.universe();
    CHECK(coeffs[0] == SparsePoly::variable(u, 0));
    CHECK(coeffs[1] == SparsePoly::variable(u, 1) * rat(2));
    CHECK(coeffs[2] == SparsePoly::variable(u, 2));

    Covariant h = hessian_covariant(4, 1);
    auto hc = coefficient_list(h);
    CHECK(static_cast<int>(hc.size()) == h.order + 1);
    // the span of the Hessian coefficients is a full irreducible: 2d-3 = 5
    std::vector<Covariant> rows;
    for (const auto& c : hc) rows.push_back(Covariant{4, 2, 0, c});
    CHECK(covariant_family_rank(rows) == 5);
}

TEST_CASE("sl2 action") {
    Covariant f = binary_form(3, {rat(1), rat(2), rat(-1), rat(3)});
    std::array<std::array<Rat, 2>, 2> id{{{rat(1), rat(0)}, {rat(0), rat(1)}}};
    CHECK(apply_sl2(f, id).body == f.body);

    std::array<std::array<Rat, 2>, 2> bad{{{rat(2), rat(0)}, {rat(0), rat(2)}}};
    CHECK_THROWS_AS(apply_sl2(f, bad), std::invalid_argument);

    // x1 -> x2, x2 -> -x1 sends x1^d to x2^d
    std::array<std::array<Rat, 2>, 2> w{{{rat(0), rat(1)}, {rat(-1), rat(0)}}};
    Covariant p = binary_form(3, {rat(1), rat(0), rat(0), rat(0)});
    Covariant q = apply_sl2(p, w);
    auto u = q.body.universe();
    CHECK(q.body == SparsePoly::variable(u, u->index_of("x2"), 3));
}

TEST_CASE("equivariance of transvection under unimodular substitutions") {
    std::mt19937 rng(31337);
    int d = 4;
    const std::array<std::array<long, 4>, 5> mats = {{{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 1, 1, 1}, {0, 1, -1, 0}, {3, 2, 1, 1}}};
    for (const auto& mm : mats) {
        std::array<std::array<Rat, 2>, 2> g{{{rat(mm[0]), rat(mm[1])}, {rat(mm[2]), rat(mm[3])}}};
        Covariant A = random_form(d, rng);
        Covariant B = random_form(d, rng);
        for (int r = 1; r <= 2; ++r) {
            Covariant lhs = transvect(apply_sl2(A, g), apply_sl2(B, g), r);
            Covariant rhs = apply_sl2(transvect(A, B, r), g);
            CHECK(lhs.body == rhs.body);
        }
    }
}
