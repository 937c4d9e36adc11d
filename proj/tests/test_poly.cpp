#include <random>

#include "binform/poly.hpp"
#include "doctest.h"

using namespace binform;

namespace {

SparsePoly random_poly(const UniversePtr& u, std::mt19937& rng, int max_terms = 5, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    SparsePoly p(u);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Mono m(static_cast<std::size_t>(u->size()), 0);
        for (int i = 0; i < u->size(); ++i) m[static_cast<std::size_t>(i)] = static_cast<uint16_t>(expd(rng));
        p.add_term(m, rat(coeff(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat_to_string(rat(-3, 6)) == "-1/2");
    CHECK(rat_to_string(rat(5)) == "5");
    CHECK(parse_rat("15876/845") == rat(15876, 845));
    CHECK(parse_rat("-11/28") == rat(-11, 28));
    CHECK(binomial(28, 8) == 3108105);
    CHECK(binomial(5, 9) == 0);
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
}

TEST_CASE("addition identities") {
    auto u = covariant_universe(2);
    auto x1 = SparsePoly::variable(u, u->index_of("x1"));
    auto x2 = SparsePoly::variable(u, u->index_of("x2"));
    auto a0 = SparsePoly::variable(u, u->index_of("a0"));

    CHECK((x1 + SparsePoly::zero(u)) == x1);
    CHECK(((x1 + x2) + (x1 - x2)) == x1 * rat(2));
    CHECK((a0 * x1 + a0 * x1) == a0 * x1 * rat(2));
}

TEST_CASE("multiplication identities") {
    auto u = covariant_universe(2);
    auto x1 = SparsePoly::variable(u, u->index_of("x1"));
    auto x2 = SparsePoly::variable(u, u->index_of("x2"));
    SparsePoly sum = x1 + x2;
    SparsePoly sq = sum * sum;
    CHECK(sq == x1 * x1 + x1 * x2 * rat(2) + x2 * x2);
    CHECK((sq * SparsePoly::constant(u, rat(1))) == sq);

    auto a0 = SparsePoly::variable(u, u->index_of("a0"));
    auto a1 = SparsePoly::variable(u, u->index_of("a1"));
    auto bd = ((a0 * x1) * (a1 * x2)).bidegree();
    REQUIRE(bd.mn.has_value());
    CHECK(*bd.mn == std::make_pair(2, 2));
}

TEST_CASE("universe mismatch is an error") {
    auto u2 = covariant_universe(2);
    auto u3 = covariant_universe(3);
    auto p = SparsePoly::variable(u2, 0);
    auto q = SparsePoly::variable(u3, 0);
    CHECK_THROWS_AS(p + q, std::invalid_argument);
    CHECK_THROWS_AS(p * q, std::invalid_argument);
}

TEST_CASE("derivatives") {
    int d = 5;
    auto u = covariant_universe(d);
    int x1 = u->index_of("x1"), x2 = u->index_of("x2");
    auto p = SparsePoly::variable(u, x1, d);
    CHECK(p.derivative(x1) == SparsePoly::variable(u, x1, d - 1) * rat(d));
    CHECK(SparsePoly::variable(u, x2, 3).derivative(x1).is_zero());
    auto xy = SparsePoly::variable(u, x1) * SparsePoly::variable(u, x2);
    CHECK(xy.derivative(x1).derivative(x2) == SparsePoly::constant(u, rat(1)));
}

TEST_CASE("substitution") {
    auto u = covariant_universe(2);
    int x1 = u->index_of("x1"), x2 = u->index_of("x2");
    auto p = SparsePoly::variable(u, x1) * SparsePoly::variable(u, x2);
    // x1 -> x2, x2 -> -x1
    std::map<int, SparsePoly> rot;
    rot.emplace(x1, SparsePoly::variable(u, x2));
    rot.emplace(x2, -SparsePoly::variable(u, x1));
    CHECK(p.substitute(rot) == -p);
    CHECK(p.substitute({}) == p);
}

TEST_CASE("bidegree") {
    auto u = covariant_universe(4);
    auto zero = SparsePoly::zero(u);
    CHECK(zero.bidegree().any);
    auto inhom = SparsePoly::variable(u, u->index_of("x1")) + SparsePoly::variable(u, u->index_of("a0"));
    CHECK_FALSE(inhom.bidegree().any);
    CHECK_FALSE(inhom.bidegree().mn.has_value());
}

TEST_CASE("ring axioms on random polynomials") {
    auto u = covariant_universe(3);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(u, rng);
        auto q = random_poly(u, rng);
        auto r = random_poly(u, rng);
        CHECK((p + q) == (q + p));
        CHECK((p * q) == (q * p));
        CHECK(((p + q) + r) == (p + (q + r)));
        CHECK(((p * q) * r) == (p * (q * r)));
        CHECK((p * (q + r)) == (p * q + p * r));
    }
}

TEST_CASE("bidegree is additive on bihomogeneous factors") {
    auto u = covariant_universe(3);
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> pick(0, u->size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = SparsePoly::variable(u, pick(rng)) * SparsePoly::variable(u, pick(rng));
        auto q = SparsePoly::variable(u, pick(rng));
        auto bp = p.bidegree(), bq = q.bidegree(), bpq = (p * q).bidegree();
        REQUIRE(bp.mn.has_value());
        REQUIRE(bq.mn.has_value());
        REQUIRE(bpq.mn.has_value());
        CHECK(bpq.mn->first == bp.mn->first + bq.mn->first);
        CHECK(bpq.mn->second == bp.mn->second + bq.mn->second);
    }
}

TEST_CASE("serialization round trip is canonical") {
    auto u = covariant_universe(3);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_poly(u, rng);
        std::string s = p.to_string();
        auto back = parse_poly(u, s);
        CHECK(back == p);
        CHECK(back.to_string() == s);
    }
    CHECK(parse_poly(u, "0").is_zero());
    CHECK(parse_poly(u, "3/2*a3^2*x1^4 - x2").to_string() == "3/2*a3^2*x1^4 - x2");
}
