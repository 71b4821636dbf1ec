#include <doctest.h>

#include <random>

#include "hecat/algebra/interpolate.hpp"
#include "hecat/algebra/laurent.hpp"
#include "hecat/algebra/linsolve.hpp"
#include "hecat/algebra/multipoly.hpp"

using namespace hecat;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> c(-5, 5);
    LaurentPoly p(Var::q);
    for (int e = lo; e <= hi; ++e) p.add_term(e, c(rng));
    return p;
}
}  // namespace

TEST_CASE("laurent arithmetic examples") {
    CHECK(P("q+1") * P("q-1") == P("q^2 - 1"));
    CHECK(div_exact(P("1+q") * P("1+q"), P("1+q")) == P("1+q"));
    CHECK_THROWS_AS(div_exact(P("q^2+1"), P("1+q")), Error);
    try {
        div_exact(P("q^2+1"), P("1+q"));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonDivisible);
    }
    CHECK(laurent_arith(P("q"), P("1"), LaurentOp::add) == P("1+q"));
    CHECK_THROWS_AS(P("q") + P("v"), Error);
}

TEST_CASE("parse and print") {
    CHECK(P("3*q^2 - q^-1").str() == "3*q^2 - q^-1");
    CHECK(P("-q^-1 + 3q^2").str() == "3*q^2 - q^-1");
    CHECK(P("0").str() == "0");
    CHECK(P("1 + q").str() == "q + 1");
    CHECK(LaurentPoly::parse("v^-1 - v").var() == Var::v);
    auto p = P("7*q^3 - 2 + q^-4");
    CHECK(LaurentPoly::from_json(p.to_json(), Var::q) == p);
    CHECK(p.to_json().dump() == "[[-4,1],[0,-2],[3,7]]");
}

TEST_CASE("bar involution") {
    CHECK(P("q").bar() == P("q^-1"));
    CHECK(P("1+q").bar() == P("1+q^-1"));
    CHECK(P("3*q^2-q^-1").bar().bar() == P("3*q^2-q^-1"));
}

TEST_CASE("specialize") {
    CHECK(P("1+q").specialize(2) == 3);
    CHECK(P("q-1").specialize(1) == 0);
    CHECK(P("q^-1").specialize(2) == mpq_class(1, 2));
    CHECK(P("q^-2 + q^3").specialize(-2) == mpq_class(1, 4) - 8);
    CHECK_THROWS_AS(P("q").specialize(0), Error);
}

TEST_CASE("q/v dictionary") {
    CHECK(P("q").to_v() == LaurentPoly::parse("v^-2"));
    CHECK(LaurentPoly::parse("v^2 + v^-4").to_q() == P("q^-1 + q^2"));
    CHECK_THROWS_AS(LaurentPoly::parse("v").to_q(), Error);
}

TEST_CASE("interpolation examples") {
    CHECK(interpolate({{2, 3}, {3, 4}}, 1) == P("1+q"));
    CHECK(interpolate({{2, 2}, {3, 3}, {5, 5}}, 1) == P("q"));
    CHECK(interpolate({{2, 3}, {3, 4}, {5, 6}, {7, 8}}, 2) == P("1+q"));
    CHECK_THROWS_AS(interpolate({{2, 3}, {3, 4}, {5, 7}}, 1), Error);
    // (q^2 + q)/2 is integer-valued but not an integer polynomial
    CHECK_THROWS_AS(interpolate({{2, 3}, {3, 6}, {4, 10}}, 2), Error);
    CHECK_THROWS_AS(interpolate({{2, 3}}, 1), Error);
}

TEST_CASE("laurent properties on random inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        auto a = random_poly(rng, -3, 4);
        auto b = random_poly(rng, -2, 3);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK(a.bar().bar() == a);
        if (!b.is_zero()) CHECK(div_exact(a * b, b) == a);
        auto p = random_poly(rng, 0, 5);
        std::vector<Sample> s;
        for (int x : {2, 3, 4, 5, 7, 8}) s.push_back({x, p.specialize(x).get_num()});
        CHECK(interpolate(s, 5) == p);
    }
}

TEST_CASE("multipoly basics") {
    auto x1 = MultiPoly::var(3, 0), x2 = MultiPoly::var(3, 1), x3 = MultiPoly::var(3, 2);
    auto f = x1 * x1 * x2 - x3 * mpq_class(1, 2);
    CHECK(f.str() == "x1^2*x2 - 1/2*x3");
    CHECK((x1 - x2).div_exact(x1 - x2) == MultiPoly(3, 1));
    auto g = (x1 * x1 - x2 * x2).div_exact(x1 - x2);
    CHECK(g == x1 + x2);
    CHECK_THROWS_AS((x1 * x1 + x2).div_exact(x1 - x2), Error);
    CHECK(f.swap_vars(0, 1) == x2 * x2 * x1 - x3 * mpq_class(1, 2));
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(3, 2).front() == Monomial::var(0, 2));
    CHECK(Monomial::var(0) > Monomial::var(1));
    CHECK(Monomial::var(2, 2) > Monomial::var(0));
}

TEST_CASE("row echelon") {
    RowEchelon e(3);
    CHECK(e.add_row({{0, 1}, {1, 2}}));
    CHECK(e.add_row({{0, 2}, {1, 4}, {2, 1}}));
    CHECK_FALSE(e.add_row({{0, 1}, {1, 2}, {2, 1}}));
    auto ns = e.nullspace();
    REQUIRE(ns.size() == 1);
    // x = (-2, 1, 0)
    CHECK(sparse_get(ns[0], 0) == -2);
    CHECK(sparse_get(ns[0], 1) == 1);
    CHECK(sparse_get(ns[0], 2) == 0);

    RowEchelon a(3);  // x + y = 3, x - y = 1 with rhs in column 2
    a.add_row({{0, 1}, {1, 1}, {2, 3}});
    a.add_row({{0, 1}, {1, -1}, {2, 1}});
    auto x = a.solve_augmented(2);
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    a.add_row({{0, 1}, {2, 5}});
    CHECK_FALSE(a.solve_augmented(2));
}
