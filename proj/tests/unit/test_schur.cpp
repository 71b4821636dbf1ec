#include <doctest.h>

#include "hecat/hecke/kl.hpp"
#include "hecat/schur/schur.hpp"

using namespace hecat;

namespace {
LaurentPoly Q(const char* s) { return LaurentPoly::parse(s, Var::q); }
}  // namespace

TEST_CASE("embed examples") {
    auto A2 = HeckeAlgebra::create("A2");
    const auto& g = A2->group();
    ParabolicSubset none, s1{1u}, s2{2u};
    auto w = g.parse("s1 s2");
    CHECK(embed(SchurElem::basis(A2, {none, none, w})) == A2->T(w));
    CHECK(embed(SchurElem::basis(A2, {s1, s1, g.identity()})) == A2->one() + A2->T(g.simple(0)));
    // W_{s1} e W_{s2} = {e, s1, s2, s1 s2}
    auto h = embed(SchurElem::basis(A2, {s1, s2, g.identity()}));
    CHECK(h == A2->one() + A2->T(g.simple(0)) + A2->T(g.simple(1)) + A2->T(w));
}

TEST_CASE("convolution examples") {
    auto A1 = HeckeAlgebra::create("A1");
    const auto& g1 = A1->group();
    ParabolicSubset s{1u}, none;
    auto Te = SchurElem::basis(A1, {s, s, g1.identity()});
    CHECK(convolve(Te, Te) == Te);

    auto A2 = HeckeAlgebra::create("A2");
    const auto& g = A2->group();
    for (auto x : g.elements())
        for (auto y : g.elements()) {
            auto fx = SchurElem::basis(A2, {none, none, x});
            auto fy = SchurElem::basis(A2, {none, none, y});
            CHECK(embed(convolve(fx, fy)) == A2->T(x) * A2->T(y));
        }
    CHECK_THROWS_AS(convolve(SchurElem::basis(A2, {none, s, g.identity()}),
                             SchurElem::basis(A2, {none, none, g.identity()})),
                    Error);
}

TEST_CASE("A2 algebroid: integrality, unit, intertwining, associativity") {
    auto A2 = HeckeAlgebra::create("A2");
    const auto& g = A2->group();
    SchurAlgebroid S(A2);
    std::vector<ParabolicSubset> ps{{0u}, {1u}, {2u}, {3u}};
    for (auto I : ps)
        for (auto J : ps) {
            auto unitI = SchurElem::basis(A2, {I, I, g.identity()});
            for (const auto& z : g.double_cosets(I, J)) {
                auto f = SchurElem::basis(A2, z);
                CHECK(convolve(unitI, f) == f);
                CHECK(convolve(f, SchurElem::basis(A2, {J, J, g.identity()})) == f);
            }
            for (auto K : ps) {
                const auto& t = S.table(I, J, K);
                for (const auto& [key, prod] : t.products) {
                    auto f = SchurElem::basis(A2, {I, J, g.elem(key.first)});
                    auto h = SchurElem::basis(A2, {J, K, g.elem(key.second)});
                    auto lhs = embed(prod).scaled(g.poincare(J));
                    CHECK(lhs == embed(f) * embed(h));
                    for (const auto& [z, c] : prod.terms()) CHECK(c.is_polynomial());
                }
                for (auto L : ps)
                    for (const auto& a : g.double_cosets(I, J))
                        for (const auto& b : g.double_cosets(J, K))
                            for (const auto& c : g.double_cosets(K, L)) {
                                auto fa = SchurElem::basis(A2, a), fb = SchurElem::basis(A2, b),
                                     fc = SchurElem::basis(A2, c);
                                CHECK(convolve(convolve(fa, fb), fc) == convolve(fa, convolve(fb, fc)));
                            }
            }
        }
}

TEST_CASE("duality and K0 classes") {
    auto A2 = HeckeAlgebra::create("A2");
    const auto& g = A2->group();
    ParabolicSubset none, s{1u};
    for (auto w : g.elements()) {
        auto f = SchurElem::basis(A2, {none, none, w});
        CHECK(embed(schur_dual(f)) == A2->T(w).bar());
    }
    auto Te = SchurElem::basis(A2, {s, s, g.identity()});
    CHECK(schur_dual(Te) == Te.scaled(Q("q^-1")));
    for (uint32_t I = 0; I < 4; ++I)
        for (uint32_t J = 0; J < 4; ++J)
            for (const auto& z : g.double_cosets({I}, {J})) {
                auto f = SchurElem::basis(A2, z).scaled(Q("3*q^2 - q + 5"));
                CHECK(schur_dual(schur_dual(f)) == f);
                auto kl = parabolic_kl(A2, z);
                CHECK(schur_dual(kl) == kl);
            }
    auto z = g.double_cosets(s, s)[1];
    CHECK(k0_class(A2, z, 0) == SchurElem::basis(A2, z));
    CHECK(k0_class(A2, z, 2) == SchurElem::basis(A2, z).scaled(Q("q^2")));
    CHECK(k0_class(A2, {s, s, g.identity()}, -1) == Te.scaled(Q("q^-1")));
}

TEST_CASE("A3 structure constants are integral") {
    auto A3 = HeckeAlgebra::create("A3");
    SchurAlgebroid S(A3);
    for (uint32_t I = 0; I < 8; I += 3)
        for (uint32_t J = 0; J < 8; ++J)
            for (uint32_t K = 0; K < 8; K += 2) {
                const auto& t = S.table({I}, {J}, {K});
                for (const auto& [key, prod] : t.products)
                    for (const auto& [z, c] : prod.terms()) CHECK(c.is_polynomial());
            }
}
