#include <doctest.h>

#include <random>

#include "hecat/hecke/kl.hpp"
#include "hecat/soergel/hom.hpp"

using namespace hecat;

namespace {

MultiPoly random_poly(std::mt19937& rng, int n, int max_deg) {
    MultiPoly f(n);
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, max_deg), terms(1, 4);
    for (int t = terms(rng); t > 0; --t) {
        auto monos = monomials_of_degree(n, deg(rng));
        f.add_term(monos[rng() % monos.size()], coef(rng));
    }
    return f;
}

LaurentPoly V(const char* s) { return LaurentPoly::parse(s, Var::v); }

}  // namespace

TEST_CASE("Demazure operators") {
    auto ctx = PolyRingCtx::create("A2");
    auto x1 = ctx->x(0), x2 = ctx->x(1);
    CHECK(ctx->demazure(0, x1) == ctx->one());
    CHECK(ctx->demazure(0, x2) == -ctx->one());
    CHECK(ctx->demazure(0, x1 * x2).is_zero());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly f = random_poly(rng, 3, 5), g = random_poly(rng, 3, 4);
        for (int s = 0; s < 2; ++s) {
            CHECK(ctx->demazure(s, ctx->demazure(s, f)).is_zero());
            MultiPoly lhs = ctx->demazure(s, f * g);
            MultiPoly rhs = ctx->demazure(s, f) * g + ctx->weyl_act(ctx->group().simple(s).index(), f) * ctx->demazure(s, g);
            CHECK(lhs == rhs);
            CHECK(ctx->is_invariant(ParabolicSubset{1u << s}, ctx->demazure(s, f)));
        }
        CHECK(ctx->demazure(0, ctx->demazure(1, ctx->demazure(0, f))) ==
              ctx->demazure(1, ctx->demazure(0, ctx->demazure(1, f))));
    }
    // the W-action is a left action
    const WeylGroup& W = ctx->group();
    MultiPoly f = x1 * x1 * x2 + ctx->x(2);
    for (uint32_t u = 0; u < W.size(); ++u)
        for (uint32_t w = 0; w < W.size(); ++w)
            CHECK(ctx->weyl_act(W.mul(W.elem(u), W.elem(w)).index(), f) == ctx->weyl_act(u, ctx->weyl_act(w, f)));
}

TEST_CASE("invariant rings and coinvariants") {
    auto ctx = PolyRingCtx::create("A1");
    const auto& g = ctx->invariant_gens(ParabolicSubset{1});
    REQUIRE(g.size() == 2);
    CHECK(g[0] == ctx->x(0) + ctx->x(1));
    CHECK(g[1] == ctx->x(0) * ctx->x(1));
    CHECK(ctx->relative_basis(ParabolicSubset{}, ParabolicSubset{1}) == std::vector<MultiPoly>{ctx->one(), ctx->x(0)});

    CHECK(coinvariant_poincare(CartanType::parse("A1")) == V("1 + v^2"));
    CHECK(coinvariant_poincare(CartanType::parse("A2")) == V("1 + 2*v^2 + 2*v^4 + v^6"));
    CHECK(coinvariant_poincare(CartanType::parse("A3")) ==
          V("1 + 3*v^2 + 5*v^4 + 6*v^6 + 5*v^8 + 3*v^10 + v^12"));
    CHECK_THROWS_AS(PolyRingCtx::create("B2"), Error);

    auto c3 = PolyRingCtx::create("A3");
    MultiPoly f = c3->x(0) * c3->x(1) + c3->x(2) * c3->x(3);
    ParabolicSubset I{0b101};
    REQUIRE(c3->is_invariant(I, f));
    MultiPoly back = c3->zero();
    for (const auto& [e, c] : c3->express(I, f)) back += c3->eval_gen_monomial(I, e) * c;
    CHECK(back == f);
    CHECK_THROWS_AS(c3->express(I, c3->x(0)), Error);
}

TEST_CASE("Bott-Samelson bimodules") {
    auto ctx = PolyRingCtx::create("A2");
    auto R = bs_bimodule(ctx, {});
    CHECK(R->rank() == 1);
    CHECK(R->degrees == std::vector<int>{0});
    auto Bs = bs_bimodule(ctx, {0});
    CHECK(Bs->graded_rank() == V("v^-1 + v"));
    CHECK(Bs->degrees == std::vector<int>{-1, 1});
    auto B121 = bs_bimodule(ctx, {0, 1, 0});
    CHECK(B121->graded_rank() == V("v^-1 + v") * V("v^-1 + v") * V("v^-1 + v"));

    auto alg = HeckeAlgebra::create(ctx->group_ptr());
    std::vector<std::vector<int>> words{{}};
    for (int len = 1; len <= 3; ++len) {
        std::vector<std::vector<int>> next;
        for (auto& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (int s = 0; s < 2; ++s) {
                    auto w2 = w;
                    w2.push_back(s);
                    next.push_back(w2);
                }
        words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& w : words) {
        auto B = bs_bimodule(ctx, w);
        CHECK_NOTHROW(B->validate());
        LaurentPoly expect(Var::v, 1);
        for (size_t i = 0; i < w.size(); ++i) expect *= V("v^-1 + v");
        CHECK(B->graded_rank() == expect);
        CHECK(character_rank(hecke_character(alg, w)) == B->graded_rank());
    }
    CHECK_THROWS_AS(bs_bimodule(ctx, {2}), Error);
}

TEST_CASE("singular bimodules") {
    auto ctx = PolyRingCtx::create("A1");
    ParabolicSubset E{}, S{1};
    auto M0 = singular_bimodule(ctx, {E, E, E});
    CHECK(M0->rank() == 1);
    auto M1 = singular_bimodule(ctx, {E, E, S});
    CHECK(M1->rank() == 1);
    CHECK(M1->right == S);
    auto M2 = singular_bimodule(ctx, {S, E, S});
    CHECK(M2->graded_rank() == V("1 + v^2"));
    CHECK_NOTHROW(M2->validate());
    CHECK_THROWS_AS(singular_bimodule(ctx, {E, S, E}), Error);
    CHECK_THROWS_AS(singular_bimodule(ctx, {E, E}), Error);

    auto c2 = PolyRingCtx::create("A2");
    ParabolicSubset s1{1}, s2{2}, all{3};
    // R^{s1} (x)_{R^W} R^{s2} over (R^W, R^W): rank pi_W/pi_{s1} * pi_W/pi_{s2}
    auto M = singular_bimodule(c2, {all, s1, all, s2, all});
    CHECK_NOTHROW(M->validate());
    CHECK(M->graded_rank() == V("1 + v^2 + v^4") * V("1 + v^2 + v^4"));
    auto N = singular_bimodule(c2, {s1, E, s2});
    CHECK(N->graded_rank() == V("1 + v^2"));
    CHECK_NOTHROW(N->validate());
}

TEST_CASE("Hom spaces") {
    auto ctx = PolyRingCtx::create("A1");
    auto R = bs_bimodule(ctx, {});
    auto Bs = bs_bimodule(ctx, {0});
    CHECK(hom_space(R, R, 0, 0).dimension == 1);
    CHECK(hom_space(Bs, Bs, 0, 2).dimension == 1);
    auto h = hom_space(R, Bs, 1, 2);
    CHECK(h.dimension == 1);
    CHECK(hom_space(Bs, R, 1, 2).dimension == 1);
    CHECK(hom_space(Bs, Bs, 2, 4).dimension == 3);  // graded rank of End(B_s) is free over R
    try {
        hom_space(R, Bs, 1, 0);
        FAIL("expected CutoffTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CutoffTooSmall);
    }
    auto c2 = PolyRingCtx::create("A2");
    auto B1 = bs_bimodule(c2, {0}), B2 = bs_bimodule(c2, {1});
    CHECK(hom_space(B1, B2, 0, 2).dimension == 0);
    auto B11 = bs_bimodule(c2, {0, 0});
    CHECK(hom_space(B11, B1, 1, hom_required_cutoff(*B11, *B1, 1)).dimension == 5);  // Hom^0 + Hom^2 of End(B_s)
}

TEST_CASE("Hecke characters") {
    auto alg = HeckeAlgebra::create("A2");
    const auto& W = alg->group();
    CHECK(hecke_character(alg, {}) == alg->H(0));
    CHECK(hecke_character(alg, {0}) == alg->kl().kl_basis(W.simple(0)));
    CHECK(hecke_character(alg, {0, 1}) == alg->kl().kl_basis(W.simple(0)) * alg->kl().kl_basis(W.simple(1)));
    CHECK(hecke_character(alg, {0, 1, 0}) ==
          alg->kl().kl_basis(W.longest()) + alg->kl().kl_basis(W.simple(0)));
}

TEST_CASE("bimodule JSON") {
    auto ctx = PolyRingCtx::create("A1");
    auto Bs = bs_bimodule(ctx, {0});
    auto j = Bs->to_json();
    CHECK(j["degrees"] == nlohmann::json::array({-1, 1}));
    CHECK(j["action"].size() == 2);
    CHECK(j["right_generators"].size() == 2);
    CHECK(j.dump() == bs_bimodule(ctx, {0})->to_json().dump());
}
