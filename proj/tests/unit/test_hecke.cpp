#include <doctest.h>

#include "hecat/hecke/hecke.hpp"
#include "hecat/hecke/kl.hpp"

using namespace hecat;

namespace {
LaurentPoly Q(const char* s) { return LaurentPoly::parse(s, Var::q); }
LaurentPoly V(const char* s) { return LaurentPoly::parse(s, Var::v); }
}  // namespace

TEST_CASE("hecke multiplication examples") {
    auto H = HeckeAlgebra::create("A2");
    const auto& g = H->group();
    auto Ts = H->T(g.simple(0));
    auto Te = H->one();
    auto w = g.parse("s1 s2");
    CHECK(Te * H->T(w) == H->T(w));
    CHECK(Ts * Ts == Ts.scaled(Q("q-1")) + Te.scaled(Q("q")));
    CHECK(H->T(g.simple(0)) * H->T(g.simple(1)) == H->T(w));
    auto sq = specialize_hecke(Ts * Ts, 2);
    CHECK(sq.size() == 2);
    CHECK(sq[g.simple(0).index()] == 1);
    CHECK(sq[0] == 2);
    CHECK(specialize_hecke(Te, 5) == std::map<uint32_t, mpq_class>{{0u, 1}});
    auto C = H->kl().kl_basis(g.simple(0));
    CHECK(C == (H->one(Var::v) + H->T(g.simple(0), Var::v)).scaled(V("v")));
    CHECK_THROWS_AS(specialize_hecke(C, 3), Error);
    CHECK((Ts * Ts).str() == "q*T(e) + (q - 1)*T(s1)");
}

TEST_CASE("unit and associativity exhaustively") {
    for (const char* t : {"A2", "B2", "A1xA1", "A3"}) {
        auto H = HeckeAlgebra::create(t);
        const auto n = H->group().size();
        std::vector<HeckeElem> T;
        for (uint32_t w = 0; w < n; ++w) T.push_back(H->T(w));
        for (uint32_t x = 0; x < n; ++x) {
            CHECK(H->one() * T[x] == T[x]);
            CHECK(T[x] * H->one() == T[x]);
            for (uint32_t y = 0; y < n; ++y) {
                auto xy = T[x] * T[y];
                // full triple sweep only for the small groups; A3 samples z
                for (uint32_t z = 0; z < n; z += (n > 12 ? 5 : 1)) CHECK(xy * T[z] == T[x] * (T[y] * T[z]));
            }
        }
    }
}

TEST_CASE("bar involution") {
    auto H = HeckeAlgebra::create("A3");
    const auto& g = H->group();
    CHECK(H->one().bar() == H->one());
    auto Ts = H->T(g.simple(0));
    CHECK(Ts.bar() == Ts.scaled(Q("q^-1")) + H->one().scaled(Q("q^-1 - 1")));
    for (uint32_t w = 0; w < g.size(); ++w) {
        auto Tw = H->T(w);
        CHECK(Tw.bar().bar() == Tw);
        CHECK(Tw.bar() == H->T_inverse(g.inverse(g.elem(w))));
        CHECK(Tw * H->T_inverse(g.elem(w)) == H->one());
        auto Hv = H->T(w, Var::v);
        CHECK(Hv.bar().bar() == Hv);
    }
    for (uint32_t x = 0; x < g.size(); x += 3)
        for (uint32_t y = 0; y < g.size(); y += 2) CHECK((H->T(x) * H->T(y)).bar() == H->T(x).bar() * H->T(y).bar());
}

TEST_CASE("kazhdan-lusztig polynomials") {
    auto A2 = HeckeAlgebra::create("A2");
    const auto& g2 = A2->group();
    for (auto w : g2.elements())
        for (auto x : g2.elements())
            if (g2.bruhat_leq(x, w)) CHECK(A2->kl().kl_poly(x, w) == Q("1"));
    CHECK_THROWS_AS(A2->kl().kl_poly(g2.simple(0), g2.simple(1)), Error);

    auto A3 = HeckeAlgebra::create("A3");
    const auto& g = A3->group();
    auto w = g.parse("s2 s1 s3 s2");
    CHECK(A3->kl().kl_poly(g.simple(1), w) == Q("1+q"));
    CHECK(A3->kl().kl_poly(g.identity(), w) == Q("1+q"));
    CHECK(A3->kl().kl_poly(w, w) == Q("1"));
    auto C = A3->kl().kl_basis(w);
    CHECK(C.bar() == C);
    // singular Schubert variety in A3 besides 2132: 1 3 2 4 -> s1 s3 s2 s3 s1? check csv shape
    auto csv = A3->kl().csv_column(w.index());
    CHECK(csv.find("s2,s2 s1 s3 s2,q + 1") != std::string::npos);
}

TEST_CASE("kl basis properties in A3, B2, G2, B3") {
    for (const char* t : {"A3", "B2", "G2", "B3"}) {
        auto H = HeckeAlgebra::create(t);
        const auto& g = H->group();
        for (auto w : g.elements()) {
            auto C = H->kl().kl_basis(w);
            CHECK(C.bar() == C);
            CHECK(C.coeff(w) == LaurentPoly::monomial(Var::v, w.length()));
            for (const auto& [x, p] : H->kl().column(w.index())) {
                CHECK(g.bruhat_leq(x, w.index()));
                for (const auto& [e, c] : p.terms()) {
                    CHECK(c > 0);
                    CHECK(e >= 0);
                }
                if (x != w.index()) CHECK(2 * p.degree() <= w.length() - g.length(x) - 1);
            }
        }
    }
}
