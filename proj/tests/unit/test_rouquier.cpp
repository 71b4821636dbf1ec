#include <doctest.h>

#include "hecat/hecke/kl.hpp"
#include "hecat/rouquier/complex.hpp"

using namespace hecat;

namespace {

HeckeElem Hs(const HeckeAlgebra& alg, int s) { return alg.H(alg.group().simple(s).index()); }

std::vector<std::pair<int, int>> W(const char* text, int rank) { return parse_braid_word(text, rank); }

}  // namespace

TEST_CASE("Rouquier complexes of the generators") {
    auto cat = SoergelCategory::create("A2");
    const auto& alg = *cat->hecke();
    const uint32_t s1 = cat->group().simple(0).index();
    auto F = rouquier_complex(cat, 0, 1);
    CHECK(F.lo == 0);
    CHECK(F.hi() == 1);
    CHECK(F.at(0) == std::vector<Summand>{{s1, 0}});
    CHECK(F.at(1) == std::vector<Summand>{{0, 1}});
    CHECK(F.check_d_squared());
    // the multiplication map sends 1 (x) 1 to 1
    CHECK(F.diff[0].get(0, 0)->at(0, 0) == cat->ring().one());

    auto G = rouquier_complex(cat, 0, -1);
    CHECK(G.lo == -1);
    CHECK(G.at(-1) == std::vector<Summand>{{0, -1}});
    CHECK(G.at(0) == std::vector<Summand>{{s1, 0}});
    BimoduleMorphism d{cat->ambient({0, -1}), cat->ambient({s1, 0}), *G.diff[0].get(0, 0), 0};
    CHECK(d.is_valid());

    CHECK(k0_class(F) == Hs(alg, 0));
    CHECK(k0_class(F) * k0_class(G) == alg.one(Var::v));
    CHECK(k0_class(G) * k0_class(F) == alg.one(Var::v));
    CHECK(k0_class(unit_complex(cat)) == alg.H(0));
    CHECK_THROWS_AS(rouquier_complex(cat, 2, 1), Error);
}

TEST_CASE("Bott-Samelson tensor products are compatible") {
    auto cat = SoergelCategory::create("A2");
    for (const auto& [u, v] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{0}, {1}}, {{0, 1}, {0}}, {{1}, {1, 0}}, {{0}, {0}}}) {
        auto T = tensor(*cat->bs(u), *cat->bs(v));
        auto u2 = u;
        u2.insert(u2.end(), v.begin(), v.end());
        auto B = cat->bs(u2);
        CHECK(T->degrees == B->degrees);
        CHECK(T->action == B->action);
    }
}

TEST_CASE("indecomposables") {
    auto cat = SoergelCategory::create("A2");
    const auto& G = cat->group();
    for (uint32_t w = 0; w < G.size(); ++w) {
        const PolyMatrix& e = cat->idempotent(w);
        CHECK(e * e == e);
        CHECK(cat->hom0({w, 0}, {w, 0}).size() == 1);
        CHECK(cat->hom0({w, 0}, {w, 2}).empty() == false);
        CHECK(cat->hom0({w, 2}, {w, 0}).empty());
    }
    // B_{s1} B_{s2} B_{s1} = B_{w0} + B_{s1}, so e_{w0} is a proper idempotent
    const uint32_t w0 = G.longest().index();
    CHECK(cat->idempotent(w0) != PolyMatrix::identity(8, 3));
    const auto& sp = cat->split_product(G.simple(0).index(), G.simple(0).index());
    CHECK(sp.parts == std::vector<Summand>{{G.simple(0).index(), -1}, {G.simple(0).index(), 1}});

    HeckeElem h = cat->hecke()->kl().kl_basis(G.simple(0)) * cat->hecke()->kl().kl_basis(G.simple(0));
    auto ex = kl_expand(h);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].second == LaurentPoly::parse("v + v^-1", Var::v));
}

TEST_CASE("tensor products of complexes") {
    auto cat = SoergelCategory::create("A2");
    const auto& alg = *cat->hecke();
    auto R = unit_complex(cat);
    auto F = rouquier_complex(cat, 0, 1);
    auto FR = tensor_complexes(F, R);
    CHECK(FR.terms == F.terms);
    CHECK(FR.diff == F.diff);
    auto RF = tensor_complexes(R, F);
    CHECK(RF.terms == F.terms);

    auto FF = tensor_complexes(F, F);
    CHECK(FF.check_d_squared());
    const uint32_t s1 = cat->group().simple(0).index();
    CHECK(FF.at(0) == std::vector<Summand>{{s1, -1}, {s1, 1}});
    CHECK(FF.at(1).size() == 2);
    CHECK(FF.at(2) == std::vector<Summand>{{0, 2}});

    std::vector<BimoduleComplex> gens;
    for (int s = 0; s < 2; ++s)
        for (int e : {1, -1}) gens.push_back(rouquier_complex(cat, s, e));
    for (const auto& A : gens)
        for (const auto& B : gens) {
            auto T = tensor_complexes(A, B);
            CHECK(T.check_d_squared());
            CHECK(k0_class(T) == k0_class(A) * k0_class(B));
            auto [M, cert] = gaussian_eliminate(T);
            CHECK(k0_class(M) == k0_class(T));
            CHECK(cert.verify());
        }
    CHECK(k0_class(braid_complex(cat, W("s1 s2 s1", 2))) == k0_class(braid_complex(cat, W("s2 s1 s2", 2))));
    CHECK(k0_class(braid_complex(cat, W("s1 s2", 2))) == Hs(alg, 0) * Hs(alg, 1));
}

TEST_CASE("Gaussian elimination") {
    auto cat = SoergelCategory::create("A2");
    auto F = rouquier_complex(cat, 0, 1);
    auto [M0, c0] = gaussian_eliminate(F);
    CHECK(M0.terms == F.terms);
    CHECK(M0.diff == F.diff);
    CHECK(c0.verify());
    CHECK(c0.hC.comp.empty());

    BimoduleComplex cone;
    cone.cat = cat;
    cone.terms = {{Summand{0, 0}}, {Summand{0, 0}}};
    Grid id(cone.ranks(0), cone.ranks(1), cat->nvars());
    id.add(0, 0, cat->idempotent(0));
    cone.diff = {id};
    auto [Z, cz] = gaussian_eliminate(cone);
    CHECK(Z.is_zero());
    CHECK(cz.verify());

    for (int s = 0; s < 2; ++s) {
        for (int e : {1, -1}) {
            auto T = tensor_complexes(rouquier_complex(cat, s, e), rouquier_complex(cat, s, -e));
            auto [M, cert] = gaussian_eliminate(T);
            CHECK(M.str() == "[0: R]");
            CHECK(M.terms == unit_complex(cat).terms);
            std::string why;
            CHECK(cert.verify(&why));
            CHECK(why.empty());
            auto [M2, cert2] = gaussian_eliminate(M);
            CHECK(M2.terms == M.terms);
            CHECK(M2.diff == M.diff);
        }
    }

    auto T = braid_complex(cat, W("s1 s2 s1", 2));
    auto [M, cert] = gaussian_eliminate(T);
    CHECK(is_minimal(M));
    CHECK(!is_minimal(T));
    CHECK(M.summand_count() == 6);
    CHECK(cert.verify());
    auto [M2, cert2] = gaussian_eliminate(M);
    CHECK(M2.terms == M.terms);
    CHECK(M2.diff == M.diff);

    // a corrupted certificate is rejected
    HomotopyCertificate bad = cert;
    bad.hC.comp.clear();
    std::string why;
    CHECK(!bad.verify(&why));
    CHECK(!why.empty());
}

TEST_CASE("braid relations") {
    auto cat = SoergelCategory::create("A2");
    auto r = braid_certify(cat, W("s1 s2 s1", 2), W("s2 s1 s2", 2));
    CHECK(r.equivalent);
    REQUIRE(r.certificate);
    CHECK(r.certificate->verify());
    CHECK(r.lhs_min.str() == "[0: B(s1 s2 s1)] -> [1: B(s1 s2)<1> + B(s2 s1)<1>] -> [2: B(s2)<2> + B(s1)<2>] -> [3: R<3>]");

    CHECK(braid_certify(cat, W("s1^-1 s2^-1 s1^-1", 2), W("s2^-1 s1^-1 s2^-1", 2)).equivalent);
    CHECK(braid_certify(cat, W("s1 s2 s1^-1", 2), W("s2^-1 s1 s2", 2)).equivalent);
    CHECK(braid_certify(cat, W("s1 s1^-1", 2), W("e", 2)).equivalent);

    auto no = braid_certify(cat, W("s1", 2), W("s2", 2));
    CHECK(!no.equivalent);
    CHECK(!no.certificate);
    CHECK(no.lhs_min.at(0) != no.rhs_min.at(0));
    CHECK(!braid_certify(cat, W("s1 s1", 2), W("e", 2)).equivalent);

    auto c3 = SoergelCategory::create("A3");
    CHECK(braid_certify(c3, W("s1 s3", 3), W("s3 s1", 3)).equivalent);
    CHECK(braid_certify(c3, W("s1^-1 s3", 3), W("s3 s1^-1", 3)).equivalent);
    CHECK(braid_certify(c3, W("s2 s3 s2", 3), W("s3 s2 s3", 3)).equivalent);
}

TEST_CASE("braid words") {
    CHECK(W("s1 s2^-1 s1", 2) == std::vector<std::pair<int, int>>{{0, 1}, {1, -1}, {0, 1}});
    CHECK(W("e", 2).empty());
    CHECK(W("", 2).empty());
    CHECK(braid_word_str(W("s1 s2^-1", 2)) == "s1 s2^-1");
    CHECK_THROWS_AS(W("s3", 2), Error);
    CHECK_THROWS_AS(W("s1^2", 2), Error);
    CHECK_THROWS_AS(W("x", 2), Error);
}

TEST_CASE("complex JSON") {
    auto cat = SoergelCategory::create("A1");
    auto F = rouquier_complex(cat, 0, 1);
    auto j = F.to_json();
    CHECK(j["lo"] == 0);
    CHECK(j["terms"][0][0] == "B(s1)");
    CHECK(j["terms"][1][0] == "R<1>");
    CHECK(j["differentials"].size() == 1);
}
