#include <doctest.h>

#include "hecat/gflq/cells.hpp"
#include "hecat/gflq/group.hpp"
#include "hecat/gflq/symmetric.hpp"
#include "hecat/schur/schur.hpp"

using namespace hecat;

TEST_CASE("finite fields satisfy the axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
        auto F = FiniteField::make(q);
        for (int a = 0; a < q; ++a) {
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (int c = 0; c < q; ++c)
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            }
        }
        // the generator has multiplicative order q - 1
        int order = 1;
        for (uint8_t x = F->generator(); x != 1; x = F->mul(x, F->generator())) ++order;
        CHECK(order == q - 1);
    }
    CHECK_THROWS_AS(FiniteField::make(6), Error);
}

TEST_CASE("group orders") {
    CHECK(GroupTable::build(Series::GL, 2, 2)->order() == 6);
    CHECK(GroupTable::build(Series::GL, 3, 2)->order() == 168);
    CHECK(GroupTable::build(Series::SL, 2, 5)->order() == 120);
    for (int q : {3, 4, 7, 8, 9}) {
        CHECK(GroupTable::build(Series::GL, 2, q)->order() == GroupTable::order_formula(Series::GL, 2, q));
        CHECK(GroupTable::build(Series::SL, 2, q)->order() == GroupTable::order_formula(Series::SL, 2, q));
    }
    CHECK(GroupTable::order_formula(Series::GL, 3, 3) == 11232);
    try {
        GroupTable::build(Series::GL, 4, 5);
        FAIL("expected SizeLimitExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SizeLimitExceeded);
    }
}

TEST_CASE("Bruhat decomposition") {
    auto G = GroupTable::build(Series::GL, 2, 2);
    const Partition& p = G->partition(G->borel(), G->borel());
    REQUIRE(p.count() == 2);
    CHECK(p.sizes == std::vector<uint64_t>{2, 4});

    for (int q : {2, 3}) {
        auto G3 = GroupTable::build(Series::GL, 3, q);
        auto W = WeylGroup::build("A2");
        const int B = G3->borel();
        CHECK(G3->subgroup(B).order == G3->generated_order(B));
        const Partition& pb = G3->partition(B, B);
        CHECK(pb.count() == 6);
        auto labels = G3->weyl_labels(B, B, *W);
        for (uint32_t w = 0; w < W->size(); ++w) {
            uint64_t expect = G3->subgroup(B).order;
            for (int i = 0; i < W->length(w); ++i) expect *= q;
            CHECK(pb.sizes[labels[w]] == expect);
        }
        auto P1 = G3->parabolic(ParabolicSubset{1});
        CHECK(G3->subgroup(P1).order == G3->generated_order(P1));
        CHECK(G3->partition(P1, P1).count() == W->double_cosets(ParabolicSubset{1}, ParabolicSubset{1}).size());
    }
    auto S = GroupTable::build(Series::SL, 3, 2);
    CHECK(S->partition(S->borel(), S->borel()).count() == 6);
}

TEST_CASE("convolution of invariant functions") {
    {
        auto G = GroupTable::build(Series::GL, 2, 2);
        const int B = G->borel();
        auto one = InvFunction::indicator(G, B, B, 0);
        CHECK(convolve_inv(one, one).values == std::vector<long long>{1, 0});
        CHECK(convolve_inv(one, one, ConvolveRoute::full_sum).values == std::vector<long long>{1, 0});
    }
    for (int q : {2, 3}) {
        auto G = GroupTable::build(Series::GL, 2, q);
        const int B = G->borel();
        auto e = InvFunction::indicator(G, B, B, 0);
        auto s = InvFunction::indicator(G, B, B, 1);
        auto ss = convolve_inv(s, s);
        CHECK(ss.values == std::vector<long long>{q, q - 1});
        CHECK(convolve_inv(s, s, ConvolveRoute::full_sum).values == ss.values);
        for (const auto& f : {e, s, ss}) {
            CHECK(convolve_inv(e, f).values == f.values);
            CHECK(convolve_inv(f, e).values == f.values);
        }
        std::vector<InvFunction> basis{e, s};
        for (auto& a : basis)
            for (auto& b : basis)
                for (auto& c : basis)
                    CHECK(convolve_inv(convolve_inv(a, b), c).values == convolve_inv(a, convolve_inv(b, c)).values);
    }
    auto G = GroupTable::build(Series::GL, 2, 3);
    auto T = G->trivial();
    auto f = InvFunction::indicator(G, G->borel(), G->borel(), 1);
    auto g = InvFunction::indicator(G, T, T, 0);
    CHECK_THROWS_AS(convolve_inv(f, g), Error);
}

TEST_CASE("Hecke products agree with the GL3(F2) oracle") {
    auto H = HeckeAlgebra::create("A2");
    const WeylGroup& W = H->group();
    auto G = GroupTable::build(Series::GL, 3, 2);
    const int B = G->borel();
    auto labels = G->weyl_labels(B, B, W);
    for (uint32_t x = 0; x < W.size(); ++x)
        for (uint32_t y = 0; y < W.size(); ++y) {
            auto prod = convolve_inv(InvFunction::indicator(G, B, B, labels[x]),
                                     InvFunction::indicator(G, B, B, labels[y]));
            auto at_q = specialize_hecke(H->T(x) * H->T(y), 2);
            for (uint32_t z = 0; z < W.size(); ++z) {
                mpq_class expect = at_q.count(z) ? at_q[z] : mpq_class(0);
                CHECK(expect == static_cast<long>(prod.values[labels[z]]));
            }
        }
}

TEST_CASE("cell counting matches enumeration and the Schur algebroid") {
    auto W = WeylGroup::build("A2");
    auto alg = HeckeAlgebra::create(W);
    SchurAlgebroid S(alg);
    auto G = GroupTable::build(Series::GL, 3, 2);
    CellCounter cells2(W, 2), cells3(W, 3);
    CHECK(cells2.transversal_size(ParabolicSubset{}) == 21);
    CHECK(cells3.transversal_size(ParabolicSubset{1}) == 13);
    for (uint32_t I = 0; I < 4; ++I)
        for (uint32_t J = 0; J < 4; ++J)
            for (uint32_t K = 0; K < 4; ++K) {
                ParabolicSubset pi{I}, pj{J}, pk{K};
                auto counts2 = cells2.count(pi, pj, pk);
                auto counts3 = cells3.count(pi, pj, pk);
                const auto& table = S.table(pi, pj, pk);
                const int gi = G->parabolic(pi), gj = G->parabolic(pj), gk = G->parabolic(pk);
                auto lij = G->weyl_labels(gi, gj, *W);
                auto ljk = G->weyl_labels(gj, gk, *W);
                auto lik = G->weyl_labels(gi, gk, *W);
                for (size_t z1 = 0; z1 < counts2.ij->minreps.size(); ++z1)
                    for (size_t z2 = 0; z2 < counts2.jk->minreps.size(); ++z2) {
                        const uint32_t m1 = counts2.ij->minreps[z1], m2 = counts2.jk->minreps[z2];
                        auto prod = convolve_inv(InvFunction::indicator(G, gi, gj, lij[m1]),
                                                 InvFunction::indicator(G, gj, gk, ljk[m2]));
                        const SchurElem& c = table.products.at({m1, m2});
                        for (size_t z3 = 0; z3 < counts2.ik->minreps.size(); ++z3) {
                            const uint32_t m3 = counts2.ik->minreps[z3];
                            CHECK(counts2.at(z1, z2, z3) == prod.values[lik[m3]]);
                            CHECK(c.coeff(m3).specialize(2) == static_cast<long>(counts2.at(z1, z2, z3)));
                            CHECK(c.coeff(m3).specialize(3) == static_cast<long>(counts3.at(z1, z2, z3)));
                        }
                    }
            }
}

TEST_CASE("symmetric pairs") {
    auto S3 = GroupTable::build(Series::SL, 2, 3);
    auto sp = symmetric_pair(S3, "diag(1,-1)");
    CHECK(sp.members.size() == 2);  // the diagonal torus of SL2(F3) is {+-1}
    CHECK(sp.orbits->count() == 4);
    CHECK(sp.geometric_count == 3);
    CHECK(sp.characters.size() == 2);

    auto S5 = GroupTable::build(Series::SL, 2, 5);
    auto sp5 = symmetric_pair(S5, "diag(1,-1)");
    CHECK(sp5.orbits->count() == 4);
    CHECK(sp5.geometric_count == 3);

    auto G3 = GroupTable::build(Series::GL, 2, 3);
    auto g2 = symmetric_pair(G3, "diag(1,-1)");
    CHECK(g2.members.size() == 4);
    CHECK(g2.orbits->count() == 3);
    CHECK(g2.characters.size() == 4);
    auto G5 = GroupTable::build(Series::GL, 2, 5);
    CHECK(symmetric_pair(G5, "diag(1,-1)").orbits->count() == 3);

    auto GL33 = GroupTable::build(Series::GL, 3, 3);
    auto b = symmetric_pair(GL33, "diag(1,1,-1)");
    CHECK(b.members.size() == 48 * 2);
    // chars of GL2(F3) x GL1(F3) to +-1: through the two determinants
    CHECK(b.characters.size() == 4);
    CHECK(b.orbits->count() == 6);

    auto o = symmetric_pair(G3, "transpose-inverse");
    CHECK(o.members.size() == 8);  // O2(F3) is dihedral of order 2(q+1)

    auto G2 = GroupTable::build(Series::GL, 2, 2);
    try {
        symmetric_pair(G2, "diag(1,-1)");
        FAIL("expected EvenCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EvenCharacteristic);
    }
    CHECK_THROWS_AS(symmetric_pair(G3, "diag(1,2)"), Error);
}
