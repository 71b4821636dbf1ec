#include <doctest.h>

#include <set>

#include "hecat/coxeter/weyl_group.hpp"

using namespace hecat;

namespace {

// Independent Bruhat oracle: x <= w iff some reduced word of x is a subword
// of the (fixed) reduced word of w.
bool subword_leq(const WeylGroup& g, uint32_t x, uint32_t w) {
    auto word = g.reduced_word(w);
    const int k = static_cast<int>(word.size());
    for (uint32_t mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) != g.length(x)) continue;
        uint32_t r = 0;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) r = g.rmul(r, word[i]);
        if (r == x) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("group orders") {
    CHECK(WeylGroup::build("A2")->size() == 6);
    CHECK(WeylGroup::build("A1xA1")->size() == 4);
    CHECK(WeylGroup::build("B2")->size() == 8);
    CHECK(WeylGroup::build("G2")->size() == 12);
    CHECK(WeylGroup::build("C3")->size() == 48);
    CHECK(WeylGroup::build("D4")->size() == 192);
    CHECK(WeylGroup::build("F4")->size() == 1152);
    CHECK(WeylGroup::build("A4")->size() == 120);
    CHECK_THROWS_AS(WeylGroup::build("E6"), Error);
    CHECK_THROWS_AS(WeylGroup::build("A9"), Error);
    CHECK_THROWS_AS(WeylGroup::build("B1"), Error);
    CHECK(CartanType::parse("A1xA1").str() == "A1xA1");
}

TEST_CASE("length, descents, words") {
    auto g = WeylGroup::build("A2");
    auto e = g->identity();
    auto s1 = g->simple(0), s2 = g->simple(1);
    auto w = g->mul(s1, s2);
    CHECK(g->mul(e, w) == w);
    CHECK(w.length() == 2);
    auto w0 = g->parse("s1 s2 s1");
    CHECK(w0 == g->longest());
    CHECK(w0.right_descents() == 3u);
    CHECK(g->parse("s2 s1 s2") == w0);
    CHECK(w0.str() == "s1 s2 s1");
    CHECK(g->parse("e") == e);
    CHECK(g->parse("s1s2") == w);
    CHECK(e.str() == "e");
    auto other = WeylGroup::build("A2");
    CHECK_THROWS_AS(g->mul(s1, other->simple(0)), Error);
}

TEST_CASE("length laws and inverses") {
    for (const char* t : {"A3", "B3", "G2", "D4", "A1xA2"}) {
        auto g = WeylGroup::build(t);
        for (uint32_t w = 0; w < g->size(); ++w) {
            CHECK(g->length(g->inverse_index(w)) == g->length(w));
            CHECK(g->mul(g->elem(w), g->inverse(g->elem(w))) == g->identity());
            CHECK(g->reduced_word(w).size() == static_cast<size_t>(g->length(w)));
            CHECK(g->from_word(g->reduced_word(w)).index() == w);
            CHECK(g->parse(g->word_str(w)).index() == w);
        }
    }
}

TEST_CASE("bruhat order examples and brute force") {
    auto g = WeylGroup::build("A2");
    CHECK(g->bruhat_leq(g->identity(), g->longest()));
    CHECK_FALSE(g->bruhat_leq(g->simple(0), g->simple(1)));
    CHECK(g->bruhat_leq(g->simple(0), g->parse("s2 s1 s2")));
    for (const char* t : {"A2", "B2", "G2", "A3", "B3", "A1xA2"}) {
        auto h = WeylGroup::build(t);
        if (h->size() > 48) continue;
        for (uint32_t x = 0; x < h->size(); ++x) {
            CHECK(h->bruhat_leq(0u, x));
            CHECK(h->bruhat_leq(x, h->longest().index()));
            for (uint32_t w = 0; w < h->size(); ++w) CHECK(h->bruhat_leq(x, w) == subword_leq(*h, x, w));
        }
    }
}

TEST_CASE("demazure product") {
    auto g = WeylGroup::build("A2");
    auto s = g->simple(0);
    CHECK(g->demazure_star(s, s) == s);
    CHECK(g->demazure_star(s, g->identity()) == s);
    CHECK(g->demazure_star(s, g->parse("s2 s1")) == g->parse("s1 s2 s1"));
    for (const char* t : {"A3", "B2", "G2"}) {
        auto h = WeylGroup::build(t);
        auto els = h->elements();
        for (auto& x : els)
            for (auto& y : els) {
                auto xy = h->demazure_star(x, y);
                CHECK(xy.length() <= x.length() + y.length());
                CHECK(h->bruhat_leq(x, xy));
                CHECK(h->bruhat_leq(y, xy));
                if (h->size() <= 24 && x.index() % 3 == 0)
                    for (auto& z : els)
                        CHECK(h->demazure_star(xy, z) == h->demazure_star(x, h->demazure_star(y, z)));
            }
    }
}

TEST_CASE("double cosets") {
    auto g = WeylGroup::build("A2");
    ParabolicSubset none, s1{1u};
    CHECK(g->double_cosets(none, none).size() == 6);
    auto dc = g->double_cosets(s1, s1);
    REQUIRE(dc.size() == 2);
    CHECK(dc[0].minrep == g->identity());
    CHECK(dc[1].minrep == g->simple(1));
    CHECK(g->coset_project(g->parse("s1 s2 s1"), s1, s1).minrep == g->simple(1));
    CHECK(ParabolicSubset::parse("{s1,s3}").mask == 5u);
    CHECK(ParabolicSubset::parse("{}").mask == 0u);
    CHECK(ParabolicSubset::parse("{s2}").str() == "{s2}");
    CHECK(g->poincare(ParabolicSubset{3u}) == LaurentPoly::parse("1 + 2*q + 2*q^2 + q^3"));

    auto h = WeylGroup::build("A3");
    for (uint32_t I = 0; I < 8; ++I)
        for (uint32_t J = 0; J < 8; ++J) {
            auto t = h->coset_table({I}, {J});
            size_t total = 0;
            for (size_t k = 0; k < t->members.size(); ++k) {
                total += t->members[k].size();
                int minimal = 0;
                for (uint32_t w : t->members[k])
                    if ((h->left_descents(w) & I) == 0 && (h->right_descents(w) & J) == 0) ++minimal;
                CHECK(minimal == 1);
            }
            CHECK(total == h->size());
        }
}

TEST_CASE("diagram involutions") {
    auto g = WeylGroup::build("A2");
    auto id = g->diagram_involution("identity");
    CHECK(id.perm == std::vector<int>{0, 1});
    auto d = g->diagram_involution("duality");
    CHECK(d.perm == std::vector<int>{1, 0});
    CHECK(g->apply(d, g->parse("s1 s2")) == g->parse("s2 s1"));
    CHECK_THROWS_AS(g->diagram_involution("switch"), Error);
    auto h = WeylGroup::build("A1xA1");
    CHECK(h->diagram_involution("switch").perm == std::vector<int>{1, 0});
    CHECK(WeylGroup::build("B2")->diagram_involution("duality").perm == std::vector<int>{0, 1});
    CHECK(WeylGroup::build("D4")->diagram_involution("duality").perm == std::vector<int>{0, 1, 2, 3});
    CHECK(WeylGroup::build("D5")->diagram_involution("duality").perm == std::vector<int>{0, 1, 2, 4, 3});
}
