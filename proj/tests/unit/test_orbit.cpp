#include <doctest.h>

#include <random>
#include <sstream>

#include "hecat/algebra/error.hpp"
#include "hecat/hecke/kl.hpp"
#include "hecat/orbit/module.hpp"

using namespace hecat;

namespace {

std::shared_ptr<const OrbitDatum> builtin(const std::string& name) {
    return std::make_shared<const OrbitDatum>(OrbitDatum::builtin(name));
}

std::shared_ptr<const OrbitModule> fitted(const std::string& name, std::vector<int> primes, int held,
                                          bool characters = false) {
    FitOptions o;
    o.primes = std::move(primes);
    o.held_out = held;
    o.characters = characters;
    return fit_action(builtin(name), o);
}

// Weyl element of a switch orbit id such as "s1 s2"
uint32_t weyl_of(const WeylGroup& W, const std::string& id) {
    std::vector<int> word;
    std::istringstream in(id);
    std::string tok;
    while (in >> tok)
        if (tok != "e") word.push_back(std::stoi(tok.substr(1)) - 1);
    return W.from_word(word).index();
}

LaurentPoly q(long c0, long c1 = 0) {
    LaurentPoly p(Var::q, c0);
    p += LaurentPoly::monomial(Var::q, 1, c1);
    return p;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InternalInvariant;
}

void check_switch(const std::shared_ptr<const OrbitModule>& mod) {
    const WeylGroup& W = mod->hecke()->group();
    const HeckeAlgebra& H = *mod->hecke();
    const OrbitDatum& d = mod->datum();
    REQUIRE(d.size() == W.size());
    for (uint32_t v = 0; v < d.size(); ++v) {
        uint32_t w = weyl_of(W, d.orbits[v].id);
        CHECK(d.orbits[v].dim == W.length(w));
        for (int s = 0; s < W.rank(); ++s) {
            CHECK((d.cases[s][v].label == OrbitCase::U || d.cases[s][v].label == OrbitCase::G));
            HeckeElem expect = H.T(W.simple(s)) * H.T(w);
            const auto& col = mod->column(s, {v, 0});
            CHECK(col.size() == expect.terms().size());
            for (const auto& [k, c] : col) CHECK(c == expect.coeff(weyl_of(W, d.orbits[k.first].id)));
        }
    }
    // KLV basis against the KL table
    for (uint32_t v = 0; v < d.size(); ++v) {
        uint32_t w = weyl_of(W, d.orbits[v].id);
        HeckeElem C = H.kl().kl_basis(W.elem(w));
        OrbitModuleElem klv = mod->klv_basis({v, 0});
        CHECK(klv.terms().size() == C.terms().size());
        for (uint32_t u = 0; u < d.size(); ++u) {
            uint32_t x = weyl_of(W, d.orbits[u].id);
            CHECK(klv.coeff({u, 0}) == C.coeff(x));
            LaurentPoly P = mod->klv_poly({u, 0}, {v, 0});
            if (code_of([&] { H.kl().kl_poly(W.elem(x), W.elem(w)); }) == Errc::NotComparable)
                CHECK(P.is_zero());
            else
                CHECK(P == H.kl().kl_poly(W.elem(x), W.elem(w)));
        }
    }
}

}  // namespace

TEST_CASE("builtin data") {
    auto d = builtin("switch(GL2)");
    CHECK(d->size() == 2);
    for (uint32_t v = 0; v < 2; ++v) CHECK(d->cases[0][v].label == OrbitCase::U);

    auto sl = builtin("sl2-torus");
    CHECK(sl->size() == 3);
    CHECK(sl->closed.size() == 2);
    int open = 0;
    for (uint32_t v = 0; v < 3; ++v)
        if (sl->cases[0][v].star == v) {
            ++open;
            CHECK(sl->cases[0][v].label == OrbitCase::T);
            CHECK(sl->orbits[v].dim == 1);
            CHECK(sl->orbits[v].chars == std::vector<std::string>{"triv", "sign"});
            CHECK(sl->cases[0][v].aux.size() == 2);
        }
    CHECK(open == 1);

    auto gl = builtin("gl2-torus");
    CHECK(gl->size() == 3);
    for (const auto& o : gl->orbits) CHECK(o.chars.size() == 1);

    auto block = builtin("gl3-block");
    CHECK(block->size() == 6);
    CHECK(block->closed.size() == 3);
    int g_labels = 0;
    for (int s = 0; s < 2; ++s)
        for (uint32_t v = 0; v < 6; ++v) g_labels += block->cases[s][v].label == OrbitCase::G;
    CHECK(g_labels == 2);

    for (const auto& name : OrbitDatum::builtin_names()) {
        auto b = builtin(name);
        CHECK_NOTHROW(b->validate());
        OrbitDatum back = OrbitDatum::from_json(b->to_json());
        CHECK(back.to_json() == b->to_json());
        CHECK(load_datum(name).to_json() == b->to_json());
    }
}

TEST_CASE("datum validation") {
    nlohmann::json good = builtin("sl2-torus")->to_json();
    good.erase("oracle");
    good.erase("reps");
    CHECK_NOTHROW(OrbitDatum::from_json(good));

    // s*v of equal dimension with label T
    nlohmann::json bad = good;
    bad["orbits"][2]["dim"] = 0;
    CHECK(code_of([&] { OrbitDatum::from_json(bad); }) == Errc::ValidationFailed);
    try {
        OrbitDatum::from_json(bad);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("dim(s*v) = dim(v)+1") != std::string::npos);
    }

    // T with a single auxiliary orbit
    bad = good;
    bad["cases"]["s1"]["v0"]["aux"] = {"v0"};
    CHECK(code_of([&] { OrbitDatum::from_json(bad); }) == Errc::ValidationFailed);

    // G but s*v moves
    bad = good;
    bad["cases"]["s1"]["v0"] = {{"label", "G"}, {"star", "v2"}, {"aux", nlohmann::json::array()}};
    CHECK(code_of([&] { OrbitDatum::from_json(bad); }) == Errc::ValidationFailed);

    // s*(s*v) != s*v
    bad = good;
    bad["cases"]["s1"]["v2"]["star"] = "v0";
    CHECK(code_of([&] { OrbitDatum::from_json(bad); }) == Errc::ValidationFailed);

    // not Hecke-connected: the open orbit is declared unreachable
    nlohmann::json lonely = {{"type", "A1"},
                             {"orbits", {{{"id", "a"}, {"dim", 0}}, {{"id", "b"}, {"dim", 0}}}},
                             {"cases",
                              {{"s1",
                                {{"a", {{"label", "G"}, {"star", "a"}, {"aux", nlohmann::json::array()}}},
                                 {"b", {{"label", "G"}, {"star", "b"}, {"aux", nlohmann::json::array()}}}}}}},
                             {"closed", {"a"}}};
    CHECK(code_of([&] { OrbitDatum::from_json(lonely); }) == Errc::ValidationFailed);
    lonely["closed"] = {"a", "b"};
    CHECK_NOTHROW(OrbitDatum::from_json(lonely));

    CHECK(code_of([&] { OrbitDatum::from_json({{"type", "A1"}}); }) == Errc::ParseError);
    CHECK(code_of([&] { load_datum("no-such-datum"); }) == Errc::ParseError);
    CHECK(code_of([&] { OrbitDatum::builtin("switch(GL9)"); }) == Errc::ParseError);
}

TEST_CASE("switch data reproduce the regular module") {
    auto gl2 = fitted("switch(GL2)", {2, 3}, 5);
    const auto& col = gl2->column(0, {0, 0});
    REQUIRE(col.size() == 1);
    CHECK(col.begin()->first == OrbitKey{1, 0});
    CHECK(col.begin()->second.is_one());
    check_switch(gl2);
    CHECK_NOTHROW(gl2->check_axioms());

    auto gl3 = fitted("switch(GL3)", {2, 3, 4, 5}, 7);
    check_switch(gl3);
    CHECK_NOTHROW(gl3->check_axioms());
}

TEST_CASE("symmetric pairs") {
    auto sl = fitted("sl2-torus", {3, 5}, 7);
    // closed v0, v1; open v2
    CHECK(sl->column(0, {0, 0}) == OrbitModule::Column{{{1, 0}, q(1)}, {{2, 0}, q(1)}});
    CHECK(sl->column(0, {1, 0}) == OrbitModule::Column{{{0, 0}, q(1)}, {{2, 0}, q(1)}});
    CHECK(sl->column(0, {2, 0}) ==
          OrbitModule::Column{{{0, 0}, q(-1, 1)}, {{1, 0}, q(-1, 1)}, {{2, 0}, q(-2, 1)}});
    CHECK_NOTHROW(sl->check_axioms());

    // the closure of the open orbit is everything: constant sheaf
    for (uint32_t u = 0; u < 3; ++u) CHECK(sl->klv_poly({u, 0}, {2, 0}).is_one());
    CHECK(sl->klv_poly({0, 0}, {1, 0}).is_zero());

    auto gl = fitted("gl2-torus", {3, 5}, 9);
    for (uint32_t v = 0; v < 3; ++v) CHECK(gl->column(0, {v, 0}) == sl->column(0, {v, 0}));
    CHECK_NOTHROW(gl->check_axioms());

    auto block = fitted("gl3-block", {3, 5, 7, 9}, 11);
    CHECK_NOTHROW(block->check_axioms());
    for (uint32_t v = 0; v < block->datum().size(); ++v) {
        CHECK(block->klv_poly({v, 0}, {v, 0}).is_one());
        OrbitModuleElem c = block->klv_basis({v, 0});
        CHECK(block->duality(c) == c);
    }
}

TEST_CASE("type G eigenvalue") {
    for (const auto& [name, primes, held] :
         std::vector<std::tuple<std::string, std::vector<int>, int>>{{"gl3-block", {3, 5, 7, 9}, 11},
                                                                      {"switch(GL2)", {2, 3}, 5}}) {
        auto mod = fitted(name, primes, held);
        const auto& d = mod->datum();
        for (int s = 0; s < d.rank(); ++s)
            for (uint32_t v = 0; v < d.size(); ++v)
                if (d.cases[s][v].label == OrbitCase::G)
                    CHECK(mod->apply_T(s, mod->m(v)) == mod->m(v).scaled(q(0, 1)));
    }
}

TEST_CASE("sign character on sl2-torus") {
    auto sl = fitted("sl2-torus", {3, 5}, 7, true);
    REQUIRE(sl->basis().size() == 4);
    OrbitModuleElem sign = sl->m(2, 1);
    OrbitModuleElem ts = act(sl->hecke()->T(sl->hecke()->group().simple(0)), sign);
    CHECK((ts + sign).is_zero());
    CHECK_NOTHROW(sl->check_axioms());
    // cuspidal: D(m_sign) = q^-1 m_sign and the KLV element is v m_sign
    CHECK(sl->duality(sign) == sign.scaled(LaurentPoly::monomial(Var::q, -1)));
    CHECK(sl->klv_basis({2, 1}).coeff({2, 1}) == LaurentPoly::monomial(Var::v, 1));

    // held-out at an odd prime power
    CHECK_NOTHROW(fitted("sl2-torus", {3, 5}, 9, true));
}

TEST_CASE("action and duality") {
    auto sl = fitted("sl2-torus", {3, 5}, 7);
    const HeckeAlgebra& H = *sl->hecke();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        OrbitModuleElem m = sl->zero();
        for (uint32_t v = 0; v < 3; ++v) m.add({v, 0}, LaurentPoly::monomial(Var::q, ex(rng), coef(rng)));
        CHECK(sl->duality(sl->duality(m)) == m);
        CHECK(act(H.one(), m) == m);
        HeckeElem h = H.T(H.group().simple(0)).scaled(LaurentPoly::monomial(Var::q, ex(rng), coef(rng)));
        h += H.one().scaled(LaurentPoly(Var::q, coef(rng)));
        CHECK(sl->duality(act(h, m)) == act(hecke_bar(h), sl->duality(m)));
    }
    CHECK(act(H.one(Var::v), sl->m(0)).form() == Var::v);
}

TEST_CASE("fit errors") {
    auto d = builtin("switch(GL3)");
    CHECK(code_of([&] { OrbitModule::unfitted(d)->apply_T(0, OrbitModule::unfitted(d)->m(0)); }) ==
          Errc::ActionNotFitted);
    auto un = OrbitModule::unfitted(d);
    CHECK(code_of([&] { act(un->hecke()->one(), un->m(0)); }) == Errc::ActionNotFitted);

    FitOptions o;
    o.primes = {2};
    o.held_out = 3;
    o.degree_bound = 0;
    CHECK(code_of([&] { fit_action(d, o); }) == Errc::HeldOutMismatch);
    o.degree_bound = 3;
    CHECK(code_of([&] { fit_action(d, o); }) == Errc::UnsupportedContext);
    o.primes = {2, 3, 4, 5};
    o.held_out = 5;
    CHECK(code_of([&] { fit_action(d, o); }) == Errc::UnsupportedContext);

    nlohmann::json j = builtin("sl2-torus")->to_json();
    j.erase("oracle");
    j.erase("reps");
    auto plain = std::make_shared<const OrbitDatum>(OrbitDatum::from_json(j));
    o.primes = {3, 5};
    o.held_out = 7;
    o.degree_bound = -1;
    CHECK(code_of([&] { fit_action(plain, o); }) == Errc::UnsupportedContext);

    // case data that disagree with the oracle
    nlohmann::json wrong = builtin("gl2-torus")->to_json();
    wrong["reps"]["v0"] = wrong["reps"]["v1"];
    auto swapped = std::make_shared<const OrbitDatum>(OrbitDatum::from_json(wrong));
    CHECK(code_of([&] { fit_action(swapped, o); }) == Errc::InconsistentSamples);

    // sign characters on gl2-torus cannot be realized
    nlohmann::json fake = builtin("gl2-torus")->to_json();
    fake["orbits"][2]["chars"] = {"triv", "sign"};
    auto faked = std::make_shared<const OrbitDatum>(OrbitDatum::from_json(fake));
    o.characters = true;
    CHECK(code_of([&] { fit_action(faked, o); }) == Errc::UnsupportedContext);
}

TEST_CASE("json output") {
    auto sl = fitted("sl2-torus", {3, 5}, 7, true);
    nlohmann::json j = sl->action_json();
    CHECK(j["basis"] == nlohmann::json({"v0", "v1", "v2", "v2:sign"}));
    CHECK(j["action"]["s1"]["v2:sign"] == nlohmann::json({{"v2:sign", "-1"}}));
    CHECK(j["action"]["s1"]["v0"]["v2"] == "1");
    nlohmann::json k = sl->klv_json();
    CHECK(k["v2"]["v0"] == "1");
    CHECK(sl->action_csv().rfind("s,source,target,coefficient\n", 0) == 0);
}
