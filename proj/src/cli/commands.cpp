#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "hecat/algebra/error.hpp"
#include "hecat/cli/cli.hpp"
#include "hecat/gflq/group.hpp"
#include "hecat/hecke/kl.hpp"
#include "hecat/orbit/module.hpp"
#include "hecat/rouquier/complex.hpp"
#include "hecat/schur/schur.hpp"
#include "hecat/soergel/hom.hpp"

namespace hecat {
namespace {

enum class Format { text, json, csv };

struct Context {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::text;
};

void emit_json(Context& cx, const nlohmann::json& j) { cx.out << j.dump(2) << "\n"; }

// Words of simple reflections, possibly non-reduced: "s1 s2 s1", "1,2", "e".
std::vector<int> parse_word(const std::string& text, int rank) {
    std::vector<int> word;
    std::string tok;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream toks(cleaned);
    while (toks >> tok) {
        if (tok == "e") continue;
        std::string digits = tok[0] == 's' ? tok.substr(1) : tok;
        if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw Error(Errc::ParseError, "bad word '" + text + "'");
        const int s = std::stoi(digits) - 1;
        if (s < 0 || s >= rank)
            throw Error(Errc::ParseError, "generator '" + tok + "' out of range in '" + text + "'");
        word.push_back(s);
    }
    return word;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), ::isdigit))
            throw Error(Errc::ParseError, std::string("bad ") + what + " list '" + text + "'");
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw Error(Errc::ParseError, std::string("empty ") + what + " list");
    return out;
}

// "GL3" / "SL2"
std::pair<Series, int> parse_group(const std::string& text) {
    if (text.size() == 3 && (text.rfind("GL", 0) == 0 || text.rfind("SL", 0) == 0) && text[2] >= '2' && text[2] <= '4')
        return {text[0] == 'G' ? Series::GL : Series::SL, text[2] - '0'};
    throw Error(Errc::UnsupportedType, "group '" + text + "' is not one of GL2..GL4, SL2..SL4");
}

std::string type_of_rank(int n) { return "A" + std::to_string(n - 1); }

// ---------------------------------------------------------------------------

void cmd_weyl(Context& cx, const std::string& type, const std::string& w) {
    auto W = WeylGroup::build(type);
    if (!w.empty()) {
        WeylElem x = W->parse(w);
        WeylElem inv = W->inverse(x);
        if (cx.format == Format::json) {
            emit_json(cx, {{"type", W->type().str()},
                           {"element", W->word_str(x.index())},
                           {"length", x.length()},
                           {"inverse", W->word_str(inv.index())}});
        } else {
            cx.out << "element " << W->word_str(x.index()) << "\nlength " << x.length() << "\ninverse "
                   << W->word_str(inv.index()) << "\n";
        }
        return;
    }
    if (cx.format == Format::csv) {
        cx.out << "index,word,length\n";
        for (uint32_t i = 0; i < W->size(); ++i) cx.out << i << "," << W->word_str(i) << "," << W->length(i) << "\n";
    } else if (cx.format == Format::json) {
        nlohmann::json elems = nlohmann::json::array();
        for (uint32_t i = 0; i < W->size(); ++i) elems.push_back({{"word", W->word_str(i)}, {"length", W->length(i)}});
        emit_json(cx, {{"type", W->type().str()},
                       {"rank", W->rank()},
                       {"order", W->size()},
                       {"longest", W->word_str(W->longest().index())},
                       {"elements", elems}});
    } else {
        cx.out << "type " << W->type().str() << "\nrank " << W->rank() << "\norder " << W->size() << "\nlongest "
               << W->word_str(W->longest().index()) << "\n";
    }
}

void print_hecke(Context& cx, const HeckeElem& h) {
    if (cx.format == Format::json)
        emit_json(cx, h.to_json());
    else if (cx.format == Format::csv) {
        cx.out << "w,coefficient\n";
        for (const auto& [w, c] : h.terms()) cx.out << h.algebra().group().word_str(w) << "," << c.str() << "\n";
    } else
        cx.out << h.str() << "\n";
}

void cmd_kl(Context& cx, const std::string& type, const std::string& w) {
    auto H = HeckeAlgebra::create(type);
    const WeylGroup& W = H->group();
    WeylElem x = W.parse(w);
    if (cx.format == Format::json) {
        nlohmann::json polys = nlohmann::json::object();
        for (const auto& [y, p] : H->kl().column(x.index())) polys[W.word_str(y)] = p.str();
        emit_json(cx, {{"type", W.type().str()}, {"w", W.word_str(x.index())}, {"P", polys}});
    } else {
        cx.out << H->kl().csv_column(x.index());
    }
}

void cmd_schur(Context& cx, const std::string& type, const std::string& I, const std::string& J,
               const std::string& K) {
    auto alg = HeckeAlgebra::create(type);
    const WeylGroup& W = alg->group();
    auto parse = [&](const std::string& text) {
        ParabolicSubset p = ParabolicSubset::parse(text);
        if (p.mask >> W.rank()) throw Error(Errc::ParseError, "parabolic subset '" + text + "' out of range");
        return p;
    };
    SchurAlgebroid S(alg);
    const StructureTable& t = S.table(parse(I), parse(J), parse(K));
    if (cx.format == Format::json) {
        emit_json(cx, t.to_json());
    } else if (cx.format == Format::csv) {
        cx.out << "z1,z2,z3,coefficient\n";
        for (const auto& [key, prod] : t.products)
            for (const auto& [z3, c] : prod.terms())
                cx.out << W.word_str(key.first) << "," << W.word_str(key.second) << "," << W.word_str(z3) << ","
                       << c.str() << "\n";
    } else {
        for (const auto& [key, prod] : t.products)
            cx.out << "[" << W.word_str(key.first) << "] * [" << W.word_str(key.second) << "] = " << prod.str() << "\n";
    }
}

void cmd_oracle_convolve(Context& cx, const std::string& group, int q, const std::string& x, const std::string& y) {
    auto [series, n] = parse_group(group);
    auto W = WeylGroup::build(type_of_rank(n));
    auto G = GroupTable::build(series, n, q);
    const int B = G->borel();
    auto labels = G->weyl_labels(B, B, *W);
    auto prod = convolve_inv(InvFunction::indicator(G, B, B, labels[W->parse(x).index()]),
                             InvFunction::indicator(G, B, B, labels[W->parse(y).index()]));
    if (cx.format == Format::json) {
        nlohmann::json vals = nlohmann::json::object();
        for (uint32_t z = 0; z < W->size(); ++z) vals[W->word_str(z)] = prod.values[labels[z]];
        emit_json(cx, {{"group", G->name()}, {"values", vals}});
    } else {
        if (cx.format == Format::csv) cx.out << "z,value\n";
        for (uint32_t z = 0; z < W->size(); ++z)
            cx.out << W->word_str(z) << (cx.format == Format::csv ? "," : " ") << prod.values[labels[z]] << "\n";
    }
}

void cmd_oracle_compare(Context& cx, const std::string& group, const std::string& primes) {
    auto [series, n] = parse_group(group);
    auto H = HeckeAlgebra::create(type_of_rank(n));
    const WeylGroup& W = H->group();
    long products = 0;
    for (int q : parse_int_list(primes, "prime")) {
        auto G = GroupTable::build(series, n, q);
        const int B = G->borel();
        auto labels = G->weyl_labels(B, B, W);
        for (uint32_t x = 0; x < W.size(); ++x)
            for (uint32_t y = 0; y < W.size(); ++y) {
                auto prod = convolve_inv(InvFunction::indicator(G, B, B, labels[x]),
                                         InvFunction::indicator(G, B, B, labels[y]));
                auto at_q = specialize_hecke(H->T(x) * H->T(y), q);
                for (uint32_t z = 0; z < W.size(); ++z) {
                    mpq_class expect = at_q.count(z) ? at_q[z] : mpq_class(0);
                    if (expect != static_cast<long>(prod.values[labels[z]]))
                        throw Error(Errc::ValidationFailed,
                                    G->name() + ": coefficient of T(" + W.word_str(z) + ") in T(" + W.word_str(x) +
                                        ")T(" + W.word_str(y) + ") is " + expect.get_str() + " but the oracle gives " +
                                        std::to_string(prod.values[labels[z]]));
                }
                ++products;
            }
    }
    if (cx.format == Format::json)
        emit_json(cx, {{"group", group}, {"products", products}, {"match", true}});
    else
        cx.out << "all |W|² products match\n";
}

void cmd_soergel_bs(Context& cx, const std::string& type, const std::string& word, const std::string& report) {
    auto ctx = PolyRingCtx::create(type);
    std::vector<int> w = parse_word(word, ctx->group().rank());
    std::vector<std::string> items;
    {
        std::string cleaned = report;
        for (char& c : cleaned)
            if (c == ',') c = ' ';
        std::istringstream in(cleaned);
        for (std::string tok; in >> tok;) {
            if (tok != "rank" && tok != "character")
                throw Error(Errc::ParseError, "unknown report item '" + tok + "' (rank, character)");
            items.push_back(tok);
        }
    }
    auto B = bs_bimodule(ctx, w);
    nlohmann::json j;
    for (const auto& item : items) {
        if (item == "rank") j["rank"] = B->graded_rank().str();
        if (item == "character") j["character"] = hecke_character(HeckeAlgebra::create(type), w).str();
    }
    if (cx.format == Format::json) {
        emit_json(cx, j);
    } else {
        for (const auto& item : items) cx.out << item << " " << j[item].get<std::string>() << "\n";
    }
}

void cmd_soergel_hom(Context& cx, const std::string& type, const std::string& src, const std::string& dst, int degree,
                     int cutoff) {
    auto ctx = PolyRingCtx::create(type);
    const int rank = ctx->group().rank();
    auto M = bs_bimodule(ctx, parse_word(src, rank)), N = bs_bimodule(ctx, parse_word(dst, rank));
    if (cutoff < 0) cutoff = hom_required_cutoff(*M, *N, degree);
    HomSpace h = hom_space(M, N, degree, cutoff);
    if (cx.format == Format::json)
        emit_json(cx, {{"degree", degree}, {"cutoff", cutoff}, {"dimension", h.dimension}});
    else
        cx.out << "dim Hom^" << degree << " = " << h.dimension << " (cutoff " << cutoff << ")\n";
}

void cmd_soergel_coinvariant(Context& cx, const std::string& type) {
    LaurentPoly p = coinvariant_poincare(CartanType::parse(type));
    if (cx.format == Format::json)
        emit_json(cx, {{"type", type}, {"poincare", p.str()}});
    else
        cx.out << p.str() << "\n";
}

int cmd_braid_check(Context& cx, const std::string& type, const std::string& lhs, const std::string& rhs,
                    uint64_t seed) {
    auto cat = SoergelCategory::create(type);
    const int rank = cat->hecke()->group().rank();
    auto l = parse_braid_word(lhs, rank), r = parse_braid_word(rhs, rank);
    BraidCheck res = braid_certify(cat, l, r, seed);
    nlohmann::json j = {{"lhs", braid_word_str(l)}, {"rhs", braid_word_str(r)}, {"equivalent", res.equivalent}};
    if (res.equivalent) {
        std::string why;
        if (!res.certificate || !res.certificate->verify(&why))
            throw Error(Errc::InternalInvariant, "certificate failed verification: " + why);
        j["minimal"] = res.lhs_min.to_json();
        j["certificate"] = res.certificate->to_json();
        emit_json(cx, j);
        return 0;
    }
    j["lhs_minimal"] = res.lhs_min.to_json();
    j["rhs_minimal"] = res.rhs_min.to_json();
    j["reason"] = res.reason;
    emit_json(cx, j);
    cx.err << "error: NotEquivalent: " << res.reason << "\n";
    return 2;
}

void cmd_braid_invariant(Context& cx, const std::string& type, const std::string& word) {
    auto cat = SoergelCategory::create(type);
    auto w = parse_braid_word(word, cat->hecke()->group().rank());
    BimoduleComplex C = braid_complex(cat, w);
    BimoduleComplex M = gaussian_eliminate(C).first;
    HeckeElem k = k0_class(M);
    if (cx.format == Format::json)
        emit_json(cx, {{"word", braid_word_str(w)}, {"minimal", M.to_json()}, {"k0", k.to_json()}});
    else
        cx.out << "minimal complex " << M.str() << "\nk0 " << k.str() << "\n";
}

struct OrbitArgs {
    std::string builtin, datum;
    std::string fit, validate_q;
    int degree_bound = -1;
    bool characters = false;
    std::string report = "action,klv";
};

std::shared_ptr<const OrbitDatum> orbit_source(const OrbitArgs& a) {
    if (a.builtin.empty() == a.datum.empty())
        throw Error(Errc::ParseError, "give exactly one of --builtin and --datum");
    return std::make_shared<const OrbitDatum>(a.builtin.empty() ? load_datum(a.datum) : OrbitDatum::builtin(a.builtin));
}

void cmd_orbit_module(Context& cx, const OrbitArgs& a) {
    auto datum = orbit_source(a);
    FitOptions o;
    o.primes = parse_int_list(a.fit, "prime");
    if (a.validate_q.empty()) throw Error(Errc::ParseError, "--validate is required");
    o.held_out = parse_int_list(a.validate_q, "prime").front();
    o.degree_bound = a.degree_bound;
    o.characters = a.characters;
    bool want_action = false, want_klv = false;
    {
        std::string cleaned = a.report;
        for (char& c : cleaned)
            if (c == ',') c = ' ';
        std::istringstream in(cleaned);
        for (std::string tok; in >> tok;) {
            if (tok == "action")
                want_action = true;
            else if (tok == "klv")
                want_klv = true;
            else
                throw Error(Errc::ParseError, "unknown report item '" + tok + "' (action, klv)");
        }
    }
    auto mod = fit_action(datum, o);
    mod->check_axioms();
    if (cx.format == Format::json) {
        nlohmann::json j;
        if (want_action) j["action"] = mod->action_json();
        if (want_klv) j["klv"] = mod->klv_json();
        emit_json(cx, j);
        return;
    }
    if (cx.format == Format::csv) {
        if (want_action) cx.out << mod->action_csv();
        if (want_klv) {
            cx.out << "u,v,P\n";
            for (const auto& v : mod->basis())
                for (const auto& u : mod->basis()) {
                    LaurentPoly p = mod->klv_poly(u, v);
                    if (!p.is_zero()) cx.out << mod->key_str(u) << "," << mod->key_str(v) << "," << p.str() << "\n";
                }
        }
        return;
    }
    const OrbitDatum& d = mod->datum();
    if (want_action)
        for (int s = 0; s < d.rank(); ++s)
            for (const auto& k : mod->basis()) {
                OrbitModuleElem e = mod->zero();
                for (const auto& [t, c] : mod->column(s, k)) e.add(t, c);
                cx.out << "T_s" << s + 1 << " m_" << mod->key_str(k) << " = " << e.str() << "\n";
            }
    if (want_klv)
        for (const auto& v : mod->basis()) {
            cx.out << "KLV " << mod->key_str(v) << ":";
            for (const auto& u : mod->basis()) {
                LaurentPoly p = mod->klv_poly(u, v);
                if (!p.is_zero()) cx.out << " P(" << mod->key_str(u) << ")=" << p.str();
            }
            cx.out << "\n";
        }
}

void cmd_orbit_validate(Context& cx, const OrbitArgs& a) {
    auto datum = orbit_source(a);
    datum->validate();
    if (cx.format == Format::json)
        emit_json(cx, {{"valid", true}, {"orbits", datum->size()}, {"datum", datum->to_json()}});
    else
        cx.out << "valid: " << datum->size() << " orbits of type " << datum->type << "\n";
}

int cmd_accept(Context& cx, const std::string& suite, uint64_t seed) {
    auto results = run_acceptance(suite, seed, &cx.err);
    bool all = true;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        j.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"detail", r.detail}});
    }
    if (cx.format == Format::json) {
        emit_json(cx, {{"suite", suite}, {"seed", seed}, {"pass", all}, {"criteria", j}});
    } else {
        for (const auto& r : results) {
            cx.out << "criterion " << r.id << " [" << r.name << "]: " << (r.pass ? "PASS" : "FAIL") << " (" << r.checks
                   << " checks)";
            if (!r.pass) cx.out << ": " << r.detail;
            cx.out << "\n";
        }
    }
    return all ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hecke algebras, Schur algebroids, Soergel bimodules and orbit modules", "hecat"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    Context cx{out, err};
    std::function<int()> action;
    auto bind = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

    std::string type, w, x, y, word, lhs, rhs, I, J, K, group, primes, report, src, dst, suite;
    int q = 0, degree = 0, cutoff = -1;
    uint64_t seed = 1;

    auto* weyl = app.add_subcommand("weyl", "Weyl group elements and lengths");
    weyl->add_option("--type", type, "Cartan type, e.g. A3 or B2")->required();
    weyl->add_option("--w", w, "Element as a word, e.g. \"s1 s2\"");
    bind(weyl, [&] { return cmd_weyl(cx, type, w), 0; });

    auto* hecke = app.add_subcommand("hecke", "Iwahori-Hecke algebra arithmetic");
    hecke->require_subcommand(1);
    auto* mul = hecke->add_subcommand("mul", "Product T_x T_y");
    mul->add_option("--type", type)->required();
    mul->add_option("--x", x)->required();
    mul->add_option("--y", y)->required();
    bind(mul, [&] {
        auto H = HeckeAlgebra::create(type);
        return print_hecke(cx, H->T(H->group().parse(x)) * H->T(H->group().parse(y))), 0;
    });
    auto* bar = hecke->add_subcommand("bar", "Bar involution of T_w");
    bar->add_option("--type", type)->required();
    bar->add_option("--w", w)->required();
    bind(bar, [&] {
        auto H = HeckeAlgebra::create(type);
        return print_hecke(cx, hecke_bar(H->T(H->group().parse(w)))), 0;
    });

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials P_{x,w} as a CSV column");
    kl->add_option("--type", type)->required();
    kl->add_option("--w", w)->required();
    bind(kl, [&] { return cmd_kl(cx, type, w), 0; });

    auto* schur = app.add_subcommand("schur", "Structure constants of the Schur algebroid");
    schur->add_option("--type", type)->required();
    schur->add_option("--I", I, "Parabolic subset, e.g. \"{s1}\" or \"1,3\"")->required();
    schur->add_option("--J", J)->required();
    schur->add_option("--K", K)->required();
    bind(schur, [&] { return cmd_schur(cx, type, I, J, K), 0; });

    auto* oracle = app.add_subcommand("oracle", "Finite-field convolution oracle");
    oracle->require_subcommand(1);
    auto* conv = oracle->add_subcommand("convolve", "1_{BxB} * 1_{ByB} over a finite field");
    conv->add_option("--group", group)->required();
    conv->add_option("--q", q)->required();
    conv->add_option("--x", x)->required();
    conv->add_option("--y", y)->required();
    bind(conv, [&] { return cmd_oracle_convolve(cx, group, q, x, y), 0; });
    auto* compare = oracle->add_subcommand("compare", "Compare all Hecke products with the oracle");
    compare->add_option("--group", group)->required();
    compare->add_option("--primes", primes, "Comma-separated field sizes")->required();
    bind(compare, [&] { return cmd_oracle_compare(cx, group, primes), 0; });

    auto* soergel = app.add_subcommand("soergel", "Bott-Samelson bimodules");
    soergel->require_subcommand(1);
    auto* bs = soergel->add_subcommand("bs", "Graded rank and character of BS(word)");
    bs->add_option("--type", type)->required();
    bs->add_option("--word", word)->required();
    bs->add_option("--report", report = "rank,character", "rank, character");
    bind(bs, [&] { return cmd_soergel_bs(cx, type, word, report), 0; });
    auto* hom = soergel->add_subcommand("hom", "Dimension of a graded Hom space");
    hom->add_option("--type", type)->required();
    hom->add_option("--from", src)->required();
    hom->add_option("--to", dst)->required();
    hom->add_option("--degree", degree);
    hom->add_option("--cutoff", cutoff, "Polynomial degree cutoff (default: the required one)");
    bind(hom, [&] { return cmd_soergel_hom(cx, type, src, dst, degree, cutoff), 0; });
    auto* coinv = soergel->add_subcommand("coinvariant", "Poincare polynomial of the coinvariant algebra");
    coinv->add_option("--type", type)->required();
    bind(coinv, [&] { return cmd_soergel_coinvariant(cx, type), 0; });

    auto* braid = app.add_subcommand("braid", "Rouquier complexes of braid words");
    braid->require_subcommand(1);
    auto* bcheck = braid->add_subcommand("check", "Certify a homotopy equivalence between two braid words (JSON)");
    bcheck->add_option("--type", type)->required();
    bcheck->add_option("--lhs", lhs)->required();
    bcheck->add_option("--rhs", rhs)->required();
    bcheck->add_option("--seed", seed);
    bind(bcheck, [&] { return cmd_braid_check(cx, type, lhs, rhs, seed); });
    auto* binv = braid->add_subcommand("invariant", "Minimal complex and K0 class of a braid word");
    binv->add_option("--type", type)->required();
    binv->add_option("--word", word)->required();
    bind(binv, [&] { return cmd_braid_invariant(cx, type, word), 0; });

    OrbitArgs oa;
    auto* orbit = app.add_subcommand("orbit", "Hecke modules on orbit data");
    orbit->require_subcommand(1);
    auto* omod = orbit->add_subcommand("module", "Fit the Hecke action from the point-count oracle");
    omod->add_option("--builtin", oa.builtin, "One of: " + [] {
        std::string s;
        for (const auto& n : OrbitDatum::builtin_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());
    omod->add_option("--datum", oa.datum, "JSON file or inline JSON");
    omod->add_option("--fit", oa.fit, "Comma-separated field sizes to interpolate from")->required();
    omod->add_option("--validate", oa.validate_q, "Held-out field size")->required();
    omod->add_option("--degree-bound", oa.degree_bound);
    omod->add_flag("--characters", oa.characters, "Include sign characters");
    omod->add_option("--report", oa.report, "action, klv");
    bind(omod, [&] { return cmd_orbit_module(cx, oa), 0; });
    auto* oval = orbit->add_subcommand("validate", "Check the invariants of an orbit datum");
    oval->add_option("--builtin", oa.builtin);
    oval->add_option("--datum", oa.datum);
    bind(oval, [&] { return cmd_orbit_validate(cx, oa), 0; });

    auto* accept = app.add_subcommand("accept", "Run the acceptance suite");
    accept->add_option("suite", suite, "fast or full")->required();
    accept->add_option("--seed", seed);
    bind(accept, [&] { return cmd_accept(cx, suite, seed); });

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants them reversed
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    cx.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    try {
        return action ? action() : 1;
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.detail() << "\n";
        return is_usage_error(e.code()) ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hecat
