#include <algorithm>
#include <random>
#include <sstream>

#include "hecat/algebra/linsolve.hpp"
#include "hecat/rouquier/complex.hpp"

namespace hecat {

std::vector<std::pair<int, int>> parse_braid_word(std::string_view text, int rank) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<std::pair<int, int>> word;
    std::string tok;
    while (in >> tok) {
        if (tok == "e" && word.empty()) continue;
        size_t pos = 0;
        if (tok[0] == 's' || tok[0] == 'S') pos = 1;
        size_t end = pos;
        while (end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[end]))) ++end;
        if (end == pos) throw Error(Errc::ParseError, "bad braid generator '" + tok + "'");
        int k = std::stoi(tok.substr(pos, end - pos));
        int sign = 1;
        std::string rest = tok.substr(end);
        if (rest == "^-1" || rest == "^{-1}" || rest == "'")
            sign = -1;
        else if (!rest.empty() && rest != "^1" && rest != "^+1")
            throw Error(Errc::ParseError, "bad braid exponent in '" + tok + "'");
        if (k < 1 || k > rank) throw Error(Errc::ParseError, "generator '" + tok + "' out of range");
        word.emplace_back(k - 1, sign);
    }
    return word;
}

std::string braid_word_str(const std::vector<std::pair<int, int>>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) s += ' ';
        s += "s" + std::to_string(word[k].first + 1);
        if (word[k].second < 0) s += "^-1";
    }
    return s;
}

BimoduleComplex braid_complex(CategoryPtr cat, const std::vector<std::pair<int, int>>& word) {
    if (word.empty()) return unit_complex(cat);
    BimoduleComplex C = rouquier_complex(cat, word[0].first, word[0].second);
    for (size_t k = 1; k < word.size(); ++k)
        C = tensor_complexes(C, rouquier_complex(cat, word[k].first, word[k].second));
    return C;
}

namespace {

std::vector<Summand> sorted_term(const BimoduleComplex& C, int i) {
    auto t = C.at(i);
    std::sort(t.begin(), t.end());
    return t;
}

struct Unknown {
    int deg, a, b;
    const PolyMatrix* m;
};

// Entry-and-monomial coordinates of a block equation.
using EqKey = std::tuple<int, int, int, int, uint64_t>;

void add_equation_terms(std::map<EqKey, SparseVec>& eqs, int deg, int a, int b, const PolyMatrix& m, int unknown,
                        const mpq_class& sign) {
    const int cols = m.cols();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < cols; ++c)
            for (const auto& [mono, coef] : m.at(r, c).terms())
                eqs[{deg, a, b, r * cols + c, mono.bits()}].emplace_back(unknown, coef * sign);
}

SparseVec tidy(SparseVec v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVec out;
    for (auto& [k, c] : v) {
        if (!out.empty() && out.back().first == k)
            out.back().second += c;
        else
            out.emplace_back(k, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return sgn(p.second) == 0; }), out.end());
    return out;
}

// All degree-0 chain maps M -> N as a basis of coefficient vectors.
std::vector<SparseVec> chain_map_space(const BimoduleComplex& M, const BimoduleComplex& N,
                                       std::vector<Unknown>& unknowns) {
    const auto& cat = *M.cat;
    for (int i = M.lo; i <= M.hi(); ++i)
        for (int a = 0; a < static_cast<int>(M.at(i).size()); ++a)
            for (int b = 0; b < static_cast<int>(N.at(i).size()); ++b)
                for (const auto& m : cat.hom0(M.at(i)[a], N.at(i)[b])) unknowns.push_back({i, a, b, &m});
    // dM_j phi_{j+1} - phi_j dN_j = 0, block (a in M_j, b' in N_{j+1})
    std::map<EqKey, SparseVec> eqs;
    for (int u = 0; u < static_cast<int>(unknowns.size()); ++u) {
        const Unknown& x = unknowns[u];
        const Grid dN = N.d(x.deg), dM = M.d(x.deg - 1);
        for (const auto& [ab, dn] : dN.blocks())
            if (ab.first == x.b) add_equation_terms(eqs, x.deg, x.a, ab.second, *x.m * dn, u, -1);
        for (const auto& [ab, dm] : dM.blocks())
            if (ab.second == x.a) add_equation_terms(eqs, x.deg - 1, ab.first, x.b, dm * *x.m, u, 1);
    }
    RowEchelon ech(static_cast<int>(unknowns.size()));
    for (auto& [key, row] : eqs) {
        SparseVec r = tidy(std::move(row));
        if (!r.empty()) ech.add_row(std::move(r));
    }
    return ech.nullspace();
}

ChainMap assemble(const BimoduleComplex& M, const BimoduleComplex& N, const std::vector<Unknown>& unknowns,
                  const std::vector<mpq_class>& x) {
    ChainMap f;
    for (int i = M.lo; i <= M.hi(); ++i) f.comp[i] = Grid(M.ranks(i), N.ranks(i), M.cat->nvars());
    for (size_t u = 0; u < unknowns.size(); ++u)
        if (sgn(x[u])) f.comp[unknowns[u].deg].add(unknowns[u].a, unknowns[u].b, unknowns[u].m->scaled(x[u]));
    for (auto it = f.comp.begin(); it != f.comp.end();)
        it = it->second.is_zero() ? f.comp.erase(it) : std::next(it);
    return f;
}

// psi with phi psi = id_M, solved degreewise.
std::optional<ChainMap> right_inverse(const BimoduleComplex& M, const ChainMap& phi, const BimoduleComplex& N) {
    const auto& cat = *M.cat;
    std::vector<Unknown> unknowns;
    for (int i = N.lo; i <= N.hi(); ++i)
        for (int b = 0; b < static_cast<int>(N.at(i).size()); ++b)
            for (int a = 0; a < static_cast<int>(M.at(i).size()); ++a)
                for (const auto& m : cat.hom0(N.at(i)[b], M.at(i)[a])) unknowns.push_back({i, b, a, &m});
    const int n = static_cast<int>(unknowns.size());
    std::map<EqKey, SparseVec> eqs;
    for (int u = 0; u < n; ++u) {
        const Unknown& x = unknowns[u];
        const Grid p = phi.at(M, N, x.deg);
        for (const auto& [ab, f] : p.blocks())
            if (ab.second == x.a) add_equation_terms(eqs, x.deg, ab.first, x.b, f * *x.m, u, 1);
    }
    for (int i = M.lo; i <= M.hi(); ++i)
        for (int a = 0; a < static_cast<int>(M.at(i).size()); ++a)
            add_equation_terms(eqs, i, a, a, cat.idempotent(M.at(i)[a].w), n, 1);
    RowEchelon ech(n + 1);
    for (auto& [key, row] : eqs) {
        SparseVec r = tidy(std::move(row));
        if (!r.empty()) ech.add_row(std::move(r));
    }
    auto sol = ech.solve_augmented(n);
    if (!sol) return std::nullopt;
    return assemble(N, M, unknowns, *sol);
}

}  // namespace

BraidCheck braid_certify(CategoryPtr cat, const std::vector<std::pair<int, int>>& lhs,
                         const std::vector<std::pair<int, int>>& rhs, uint64_t seed) {
    BraidCheck out;
    BimoduleComplex C1 = braid_complex(cat, lhs), C2 = braid_complex(cat, rhs);
    auto [M1, cert1] = gaussian_eliminate(C1);
    auto [M2, cert2] = gaussian_eliminate(C2);
    out.lhs_min = M1;
    out.rhs_min = M2;
    if (M1.is_zero() != M2.is_zero() || (!M1.is_zero() && (M1.lo != M2.lo || M1.hi() != M2.hi()))) {
        out.reason = "minimal complexes occupy different homological degrees";
        return out;
    }
    for (int i = M1.lo; i <= M1.hi() && !M1.is_zero(); ++i)
        if (sorted_term(M1, i) != sorted_term(M2, i)) {
            out.reason = "minimal complexes differ in homological degree " + std::to_string(i);
            return out;
        }

    std::vector<Unknown> unknowns;
    auto space = chain_map_space(M1, M2, unknowns);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::optional<ChainMap> alpha, beta;
    for (int attempt = 0; attempt < 8 && !beta; ++attempt) {
        std::vector<mpq_class> x(unknowns.size(), 0);
        for (const auto& v : space) {
            int c = coef(rng);
            if (c == 0) c = 1;
            for (const auto& [u, q] : v) x[u] += q * c;
        }
        ChainMap a = assemble(M1, M2, unknowns, x);
        auto b = right_inverse(M1, a, M2);
        if (!b) continue;
        ChainMap ba = compose(M2, *b, a);
        ChainMap id = ChainMap::identity(M2);
        bool ok = true;
        for (int i = M2.lo; i <= M2.hi() && !M2.is_zero(); ++i)
            if (!(ba.at(M2, M2, i) == id.at(M2, M2, i))) ok = false;
        if (!ok || !is_chain_map(M2, *b, M1)) continue;
        alpha = std::move(a);
        beta = std::move(b);
    }
    if (!beta) {
        out.reason = "no invertible chain map between the minimal complexes";
        return out;
    }
    HomotopyCertificate cert;
    cert.C = C1;
    cert.D = C2;
    cert.phi = compose(C1, compose(C1, cert1.phi, *alpha), cert2.psi);
    cert.psi = compose(C2, compose(C2, cert2.phi, *beta), cert1.psi);
    cert.hC = cert1.hC;
    cert.hD = cert2.hC;
    std::string why;
    ensure(cert.verify(&why), "braid certificate failed verification");
    out.equivalent = true;
    out.certificate = std::move(cert);
    return out;
}

}  // namespace hecat
