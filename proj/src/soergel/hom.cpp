#include "hecat/soergel/hom.hpp"

#include <tuple>

#include "hecat/algebra/linsolve.hpp"
#include "hecat/hecke/kl.hpp"

namespace hecat {

int hom_required_cutoff(const GradedBimodule& M, const GradedBimodule& N, int degree) {
    int need = 0;
    for (int a : M.degrees)
        for (int b : N.degrees) need = std::max(need, a + degree - b);
    return need;
}

namespace {

struct Unknown {
    int a, b;
    MultiPoly value;
};

int hom_dimension(const GradedBimodule& M, const GradedBimodule& N, int degree, int cutoff,
                  std::vector<Unknown>* unknowns_out, std::vector<SparseVec>* null_out) {
    const auto& ctx = *M.ctx;
    std::vector<Unknown> unknowns;
    for (int a = 0; a < M.rank(); ++a)
        for (int b = 0; b < N.rank(); ++b) {
            const int k = M.degrees[a] + degree - N.degrees[b];
            if (k < 0 || k % 2 != 0 || k > cutoff) continue;
            for (const auto& e : ctx.gen_monomials(M.left, k / 2))
                unknowns.push_back({a, b, ctx.eval_gen_monomial(M.left, e)});
        }
    // Equation (g, a, c, monomial): (M_g Phi - Phi N_g)[a][c] = 0
    using Key = std::tuple<size_t, int, int, uint64_t>;
    std::map<Key, std::map<int, mpq_class>> eqs;
    for (size_t u = 0; u < unknowns.size(); ++u) {
        const Unknown& x = unknowns[u];
        for (size_t g = 0; g < M.action.size(); ++g) {
            const PolyMatrix& Mg = M.action[g];
            const PolyMatrix& Ng = N.action[g];
            // Phi = value * E(x.a, x.b)
            for (int a = 0; a < M.rank(); ++a) {
                const MultiPoly& m = Mg.at(a, x.a);
                if (m.is_zero()) continue;
                const MultiPoly prod = m * x.value;
                for (const auto& [mono, c] : prod.terms()) eqs[{g, a, x.b, mono.bits()}][u] += c;
            }
            for (int c2 = 0; c2 < N.rank(); ++c2) {
                const MultiPoly& n = Ng.at(x.b, c2);
                if (n.is_zero()) continue;
                const MultiPoly prod = x.value * n;
                for (const auto& [mono, c] : prod.terms()) eqs[{g, x.a, c2, mono.bits()}][u] -= c;
            }
        }
    }
    RowEchelon ech(static_cast<int>(unknowns.size()));
    for (auto& [key, row] : eqs) {
        SparseVec v;
        for (auto& [col, c] : row)
            if (sgn(c) != 0) v.emplace_back(col, c);
        if (!v.empty()) ech.add_row(std::move(v));
    }
    const int dim = static_cast<int>(unknowns.size()) - ech.rank();
    if (null_out) *null_out = ech.nullspace();
    if (unknowns_out) *unknowns_out = std::move(unknowns);
    return dim;
}

std::vector<BimoduleMorphism> assemble(BimodulePtr M, BimodulePtr N, int degree, const std::vector<Unknown>& unknowns,
                                       const std::vector<SparseVec>& null) {
    std::vector<BimoduleMorphism> out;
    for (const SparseVec& v : null) {
        BimoduleMorphism f = BimoduleMorphism::zero(M, N, degree);
        for (const auto& [u, c] : v) f.matrix.at(unknowns[u].a, unknowns[u].b) += unknowns[u].value * c;
        out.push_back(std::move(f));
    }
    return out;
}

void check_rings(const GradedBimodule& M, const GradedBimodule& N) {
    if (M.ctx != N.ctx || M.left != N.left || M.right != N.right)
        throw Error(Errc::UnsupportedContext, "Hom between bimodules over different rings");
}

}  // namespace

HomSpace hom_space(BimodulePtr M, BimodulePtr N, int degree, int cutoff) {
    check_rings(*M, *N);
    const int need = hom_required_cutoff(*M, *N, degree);
    if (cutoff < need)
        throw Error(Errc::CutoffTooSmall,
                    "cutoff " + std::to_string(cutoff) + " truncates entries of degree up to " + std::to_string(need));
    HomSpace h;
    h.degree = degree;
    h.cutoff = cutoff;
    std::vector<Unknown> unknowns;
    std::vector<SparseVec> null;
    h.dimension = hom_dimension(*M, *N, degree, cutoff, &unknowns, &null);
    for (int extra : {2, 4})
        if (hom_dimension(*M, *N, degree, cutoff + extra, nullptr, nullptr) != h.dimension)
            throw Error(Errc::CutoffTooSmall, "Hom dimension changes when the cutoff grows");
    h.basis = assemble(M, N, degree, unknowns, null);
    for (const auto& f : h.basis) ensure(f.is_valid(), "Hom solve produced a non-morphism");
    return h;
}

std::vector<BimoduleMorphism> hom_basis(BimodulePtr M, BimodulePtr N, int degree) {
    check_rings(*M, *N);
    std::vector<Unknown> unknowns;
    std::vector<SparseVec> null;
    hom_dimension(*M, *N, degree, hom_required_cutoff(*M, *N, degree), &unknowns, &null);
    return assemble(M, N, degree, unknowns, null);
}

HeckeElem hecke_character(std::shared_ptr<const HeckeAlgebra> alg, const std::vector<int>& word) {
    HeckeElem h = alg->one(Var::v);
    for (int s : word) {
        if (s < 0 || s >= alg->group().rank()) throw Error(Errc::UnsupportedContext, "simple reflection out of range");
        h = h * alg->kl().kl_basis(alg->group().simple(s));
    }
    return h;
}

LaurentPoly character_rank(const HeckeElem& h) {
    const WeylGroup& W = h.algebra().group();
    LaurentPoly r(Var::v);
    HeckeElem hv = h.in(Var::v);
    for (const auto& [w, c] : hv.terms()) r += c.in(Var::v).shifted(-2 * W.length(w));
    return r.bar();
}

}  // namespace hecat
