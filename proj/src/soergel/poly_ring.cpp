#include "hecat/soergel/poly_ring.hpp"

#include <algorithm>

#include "hecat/algebra/linsolve.hpp"

namespace hecat {

namespace {

std::map<uint64_t, int> monomial_index(int n, int k) {
    std::map<uint64_t, int> idx;
    for (const Monomial& m : monomials_of_degree(n, k)) idx.emplace(m.bits(), static_cast<int>(idx.size()));
    return idx;
}

// Coordinates of a homogeneous polynomial in the monomial basis.
SparseVec coords(const MultiPoly& f, const std::map<uint64_t, int>& idx) {
    SparseVec v;
    for (const auto& [m, c] : f.terms()) v.emplace_back(idx.at(m.bits()), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

// Solves f = sum_j c_j cols[j] for homogeneous polynomials of one degree.
std::optional<std::vector<mpq_class>> solve_in_span(const std::vector<MultiPoly>& cols, const MultiPoly& f) {
    const int m = static_cast<int>(cols.size());
    std::map<uint64_t, SparseVec> rows;
    for (int j = 0; j < m; ++j)
        for (const auto& [mono, c] : cols[j].terms()) rows[mono.bits()].emplace_back(j, c);
    for (const auto& [mono, c] : f.terms()) rows[mono.bits()].emplace_back(m, c);
    RowEchelon ech(m + 1);
    for (auto& [bits, row] : rows) ech.add_row(row);
    return ech.solve_augmented(m);
}

}  // namespace

std::shared_ptr<const PolyRingCtx> PolyRingCtx::create(const CartanType& t) {
    if (!t.is_type_a() || t.factors().size() != 1)
        throw Error(Errc::UnsupportedContext, "the polynomial realization needs an irreducible type A, got " + t.str());
    if (t.rank() + 1 > Monomial::kMaxVars) throw Error(Errc::UnsupportedContext, "too many variables");
    auto W = WeylGroup::build(t);
    return std::shared_ptr<const PolyRingCtx>(new PolyRingCtx(W, t.rank() + 1));
}

PolyRingCtx::PolyRingCtx(std::shared_ptr<const WeylGroup> W, int n) : W_(std::move(W)), n_(n) {
    perms_.resize(W_->size());
    for (uint32_t w = 0; w < W_->size(); ++w) {
        std::vector<int> p(n_);
        for (int j = 0; j < n_; ++j) p[j] = j;
        auto word = W_->reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            for (int& j : p)
                if (j == *it)
                    j = *it + 1;
                else if (j == *it + 1)
                    j = *it;
        perms_[w] = p;
    }
}

MultiPoly PolyRingCtx::weyl_act(uint32_t w, const MultiPoly& f) const { return f.permute_vars(perms_.at(w)); }

MultiPoly PolyRingCtx::demazure(int s, const MultiPoly& f) const {
    return (f - f.swap_vars(s, s + 1)).div_exact(alpha(s));
}

std::vector<std::vector<int>> PolyRingCtx::blocks(ParabolicSubset I) const {
    std::vector<std::vector<int>> out{{0}};
    for (int i = 1; i < n_; ++i) {
        if (I.contains(i - 1))
            out.back().push_back(i);
        else
            out.push_back({i});
    }
    return out;
}

const std::vector<MultiPoly>& PolyRingCtx::invariant_gens(ParabolicSubset I) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = gens_[I.mask];
    if (!slot) {
        slot = std::make_unique<std::vector<MultiPoly>>();
        for (const auto& b : blocks(I)) {
            // e_k by the recursion prod (1 + x_i t)
            std::vector<MultiPoly> e(b.size() + 1, zero());
            e[0] = one();
            for (int i : b)
                for (size_t k = b.size(); k >= 1; --k) e[k] += e[k - 1] * x(i);
            for (size_t k = 1; k <= b.size(); ++k) slot->push_back(e[k]);
        }
    }
    return *slot;
}

std::vector<int> PolyRingCtx::gen_degrees(ParabolicSubset I) const {
    std::vector<int> d;
    for (const auto& b : blocks(I))
        for (size_t k = 1; k <= b.size(); ++k) d.push_back(static_cast<int>(k));
    return d;
}

bool PolyRingCtx::is_invariant(ParabolicSubset I, const MultiPoly& f) const {
    for (int s = 0; s + 1 < n_; ++s)
        if (I.contains(s) && f.swap_vars(s, s + 1) != f) return false;
    return true;
}

std::vector<std::vector<int>> PolyRingCtx::gen_monomials(ParabolicSubset I, int k) const {
    const std::vector<int> deg = gen_degrees(I);
    std::vector<std::vector<int>> out;
    std::vector<int> e(deg.size(), 0);
    // exponent vectors in decreasing lexicographic order
    auto rec = [&](auto&& self, size_t j, int left) -> void {
        if (j == deg.size()) {
            if (left == 0) out.push_back(e);
            return;
        }
        for (int a = left / deg[j]; a >= 0; --a) {
            e[j] = a;
            self(self, j + 1, left - a * deg[j]);
        }
        e[j] = 0;
    };
    if (k >= 0) rec(rec, 0, k);
    return out;
}

MultiPoly PolyRingCtx::eval_gen_monomial(ParabolicSubset I, const std::vector<int>& e) const {
    const auto& g = invariant_gens(I);
    MultiPoly r = one();
    for (size_t j = 0; j < e.size(); ++j)
        for (int a = 0; a < e[j]; ++a) r = r * g[j];
    return r;
}

GenPoly PolyRingCtx::express(ParabolicSubset I, const MultiPoly& f) const {
    GenPoly out;
    if (I.mask == 0) {
        for (const auto& [m, c] : f.terms()) out.emplace_back(m.exponents(n_), c);
        return out;
    }
    const int top = f.total_degree();
    for (int k = 0; k <= top; ++k) {
        MultiPoly fk = f.component(k);
        if (fk.is_zero()) continue;
        auto monos = gen_monomials(I, k);
        std::vector<MultiPoly> cols;
        for (const auto& e : monos) cols.push_back(eval_gen_monomial(I, e));
        auto sol = solve_in_span(cols, fk);
        ensure(sol.has_value(), "polynomial is not invariant under the parabolic subgroup");
        for (size_t j = 0; j < monos.size(); ++j)
            if (sgn((*sol)[j]) != 0) out.emplace_back(monos[j], (*sol)[j]);
    }
    return out;
}

const std::vector<MultiPoly>& PolyRingCtx::relative_basis(ParabolicSubset R, ParabolicSubset S) const {
    if ((R.mask & ~S.mask) != 0) throw Error(Errc::InvalidChain, "relative basis needs R inside S");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = rel_.find({R.mask, S.mask});
        if (it != rel_.end()) return *it->second;
    }
    // expected number of basis elements in each degree: pi_S / pi_R
    LaurentPoly ratio = div_exact(W_->poincare(S), W_->poincare(R));
    auto basis = std::make_unique<std::vector<MultiPoly>>();
    std::vector<int> bdeg;
    const int top = ratio.degree();
    for (int k = 0; k <= top; ++k) {
        const long want = ratio.coeff(k).get_si();
        if (want == 0) continue;
        auto idx = monomial_index(n_, k);
        RowEchelon span(static_cast<int>(idx.size()));
        for (size_t c = 0; c < basis->size(); ++c)
            for (const auto& e : gen_monomials(S, k - bdeg[c]))
                span.add_row(coords(eval_gen_monomial(S, e) * (*basis)[c], idx));
        long got = 0;
        for (const auto& e : gen_monomials(R, k)) {
            if (got == want) break;
            MultiPoly cand = eval_gen_monomial(R, e);
            if (!span.add_row(coords(cand, idx))) continue;
            basis->push_back(cand);
            bdeg.push_back(k);
            ++got;
        }
        ensure(got == want, "relative basis search fell short");
    }
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = rel_[{R.mask, S.mask}];
    if (!slot) slot = std::move(basis);
    return *slot;
}

std::vector<MultiPoly> PolyRingCtx::decompose(ParabolicSubset R, ParabolicSubset S, const MultiPoly& f) const {
    const auto& basis = relative_basis(R, S);
    std::vector<MultiPoly> out(basis.size(), zero());
    const int top = f.total_degree();
    for (int k = 0; k <= top; ++k) {
        MultiPoly fk = f.component(k);
        if (fk.is_zero()) continue;
        std::vector<MultiPoly> cols;
        std::vector<std::pair<size_t, MultiPoly>> owner;
        for (size_t c = 0; c < basis.size(); ++c) {
            const int d = basis[c].total_degree();
            for (const auto& e : gen_monomials(S, k - d)) {
                MultiPoly s = eval_gen_monomial(S, e);
                cols.push_back(s * basis[c]);
                owner.emplace_back(c, s);
            }
        }
        auto sol = solve_in_span(cols, fk);
        ensure(sol.has_value(), "element outside the invariant ring");
        for (size_t j = 0; j < cols.size(); ++j)
            if (sgn((*sol)[j]) != 0) out[owner[j].first] += owner[j].second * (*sol)[j];
    }
    return out;
}

LaurentPoly PolyRingCtx::coinvariant_dimension() const {
    const auto& e = invariant_gens(ParabolicSubset{(1u << (n_ - 1)) - 1});
    LaurentPoly out(Var::v);
    const int top = n_ * (n_ - 1) / 2;
    for (int k = 0; k <= top + 1; ++k) {
        auto idx = monomial_index(n_, k);
        RowEchelon ideal(static_cast<int>(idx.size()));
        for (int j = 1; j <= n_ && j <= k; ++j)
            for (const Monomial& m : monomials_of_degree(n_, k - j))
                ideal.add_row(coords(e[j - 1] * MultiPoly::monomial(n_, m), idx));
        const long dim = static_cast<long>(idx.size()) - ideal.rank();
        if (dim) out.add_term(2 * k, dim);
    }
    return out;
}

LaurentPoly coinvariant_poincare(const CartanType& t) {
    auto ctx = PolyRingCtx::create(t);
    const WeylGroup& W = ctx->group();
    LaurentPoly expect(Var::v);
    for (uint32_t w = 0; w < W.size(); ++w) expect.add_term(2 * W.length(w), 1);
    ensure(ctx->coinvariant_dimension() == expect, "coinvariant dimension differs from the length generating function");
    return expect;
}

}  // namespace hecat
