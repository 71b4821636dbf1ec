#include "hecat/rouquier/category.hpp"

#include <algorithm>

#include "hecat/algebra/linsolve.hpp"
#include "hecat/hecke/kl.hpp"

namespace hecat {

namespace {

// Flattens matrices to rational vectors in a shared coordinate system.
class Coordinates {
public:
    SparseVec flatten(const PolyMatrix& m) {
        SparseVec v;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                for (const auto& [mono, c] : m.at(i, j).terms()) {
                    auto key = std::make_pair(i * m.cols() + j, mono.bits());
                    auto it = index_.try_emplace(key, static_cast<int>(index_.size())).first;
                    v.emplace_back(it->second, c);
                }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }
    int size() const { return static_cast<int>(index_.size()); }

private:
    std::map<std::pair<int, uint64_t>, int> index_;
};

std::vector<PolyMatrix> independent(const std::vector<PolyMatrix>& ms) {
    Coordinates coords;
    std::vector<SparseVec> vs;
    for (const auto& m : ms) vs.push_back(coords.flatten(m));
    RowEchelon ech(coords.size());
    std::vector<PolyMatrix> out;
    for (size_t k = 0; k < ms.size(); ++k)
        if (!vs[k].empty() && ech.add_row(vs[k])) out.push_back(ms[k]);
    return out;
}

// Inverse of a square rational matrix; ensure()s invertibility.
std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> a) {
    const size_t n = a.size();
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        ensure(p < n, "singular pairing matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        mpq_class f = 1 / a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            mpq_class g = a[r][c];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= g * a[c][j];
                inv[r][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c = a;
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

}  // namespace

std::vector<std::pair<uint32_t, LaurentPoly>> kl_expand(const HeckeElem& h0) {
    HeckeElem h = h0.in(Var::v);
    const HeckeAlgebra& alg = h.algebra();
    const WeylGroup& W = alg.group();
    std::vector<std::pair<uint32_t, LaurentPoly>> out;
    while (!h.is_zero()) {
        uint32_t top = h.terms().begin()->first;
        for (const auto& [w, c] : h.terms())
            if (W.length(w) > W.length(top)) top = w;
        LaurentPoly m = h.coeff(top).shifted(-W.length(top));
        h -= alg.kl().kl_basis(W.elem(top)).scaled(m);
        out.emplace_back(top, m);
    }
    return out;
}

SoergelCategory::SoergelCategory(std::shared_ptr<const PolyRingCtx> ctx)
    : ctx_(std::move(ctx)), alg_(HeckeAlgebra::create(ctx_->group_ptr())) {}

std::shared_ptr<const SoergelCategory> SoergelCategory::create(std::shared_ptr<const PolyRingCtx> ctx) {
    return std::shared_ptr<const SoergelCategory>(new SoergelCategory(std::move(ctx)));
}

const std::vector<int>& SoergelCategory::rex(uint32_t w) const {
    std::lock_guard lock(mutex_);
    auto it = rex_.find(w);
    if (it == rex_.end()) it = rex_.emplace(w, group().reduced_word(w)).first;
    return it->second;
}

BimodulePtr SoergelCategory::bs(const std::vector<int>& word) const {
    std::lock_guard lock(mutex_);
    auto it = bs_.find(word);
    if (it == bs_.end()) it = bs_.emplace(word, bs_bimodule(ctx_, word)).first;
    return it->second;
}

BimodulePtr SoergelCategory::ambient(const Summand& s) const {
    std::lock_guard lock(mutex_);
    auto it = ambient_.find(s);
    if (it == ambient_.end())
        it = ambient_.emplace(s, std::make_shared<GradedBimodule>(bs(rex(s.w))->shifted(s.shift))).first;
    return it->second;
}

HeckeElem SoergelCategory::cls(const Summand& s) const {
    return alg_->kl().kl_basis(group().elem(s.w)).scaled(LaurentPoly::monomial(Var::v, s.shift));
}

std::string SoergelCategory::tag(const Summand& s) const {
    std::string t = s.w == 0 ? "R" : "B(" + word_to_string(rex(s.w)) + ")";
    if (s.shift) t += "<" + std::to_string(s.shift) + ">";
    return t;
}

const std::vector<PolyMatrix>& SoergelCategory::bs_hom(const std::vector<int>& u, const std::vector<int>& u2,
                                                       int d) const {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(u, u2, d);
    auto it = bs_hom_.find(key);
    if (it != bs_hom_.end()) return it->second;
    std::vector<PolyMatrix> ms;
    for (auto& f : hom_basis(bs(u), bs(u2), d)) ms.push_back(std::move(f.matrix));
    return bs_hom_.emplace(key, std::move(ms)).first->second;
}

const PolyMatrix& SoergelCategory::idempotent(uint32_t w) const {
    std::lock_guard lock(mutex_);
    auto it = idem_.find(w);
    if (it != idem_.end()) return it->second;
    const auto& word = rex(w);
    PolyMatrix id = PolyMatrix::identity(bs(word)->rank(), nvars());
    HeckeElem h = hecke_character(alg_, word);
    // remove the lower summands; what is left is B_w
    HeckeElem lower = h - alg_->kl().kl_basis(group().elem(w));
    PolyMatrix e = id;
    if (!lower.is_zero()) {
        Splitting sp = split(word, id, lower);
        for (size_t a = 0; a < sp.parts.size(); ++a) e -= sp.proj[a] * sp.incl[a];
    }
    ensure(!e.is_zero(), "indecomposable summand vanished");
    return idem_.emplace(w, std::move(e)).first->second;
}

bool SoergelCategory::scalar_of(uint32_t w, const PolyMatrix& m, mpq_class* c) const {
    const PolyMatrix& e = idempotent(w);
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j) {
            if (e.at(i, j).is_zero()) continue;
            const auto& [mono, coef] = e.at(i, j).leading();
            mpq_class r = m.at(i, j).coeff(mono) / coef;
            if (!(m == e.scaled(r))) return false;
            if (c) *c = r;
            return true;
        }
    return false;
}

const std::vector<PolyMatrix>& SoergelCategory::hom0(const Summand& a, const Summand& b) const {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(a, b);
    auto it = hom0_.find(key);
    if (it != hom0_.end()) return it->second;
    const PolyMatrix& ea = idempotent(a.w);
    const PolyMatrix& eb = idempotent(b.w);
    std::vector<PolyMatrix> ms;
    for (const auto& m : bs_hom(rex(a.w), rex(b.w), b.shift - a.shift)) ms.push_back(ea * m * eb);
    return hom0_.emplace(key, independent(ms)).first->second;
}

Splitting SoergelCategory::split(const std::vector<int>& word, const PolyMatrix& e, const HeckeElem& h) const {
    Splitting out;
    PolyMatrix rest = e;
    for (const auto& [w, mult] : kl_expand(h)) {
        const PolyMatrix& ew = idempotent(w);
        const auto& rw = rex(w);
        for (const auto& [k, n_z] : mult.terms()) {
            ensure(sgn(n_z) > 0, "negative multiplicity in a Soergel character");
            const int n = static_cast<int>(n_z.get_si());
            std::vector<PolyMatrix> into, from;
            for (const auto& m : bs_hom(rw, word, -k)) into.push_back(ew * m * rest);
            for (const auto& m : bs_hom(word, rw, k)) from.push_back(rest * m * ew);
            into = independent(into);
            from = independent(from);
            // pairing into_i then from_j = M_ij e_w
            std::vector<std::vector<mpq_class>> M(into.size(), std::vector<mpq_class>(from.size()));
            for (size_t i = 0; i < into.size(); ++i)
                for (size_t j = 0; j < from.size(); ++j) {
                    PolyMatrix p = into[i] * from[j];
                    mpq_class c = 0;
                    if (!p.is_zero()) ensure(scalar_of(w, p, &c), "degree-0 endomorphism is not a scalar");
                    M[i][j] = c;
                }
            std::vector<size_t> rows_sel, cols_sel;
            {
                RowEchelon ech(static_cast<int>(from.size()));
                for (size_t i = 0; i < into.size() && static_cast<int>(rows_sel.size()) < n; ++i) {
                    SparseVec r;
                    for (size_t j = 0; j < from.size(); ++j)
                        if (sgn(M[i][j])) r.emplace_back(static_cast<int>(j), M[i][j]);
                    if (!r.empty() && ech.add_row(r)) rows_sel.push_back(i);
                }
                RowEchelon ech2(static_cast<int>(rows_sel.size()));
                for (size_t j = 0; j < from.size() && static_cast<int>(cols_sel.size()) < n; ++j) {
                    SparseVec c;
                    for (size_t r = 0; r < rows_sel.size(); ++r)
                        if (sgn(M[rows_sel[r]][j])) c.emplace_back(static_cast<int>(r), M[rows_sel[r]][j]);
                    if (!c.empty() && ech2.add_row(c)) cols_sel.push_back(j);
                }
            }
            ensure(static_cast<int>(rows_sel.size()) == n && static_cast<int>(cols_sel.size()) == n,
                   "summand multiplicity differs from the character");
            std::vector<std::vector<mpq_class>> sub(n, std::vector<mpq_class>(n));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) sub[a][b] = M[rows_sel[a]][cols_sel[b]];
            auto inv = invert(sub);
            for (int a = 0; a < n; ++a) {
                PolyMatrix p(from[0].rows(), from[0].cols(), nvars());
                for (int b = 0; b < n; ++b)
                    if (sgn(inv[b][a])) p += from[cols_sel[b]].scaled(inv[b][a]);
                rest -= p * into[rows_sel[a]];
                out.parts.push_back({w, k});
                out.incl.push_back(into[rows_sel[a]]);
                out.proj.push_back(std::move(p));
            }
        }
    }
    return out;
}

const Splitting& SoergelCategory::split_product(uint32_t w1, uint32_t w2) const {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(w1, w2);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    const auto& u1 = rex(w1);
    const auto& u2 = rex(w2);
    const auto word = concat(u1, u2);
    const auto M = bs(u1), N = bs(u2);
    PolyMatrix e = tensor_matrix(*M, *M, idempotent(w1), *N, *N, idempotent(w2));
    HeckeElem h = alg_->kl().kl_basis(group().elem(w1)) * alg_->kl().kl_basis(group().elem(w2));
    Splitting sp;
    auto expansion = kl_expand(h);
    if (expansion.size() == 1 && expansion[0].second.is_one() && rex(expansion[0].first) == word &&
        e == idempotent(expansion[0].first)) {
        sp.parts.push_back({expansion[0].first, 0});
        sp.incl.push_back(e);
        sp.proj.push_back(e);
    } else {
        sp = split(word, e, h);
    }
    PolyMatrix total(e.rows(), e.cols(), nvars());
    for (size_t a = 0; a < sp.parts.size(); ++a) total += sp.proj[a] * sp.incl[a];
    ensure(total == e, "summands do not exhaust the product");
    return products_.emplace(key, std::move(sp)).first->second;
}

}  // namespace hecat
