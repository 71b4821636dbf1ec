#include "hecat/soergel/bimodule.hpp"

#include <sstream>

namespace hecat {

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), a_(static_cast<size_t>(rows) * cols, MultiPoly(nvars)) {}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
    PolyMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly(nvars, 1);
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_scalar_identity(mpq_class* c) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    const MultiPoly& d = at(0, 0);
    if (!d.is_constant() || d.is_zero()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i == j ? at(i, j) != d : !at(i, j).is_zero()) return false;
    if (c) *c = d.constant_term();
    return true;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& b) {
    ensure(rows_ == b.rows_ && cols_ == b.cols_, "matrix shapes differ");
    for (size_t k = 0; k < a_.size(); ++k)
        if (!b.a_[k].is_zero()) a_[k] += b.a_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& b) {
    ensure(rows_ == b.rows_ && cols_ == b.cols_, "matrix shapes differ");
    for (size_t k = 0; k < a_.size(); ++k)
        if (!b.a_[k].is_zero()) a_[k] -= b.a_[k];
    return *this;
}

PolyMatrix PolyMatrix::scaled(const mpq_class& c) const {
    PolyMatrix m = *this;
    for (auto& p : m.a_) p *= c;
    return m;
}

PolyMatrix PolyMatrix::block(int r0, int c0, int nr, int nc) const {
    PolyMatrix m(nr, nc, nvars_);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

void PolyMatrix::set_block(int r0, int c0, const PolyMatrix& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    ensure(a.cols_ == b.rows_, "matrix shapes do not compose");
    PolyMatrix m(a.rows_, b.cols_, a.nvars_ ? a.nvars_ : b.nvars_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const MultiPoly& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const MultiPoly& y = b.at(k, j);
                if (!y.is_zero()) m.at(i, j) += x * y;
            }
        }
    return m;
}

nlohmann::json PolyMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

LaurentPoly GradedBimodule::graded_rank() const {
    LaurentPoly r(Var::v);
    for (int d : degrees) r.add_term(d, 1);
    return r;
}

PolyMatrix GradedBimodule::right_act(const MultiPoly& f) const {
    PolyMatrix out(rank(), rank(), nvars());
    if (f.is_zero()) return out;
    // powers of each generator matrix, built on demand
    std::vector<std::vector<PolyMatrix>> pw(action.size());
    for (const auto& [e, c] : ctx->express(right, f)) {
        PolyMatrix term = PolyMatrix::identity(rank(), nvars());
        bool first = true;
        for (size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            auto& p = pw[k];
            if (p.empty()) p.push_back(action[k]);
            while (static_cast<int>(p.size()) < e[k]) p.push_back(p.back() * action[k]);
            term = first ? p[e[k] - 1] : term * p[e[k] - 1];
            first = false;
        }
        out += term.scaled(c);
    }
    return out;
}

GradedBimodule GradedBimodule::shifted(int k) const {
    GradedBimodule m = *this;
    for (int& d : m.degrees) d -= k;
    if (k) m.tag = tag + "<" + std::to_string(k) + ">";
    return m;
}

void GradedBimodule::validate() const {
    const auto gdeg = ctx->gen_degrees(right);
    if (action.size() != gdeg.size()) throw Error(Errc::ValidationFailed, tag + ": wrong number of action matrices");
    for (size_t k = 0; k < action.size(); ++k) {
        const PolyMatrix& A = action[k];
        if (A.rows() != rank() || A.cols() != rank()) throw Error(Errc::ValidationFailed, tag + ": bad matrix shape");
        for (int a = 0; a < rank(); ++a)
            for (int b = 0; b < rank(); ++b) {
                const MultiPoly& p = A.at(a, b);
                if (p.is_zero()) continue;
                const int want = degrees[a] + 2 * gdeg[k] - degrees[b];
                if (!p.is_homogeneous() || 2 * p.total_degree() != want)
                    throw Error(Errc::ValidationFailed, tag + ": inhomogeneous action entry");
                if (!ctx->is_invariant(left, p))
                    throw Error(Errc::ValidationFailed, tag + ": left coefficient outside the left ring");
            }
        for (size_t l = 0; l < k; ++l)
            if (A * action[l] != action[l] * A)
                throw Error(Errc::ValidationFailed, tag + ": right actions do not commute");
    }
}

nlohmann::json GradedBimodule::to_json() const {
    nlohmann::json j;
    j["tag"] = tag;
    j["left"] = left.str();
    j["right"] = right.str();
    j["degrees"] = degrees;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : ctx->invariant_gens(right)) gens.push_back(g.str());
    j["right_generators"] = gens;
    nlohmann::json acts = nlohmann::json::array();
    for (const auto& a : action) acts.push_back(a.to_json());
    j["action"] = acts;
    return j;
}

BimodulePtr unit_bimodule(std::shared_ptr<const PolyRingCtx> ctx, ParabolicSubset I) {
    auto m = std::make_shared<GradedBimodule>();
    m->ctx = ctx;
    m->left = m->right = I;
    m->degrees = {0};
    for (const auto& g : ctx->invariant_gens(I)) {
        PolyMatrix a(1, 1, ctx->nvars());
        a.at(0, 0) = g;
        m->action.push_back(a);
    }
    m->tag = I.mask ? "A" + I.str() : "R";
    return m;
}

BimodulePtr restriction_bimodule(std::shared_ptr<const PolyRingCtx> ctx, ParabolicSubset J, ParabolicSubset I) {
    const auto& basis = ctx->relative_basis(I, J);
    auto m = std::make_shared<GradedBimodule>();
    m->ctx = ctx;
    m->left = J;
    m->right = I;
    for (const auto& b : basis) m->degrees.push_back(2 * b.total_degree());
    const int r = static_cast<int>(basis.size());
    for (const auto& g : ctx->invariant_gens(I)) {
        PolyMatrix a(r, r, ctx->nvars());
        for (int i = 0; i < r; ++i) {
            auto coeffs = ctx->decompose(I, J, basis[i] * g);
            for (int j = 0; j < r; ++j) a.at(i, j) = coeffs[j];
        }
        m->action.push_back(a);
    }
    m->tag = "Res" + J.str() + I.str();
    return m;
}

BimodulePtr induction_bimodule(std::shared_ptr<const PolyRingCtx> ctx, ParabolicSubset I, ParabolicSubset J) {
    if ((I.mask & ~J.mask) != 0) throw Error(Errc::InvalidChain, "induction needs I inside J");
    auto m = std::make_shared<GradedBimodule>();
    m->ctx = ctx;
    m->left = I;
    m->right = J;
    m->degrees = {0};
    for (const auto& g : ctx->invariant_gens(J)) {
        PolyMatrix a(1, 1, ctx->nvars());
        a.at(0, 0) = g;
        m->action.push_back(a);
    }
    m->tag = "Ind" + I.str() + J.str();
    return m;
}

BimodulePtr tensor(const GradedBimodule& M, const GradedBimodule& N) {
    if (M.ctx != N.ctx || M.right != N.left)
        throw Error(Errc::UnsupportedContext, "tensor product over different rings");
    auto T = std::make_shared<GradedBimodule>();
    T->ctx = M.ctx;
    T->left = M.left;
    T->right = N.right;
    const int rm = M.rank(), rn = N.rank(), r = rm * rn;
    for (int a = 0; a < rm; ++a)
        for (int b = 0; b < rn; ++b) T->degrees.push_back(M.degrees[a] + N.degrees[b]);
    for (const auto& G : N.action) {
        PolyMatrix A(r, r, M.nvars());
        for (int b = 0; b < rn; ++b)
            for (int c = 0; c < rn; ++c) {
                if (G.at(b, c).is_zero()) continue;
                PolyMatrix act = M.right_act(G.at(b, c));
                for (int a = 0; a < rm; ++a)
                    for (int a2 = 0; a2 < rm; ++a2) A.at(a * rn + b, a2 * rn + c) = act.at(a, a2);
            }
        T->action.push_back(A);
    }
    T->tag = M.tag + "." + N.tag;
    return T;
}

namespace {

BimodulePtr chain_product(std::shared_ptr<const PolyRingCtx> ctx, const std::vector<ParabolicSubset>& chain) {
    auto sub = [](ParabolicSubset a, ParabolicSubset b) { return (a.mask & ~b.mask) == 0; };
    const size_t len = chain.size();
    if (len < 3 || len % 2 != 1) throw Error(Errc::InvalidChain, "a chain has the shape P, R1, S1, ..., Rn, Q");
    const uint32_t all = (1u << ctx->group().rank()) - 1;
    for (const auto& p : chain)
        if (p.mask & ~all) throw Error(Errc::InvalidChain, "subset " + p.str() + " outside the simple reflections");
    // even positions (after P) hold the R(i), odd positions the S(i) and the ends
    for (size_t i = 1; i + 1 < len; i += 2) {
        if (!sub(chain[i], chain[i - 1]) || !sub(chain[i], chain[i + 1]))
            throw Error(Errc::InvalidChain, "R(i) must be contained in both neighbours");
    }
    BimodulePtr M = restriction_bimodule(ctx, chain[0], chain[1]);
    for (size_t i = 1; i + 1 < len; i += 2) {
        M = tensor(*M, *induction_bimodule(ctx, chain[i], chain[i + 1]));
        if (i + 2 < len) M = tensor(*M, *restriction_bimodule(ctx, chain[i + 1], chain[i + 2]));
    }
    return M;
}

}  // namespace

BimodulePtr singular_bimodule(std::shared_ptr<const PolyRingCtx> ctx, const std::vector<ParabolicSubset>& chain) {
    auto M = chain_product(ctx, chain);
    auto out = std::make_shared<GradedBimodule>(*M);
    std::ostringstream t;
    t << "S(";
    for (size_t i = 0; i < chain.size(); ++i) t << (i ? "," : "") << chain[i].str();
    t << ")";
    out->tag = t.str();
    return out;
}

BimodulePtr bs_bimodule(std::shared_ptr<const PolyRingCtx> ctx, const std::vector<int>& word) {
    const int rank = ctx->group().rank();
    std::vector<ParabolicSubset> chain{ParabolicSubset{}, ParabolicSubset{}};
    for (int s : word) {
        if (s < 0 || s >= rank) throw Error(Errc::UnsupportedContext, "simple reflection out of range");
        chain.push_back(ParabolicSubset{1u << s});
        chain.push_back(ParabolicSubset{});
    }
    chain.push_back(ParabolicSubset{});
    auto M = word.empty() ? unit_bimodule(ctx, ParabolicSubset{}) : chain_product(ctx, chain);
    auto out = std::make_shared<GradedBimodule>(M->shifted(static_cast<int>(word.size())));
    out->tag = word.empty() ? "R" : "B(" + word_to_string(word) + ")";
    return out;
}

BimoduleMorphism BimoduleMorphism::zero(BimodulePtr s, BimodulePtr t, int degree) {
    BimoduleMorphism f;
    f.matrix = PolyMatrix(s->rank(), t->rank(), s->nvars());
    f.source = std::move(s);
    f.target = std::move(t);
    f.degree = degree;
    return f;
}

BimoduleMorphism BimoduleMorphism::identity(BimodulePtr m) {
    BimoduleMorphism f;
    f.matrix = PolyMatrix::identity(m->rank(), m->nvars());
    f.source = m;
    f.target = m;
    return f;
}

bool BimoduleMorphism::is_valid() const {
    const auto& S = *source;
    const auto& T = *target;
    if (S.left != T.left || S.right != T.right) return false;
    if (matrix.rows() != S.rank() || matrix.cols() != T.rank()) return false;
    for (int a = 0; a < S.rank(); ++a)
        for (int b = 0; b < T.rank(); ++b) {
            const MultiPoly& p = matrix.at(a, b);
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() || 2 * p.total_degree() != S.degrees[a] + degree - T.degrees[b]) return false;
        }
    for (size_t k = 0; k < S.action.size(); ++k)
        if (S.action[k] * matrix != matrix * T.action[k]) return false;
    return true;
}

BimoduleMorphism compose(const BimoduleMorphism& f, const BimoduleMorphism& g) {
    ensure(f.target->rank() == g.source->rank(), "morphisms do not compose");
    BimoduleMorphism h;
    h.source = f.source;
    h.target = g.target;
    h.matrix = f.matrix * g.matrix;
    h.degree = f.degree + g.degree;
    return h;
}

PolyMatrix tensor_matrix(const GradedBimodule& M, const GradedBimodule& Mt, const PolyMatrix& f,
                         const GradedBimodule& N, const GradedBimodule& Nt, const PolyMatrix& g) {
    const int rm = M.rank(), rmt = Mt.rank(), rn = N.rank(), rnt = Nt.rank();
    // (f (x) id) then (id (x) g); g's entries move across the tensor sign
    PolyMatrix left(rm * rn, rmt * rn, M.nvars());
    for (int a = 0; a < rm; ++a)
        for (int a2 = 0; a2 < rmt; ++a2)
            if (!f.at(a, a2).is_zero())
                for (int b = 0; b < rn; ++b) left.at(a * rn + b, a2 * rn + b) = f.at(a, a2);
    PolyMatrix right(rmt * rn, rmt * rnt, M.nvars());
    for (int b = 0; b < rn; ++b)
        for (int b2 = 0; b2 < rnt; ++b2) {
            if (g.at(b, b2).is_zero()) continue;
            PolyMatrix act = Mt.right_act(g.at(b, b2));
            for (int a = 0; a < rmt; ++a)
                for (int a2 = 0; a2 < rmt; ++a2)
                    if (!act.at(a, a2).is_zero()) right.at(a * rn + b, a2 * rnt + b2) = act.at(a, a2);
        }
    return left * right;
}

}  // namespace hecat
