#include "hecat/schur/schur.hpp"

#include <sstream>

#include "hecat/hecke/kl.hpp"

namespace hecat {

SchurElem::SchurElem(std::shared_ptr<const HeckeAlgebra> alg, ParabolicSubset I, ParabolicSubset J, Var form)
    : alg_(std::move(alg)), I_(I), J_(J), form_(form) {}

SchurElem SchurElem::basis(std::shared_ptr<const HeckeAlgebra> alg, const DoubleCoset& z, Var form) {
    alg->group().check_same(z.minrep);
    SchurElem e(alg, z.left, z.right, form);
    e.add(alg->group().coset_min(z.minrep.index(), z.left, z.right), LaurentPoly(form, 1));
    return e;
}

LaurentPoly SchurElem::coeff(uint32_t minrep) const {
    auto it = terms_.find(minrep);
    return it == terms_.end() ? LaurentPoly(form_) : it->second;
}

void SchurElem::add(uint32_t minrep, const LaurentPoly& c) {
    if (c.is_zero()) return;
    ensure(alg_->group().coset_min(minrep, I_, J_) == minrep, "Schur key is not a minimal coset representative");
    if (c.var() != form_) throw Error(Errc::VariableMismatch, "coefficient form differs from element form");
    auto [it, fresh] = terms_.try_emplace(minrep, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SchurElem& SchurElem::operator+=(const SchurElem& b) {
    if (b.I_ != I_ || b.J_ != J_) throw Error(Errc::MiddleMismatch, "adding elements of different (I,J) modules");
    for (const auto& [z, c] : b.terms_) add(z, c);
    return *this;
}

SchurElem SchurElem::scaled(const LaurentPoly& c) const {
    SchurElem r(alg_, I_, J_, form_);
    for (const auto& [z, x] : terms_) r.add(z, x * c);
    return r;
}

SchurElem SchurElem::in(Var form) const {
    SchurElem r(alg_, I_, J_, form);
    for (const auto& [z, x] : terms_) r.add(z, x.in(form));
    return r;
}

std::string SchurElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [z, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ")*T[" << alg_->group().word_str(z) << ']';
    }
    return os.str();
}

nlohmann::json SchurElem::to_json() const {
    nlohmann::json j;
    j["left"] = I_.str();
    j["right"] = J_.str();
    j["form"] = std::string(1, var_char(form_));
    j["terms"] = nlohmann::json::array();
    for (const auto& [z, c] : terms_) j["terms"].push_back({{"coset", alg_->group().word_str(z)}, {"c", c.to_json()}});
    return j;
}

HeckeElem embed(const SchurElem& a) {
    const WeylGroup& g = a.algebra().group();
    auto t = g.coset_table(a.left(), a.right());
    HeckeElem h = a.algebra().zero(a.form());
    for (const auto& [z, c] : a.terms())
        for (uint32_t w : t->members[t->coset_of[z]]) h.add(w, c);
    return h;
}

SchurElem project(const HeckeElem& h, ParabolicSubset I, ParabolicSubset J) {
    const WeylGroup& g = h.algebra().group();
    auto t = g.coset_table(I, J);
    SchurElem r(h.algebra_ptr(), I, J, h.form());
    for (size_t k = 0; k < t->minreps.size(); ++k) {
        LaurentPoly c = h.coeff(t->minreps[k]);
        for (uint32_t w : t->members[k])
            ensure(h.coeff(w) == c, "element is not invariant under the parabolic subgroups");
        r.add(t->minreps[k], c);
    }
    return r;
}

SchurElem convolve(const SchurElem& f, const SchurElem& g) {
    if (&f.algebra().group() != &g.algebra().group()) throw Error(Errc::GroupMismatch, "convolving across groups");
    if (f.right() != g.left())
        throw Error(Errc::MiddleMismatch, "middle parabolics differ: " + f.right().str() + " vs " + g.left().str());
    if (f.form() != g.form()) throw Error(Errc::VariableMismatch, "q-form and v-form Schur elements");
    HeckeElem prod = embed(f) * embed(g);
    LaurentPoly pi = f.algebra().group().poincare(f.right()).in(f.form());
    HeckeElem quo = f.algebra().zero(f.form());
    for (const auto& [w, c] : prod.terms()) quo.add(w, div_exact(c, pi));
    return project(quo, f.left(), g.right());
}

SchurElem schur_dual(const SchurElem& f) { return project(embed(f).bar(), f.left(), f.right()); }

SchurElem k0_class(std::shared_ptr<const HeckeAlgebra> alg, const DoubleCoset& z, int twist) {
    return SchurElem::basis(alg, z).scaled(LaurentPoly::monomial(Var::q, twist));
}

SchurElem parabolic_kl(std::shared_ptr<const HeckeAlgebra> alg, const DoubleCoset& z) {
    const WeylGroup& g = alg->group();
    auto t = g.coset_table(z.left, z.right);
    uint32_t wmax = t->maxreps[t->coset_of[z.minrep.index()]];
    return project(alg->kl().kl_basis(g.elem(wmax)), z.left, z.right);
}

nlohmann::json StructureTable::to_json() const {
    nlohmann::json j;
    j["I"] = I.str();
    j["J"] = J.str();
    j["K"] = K.str();
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, prod] : products) {
        const WeylGroup& g = prod.algebra().group();
        for (const auto& [z3, c] : prod.terms())
            j["entries"].push_back({{"z1", g.word_str(key.first)},
                                    {"z2", g.word_str(key.second)},
                                    {"z3", g.word_str(z3)},
                                    {"c", c.to_json()}});
    }
    return j;
}

const StructureTable& SchurAlgebroid::table(ParabolicSubset I, ParabolicSubset J, ParabolicSubset K) const {
    auto key = std::make_tuple(I.mask, J.mask, K.mask);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return *it->second;
    }
    auto t = std::make_unique<StructureTable>();
    t->I = I;
    t->J = J;
    t->K = K;
    const WeylGroup& g = alg_->group();
    for (const auto& a : g.double_cosets(I, J))
        for (const auto& b : g.double_cosets(J, K))
            t->products.emplace(std::make_pair(a.minrep.index(), b.minrep.index()),
                                convolve(SchurElem::basis(alg_, a), SchurElem::basis(alg_, b)));
    std::lock_guard<std::mutex> lock(mutex_);
    return *cache_.emplace(key, std::move(t)).first->second;
}

}  // namespace hecat
