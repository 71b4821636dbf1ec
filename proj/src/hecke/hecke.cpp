#include "hecat/hecke/hecke.hpp"

#include <sstream>

#include "hecat/hecke/kl.hpp"

namespace hecat {

HeckeElem::HeckeElem(std::shared_ptr<const HeckeAlgebra> alg, Var form) : alg_(std::move(alg)), form_(form) {}

LaurentPoly HeckeElem::coeff(uint32_t w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly(form_) : it->second;
}

LaurentPoly HeckeElem::coeff(const WeylElem& w) const {
    alg_->group().check_same(w);
    return coeff(w.index());
}

void HeckeElem::add(uint32_t w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (c.var() != form_) throw Error(Errc::VariableMismatch, "coefficient form differs from element form");
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void HeckeElem::check(const HeckeElem& b) const {
    if (&alg_->group() != &b.alg_->group()) throw Error(Errc::GroupMismatch, "Hecke elements of different groups");
    if (form_ != b.form_) throw Error(Errc::VariableMismatch, "q-form and v-form Hecke elements");
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& b) {
    check(b);
    for (const auto& [w, c] : b.terms_) add(w, c);
    return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& b) {
    check(b);
    for (const auto& [w, c] : b.terms_) add(w, -c);
    return *this;
}

HeckeElem HeckeElem::scaled(const LaurentPoly& c) const {
    HeckeElem r(alg_, form_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.add(w, x * c);
    return r;
}

HeckeElem HeckeElem::operator-() const {
    HeckeElem r(*this);
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const HeckeElem& a, const HeckeElem& b) {
    return &a.alg_->group() == &b.alg_->group() && a.form_ == b.form_ && a.terms_ == b.terms_;
}

HeckeElem HeckeElem::in(Var form) const {
    HeckeElem r(alg_, form);
    for (const auto& [w, c] : terms_) r.add(w, c.in(form));
    return r;
}

HeckeElem HeckeElem::left_mul_s(int s) const {
    const WeylGroup& g = alg_->group();
    const LaurentPoly q = HeckeAlgebra::q_in(form_);
    const LaurentPoly qm1 = q - LaurentPoly(form_, 1);
    HeckeElem r(alg_, form_);
    for (const auto& [w, c] : terms_) {
        uint32_t sw = g.lmul(s, w);
        if (g.length(sw) > g.length(w)) {
            r.add(sw, c);
        } else {
            r.add(w, c * qm1);
            r.add(sw, c * q);
        }
    }
    return r;
}

HeckeElem HeckeElem::right_mul_s(int s) const {
    const WeylGroup& g = alg_->group();
    const LaurentPoly q = HeckeAlgebra::q_in(form_);
    const LaurentPoly qm1 = q - LaurentPoly(form_, 1);
    HeckeElem r(alg_, form_);
    for (const auto& [w, c] : terms_) {
        uint32_t ws = g.rmul(w, s);
        if (g.length(ws) > g.length(w)) {
            r.add(ws, c);
        } else {
            r.add(w, c * qm1);
            r.add(ws, c * q);
        }
    }
    return r;
}

HeckeElem operator*(const HeckeElem& a, const HeckeElem& b) {
    a.check(b);
    const WeylGroup& g = a.alg_->group();
    HeckeElem r(a.alg_, a.form_);
    for (const auto& [x, c] : a.terms_) {
        // T_x b = T_{s1}(T_{s2}(... T_{sk} b))
        HeckeElem t = b;
        auto word = g.reduced_word(x);
        for (auto it = word.rbegin(); it != word.rend(); ++it) t = t.left_mul_s(*it);
        r += t.scaled(c);
    }
    return r;
}

HeckeElem HeckeElem::bar() const {
    HeckeElem r(alg_, form_);
    for (const auto& [w, c] : terms_) {
        LaurentPoly cb = c.bar();
        for (const auto& [x, b] : alg_->bar_T(w)) r.add(x, cb * b.in(form_));
    }
    return r;
}

std::string HeckeElem::str() const {
    if (terms_.empty()) return "0";
    const WeylGroup& g = alg_->group();
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string sym = "T(" + g.word_str(w) + ")";
        std::string cs = c.str();
        bool single = c.terms().size() == 1;
        if (!first) os << ' ';
        if (single && c.terms().begin()->second < 0) {
            os << (first ? "-" : "- ");
            cs = (-c).str();
        } else if (!first) {
            os << "+ ";
        }
        first = false;
        if (cs == "1")
            os << sym;
        else if (single)
            os << cs << '*' << sym;
        else
            os << '(' << cs << ")*" << sym;
    }
    return os.str();
}

nlohmann::json HeckeElem::to_json() const {
    nlohmann::json j;
    j["type"] = alg_->group().type().str();
    j["form"] = std::string(1, var_char(form_));
    j["terms"] = nlohmann::json::array();
    for (const auto& [w, c] : terms_) j["terms"].push_back({{"w", alg_->group().word_str(w)}, {"c", c.to_json()}});
    return j;
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const WeylGroup> g) : group_(std::move(g)) {}
HeckeAlgebra::~HeckeAlgebra() = default;

std::shared_ptr<const HeckeAlgebra> HeckeAlgebra::create(std::shared_ptr<const WeylGroup> g) {
    return std::shared_ptr<const HeckeAlgebra>(new HeckeAlgebra(std::move(g)));
}

LaurentPoly HeckeAlgebra::q_in(Var form) {
    return form == Var::q ? LaurentPoly::monomial(Var::q, 1) : LaurentPoly::monomial(Var::v, -2);
}

HeckeElem HeckeAlgebra::zero(Var form) const { return HeckeElem(shared_from_this(), form); }

HeckeElem HeckeAlgebra::one(Var form) const { return T(0u, form); }

HeckeElem HeckeAlgebra::T(uint32_t w, Var form) const {
    HeckeElem r(shared_from_this(), form);
    r.add(w, LaurentPoly(form, 1));
    return r;
}

HeckeElem HeckeAlgebra::T(const WeylElem& w, Var form) const {
    group_->check_same(w);
    return T(w.index(), form);
}

HeckeElem HeckeAlgebra::H(uint32_t w) const {
    HeckeElem r(shared_from_this(), Var::v);
    r.add(w, LaurentPoly::monomial(Var::v, group_->length(w)));
    return r;
}

HeckeElem HeckeAlgebra::T_inverse(const WeylElem& w, Var form) const {
    group_->check_same(w);
    // T_s^{-1} = q^{-1} T_s + (q^{-1} - 1), and (T_{s1}...T_{sk})^{-1} reverses the word.
    const LaurentPoly qi = q_in(form).bar();
    HeckeElem r = one(form);
    auto word = group_->reduced_word(w.index());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        HeckeElem next = r.right_mul_s(*it).scaled(qi);
        next += r.scaled(qi - LaurentPoly(form, 1));
        r = next;
    }
    return r;
}

const HeckeElem::Terms& HeckeAlgebra::bar_T(uint32_t w) const {
    std::call_once(bar_once_, [this] {
        const WeylGroup& g = *group_;
        const LaurentPoly qi = LaurentPoly::monomial(Var::q, -1);
        const LaurentPoly qi1 = qi - LaurentPoly(Var::q, 1);
        std::vector<HeckeElem::Terms> table(g.size());
        table[0][0] = LaurentPoly(Var::q, 1);
        // Elements are stored in nondecreasing length, so sw is ready before w.
        for (uint32_t w = 1; w < g.size(); ++w) {
            int s = __builtin_ctz(g.left_descents(w));
            uint32_t sw = g.lmul(s, w);
            HeckeElem prev(shared_from_this(), Var::q);
            for (const auto& [x, c] : table[sw]) prev.add(x, c);
            HeckeElem next = prev.left_mul_s(s).scaled(qi);
            next += prev.scaled(qi1);
            table[w] = next.terms();
        }
        bar_table_ = std::move(table);
    });
    return bar_table_.at(w);
}

const KLTable& HeckeAlgebra::kl() const {
    std::call_once(kl_once_, [this] { kl_ = std::make_unique<KLTable>(*this); });
    return *kl_;
}

HeckeElem hecke_mul(const HeckeElem& a, const HeckeElem& b) { return a * b; }
HeckeElem hecke_bar(const HeckeElem& a) { return a.bar(); }

std::map<uint32_t, mpq_class> specialize_hecke(const HeckeElem& a, const mpq_class& q0) {
    std::map<uint32_t, mpq_class> out;
    for (const auto& [w, c] : a.terms()) {
        mpq_class val = c.to_q().specialize(q0);
        if (val != 0) out.emplace(w, val);
    }
    return out;
}

}  // namespace hecat
