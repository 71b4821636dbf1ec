#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hecat/algebra/laurent.hpp"
#include "hecat/coxeter/weyl_group.hpp"

namespace hecat {

class HeckeAlgebra;
class KLTable;

// Element of the Iwahori-Hecke algebra in the T-basis with
// T_s^2 = (q-1) T_s + q. Coefficients live in the q-form or in the v-form
// (q = v^-2); the two forms are never mixed inside one element.
class HeckeElem {
public:
    using Terms = std::map<uint32_t, LaurentPoly>;

    HeckeElem(std::shared_ptr<const HeckeAlgebra> alg, Var form);

    const HeckeAlgebra& algebra() const { return *alg_; }
    std::shared_ptr<const HeckeAlgebra> algebra_ptr() const { return alg_; }
    Var form() const { return form_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(const WeylElem& w) const;
    LaurentPoly coeff(uint32_t w) const;

    void add(uint32_t w, const LaurentPoly& c);
    HeckeElem& operator+=(const HeckeElem& b);
    HeckeElem& operator-=(const HeckeElem& b);
    HeckeElem scaled(const LaurentPoly& c) const;
    HeckeElem operator-() const;

    HeckeElem bar() const;
    HeckeElem in(Var form) const;
    // T_s * this and this * T_s
    HeckeElem left_mul_s(int s) const;
    HeckeElem right_mul_s(int s) const;

    std::string str() const;
    nlohmann::json to_json() const;

    friend bool operator==(const HeckeElem& a, const HeckeElem& b);
    friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
    friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
    friend HeckeElem operator*(const HeckeElem& a, const HeckeElem& b);

private:
    void check(const HeckeElem& b) const;
    std::shared_ptr<const HeckeAlgebra> alg_;
    Var form_;
    Terms terms_;
};

class HeckeAlgebra : public std::enable_shared_from_this<HeckeAlgebra> {
public:
    static std::shared_ptr<const HeckeAlgebra> create(std::shared_ptr<const WeylGroup> g);
    static std::shared_ptr<const HeckeAlgebra> create(std::string_view type) {
        return create(WeylGroup::build(type));
    }

    ~HeckeAlgebra();

    const WeylGroup& group() const { return *group_; }
    std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }

    HeckeElem zero(Var form = Var::q) const;
    HeckeElem one(Var form = Var::q) const;
    HeckeElem T(const WeylElem& w, Var form = Var::q) const;
    HeckeElem T(uint32_t w, Var form = Var::q) const;
    // H_w = v^{l(w)} T_w
    HeckeElem H(uint32_t w) const;
    // T_w^{-1} as a product of the inverses of the simple generators.
    HeckeElem T_inverse(const WeylElem& w, Var form = Var::q) const;
    // The ring element q in the given form.
    static LaurentPoly q_in(Var form);

    // bar(T_w) in the q-form, computed by induction on length.
    const HeckeElem::Terms& bar_T(uint32_t w) const;
    const KLTable& kl() const;

private:
    explicit HeckeAlgebra(std::shared_ptr<const WeylGroup> g);
    std::shared_ptr<const WeylGroup> group_;
    mutable std::once_flag bar_once_;
    mutable std::vector<HeckeElem::Terms> bar_table_;
    mutable std::once_flag kl_once_;
    mutable std::unique_ptr<KLTable> kl_;
};

HeckeElem hecke_mul(const HeckeElem& a, const HeckeElem& b);
HeckeElem hecke_bar(const HeckeElem& a);
// Coefficientwise evaluation at q = q0. v-form input must be q-integral.
std::map<uint32_t, mpq_class> specialize_hecke(const HeckeElem& a, const mpq_class& q0);

}  // namespace hecat
