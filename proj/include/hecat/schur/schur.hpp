#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "hecat/hecke/hecke.hpp"

namespace hecat {

// Element of the morphism module ^I H ^J in the double-coset basis T_z,
// keyed by the minimal representative of each coset.
class SchurElem {
public:
    using Terms = std::map<uint32_t, LaurentPoly>;

    SchurElem(std::shared_ptr<const HeckeAlgebra> alg, ParabolicSubset I, ParabolicSubset J, Var form = Var::q);
    static SchurElem basis(std::shared_ptr<const HeckeAlgebra> alg, const DoubleCoset& z, Var form = Var::q);

    const HeckeAlgebra& algebra() const { return *alg_; }
    std::shared_ptr<const HeckeAlgebra> algebra_ptr() const { return alg_; }
    ParabolicSubset left() const { return I_; }
    ParabolicSubset right() const { return J_; }
    Var form() const { return form_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(uint32_t minrep) const;

    // minrep must be the minimal representative of an (I,J) coset
    void add(uint32_t minrep, const LaurentPoly& c);
    SchurElem& operator+=(const SchurElem& b);
    SchurElem scaled(const LaurentPoly& c) const;
    SchurElem in(Var form) const;

    std::string str() const;
    nlohmann::json to_json() const;

    friend bool operator==(const SchurElem& a, const SchurElem& b) {
        return &a.alg_->group() == &b.alg_->group() && a.I_ == b.I_ && a.J_ == b.J_ && a.form_ == b.form_ &&
               a.terms_ == b.terms_;
    }

private:
    std::shared_ptr<const HeckeAlgebra> alg_;
    ParabolicSubset I_, J_;
    Var form_;
    Terms terms_;
};

// T_z -> sum of T_w over the coset.
HeckeElem embed(const SchurElem& a);
// Inverse of embed on its image; throws InternalInvariant if h is not
// constant along (I,J) double cosets.
SchurElem project(const HeckeElem& h, ParabolicSubset I, ParabolicSubset J);
// f *_J g = embed^{-1}(embed(f) embed(g) / pi_J)
SchurElem convolve(const SchurElem& f, const SchurElem& g);
SchurElem schur_dual(const SchurElem& f);
// q^twist T_z (the class of the shriek extension twisted by `twist`)
SchurElem k0_class(std::shared_ptr<const HeckeAlgebra> alg, const DoubleCoset& z, int twist);
// embed^{-1} of the KL element of the longest element in the coset (v-form);
// fixed by schur_dual.
SchurElem parabolic_kl(std::shared_ptr<const HeckeAlgebra> alg, const DoubleCoset& z);

// Structure constants c^{z3}_{z1,z2} of (I,J) x (J,K) -> (I,K), cached.
struct StructureTable {
    ParabolicSubset I, J, K;
    // (z1, z2) -> product, keyed by minimal representatives
    std::map<std::pair<uint32_t, uint32_t>, SchurElem> products;
    nlohmann::json to_json() const;
};

class SchurAlgebroid {
public:
    explicit SchurAlgebroid(std::shared_ptr<const HeckeAlgebra> alg) : alg_(std::move(alg)) {}
    std::shared_ptr<const HeckeAlgebra> algebra() const { return alg_; }
    const StructureTable& table(ParabolicSubset I, ParabolicSubset J, ParabolicSubset K) const;

private:
    std::shared_ptr<const HeckeAlgebra> alg_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::unique_ptr<StructureTable>> cache_;
};

}  // namespace hecat
