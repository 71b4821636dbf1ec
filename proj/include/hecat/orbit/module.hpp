#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hecat/hecke/hecke.hpp"
#include "hecat/orbit/datum.hpp"

namespace hecat {

class OrbitModule;

// (orbit, character) with character 0 = trivial, 1 = sign
using OrbitKey = std::pair<uint32_t, int>;

class OrbitModuleElem {
public:
    using Terms = std::map<OrbitKey, LaurentPoly>;

    OrbitModuleElem(std::shared_ptr<const OrbitModule> mod, Var form = Var::q);

    const OrbitModule& module() const { return *mod_; }
    std::shared_ptr<const OrbitModule> module_ptr() const { return mod_; }
    Var form() const { return form_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(const OrbitKey& k) const;

    void add(const OrbitKey& k, const LaurentPoly& c);
    OrbitModuleElem& operator+=(const OrbitModuleElem& b);
    OrbitModuleElem& operator-=(const OrbitModuleElem& b);
    OrbitModuleElem scaled(const LaurentPoly& c) const;
    OrbitModuleElem in(Var form) const;

    std::string str() const;
    nlohmann::json to_json() const;

    friend bool operator==(const OrbitModuleElem& a, const OrbitModuleElem& b) {
        return a.mod_ == b.mod_ && a.form_ == b.form_ && a.terms_ == b.terms_;
    }
    friend OrbitModuleElem operator+(OrbitModuleElem a, const OrbitModuleElem& b) { return a += b; }
    friend OrbitModuleElem operator-(OrbitModuleElem a, const OrbitModuleElem& b) { return a -= b; }

private:
    std::shared_ptr<const OrbitModule> mod_;
    Var form_;
    Terms terms_;
};

struct FitOptions {
    std::vector<int> primes;
    int held_out = 0;
    // negative: number of positive roots of the Cartan type
    int degree_bound = -1;
    // include sign characters on orbits whose rational points split in two
    bool characters = false;
};

// Hecke module on the (orbit, character) basis. Modules built by fit_action
// carry the action table; unfitted ones only support bookkeeping.
class OrbitModule : public std::enable_shared_from_this<OrbitModule> {
public:
    using Column = std::map<OrbitKey, LaurentPoly>;

    static std::shared_ptr<const OrbitModule> unfitted(std::shared_ptr<const OrbitDatum> datum);

    const OrbitDatum& datum() const { return *datum_; }
    std::shared_ptr<const HeckeAlgebra> hecke() const { return hecke_; }
    bool fitted() const { return fitted_; }
    const FitOptions& options() const { return options_; }
    const std::vector<OrbitKey>& basis() const { return basis_; }
    bool has(const OrbitKey& k) const;
    std::string key_str(const OrbitKey& k) const;
    int dim(const OrbitKey& k) const { return datum_->orbits[k.first].dim; }

    OrbitModuleElem zero(Var form = Var::q) const;
    OrbitModuleElem m(uint32_t orbit, int chr = 0) const;
    // T_s m_k in the q-form
    const Column& column(int s, const OrbitKey& k) const;
    OrbitModuleElem apply_T(int s, const OrbitModuleElem& x) const;

    OrbitModuleElem duality(const OrbitModuleElem& x) const;
    // v-form element sum_u v^{dim v} P_{u,v}(q) m_u
    OrbitModuleElem klv_basis(const OrbitKey& v) const;
    LaurentPoly klv_poly(const OrbitKey& u, const OrbitKey& v) const;

    // (T_s T_t) m = T_s (T_t m), the quadratic and braid relations on every
    // basis element, D^2 = id and D(T_s m) = bar(T_s) D(m). Throws on the
    // first failure.
    void check_axioms() const;

    nlohmann::json action_json() const;
    std::string action_csv() const;
    nlohmann::json klv_json() const;

private:
    friend std::shared_ptr<const OrbitModule> fit_action(std::shared_ptr<const OrbitDatum>, const FitOptions&);
    explicit OrbitModule(std::shared_ptr<const OrbitDatum> datum);
    void require_fitted() const;
    void build_duality() const;
    size_t position(const OrbitKey& k) const;

    std::shared_ptr<const OrbitDatum> datum_;
    std::shared_ptr<const HeckeAlgebra> hecke_;
    bool fitted_ = false;
    FitOptions options_;
    std::vector<OrbitKey> basis_;
    std::vector<std::vector<Column>> table_;  // [s][basis position]

    mutable std::once_flag dual_once_;
    mutable std::vector<Column> dual_;  // D(m_k), q-form
    mutable std::mutex klv_mutex_;
    mutable std::map<OrbitKey, Column> klv_;  // v-form coefficients p_{u,v} on h_u = v^{dim u} m_u
};

// Interpolates T_s on every basis element from the oracle at options.primes
// and checks every coefficient at options.held_out.
std::shared_ptr<const OrbitModule> fit_action(std::shared_ptr<const OrbitDatum> datum, const FitOptions& options);

OrbitModuleElem act(const HeckeElem& h, const OrbitModuleElem& m);
OrbitModuleElem orbit_duality(const OrbitModuleElem& m);

}  // namespace hecat
