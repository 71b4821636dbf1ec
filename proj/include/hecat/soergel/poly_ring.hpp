#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hecat/algebra/laurent.hpp"
#include "hecat/algebra/multipoly.hpp"
#include "hecat/coxeter/weyl_group.hpp"

namespace hecat {

// A polynomial written in the generators of an invariant ring: each term is
// an exponent vector over the generator list and a rational coefficient.
using GenPoly = std::vector<std::pair<std::vector<int>, mpq_class>>;

// R = Q[x1..xn] with S_n permuting the variables (s_i swaps x_i and x_{i+1}).
// Variables have grading degree 2; "poly degree" below is the exponent sum.
class PolyRingCtx {
public:
    // Type A_{n-1}, n <= 8.
    static std::shared_ptr<const PolyRingCtx> create(const CartanType& t);
    static std::shared_ptr<const PolyRingCtx> create(std::string_view type) {
        return create(CartanType::parse(type));
    }

    int nvars() const { return n_; }
    const WeylGroup& group() const { return *W_; }
    std::shared_ptr<const WeylGroup> group_ptr() const { return W_; }

    MultiPoly zero() const { return MultiPoly(n_); }
    MultiPoly one() const { return MultiPoly(n_, 1); }
    MultiPoly x(int i) const { return MultiPoly::var(n_, i); }
    MultiPoly alpha(int s) const { return x(s) - x(s + 1); }

    MultiPoly weyl_act(uint32_t w, const MultiPoly& f) const;
    MultiPoly demazure(int s, const MultiPoly& f) const;

    // Elementary symmetric polynomials of the blocks of consecutive
    // variables joined by I, block by block, e_1 first. Poly degree of the
    // k-th generator is gen_degrees(I)[k].
    const std::vector<MultiPoly>& invariant_gens(ParabolicSubset I) const;
    std::vector<int> gen_degrees(ParabolicSubset I) const;
    bool is_invariant(ParabolicSubset I, const MultiPoly& f) const;
    // Products of the generators with total poly degree k (a Q-basis of the
    // degree-k part of R^{W_I}), in a fixed order.
    std::vector<std::vector<int>> gen_monomials(ParabolicSubset I, int k) const;
    MultiPoly eval_gen_monomial(ParabolicSubset I, const std::vector<int>& e) const;
    // Writes an element of R^{W_I} in the generators; throws InternalInvariant
    // if f is not invariant.
    GenPoly express(ParabolicSubset I, const MultiPoly& f) const;

    // Basis of R^{W_R} as a free module over R^{W_S} for R a subset of S,
    // homogeneous and sorted by degree.
    const std::vector<MultiPoly>& relative_basis(ParabolicSubset R, ParabolicSubset S) const;
    // f in R^{W_R} as sum_c s_c * basis[c] with s_c in R^{W_S}.
    std::vector<MultiPoly> decompose(ParabolicSubset R, ParabolicSubset S, const MultiPoly& f) const;

    // Graded dimension of R / (R^W_+ R), sum over degrees of dim * v^{grading degree},
    // computed by linear algebra degree by degree.
    LaurentPoly coinvariant_dimension() const;

private:
    PolyRingCtx(std::shared_ptr<const WeylGroup> W, int n);
    std::vector<std::vector<int>> blocks(ParabolicSubset I) const;

    std::shared_ptr<const WeylGroup> W_;
    int n_;
    std::vector<std::vector<int>> perms_;  // perms_[w][i] = image of variable i
    mutable std::mutex mutex_;
    mutable std::map<uint32_t, std::unique_ptr<std::vector<MultiPoly>>> gens_;
    mutable std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<std::vector<MultiPoly>>> rel_;
};

// Sum over w of v^{2 l(w)}; asserted equal to the linear-algebra count.
LaurentPoly coinvariant_poincare(const CartanType& t);

}  // namespace hecat
