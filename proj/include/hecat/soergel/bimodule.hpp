#pragma once

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "hecat/soergel/poly_ring.hpp"

namespace hecat {

// Dense matrix with polynomial entries.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, int nvars);
    static PolyMatrix identity(int n, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }
    MultiPoly& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const MultiPoly& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    bool is_zero() const;
    // True if the matrix is c times the identity for some rational c != 0.
    bool is_scalar_identity(mpq_class* c = nullptr) const;

    PolyMatrix& operator+=(const PolyMatrix& b);
    PolyMatrix& operator-=(const PolyMatrix& b);
    PolyMatrix scaled(const mpq_class& c) const;
    // Block at rows [r0, r0+nr), cols [c0, c0+nc).
    PolyMatrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const PolyMatrix& b);

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    nlohmann::json to_json() const;

private:
    int rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<MultiPoly> a_;
};

// Graded (R^{W_left}, R^{W_right})-bimodule, free as a left module. Elements
// are row vectors of left coefficients over the basis; right multiplication
// by the k-th generator of R^{W_right} is the matrix action[k] acting on the
// right, so row a of action[k] is (basis_a) * gen_k. Entry (a,b) is homogeneous
// of grading degree deg_a + 2 deg(gen_k) - deg_b.
struct GradedBimodule {
    std::shared_ptr<const PolyRingCtx> ctx;
    ParabolicSubset left, right;
    std::vector<int> degrees;
    std::vector<PolyMatrix> action;
    std::string tag;

    int rank() const { return static_cast<int>(degrees.size()); }
    int nvars() const { return ctx->nvars(); }
    // sum over the basis of v^{deg}
    LaurentPoly graded_rank() const;
    // Right multiplication by an element of R^{W_right}.
    PolyMatrix right_act(const MultiPoly& f) const;
    // M<k>: basis degrees lowered by k.
    GradedBimodule shifted(int k) const;
    // Throws ValidationFailed on non-commuting actions, inhomogeneous
    // entries or left coefficients outside R^{W_left}.
    void validate() const;
    nlohmann::json to_json() const;
};

using BimodulePtr = std::shared_ptr<const GradedBimodule>;

// R^{W_I} as a bimodule over itself.
BimodulePtr unit_bimodule(std::shared_ptr<const PolyRingCtx> ctx, ParabolicSubset I);
// R^{W_I} as an (R^{W_J}, R^{W_I})-bimodule, J containing I.
BimodulePtr restriction_bimodule(std::shared_ptr<const PolyRingCtx> ctx, ParabolicSubset J, ParabolicSubset I);
// R^{W_I} as an (R^{W_I}, R^{W_J})-bimodule, J containing I.
BimodulePtr induction_bimodule(std::shared_ptr<const PolyRingCtx> ctx, ParabolicSubset I, ParabolicSubset J);
// M tensored over the common ring; the basis is (a, b) with a major.
BimodulePtr tensor(const GradedBimodule& M, const GradedBimodule& N);

// B_{s_1} ... B_{s_k} with B_s = R (x)_{R^s} R <1>, basis degrees -1, +1.
BimodulePtr bs_bimodule(std::shared_ptr<const PolyRingCtx> ctx, const std::vector<int>& word);
// chain = [P, R1, S1, R2, ..., Rn, Q] with P >= R1 <= S1 >= R2 ... Rn <= Q:
// R^{R1} (x)_{R^{S1}} R^{R2} ... R^{Rn} as an (R^P, R^Q)-bimodule, unshifted.
BimodulePtr singular_bimodule(std::shared_ptr<const PolyRingCtx> ctx, const std::vector<ParabolicSubset>& chain);

// Bimodule map; row a of the matrix is the image of source basis a. A map of
// degree d raises grading degrees by d.
struct BimoduleMorphism {
    BimodulePtr source, target;
    PolyMatrix matrix;
    int degree = 0;

    static BimoduleMorphism zero(BimodulePtr s, BimodulePtr t, int degree = 0);
    static BimoduleMorphism identity(BimodulePtr m);
    bool is_zero() const { return matrix.is_zero(); }
    // Checks right-linearity and homogeneity exactly.
    bool is_valid() const;
};

// first f, then g
BimoduleMorphism compose(const BimoduleMorphism& f, const BimoduleMorphism& g);
// f (x) g between tensor products (sources and targets tensored in order).
PolyMatrix tensor_matrix(const GradedBimodule& M, const GradedBimodule& Mt, const PolyMatrix& f,
                         const GradedBimodule& N, const GradedBimodule& Nt, const PolyMatrix& g);

}  // namespace hecat
