#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hecat/coxeter/weyl_group.hpp"
#include "hecat/gflq/matrix.hpp"

namespace hecat {

// Counts for the product 1_{P_I z1 P_J} * 1_{P_J z2 P_K} / |P_J| in GL_n(F_q),
// evaluated at the representative of each (I,K) coset z3. Cosets are indexed
// by their position in the coset tables of W.
struct CellCounts {
    std::shared_ptr<const DoubleCosetTable> ij, jk, ik;
    std::vector<long long> values;  // [(z1 * |jk| + z2) * |ik| + z3]
    long long at(size_t z1, size_t z2, size_t z3) const {
        return values[(z1 * jk->minreps.size() + z2) * ik->minreps.size() + z3];
    }
};

// Schur-algebroid structure constants of GL_n(F_q) computed without
// enumerating the group: G/P_J is swept by the transversal u*w with w
// minimal in w W_J and u in the root subgroups inverted by w, and every
// product y^{-1} x is located in its Bruhat cell by elimination.
class CellCounter {
public:
    // W must be of type A_{n-1}, n <= 4.
    CellCounter(std::shared_ptr<const WeylGroup> W, int q);

    const WeylGroup& group() const { return *W_; }
    int q() const { return field_->q(); }
    // Permutation-matrix lift of w with determinant-one simple reflections.
    Mat lift(uint32_t w) const { return lifts_[w]; }
    uint32_t cell_of(const Mat& x) const;
    // |G / P_J| by the transversal
    uint64_t transversal_size(ParabolicSubset J) const;

    CellCounts count(ParabolicSubset I, ParabolicSubset J, ParabolicSubset K) const;

private:
    struct Sweep {
        std::vector<uint32_t> cell;     // cell of each transversal element
        std::vector<uint16_t> product;  // [t * |W| + x] = cell of t^{-1} * lift(x)
    };
    const Sweep& sweep(ParabolicSubset J) const;

    std::shared_ptr<const WeylGroup> W_;
    std::shared_ptr<const FiniteField> field_;
    MatOps ops_;
    std::vector<Mat> lifts_;
    std::map<std::vector<int>, uint32_t> by_perm_;
    mutable std::mutex mutex_;
    mutable std::map<uint32_t, std::unique_ptr<Sweep>> sweeps_;
};

}  // namespace hecat
