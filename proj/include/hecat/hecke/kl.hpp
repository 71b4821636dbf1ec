#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hecat/hecke/hecke.hpp"

namespace hecat {

// Kazhdan-Lusztig polynomials, one column P_{-,w} at a time, computed on
// demand by solving bar-invariance triangularly in the basis H_x.
class KLTable {
public:
    explicit KLTable(const HeckeAlgebra& alg);

    // P_{x,w} (q-form) for every x <= w.
    const std::map<uint32_t, LaurentPoly>& column(uint32_t w) const;
    LaurentPoly kl_poly(const WeylElem& x, const WeylElem& w) const;
    // v^{l(w)} sum_x P_{x,w}(q) T_x in the v-form.
    HeckeElem kl_basis(const WeylElem& w) const;
    // Rows "x,w,P" for all x <= w.
    std::string csv_column(uint32_t w) const;

private:
    std::map<uint32_t, LaurentPoly> solve(uint32_t w) const;
    void build_r() const;

    const HeckeAlgebra& alg_;
    mutable std::mutex mutex_;
    mutable std::map<uint32_t, std::map<uint32_t, LaurentPoly>> columns_;
    // r[y] = coefficients of bar(H_y) in the H-basis, v-form.
    mutable std::vector<std::vector<std::pair<uint32_t, LaurentPoly>>> r_;
    mutable std::once_flag r_once_;
};

}  // namespace hecat
