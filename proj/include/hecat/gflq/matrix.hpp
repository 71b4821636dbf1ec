#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hecat/gflq/field.hpp"

namespace hecat {

// Square matrix over a small finite field, n <= 4, row-major.
struct Mat {
    int n = 0;
    std::array<uint8_t, 16> a{};
    uint8_t& at(int i, int j) { return a[i * 4 + j]; }
    uint8_t at(int i, int j) const { return a[i * 4 + j]; }
    friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }
};

class MatOps {
public:
    MatOps(const FiniteField& F, int n) : F_(F), n_(n) {}
    const FiniteField& field() const { return F_; }
    int n() const { return n_; }

    Mat identity() const;
    Mat mul(const Mat& x, const Mat& y) const;
    uint8_t det(const Mat& x) const;
    // Requires an invertible matrix.
    Mat inverse(const Mat& x) const;
    Mat transpose(const Mat& x) const;
    // Identity plus c in position (i,j), i != j.
    Mat elementary(int i, int j, uint8_t c) const;
    Mat diagonal(const std::vector<uint8_t>& d) const;
    // Matrix with m[sigma(j)][j] = 1.
    Mat permutation(const std::vector<int>& sigma) const;
    // Block [[0,-1],[1,0]] at rows/cols i, i+1 (determinant 1 lift of s_i).
    Mat simple_reflection(int i) const;
    // u_i(c) = elementary(i, i+1, c)
    Mat root_element(int i, uint8_t c) const { return elementary(i, i + 1, c); }

    // base-q code of the n*n entries, first entry most significant
    uint64_t encode(const Mat& x) const;
    Mat decode(uint64_t code) const;

    // Permutation sigma with x in B sigma B (B upper triangular), found by
    // elimination with the lowest available pivot in each column.
    std::vector<int> bruhat_cell(Mat x) const;

private:
    const FiniteField& F_;
    int n_;
};

}  // namespace hecat
