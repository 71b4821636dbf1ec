#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hecat {

// Sparse rational vector, entries sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, mpq_class>>;

// y <- y + a*x
void sparse_axpy(SparseVec& y, const mpq_class& a, const SparseVec& x);
mpq_class sparse_get(const SparseVec& v, int i);

// Incremental row echelon form over Q. Rows are added one at a time and
// reduced against the existing pivots; the pivot rows are normalized to a
// leading 1.
class RowEchelon {
public:
    explicit RowEchelon(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(pivots_.size()); }
    // True when the row was independent of the rows already present.
    bool add_row(SparseVec row);
    // Reduce a vector against the current pivots (not necessarily fully).
    SparseVec reduce(SparseVec row) const;
    bool in_span(const SparseVec& row) const { return reduce(row).empty(); }

    // Basis of the right kernel {x : A x = 0}, one vector per free column,
    // with a 1 in that free column.
    std::vector<SparseVec> nullspace() const;
    // Any x with A x = b where the columns of A are [0, ncols) and b was
    // appended as column `rhs_col` of every row. Returns nullopt if inconsistent.
    std::optional<std::vector<mpq_class>> solve_augmented(int rhs_col) const;
    std::vector<int> pivot_columns() const;

private:
    std::map<int, SparseVec> reduced_rows() const;
    int ncols_;
    std::map<int, SparseVec> pivots_;
};

}  // namespace hecat
