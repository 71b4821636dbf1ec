#include "hecat/algebra/linsolve.hpp"

#include <algorithm>

namespace hecat {

void sparse_axpy(SparseVec& y, const mpq_class& a, const SparseVec& x) {
    if (a == 0 || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            mpq_class c = y[i].second + a * x[j].second;
            if (c != 0) out.emplace_back(y[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

mpq_class sparse_get(const SparseVec& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, int k) { return e.first < k; });
    return it != v.end() && it->first == i ? it->second : mpq_class(0);
}

SparseVec RowEchelon::reduce(SparseVec row) const {
    // Eliminate every entry that sits on a pivot column, left to right.
    size_t pos = 0;
    while (pos < row.size()) {
        auto it = pivots_.find(row[pos].first);
        if (it == pivots_.end()) {
            ++pos;
            continue;
        }
        mpq_class a = -row[pos].second;
        int col = row[pos].first;
        sparse_axpy(row, a, it->second);
        // Entries before `col` are untouched by the pivot row (its leading
        // column is col), so resume the scan there.
        pos = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int k) { return e.first < k; }) -
              row.begin();
    }
    return row;
}

bool RowEchelon::add_row(SparseVec row) {
    row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }), row.end());
    // Only the leading entry needs to be off the pivot set for echelon form.
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) break;
        mpq_class a = -row.front().second;
        sparse_axpy(row, a, it->second);
    }
    if (row.empty()) return false;
    mpq_class lead = row.front().second;
    if (lead != 1)
        for (auto& e : row) e.second /= lead;
    pivots_.emplace(row.front().first, std::move(row));
    return true;
}

std::map<int, SparseVec> RowEchelon::reduced_rows() const {
    // Back substitution from the last pivot column to the first.
    std::map<int, SparseVec> red;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        SparseVec row = it->second;
        size_t pos = 1;
        while (pos < row.size()) {
            auto p = red.find(row[pos].first);
            if (p == red.end()) {
                ++pos;
                continue;
            }
            int col = row[pos].first;
            mpq_class a = -row[pos].second;
            sparse_axpy(row, a, p->second);
            pos = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int k) { return e.first < k; }) -
                  row.begin();
        }
        red.emplace(it->first, std::move(row));
    }
    return red;
}

std::vector<int> RowEchelon::pivot_columns() const {
    std::vector<int> out;
    for (const auto& [c, r] : pivots_) out.push_back(c);
    return out;
}

std::vector<SparseVec> RowEchelon::nullspace() const {
    auto red = reduced_rows();
    std::vector<SparseVec> basis;
    // For free column f: x_f = 1, x_p = -R[p][f] for each pivot row p.
    std::vector<std::vector<std::pair<int, mpq_class>>> by_free(ncols_);
    for (const auto& [p, row] : red)
        for (size_t k = 1; k < row.size(); ++k)
            if (row[k].first < ncols_) by_free[row[k].first].emplace_back(p, -row[k].second);
    for (int f = 0; f < ncols_; ++f) {
        if (pivots_.count(f)) continue;
        SparseVec v = by_free[f];
        v.emplace_back(f, 1);
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<mpq_class>> RowEchelon::solve_augmented(int rhs_col) const {
    if (pivots_.count(rhs_col)) return std::nullopt;
    auto red = reduced_rows();
    std::vector<mpq_class> x(rhs_col, 0);
    for (const auto& [p, row] : red) {
        if (p >= rhs_col) continue;
        x[p] = sparse_get(row, rhs_col);
    }
    return x;
}

}  // namespace hecat
