#include "hecat/gflq/cells.hpp"

#include "hecat/algebra/error.hpp"
#include "hecat/algebra/parallel.hpp"

namespace hecat {

namespace {

std::vector<int> pattern(const Mat& m) {
    std::vector<int> sigma(m.n, -1);
    for (int j = 0; j < m.n; ++j)
        for (int i = 0; i < m.n; ++i)
            if (m.at(i, j)) sigma[j] = i;
    return sigma;
}

}  // namespace

CellCounter::CellCounter(std::shared_ptr<const WeylGroup> W, int q)
    : W_(std::move(W)), field_(FiniteField::make(q)), ops_(*field_, W_->rank() + 1) {
    if (!W_->type().is_type_a() || W_->type().factors().size() != 1 || W_->rank() > 3)
        throw Error(Errc::UnsupportedType, "cell counting needs type A1, A2 or A3, got " + W_->type().str());
    lifts_.resize(W_->size());
    for (uint32_t w = 0; w < W_->size(); ++w) {
        Mat m = ops_.identity();
        for (int s : W_->reduced_word(w)) m = ops_.mul(m, ops_.simple_reflection(s));
        lifts_[w] = m;
        by_perm_.emplace(pattern(m), w);
    }
    ensure(by_perm_.size() == W_->size(), "Weyl lifts are not distinct permutations");
}

uint32_t CellCounter::cell_of(const Mat& x) const { return by_perm_.at(ops_.bruhat_cell(x)); }

uint64_t CellCounter::transversal_size(ParabolicSubset J) const { return sweep(J).cell.size(); }

const CellCounter::Sweep& CellCounter::sweep(ParabolicSubset J) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto& slot = sweeps_[J.mask];
    if (slot) return *slot;
    auto sw = std::make_unique<Sweep>();
    const int n = ops_.n();
    const int q = field_->q();
    std::vector<Mat> trans;
    for (uint32_t w : W_->coset_table(ParabolicSubset{}, J)->minreps) {
        std::vector<int> sigma = pattern(lifts_[w]);
        std::vector<int> where(n);
        for (int j = 0; j < n; ++j) where[sigma[j]] = j;
        std::vector<std::pair<int, int>> inv;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (where[i] > where[j]) inv.emplace_back(i, j);
        ensure(static_cast<int>(inv.size()) == W_->length(w), "inversion count differs from length");
        std::vector<int> digits(inv.size(), 0);
        while (true) {
            Mat u = ops_.identity();
            for (size_t k = 0; k < inv.size(); ++k) u.at(inv[k].first, inv[k].second) = static_cast<uint8_t>(digits[k]);
            trans.push_back(ops_.mul(u, lifts_[w]));
            sw->cell.push_back(w);
            size_t k = 0;
            while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
            if (k == digits.size()) break;
        }
    }
    const uint32_t nw = W_->size();
    sw->product.assign(trans.size() * nw, 0);
    parallel_chunks(trans.size(), thread_count(), [&](int, size_t b, size_t e) {
        for (size_t t = b; t < e; ++t) {
            ensure(cell_of(trans[t]) == sw->cell[t], "transversal element outside its cell");
            Mat yinv = ops_.inverse(trans[t]);
            for (uint32_t x = 0; x < nw; ++x)
                sw->product[t * nw + x] = static_cast<uint16_t>(cell_of(ops_.mul(yinv, lifts_[x])));
        }
    });
    slot = std::move(sw);
    return *slot;
}

CellCounts CellCounter::count(ParabolicSubset I, ParabolicSubset J, ParabolicSubset K) const {
    CellCounts out;
    out.ij = W_->coset_table(I, J);
    out.jk = W_->coset_table(J, K);
    out.ik = W_->coset_table(I, K);
    const Sweep& sw = sweep(J);
    const size_t n2 = out.jk->minreps.size(), n3 = out.ik->minreps.size();
    out.values.assign(out.ij->minreps.size() * n2 * n3, 0);
    const uint32_t nw = W_->size();
    for (size_t z3 = 0; z3 < n3; ++z3) {
        const uint32_t x = out.ik->minreps[z3];
        for (size_t t = 0; t < sw.cell.size(); ++t) {
            size_t z1 = out.ij->coset_of[sw.cell[t]];
            size_t z2 = out.jk->coset_of[sw.product[t * nw + x]];
            ++out.values[(z1 * n2 + z2) * n3 + z3];
        }
    }
    return out;
}

}  // namespace hecat
