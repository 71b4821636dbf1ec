#include "hecat/gflq/matrix.hpp"

#include "hecat/algebra/error.hpp"

namespace hecat {

Mat MatOps::identity() const {
    Mat m;
    m.n = n_;
    for (int i = 0; i < n_; ++i) m.at(i, i) = 1;
    return m;
}

Mat MatOps::mul(const Mat& x, const Mat& y) const {
    Mat m;
    m.n = n_;
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            uint8_t xik = x.at(i, k);
            if (!xik) continue;
            for (int j = 0; j < n_; ++j) m.at(i, j) = F_.add(m.at(i, j), F_.mul(xik, y.at(k, j)));
        }
    return m;
}

uint8_t MatOps::det(const Mat& x) const {
    Mat m = x;
    uint8_t d = 1;
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (m.at(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = F_.neg(d);
        }
        uint8_t p = m.at(c, c);
        d = F_.mul(d, p);
        uint8_t pi = F_.inv(p);
        for (int r = c + 1; r < n_; ++r) {
            uint8_t f = F_.mul(m.at(r, c), pi);
            if (!f) continue;
            for (int j = c; j < n_; ++j) m.at(r, j) = F_.sub(m.at(r, j), F_.mul(f, m.at(c, j)));
        }
    }
    return d;
}

Mat MatOps::inverse(const Mat& x) const {
    Mat m = x, inv = identity();
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (m.at(r, c)) {
                piv = r;
                break;
            }
        ensure(piv >= 0, "inverse of a singular matrix");
        for (int j = 0; j < n_; ++j) {
            std::swap(m.at(piv, j), m.at(c, j));
            std::swap(inv.at(piv, j), inv.at(c, j));
        }
        uint8_t pi = F_.inv(m.at(c, c));
        for (int j = 0; j < n_; ++j) {
            m.at(c, j) = F_.mul(m.at(c, j), pi);
            inv.at(c, j) = F_.mul(inv.at(c, j), pi);
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c || !m.at(r, c)) continue;
            uint8_t f = m.at(r, c);
            for (int j = 0; j < n_; ++j) {
                m.at(r, j) = F_.sub(m.at(r, j), F_.mul(f, m.at(c, j)));
                inv.at(r, j) = F_.sub(inv.at(r, j), F_.mul(f, inv.at(c, j)));
            }
        }
    }
    return inv;
}

Mat MatOps::transpose(const Mat& x) const {
    Mat m;
    m.n = n_;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = x.at(j, i);
    return m;
}

Mat MatOps::elementary(int i, int j, uint8_t c) const {
    Mat m = identity();
    m.at(i, j) = c;
    return m;
}

Mat MatOps::diagonal(const std::vector<uint8_t>& d) const {
    Mat m;
    m.n = n_;
    for (int i = 0; i < n_; ++i) m.at(i, i) = d[i];
    return m;
}

Mat MatOps::permutation(const std::vector<int>& sigma) const {
    Mat m;
    m.n = n_;
    for (int j = 0; j < n_; ++j) m.at(sigma[j], j) = 1;
    return m;
}

Mat MatOps::simple_reflection(int i) const {
    Mat m = identity();
    m.at(i, i) = 0;
    m.at(i + 1, i + 1) = 0;
    m.at(i, i + 1) = F_.neg(1);
    m.at(i + 1, i) = 1;
    return m;
}

uint64_t MatOps::encode(const Mat& x) const {
    uint64_t c = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) c = c * static_cast<uint64_t>(F_.q()) + x.at(i, j);
    return c;
}

Mat MatOps::decode(uint64_t code) const {
    Mat m;
    m.n = n_;
    for (int k = n_ * n_ - 1; k >= 0; --k) {
        m.a[(k / n_) * 4 + k % n_] = static_cast<uint8_t>(code % static_cast<uint64_t>(F_.q()));
        code /= static_cast<uint64_t>(F_.q());
    }
    return m;
}

std::vector<int> MatOps::bruhat_cell(Mat x) const {
    // Left B-action: add multiples of a row to rows above it. Right B-action:
    // add multiples of a column to columns to its right. Going through the
    // columns from the left, the lowest nonzero entry of an unused row is the
    // pivot; clearing above it and to its right leaves a monomial matrix.
    std::vector<int> sigma(n_, -1);
    std::vector<char> used(n_, 0);
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = n_ - 1; r >= 0; --r)
            if (!used[r] && x.at(r, c)) {
                piv = r;
                break;
            }
        ensure(piv >= 0, "Bruhat cell of a singular matrix");
        used[piv] = 1;
        sigma[c] = piv;
        uint8_t pinv = F_.inv(x.at(piv, c));
        for (int r = 0; r < piv; ++r) {
            uint8_t f = F_.mul(x.at(r, c), pinv);
            if (!f) continue;
            for (int j = 0; j < n_; ++j) x.at(r, j) = F_.sub(x.at(r, j), F_.mul(f, x.at(piv, j)));
        }
        for (int j = c + 1; j < n_; ++j) {
            uint8_t f = F_.mul(x.at(piv, j), pinv);
            if (!f) continue;
            for (int r = 0; r < n_; ++r) x.at(r, j) = F_.sub(x.at(r, j), F_.mul(f, x.at(r, c)));
        }
    }
    return sigma;
}

}  // namespace hecat
