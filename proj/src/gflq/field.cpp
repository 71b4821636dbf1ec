#include "hecat/gflq/field.hpp"

#include "hecat/algebra/error.hpp"

namespace hecat {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

// Monic defining polynomials x^d + c_{d-1} x^{d-1} + ... + c_0, stored as
// the base-p integer of (c_0, ..., c_{d-1}).
struct Extension {
    int q, p, d, poly;
};
constexpr Extension kExtensions[] = {
    {4, 2, 2, 0b11},   // x^2 + x + 1
    {8, 2, 3, 0b011},  // x^3 + x + 1
    {9, 3, 2, 2 + 2 * 3},  // x^2 + 2x + 2
};

}  // namespace

bool FiniteField::supported(int q) {
    if (q < 256 && is_prime(q)) return true;
    for (const auto& e : kExtensions)
        if (e.q == q) return true;
    return false;
}

std::shared_ptr<const FiniteField> FiniteField::make(int q) {
    if (q < 256 && is_prime(q)) return std::shared_ptr<const FiniteField>(new FiniteField(q, q, 1, 0));
    for (const auto& e : kExtensions)
        if (e.q == q) return std::shared_ptr<const FiniteField>(new FiniteField(e.q, e.p, e.d, e.poly));
    throw Error(Errc::UnsupportedType, "no field of order " + std::to_string(q));
}

FiniteField::FiniteField(int q, int p, int d, int poly) : q_(q), p_(p), d_(d) {
    auto digits = [&](int a) {
        std::vector<int> v(d_);
        for (int i = 0; i < d_; ++i) {
            v[i] = a % p_;
            a /= p_;
        }
        return v;
    };
    auto pack = [&](const std::vector<int>& v) {
        int a = 0;
        for (int i = d_ - 1; i >= 0; --i) a = a * p_ + v[i];
        return a;
    };
    const std::vector<int> red = digits(poly);  // x^d = -(c_0 + ... + c_{d-1} x^{d-1})
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        auto da = digits(a);
        std::vector<int> n(d_);
        for (int i = 0; i < d_; ++i) n[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<uint8_t>(pack(n));
        for (int b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<int> s(d_);
            for (int i = 0; i < d_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = static_cast<uint8_t>(pack(s));
            // schoolbook product then reduce from the top
            std::vector<int> prod(2 * d_ - 1, 0);
            for (int i = 0; i < d_; ++i)
                for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int k = 2 * d_ - 2; k >= d_; --k) {
                int c = prod[k];
                if (!c) continue;
                prod[k] = 0;
                for (int i = 0; i < d_; ++i) prod[k - d_ + i] = ((prod[k - d_ + i] - c * red[i]) % p_ + p_) % p_;
            }
            prod.resize(d_);
            mul_[a * q + b] = static_cast<uint8_t>(pack(prod));
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
    // smallest element of multiplicative order q-1
    for (int g = 1; g < q; ++g) {
        int x = g, ord = 1;
        while (x != 1) {
            x = mul_[x * q + g];
            ++ord;
        }
        if (ord == q - 1) {
            gen_ = static_cast<uint8_t>(g);
            break;
        }
    }
}

uint8_t FiniteField::from_int(long k) const {
    long r = ((k % p_) + p_) % p_;
    return static_cast<uint8_t>(r);
}

std::vector<uint8_t> FiniteField::additive_basis() const {
    std::vector<uint8_t> b;
    int x = 1;
    for (int i = 0; i < d_; ++i) {
        b.push_back(static_cast<uint8_t>(x));
        x *= p_;
    }
    return b;
}

bool FiniteField::is_square(uint8_t a) const {
    if (a == 0) return true;
    for (int x = 1; x < q_; ++x)
        if (mul(static_cast<uint8_t>(x), static_cast<uint8_t>(x)) == a) return true;
    return false;
}

}  // namespace hecat
