#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hecat {

// Finite field F_q with full addition and multiplication tables. Elements
// are 0..q-1; an element of F_{p^d} is the integer whose base-p digits are
// its coordinates in the power basis of the defining polynomial.
class FiniteField {
public:
    // Primes below 256 and the prime powers 4, 8, 9.
    static std::shared_ptr<const FiniteField> make(int q);
    static bool supported(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int degree() const { return d_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add(a, neg(b)); }
    uint8_t inv(uint8_t a) const { return inv_[a]; }
    // Image of an integer in the prime field.
    uint8_t from_int(long k) const;
    uint8_t generator() const { return gen_; }
    // Basis of F_q over F_p: 1, t, t^2, ...
    std::vector<uint8_t> additive_basis() const;
    bool is_square(uint8_t a) const;

private:
    FiniteField(int q, int p, int d, int poly);
    int q_, p_, d_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
    uint8_t gen_ = 1;
};

}  // namespace hecat
