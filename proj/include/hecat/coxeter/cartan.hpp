#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hecat {

struct CartanFactor {
    char letter;  // A B C D F G
    int rank;
    friend bool operator==(const CartanFactor&, const CartanFactor&) = default;
};

class CartanType {
public:
    // "A3", "A1xA1", "B2", "G2xA1". Factors are numbered consecutively.
    static CartanType parse(std::string_view text);
    explicit CartanType(std::vector<CartanFactor> factors);

    const std::vector<CartanFactor>& factors() const { return factors_; }
    int rank() const { return rank_; }
    std::string str() const;
    // a_ij = <alpha_i^vee, alpha_j>
    std::vector<std::vector<int>> cartan_matrix() const;
    // Order of the Weyl group by the product formula (saturates at UINT64_MAX).
    uint64_t group_order() const;
    bool is_square() const { return factors_.size() == 2 && factors_[0] == factors_[1]; }
    bool is_type_a() const;

    friend bool operator==(const CartanType& a, const CartanType& b) { return a.factors_ == b.factors_; }

private:
    std::vector<CartanFactor> factors_;
    int rank_ = 0;
};

}  // namespace hecat
