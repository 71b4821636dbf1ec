#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hecat/gflq/group.hpp"

namespace hecat {

// A homomorphism K -> {+1,-1}, listed by K-element (in group index order).
struct QuadraticCharacter {
    std::vector<int> gen_values;  // value on each generator of K
    std::vector<uint32_t> kernel;  // sorted group indices with value +1
    bool trivial() const;
};

struct SymmetricPair {
    std::shared_ptr<const GroupTable> group;
    std::string theta;
    int K = -1;
    int B = -1;
    const Partition* orbits = nullptr;  // (B, K) double cosets
    std::vector<uint32_t> members;      // group indices of K, ascending
    // Rational orbits that become one orbit over the algebraic closure: for
    // sign-matrix involutions, the classes of conjugation by the diagonal
    // torus of GL_n (which normalizes B and K). Identity map otherwise.
    std::vector<uint32_t> geometric;    // rational label -> geometric label
    uint32_t geometric_count = 0;
    std::vector<QuadraticCharacter> characters;
};

// theta is "transpose-inverse" or "diag(1,-1,...)" (conjugation by a sign
// matrix). Requires odd q.
SymmetricPair symmetric_pair(std::shared_ptr<const GroupTable> g, std::string_view theta);

}  // namespace hecat
