#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "hecat/algebra/laurent.hpp"
#include "hecat/coxeter/cartan.hpp"

namespace hecat {

class WeylGroup;

// Handle to an element of a built WeylGroup. The group stores the canonical
// matrix; two handles of the same group are equal iff the matrices are.
class WeylElem {
public:
    WeylElem() = default;
    WeylElem(const WeylGroup* g, uint32_t index) : group_(g), index_(index) {}

    const WeylGroup* group() const { return group_; }
    uint32_t index() const { return index_; }
    int length() const;
    uint32_t left_descents() const;
    uint32_t right_descents() const;
    std::string str() const;

    friend bool operator==(const WeylElem& a, const WeylElem& b) {
        return a.group_ == b.group_ && a.index_ == b.index_;
    }
    friend auto operator<=>(const WeylElem& a, const WeylElem& b) { return a.index_ <=> b.index_; }

private:
    const WeylGroup* group_ = nullptr;
    uint32_t index_ = 0;
};

// Subset of simple reflections as a bit mask (bit i = s_{i+1}).
struct ParabolicSubset {
    uint32_t mask = 0;
    bool contains(int s) const { return (mask >> s) & 1u; }
    // "{s1,s3}", "{}", "s1 s3", "1,3"
    static ParabolicSubset parse(std::string_view text);
    std::string str() const;
    friend auto operator<=>(const ParabolicSubset&, const ParabolicSubset&) = default;
};

struct DoubleCoset {
    ParabolicSubset left;
    ParabolicSubset right;
    WeylElem minrep;
    friend bool operator==(const DoubleCoset& a, const DoubleCoset& b) {
        return a.left == b.left && a.right == b.right && a.minrep == b.minrep;
    }
};

// All (I,J)-double cosets of W, ordered by (length of minimal representative, index).
struct DoubleCosetTable {
    ParabolicSubset left, right;
    std::vector<uint32_t> minreps;
    std::vector<uint32_t> maxreps;
    std::vector<std::vector<uint32_t>> members;
    std::vector<uint32_t> coset_of;  // element index -> coset position
};

struct DiagramInvolution {
    std::string name;
    std::vector<int> perm;  // s_i -> s_perm[i]
};

class WeylGroup {
public:
    static constexpr uint64_t kDefaultLimit = 1000000;

    static std::shared_ptr<const WeylGroup> build(const CartanType& t, uint64_t size_limit = kDefaultLimit);
    static std::shared_ptr<const WeylGroup> build(std::string_view type, uint64_t size_limit = kDefaultLimit) {
        return build(CartanType::parse(type), size_limit);
    }

    const CartanType& type() const { return type_; }
    int rank() const { return rank_; }
    uint32_t size() const { return static_cast<uint32_t>(length_.size()); }

    WeylElem elem(uint32_t i) const { return WeylElem(this, i); }
    WeylElem identity() const { return elem(0); }
    WeylElem simple(int s) const { return elem(lmul_[s][0]); }
    WeylElem longest() const { return elem(longest_); }
    std::vector<WeylElem> elements() const;

    int length(uint32_t i) const { return length_[i]; }
    uint32_t lmul(int s, uint32_t w) const { return lmul_[s][w]; }
    uint32_t rmul(uint32_t w, int s) const { return rmul_[s][w]; }
    uint32_t inverse_index(uint32_t w) const { return inverse_[w]; }
    uint32_t left_descents(uint32_t w) const { return ldesc_[w]; }
    uint32_t right_descents(uint32_t w) const { return rdesc_[w]; }
    // Simple-root action matrix, row-major rank x rank (column j = image of alpha_j).
    std::vector<int> matrix(uint32_t w) const;

    WeylElem mul(const WeylElem& x, const WeylElem& y) const;
    WeylElem inverse(const WeylElem& x) const;
    // Left-greedy reduced word: repeatedly strip the smallest left descent.
    std::vector<int> reduced_word(uint32_t w) const;
    std::string word_str(uint32_t w) const;
    WeylElem from_word(const std::vector<int>& word) const;
    // "s1 s2 s1", "e", "s1s2", "1 2 1"
    WeylElem parse(std::string_view text) const;

    bool bruhat_leq(const WeylElem& x, const WeylElem& w) const;
    bool bruhat_leq(uint32_t x, uint32_t w) const;
    WeylElem demazure_star(const WeylElem& x, const WeylElem& y) const;
    uint32_t demazure_left(int s, uint32_t w) const {
        return length_[lmul_[s][w]] > length_[w] ? lmul_[s][w] : w;
    }

    std::vector<uint32_t> parabolic_elements(ParabolicSubset I) const;
    uint32_t parabolic_longest(ParabolicSubset I) const;
    LaurentPoly poincare(ParabolicSubset I) const;
    DoubleCoset coset_project(const WeylElem& w, ParabolicSubset I, ParabolicSubset J) const;
    uint32_t coset_min(uint32_t w, ParabolicSubset I, ParabolicSubset J) const;
    std::vector<DoubleCoset> double_cosets(ParabolicSubset I, ParabolicSubset J) const;
    std::shared_ptr<const DoubleCosetTable> coset_table(ParabolicSubset I, ParabolicSubset J) const;

    DiagramInvolution diagram_involution(std::string_view name) const;
    WeylElem apply(const DiagramInvolution& theta, const WeylElem& w) const;

    void check_same(const WeylElem& x) const;

private:
    explicit WeylGroup(const CartanType& t);
    void enumerate(uint64_t size_limit);

    CartanType type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int8_t> matrices_;  // size() * rank^2
    std::vector<uint8_t> length_;
    std::vector<std::vector<uint32_t>> lmul_, rmul_;
    std::vector<uint32_t> inverse_, ldesc_, rdesc_;
    uint32_t longest_ = 0;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const DoubleCosetTable>> coset_cache_;
};

std::string word_to_string(const std::vector<int>& word);

}  // namespace hecat
