#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hecat/coxeter/weyl_group.hpp"
#include "hecat/gflq/matrix.hpp"

namespace hecat {

enum class Series { GL, SL };

struct Subgroup {
    std::string name;
    std::vector<Mat> gens;
    std::function<bool(const Mat&)> contains;
    uint64_t order = 0;  // counted by scanning G for members
};

// Labels of a partition of G into double cosets L x R (or left cosets x R
// when L is trivial). Label 0 is the class of the identity; the others are
// numbered in order of their first element index.
struct Partition {
    std::vector<uint32_t> label;
    std::vector<uint32_t> reps;
    std::vector<uint64_t> sizes;
    size_t count() const { return reps.size(); }
};

// Full enumeration of GL_n(F_q) or SL_n(F_q).
class GroupTable {
public:
    static constexpr uint64_t kDefaultLimit = 20000000;
    static uint64_t order_formula(Series s, int n, int q);
    static std::shared_ptr<const GroupTable> build(Series s, int n, int q, uint64_t limit = kDefaultLimit);

    Series series() const { return series_; }
    int n() const { return n_; }
    const FiniteField& field() const { return *field_; }
    const MatOps& ops() const { return ops_; }
    uint32_t order() const { return static_cast<uint32_t>(codes_.size()); }
    std::string name() const;

    Mat element(uint32_t i) const { return mats_.empty() ? ops_.decode(codes_[i]) : mats_[i]; }
    uint32_t index_of(const Mat& m) const;
    uint32_t mul(uint32_t i, uint32_t j) const { return index_of(ops_.mul(element(i), element(j))); }
    uint32_t inverse(uint32_t i) const { return index_of(ops_.inverse(element(i))); }

    // Subgroup registry; ids are stable for the lifetime of the table.
    int trivial() const;
    int borel() const { return parabolic(ParabolicSubset{}); }
    int parabolic(ParabolicSubset I) const;
    // Fixed points of conjugation by diag(eps) (entries +-1).
    int fixed_diag(const std::vector<int>& eps) const;
    // Fixed points of g -> (g^T)^{-1}.
    int fixed_transpose_inverse() const;
    const Subgroup& subgroup(int id) const;
    // Closure of the generators by breadth-first search (for verification).
    uint64_t generated_order(int id) const;

    const Partition& partition(int left, int right) const;
    // Representative of the double coset of w (simple reflections lifted with
    // determinant 1).
    Mat weyl_rep(const WeylGroup& W, uint32_t w) const;
    // Partition label of each Weyl element's representative.
    std::vector<uint32_t> weyl_labels(int left, int right, const WeylGroup& W) const;

private:
    GroupTable(Series s, int n, std::shared_ptr<const FiniteField> F);
    int add_subgroup(const std::string& key, Subgroup sg) const;
    uint32_t lookup(uint64_t code) const;

    Series series_;
    int n_;
    std::shared_ptr<const FiniteField> field_;
    MatOps ops_;
    std::vector<uint64_t> codes_;   // ascending
    std::vector<uint32_t> dense_;   // code -> index + 1, when the code space is small
    std::vector<Mat> mats_;         // decoded elements, for groups of moderate size

    mutable std::mutex mutex_;
    mutable std::vector<std::unique_ptr<Subgroup>> subgroups_;
    mutable std::map<std::string, int> subgroup_ids_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<Partition>> partitions_;
};

// Function on G constant on (left, right)-double cosets, stored per label.
struct InvFunction {
    std::shared_ptr<const GroupTable> group;
    int left = 0, right = 0;
    std::vector<long long> values;

    static InvFunction indicator(std::shared_ptr<const GroupTable> g, int left, int right, uint32_t label);
    long long at(uint32_t element) const;
};

enum class ConvolveRoute { transversal, full_sum };

// (f*g)(x) = |N|^{-1} sum_{y in G} f(y) g(y^{-1} x) with N the middle subgroup.
InvFunction convolve_inv(const InvFunction& f, const InvFunction& g, ConvolveRoute route = ConvolveRoute::transversal);

}  // namespace hecat
