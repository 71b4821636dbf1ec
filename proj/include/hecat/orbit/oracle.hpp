#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecat/gflq/group.hpp"
#include "hecat/gflq/matrix.hpp"

namespace hecat {

// Which finite-field model realizes an orbit datum. "switch" is B x B acting
// on G x G / diag(G), i.e. Bruhat cells of GL_n. "symmetric" is B acting on
// X = {g theta(g)^-1} for theta = conjugation by a diagonal sign matrix.
struct OracleDescriptor {
    enum class Kind { Switch, Symmetric };
    Kind kind = Kind::Switch;
    Series series = Series::GL;
    int n = 2;
    std::vector<int> eps;  // diagonal of theta, symmetric kind only

    std::string str() const;
    nlohmann::json to_json() const;
    static OracleDescriptor from_json(const nlohmann::json& j);
};

// Integer matrix, row-major n x n, entries in {-1,0,1} with determinant +-1
// so that it reduces to an invertible matrix over every F_q.
using IntMat = std::vector<int>;

// Rational B-orbits on the point model over one F_q, with the geometric
// merge (orbits of the GL_n diagonal torus) and the P_s-fiber steps
// x -> s^-1 u_s(-a) x for a in F_q.
class PointOracle {
public:
    static std::unique_ptr<PointOracle> make(const OracleDescriptor& d, int q);
    virtual ~PointOracle() = default;

    int q() const { return F_->q(); }
    int rank() const { return ops_.n() - 1; }
    uint32_t class_count() const { return static_cast<uint32_t>(geometric_.size()); }
    uint32_t geometric_count() const { return geometric_count_; }
    uint32_t geometric(uint32_t cls) const { return geometric_[cls]; }
    // Rational class of the point attached to an integer matrix.
    uint32_t locate(const IntMat& g) const { return classify(point_of(reduce(g))); }
    // Classes of s^-1 u_s(-a) x_cls, indexed by a.
    const std::vector<uint32_t>& step(int s, uint32_t cls) const { return steps_[s][cls]; }

    // Candidate canonical representatives, in a fixed order.
    static std::vector<IntMat> candidates(const OracleDescriptor& d);

protected:
    PointOracle(std::shared_ptr<const FiniteField> F, int n) : F_(std::move(F)), ops_(*F_, n) {}
    Mat reduce(const IntMat& g) const;
    virtual Mat point_of(const Mat& g) const = 0;
    virtual Mat act(const Mat& g, const Mat& x) const = 0;
    virtual uint32_t classify(const Mat& x) const = 0;
    // Fills steps_ from one point per rational class.
    void build_steps(const std::vector<Mat>& reps);

    std::shared_ptr<const FiniteField> F_;
    MatOps ops_;
    std::vector<uint32_t> geometric_;
    uint32_t geometric_count_ = 0;
    std::vector<std::vector<std::vector<uint32_t>>> steps_;
};

}  // namespace hecat
