#include "hecat/orbit/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

#include "hecat/algebra/error.hpp"
#include "hecat/coxeter/weyl_group.hpp"

namespace hecat {

namespace {

std::string group_name(Series s, int n) { return (s == Series::GL ? "GL" : "SL") + std::to_string(n); }

std::pair<Series, int> parse_group(const std::string& text) {
    if (text.size() == 3 && (text.rfind("GL", 0) == 0 || text.rfind("SL", 0) == 0) && text[2] >= '2' &&
        text[2] <= '4')
        return {text[0] == 'G' ? Series::GL : Series::SL, text[2] - '0'};
    throw Error(Errc::ParseError, "oracle group must be GL2..GL4 or SL2..SL4, got '" + text + "'");
}

std::vector<int> parse_diag(const std::string& text) {
    std::string body = text;
    if (body.rfind("diag(", 0) != 0 || body.back() != ')')
        throw Error(Errc::InvalidInvolution, "theta must be diag(...) with entries +-1, got '" + text + "'");
    body = body.substr(5, body.size() - 6);
    std::vector<int> eps;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok == "1" || tok == "+1")
            eps.push_back(1);
        else if (tok == "-1")
            eps.push_back(-1);
        else
            throw Error(Errc::InvalidInvolution, "diagonal entry '" + tok + "' is not +-1");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return eps;
}

long int_det(const IntMat& g, int n) {
    if (n == 1) return g[0];
    long d = 0;
    for (int j = 0; j < n; ++j) {
        if (!g[j]) continue;
        IntMat minor;
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (c != j) minor.push_back(g[r * n + c]);
        d += (j % 2 ? -1 : 1) * g[j] * int_det(minor, n - 1);
    }
    return d;
}

IntMat int_mul(const IntMat& x, const IntMat& y, int n) {
    IntMat z(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
    return z;
}

// Signed permutation lift of w: product of the determinant-one lifts of the
// simple reflections along a reduced word.
IntMat weyl_lift(const WeylGroup& W, uint32_t w, int n) {
    IntMat m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    for (int s : W.reduced_word(w)) {
        IntMat r(n * n, 0);
        for (int i = 0; i < n; ++i) r[i * n + i] = 1;
        r[s * n + s] = 0;
        r[(s + 1) * n + s + 1] = 0;
        r[s * n + s + 1] = -1;
        r[(s + 1) * n + s] = 1;
        m = int_mul(m, r, n);
    }
    return m;
}

class SwitchOracle final : public PointOracle {
public:
    SwitchOracle(std::shared_ptr<const FiniteField> F, int n) : PointOracle(std::move(F), n) {
        auto W = WeylGroup::build("A" + std::to_string(n - 1));
        std::vector<Mat> reps;
        for (uint32_t w = 0; w < W->size(); ++w) {
            Mat m = reduce(weyl_lift(*W, w, n));
            cell_[ops_.bruhat_cell(m)] = w;
            reps.push_back(m);
            geometric_.push_back(w);
        }
        geometric_count_ = W->size();
        build_steps(reps);
    }

protected:
    Mat point_of(const Mat& g) const override { return g; }
    Mat act(const Mat& g, const Mat& x) const override { return ops_.mul(g, x); }
    uint32_t classify(const Mat& x) const override { return cell_.at(ops_.bruhat_cell(x)); }

private:
    std::map<std::vector<int>, uint32_t> cell_;
};

class SymmetricOracle final : public PointOracle {
public:
    SymmetricOracle(std::shared_ptr<const FiniteField> F, Series series, const std::vector<int>& eps)
        : PointOracle(std::move(F), static_cast<int>(eps.size())) {
        const int n = ops_.n();
        std::vector<uint8_t> d;
        for (int e : eps) d.push_back(F_->from_int(e));
        eps_ = ops_.diagonal(d);

        const uint8_t z = F_->generator();
        std::vector<Mat> torus, unipotent_up, unipotent_down;
        for (int i = 0; i < n; ++i) {
            std::vector<uint8_t> t(n, 1);
            if (series == Series::GL) {
                t[i] = z;
            } else {
                if (i + 1 == n) break;
                t[i] = z;
                t[i + 1] = F_->inv(z);
            }
            torus.push_back(ops_.diagonal(t));
        }
        for (uint8_t b : F_->additive_basis())
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i < j) unipotent_up.push_back(ops_.elementary(i, j, b));
                    if (i > j) unipotent_down.push_back(ops_.elementary(i, j, b));
                }
        std::vector<Mat> borel = torus;
        borel.insert(borel.end(), unipotent_up.begin(), unipotent_up.end());
        std::vector<Mat> all = borel;
        all.insert(all.end(), unipotent_down.begin(), unipotent_down.end());

        // X by breadth-first search from the base point.
        points_.push_back(ops_.identity());
        index_[ops_.encode(points_[0])] = 0;
        for (size_t k = 0; k < points_.size(); ++k)
            for (const Mat& g : all) {
                Mat y = act(g, points_[k]);
                if (index_.emplace(ops_.encode(y), static_cast<uint32_t>(points_.size())).second)
                    points_.push_back(y);
            }

        // B-orbits on X.
        const uint32_t none = UINT32_MAX;
        class_.assign(points_.size(), none);
        std::vector<Mat> reps;
        for (uint32_t start = 0; start < points_.size(); ++start) {
            if (class_[start] != none) continue;
            const uint32_t c = static_cast<uint32_t>(reps.size());
            reps.push_back(points_[start]);
            class_[start] = c;
            std::deque<uint32_t> todo{start};
            while (!todo.empty()) {
                uint32_t k = todo.front();
                todo.pop_front();
                for (const Mat& g : borel) {
                    uint32_t y = index_.at(ops_.encode(act(g, points_[k])));
                    if (class_[y] == none) {
                        class_[y] = c;
                        todo.push_back(y);
                    }
                }
            }
        }

        // Geometric merge by the diagonal torus of GL_n, which normalizes B
        // and commutes with theta.
        std::vector<uint32_t> parent(reps.size());
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](uint32_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (int i = 0; i < n; ++i) {
            std::vector<uint8_t> t(n, 1);
            t[i] = z;
            Mat tm = ops_.diagonal(t);
            for (uint32_t c = 0; c < reps.size(); ++c) {
                uint32_t a = find(c), b = find(classify(act(tm, reps[c])));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        std::map<uint32_t, uint32_t> root_id;
        for (uint32_t c = 0; c < reps.size(); ++c) {
            auto [it, fresh] = root_id.emplace(find(c), static_cast<uint32_t>(root_id.size()));
            geometric_.push_back(it->second);
        }
        geometric_count_ = static_cast<uint32_t>(root_id.size());
        build_steps(reps);
    }

protected:
    // g theta(g)^-1 with theta(g) = eps g eps
    Mat point_of(const Mat& g) const override { return ops_.mul(ops_.mul(g, eps_), ops_.mul(ops_.inverse(g), eps_)); }
    Mat act(const Mat& g, const Mat& x) const override {
        return ops_.mul(ops_.mul(g, x), ops_.mul(eps_, ops_.mul(ops_.inverse(g), eps_)));
    }
    uint32_t classify(const Mat& x) const override {
        auto it = index_.find(ops_.encode(x));
        ensure(it != index_.end(), "point outside the symmetric variety");
        return class_[it->second];
    }

private:
    Mat eps_;
    std::vector<Mat> points_;
    std::unordered_map<uint64_t, uint32_t> index_;
    std::vector<uint32_t> class_;
};

}  // namespace

std::string OracleDescriptor::str() const {
    if (kind == Kind::Switch) return "switch(" + group_name(series, n) + ")";
    std::string t = "diag(";
    for (size_t i = 0; i < eps.size(); ++i) t += (i ? "," : "") + std::to_string(eps[i]);
    return "symmetric(" + group_name(series, n) + ", " + t + "))";
}

nlohmann::json OracleDescriptor::to_json() const {
    nlohmann::json j;
    j["kind"] = kind == Kind::Switch ? "switch" : "symmetric";
    j["group"] = group_name(series, n);
    if (kind == Kind::Symmetric) {
        std::string t = "diag(";
        for (size_t i = 0; i < eps.size(); ++i) t += (i ? "," : "") + std::to_string(eps[i]);
        j["theta"] = t + ")";
    }
    return j;
}

OracleDescriptor OracleDescriptor::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("group"))
        throw Error(Errc::ParseError, "oracle descriptor needs 'kind' and 'group'");
    OracleDescriptor d;
    const std::string kind = j.at("kind").get<std::string>();
    std::tie(d.series, d.n) = parse_group(j.at("group").get<std::string>());
    if (kind == "switch") {
        d.kind = Kind::Switch;
        if (d.series != Series::GL) throw Error(Errc::UnsupportedContext, "switch oracle is implemented for GL_n");
    } else if (kind == "symmetric") {
        d.kind = Kind::Symmetric;
        if (!j.contains("theta")) throw Error(Errc::ParseError, "symmetric oracle needs 'theta'");
        d.eps = parse_diag(j.at("theta").get<std::string>());
        if (static_cast<int>(d.eps.size()) != d.n)
            throw Error(Errc::InvalidInvolution, "theta has the wrong size for " + group_name(d.series, d.n));
    } else {
        throw Error(Errc::ParseError, "unknown oracle kind '" + kind + "'");
    }
    return d;
}

std::unique_ptr<PointOracle> PointOracle::make(const OracleDescriptor& d, int q) {
    if (!FiniteField::supported(q)) throw Error(Errc::UnsupportedContext, "F_" + std::to_string(q) + " unsupported");
    auto F = FiniteField::make(q);
    if (d.kind == OracleDescriptor::Kind::Switch) return std::make_unique<SwitchOracle>(F, d.n);
    if (q % 2 == 0) throw Error(Errc::EvenCharacteristic, "symmetric oracle needs odd q");
    return std::make_unique<SymmetricOracle>(F, d.series, d.eps);
}

std::vector<IntMat> PointOracle::candidates(const OracleDescriptor& d) {
    const int n = d.n;
    if (d.kind == OracleDescriptor::Kind::Switch) {
        auto W = WeylGroup::build("A" + std::to_string(n - 1));
        std::vector<IntMat> out;
        for (uint32_t w = 0; w < W->size(); ++w) out.push_back(weyl_lift(*W, w, n));
        return out;
    }
    // Sparsest first, then lexicographic in the digit order 0, 1, -1.
    std::vector<std::pair<int, IntMat>> found;
    const int cells = n * n;
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        IntMat g(cells);
        long c = code;
        int nonzero = 0;
        for (int i = cells - 1; i >= 0; --i) {
            int digit = static_cast<int>(c % 3);
            c /= 3;
            g[i] = digit == 2 ? -1 : digit;
            nonzero += digit != 0;
        }
        long det = int_det(g, n);
        if (det != 1 && !(det == -1 && d.series == Series::GL)) continue;
        found.emplace_back(nonzero, std::move(g));
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<IntMat> out;
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

Mat PointOracle::reduce(const IntMat& g) const {
    const int n = ops_.n();
    ensure(static_cast<int>(g.size()) == n * n, "integer matrix of the wrong size");
    Mat m;
    m.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = F_->from_int(g[i * n + j]);
    return m;
}

void PointOracle::build_steps(const std::vector<Mat>& reps) {
    const int q = F_->q();
    steps_.assign(rank(), std::vector<std::vector<uint32_t>>(reps.size()));
    for (int s = 0; s < rank(); ++s) {
        const Mat sinv = ops_.inverse(ops_.simple_reflection(s));
        std::vector<Mat> moves;
        for (int a = 0; a < q; ++a)
            moves.push_back(ops_.mul(sinv, ops_.root_element(s, F_->neg(static_cast<uint8_t>(a)))));
        for (size_t c = 0; c < reps.size(); ++c) {
            auto& row = steps_[s][c];
            row.reserve(q);
            for (const Mat& g : moves) row.push_back(classify(act(g, reps[c])));
        }
    }
}

}  // namespace hecat
