#include "hecat/gflq/group.hpp"

#include <algorithm>

#include "hecat/algebra/parallel.hpp"

namespace hecat {

uint64_t GroupTable::order_formula(Series s, int n, int q) {
    // |GL_n| = q^{n(n-1)/2} prod_{i=1}^n (q^i - 1); |SL_n| = |GL_n| / (q - 1)
    unsigned __int128 r = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) r *= static_cast<unsigned>(q);
    unsigned __int128 qi = 1;
    for (int i = 1; i <= n; ++i) {
        qi *= static_cast<unsigned>(q);
        r *= qi - 1;
    }
    if (s == Series::SL) r /= static_cast<unsigned>(q - 1);
    return r > UINT64_MAX ? UINT64_MAX : static_cast<uint64_t>(r);
}

GroupTable::GroupTable(Series s, int n, std::shared_ptr<const FiniteField> F)
    : series_(s), n_(n), field_(std::move(F)), ops_(*field_, n) {}

std::string GroupTable::name() const {
    return std::string(series_ == Series::GL ? "GL" : "SL") + std::to_string(n_) + "(F" + std::to_string(field_->q()) +
           ")";
}

std::shared_ptr<const GroupTable> GroupTable::build(Series s, int n, int q, uint64_t limit) {
    if (n < 1 || n > 4) throw Error(Errc::UnsupportedType, "matrix size must be between 1 and 4");
    auto F = FiniteField::make(q);
    const uint64_t expect = order_formula(s, n, q);
    if (expect > limit)
        throw Error(Errc::SizeLimitExceeded, "group order " + std::to_string(expect) + " exceeds " + std::to_string(limit));
    std::shared_ptr<GroupTable> g(new GroupTable(s, n, F));
    uint64_t space = 1;
    for (int i = 0; i < n * n; ++i) space *= static_cast<uint64_t>(q);
    g->codes_.reserve(expect);
    for (uint64_t c = 0; c < space; ++c) {
        uint8_t d = g->ops_.det(g->ops_.decode(c));
        if (s == Series::GL ? d != 0 : d == 1) g->codes_.push_back(c);
    }
    ensure(g->codes_.size() == expect, "enumerated order differs from the order formula");
    if (expect <= 4000000) {
        g->mats_.reserve(expect);
        for (uint64_t c : g->codes_) g->mats_.push_back(g->ops_.decode(c));
    }
    if (space <= (uint64_t{1} << 22)) {
        g->dense_.assign(space, 0);
        for (uint32_t i = 0; i < g->codes_.size(); ++i) g->dense_[g->codes_[i]] = i + 1;
    }
    return g;
}

uint32_t GroupTable::lookup(uint64_t code) const {
    if (!dense_.empty()) {
        uint32_t k = code < dense_.size() ? dense_[code] : 0;
        ensure(k != 0, "matrix is not in the group");
        return k - 1;
    }
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    ensure(it != codes_.end() && *it == code, "matrix is not in the group");
    return static_cast<uint32_t>(it - codes_.begin());
}

uint32_t GroupTable::index_of(const Mat& m) const { return lookup(ops_.encode(m)); }

int GroupTable::add_subgroup(const std::string& key, Subgroup sg) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = subgroup_ids_.find(key);
        if (it != subgroup_ids_.end()) return it->second;
    }
    uint64_t count = 0;
    for (uint32_t i = 0; i < order(); ++i)
        if (sg.contains(element(i))) ++count;
    sg.order = count;
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = subgroup_ids_.find(key);
    if (it != subgroup_ids_.end()) return it->second;
    subgroups_.push_back(std::make_unique<Subgroup>(std::move(sg)));
    int id = static_cast<int>(subgroups_.size()) - 1;
    subgroup_ids_.emplace(key, id);
    return id;
}

const Subgroup& GroupTable::subgroup(int id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return *subgroups_.at(id);
}

int GroupTable::trivial() const {
    Subgroup sg;
    sg.name = "1";
    Mat id = ops_.identity();
    sg.contains = [id](const Mat& m) { return m == id; };
    return add_subgroup("1", std::move(sg));
}

namespace {

// Torus generators: diag(z at i) for GL, diag(z at i, z^-1 at i+1) for SL.
std::vector<Mat> torus_gens(const MatOps& o, Series s) {
    const FiniteField& F = o.field();
    const int n = o.n();
    std::vector<Mat> gens;
    uint8_t z = F.generator();
    if (s == Series::GL) {
        for (int i = 0; i < n; ++i) {
            std::vector<uint8_t> d(n, 1);
            d[i] = z;
            gens.push_back(o.diagonal(d));
        }
    } else {
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<uint8_t> d(n, 1);
            d[i] = z;
            d[i + 1] = F.inv(z);
            gens.push_back(o.diagonal(d));
        }
    }
    return gens;
}

}  // namespace

int GroupTable::parabolic(ParabolicSubset I) const {
    const int n = n_;
    std::vector<int> block(n, 0);
    for (int i = 1; i < n; ++i) block[i] = I.contains(i - 1) ? block[i - 1] : block[i - 1] + 1;
    Subgroup sg;
    sg.name = I.mask == 0 ? "B" : "P" + I.str();
    sg.gens = torus_gens(ops_, series_);
    for (uint8_t b : field_->additive_basis())
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i < j || (i > j && block[i] == block[j])) sg.gens.push_back(ops_.elementary(i, j, b));
    sg.contains = [block, n](const Mat& m) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (m.at(i, j) && block[i] != block[j]) return false;
        return true;
    };
    return add_subgroup("P" + std::to_string(I.mask), std::move(sg));
}

int GroupTable::fixed_diag(const std::vector<int>& eps) const {
    if (field_->p() == 2) throw Error(Errc::EvenCharacteristic, "symmetric pairs need odd characteristic");
    if (static_cast<int>(eps.size()) != n_) throw Error(Errc::InvalidInvolution, "epsilon vector has wrong length");
    const int n = n_;
    Subgroup sg;
    std::string key = "Kdiag";
    for (int e : eps) key += e > 0 ? '+' : '-';
    sg.name = key;
    // K is block diagonal by sign classes: in-block root elements plus the torus.
    for (uint8_t b : field_->additive_basis())
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && eps[i] == eps[j]) sg.gens.push_back(ops_.elementary(i, j, b));
    for (const Mat& t : torus_gens(ops_, series_)) sg.gens.push_back(t);
    sg.contains = [eps, n](const Mat& m) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (eps[i] != eps[j] && m.at(i, j)) return false;
        return true;
    };
    return add_subgroup(key, std::move(sg));
}

int GroupTable::fixed_transpose_inverse() const {
    if (field_->p() == 2) throw Error(Errc::EvenCharacteristic, "symmetric pairs need odd characteristic");
    Subgroup sg;
    sg.name = "O";
    const MatOps& o = ops_;
    sg.contains = [&o](const Mat& m) { return o.mul(m, o.transpose(m)) == o.identity(); };
    // Generators: grow greedily from the members until the closure is everything.
    std::vector<uint32_t> members;
    for (uint32_t i = 0; i < order(); ++i)
        if (sg.contains(element(i))) members.push_back(i);
    std::vector<char> in(order(), 0);
    std::vector<uint32_t> closure{index_of(o.identity())};
    in[closure[0]] = 1;
    for (uint32_t cand : members) {
        if (in[cand]) continue;
        sg.gens.push_back(element(cand));
        // re-close with all generators from the current closure
        for (size_t k = 0; k < closure.size(); ++k)
            for (const Mat& gm : sg.gens) {
                uint32_t y = index_of(o.mul(element(closure[k]), gm));
                if (!in[y]) {
                    in[y] = 1;
                    closure.push_back(y);
                }
            }
    }
    return add_subgroup("Ktinv", std::move(sg));
}

uint64_t GroupTable::generated_order(int id) const {
    const Subgroup& sg = subgroup(id);
    std::vector<char> in(order(), 0);
    std::vector<uint32_t> closure{index_of(ops_.identity())};
    in[closure[0]] = 1;
    for (size_t k = 0; k < closure.size(); ++k)
        for (const Mat& gm : sg.gens) {
            uint32_t y = index_of(ops_.mul(element(closure[k]), gm));
            if (!in[y]) {
                in[y] = 1;
                closure.push_back(y);
            }
        }
    return closure.size();
}

namespace {

// Generators that are elementary or diagonal act by a single row or column
// operation, which is much cheaper than a full product in the orbit sweeps.
struct GenOp {
    enum Kind { general, elementary, diagonal } kind = general;
    int i = 0, j = 0;
    uint8_t c = 0;
    Mat m;
};

GenOp classify(const Mat& g) {
    GenOp op;
    op.m = g;
    int off = 0, oi = 0, oj = 0;
    bool unit_diag = true;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            if (i == j) {
                unit_diag = unit_diag && g.at(i, i) == 1;
            } else if (g.at(i, j)) {
                ++off;
                oi = i;
                oj = j;
            }
        }
    if (off == 0) op.kind = GenOp::diagonal;
    if (off == 1 && unit_diag) {
        op.kind = GenOp::elementary;
        op.i = oi;
        op.j = oj;
        op.c = g.at(oi, oj);
    }
    return op;
}

Mat apply_left(const MatOps& o, const GenOp& op, Mat y) {
    const FiniteField& F = o.field();
    switch (op.kind) {
        case GenOp::elementary:
            for (int k = 0; k < y.n; ++k) y.at(op.i, k) = F.add(y.at(op.i, k), F.mul(op.c, y.at(op.j, k)));
            return y;
        case GenOp::diagonal:
            for (int i = 0; i < y.n; ++i)
                if (op.m.at(i, i) != 1)
                    for (int k = 0; k < y.n; ++k) y.at(i, k) = F.mul(op.m.at(i, i), y.at(i, k));
            return y;
        default:
            return o.mul(op.m, y);
    }
}

Mat apply_right(const MatOps& o, const GenOp& op, Mat y) {
    const FiniteField& F = o.field();
    switch (op.kind) {
        case GenOp::elementary:
            for (int k = 0; k < y.n; ++k) y.at(k, op.j) = F.add(y.at(k, op.j), F.mul(y.at(k, op.i), op.c));
            return y;
        case GenOp::diagonal:
            for (int j = 0; j < y.n; ++j)
                if (op.m.at(j, j) != 1)
                    for (int k = 0; k < y.n; ++k) y.at(k, j) = F.mul(y.at(k, j), op.m.at(j, j));
            return y;
        default:
            return o.mul(y, op.m);
    }
}

}  // namespace

const Partition& GroupTable::partition(int left, int right) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = partitions_.find({left, right});
        if (it != partitions_.end()) return *it->second;
    }
    std::vector<GenOp> lops, rops;
    for (const Mat& g : subgroup(left).gens) lops.push_back(classify(g));
    for (const Mat& g : subgroup(right).gens) rops.push_back(classify(g));
    auto p = std::make_unique<Partition>();
    const uint32_t none = UINT32_MAX;
    p->label.assign(order(), none);
    std::vector<uint32_t> queue;
    const uint32_t e = index_of(ops_.identity());
    for (uint32_t k = 0; k <= order(); ++k) {
        const uint32_t start = k == 0 ? e : k - 1;
        if (p->label[start] != none) continue;
        const uint32_t lab = static_cast<uint32_t>(p->reps.size());
        p->reps.push_back(start);
        queue.assign(1, start);
        p->label[start] = lab;
        for (size_t t = 0; t < queue.size(); ++t) {
            const Mat y = element(queue[t]);
            auto visit = [&](const Mat& m) {
                uint32_t z = index_of(m);
                if (p->label[z] == none) {
                    p->label[z] = lab;
                    queue.push_back(z);
                }
            };
            for (const GenOp& op : lops) visit(apply_left(ops_, op, y));
            for (const GenOp& op : rops) visit(apply_right(ops_, op, y));
        }
        p->sizes.push_back(queue.size());
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return *partitions_.emplace(std::make_pair(left, right), std::move(p)).first->second;
}

Mat GroupTable::weyl_rep(const WeylGroup& W, uint32_t w) const {
    if (!W.type().is_type_a() || W.rank() != n_ - 1)
        throw Error(Errc::GroupMismatch, "Weyl group " + W.type().str() + " does not match " + name());
    Mat m = ops_.identity();
    for (int s : W.reduced_word(w)) m = ops_.mul(m, ops_.simple_reflection(s));
    return m;
}

std::vector<uint32_t> GroupTable::weyl_labels(int left, int right, const WeylGroup& W) const {
    const Partition& p = partition(left, right);
    std::vector<uint32_t> out(W.size());
    for (uint32_t w = 0; w < W.size(); ++w) out[w] = p.label[index_of(weyl_rep(W, w))];
    return out;
}

InvFunction InvFunction::indicator(std::shared_ptr<const GroupTable> g, int left, int right, uint32_t label) {
    InvFunction f;
    f.values.assign(g->partition(left, right).count(), 0);
    f.values.at(label) = 1;
    f.group = std::move(g);
    f.left = left;
    f.right = right;
    return f;
}

long long InvFunction::at(uint32_t element) const { return values[group->partition(left, right).label[element]]; }

InvFunction convolve_inv(const InvFunction& f, const InvFunction& g, ConvolveRoute route) {
    if (f.group != g.group) throw Error(Errc::GroupMismatch, "functions on different groups");
    if (f.right != g.left) throw Error(Errc::MiddleMismatch, "right subgroup of f differs from left subgroup of g");
    const GroupTable& G = *f.group;
    const Partition& pf = G.partition(f.left, f.right);
    const Partition& pg = G.partition(g.left, g.right);
    const Partition& out = G.partition(f.left, g.right);

    std::vector<uint32_t> ys;
    if (route == ConvolveRoute::transversal) {
        ys = G.partition(G.trivial(), f.right).reps;
    } else {
        ys.resize(G.order());
        for (uint32_t i = 0; i < G.order(); ++i) ys[i] = i;
    }
    const int workers = thread_count();
    std::vector<std::vector<__int128>> partial(workers, std::vector<__int128>(out.count(), 0));
    parallel_chunks(ys.size(), workers, [&](int k, size_t b, size_t e) {
        auto& acc = partial[k];
        for (size_t t = b; t < e; ++t) {
            long long fy = f.values[pf.label[ys[t]]];
            if (!fy) continue;
            Mat yinv = G.ops().inverse(G.element(ys[t]));
            for (uint32_t c = 0; c < out.count(); ++c) {
                uint32_t z = G.index_of(G.ops().mul(yinv, G.element(out.reps[c])));
                acc[c] += static_cast<__int128>(fy) * g.values[pg.label[z]];
            }
        }
    });
    InvFunction r;
    r.group = f.group;
    r.left = f.left;
    r.right = g.right;
    r.values.assign(out.count(), 0);
    const long long norm = route == ConvolveRoute::full_sum ? static_cast<long long>(G.subgroup(f.right).order) : 1;
    for (uint32_t c = 0; c < out.count(); ++c) {
        __int128 s = 0;
        for (int k = 0; k < workers; ++k) s += partial[k][c];
        if (s % norm != 0) throw Error(Errc::NonIntegralConvolution, "sum not divisible by the middle subgroup order");
        s /= norm;
        ensure(s <= INT64_MAX && s >= INT64_MIN, "convolution value overflows 64 bits");
        r.values[c] = static_cast<long long>(s);
    }
    return r;
}

}  // namespace hecat
