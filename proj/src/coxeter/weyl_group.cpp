#include "hecat/coxeter/weyl_group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace hecat {

int WeylElem::length() const { return group_->length(index_); }
uint32_t WeylElem::left_descents() const { return group_->left_descents(index_); }
uint32_t WeylElem::right_descents() const { return group_->right_descents(index_); }
std::string WeylElem::str() const { return group_->word_str(index_); }

std::string word_to_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (size_t k = 0; k < word.size(); ++k) {
        if (k) s += ' ';
        s += 's' + std::to_string(word[k] + 1);
    }
    return s;
}

ParabolicSubset ParabolicSubset::parse(std::string_view text) {
    ParabolicSubset p;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::string digits = cur[0] == 's' ? cur.substr(1) : cur;
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
            throw Error(Errc::ParseError, "bad parabolic subset '" + std::string(text) + "'");
        int k = std::stoi(digits);
        if (k < 1 || k > 31) throw Error(Errc::ParseError, "simple reflection index out of range");
        p.mask |= 1u << (k - 1);
        cur.clear();
    };
    for (char c : text) {
        if (c == '{' || c == '}' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else if (c == 's' && !cur.empty()) {
            flush();
            cur = "s";
        } else {
            cur += c;
        }
    }
    flush();
    return p;
}

std::string ParabolicSubset::str() const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (contains(i)) {
            if (!first) s += ',';
            s += 's' + std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

WeylGroup::WeylGroup(const CartanType& t) : type_(t), rank_(t.rank()), cartan_(t.cartan_matrix()) {}

std::shared_ptr<const WeylGroup> WeylGroup::build(const CartanType& t, uint64_t size_limit) {
    if (t.group_order() > size_limit)
        throw Error(Errc::SizeLimitExceeded,
                    t.str() + " has order " + std::to_string(t.group_order()) + " > " + std::to_string(size_limit));
    if (t.rank() > 31) throw Error(Errc::UnsupportedType, "rank too large");
    std::shared_ptr<WeylGroup> g(new WeylGroup(t));
    g->enumerate(size_limit);
    return g;
}

void WeylGroup::enumerate(uint64_t size_limit) {
    const int n = rank_;
    const size_t nn = static_cast<size_t>(n) * n;
    auto key = [&](const int8_t* m) { return std::string(reinterpret_cast<const char*>(m), nn); };

    std::unordered_map<std::string, uint32_t> index;
    std::vector<int8_t> id(nn, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;
    matrices_ = id;
    length_.push_back(0);
    index.emplace(key(id.data()), 0);
    lmul_.assign(n, {});

    std::vector<int8_t> m(nn);
    for (uint32_t w = 0; w < length_.size(); ++w) {
        for (int s = 0; s < n; ++s) {
            // Left multiplication by s_s changes row s only:
            // row_s' = row_s - sum_k a_{s,k} row_k
            const int8_t* src = &matrices_[w * nn];
            std::copy(src, src + nn, m.begin());
            for (int c = 0; c < n; ++c) {
                int v = src[s * n + c];
                for (int k = 0; k < n; ++k) v -= cartan_[s][k] * src[k * n + c];
                m[s * n + c] = static_cast<int8_t>(v);
            }
            auto [it, fresh] = index.try_emplace(key(m.data()), static_cast<uint32_t>(length_.size()));
            if (fresh) {
                if (length_.size() >= size_limit) throw Error(Errc::SizeLimitExceeded, "enumeration exceeded limit");
                matrices_.insert(matrices_.end(), m.begin(), m.end());
                length_.push_back(static_cast<uint8_t>(length_[w] + 1));
            }
            lmul_[s].push_back(it->second);
        }
    }
    ensure(length_.size() == type_.group_order(), "Weyl group order differs from product formula");

    const uint32_t N = size();
    rmul_.assign(n, std::vector<uint32_t>(N));
    for (uint32_t w = 0; w < N; ++w) {
        const int8_t* src = &matrices_[w * nn];
        for (int s = 0; s < n; ++s) {
            // (M S_s)[r][c] = M[r][c] - M[r][s] * a_{s,c}
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    m[r * n + c] = static_cast<int8_t>(src[r * n + c] - src[r * n + s] * cartan_[s][c]);
            auto it = index.find(key(m.data()));
            ensure(it != index.end(), "right multiplication left the group");
            rmul_[s][w] = it->second;
        }
    }
    ldesc_.assign(N, 0);
    rdesc_.assign(N, 0);
    for (uint32_t w = 0; w < N; ++w)
        for (int s = 0; s < n; ++s) {
            if (length_[lmul_[s][w]] < length_[w]) ldesc_[w] |= 1u << s;
            if (length_[rmul_[s][w]] < length_[w]) rdesc_[w] |= 1u << s;
            ensure(length_[lmul_[s][w]] + 1 == length_[w] || length_[lmul_[s][w]] == length_[w] + 1,
                   "length parity");
        }
    inverse_.assign(N, 0);
    for (uint32_t w = 0; w < N; ++w)
        for (int s = 0; s < n; ++s) {
            uint32_t sw = lmul_[s][w];
            if (length_[sw] > length_[w]) inverse_[sw] = rmul_[s][inverse_[w]];
        }
    longest_ = static_cast<uint32_t>(std::max_element(length_.begin(), length_.end()) - length_.begin());
}

std::vector<WeylElem> WeylGroup::elements() const {
    std::vector<WeylElem> out;
    out.reserve(size());
    for (uint32_t i = 0; i < size(); ++i) out.push_back(elem(i));
    return out;
}

std::vector<int> WeylGroup::matrix(uint32_t w) const {
    const size_t nn = static_cast<size_t>(rank_) * rank_;
    return std::vector<int>(matrices_.begin() + w * nn, matrices_.begin() + (w + 1) * nn);
}

void WeylGroup::check_same(const WeylElem& x) const {
    if (x.group() != this) throw Error(Errc::GroupMismatch, "element belongs to a different group");
}

WeylElem WeylGroup::mul(const WeylElem& x, const WeylElem& y) const {
    check_same(x);
    check_same(y);
    uint32_t r = x.index();
    for (int s : reduced_word(y.index())) r = rmul_[s][r];
    return elem(r);
}

WeylElem WeylGroup::inverse(const WeylElem& x) const {
    check_same(x);
    return elem(inverse_[x.index()]);
}

std::vector<int> WeylGroup::reduced_word(uint32_t w) const {
    std::vector<int> word;
    while (w != 0) {
        int s = __builtin_ctz(ldesc_[w]);
        word.push_back(s);
        w = lmul_[s][w];
    }
    return word;
}

std::string WeylGroup::word_str(uint32_t w) const { return word_to_string(reduced_word(w)); }

WeylElem WeylGroup::from_word(const std::vector<int>& word) const {
    uint32_t r = 0;
    for (int s : word) {
        if (s < 0 || s >= rank_) throw Error(Errc::ParseError, "simple reflection index out of range");
        r = rmul_[s][r];
    }
    return elem(r);
}

WeylElem WeylGroup::parse(std::string_view text) const {
    std::vector<int> word;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        if (cur == "e" || cur == "1_W") {
            cur.clear();
            return;
        }
        std::string digits = cur[0] == 's' ? cur.substr(1) : cur;
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
            throw Error(Errc::ParseError, "bad word '" + std::string(text) + "'");
        word.push_back(std::stoi(digits) - 1);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == '*' || c == '.' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else if (c == 's' && !cur.empty()) {
            flush();
            cur = "s";
        } else {
            cur += c;
        }
    }
    flush();
    return from_word(word);
}

bool WeylGroup::bruhat_leq(uint32_t x, uint32_t w) const {
    // Lifting property along a left descent s of w.
    while (true) {
        if (length_[x] > length_[w]) return false;
        if (w == 0) return x == 0;
        if (length_[x] == length_[w]) return x == w;
        int s = __builtin_ctz(ldesc_[w]);
        if (length_[lmul_[s][x]] < length_[x]) x = lmul_[s][x];
        w = lmul_[s][w];
    }
}

bool WeylGroup::bruhat_leq(const WeylElem& x, const WeylElem& w) const {
    check_same(x);
    check_same(w);
    return bruhat_leq(x.index(), w.index());
}

WeylElem WeylGroup::demazure_star(const WeylElem& x, const WeylElem& y) const {
    check_same(x);
    check_same(y);
    uint32_t r = y.index();
    auto word = reduced_word(x.index());
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure_left(*it, r);
    return elem(r);
}

std::vector<uint32_t> WeylGroup::parabolic_elements(ParabolicSubset I) const {
    std::vector<uint32_t> out{0};
    std::vector<char> seen(size(), 0);
    seen[0] = 1;
    for (size_t k = 0; k < out.size(); ++k)
        for (int s = 0; s < rank_; ++s)
            if (I.contains(s)) {
                uint32_t y = lmul_[s][out[k]];
                if (!seen[y]) {
                    seen[y] = 1;
                    out.push_back(y);
                }
            }
    return out;
}

uint32_t WeylGroup::parabolic_longest(ParabolicSubset I) const {
    auto els = parabolic_elements(I);
    return *std::max_element(els.begin(), els.end(), [&](uint32_t a, uint32_t b) { return length_[a] < length_[b]; });
}

LaurentPoly WeylGroup::poincare(ParabolicSubset I) const {
    LaurentPoly p(Var::q);
    for (uint32_t w : parabolic_elements(I)) p.add_term(length_[w], 1);
    return p;
}

uint32_t WeylGroup::coset_min(uint32_t w, ParabolicSubset I, ParabolicSubset J) const {
    while (true) {
        uint32_t l = ldesc_[w] & I.mask;
        if (l) {
            w = lmul_[__builtin_ctz(l)][w];
            continue;
        }
        uint32_t r = rdesc_[w] & J.mask;
        if (r) {
            w = rmul_[__builtin_ctz(r)][w];
            continue;
        }
        return w;
    }
}

DoubleCoset WeylGroup::coset_project(const WeylElem& w, ParabolicSubset I, ParabolicSubset J) const {
    check_same(w);
    return DoubleCoset{I, J, elem(coset_min(w.index(), I, J))};
}

std::shared_ptr<const DoubleCosetTable> WeylGroup::coset_table(ParabolicSubset I, ParabolicSubset J) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto key = std::make_pair(I.mask, J.mask);
    auto it = coset_cache_.find(key);
    if (it != coset_cache_.end()) return it->second;

    auto t = std::make_shared<DoubleCosetTable>();
    t->left = I;
    t->right = J;
    const uint32_t N = size();
    std::vector<uint32_t> mins(N);
    for (uint32_t w = 0; w < N; ++w) mins[w] = coset_min(w, I, J);
    std::vector<uint32_t> reps(mins);
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    std::stable_sort(reps.begin(), reps.end(), [&](uint32_t a, uint32_t b) { return length_[a] < length_[b]; });
    std::vector<uint32_t> pos(N, UINT32_MAX);
    for (uint32_t k = 0; k < reps.size(); ++k) pos[reps[k]] = k;
    t->minreps = reps;
    t->members.assign(reps.size(), {});
    t->coset_of.assign(N, 0);
    for (uint32_t w = 0; w < N; ++w) {
        t->coset_of[w] = pos[mins[w]];
        t->members[pos[mins[w]]].push_back(w);
    }
    t->maxreps.resize(reps.size());
    for (size_t k = 0; k < reps.size(); ++k)
        t->maxreps[k] = *std::max_element(t->members[k].begin(), t->members[k].end(),
                                          [&](uint32_t a, uint32_t b) { return length_[a] < length_[b]; });
    coset_cache_.emplace(key, t);
    return t;
}

std::vector<DoubleCoset> WeylGroup::double_cosets(ParabolicSubset I, ParabolicSubset J) const {
    auto t = coset_table(I, J);
    std::vector<DoubleCoset> out;
    for (uint32_t r : t->minreps) out.push_back(DoubleCoset{I, J, elem(r)});
    return out;
}

DiagramInvolution WeylGroup::diagram_involution(std::string_view name) const {
    DiagramInvolution th;
    th.name = std::string(name);
    th.perm.resize(rank_);
    if (name == "identity") {
        for (int i = 0; i < rank_; ++i) th.perm[i] = i;
    } else if (name == "switch" || name == "switch-on-square") {
        if (!type_.is_square())
            throw Error(Errc::InvalidInvolution, "switch needs a type of the form TxT, got " + type_.str());
        const int h = rank_ / 2;
        for (int i = 0; i < rank_; ++i) th.perm[i] = i < h ? i + h : i - h;
    } else if (name == "duality") {
        // w0 alpha_i = -alpha_{perm(i)}
        auto m = matrix(longest_);
        for (int i = 0; i < rank_; ++i) {
            int found = -1;
            for (int r = 0; r < rank_; ++r)
                if (m[r * rank_ + i] == -1) found = r;
            ensure(found >= 0, "longest element is not -1 times a diagram automorphism");
            th.perm[i] = found;
        }
    } else {
        throw Error(Errc::InvalidInvolution, "unknown involution '" + std::string(name) + "'");
    }
    for (int i = 0; i < rank_; ++i) {
        ensure(th.perm[th.perm[i]] == i, "diagram involution is not an involution");
        for (int j = 0; j < rank_; ++j)
            if (cartan_[i][j] != cartan_[th.perm[i]][th.perm[j]])
                throw Error(Errc::InvalidInvolution, "permutation does not preserve the Cartan matrix");
    }
    return th;
}

WeylElem WeylGroup::apply(const DiagramInvolution& theta, const WeylElem& w) const {
    check_same(w);
    uint32_t r = 0;
    for (int s : reduced_word(w.index())) r = rmul_[theta.perm[s]][r];
    return elem(r);
}

}  // namespace hecat
