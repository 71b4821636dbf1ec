#include "hecat/hecke/kl.hpp"

#include <sstream>

namespace hecat {

KLTable::KLTable(const HeckeAlgebra& alg) : alg_(alg) {}

void KLTable::build_r() const {
    std::call_once(r_once_, [this] {
        const WeylGroup& g = alg_.group();
        r_.assign(g.size(), {});
        for (uint32_t y = 0; y < g.size(); ++y) {
            // bar(H_y) = sum_x v^{-l(x)-l(y)} R_{x,y}(v^-2) H_x
            for (const auto& [x, c] : alg_.bar_T(y))
                r_[y].emplace_back(x, c.to_v().shifted(-g.length(x) - g.length(y)));
        }
    });
}

std::map<uint32_t, LaurentPoly> KLTable::solve(uint32_t w) const {
    build_r();
    const WeylGroup& g = alg_.group();
    const int lw = g.length(w);
    // pending[x] accumulates sum_{y > x} bar(h_y) r_{x,y}; it is complete
    // once every y of greater length has been settled.
    std::map<uint32_t, LaurentPoly> h;
    std::vector<std::vector<uint32_t>> by_len(lw + 1);
    for (uint32_t x = 0; x < g.size(); ++x)
        if (g.length(x) <= lw) by_len[g.length(x)].push_back(x);
    std::map<uint32_t, LaurentPoly> pending;
    auto push = [&](uint32_t y, const LaurentPoly& hy) {
        LaurentPoly hb = hy.bar();
        for (const auto& [x, r] : r_[y]) {
            if (x == y) continue;
            auto [it, fresh] = pending.try_emplace(x, Var::v);
            it->second += hb * r;
        }
    };
    h.emplace(w, LaurentPoly(Var::v, 1));
    push(w, h.at(w));
    for (int len = lw - 1; len >= 0; --len) {
        for (uint32_t x : by_len[len]) {
            auto it = pending.find(x);
            if (it == pending.end() || it->second.is_zero()) continue;
            const LaurentPoly& s = it->second;
            // h_x - bar(h_x) = s forces s to be antisymmetric with no constant term.
            ensure(s.coeff(0) == 0, "KL solve: nonzero constant term");
            ensure(s.bar() == -s, "KL solve: correction term not antisymmetric");
            ensure(g.bruhat_leq(x, w), "KL solve: support outside the Bruhat interval");
            LaurentPoly hx = s.positive_part();
            h.emplace(x, hx);
            push(x, hx);
        }
    }
    std::map<uint32_t, LaurentPoly> col;
    for (uint32_t x = 0; x < g.size(); ++x) {
        if (!g.bruhat_leq(x, w)) continue;
        auto it = h.find(x);
        // x <= w always has P_{x,w}(0) = 1, so h_x is never zero there.
        ensure(it != h.end(), "KL solve: missing entry inside the Bruhat interval");
        col.emplace(x, it->second.shifted(g.length(x) - lw).to_q());
    }
    return col;
}

const std::map<uint32_t, LaurentPoly>& KLTable::column(uint32_t w) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = columns_.find(w);
        if (it != columns_.end()) return it->second;
    }
    auto col = solve(w);
    std::lock_guard<std::mutex> lock(mutex_);
    return columns_.emplace(w, std::move(col)).first->second;
}

LaurentPoly KLTable::kl_poly(const WeylElem& x, const WeylElem& w) const {
    const WeylGroup& g = alg_.group();
    g.check_same(x);
    g.check_same(w);
    if (!g.bruhat_leq(x.index(), w.index()))
        throw Error(Errc::NotComparable, x.str() + " is not below " + w.str() + " in the Bruhat order");
    return column(w.index()).at(x.index());
}

HeckeElem KLTable::kl_basis(const WeylElem& w) const {
    alg_.group().check_same(w);
    HeckeElem r = alg_.zero(Var::v);
    const int lw = w.length();
    for (const auto& [x, p] : column(w.index())) r.add(x, p.to_v().shifted(lw));
    return r;
}

std::string KLTable::csv_column(uint32_t w) const {
    const WeylGroup& g = alg_.group();
    std::ostringstream os;
    for (const auto& [x, p] : column(w)) os << g.word_str(x) << ',' << g.word_str(w) << ',' << p.str() << '\n';
    return os.str();
}

}  // namespace hecat
